#include "hlrook/dyck.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <ostream>

namespace hlrook {

DyckPath DyckPath::from_heights(std::vector<int> heights) {
    const int n = static_cast<int>(heights.size());
    for (int i = 1; i <= n; ++i) {
        const int m = heights[static_cast<std::size_t>(i - 1)];
        if (i > 1 && m < heights[static_cast<std::size_t>(i - 2)]) {
            throw DyckError("heights decrease at index " + std::to_string(i) + " (m_" + std::to_string(i) +
                            " = " + std::to_string(m) + ")");
        }
        if (m < i) {
            throw DyckError("height m_" + std::to_string(i) + " = " + std::to_string(m) + " is below " +
                            std::to_string(i));
        }
        if (m > n) {
            throw DyckError("height m_" + std::to_string(i) + " = " + std::to_string(m) + " exceeds n = " +
                            std::to_string(n));
        }
    }
    return DyckPath(std::move(heights));
}

DyckPath DyckPath::parse(std::string_view text) {
    if (text == "-") {
        return {};
    }
    std::vector<int> heights;
    while (true) {
        const auto comma = text.find(',');
        const std::string_view token = text.substr(0, comma);
        int value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
            throw DyckError("malformed height list '" + std::string(text) + "'");
        }
        heights.push_back(value);
        if (comma == std::string_view::npos) {
            break;
        }
        text.remove_prefix(comma + 1);
    }
    return from_heights(std::move(heights));
}

DyckPath DyckPath::complete(int k) { return DyckPath(std::vector<int>(static_cast<std::size_t>(k), k)); }

DyckPath DyckPath::edgeless(int n) {
    std::vector<int> h(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        h[static_cast<std::size_t>(i)] = i + 1;
    }
    return DyckPath(std::move(h));
}

std::vector<int> DyckPath::row_counts() const {
    const int n = size();
    std::vector<int> rows(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= n; ++i) {
        for (int c = 1; c < i; ++c) {
            if (height(c) >= i) {
                ++rows[static_cast<std::size_t>(i - 1)];
            }
        }
    }
    return rows;
}

int DyckPath::area() const {
    int total = 0;
    for (int i = 1; i <= size(); ++i) {
        total += height(i) - i;
    }
    return total;
}

std::vector<Edge> DyckPath::edges() const {
    std::vector<Edge> out;
    for (int i = 1; i <= size(); ++i) {
        for (int j = i + 1; j <= height(i); ++j) {
            out.push_back({i, j});
        }
    }
    return out;
}

std::vector<Cell> DyckPath::board() const {
    std::vector<Cell> out;
    for (int i = 1; i <= size(); ++i) {
        for (int j = height(i) + 1; j <= size(); ++j) {
            out.push_back({i, j});
        }
    }
    return out;
}

std::string DyckPath::to_text() const {
    if (heights_.empty()) {
        return "-";
    }
    std::string out;
    for (std::size_t i = 0; i < heights_.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += std::to_string(heights_[i]);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const DyckPath& path) { return os << path.to_text(); }

DyckPath concat(const DyckPath& first, const DyckPath& second) {
    std::vector<int> h = first.heights();
    for (int m : second.heights()) {
        h.push_back(first.size() + m);
    }
    return DyckPath::from_heights(std::move(h));
}

namespace {

void extend(int n, std::vector<int>& prefix, std::vector<DyckPath>& out) {
    const int i = static_cast<int>(prefix.size()) + 1;
    if (i > n) {
        out.push_back(DyckPath::from_heights(prefix));
        return;
    }
    const int lo = std::max(i, prefix.empty() ? 1 : prefix.back());
    for (int m = lo; m <= n; ++m) {
        prefix.push_back(m);
        extend(n, prefix, out);
        prefix.pop_back();
    }
}

std::optional<DyckPath> try_path(std::vector<int> heights) {
    try {
        return DyckPath::from_heights(std::move(heights));
    } catch (const DyckError&) {
        return std::nullopt;
    }
}

}  // namespace

std::vector<DyckPath> dyck_paths(int n) {
    if (n < 0) {
        throw std::domain_error("dyck_paths: negative size");
    }
    std::vector<DyckPath> out;
    std::vector<int> prefix;
    extend(n, prefix, out);
    return out;
}

bool is_modular_triple(const DyckPath& lower, const DyckPath& middle, const DyckPath& upper, int kind,
                       int position) {
    const int n = middle.size();
    const int i = position;
    if (lower.size() != n || upper.size() != n || i < 1 || i > n - 1) {
        return false;
    }
    const auto g0 = [&](int c) { return lower.height(c); };
    const auto g1 = [&](int c) { return middle.height(c); };
    const auto g2 = [&](int c) { return upper.height(c); };

    if (kind == 1) {
        if (!(g0(i) + 1 == g1(i) && g1(i) == g2(i) - 1)) {
            return false;
        }
        if (!(g1(i - 1) < g1(i) && g1(i) < g1(i + 1))) {
            return false;
        }
        for (int c = 1; c <= n; ++c) {
            if (c != i && !(g0(c) == g1(c) && g1(c) == g2(c))) {
                return false;
            }
        }
        const int h = g1(i);
        if (h + 1 > n) {
            return false;
        }
        return g1(h) == g1(h + 1);
    }
    if (kind == 2) {
        if (g1(i) + 1 != g1(i + 1)) {
            return false;
        }
        if (!(g0(i) == g1(i) && g1(i) == g2(i) - 1)) {
            return false;
        }
        if (!(g0(i + 1) + 1 == g1(i + 1) && g1(i + 1) == g2(i + 1))) {
            return false;
        }
        for (int c = 1; c <= n; ++c) {
            if (c != i && c != i + 1 && !(g0(c) == g1(c) && g1(c) == g2(c))) {
                return false;
            }
        }
        for (int c = 1; c <= n; ++c) {
            if (g1(c) == i) {
                return false;
            }
        }
        return true;
    }
    return false;
}

std::vector<ModularTriple> modular_triples(int n) {
    std::vector<ModularTriple> out;
    if (n < 1) {
        return out;
    }
    for (const DyckPath& middle : dyck_paths(n)) {
        for (int kind = 1; kind <= 2; ++kind) {
            for (int i = 1; i <= n - 1; ++i) {
                std::vector<int> lo = middle.heights();
                std::vector<int> hi = middle.heights();
                const auto idx = static_cast<std::size_t>(i - 1);
                if (kind == 1) {
                    lo[idx] -= 1;
                    hi[idx] += 1;
                } else {
                    hi[idx] += 1;
                    lo[idx + 1] -= 1;
                }
                auto lower = try_path(std::move(lo));
                auto upper = try_path(std::move(hi));
                if (!lower || !upper) {
                    continue;
                }
                if (is_modular_triple(*lower, middle, *upper, kind, i)) {
                    out.push_back({*lower, middle, *upper, kind, i});
                }
            }
        }
    }
    return out;
}

}  // namespace hlrook
