#include "hlrook/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace hlrook {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) {
            throw std::invalid_argument("partition part " + std::to_string(i + 1) + " is not positive");
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw std::invalid_argument("partition parts are not weakly decreasing at position " +
                                        std::to_string(i + 1));
        }
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
    std::erase(parts, 0);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

Partition Partition::column(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

Partition Partition::parse(std::string_view text) {
    if (text == "-") {
        return {};
    }
    std::vector<int> parts;
    while (true) {
        const auto comma = text.find(',');
        const std::string_view token = text.substr(0, comma);
        int value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
            throw std::invalid_argument("malformed partition '" + std::string(text) + "'");
        }
        parts.push_back(value);
        if (comma == std::string_view::npos) {
            break;
        }
        text.remove_prefix(comma + 1);
    }
    return Partition(std::move(parts));
}

int Partition::part(int i) const noexcept {
    if (i < 1 || i > length()) {
        return 0;
    }
    return parts_[static_cast<std::size_t>(i - 1)];
}

Partition Partition::conjugate() const {
    std::vector<int> conj(parts_.empty() ? 0 : static_cast<std::size_t>(parts_.front()), 0);
    for (int p : parts_) {
        for (int c = 0; c < p; ++c) {
            ++conj[static_cast<std::size_t>(c)];
        }
    }
    return Partition(std::move(conj));
}

int Partition::n_stat() const noexcept {
    int total = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        total += static_cast<int>(i) * parts_[i];
    }
    return total;
}

int Partition::multiplicity(int i) const noexcept {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

std::map<int, int> Partition::multiplicities() const {
    std::map<int, int> out;
    for (int p : parts_) {
        ++out[p];
    }
    return out;
}

std::string Partition::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

std::string Partition::to_text() const {
    if (parts_.empty()) {
        return "-";
    }
    const std::string s = to_string();
    return s.substr(1, s.size() - 2);
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

namespace {

void generate(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        prefix.push_back(p);
        generate(remaining - p, p, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) {
        throw std::domain_error("partitions_of: negative size");
    }
    std::vector<Partition> out;
    std::vector<int> prefix;
    generate(n, n, prefix, out);
    return out;
}

bool dominance_leq(const Partition& mu, const Partition& lambda) {
    if (mu.size() != lambda.size()) {
        throw std::domain_error("dominance_leq: partitions " + mu.to_string() + " and " +
                                lambda.to_string() + " have different sizes");
    }
    int sum_mu = 0;
    int sum_lambda = 0;
    const int len = std::max(mu.length(), lambda.length());
    for (int i = 1; i <= len; ++i) {
        sum_mu += mu.part(i);
        sum_lambda += lambda.part(i);
        if (sum_mu > sum_lambda) {
            return false;
        }
    }
    return true;
}

bool is_vertical_strip(const Partition& nu, const Partition& mu) {
    const int len = std::max(nu.length(), mu.length());
    for (int i = 1; i <= len; ++i) {
        const int diff = nu.part(i) - mu.part(i);
        if (diff < 0 || diff > 1) {
            return false;
        }
    }
    return true;
}

}  // namespace hlrook
