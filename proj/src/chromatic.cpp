#include "hlrook/chromatic.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace hlrook {

namespace {

enum class Statistic { asc_proper, inv_all };

// Histogram of the statistic over words with the given content, filled one
// vertex at a time.
QLaurent content_sum(const DyckPath& path, std::span<const int> composition, Statistic stat) {
    const int n = path.size();
    int total = 0;
    for (int c : composition) {
        if (c < 0) {
            throw std::invalid_argument("composition has a negative part");
        }
        total += c;
    }
    if (total != n) {
        throw std::invalid_argument("composition sums to " + std::to_string(total) + ", expected " +
                                    std::to_string(n));
    }

    std::vector<int> remaining(composition.begin(), composition.end());
    const int colors = static_cast<int>(remaining.size());
    std::vector<int> word(static_cast<std::size_t>(n + 1), 0);
    std::vector<unsigned long long> hist;

    std::function<void(int, int)> place = [&](int v, int weight) {
        if (v > n) {
            if (weight >= static_cast<int>(hist.size())) {
                hist.resize(static_cast<std::size_t>(weight) + 1, 0);
            }
            ++hist[static_cast<std::size_t>(weight)];
            return;
        }
        for (int c = 1; c <= colors; ++c) {
            auto& left = remaining[static_cast<std::size_t>(c - 1)];
            if (left == 0) {
                continue;
            }
            int gain = 0;
            bool ok = true;
            for (int u = 1; u < v; ++u) {
                if (!path.adjacent(u, v)) {
                    continue;
                }
                const int cu = word[static_cast<std::size_t>(u)];
                if (stat == Statistic::asc_proper) {
                    if (cu == c) {
                        ok = false;
                        break;
                    }
                    gain += cu < c ? 1 : 0;
                } else {
                    gain += cu > c ? 1 : 0;
                }
            }
            if (!ok) {
                continue;
            }
            --left;
            word[static_cast<std::size_t>(v)] = c;
            place(v + 1, weight + gain);
            ++left;
        }
        word[static_cast<std::size_t>(v)] = 0;
    };
    place(1, 0);

    std::vector<BigInt> coeffs;
    coeffs.reserve(hist.size());
    for (unsigned long long h : hist) {
        coeffs.emplace_back(static_cast<unsigned long>(h));
    }
    return QLaurent::from_coeffs(0, std::move(coeffs));
}

SymFunc by_partition(const DyckPath& path, Statistic stat) {
    const int n = path.size();
    SymFunc out(n, Basis::monomial);
    for (const Partition& alpha : partitions_of(n)) {
        out.add(alpha, content_sum(path, alpha.parts(), stat));
    }
    return out;
}

}  // namespace

SymFunc chromatic_qsym(const DyckPath& path) { return by_partition(path, Statistic::asc_proper); }

QLaurent chromatic_coefficient(const DyckPath& path, std::span<const int> composition) {
    return content_sum(path, composition, Statistic::asc_proper);
}

SymFunc llt_poly(const DyckPath& path) { return by_partition(path, Statistic::inv_all); }

QLaurent llt_coefficient(const DyckPath& path, std::span<const int> composition) {
    return content_sum(path, composition, Statistic::inv_all);
}

PrincipalSpecialization principal_specialization(const DyckPath& path, int alpha) {
    if (alpha < 0) {
        throw std::invalid_argument("principal_specialization: negative alpha");
    }
    const int n = path.size();
    PrincipalSpecialization out;

    std::vector<int> kappa(static_cast<std::size_t>(n + 1), 0);
    std::vector<unsigned long long> hist;
    std::function<void(int, int)> place = [&](int v, int weight) {
        if (v > n) {
            if (weight >= static_cast<int>(hist.size())) {
                hist.resize(static_cast<std::size_t>(weight) + 1, 0);
            }
            ++hist[static_cast<std::size_t>(weight)];
            return;
        }
        for (int c = 1; c <= alpha; ++c) {
            int asc = 0;
            bool ok = true;
            for (int u = 1; u < v && ok; ++u) {
                if (path.adjacent(u, v)) {
                    const int cu = kappa[static_cast<std::size_t>(u)];
                    ok = cu != c;
                    asc += cu < c ? 1 : 0;
                }
            }
            if (!ok) {
                continue;
            }
            kappa[static_cast<std::size_t>(v)] = c;
            place(v + 1, weight + asc + c - 1);
        }
        kappa[static_cast<std::size_t>(v)] = 0;
    };
    place(1, 0);
    std::vector<BigInt> coeffs;
    for (unsigned long long h : hist) {
        coeffs.emplace_back(static_cast<unsigned long>(h));
    }
    out.direct = QLaurent::from_coeffs(0, std::move(coeffs));

    QLaurent product = QLaurent::monomial(path.area());
    for (int a : path.row_counts()) {
        if (alpha - a <= 0) {
            product = QLaurent{};
            break;
        }
        product *= q_int(alpha - a);
    }
    out.product = product;
    return out;
}

}  // namespace hlrook
