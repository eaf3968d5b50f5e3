#include "hlrook/chromatic.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>

using namespace hlrook;

namespace {

QLaurent poly(std::initializer_list<long> coeffs) {
    std::vector<BigInt> c;
    for (long v : coeffs) {
        c.emplace_back(v);
    }
    return QLaurent::from_coeffs(0, std::move(c));
}

}  // namespace

TEST_CASE("small chromatic functions") {
    const SymFunc x = chromatic_qsym(DyckPath::parse("2,2"));
    CHECK(x.basis() == Basis::monomial);
    CHECK(x.coeff(Partition({1, 1})) == poly({1, 1}));
    CHECK(x.coeff(Partition({2})).is_zero());
    CHECK(chromatic_qsym(DyckPath::parse("1")) == SymFunc::basis_element(Basis::monomial, Partition({1})));
    CHECK(chromatic_qsym(DyckPath::parse("2,3,3")).coeff(Partition({2, 1})) == QLaurent::q());
}

TEST_CASE("composition coefficients") {
    const DyckPath path = DyckPath::parse("2,3,3");
    const std::vector<int> a{1, 2};
    const std::vector<int> b{2, 1};
    CHECK(chromatic_coefficient(path, a) == chromatic_coefficient(path, b));
    const std::vector<int> all{3};
    CHECK(chromatic_coefficient(path, all).is_zero());
    const std::vector<int> ones{1, 1, 1, 1};
    CHECK(chromatic_coefficient(DyckPath::edgeless(4), ones) == QLaurent(24));
    const std::vector<int> wrong{1, 1};
    CHECK_THROWS_AS(chromatic_coefficient(path, wrong), std::invalid_argument);
    const std::vector<int> negative{4, -1};
    CHECK_THROWS_AS(chromatic_coefficient(path, negative), std::invalid_argument);
}

TEST_CASE("small LLT polynomials") {
    const SymFunc llt = llt_poly(DyckPath::parse("2,2"));
    CHECK(llt.coeff(Partition({1, 1})) == poly({1, 1}));
    CHECK(llt.coeff(Partition({2})) == QLaurent(1));
    CHECK(llt_poly(DyckPath::parse("1")) == SymFunc::basis_element(Basis::monomial, Partition({1})));
}

TEST_CASE("principal specialization examples") {
    const DyckPath two = DyckPath::parse("2,2");
    const auto ps = principal_specialization(two, 2);
    CHECK(ps.direct == poly({0, 1, 1}));
    CHECK(ps.product == poly({0, 1, 1}));
    CHECK(principal_specialization(two, 0).direct.is_zero());
    CHECK(principal_specialization(two, 0).product.is_zero());
    for (int n = 1; n <= 5; ++n) {
        QLaurent expected = QLaurent::monomial(n * (n - 1) / 2);
        for (int i = 1; i <= n; ++i) {
            expected *= q_int(n - i + 1);
        }
        const auto k = principal_specialization(DyckPath::complete(n), n);
        CHECK(k.direct == expected);
        CHECK(k.product == expected);
    }
    CHECK(principal_specialization(DyckPath(), 3).direct == QLaurent(1));
}

TEST_CASE("property: X and LLT match brute force over all maps") {
    for (int n = 0; n <= 5; ++n) {
        for (const DyckPath& path : dyck_paths(n)) {
            for (bool llt : {false, true}) {
                const SymFunc f = llt ? llt_poly(path) : chromatic_qsym(path);
                const auto brute = oracle::coloring_expansion(path, llt);
                for (const Partition& alpha : partitions_of(n)) {
                    const auto it = brute.find(alpha);
                    CHECK(f.coeff(alpha) == (it == brute.end() ? QLaurent{} : it->second));
                }
            }
        }
    }
}

TEST_CASE("property: principal specialization matches brute force over all maps") {
    for (int n = 0; n <= 5; ++n) {
        for (const DyckPath& path : dyck_paths(n)) {
            for (int alpha = 0; alpha <= n + 1; ++alpha) {
                QLaurent brute;
                oracle::for_each_map(n, alpha, [&](const std::vector<int>& k) {
                    int weight = 0;
                    for (int i = 1; i <= n; ++i) {
                        weight += k[static_cast<std::size_t>(i - 1)] - 1;
                        for (int j = i + 1; j <= path.height(i); ++j) {
                            const int ki = k[static_cast<std::size_t>(i - 1)];
                            const int kj = k[static_cast<std::size_t>(j - 1)];
                            if (ki == kj) {
                                return;
                            }
                            weight += ki < kj ? 1 : 0;
                        }
                    }
                    brute += QLaurent::monomial(weight);
                });
                CHECK(principal_specialization(path, alpha).direct == brute);
            }
        }
    }
}

TEST_CASE("property: symmetry across compositions") {
    for (int n = 1; n <= 5; ++n) {
        for (const DyckPath& path : dyck_paths(n)) {
            const SymFunc x = chromatic_qsym(path);
            const SymFunc l = llt_poly(path);
            for (const Partition& alpha : partitions_of(n)) {
                std::vector<int> comp = alpha.parts();
                comp.resize(static_cast<std::size_t>(n), 0);
                std::sort(comp.begin(), comp.end());
                do {
                    CHECK(chromatic_coefficient(path, comp) == x.coeff(alpha));
                    CHECK(llt_coefficient(path, comp) == l.coeff(alpha));
                } while (std::next_permutation(comp.begin(), comp.end()));
            }
        }
    }
}

TEST_CASE("property: palindromicity, degree and LLT at q = 1") {
    for (int n = 0; n <= 6; ++n) {
        for (const DyckPath& path : dyck_paths(n)) {
            const SymFunc x = chromatic_qsym(path);
            CHECK(QLaurent::monomial(path.area()) * x.invert_q() == x);
            int lo = 1 << 20;
            int hi = -1;
            for (const auto& [alpha, c] : x.terms()) {
                lo = std::min(lo, c.min_exp());
                hi = std::max(hi, c.max_exp());
            }
            CHECK(lo == 0);
            CHECK(hi == path.area());

            const SymFunc l = llt_poly(path);
            for (const Partition& alpha : partitions_of(n)) {
                BigInt multinomial = 1;
                int placed = 0;
                for (int part : alpha.parts()) {
                    for (int t = 1; t <= part; ++t) {
                        ++placed;
                        multinomial = multinomial * placed / t;
                    }
                }
                CHECK(l.coeff(alpha).at_one() == multinomial);
            }
        }
    }
}

TEST_CASE("property: Schur coefficients of X have nonnegative integer coefficients") {
    for (int n = 0; n <= 6; ++n) {
        for (const DyckPath& path : dyck_paths(n)) {
            const SymFunc s = to_schur(chromatic_qsym(path));
            for (const auto& [lambda, c] : s.terms()) {
                CHECK(c.is_polynomial());
                CHECK(c.has_nonnegative_coeffs());
            }
        }
    }
}
