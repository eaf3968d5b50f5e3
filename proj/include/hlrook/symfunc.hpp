#pragma once

// Homogeneous symmetric functions with Laurent-polynomial coefficients in the
// monomial, Schur and Hall-Littlewood P bases.
//
// Hall-Littlewood P functions are never represented symbolically. They exist
// only through the Kostka-Foulkes matrix, s_lambda = sum_mu K_{lambda mu}(q)
// P_mu, and its exact unitriangular inverse.

#include "hlrook/partition.hpp"
#include "hlrook/qlaurent.hpp"

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hlrook {

enum class Basis { monomial, schur, hall_littlewood_p };

/// "monomial", "schur" or "hl_p".
std::string_view basis_name(Basis basis);
Basis parse_basis(std::string_view name);

class SymFunc {
public:
    using Terms = std::map<Partition, QLaurent, RevLex>;

    SymFunc(int degree, Basis basis);
    static SymFunc basis_element(Basis basis, const Partition& lambda, const QLaurent& coeff = 1);

    int degree() const noexcept { return degree_; }
    Basis basis() const noexcept { return basis_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    QLaurent coeff(const Partition& lambda) const;
    /// Adds c to the coefficient of lambda; |lambda| must equal the degree.
    void add(const Partition& lambda, const QLaurent& c);

    SymFunc& operator+=(const SymFunc& rhs);
    SymFunc& operator-=(const SymFunc& rhs);
    SymFunc& operator*=(const QLaurent& scalar);

    friend SymFunc operator+(SymFunc lhs, const SymFunc& rhs) { return lhs += rhs; }
    friend SymFunc operator-(SymFunc lhs, const SymFunc& rhs) { return lhs -= rhs; }
    friend SymFunc operator*(const QLaurent& scalar, SymFunc f) { return f *= scalar; }
    friend bool operator==(const SymFunc&, const SymFunc&) = default;

    /// Coefficientwise q -> q^{-1}.
    SymFunc invert_q() const;

private:
    void require_compatible(const SymFunc& rhs) const;

    int degree_;
    Basis basis_;
    Terms terms_;
};

/// Semistandard tableau in English notation: rows top to bottom.
struct Tableau {
    std::vector<std::vector<int>> rows;

    Partition shape() const;
    /// Entry counts (wt_1, wt_2, ...) up to the largest entry.
    std::vector<int> weight() const;
    bool is_semistandard() const;
    /// Rows read left to right, starting with the bottom row.
    std::vector<int> reading_word() const;
};

/// SSYT of shape lambda and weight mu. Throws std::domain_error if sizes differ.
std::vector<Tableau> ssyt(const Partition& lambda, const Partition& mu);
BigInt kostka_number(const Partition& lambda, const Partition& mu);

/// Lascoux-Schutzenberger charge of a word whose content is a partition.
///
/// Standard subwords are peeled off by scanning leftward, cyclically, from
/// the right end for 1, 2, 3, ...; the 1 gets index 0 and each next letter
/// gets the previous index plus one when the scan wrapped around to find it,
/// the same index otherwise. Throws std::domain_error if the content is not
/// a partition.
int charge(std::span<const int> word);

/// K_{lambda mu}(q) = sum over T in SSYT(lambda, mu) of q^{charge(T)}.
QLaurent kf_poly(const Partition& lambda, const Partition& mu);

/// Per-degree change-of-basis data, built once and shared read-only.
///
/// Rows and columns follow partitions_of(n), a linear extension of dominance
/// with (n) first, so every matrix here is upper unitriangular.
class TransitionCache {
public:
    /// Thread-safe; the first call for a degree builds the tables.
    static const TransitionCache& for_degree(int n);

    int degree() const noexcept { return degree_; }
    const std::vector<Partition>& partitions() const noexcept { return partitions_; }
    std::size_t index_of(const Partition& lambda) const;

    const BigInt& kostka(std::size_t lambda, std::size_t mu) const { return kostka_[lambda][mu]; }
    const BigInt& kostka_inverse(std::size_t lambda, std::size_t mu) const { return kostka_inv_[lambda][mu]; }
    const QLaurent& kf(std::size_t lambda, std::size_t mu) const { return kf_[lambda][mu]; }
    const QLaurent& kf_inverse(std::size_t lambda, std::size_t mu) const { return kf_inv_[lambda][mu]; }

    explicit TransitionCache(int n);

private:
    int degree_;
    std::vector<Partition> partitions_;
    std::map<Partition, std::size_t> index_;
    std::vector<std::vector<BigInt>> kostka_;
    std::vector<std::vector<BigInt>> kostka_inv_;
    std::vector<std::vector<QLaurent>> kf_;
    std::vector<std::vector<QLaurent>> kf_inv_;
};

SymFunc to_schur(const SymFunc& f);     // monomial -> schur
SymFunc to_monomial(const SymFunc& f);  // schur -> monomial
SymFunc schur_to_hlp(const SymFunc& f);
SymFunc hlp_to_schur(const SymFunc& f);
/// Any basis to any basis, routed through Schur.
SymFunc convert(const SymFunc& f, Basis target);

/// omega on a Schur-basis function: s_lambda -> s_lambda'.
SymFunc omega_schur(const SymFunc& f);

/// H_mu = sum_lambda K_{lambda mu}(q) s_lambda, or with `transformed` the
/// function with coefficients q^{n(mu)} K_{lambda mu}(q^{-1}).
SymFunc modified_hl(const Partition& mu, bool transformed);

/// Product in the monomial basis, computed by expanding both factors as
/// explicit polynomials in deg f + deg g variables.
SymFunc multiply(const SymFunc& f, const SymFunc& g);

/// Value of f at x = xs, q = q0, exact.
Rational evaluate(const SymFunc& f, std::span<const Rational> xs, const Rational& q0);

/// P_mu(x_1..x_k; q0) straight from the symmetrization formula over S_k,
/// normalized by prod_{i >= 0} [m_i(mu)]_{q0}! with m_0 = k - l(mu).
/// Throws std::domain_error on repeated points or k < l(mu).
Rational hl_direct_oracle(const Partition& mu, std::span<const Rational> xs, const Rational& q0);

}  // namespace hlrook
