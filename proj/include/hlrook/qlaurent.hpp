#pragma once

// Exact Laurent polynomials in a single parameter q with arbitrary-precision
// integer coefficients, plus the usual q-numbers built from them.

#include <gmpxx.h>

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace hlrook {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Dense Laurent polynomial sum_i coeffs[i] * q^(min_exp + i).
///
/// Canonical form: a nonzero value has nonzero first and last coefficients;
/// zero is stored as an empty coefficient vector with min_exp = 0. Every
/// public operation returns a canonical value, so operator== is plain
/// coefficient-wise comparison.
class QLaurent {
public:
    QLaurent() = default;
    QLaurent(long constant);  // NOLINT(google-explicit-constructor)
    explicit QLaurent(const BigInt& constant);

    static QLaurent monomial(int exponent, BigInt coefficient = 1);
    static QLaurent from_coeffs(int min_exp, std::vector<BigInt> coeffs);
    static QLaurent q() { return monomial(1); }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    int min_exp() const noexcept { return min_exp_; }
    /// Highest exponent present; min_exp() - 1 for the zero polynomial.
    int max_exp() const noexcept { return min_exp_ + static_cast<int>(coeffs_.size()) - 1; }
    std::span<const BigInt> coeffs() const noexcept { return coeffs_; }
    BigInt coeff(int exponent) const;

    /// True for zero and for anything without negative powers of q.
    bool is_polynomial() const noexcept { return is_zero() || min_exp_ >= 0; }
    /// True iff every coefficient is >= 0.
    bool has_nonnegative_coeffs() const;

    QLaurent& operator+=(const QLaurent& rhs);
    QLaurent& operator-=(const QLaurent& rhs);
    QLaurent& operator*=(const QLaurent& rhs);

    friend QLaurent operator+(QLaurent lhs, const QLaurent& rhs) { return lhs += rhs; }
    friend QLaurent operator-(QLaurent lhs, const QLaurent& rhs) { return lhs -= rhs; }
    friend QLaurent operator*(const QLaurent& lhs, const QLaurent& rhs);
    friend QLaurent operator-(QLaurent value);
    friend bool operator==(const QLaurent& lhs, const QLaurent& rhs);

    /// Multiplication by q^k.
    QLaurent shifted(int k) const;
    /// The substitution q -> q^{-1}.
    QLaurent invert_q() const;
    QLaurent pow(unsigned exponent) const;

    BigInt at_one() const;
    /// Exact evaluation at a rational point; throws std::domain_error for
    /// q = 0 when negative powers are present.
    Rational evaluate(const Rational& q_value) const;

    /// Exact quotient. Throws std::domain_error when the division leaves a
    /// remainder or the divisor is zero.
    QLaurent exact_div(const QLaurent& divisor) const;

    /// Human form, ascending powers: "q^-1 + 2 + q^3".
    std::string to_string() const;

private:
    void normalize();

    int min_exp_ = 0;
    std::vector<BigInt> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const QLaurent& value);

/// [n]_q = 1 + q + ... + q^{n-1}; [0]_q = 0.
QLaurent q_int(int n);
/// [n]_q! = [1]_q [2]_q ... [n]_q.
QLaurent q_factorial(int n);
/// Gaussian binomial by exact division of q-factorials.
QLaurent q_binomial(int n, int k);
/// [alpha]_q [alpha-1]_q ... [alpha-k+1]_q; zero once the factor [0]_q appears.
QLaurent q_falling(int alpha, int k);

}  // namespace hlrook
