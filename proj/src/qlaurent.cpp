#include "hlrook/qlaurent.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hlrook {

QLaurent::QLaurent(long constant) : coeffs_{BigInt(constant)} { normalize(); }

QLaurent::QLaurent(const BigInt& constant) : coeffs_{constant} { normalize(); }

QLaurent QLaurent::monomial(int exponent, BigInt coefficient) {
    QLaurent result;
    result.min_exp_ = exponent;
    result.coeffs_.push_back(std::move(coefficient));
    result.normalize();
    return result;
}

QLaurent QLaurent::from_coeffs(int min_exp, std::vector<BigInt> coeffs) {
    QLaurent result;
    result.min_exp_ = min_exp;
    result.coeffs_ = std::move(coeffs);
    result.normalize();
    return result;
}

void QLaurent::normalize() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) {
        coeffs_.pop_back();
    }
    auto first = std::find_if(coeffs_.begin(), coeffs_.end(),
                              [](const BigInt& c) { return sgn(c) != 0; });
    if (first == coeffs_.end()) {
        coeffs_.clear();
        min_exp_ = 0;
        return;
    }
    min_exp_ += static_cast<int>(first - coeffs_.begin());
    coeffs_.erase(coeffs_.begin(), first);
}

BigInt QLaurent::coeff(int exponent) const {
    if (is_zero() || exponent < min_exp_ || exponent > max_exp()) {
        return 0;
    }
    return coeffs_[static_cast<std::size_t>(exponent - min_exp_)];
}

bool QLaurent::has_nonnegative_coeffs() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return sgn(c) >= 0; });
}

QLaurent& QLaurent::operator+=(const QLaurent& rhs) {
    if (rhs.is_zero()) {
        return *this;
    }
    if (is_zero()) {
        return *this = rhs;
    }
    const int lo = std::min(min_exp_, rhs.min_exp_);
    const int hi = std::max(max_exp(), rhs.max_exp());
    std::vector<BigInt> out(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        out[i + static_cast<std::size_t>(min_exp_ - lo)] = coeffs_[i];
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        out[i + static_cast<std::size_t>(rhs.min_exp_ - lo)] += rhs.coeffs_[i];
    }
    min_exp_ = lo;
    coeffs_ = std::move(out);
    normalize();
    return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& rhs) { return *this += -rhs; }

QLaurent& QLaurent::operator*=(const QLaurent& rhs) { return *this = *this * rhs; }

QLaurent operator*(const QLaurent& lhs, const QLaurent& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) {
        return {};
    }
    std::vector<BigInt> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return QLaurent::from_coeffs(lhs.min_exp_ + rhs.min_exp_, std::move(out));
}

QLaurent operator-(QLaurent value) {
    for (auto& c : value.coeffs_) {
        c = -c;
    }
    return value;
}

bool operator==(const QLaurent& lhs, const QLaurent& rhs) {
    return lhs.min_exp_ == rhs.min_exp_ && lhs.coeffs_ == rhs.coeffs_;
}

QLaurent QLaurent::shifted(int k) const {
    if (is_zero()) {
        return {};
    }
    QLaurent result = *this;
    result.min_exp_ += k;
    return result;
}

QLaurent QLaurent::invert_q() const {
    if (is_zero()) {
        return {};
    }
    std::vector<BigInt> reversed(coeffs_.rbegin(), coeffs_.rend());
    return from_coeffs(-max_exp(), std::move(reversed));
}

QLaurent QLaurent::pow(unsigned exponent) const {
    QLaurent result = 1;
    QLaurent base = *this;
    while (exponent > 0) {
        if (exponent & 1U) {
            result *= base;
        }
        exponent >>= 1U;
        if (exponent > 0) {
            base *= base;
        }
    }
    return result;
}

BigInt QLaurent::at_one() const {
    BigInt sum = 0;
    for (const auto& c : coeffs_) {
        sum += c;
    }
    return sum;
}

Rational QLaurent::evaluate(const Rational& q_value) const {
    if (is_zero()) {
        return 0;
    }
    if (sgn(q_value) == 0) {
        if (min_exp_ < 0) {
            throw std::domain_error("QLaurent::evaluate: negative power of q at q = 0");
        }
        return min_exp_ == 0 ? Rational(coeffs_.front()) : Rational(0);
    }
    // Horner from the top, then scale by q^min_exp.
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * q_value + Rational(*it);
    }
    Rational scale = 1;
    const Rational step = min_exp_ >= 0 ? q_value : Rational(1) / q_value;
    for (int i = 0; i < std::abs(min_exp_); ++i) {
        scale *= step;
    }
    Rational out = acc * scale;
    out.canonicalize();
    return out;
}

QLaurent QLaurent::exact_div(const QLaurent& divisor) const {
    if (divisor.is_zero()) {
        throw std::domain_error("QLaurent::exact_div: division by zero");
    }
    if (is_zero()) {
        return {};
    }
    // Long division on the coefficient vectors; the quotient starts at q^(e1-e2).
    std::vector<BigInt> rem = coeffs_;
    const auto& d = divisor.coeffs_;
    if (rem.size() < d.size()) {
        throw std::domain_error("QLaurent::exact_div: inexact division (" + to_string() + ") / (" +
                                divisor.to_string() + ")");
    }
    std::vector<BigInt> quot(rem.size() - d.size() + 1);
    for (std::size_t k = quot.size(); k-- > 0;) {
        const BigInt& top = rem[k + d.size() - 1];
        if (sgn(top) == 0) {
            continue;
        }
        if (!mpz_divisible_p(top.get_mpz_t(), d.back().get_mpz_t())) {
            throw std::domain_error("QLaurent::exact_div: inexact division (" + to_string() + ") / (" +
                                    divisor.to_string() + ")");
        }
        BigInt factor = top / d.back();
        for (std::size_t j = 0; j < d.size(); ++j) {
            rem[k + j] -= factor * d[j];
        }
        quot[k] = std::move(factor);
    }
    if (std::any_of(rem.begin(), rem.end(), [](const BigInt& c) { return sgn(c) != 0; })) {
        throw std::domain_error("QLaurent::exact_div: nonzero remainder for (" + to_string() + ") / (" +
                                divisor.to_string() + ")");
    }
    return from_coeffs(min_exp_ - divisor.min_exp_, std::move(quot));
}

std::string QLaurent::to_string() const {
    if (is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const BigInt& c = coeffs_[i];
        if (sgn(c) == 0) {
            continue;
        }
        const int e = min_exp_ + static_cast<int>(i);
        const BigInt magnitude = abs(c);
        if (first) {
            if (sgn(c) < 0) {
                os << '-';
            }
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            os << magnitude;
            continue;
        }
        if (magnitude != 1) {
            os << magnitude;
        }
        os << 'q';
        if (e != 1) {
            os << '^' << e;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const QLaurent& value) { return os << value.to_string(); }

QLaurent q_int(int n) {
    if (n < 0) {
        throw std::domain_error("q_int: negative argument");
    }
    return QLaurent::from_coeffs(0, std::vector<BigInt>(static_cast<std::size_t>(n), BigInt(1)));
}

QLaurent q_factorial(int n) {
    if (n < 0) {
        throw std::domain_error("q_factorial: negative argument");
    }
    QLaurent result = 1;
    for (int i = 2; i <= n; ++i) {
        result *= q_int(i);
    }
    return result;
}

QLaurent q_binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) {
        throw std::domain_error("q_binomial: need 0 <= k <= n, got n=" + std::to_string(n) +
                                ", k=" + std::to_string(k));
    }
    return q_factorial(n).exact_div(q_factorial(k) * q_factorial(n - k));
}

QLaurent q_falling(int alpha, int k) {
    if (alpha < 0 || k < 0) {
        throw std::domain_error("q_falling: negative argument");
    }
    if (k > alpha) {
        return {};
    }
    QLaurent result = 1;
    for (int i = 0; i < k; ++i) {
        result *= q_int(alpha - i);
    }
    return result;
}

}  // namespace hlrook
