#include "hlrook/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace hlrook {

std::string_view basis_name(Basis basis) {
    switch (basis) {
    case Basis::monomial:
        return "monomial";
    case Basis::schur:
        return "schur";
    case Basis::hall_littlewood_p:
        return "hl_p";
    }
    return "?";
}

Basis parse_basis(std::string_view name) {
    if (name == "monomial" || name == "m") {
        return Basis::monomial;
    }
    if (name == "schur" || name == "s") {
        return Basis::schur;
    }
    if (name == "hl_p" || name == "P") {
        return Basis::hall_littlewood_p;
    }
    throw std::invalid_argument("unknown basis '" + std::string(name) + "'");
}

// --- SymFunc -----------------------------------------------------------------

SymFunc::SymFunc(int degree, Basis basis) : degree_(degree), basis_(basis) {
    if (degree < 0) {
        throw std::invalid_argument("SymFunc: negative degree");
    }
}

SymFunc SymFunc::basis_element(Basis basis, const Partition& lambda, const QLaurent& coeff) {
    SymFunc f(lambda.size(), basis);
    f.add(lambda, coeff);
    return f;
}

QLaurent SymFunc::coeff(const Partition& lambda) const {
    const auto it = terms_.find(lambda);
    return it == terms_.end() ? QLaurent{} : it->second;
}

void SymFunc::add(const Partition& lambda, const QLaurent& c) {
    if (lambda.size() != degree_) {
        throw std::invalid_argument("SymFunc::add: " + lambda.to_string() + " is not a partition of " +
                                    std::to_string(degree_));
    }
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(lambda, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

void SymFunc::require_compatible(const SymFunc& rhs) const {
    if (degree_ != rhs.degree_ || basis_ != rhs.basis_) {
        throw std::invalid_argument("SymFunc: mismatched degree or basis");
    }
}

SymFunc& SymFunc::operator+=(const SymFunc& rhs) {
    require_compatible(rhs);
    for (const auto& [lambda, c] : rhs.terms_) {
        add(lambda, c);
    }
    return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& rhs) {
    require_compatible(rhs);
    for (const auto& [lambda, c] : rhs.terms_) {
        add(lambda, -c);
    }
    return *this;
}

SymFunc& SymFunc::operator*=(const QLaurent& scalar) {
    if (scalar.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [lambda, c] : terms_) {
        c *= scalar;
    }
    return *this;
}

SymFunc SymFunc::invert_q() const {
    SymFunc out(degree_, basis_);
    for (const auto& [lambda, c] : terms_) {
        out.add(lambda, c.invert_q());
    }
    return out;
}

// --- Tableaux and charge -----------------------------------------------------

Partition Tableau::shape() const {
    std::vector<int> parts;
    for (const auto& row : rows) {
        parts.push_back(static_cast<int>(row.size()));
    }
    return Partition::from_unsorted(std::move(parts));
}

std::vector<int> Tableau::weight() const {
    std::vector<int> wt;
    for (const auto& row : rows) {
        for (int v : row) {
            if (v > static_cast<int>(wt.size())) {
                wt.resize(static_cast<std::size_t>(v), 0);
            }
            ++wt[static_cast<std::size_t>(v - 1)];
        }
    }
    return wt;
}

bool Tableau::is_semistandard() const {
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].empty() || (r > 0 && rows[r].size() > rows[r - 1].size())) {
            return false;
        }
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            if (rows[r][c] < 1) {
                return false;
            }
            if (c > 0 && rows[r][c] < rows[r][c - 1]) {
                return false;
            }
            if (r > 0 && rows[r][c] <= rows[r - 1][c]) {
                return false;
            }
        }
    }
    return true;
}

std::vector<int> Tableau::reading_word() const {
    std::vector<int> word;
    for (auto row = rows.rbegin(); row != rows.rend(); ++row) {
        word.insert(word.end(), row->begin(), row->end());
    }
    return word;
}

std::vector<Tableau> ssyt(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) {
        throw std::domain_error("ssyt: |lambda| != |mu| for " + lambda.to_string() + ", " + mu.to_string());
    }
    std::vector<Tableau> out;
    Tableau t;
    for (int p : lambda.parts()) {
        t.rows.emplace_back(static_cast<std::size_t>(p), 0);
    }
    std::vector<int> remaining = mu.parts();
    const int letters = mu.length();

    // Row-major fill.
    std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t r, std::size_t c) {
        if (r == t.rows.size()) {
            out.push_back(t);
            return;
        }
        if (c == t.rows[r].size()) {
            fill(r + 1, 0);
            return;
        }
        int lo = 1;
        if (c > 0) {
            lo = std::max(lo, t.rows[r][c - 1]);
        }
        if (r > 0) {
            lo = std::max(lo, t.rows[r - 1][c] + 1);
        }
        for (int v = lo; v <= letters; ++v) {
            auto& left = remaining[static_cast<std::size_t>(v - 1)];
            if (left == 0) {
                continue;
            }
            --left;
            t.rows[r][c] = v;
            fill(r, c + 1);
            ++left;
        }
        t.rows[r][c] = 0;
    };
    fill(0, 0);
    return out;
}

BigInt kostka_number(const Partition& lambda, const Partition& mu) {
    return static_cast<unsigned long>(ssyt(lambda, mu).size());
}

int charge(std::span<const int> word) {
    std::vector<int> content;
    for (int v : word) {
        if (v < 1) {
            throw std::domain_error("charge: letters must be positive");
        }
        if (v > static_cast<int>(content.size())) {
            content.resize(static_cast<std::size_t>(v), 0);
        }
        ++content[static_cast<std::size_t>(v - 1)];
    }
    for (std::size_t i = 1; i < content.size(); ++i) {
        if (content[i] > content[i - 1]) {
            throw std::domain_error("charge: content is not a partition");
        }
    }

    const auto len = static_cast<std::ptrdiff_t>(word.size());
    std::vector<bool> used(word.size(), false);
    int total = 0;
    std::ptrdiff_t left = len;
    while (left > 0) {
        int top = 0;
        for (std::size_t v = 0; v < content.size(); ++v) {
            if (content[v] > 0) {
                top = static_cast<int>(v) + 1;
            }
        }
        std::ptrdiff_t cursor = len;  // one past the right end
        int index = 0;
        for (int letter = 1; letter <= top; ++letter) {
            std::ptrdiff_t found = -1;
            for (std::ptrdiff_t step = 1; step <= len; ++step) {
                const std::ptrdiff_t p = ((cursor - step) % len + len) % len;
                if (!used[static_cast<std::size_t>(p)] && word[static_cast<std::size_t>(p)] == letter) {
                    found = p;
                    break;
                }
            }
            if (found < 0) {
                throw std::logic_error("charge: letter vanished during extraction");
            }
            if (letter > 1 && found > cursor) {
                ++index;
            }
            total += index;
            used[static_cast<std::size_t>(found)] = true;
            --content[static_cast<std::size_t>(letter - 1)];
            --left;
            cursor = found;
        }
    }
    return total;
}

QLaurent kf_poly(const Partition& lambda, const Partition& mu) {
    QLaurent out;
    for (const Tableau& t : ssyt(lambda, mu)) {
        out += QLaurent::monomial(charge(t.reading_word()));
    }
    return out;
}

// --- TransitionCache ---------------------------------------------------------

namespace {

template <class T>
std::vector<std::vector<T>> unitriangular_inverse(const std::vector<std::vector<T>>& upper) {
    const std::size_t n = upper.size();
    std::vector<std::vector<T>> inv(n, std::vector<T>(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (!(upper[i][i] == T(1))) {
            throw std::logic_error("unitriangular_inverse: diagonal entry is not 1");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (!(upper[i][j] == T(0))) {
                throw std::logic_error("unitriangular_inverse: matrix is not upper triangular");
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        inv[i][i] = T(1);
        for (std::size_t j = i + 1; j < n; ++j) {
            T acc(0);
            for (std::size_t k = i; k < j; ++k) {
                acc += inv[i][k] * upper[k][j];
            }
            inv[i][j] = T(0);
            inv[i][j] -= acc;
        }
    }
    return inv;
}

}  // namespace

TransitionCache::TransitionCache(int n) : degree_(n), partitions_(partitions_of(n)) {
    const std::size_t size = partitions_.size();
    for (std::size_t i = 0; i < size; ++i) {
        index_.emplace(partitions_[i], i);
    }
    kostka_.assign(size, std::vector<BigInt>(size, 0));
    kf_.assign(size, std::vector<QLaurent>(size));
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) {
            if (!dominance_leq(partitions_[j], partitions_[i])) {
                continue;
            }
            for (const Tableau& t : ssyt(partitions_[i], partitions_[j])) {
                kostka_[i][j] += 1;
                kf_[i][j] += QLaurent::monomial(charge(t.reading_word()));
            }
        }
    }
    kostka_inv_ = unitriangular_inverse(kostka_);
    kf_inv_ = unitriangular_inverse(kf_);
}

const TransitionCache& TransitionCache::for_degree(int n) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<const TransitionCache>> caches;
    std::lock_guard lock(mutex);
    auto& slot = caches[n];
    if (!slot) {
        slot = std::make_unique<const TransitionCache>(n);
    }
    return *slot;
}

std::size_t TransitionCache::index_of(const Partition& lambda) const {
    const auto it = index_.find(lambda);
    if (it == index_.end()) {
        throw std::invalid_argument("TransitionCache: " + lambda.to_string() + " is not a partition of " +
                                    std::to_string(degree_));
    }
    return it->second;
}

// --- Basis changes -----------------------------------------------------------

namespace {

void require_basis(const SymFunc& f, Basis expected, const char* where) {
    if (f.basis() != expected) {
        throw std::invalid_argument(std::string(where) + ": expected " + std::string(basis_name(expected)) +
                                    " basis, got " + std::string(basis_name(f.basis())));
    }
}

// out_mu = sum_lambda f_lambda * M[lambda][mu]
template <class Entry>
SymFunc apply_rows(const SymFunc& f, Basis target, const TransitionCache& cache, Entry entry) {
    SymFunc out(f.degree(), target);
    const auto& parts = cache.partitions();
    for (const auto& [lambda, c] : f.terms()) {
        const std::size_t row = cache.index_of(lambda);
        for (std::size_t col = 0; col < parts.size(); ++col) {
            const auto& m = entry(row, col);
            if (!(m == 0)) {
                out.add(parts[col], c * QLaurent(m));
            }
        }
    }
    return out;
}

}  // namespace

SymFunc to_monomial(const SymFunc& f) {
    require_basis(f, Basis::schur, "to_monomial");
    const auto& cache = TransitionCache::for_degree(f.degree());
    return apply_rows(f, Basis::monomial, cache,
                      [&](std::size_t r, std::size_t c) -> const BigInt& { return cache.kostka(r, c); });
}

SymFunc to_schur(const SymFunc& f) {
    require_basis(f, Basis::monomial, "to_schur");
    const auto& cache = TransitionCache::for_degree(f.degree());
    return apply_rows(f, Basis::schur, cache,
                      [&](std::size_t r, std::size_t c) -> const BigInt& { return cache.kostka_inverse(r, c); });
}

SymFunc schur_to_hlp(const SymFunc& f) {
    require_basis(f, Basis::schur, "schur_to_hlp");
    const auto& cache = TransitionCache::for_degree(f.degree());
    return apply_rows(f, Basis::hall_littlewood_p, cache,
                      [&](std::size_t r, std::size_t c) -> const QLaurent& { return cache.kf(r, c); });
}

SymFunc hlp_to_schur(const SymFunc& f) {
    require_basis(f, Basis::hall_littlewood_p, "hlp_to_schur");
    const auto& cache = TransitionCache::for_degree(f.degree());
    return apply_rows(f, Basis::schur, cache,
                      [&](std::size_t r, std::size_t c) -> const QLaurent& { return cache.kf_inverse(r, c); });
}

SymFunc convert(const SymFunc& f, Basis target) {
    if (f.basis() == target) {
        return f;
    }
    SymFunc schur = f.basis() == Basis::schur          ? f
                    : f.basis() == Basis::monomial     ? to_schur(f)
                                                       : hlp_to_schur(f);
    switch (target) {
    case Basis::schur:
        return schur;
    case Basis::monomial:
        return to_monomial(schur);
    case Basis::hall_littlewood_p:
        return schur_to_hlp(schur);
    }
    return schur;
}

SymFunc omega_schur(const SymFunc& f) {
    require_basis(f, Basis::schur, "omega_schur");
    SymFunc out(f.degree(), Basis::schur);
    for (const auto& [lambda, c] : f.terms()) {
        out.add(lambda.conjugate(), c);
    }
    return out;
}

SymFunc modified_hl(const Partition& mu, bool transformed) {
    const auto& cache = TransitionCache::for_degree(mu.size());
    const std::size_t col = cache.index_of(mu);
    SymFunc out(mu.size(), Basis::schur);
    for (std::size_t row = 0; row < cache.partitions().size(); ++row) {
        const QLaurent& k = cache.kf(row, col);
        out.add(cache.partitions()[row], transformed ? k.invert_q().shifted(mu.n_stat()) : k);
    }
    return out;
}

// --- Products and evaluation -------------------------------------------------

namespace {

using Exponents = std::vector<int>;

// Distinct rearrangements of lambda padded with zeros to `vars` entries.
std::vector<Exponents> monomial_terms(const Partition& lambda, int vars) {
    if (lambda.length() > vars) {
        return {};
    }
    Exponents e(static_cast<std::size_t>(vars), 0);
    std::copy(lambda.parts().begin(), lambda.parts().end(), e.begin());
    std::sort(e.begin(), e.end());
    std::vector<Exponents> out;
    do {
        out.push_back(e);
    } while (std::next_permutation(e.begin(), e.end()));
    return out;
}

}  // namespace

SymFunc multiply(const SymFunc& f, const SymFunc& g) {
    const SymFunc fm = convert(f, Basis::monomial);
    const SymFunc gm = convert(g, Basis::monomial);
    const int vars = f.degree() + g.degree();
    SymFunc out(vars, Basis::monomial);

    std::map<Exponents, QLaurent> product;
    for (const auto& [lf, cf] : fm.terms()) {
        const auto terms_f = monomial_terms(lf, vars);
        for (const auto& [lg, cg] : gm.terms()) {
            const QLaurent c = cf * cg;
            for (const auto& tf : terms_f) {
                for (const auto& tg : monomial_terms(lg, vars)) {
                    Exponents sum(tf.size());
                    std::transform(tf.begin(), tf.end(), tg.begin(), sum.begin(), std::plus<>());
                    // Coefficient of m_nu = coefficient of x^nu.
                    if (std::is_sorted(sum.begin(), sum.end(), std::greater<>())) {
                        product[sum] += c;
                    }
                }
            }
        }
    }
    for (const auto& [exps, c] : product) {
        out.add(Partition::from_unsorted(exps), c);
    }
    return out;
}

Rational evaluate(const SymFunc& f, std::span<const Rational> xs, const Rational& q0) {
    const SymFunc fm = convert(f, Basis::monomial);
    const int vars = static_cast<int>(xs.size());
    Rational total = 0;
    for (const auto& [lambda, c] : fm.terms()) {
        Rational m = 0;
        for (const Exponents& e : monomial_terms(lambda, vars)) {
            Rational term = 1;
            for (std::size_t i = 0; i < e.size(); ++i) {
                for (int p = 0; p < e[i]; ++p) {
                    term *= xs[i];
                }
            }
            m += term;
        }
        total += c.evaluate(q0) * m;
    }
    total.canonicalize();
    return total;
}

Rational hl_direct_oracle(const Partition& mu, std::span<const Rational> xs, const Rational& q0) {
    const int k = static_cast<int>(xs.size());
    if (k < mu.length()) {
        throw std::domain_error("hl_direct_oracle: need at least l(mu) variables");
    }
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            if (xs[static_cast<std::size_t>(i)] == xs[static_cast<std::size_t>(j)]) {
                throw std::domain_error("hl_direct_oracle: repeated point gives a pole");
            }
        }
    }

    std::vector<int> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);
    Rational total = 0;
    do {
        // w applied to x^mu prod_{i<j} (x_i - q x_j)/(x_i - x_j), with w(x_i) = x_{w(i)}.
        Rational term = 1;
        for (int i = 0; i < k; ++i) {
            const Rational& x = xs[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
            for (int p = 0; p < mu.part(i + 1); ++p) {
                term *= x;
            }
        }
        for (int i = 0; i < k; ++i) {
            for (int j = i + 1; j < k; ++j) {
                const Rational& xi = xs[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
                const Rational& xj = xs[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])];
                term *= (xi - q0 * xj) / (xi - xj);
            }
        }
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));

    Rational norm = q_factorial(k - mu.length()).evaluate(q0);
    for (const auto& [part, count] : mu.multiplicities()) {
        norm *= q_factorial(count).evaluate(q0);
    }
    if (sgn(norm) == 0) {
        throw std::domain_error("hl_direct_oracle: normalizing factor vanishes at this q");
    }
    Rational out = total / norm;
    out.canonicalize();
    return out;
}

}  // namespace hlrook
