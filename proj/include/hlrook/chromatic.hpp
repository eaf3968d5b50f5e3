#pragma once

// Direct computation of X_gamma(x;q), LLT_gamma(x;q) and the principal
// specialization of X_gamma from colorings and words.

#include "hlrook/dyck.hpp"
#include "hlrook/qlaurent.hpp"
#include "hlrook/symfunc.hpp"

#include <span>

namespace hlrook {

/// X_gamma in the monomial basis: the coefficient of m_alpha sums q^asc over
/// proper colorings with content alpha.
SymFunc chromatic_qsym(const DyckPath& path);

/// Coefficient of x_1^{c_1} x_2^{c_2} ... in X_gamma for an arbitrary
/// composition c (zeros allowed). Throws std::invalid_argument if the parts
/// are negative or do not sum to n.
QLaurent chromatic_coefficient(const DyckPath& path, std::span<const int> composition);

/// LLT_gamma in the monomial basis: all words, weighted by q^inv.
SymFunc llt_poly(const DyckPath& path);

QLaurent llt_coefficient(const DyckPath& path, std::span<const int> composition);

struct PrincipalSpecialization {
    /// Sum over proper colorings into [alpha] of q^{asc + sum (kappa(v) - 1)}.
    QLaurent direct;
    /// q^{area} prod_i [alpha - a_i]_q.
    QLaurent product;
};

PrincipalSpecialization principal_specialization(const DyckPath& path, int alpha);

}  // namespace hlrook
