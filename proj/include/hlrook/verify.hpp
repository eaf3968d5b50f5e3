#pragma once

// Executable checks of the Hall-Littlewood expansion, the modular law,
// multiplicativity, the LLT expansions, the principal specialization and the
// q = 1 monomial formula. Every comparison is exact.

#include "hlrook/dyck.hpp"
#include "hlrook/rook.hpp"

#include <json.hpp>

#include <map>
#include <set>
#include <string>
#include <vector>

namespace hlrook {

enum class CheckStatus { verified, counterexample };

struct CheckReport {
    std::string identity;
    std::string instance;
    CheckStatus status = CheckStatus::verified;
    /// Serialized sides, filled only for counterexamples.
    nlohmann::json lhs;
    nlohmann::json rhs;

    bool verified() const noexcept { return status == CheckStatus::verified; }
};

/// Identities known to the sweep, in the order their reports are emitted.
enum class Identity { main, modular, mult, llt, principal, monomial_at_one };

std::string_view identity_name(Identity id);
/// "main", "modular", "mult", "llt", "principal", "xm"; throws
/// std::invalid_argument otherwise.
Identity parse_identity(std::string_view name);
std::set<Identity> all_identities();

enum class ModularLevel { r_poly, chromatic };

/// Coefficients of X_gamma in the P basis against hl_coefficient for all mu.
CheckReport check_main(const DyckPath& path, FreeCellRule rule = FreeCellRule::gated);

/// One report per mu at the r_poly level, one per triple at the chromatic level.
std::vector<CheckReport> check_modular_triple(const ModularTriple& triple, ModularLevel level);
std::vector<CheckReport> check_modular(int n, ModularLevel level);

/// One report per nu for the r-polynomial recursion, and with `function_level`
/// one more comparing Y of the concatenation with Y_gamma [k]_q! e_k.
std::vector<CheckReport> check_multiplicativity(const DyckPath& path, int k, bool function_level = false);

/// Both Hall-Littlewood expansions of LLT_gamma; one report.
CheckReport check_llt(const DyckPath& path);

/// Three-way equality for each alpha in 0..alpha_max.
std::vector<CheckReport> check_principal(const DyckPath& path, int alpha_max);

/// Coefficients of X_gamma(x;1) against rook counts times prod_i m_i(alpha)!.
CheckReport check_monomial_at_one(const DyckPath& path);

struct SweepOptions {
    unsigned jobs = 1;
    int mult_k_max = 3;
    /// Bounds for the product check in check_multiplicativity.
    int mult_function_n_max = 3;
    int mult_function_k_max = 2;
    int modular_chromatic_n_max = 5;
    /// alpha runs over 0..n + principal_alpha_extra.
    int principal_alpha_extra = 2;
    FreeCellRule rule = FreeCellRule::gated;
};

struct SweepResult {
    std::vector<CheckReport> reports;
    /// First counterexample per identity name, in sweep order.
    std::map<std::string, CheckReport> first_counterexample;

    bool all_verified() const noexcept { return first_counterexample.empty(); }
};

/// Runs the selected checks for every path of size 0..n_max. Reports come
/// out grouped by identity, then by size and path, whatever `jobs` is.
SweepResult sweep(int n_max, const std::set<Identity>& identities, const SweepOptions& options = {});

}  // namespace hlrook
