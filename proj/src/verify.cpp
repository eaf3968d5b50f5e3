#include "hlrook/verify.hpp"

#include "hlrook/chromatic.hpp"
#include "hlrook/json_io.hpp"
#include "hlrook/symfunc.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace hlrook {

namespace {

template <class T>
CheckReport compare(std::string identity, std::string instance, const T& lhs, const T& rhs) {
    CheckReport report{std::move(identity), std::move(instance), CheckStatus::verified, nullptr, nullptr};
    if (!(lhs == rhs)) {
        report.status = CheckStatus::counterexample;
        report.lhs = to_json(lhs);
        report.rhs = to_json(rhs);
    }
    return report;
}

std::string heights_label(const DyckPath& path) { return "heights=" + path.to_text(); }

std::string triple_label(const ModularTriple& t) {
    return "kind=" + std::to_string(t.kind) + " i=" + std::to_string(t.position) + " lower=" +
           t.lower.to_text() + " middle=" + t.middle.to_text() + " upper=" + t.upper.to_text();
}

QLaurent lookup(const std::map<Partition, QLaurent, RevLex>& polys, const Partition& mu) {
    const auto it = polys.find(mu);
    return it == polys.end() ? QLaurent{} : it->second;
}

// sum_mu q^{area - n(mu)} r_{gamma,mu}(q) prod_i [m_i(mu)]_q! P_mu, without
// the polynomiality check of hl_coefficient.
SymFunc y_function(const DyckPath& path, FreeCellRule rule) {
    SymFunc y(path.size(), Basis::hall_littlewood_p);
    for (const auto& [mu, r] : r_polys(path, rule)) {
        y.add(mu, (r * multiplicity_factorial(mu)).shifted(path.area() - mu.n_stat()));
    }
    return y;
}

QLaurent one_minus(const QLaurent& x) { return QLaurent(1) - x; }

QLaurent small_qbinom(int n, int k) { return k < 0 || k > n ? QLaurent{} : q_binomial(n, k); }

}  // namespace

std::string_view identity_name(Identity id) {
    switch (id) {
    case Identity::main:
        return "main";
    case Identity::modular:
        return "modular";
    case Identity::mult:
        return "mult";
    case Identity::llt:
        return "llt";
    case Identity::principal:
        return "principal";
    case Identity::monomial_at_one:
        return "xm";
    }
    return "?";
}

Identity parse_identity(std::string_view name) {
    for (Identity id : all_identities()) {
        if (identity_name(id) == name) {
            return id;
        }
    }
    throw std::invalid_argument("unknown identity '" + std::string(name) + "'");
}

std::set<Identity> all_identities() {
    return {Identity::main, Identity::modular, Identity::mult, Identity::llt, Identity::principal,
            Identity::monomial_at_one};
}

CheckReport check_main(const DyckPath& path, FreeCellRule rule) {
    const SymFunc lhs = convert(chromatic_qsym(path), Basis::hall_littlewood_p);
    return compare("main", heights_label(path), lhs, y_function(path, rule));
}

std::vector<CheckReport> check_modular_triple(const ModularTriple& triple, ModularLevel level) {
    std::vector<CheckReport> out;
    const QLaurent one_plus_q = QLaurent(1) + QLaurent::q();
    if (level == ModularLevel::chromatic) {
        const SymFunc lhs = one_plus_q * chromatic_qsym(triple.middle);
        const SymFunc rhs = QLaurent::q() * chromatic_qsym(triple.lower) + chromatic_qsym(triple.upper);
        out.push_back(compare("modular-chromatic", triple_label(triple), lhs, rhs));
        return out;
    }
    const auto r0 = r_polys(triple.lower);
    const auto r1 = r_polys(triple.middle);
    const auto r2 = r_polys(triple.upper);
    for (const Partition& mu : partitions_of(triple.middle.size())) {
        const QLaurent lhs = one_plus_q * lookup(r1, mu);
        const QLaurent rhs = lookup(r0, mu) + QLaurent::q() * lookup(r2, mu);
        out.push_back(compare("modular", triple_label(triple) + " mu=" + mu.to_text(), lhs, rhs));
    }
    return out;
}

std::vector<CheckReport> check_modular(int n, ModularLevel level) {
    std::vector<CheckReport> out;
    for (const ModularTriple& triple : modular_triples(n)) {
        auto reports = check_modular_triple(triple, level);
        out.insert(out.end(), std::make_move_iterator(reports.begin()), std::make_move_iterator(reports.end()));
    }
    return out;
}

std::vector<CheckReport> check_multiplicativity(const DyckPath& path, int k, bool function_level) {
    if (k < 1) {
        throw std::invalid_argument("check_multiplicativity: k must be at least 1");
    }
    const int n = path.size();
    const DyckPath extended = concat(path, DyckPath::complete(k));
    const auto small = r_polys(path);
    const auto large = r_polys(extended);
    const QLaurent k_fact = q_factorial(k);
    const std::string base = heights_label(path) + " k=" + std::to_string(k);

    std::vector<CheckReport> out;
    for (const Partition& nu : partitions_of(n + k)) {
        const Partition nu_c = nu.conjugate();
        QLaurent rhs;
        for (const auto& [mu, r] : small) {
            if (!is_vertical_strip(nu, mu)) {
                continue;
            }
            const Partition mu_c = mu.conjugate();
            QLaurent term = r * k_fact.exact_div(q_factorial(nu_c.part(1) - mu_c.part(1)));
            for (const auto& [part, count] : mu.multiplicities()) {
                term *= small_qbinom(count, nu_c.part(part + 1) - mu_c.part(part + 1));
            }
            rhs += term.shifted(nu.n_stat() - mu.n_stat() - k * (k - 1) / 2);
        }
        out.push_back(compare("mult", base + " nu=" + nu.to_text(), lookup(large, nu), rhs));
    }

    if (function_level) {
        const SymFunc lhs = convert(y_function(extended, FreeCellRule::gated), Basis::monomial);
        const SymFunc e_k = SymFunc::basis_element(Basis::monomial, Partition::column(k), k_fact);
        const SymFunc rhs = multiply(y_function(path, FreeCellRule::gated), e_k);
        out.push_back(compare("mult-function", base, lhs, rhs));
    }
    return out;
}

CheckReport check_llt(const DyckPath& path) {
    const int n = path.size();
    const SymFunc lhs = to_schur(llt_poly(path));
    const auto polys = r_polys(path);

    SymFunc first(n, Basis::schur);
    SymFunc second(n, Basis::schur);
    for (const auto& [mu, r] : polys) {
        const auto gap = static_cast<unsigned>(n - mu.length());
        const QLaurent c1 = one_minus(QLaurent::q()).pow(gap) * r.shifted(path.area() - mu.n_stat());
        first += c1 * omega_schur(modified_hl(mu, false));
        const QLaurent c2 = one_minus(QLaurent::monomial(-1)).pow(gap) * r.invert_q();
        second += c2 * modified_hl(mu, true);
    }
    if (!(lhs == first)) {
        return compare("llt", heights_label(path) + " form=omega-H", lhs, first);
    }
    return compare("llt", heights_label(path) + (lhs == second ? "" : " form=H-tilde"), lhs, second);
}

std::vector<CheckReport> check_principal(const DyckPath& path, int alpha_max) {
    const auto polys = r_polys(path);
    std::vector<CheckReport> out;
    for (int alpha = 0; alpha <= alpha_max; ++alpha) {
        const PrincipalSpecialization ps = principal_specialization(path, alpha);
        QLaurent rook_side;
        for (const auto& [mu, r] : polys) {
            rook_side += r * q_falling(alpha, mu.length());
        }
        rook_side = rook_side.shifted(path.area());
        const std::string instance = heights_label(path) + " alpha=" + std::to_string(alpha);
        if (!(ps.direct == rook_side)) {
            out.push_back(compare("principal", instance + " sides=direct,rook", ps.direct, rook_side));
        } else {
            out.push_back(compare("principal", instance + (ps.direct == ps.product ? "" : " sides=direct,product"),
                                  ps.direct, ps.product));
        }
    }
    return out;
}

CheckReport check_monomial_at_one(const DyckPath& path) {
    const SymFunc x = chromatic_qsym(path);
    const auto polys = r_polys(path);
    SymFunc lhs(path.size(), Basis::monomial);
    SymFunc rhs(path.size(), Basis::monomial);
    for (const Partition& alpha : partitions_of(path.size())) {
        lhs.add(alpha, QLaurent(x.coeff(alpha).at_one()));
        BigInt count = lookup(polys, alpha).at_one();
        for (const auto& [part, m] : alpha.multiplicities()) {
            for (int t = 2; t <= m; ++t) {
                count *= t;
            }
        }
        rhs.add(alpha, QLaurent(count));
    }
    return compare("xm", heights_label(path), lhs, rhs);
}

SweepResult sweep(int n_max, const std::set<Identity>& identities, const SweepOptions& options) {
    using Task = std::function<std::vector<CheckReport>()>;
    std::vector<Task> tasks;
    const auto single = [](CheckReport r) { return std::vector<CheckReport>{std::move(r)}; };

    for (Identity id : identities) {
        for (int n = 0; n <= n_max; ++n) {
            if (id == Identity::modular) {
                for (const ModularTriple& t : modular_triples(n)) {
                    tasks.emplace_back([t] { return check_modular_triple(t, ModularLevel::r_poly); });
                    if (n <= options.modular_chromatic_n_max) {
                        tasks.emplace_back([t] { return check_modular_triple(t, ModularLevel::chromatic); });
                    }
                }
                continue;
            }
            for (const DyckPath& path : dyck_paths(n)) {
                switch (id) {
                case Identity::main:
                    tasks.emplace_back([=, &options] { return single(check_main(path, options.rule)); });
                    break;
                case Identity::mult:
                    for (int k = 1; k <= options.mult_k_max; ++k) {
                        const bool fn = n <= options.mult_function_n_max && k <= options.mult_function_k_max;
                        tasks.emplace_back([=] { return check_multiplicativity(path, k, fn); });
                    }
                    break;
                case Identity::llt:
                    tasks.emplace_back([=] { return single(check_llt(path)); });
                    break;
                case Identity::principal:
                    tasks.emplace_back([=, &options] {
                        return check_principal(path, n + options.principal_alpha_extra);
                    });
                    break;
                case Identity::monomial_at_one:
                    tasks.emplace_back([=] { return single(check_monomial_at_one(path)); });
                    break;
                case Identity::modular:
                    break;
                }
            }
        }
    }

    std::vector<std::vector<CheckReport>> slots(tasks.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    const auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            try {
                slots[i] = tasks[i]();
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        }
    };
    const unsigned jobs = std::max(1u, options.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned j = 0; j < jobs; ++j) {
            pool.emplace_back(worker);
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    SweepResult result;
    for (auto& slot : slots) {
        for (CheckReport& report : slot) {
            if (!report.verified()) {
                result.first_counterexample.try_emplace(report.identity, report);
            }
            result.reports.push_back(std::move(report));
        }
    }
    return result;
}

}  // namespace hlrook
