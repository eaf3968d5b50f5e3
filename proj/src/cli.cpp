#include "hlrook/cli.hpp"

#include "hlrook/chromatic.hpp"
#include "hlrook/json_io.hpp"
#include "hlrook/rook.hpp"
#include "hlrook/symfunc.hpp"
#include "hlrook/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hlrook::cli {

namespace {

// Input error tied to a command-line flag.
struct FlagError : std::runtime_error {
    FlagError(const std::string& flag, const std::string& what) : std::runtime_error(flag + ": " + what) {}
};

template <class F>
auto with_flag(const std::string& flag, F&& parse) {
    try {
        return parse();
    } catch (const std::exception& e) {
        throw FlagError(flag, e.what());
    }
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) {
        out.push_back(item);
    }
    if (!text.empty() && text.back() == sep) {
        out.emplace_back();
    }
    return out;
}

Rational parse_rational(const std::string& text) {
    const auto parts = split(text, '/');
    if (parts.empty() || parts.size() > 2) {
        throw std::invalid_argument("malformed rational '" + text + "'");
    }
    BigInt num;
    BigInt den = 1;
    if (parts[0].empty() || num.set_str(parts[0], 10) != 0) {
        throw std::invalid_argument("malformed rational '" + text + "'");
    }
    if (parts.size() == 2 && (parts[1].empty() || den.set_str(parts[1], 10) != 0)) {
        throw std::invalid_argument("malformed rational '" + text + "'");
    }
    if (den == 0) {
        throw std::invalid_argument("zero denominator in '" + text + "'");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string rooks_text(const RookPlacement& p) {
    std::string out = "[";
    for (std::size_t i = 0; i < p.rooks.size(); ++i) {
        out += (i ? ",(" : "(") + std::to_string(p.rooks[i].col) + "," + std::to_string(p.rooks[i].row) + ")";
    }
    return out + "]";
}

void print_table(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& rows) {
    std::size_t width = 0;
    for (const auto& [label, value] : rows) {
        width = std::max(width, label.size());
    }
    for (const auto& [label, value] : rows) {
        out << std::string(width - label.size() + 2, ' ') << label << ": " << value << '\n';
    }
}

FreeCellRule parse_rule(const std::string& text) {
    if (text == "gated") {
        return FreeCellRule::gated;
    }
    if (text == "ungated") {
        return FreeCellRule::ungated;
    }
    throw std::invalid_argument("expected gated or ungated, got '" + text + "'");
}

struct Options {
    std::string heights;
    std::string what = "X";
    std::string basis = "P";
    std::string type;
    std::string identity = "all";
    std::string rule = "gated";
    std::string mu;
    std::string xs;
    std::string q = "0";
    int n = 0;
    int n_max = 4;
    int k_max = 3;
    unsigned jobs = 1;
    bool json = false;
    bool list = false;
};

int do_expand(const Options& o, std::ostream& out) {
    const DyckPath path = with_flag("--heights", [&] { return DyckPath::parse(o.heights); });
    const Basis basis = with_flag("--basis", [&] { return parse_basis(o.basis); });
    SymFunc f = o.what == "X" ? chromatic_qsym(path) : llt_poly(path);
    f = convert(f, basis);
    if (o.json) {
        out << to_json(f).dump() << '\n';
        return exit_ok;
    }
    out << o.what << " heights=" << path.to_text() << " basis=" << basis_name(basis) << '\n';
    std::vector<std::pair<std::string, std::string>> rows;
    for (const auto& [lambda, c] : f.terms()) {
        rows.emplace_back(lambda.to_string(), c.to_string());
    }
    print_table(out, rows);
    return exit_ok;
}

int do_rook(const Options& o, std::ostream& out) {
    const DyckPath path = with_flag("--heights", [&] { return DyckPath::parse(o.heights); });
    const FreeCellRule rule = with_flag("--rule", [&] { return parse_rule(o.rule); });
    std::optional<Partition> type;
    if (!o.type.empty()) {
        type = with_flag("--type", [&] { return Partition::parse(o.type); });
        if (type->size() != path.size()) {
            throw FlagError("--type", type->to_string() + " is not a partition of " + std::to_string(path.size()));
        }
    }

    Json placements = Json::array();
    std::vector<std::pair<std::string, std::string>> listed;
    std::map<Partition, QLaurent, RevLex> polys;
    for (const RookPlacement& p : rook_placements(path)) {
        const Partition t = chain_decompose(p).type;
        if (type && t != *type) {
            continue;
        }
        const int fc = free_cell_count(path, p, rule);
        polys[t] += QLaurent::monomial(fc);
        if (o.list) {
            Json rooks = Json::array();
            for (const Cell& c : p.rooks) {
                rooks.push_back({c.col, c.row});
            }
            placements.push_back({{"rooks", std::move(rooks)}, {"type", to_json(t)}, {"fc", fc}});
            listed.emplace_back(rooks_text(p), "type=" + t.to_string() + " fc=" + std::to_string(fc));
        }
    }
    if (type && !polys.contains(*type)) {
        polys[*type] = QLaurent{};
    }

    if (o.json) {
        Json r = Json::array();
        for (const auto& [mu, poly] : polys) {
            r.push_back({{"part", to_json(mu)}, {"poly", to_json(poly)}});
        }
        Json doc = {{"heights", path.heights()}, {"r_polys", std::move(r)}};
        if (o.list) {
            doc["placements"] = std::move(placements);
        }
        out << doc.dump() << '\n';
        return exit_ok;
    }
    if (o.list) {
        out << listed.size() << " placements\n";
        for (const auto& [rooks, info] : listed) {
            out << "  " << rooks << "  " << info << '\n';
        }
    }
    std::vector<std::pair<std::string, std::string>> rows;
    for (const auto& [mu, poly] : polys) {
        rows.emplace_back("r" + mu.to_string(), poly.to_string());
    }
    print_table(out, rows);
    return exit_ok;
}

int do_list_dyck(const Options& o, std::ostream& out) {
    if (o.n < 0) {
        throw FlagError("--n", "must be nonnegative");
    }
    const auto paths = dyck_paths(o.n);
    if (o.json) {
        Json arr = Json::array();
        for (const DyckPath& p : paths) {
            arr.push_back({{"heights", p.heights()}, {"area", p.area()}});
        }
        out << arr.dump() << '\n';
        return exit_ok;
    }
    for (const DyckPath& p : paths) {
        out << p.to_text() << "  area=" << p.area() << '\n';
    }
    out << paths.size() << " paths\n";
    return exit_ok;
}

int do_verify(const Options& o, std::ostream& out) {
    std::set<Identity> ids;
    with_flag("--identity", [&] {
        for (const std::string& name : split(o.identity, ',')) {
            if (name == "all") {
                ids = all_identities();
            } else {
                ids.insert(parse_identity(name));
            }
        }
        return 0;
    });
    if (o.n_max < 0) {
        throw FlagError("--n-max", "must be nonnegative");
    }
    if (o.k_max < 1) {
        throw FlagError("--k-max", "must be at least 1");
    }
    SweepOptions options;
    options.jobs = std::max(1u, o.jobs);
    options.mult_k_max = o.k_max;
    options.rule = with_flag("--rule", [&] { return parse_rule(o.rule); });

    const SweepResult result = sweep(o.n_max, ids, options);
    if (o.json) {
        for (const CheckReport& r : result.reports) {
            out << to_json(r).dump() << '\n';
        }
    } else {
        std::size_t id_width = 0;
        std::size_t inst_width = 0;
        for (const CheckReport& r : result.reports) {
            id_width = std::max(id_width, r.identity.size());
            inst_width = std::max(inst_width, r.instance.size());
        }
        for (const CheckReport& r : result.reports) {
            out << r.identity << std::string(id_width - r.identity.size() + 2, ' ') << r.instance
                << std::string(inst_width - r.instance.size() + 2, ' ')
                << (r.verified() ? "verified" : "counterexample") << '\n';
        }
        for (const auto& [name, r] : result.first_counterexample) {
            out << "first counterexample for " << name << ": " << r.instance << '\n'
                << "  lhs: " << r.lhs.dump() << '\n'
                << "  rhs: " << r.rhs.dump() << '\n';
        }
        const auto failed = std::count_if(result.reports.begin(), result.reports.end(),
                                          [](const CheckReport& r) { return !r.verified(); });
        out << result.reports.size() << " checks, " << failed << " counterexamples\n";
    }
    return result.all_verified() ? exit_ok : exit_counterexample;
}

int do_oracle_hl(const Options& o, std::ostream& out) {
    const Partition mu = with_flag("--mu", [&] { return Partition::parse(o.mu); });
    const std::vector<Rational> xs = with_flag("--xs", [&] {
        std::vector<Rational> v;
        for (const std::string& s : split(o.xs, ',')) {
            v.push_back(parse_rational(s));
        }
        return v;
    });
    const Rational q0 = with_flag("--q", [&] { return parse_rational(o.q); });
    const Rational direct = with_flag("--xs", [&] { return hl_direct_oracle(mu, xs, q0); });
    const Rational expanded = evaluate(SymFunc::basis_element(Basis::hall_littlewood_p, mu), xs, q0);
    const bool agree = direct == expanded;
    if (o.json) {
        out << Json{{"mu", to_json(mu)},
                    {"direct", direct.get_str()},
                    {"expansion", expanded.get_str()},
                    {"status", agree ? "verified" : "counterexample"}}
                   .dump()
            << '\n';
    } else {
        out << "direct:    " << direct.get_str() << '\n'
            << "expansion: " << expanded.get_str() << '\n'
            << (agree ? "verified" : "counterexample") << '\n';
    }
    return agree ? exit_ok : exit_counterexample;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hall-Littlewood expansions of chromatic quasisymmetric functions via linked rook placements",
                 "hlrook"};
    app.require_subcommand(1);
    Options o;

    auto* expand = app.add_subcommand("expand", "Expand X_gamma or LLT_gamma in a basis");
    expand->add_option("--heights", o.heights, "Dyck path heights, e.g. 2,2,4,4,5")->required();
    expand->add_option("--what", o.what, "X or LLT")->check(CLI::IsMember({"X", "LLT"}));
    expand->add_option("--basis", o.basis, "m, s or P");
    expand->add_flag("--json", o.json, "Print SymFunc JSON");

    auto* rook = app.add_subcommand("rook", "Rook placements, free cells and r-polynomials");
    rook->add_option("--heights", o.heights, "Dyck path heights")->required();
    rook->add_option("--type", o.type, "Restrict to placements of this type, e.g. 3,2");
    rook->add_flag("--list", o.list, "List each placement with its fc value");
    rook->add_option("--rule", o.rule, "Free-cell rule: gated or ungated");
    rook->add_flag("--json", o.json, "Print JSON");

    auto* list = app.add_subcommand("list-dyck", "List Dyck paths of size n");
    list->add_option("--n", o.n, "Size")->required();
    list->add_flag("--json", o.json, "Print JSON");

    auto* verify = app.add_subcommand("verify", "Sweep identities over all Dyck paths up to a size");
    verify->add_option("--identity", o.identity, "main, modular, mult, llt, principal, xm or all (comma list)");
    verify->add_option("--n-max", o.n_max, "Largest path size")->required();
    verify->add_option("--jobs", o.jobs, "Worker threads");
    verify->add_option("--k-max", o.k_max, "Largest k for mult");
    verify->add_option("--rule", o.rule, "Free-cell rule: gated or ungated");
    verify->add_flag("--json", o.json, "Print JSON lines");

    auto* oracle = app.add_subcommand("oracle", "Independent oracles");
    oracle->require_subcommand(1);
    auto* hl = oracle->add_subcommand("hl", "P_mu at a point by symmetrization vs the Kostka-Foulkes expansion");
    hl->add_option("--mu", o.mu, "Partition")->required();
    hl->add_option("--xs", o.xs, "Comma separated rationals")->required();
    hl->add_option("--q", o.q, "Rational P/Q");
    hl->add_flag("--json", o.json, "Print JSON");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        if (expand->parsed()) {
            return do_expand(o, out);
        }
        if (rook->parsed()) {
            return do_rook(o, out);
        }
        if (list->parsed()) {
            return do_list_dyck(o, out);
        }
        if (verify->parsed()) {
            return do_verify(o, out);
        }
        if (hl->parsed()) {
            return do_oracle_hl(o, out);
        }
    } catch (const FlagError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    err << "error: no subcommand\n";
    return exit_usage;
}

}  // namespace hlrook::cli
