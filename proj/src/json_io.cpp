#include "hlrook/json_io.hpp"

#include <stdexcept>

namespace hlrook {

namespace {

Json coeff_to_json(const BigInt& c) {
    if (c.fits_slong_p()) {
        return static_cast<std::int64_t>(c.get_si());
    }
    return c.get_str();
}

BigInt coeff_from_json(const Json& j) {
    if (j.is_number_integer()) {
        return BigInt(std::to_string(j.get<std::int64_t>()));
    }
    if (j.is_string()) {
        try {
            return BigInt(j.get<std::string>());
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("malformed coefficient string " + j.dump());
        }
    }
    throw std::invalid_argument("coefficient must be an integer or a decimal string, got " + j.dump());
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw std::invalid_argument(std::string("missing field '") + key + "'");
    }
    return j.at(key);
}

std::vector<int> int_array(const Json& j, const char* what) {
    if (!j.is_array()) {
        throw std::invalid_argument(std::string(what) + " must be an array");
    }
    std::vector<int> out;
    for (const Json& v : j) {
        if (!v.is_number_integer()) {
            throw std::invalid_argument(std::string(what) + " must contain integers");
        }
        out.push_back(v.get<int>());
    }
    return out;
}

}  // namespace

Json to_json(const QLaurent& value) {
    Json coeffs = Json::array();
    for (const BigInt& c : value.coeffs()) {
        coeffs.push_back(coeff_to_json(c));
    }
    return {{"min_exp", value.min_exp()}, {"coeffs", std::move(coeffs)}};
}

Json to_json(const Partition& lambda) { return lambda.parts(); }

Json to_json(const DyckPath& path) { return {{"heights", path.heights()}}; }

Json to_json(const SymFunc& f) {
    Json coeffs = Json::array();
    for (const auto& [lambda, c] : f.terms()) {
        coeffs.push_back({{"part", to_json(lambda)}, {"poly", to_json(c)}});
    }
    return {{"degree", f.degree()}, {"basis", std::string(basis_name(f.basis()))}, {"coeffs", std::move(coeffs)}};
}

Json to_json(const CheckReport& report) {
    Json j = {{"identity", report.identity},
              {"instance", report.instance},
              {"status", report.verified() ? "verified" : "counterexample"}};
    if (!report.verified()) {
        j["lhs"] = report.lhs;
        j["rhs"] = report.rhs;
    }
    return j;
}

QLaurent qlaurent_from_json(const Json& j) {
    const Json& min_exp = field(j, "min_exp");
    const Json& coeffs = field(j, "coeffs");
    if (!min_exp.is_number_integer() || !coeffs.is_array()) {
        throw std::invalid_argument("QLaurent needs an integer min_exp and a coeffs array");
    }
    std::vector<BigInt> values;
    for (const Json& c : coeffs) {
        values.push_back(coeff_from_json(c));
    }
    return QLaurent::from_coeffs(min_exp.get<int>(), std::move(values));
}

Partition partition_from_json(const Json& j) { return Partition(int_array(j, "partition")); }

DyckPath dyck_from_json(const Json& j) { return DyckPath::from_heights(int_array(field(j, "heights"), "heights")); }

SymFunc symfunc_from_json(const Json& j) {
    const Json& degree = field(j, "degree");
    const Json& basis = field(j, "basis");
    if (!degree.is_number_integer() || !basis.is_string()) {
        throw std::invalid_argument("SymFunc needs an integer degree and a basis name");
    }
    SymFunc f(degree.get<int>(), parse_basis(basis.get<std::string>()));
    const Json& coeffs = field(j, "coeffs");
    if (!coeffs.is_array()) {
        throw std::invalid_argument("SymFunc coeffs must be an array");
    }
    for (const Json& term : coeffs) {
        f.add(partition_from_json(field(term, "part")), qlaurent_from_json(field(term, "poly")));
    }
    return f;
}

CheckReport report_from_json(const Json& j) {
    CheckReport report;
    report.identity = field(j, "identity").get<std::string>();
    report.instance = field(j, "instance").get<std::string>();
    const std::string status = field(j, "status").get<std::string>();
    if (status == "verified") {
        report.status = CheckStatus::verified;
    } else if (status == "counterexample") {
        report.status = CheckStatus::counterexample;
        report.lhs = field(j, "lhs");
        report.rhs = field(j, "rhs");
    } else {
        throw std::invalid_argument("unknown status '" + status + "'");
    }
    return report;
}

}  // namespace hlrook
