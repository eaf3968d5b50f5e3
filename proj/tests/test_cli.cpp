#include "hlrook/cli.hpp"

#include "hlrook/json_io.hpp"

#include <doctest.h>

#include <sstream>

using namespace hlrook;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("expand prints the golden row") {
    const Result r = run({"expand", "--heights", "2,2,4,4,5", "--what", "X", "--basis", "P"});
    CHECK(r.code == 0);
    CHECK(r.out.find("(3,2): 1 + 2q + q^2") != std::string::npos);
}

TEST_CASE("expand text and JSON agree") {
    for (const char* basis : {"m", "s", "P"}) {
        for (const char* what : {"X", "LLT"}) {
            const Result j = run({"expand", "--heights", "2,3,3,4", "--what", what, "--basis", basis, "--json"});
            const Result t = run({"expand", "--heights", "2,3,3,4", "--what", what, "--basis", basis});
            REQUIRE(j.code == 0);
            const SymFunc f = symfunc_from_json(Json::parse(j.out));
            for (const auto& [lambda, c] : f.terms()) {
                CHECK(t.out.find(lambda.to_string() + ": " + c.to_string() + "\n") != std::string::npos);
            }
        }
    }
}

TEST_CASE("rook listing") {
    const Result r = run({"rook", "--heights", "2,2,4,4,5", "--type", "3,2", "--list", "--json"});
    REQUIRE(r.code == 0);
    const Json doc = Json::parse(r.out);
    std::multiset<int> fcs;
    for (const Json& p : doc.at("placements")) {
        fcs.insert(p.at("fc").get<int>());
        CHECK(partition_from_json(p.at("type")) == Partition({3, 2}));
    }
    CHECK(fcs == std::multiset<int>{0, 1, 1, 2});
    CHECK(qlaurent_from_json(doc.at("r_polys")[0].at("poly")) == QLaurent::from_coeffs(0, {1, 2, 1}));

    const Result text = run({"rook", "--heights", "2,2,4,4,5", "--type", "3,2", "--list"});
    CHECK(text.out.find("4 placements") != std::string::npos);
    CHECK(text.out.find("r(3,2): 1 + 2q + q^2") != std::string::npos);
}

TEST_CASE("list-dyck") {
    const Result r = run({"list-dyck", "--n", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("5 paths") != std::string::npos);
    const Json j = Json::parse(run({"list-dyck", "--n", "4", "--json"}).out);
    CHECK(j.size() == 14);
}

TEST_CASE("verify exit codes and determinism") {
    const Result ok = run({"verify", "--identity", "all", "--n-max", "4"});
    CHECK(ok.code == 0);
    const Result threaded = run({"verify", "--identity", "all", "--n-max", "4", "--jobs", "3"});
    CHECK(threaded.out == ok.out);
    const Result bad = run({"verify", "--identity", "main", "--n-max", "5", "--rule", "ungated", "--json"});
    CHECK(bad.code == 1);
    std::istringstream lines(bad.out);
    std::string line;
    std::size_t counterexamples = 0;
    while (std::getline(lines, line)) {
        const CheckReport rep = report_from_json(Json::parse(line));
        counterexamples += rep.verified() ? 0 : 1;
    }
    CHECK(counterexamples > 0);
}

TEST_CASE("oracle hl") {
    const Result r = run({"oracle", "hl", "--mu", "2", "--xs", "2,3", "--q", "1/2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("direct:    16") != std::string::npos);
    CHECK(run({"oracle", "hl", "--mu", "2,1", "--xs", "2,3", "--q", "1/0"}).code == 2);
    CHECK(run({"oracle", "hl", "--mu", "2,1", "--xs", "2", "--q", "1/3"}).code == 2);
}

TEST_CASE("usage errors exit 2 and name the flag") {
    const Result h = run({"rook", "--heights", "3,1"});
    CHECK(h.code == 2);
    CHECK(h.err.find("--heights") != std::string::npos);
    const Result t = run({"rook", "--heights", "2,2", "--type", "2,3"});
    CHECK(t.code == 2);
    CHECK(t.err.find("--type") != std::string::npos);
    const Result ty = run({"rook", "--heights", "2,2", "--type", "3"});
    CHECK(ty.code == 2);
    CHECK(run({"expand", "--heights", "2,2", "--basis", "z"}).err.find("--basis") != std::string::npos);
    CHECK(run({"verify", "--identity", "bogus", "--n-max", "2"}).code == 2);
    CHECK(run({"verify", "--n-max", "2", "--unknown"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"--help"}).code == 0);
}
