#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ucg/cli.hpp"
#include "ucg/dsl.hpp"
#include "ucg/semiring.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "ucg");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = ucg::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "ucg_cli_test";
    fs::create_directories(dir);
    return dir / name;
}

void write(const fs::path& p, const std::string& text) {
    std::ofstream(p, std::ios::binary) << text;
}

}  // namespace

TEST_CASE("check independence on the Boolean semiring") {
    const auto r = run({"check", "--builtin", "boolean", "--matrix", "2", "--theorem", "independence"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["theorem"] == "independence");
    CHECK(j["computed"] == 10);
    CHECK(j["verdict"] == "pass");
}

TEST_CASE("graph diameter of trunc:3") {
    const auto r = run({"graph", "--builtin", "trunc:3", "--invariants", "diam"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["invariants"]["diameter"] == 3);
    CHECK(j["invariants"]["girth"].is_null());
    CHECK(j["graph"]["vertices"] == 4);
}

TEST_CASE("validate reports the violated axiom with its witness") {
    const auto bad = scratch("broken.sr");
    write(bad, "semiring broken\nelements 0 1 2\nzero 0\none 1\nadd:\n0 1 2\n1 2 2\n2 2 2\nmul:\n0 0 0\n0 1 2\n"
               "0 2 1\n");
    const auto r = run({"validate", bad.string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("distributivity") != std::string::npos);
    CHECK(r.err.find("(2, ") != std::string::npos);

    const auto garbled = scratch("garbled.sr");
    write(garbled, "semiring g\nelements 0 1 0\n");
    const auto g = run({"validate", garbled.string()});
    CHECK(g.code == 2);
    CHECK(g.err.find("line 2") != std::string::npos);

    const auto good = scratch("good.sr");
    write(good, ucg::dsl::serialize(ucg::builtin::trunc(2)));
    CHECK(run({"validate", good.string()}).code == 0);
}

TEST_CASE("construct writes a document that reads back") {
    const auto path = scratch("bounds2.sr");
    CHECK(run({"construct", "--builtin", "bounds:2", "--out", path.string()}).code == 0);
    CHECK(run({"validate", path.string()}).code == 0);
    const auto a = run({"info", path.string()});
    const auto b = run({"info", "--builtin", "bounds:2"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const auto j = nlohmann::json::parse(a.out);
    CHECK(j["order"] == 5);
    CHECK(j["profile"]["one_index_period"] == nlohmann::json::array({2, 3}));
    CHECK(j["units"].size() == 1);
}

TEST_CASE("check all aggregates verdicts and is byte-stable") {
    const auto a = run({"check", "--builtin", "bounds:1", "--theorem", "all"});
    const auto b = run({"check", "--builtin", "bounds:1", "--theorem", "all"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const auto j = nlohmann::json::parse(a.out);
    REQUIRE(j.is_array());
    CHECK(j.size() == 5);
    for (const auto& r : j) CHECK(r["verdict"] != "fail");
    CHECK(run({"check", "--builtin", "boolx2", "--theorem", "all"}).code == 0);
}

TEST_CASE("exit codes") {
    CHECK(run({"info", "--builtin", "nonsense"}).code == 2);
    CHECK(run({"info", "--builtin", "trunc:0"}).code == 2);
    CHECK(run({"info"}).code == 2);
    CHECK(run({"info", "/nonexistent/file.sr"}).code == 2);
    CHECK(run({"check", "--builtin", "boolean", "--theorem", "nope"}).code == 2);
    CHECK(run({"graph", "--builtin", "boolean", "--format", "svg"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
    const auto g = run({"graph", "--builtin", "zmod:7", "--matrix", "2", "--max-vertices", "100"});
    CHECK(g.code == 3);
    CHECK(g.err.find("guard") != std::string::npos);
    CHECK(run({"check", "--builtin", "bounds:2", "--theorem", "independence", "--max-alpha-vertices", "50"}).code ==
          3);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("graph export formats") {
    const auto dot = run({"graph", "--builtin", "boolean", "--matrix", "2", "--format", "dot"});
    CHECK(dot.code == 0);
    CHECK(dot.out.rfind("graph \"M_2(boolean)\" {", 0) == 0);
    CHECK(dot.out.find("[label=\"[[1,1],[1,1]]\"]") != std::string::npos);
    const auto csv = run({"graph", "--builtin", "trunc:2", "--format", "csv"});
    CHECK(csv.out == "source,target\n0,1\n1,2\n");
    const auto path = scratch("g.json");
    CHECK(run({"graph", "--builtin", "boolean", "--matrix", "2", "--out", path.string()}).code == 0);
    std::ifstream in(path);
    const auto j = nlohmann::json::parse(in);
    CHECK(j["invariants"]["alpha"] == 10);
    CHECK(j["invariants"]["girth"] == 4);
}

TEST_CASE("natural-number window") {
    const auto r = run({"natwindow", "--k", "2", "--bound", "3", "--check", "girth"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["computed"] == 4);
    CHECK(j["verdict"] == "pass");
    CHECK(run({"natwindow", "--k", "2", "--bound", "3", "--check", "diameter"}).code == 2);
}
