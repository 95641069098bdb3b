#include "ucg/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "ucg/dsl.hpp"
#include "ucg/errors.hpp"
#include "ucg/export.hpp"
#include "ucg/graph.hpp"
#include "ucg/matrix.hpp"
#include "ucg/semiring.hpp"
#include "ucg/theorems.hpp"

namespace ucg::cli {

namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string file;
    std::string builtin;
    std::size_t k = 0;
    std::string invariants = "diam,girth,omega,alpha";
    std::string format = "json";
    std::string out;
    std::string theorem;
    std::size_t window_k = 2;
    unsigned window_bound = 1;
    std::string window_check = "girth";
    GraphGuards guards;
};

void add_input(CLI::App* cmd, RunConfig& cfg) {
    auto* file = cmd->add_option("file", cfg.file, "semiring description (.sr)");
    auto* builtin = cmd->add_option("--builtin", cfg.builtin,
                                    "boolean | trunc:<n> | bounds:<r> | boolx2 | zmod:<n> | product:<a>,<b>");
    file->excludes(builtin);
}

void add_guards(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--max-vertices", cfg.guards.max_vertices, "vertex cap for graph construction");
    cmd->add_option("--max-clique-vertices", cfg.guards.max_clique_vertices, "vertex cap for the clique solver");
    cmd->add_option("--max-alpha-vertices", cfg.guards.max_alpha_vertices,
                    "vertex cap for the independence solver");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

SemiringTable load(const RunConfig& cfg) {
    if (cfg.file.empty() == cfg.builtin.empty()) throw InputError("give exactly one of <file> or --builtin");
    SemiringTable s = cfg.builtin.empty() ? dsl::to_table(dsl::parse(read_file(cfg.file)))
                                          : builtin::from_spec(cfg.builtin);
    require_valid(s);
    return s;
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
    if (cfg.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw InputError("cannot write " + cfg.out);
    f << text;
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

int do_validate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.file.empty()) throw InputError("validate needs a file");
    const SemiringTable s = dsl::to_table(dsl::parse(read_file(cfg.file)));
    const auto violations = validate(s);
    if (!violations.empty()) {
        for (const auto& v : violations) err << cfg.file << ": " << v.describe(s) << '\n';
        return invalid_input;
    }
    out << cfg.file << ": valid semiring " << s.name << " with " << s.size() << " elements\n";
    return ok;
}

int do_info(const RunConfig& cfg, std::ostream& out) {
    const SemiringTable s = load(cfg);
    const SemiringProfile p = profile(s);
    const UnitSet us = units(s);
    nlohmann::json unit_list = nlohmann::json::array();
    for (Elem u : us.members) unit_list.push_back({{"element", s.elems[u]}, {"inverse", s.elems[*us.inverse[u]]}});
    nlohmann::json j;
    j["name"] = s.name;
    j["order"] = s.size();
    j["elements"] = s.elems;
    j["zero"] = s.elems[s.zero];
    j["one"] = s.elems[s.one];
    j["profile"] = {{"commutative", p.commutative},
                    {"entire", p.entire},
                    {"antinegative", p.antinegative},
                    {"additively_cancellative", p.additively_cancellative},
                    {"units_closed_under_addition", p.units_closed_under_addition},
                    {"one_index_period", {p.one_index_period.first, p.one_index_period.second}}};
    j["units"] = unit_list;
    emit(cfg, dump(j), out);
    return ok;
}

InvariantSelection parse_selection(const std::string& list) {
    InvariantSelection sel{false, false, false, false};
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "diam" || item == "diameter") sel.diameter = true;
        else if (item == "girth") sel.girth = true;
        else if (item == "omega" || item == "clique") sel.omega = true;
        else if (item == "alpha" || item == "independence") sel.alpha = true;
        else if (item == "all") sel = {};
        else if (!item.empty()) throw InputError("unknown invariant '" + item + "'");
    }
    return sel;
}

int do_graph(const RunConfig& cfg, std::ostream& out) {
    const SemiringTable s = load(cfg);
    const InvariantSelection sel = parse_selection(cfg.invariants);
    CayleyGraph g;
    std::string name = s.name;
    if (cfg.k > 0) {
        g = matrix_graph(s, cfg.k, matrix_units(s, cfg.k), cfg.guards.max_vertices);
        name = "M_" + std::to_string(cfg.k) + "(" + s.name + ")";
    } else {
        g = base_graph(s);
    }
    if (cfg.format == "dot") {
        emit(cfg, to_dot(g, name), out);
    } else if (cfg.format == "csv") {
        emit(cfg, to_csv(g), out);
    } else {
        nlohmann::json j;
        j["graph"] = {{"name", name}, {"vertices", g.vcount()}, {"edges", g.edge_count()}};
        j["invariants"] = to_json(compute_invariants(g, sel, cfg.guards));
        emit(cfg, dump(j), out);
    }
    return ok;
}

int do_check(const RunConfig& cfg, std::ostream& out) {
    const SemiringTable s = load(cfg);
    const std::size_t k = cfg.k ? cfg.k : 2;
    const CheckOptions opts{cfg.guards, {}};
    std::vector<CheckReport> reports;
    if (cfg.theorem == "all") reports = check_all(s, k, opts);
    else if (cfg.theorem == "diamS") reports = {check_diam_base(s, opts)};
    else if (cfg.theorem == "diammatS") reports = {check_diam_matrix(s, k, opts)};
    else if (cfg.theorem == "girth") reports = {check_girth_matrix(s, k, opts)};
    else if (cfg.theorem == "clique") reports = {check_clique(s, k, opts)};
    else if (cfg.theorem == "independence") reports = {check_independence(s, k, opts)};
    else throw InputError("unknown theorem '" + cfg.theorem + "'");

    nlohmann::json j = nlohmann::json::array();
    bool failed = false;
    for (const auto& r : reports) {
        j.push_back(to_json(r));
        failed = failed || r.verdict == Verdict::fail;
    }
    emit(cfg, dump(cfg.theorem == "all" ? j : j.front()), out);
    return failed ? check_failed : ok;
}

int do_natwindow(const RunConfig& cfg, std::ostream& out) {
    if (cfg.window_check != "girth") throw InputError("natwindow supports --check girth only");
    const CheckReport r = check_nat_window_girth(cfg.window_k, cfg.window_bound, {cfg.guards, {}});
    emit(cfg, dump(to_json(r)), out);
    return r.verdict == Verdict::fail ? check_failed : ok;
}

int do_construct(const RunConfig& cfg, std::ostream& out) {
    if (cfg.builtin.empty()) throw InputError("construct needs --builtin");
    emit(cfg, dsl::serialize(builtin::from_spec(cfg.builtin)), out);
    return ok;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Unitary Cayley graphs of finite semirings and their matrix semirings", "ucg"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* validate_cmd = app.add_subcommand("validate", "parse a .sr file and check the semiring axioms");
    validate_cmd->add_option("file", cfg.file, "semiring description (.sr)")->required();

    auto* info = app.add_subcommand("info", "print the profile and units of a semiring");
    add_input(info, cfg);
    info->add_option("--out", cfg.out, "write to a file instead of stdout");

    auto* graph = app.add_subcommand("graph", "build Gamma(S) or Gamma(M_k(S)) and compute invariants");
    add_input(graph, cfg);
    graph->add_option("--matrix", cfg.k, "matrix dimension k")->check(CLI::PositiveNumber);
    graph->add_option("--invariants", cfg.invariants, "comma list of diam,girth,omega,alpha");
    graph->add_option("--format", cfg.format, "json, dot or csv")->check(CLI::IsMember({"json", "dot", "csv"}));
    graph->add_option("--out", cfg.out, "write to a file instead of stdout");
    add_guards(graph, cfg);

    auto* check = app.add_subcommand("check", "check a bound and report witnesses");
    add_input(check, cfg);
    check->add_option("--matrix", cfg.k, "matrix dimension k (default 2)")->check(CLI::PositiveNumber);
    check->add_option("--theorem", cfg.theorem, "diamS, diammatS, girth, clique, independence or all")->required();
    check->add_option("--out", cfg.out, "write to a file instead of stdout");
    add_guards(check, cfg);

    auto* window = app.add_subcommand("natwindow", "girth evidence on a finite window of M_k(N_0)");
    window->add_option("--k", cfg.window_k, "matrix dimension")->required()->check(CLI::PositiveNumber);
    window->add_option("--bound", cfg.window_bound, "largest entry")->required()->check(CLI::PositiveNumber);
    window->add_option("--check", cfg.window_check, "girth");
    window->add_option("--out", cfg.out, "write to a file instead of stdout");
    add_guards(window, cfg);

    auto* construct = app.add_subcommand("construct", "write a builtin semiring as a .sr document");
    construct->add_option("--builtin", cfg.builtin, "builtin spec")->required();
    construct->add_option("--out", cfg.out, "write to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : invalid_input;
    }

    try {
        if (*validate_cmd) return do_validate(cfg, out, err);
        if (*info) return do_info(cfg, out);
        if (*graph) return do_graph(cfg, out);
        if (*check) return do_check(cfg, out);
        if (*window) return do_natwindow(cfg, out);
        if (*construct) return do_construct(cfg, out);
    } catch (const GuardExceeded& e) {
        err << "guard exceeded: " << e.what() << '\n';
        return guard_exceeded;
    } catch (const dsl::ParseError& e) {
        err << (cfg.file.empty() ? "input" : cfg.file) << ": " << e.what() << '\n';
        return invalid_input;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return invalid_input;
    }
    return invalid_input;
}

int run(int argc, const char* const* argv) { return run(argc, argv, std::cout, std::cerr); }

}  // namespace ucg::cli
