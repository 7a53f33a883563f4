// bootperc: command-line front end for the r-neighbour bootstrap percolation toolkit.
//
// Exit codes: 0 ok, 1 verification mismatch, 2 input error, 3 node budget exhausted.

#include "bootperc/constructions.hpp"
#include "bootperc/forbidden.hpp"
#include "bootperc/instance.hpp"
#include "bootperc/percolation.hpp"
#include "bootperc/render.hpp"
#include "bootperc/solver.hpp"
#include "bootperc/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace bootperc;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_input = 2;
constexpr int exit_budget = 3;

struct InputError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

auto read_file(const std::string & path) -> std::string
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

auto emit(const std::string & text, const std::string & out_path) -> void
{
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw InputError("cannot write '" + out_path + "'");
    out << text;
}

struct Common
{
    int rows = 0;
    int cols = 0;
    int r = 3;
    std::string in;
    std::string out;
    std::string format;
    std::optional<std::uint64_t> budget;
    bool no_normalize = false;
    bool parallel = false;
    bool no_formula_bound = false;
    int max_path_len = 6;
    int theorem = 0;
    int from = 0;
    int to = 0;
    bool no_solver = false;
};

auto add_format(CLI::App * cmd, Common & o, const std::string & fallback) -> void
{
    cmd->add_option("--format", o.format, "Output format (default " + fallback + ")")
        ->check(CLI::IsMember({"ascii", "json"}));
}

auto solve_options(const Common & o) -> SolveOptions
{
    SolveOptions opts;
    opts.normalize_boundary = !o.no_normalize;
    opts.parallel = o.parallel;
    opts.node_budget = o.budget;
    opts.max_path_len = o.max_path_len;
    opts.use_formula_bound = !o.no_formula_bound;
    return opts;
}

auto run_simulate(const Common & o, bool ascii_only) -> int
{
    const auto inst = parse_instance(read_file(o.in));
    const auto g = inst.grid();
    const auto result = closure(g, inst.r, inst.seed_set());
    if (ascii_only || o.format == "ascii")
        emit(render_ascii(g, result), o.out);
    else
        emit(closure_json(g, inst.r, result) + "\n", o.out);
    return exit_ok;
}

auto run_solve(const Common & o) -> int
{
    const Grid g(o.rows, o.cols);
    const auto opts = solve_options(o);
    if (opts.normalize_boundary && (o.r != 3 || g.rows() < 3 || g.cols() < 3))
        std::cerr << "warning: boundary normalization needs r = 3 on a grid at least 3x3; ignored\n";
    try {
        const auto report = solve_min(g, o.r, opts);
        if (o.format == "ascii") {
            std::ostringstream text;
            text << "m(G," << o.r << ") = " << report.optimum << "  (lower bound " << report.lower_bound.value
                 << " from " << to_string(report.lower_bound.source) << ", " << report.nodes_explored
                 << " nodes)\n";
            text << render_ascii(g, closure(g, o.r, report.witness));
            emit(text.str(), o.out);
        }
        else
            emit(solve_report_json(g, report) + "\n", o.out);
        return exit_ok;
    }
    catch (const BudgetExhausted & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_budget;
    }
}

auto run_construct(const Common & o) -> int
{
    const auto built = construct(o.rows, o.cols);
    if (o.format == "ascii")
        emit(render_ascii(built.grid, closure(built.grid, 3, built.seeds)), o.out);
    else
        emit(serialize_instance(Instance::from_set(built.grid, 3, built.seeds)) + "\n", o.out);
    return exit_ok;
}

auto run_verify(const Common & o) -> int
{
    VerifyOptions opts;
    opts.run_solver = !o.no_solver;
    opts.solve.normalize_boundary = !o.no_normalize;
    opts.solve.parallel = o.parallel;
    opts.solve.max_path_len = o.max_path_len;
    if (o.budget)
        opts.solve.node_budget = o.budget;
    const int from = o.from ? o.from : theorem_rows(o.theorem);
    const int to = o.to ? o.to : from;
    const auto report = verify_theorem(o.theorem, from, to, opts);
    if (o.format == "json")
        emit(verification_json(report) + "\n", o.out);
    else
        emit(verification_table(report), o.out);
    return report.exit_code();
}

auto run_catalog(const Common & o) -> int
{
    const Grid g(o.rows, o.cols);
    std::vector<ForbiddenSubgraph> kept;
    for (auto & h : enumerate_catalog(g, {.max_path_len = o.max_path_len}))
        if (is_forbidden(g, o.r, h.support))
            kept.push_back(std::move(h));
    emit(catalog_json(g, kept) + "\n", o.out);
    return exit_ok;
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"r-neighbour bootstrap percolation on grids"};
    app.require_subcommand(1);
    Common o;

    auto dims = [&](CLI::App * cmd) {
        cmd->add_option("--rows", o.rows, "Grid rows")->required()->check(CLI::PositiveNumber);
        cmd->add_option("--cols", o.cols, "Grid columns")->required()->check(CLI::PositiveNumber);
    };
    auto io_out = [&](CLI::App * cmd) { cmd->add_option("--out", o.out, "Write output to FILE instead of stdout"); };

    auto * simulate = app.add_subcommand("simulate", "Run the process from an instance file");
    simulate->add_option("--in", o.in, "Instance JSON")->required();
    add_format(simulate, o, "json");
    io_out(simulate);

    auto * render = app.add_subcommand("render", "Draw the infection rounds of an instance file");
    render->add_option("--in", o.in, "Instance JSON")->required();
    io_out(render);

    auto * solve = app.add_subcommand("solve", "Compute the minimum percolating set size exactly");
    dims(solve);
    solve->add_option("--r", o.r, "Infection threshold")->capture_default_str()->check(CLI::PositiveNumber);
    solve->add_option("--budget", o.budget, "Abort after this many search nodes");
    solve->add_flag("--no-normalize", o.no_normalize, "Search without the consecutive-boundary restriction");
    solve->add_flag("--parallel", o.parallel, "Split the search across threads");
    solve->add_flag("--no-formula-bound", o.no_formula_bound, "Do not start from the closed-form lower bound");
    solve->add_option("--max-path-len", o.max_path_len, "Longest catalog path")->capture_default_str();
    add_format(solve, o, "json");
    io_out(solve);

    auto * cons = app.add_subcommand("construct", "Emit the explicit seed set for a 3, 4 or 5 row grid");
    dims(cons);
    add_format(cons, o, "json");
    io_out(cons);

    auto * verify = app.add_subcommand("verify", "Check constructions and solver against the closed forms");
    verify->add_option("--theorem", o.theorem, "1: 3xm, 2: 5xm, 3: 4xm")->required()->check(CLI::Range(1, 3));
    verify->add_option("--from", o.from, "First grid length");
    verify->add_option("--to", o.to, "Last grid length");
    verify->add_option("--budget", o.budget, "Solver node budget per grid");
    verify->add_flag("--no-solver", o.no_solver, "Check constructions only");
    verify->add_flag("--no-normalize", o.no_normalize, "Search without the consecutive-boundary restriction");
    verify->add_flag("--parallel", o.parallel, "Split the search across threads");
    add_format(verify, o, "ascii");
    io_out(verify);

    auto * catalog = app.add_subcommand("catalog", "List the forbidden subgraphs of a grid");
    dims(catalog);
    catalog->add_option("--r", o.r, "Infection threshold")->capture_default_str()->check(CLI::PositiveNumber);
    catalog->add_option("--max-path-len", o.max_path_len, "Longest catalog path")->capture_default_str();
    io_out(catalog);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        app.exit(e);
        return exit_input;
    }

    if (o.format.empty())
        o.format = verify->parsed() ? "ascii" : "json";

    try {
        if (simulate->parsed())
            return run_simulate(o, false);
        if (render->parsed())
            return run_simulate(o, true);
        if (solve->parsed())
            return run_solve(o);
        if (cons->parsed())
            return run_construct(o);
        if (verify->parsed())
            return run_verify(o);
        if (catalog->parsed())
            return run_catalog(o);
    }
    catch (const InstanceError & e) {
        std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
        return exit_input;
    }
    catch (const InputError & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input;
    }
    catch (const std::invalid_argument & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input;
    }
    catch (const std::out_of_range & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input;
    }
    return exit_input;
}
