#include "akc/akc.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

enum Exit { Ok = 0, False = 1, Usage = 2, Budget = 3 };

std::string slurp(const std::string& path)
{
    std::ifstream in{path, std::ios::binary};
    if (!in)
        throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

akc::ActionTheory load_theory(const std::string& path)
{
    try {
        return akc::parse_theory(slurp(path));
    } catch (const akc::ParseError& e) {
        throw std::runtime_error(path + ":" + e.what());
    }
}

akc::ConditionalPlan load_plan(const std::string& path, const akc::ActionTheory& t)
{
    try {
        return akc::parse_plan(slurp(path), t);
    } catch (const akc::ParseError& e) {
        throw std::runtime_error(path + ":" + e.what());
    }
}

void write_output(const std::string& text, const std::string& path)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out{path, std::ios::binary};
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << text;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Conditional and conformant planning with sensing actions and static causal laws"};
    app.set_help_flag("--help", "print this help and exit");
    app.require_subcommand(1);

    std::string theory_file;
    std::string plan_file;
    std::string answers_file;
    std::string output;
    std::size_t h = 1;
    std::size_t w = 1;
    bool iterative = false;
    bool conformant = false;
    std::uint64_t node_limit = 0;
    double time_limit = 0;

    auto* solve = app.add_subcommand("solve", "search for a plan");
    solve->add_option("FILE", theory_file, "action theory")->required();
    solve->add_option("--h", h, "maximum plan depth")->check(CLI::PositiveNumber);
    solve->add_option("--w", w, "maximum plan width")->check(CLI::PositiveNumber);
    solve->add_flag("--iterative", iterative, "find the smallest depth, then the smallest width");
    solve->add_flag("--conformant", conformant, "only plans without sensing (w = 1)");
    solve->add_option("--node-limit", node_limit, "stop after this many search nodes");
    solve->add_option("--time-limit", time_limit, "stop after this many seconds");

    auto* verify = app.add_subcommand("verify", "check that a plan achieves the goal");
    verify->add_option("FILE", theory_file, "action theory")->required();
    verify->add_option("PLANFILE", plan_file, "plan")->required();

    bool knows = false;
    bool whether = false;
    std::string formula;
    auto* query = app.add_subcommand("query", "evaluate a knows/whether query after a plan");
    query->add_option("FILE", theory_file, "action theory")->required();
    query->add_option("PLANFILE", plan_file, "plan")->required();
    auto* knows_flag = query->add_flag("--knows", knows, "is FORMULA true after the plan");
    auto* whether_flag = query->add_flag("--whether", whether, "is FORMULA known after the plan");
    knows_flag->excludes(whether_flag);
    query->add_option("FORMULA", formula, "formula over literals with ~, &, | and parentheses")->required();

    auto* encode = app.add_subcommand("encode", "emit the logic program");
    encode->add_option("FILE", theory_file, "action theory")->required();
    encode->add_option("--h", h, "plan depth bound")->check(CLI::PositiveNumber);
    encode->add_option("--w", w, "plan width bound")->check(CLI::PositiveNumber);
    encode->add_option("--plan", plan_file, "emit the reasoner program for this plan instead");
    encode->add_option("-o,--output", output, "output file");

    auto* extract = app.add_subcommand("extract", "read a plan from an answer set");
    extract->add_option("FILE", theory_file, "action theory")->required();
    extract->add_option("--h", h, "plan depth bound")->check(CLI::PositiveNumber);
    extract->add_option("--w", w, "plan width bound")->check(CLI::PositiveNumber);
    extract->add_option("--answers", answers_file, "solver output")->required();

    std::string family;
    std::vector<int> params;
    auto* bench = app.add_subcommand("bench", "generate a benchmark theory");
    bench->add_option("FAMILY", family, "benchmark family")->required();
    bench->add_option("PARAMS", params, "family parameters")->required();
    bench->add_option("-o,--output", output, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? Ok : Usage;
    }

    try {
        if (*solve) {
            const auto t = load_theory(theory_file);
            akc::SearchBudget budget;
            budget.h_max = h;
            budget.w_max = conformant ? 1 : w;
            if (node_limit > 0)
                budget.node_limit = node_limit;
            if (time_limit > 0)
                budget.time_limit = std::chrono::milliseconds(static_cast<long long>(time_limit * 1000));
            const auto r = iterative ? akc::solve_iterative(t, budget)
                                     : akc::solve_conditional(t, h, budget.w_max, budget);
            if (r.status == akc::SearchStatus::BudgetExhausted) {
                std::cerr << "budget exhausted after " << r.nodes << " nodes\n";
                return Budget;
            }
            if (r.status == akc::SearchStatus::NoPlan) {
                std::cout << "no plan\n";
                return False;
            }
            std::cout << akc::print_plan(r.plan) << "\n";
            std::cerr << "h=" << akc::plan_depth(r.plan) << " w=" << akc::plan_width(r.plan)
                      << " size=" << akc::plan_size(r.plan) << "\n";
            return Ok;
        }
        if (*verify) {
            const auto t = load_theory(theory_file);
            const auto p = load_plan(plan_file, t);
            const bool ok = akc::is_solution(t, p);
            std::cout << (ok ? "solution" : "not a solution") << "\n";
            return ok ? Ok : False;
        }
        if (*query) {
            if (!knows && !whether) {
                std::cerr << "query: one of --knows or --whether is required\n";
                return Usage;
            }
            const auto t = load_theory(theory_file);
            const auto p = load_plan(plan_file, t);
            const auto rho = akc::parse_formula(t, formula);
            const bool ok = akc::entails(t, knows ? akc::QueryMode::Knows : akc::QueryMode::Whether, rho, p);
            std::cout << (ok ? "true" : "false") << "\n";
            return ok ? Ok : False;
        }
        if (*encode) {
            const auto t = load_theory(theory_file);
            if (!plan_file.empty())
                write_output(akc::emit_reasoner_program(t, load_plan(plan_file, t)), output);
            else
                write_output(akc::emit_program(t, h, w), output);
            std::cerr << "ground with: lparse -c h=" << h << " -c w=" << w << "\n";
            return Ok;
        }
        if (*extract) {
            const auto t = load_theory(theory_file);
            const auto atoms = akc::parse_answer_set(slurp(answers_file), h, w,
                                                     [](const std::string& m) { std::cerr << "warning: " << m << "\n"; });
            const auto p = akc::extract_plan(t, atoms);
            std::cout << akc::print_plan(p) << "\n";
            return Ok;
        }
        if (*bench) {
            const auto f = akc::bench::parse_family(family);
            if (!f) {
                std::cerr << "unknown benchmark family '" << family << "'\n";
                return Usage;
            }
            write_output(akc::print_theory(akc::bench::generate(*f, params)), output);
            return Ok;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Usage;
    }
    return Usage;
}
