// grosstm: exact grossone arithmetic, Turing machine runs, multi-tape to
// single-tape compilation and observability analysis from one front end.
//
// Exit codes: 0 ok, 1 usage, 2 parse/input error, 3 run budget exhausted,
// 4 unsupported gross operation.

#include "grosstm/compile.hpp"
#include "grosstm/errors.hpp"
#include "grosstm/gross_parse.hpp"
#include "grosstm/machine_dsl.hpp"
#include "grosstm/observe.hpp"
#include "grosstm/run.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <variant>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitBudget = 3;
constexpr int kExitUnsupported = 4;

grosstm::ParsedMachine load_machine(const std::string& path) {
    return grosstm::parse_machine_file(path);
}

std::optional<grosstm::Sidecar> try_load_sidecar(const std::string& machine_path) {
    std::string path = machine_path + ".prov";
    std::ifstream in(path);
    if (!in) {
        return std::nullopt;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return grosstm::parse_sidecar(buffer.str());
}

int cmd_eval(const std::string& expression) {
    grosstm::GrossNumber value = grosstm::parse_gross(expression);
    std::cout << grosstm::format_gross(value) << "\n";
    return kExitOk;
}

void print_run(const grosstm::RunResult& r, const std::string& final_text, bool trace,
               const std::vector<std::string>& trace_lines) {
    if (trace) {
        for (std::size_t i = 0; i < trace_lines.size(); ++i) {
            std::cout << "t" << i << ": " << trace_lines[i] << "\n";
        }
    }
    std::cout << "outcome: " << grosstm::outcome_name(r.outcome) << "\n";
    std::cout << "steps: " << r.steps << "\n";
    std::cout << "final: " << final_text << "\n";
}

int cmd_run(const std::string& path, const std::string& input, unsigned long long max_steps,
            bool trace) {
    grosstm::ParsedMachine pm = load_machine(path);
    grosstm::RunOptions options;
    options.max_steps = max_steps;
    options.record_trace = trace;

    if (auto* singlem = std::get_if<grosstm::SingleTapeMachine>(&pm)) {
        auto diags = grosstm::validate(*singlem);
        if (!diags.empty()) {
            for (const auto& d : diags) {
                std::cerr << "invalid machine: " << d.message << "\n";
            }
            return kExitParse;
        }
        // A sidecar next to the file means this is a compiled track machine:
        // encode the raw word through it.
        if (auto sidecar = try_load_sidecar(path)) {
            grosstm::EncodedTape start = grosstm::sidecar_initial(*sidecar, *singlem, input);
            grosstm::Tape tape(singlem->blank, std::move(start.cells));
            tape.set_head(static_cast<long>(start.head));
            grosstm::RunResult r = grosstm::run_from(*singlem, std::move(tape), options);
            if (trace && r.trace) {
                for (std::size_t i = 0; i < r.trace->size(); ++i) {
                    std::cout << "t" << i << ": " << grosstm::render((*r.trace)[i], *singlem)
                              << "\n";
                }
            }
            std::cout << "outcome: " << grosstm::outcome_name(r.outcome) << "\n";
            std::cout << "steps: " << r.steps << "\n";
            std::cout << "final: " << grosstm::render(r.final_config, *singlem) << "\n";
            std::vector<std::string> views =
                grosstm::sidecar_decode(*sidecar, *singlem, r.tapes.at(0));
            for (int i = 0; i < sidecar->k; ++i) {
                std::cout << "tape_" << (i + 1) << ": " << views[static_cast<std::size_t>(i)]
                          << "\n";
            }
            return r.outcome == grosstm::RunOutcome::budget_exhausted ? kExitBudget : kExitOk;
        }
        std::vector<grosstm::Sym> word = grosstm::tokenize_input(*singlem, input);
        grosstm::RunResult r = grosstm::run(*singlem, word, options);
        std::vector<std::string> trace_lines;
        if (r.trace) {
            for (const auto& c : *r.trace) {
                trace_lines.push_back(grosstm::render(c, *singlem));
            }
        }
        print_run(r, grosstm::render(r.final_config, *singlem), trace, trace_lines);
        return r.outcome == grosstm::RunOutcome::budget_exhausted ? kExitBudget : kExitOk;
    }

    auto& multim = std::get<grosstm::MultiTapeMachine>(pm);
    auto diags = grosstm::validate(multim);
    if (!diags.empty()) {
        for (const auto& d : diags) {
            std::cerr << "invalid machine: " << d.message << "\n";
        }
        return kExitParse;
    }
    std::vector<grosstm::Sym> word = grosstm::tokenize_input(multim, input);
    grosstm::RunResult r = grosstm::run(multim, word, options);
    std::vector<std::string> trace_lines;
    if (r.trace) {
        for (const auto& c : *r.trace) {
            trace_lines.push_back(grosstm::render(c, multim));
        }
    }
    print_run(r, grosstm::render(r.final_config, multim), trace, trace_lines);
    return r.outcome == grosstm::RunOutcome::budget_exhausted ? kExitBudget : kExitOk;
}

int cmd_compile(const std::string& path, const std::string& out_path) {
    grosstm::ParsedMachine pm = load_machine(path);
    auto* multim = std::get_if<grosstm::MultiTapeMachine>(&pm);
    if (!multim) {
        std::cerr << "compile expects a multi-tape machine file\n";
        return kExitParse;
    }
    grosstm::CompiledMachine cm = grosstm::compile(*multim);
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "cannot write '" << out_path << "'\n";
        return kExitUsage;
    }
    out << grosstm::serialize_machine(cm.machine);
    std::string sidecar_path = out_path + ".prov";
    std::ofstream prov(sidecar_path);
    prov << grosstm::write_sidecar(cm);
    std::cout << "states: " << cm.machine.state_count() << "\n";
    std::cout << "symbols: " << cm.alphabet.size() << "\n";
    std::cout << "alphabet_bound: " << grosstm::alphabet_bound(*multim).str() << "\n";
    std::cout << "constants: C=" << cm.cost_passes << " C0=" << cm.cost_overhead << "\n";
    std::cout << "wrote: " << out_path << "\n";
    std::cout << "sidecar: " << sidecar_path << "\n";
    return kExitOk;
}

int cmd_analyze(const std::string& path, unsigned long user_radix,
                std::optional<unsigned long long> steps, const std::string& input,
                const std::string& budget_policy) {
    grosstm::ParsedMachine pm = load_machine(path);
    auto* multim = std::get_if<grosstm::MultiTapeMachine>(&pm);
    if (!multim) {
        std::cerr << "analyze expects a multi-tape machine file\n";
        return kExitParse;
    }
    auto diags = grosstm::validate(*multim);
    if (!diags.empty()) {
        for (const auto& d : diags) {
            std::cerr << "invalid machine: " << d.message << "\n";
        }
        return kExitParse;
    }
    grosstm::BudgetPolicy policy = grosstm::BudgetPolicy::per_tape;
    if (budget_policy == "single-tape") {
        policy = grosstm::BudgetPolicy::single_tape;
    } else if (budget_policy == "two-tapes") {
        policy = grosstm::BudgetPolicy::two_tapes;
    } else if (budget_policy != "per-tape") {
        std::cerr << "unknown budget policy '" << budget_policy << "'\n";
        return kExitUsage;
    }
    grosstm::ObservabilityReport report =
        grosstm::machine_observability_report(*multim, user_radix, policy);
    if (steps) {
        grosstm::StepsAnalysis sa;
        sa.requested = *steps;
        grosstm::BigInt t(*steps);
        sa.paper_bound = t * t + t;
        sa.observable =
            grosstm::observable_simulation_steps(grosstm::GrossNumber(grosstm::Rational(t)));
        std::vector<grosstm::Sym> word = grosstm::tokenize_input(*multim, input);
        sa.measured = grosstm::simulate_and_account(*multim, word, *steps);
        report.steps = std::move(sa);
    }
    std::cout << grosstm::render_report(report);
    return kExitOk;
}

int cmd_count(unsigned long points, const std::string& interval) {
    grosstm::IntervalKind kind;
    if (interval == "half-open") {
        kind = grosstm::IntervalKind::half_open;
    } else if (interval == "open") {
        kind = grosstm::IntervalKind::open;
    } else if (interval == "integers") {
        kind = grosstm::IntervalKind::integers;
    } else {
        std::cerr << "interval must be half-open, open, or integers\n";
        return kExitUsage;
    }
    std::cout << grosstm::format_gross(grosstm::count_positional(points, kind)) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"grossone arithmetic and Turing machine observability workbench"};
    app.require_subcommand(1);

    std::string expression;
    auto* eval = app.add_subcommand("eval", "evaluate a gross expression");
    eval->add_option("expression", expression, "expression over +,-,*,/,^ and G")->required();

    std::string run_path, run_input;
    unsigned long long run_steps = 1'000'000;
    bool run_trace = false;
    auto* run = app.add_subcommand("run", "run a machine file on an input word");
    run->add_option("machine", run_path, "machine file")->required();
    run->add_option("--input", run_input, "input word over the io alphabet of tape 1");
    run->add_option("--max-steps", run_steps, "step budget (default 1000000)");
    run->add_flag("--trace", run_trace, "print every configuration");

    std::string compile_path, compile_out;
    auto* compilec = app.add_subcommand("compile", "compile a k-tape machine to a single tape");
    compilec->add_option("machine", compile_path, "multi-tape machine file")->required();
    compilec->add_option("-o,--output", compile_out, "output machine file")->required();

    std::string analyze_path, analyze_input;
    unsigned long analyze_radix = 10;
    std::string analyze_policy = "per-tape";
    std::optional<unsigned long long> analyze_steps;
    unsigned long long analyze_steps_raw = 0;
    auto* analyze = app.add_subcommand("analyze", "observability report for a machine");
    analyze->add_option("machine", analyze_path, "multi-tape machine file")->required();
    analyze->add_option("--user-radix", analyze_radix, "radix of the observer's numeral system");
    auto* steps_opt = analyze->add_option("--steps", analyze_steps_raw,
                                          "simulated step count to account for");
    analyze->add_option("--input", analyze_input, "input word for the measured run (default empty)");
    analyze->add_option("--budget", analyze_policy, "single-tape | per-tape | two-tapes");

    unsigned long count_points = 0;
    std::string count_interval = "half-open";
    auto* count = app.add_subcommand("count", "count numerals expressible in a positional system");
    count->add_option("--points", count_points, "radix b >= 2")->required();
    count->add_option("--interval", count_interval, "half-open | open | integers");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (steps_opt->count() > 0) {
        analyze_steps = analyze_steps_raw;
    }

    try {
        if (eval->parsed()) {
            return cmd_eval(expression);
        }
        if (run->parsed()) {
            return cmd_run(run_path, run_input, run_steps, run_trace);
        }
        if (compilec->parsed()) {
            return cmd_compile(compile_path, compile_out);
        }
        if (analyze->parsed()) {
            return cmd_analyze(analyze_path, analyze_radix, analyze_steps, analyze_input,
                               analyze_policy);
        }
        if (count->parsed()) {
            return cmd_count(count_points, count_interval);
        }
    } catch (const grosstm::DivisionByZero& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const grosstm::UnsupportedResult& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const grosstm::UnsupportedExponent& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const grosstm::SyntaxError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const grosstm::InputSymbolOutOfAlphabet& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const grosstm::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitUsage;
}
