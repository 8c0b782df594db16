#pragma once

#include "grosstm/configuration.hpp"
#include "grosstm/machine.hpp"

#include <optional>
#include <vector>

namespace grosstm {

// Growable two-sided tape; the blank is synthesized outside the materialized
// span, so only written cells occupy memory. Positions are absolute (cell 0
// is where the head started) and may go negative.
class Tape {
public:
    explicit Tape(Sym blank) : blank_(blank) {}
    Tape(Sym blank, std::vector<Sym> cells) : blank_(blank), pos_(std::move(cells)) {}

    Sym read() const { return at(head_); }
    void write(Sym s);
    void move(Move m);

    Sym at(long position) const;
    long head() const { return head_; }
    void set_head(long position);
    long min_visited() const { return min_visited_; }
    long max_visited() const { return max_visited_; }

    // q#left^right view split at the head.
    TapeContent content() const;

private:
    Sym blank_;
    std::vector<Sym> pos_;  // cells 0, 1, 2, ...
    std::vector<Sym> neg_;  // cells -1, -2, ...
    long head_ = 0;
    long min_visited_ = 0;
    long max_visited_ = 0;
};

enum class RunOutcome { halted_final, halted_undefined, budget_exhausted };

const char* outcome_name(RunOutcome o);

// Live execution state; step() advances it by one transition.
struct SingleExec {
    StateId state;
    Tape tape;
};

struct MultiExec {
    StateId state;
    std::vector<Tape> tapes;
};

SingleExec make_exec(const SingleTapeMachine& m, const std::vector<Sym>& input);
MultiExec make_exec(const MultiTapeMachine& m, const std::vector<Sym>& input);

Configuration snapshot(const SingleExec& e);
Configuration snapshot(const MultiExec& e);

// One application of the transition function. Returns the halt reason instead
// of stepping when the state is final or the transition is undefined. Throws
// BoundaryViolation for a left move at cell 0 of a semi-infinite tape.
std::optional<RunOutcome> step(const SingleTapeMachine& m, SingleExec& e);
std::optional<RunOutcome> step(const MultiTapeMachine& m, MultiExec& e);

// Pure convenience overloads working on configuration snapshots.
struct StepResult {
    std::optional<Configuration> next;
    std::optional<RunOutcome> halt;
};
StepResult step(const SingleTapeMachine& m, const Configuration& c);
StepResult step(const MultiTapeMachine& m, const Configuration& c);

struct RunOptions {
    unsigned long long max_steps = 1'000'000;
    // Default: record only when the budget stays within the recording cap.
    std::optional<bool> record_trace;
};

// Budgets above this run without trace recording unless the caller asks for
// it explicitly; step counting never depends on tracing.
inline constexpr unsigned long long kTraceCap = 100'000;

struct RunResult {
    RunOutcome outcome;
    unsigned long long steps = 0;
    Configuration final_config;
    std::vector<Tape> tapes;  // ground truth, including visited spans
    std::optional<std::vector<Configuration>> trace;
};

RunResult run(const SingleTapeMachine& m, const std::vector<Sym>& input, RunOptions options = {});
RunResult run(const MultiTapeMachine& m, const std::vector<Sym>& input, RunOptions options = {});

// Runs from a prepared tape (e.g. an encoded multi-track initial tape).
RunResult run_from(const SingleTapeMachine& m, Tape tape, RunOptions options = {});

}  // namespace grosstm
