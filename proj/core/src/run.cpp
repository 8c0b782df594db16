#include "grosstm/run.hpp"

#include "grosstm/errors.hpp"

namespace grosstm {

void Tape::write(Sym s) {
    if (head_ >= 0) {
        std::size_t i = static_cast<std::size_t>(head_);
        if (i >= pos_.size()) {
            pos_.resize(i + 1, blank_);
        }
        pos_[i] = s;
    } else {
        std::size_t i = static_cast<std::size_t>(-head_ - 1);
        if (i >= neg_.size()) {
            neg_.resize(i + 1, blank_);
        }
        neg_[i] = s;
    }
}

void Tape::move(Move m) {
    switch (m) {
        case Move::left: --head_; break;
        case Move::right: ++head_; break;
        case Move::none: break;
    }
    min_visited_ = std::min(min_visited_, head_);
    max_visited_ = std::max(max_visited_, head_);
}

Sym Tape::at(long position) const {
    if (position >= 0) {
        std::size_t i = static_cast<std::size_t>(position);
        return i < pos_.size() ? pos_[i] : blank_;
    }
    std::size_t i = static_cast<std::size_t>(-position - 1);
    return i < neg_.size() ? neg_[i] : blank_;
}

void Tape::set_head(long position) {
    head_ = position;
    min_visited_ = std::min(min_visited_, head_);
    max_visited_ = std::max(max_visited_, head_);
}

TapeContent Tape::content() const {
    long lo = head_;
    long hi = head_;
    if (!neg_.empty()) {
        lo = std::min(lo, -static_cast<long>(neg_.size()));
    }
    if (!pos_.empty()) {
        lo = std::min(lo, 0L);
        hi = std::max(hi, static_cast<long>(pos_.size()) - 1);
    }
    std::vector<Sym> left;
    for (long p = lo; p < head_; ++p) {
        left.push_back(at(p));
    }
    std::vector<Sym> right;
    for (long p = head_; p <= hi; ++p) {
        right.push_back(at(p));
    }
    return normalized_tape(std::move(left), std::move(right), blank_);
}

const char* outcome_name(RunOutcome o) {
    switch (o) {
        case RunOutcome::halted_final: return "halted-final";
        case RunOutcome::halted_undefined: return "halted-undefined-transition";
        case RunOutcome::budget_exhausted: return "budget-exhausted";
    }
    return "?";
}

SingleExec make_exec(const SingleTapeMachine& m, const std::vector<Sym>& input) {
    return SingleExec{m.start, Tape(m.blank, input)};
}

MultiExec make_exec(const MultiTapeMachine& m, const std::vector<Sym>& input) {
    MultiExec e{m.start, {}};
    e.tapes.reserve(static_cast<std::size_t>(m.tape_count));
    e.tapes.emplace_back(m.blank, input);
    for (int i = 1; i < m.tape_count; ++i) {
        e.tapes.emplace_back(m.blank, std::vector<Sym>{m.start_marker});
    }
    return e;
}

Configuration snapshot(const SingleExec& e) {
    return Configuration{e.state, {e.tape.content()}};
}

Configuration snapshot(const MultiExec& e) {
    Configuration c{e.state, {}};
    c.tapes.reserve(e.tapes.size());
    for (const Tape& t : e.tapes) {
        c.tapes.push_back(t.content());
    }
    return c;
}

std::optional<RunOutcome> step(const SingleTapeMachine& m, SingleExec& e) {
    if (m.is_final(e.state)) {
        return RunOutcome::halted_final;
    }
    auto a = m.action(e.state, e.tape.read());
    if (!a) {
        return RunOutcome::halted_undefined;
    }
    if (m.tape_mode == TapeMode::semi_infinite && a->move == Move::left && e.tape.head() == 0) {
        throw BoundaryViolation("left move at the boundary of a semi-infinite tape");
    }
    e.tape.write(a->write);
    e.tape.move(a->move);
    e.state = a->next;
    return std::nullopt;
}

std::optional<RunOutcome> step(const MultiTapeMachine& m, MultiExec& e) {
    if (m.is_final(e.state)) {
        return RunOutcome::halted_final;
    }
    std::vector<Sym> reads;
    reads.reserve(e.tapes.size());
    for (const Tape& t : e.tapes) {
        reads.push_back(t.read());
    }
    const auto* a = m.action(e.state, reads);
    if (!a) {
        return RunOutcome::halted_undefined;
    }
    for (std::size_t i = 0; i < e.tapes.size(); ++i) {
        e.tapes[i].write(a->write[i]);
        e.tapes[i].move(a->move[i]);
    }
    e.state = a->next;
    return std::nullopt;
}

namespace {

// Rebuilds a live execution from a q#left^right snapshot (head at cell 0).
SingleExec exec_from(const SingleTapeMachine& m, const Configuration& c) {
    SingleExec e{c.state, Tape(m.blank, c.tapes.at(0).right)};
    Tape with_left(m.blank);
    long start = -static_cast<long>(c.tapes.at(0).left.size());
    for (std::size_t i = 0; i < c.tapes.at(0).left.size(); ++i) {
        with_left.set_head(start + static_cast<long>(i));
        with_left.write(c.tapes.at(0).left[i]);
    }
    for (std::size_t i = 0; i < c.tapes.at(0).right.size(); ++i) {
        with_left.set_head(static_cast<long>(i));
        with_left.write(c.tapes.at(0).right[i]);
    }
    with_left.set_head(0);
    e.tape = with_left;
    return e;
}

MultiExec exec_from(const MultiTapeMachine& m, const Configuration& c) {
    MultiExec e{c.state, {}};
    for (const TapeContent& tc : c.tapes) {
        Tape t(m.blank);
        long start = -static_cast<long>(tc.left.size());
        for (std::size_t i = 0; i < tc.left.size(); ++i) {
            t.set_head(start + static_cast<long>(i));
            t.write(tc.left[i]);
        }
        for (std::size_t i = 0; i < tc.right.size(); ++i) {
            t.set_head(static_cast<long>(i));
            t.write(tc.right[i]);
        }
        t.set_head(0);
        e.tapes.push_back(std::move(t));
    }
    return e;
}

template <typename Machine, typename Exec>
RunResult run_impl(const Machine& m, Exec e, RunOptions options) {
    bool want_trace = options.record_trace.value_or(options.max_steps <= kTraceCap);
    RunResult r;
    std::vector<Configuration> trace;
    if (want_trace) {
        trace.push_back(snapshot(e));
    }
    while (true) {
        if (r.steps >= options.max_steps) {
            r.outcome = RunOutcome::budget_exhausted;
            break;
        }
        if (auto halt = step(m, e)) {
            r.outcome = *halt;
            break;
        }
        ++r.steps;
        if (want_trace) {
            trace.push_back(snapshot(e));
        }
    }
    r.final_config = snapshot(e);
    if (want_trace) {
        r.trace = std::move(trace);
    }
    if constexpr (std::is_same_v<Exec, SingleExec>) {
        r.tapes = {e.tape};
    } else {
        r.tapes = e.tapes;
    }
    return r;
}

}  // namespace

StepResult step(const SingleTapeMachine& m, const Configuration& c) {
    SingleExec e = exec_from(m, c);
    auto halt = step(m, e);
    if (halt) {
        return StepResult{std::nullopt, halt};
    }
    return StepResult{snapshot(e), std::nullopt};
}

StepResult step(const MultiTapeMachine& m, const Configuration& c) {
    MultiExec e = exec_from(m, c);
    auto halt = step(m, e);
    if (halt) {
        return StepResult{std::nullopt, halt};
    }
    return StepResult{snapshot(e), std::nullopt};
}

RunResult run(const SingleTapeMachine& m, const std::vector<Sym>& input, RunOptions options) {
    return run_impl(m, make_exec(m, input), options);
}

RunResult run(const MultiTapeMachine& m, const std::vector<Sym>& input, RunOptions options) {
    return run_impl(m, make_exec(m, input), options);
}

RunResult run_from(const SingleTapeMachine& m, Tape tape, RunOptions options) {
    return run_impl(m, SingleExec{m.start, std::move(tape)}, options);
}

}  // namespace grosstm
