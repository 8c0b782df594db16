#include "grosstm/compile.hpp"

#include "grosstm/errors.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace grosstm {

namespace {

constexpr const char* kMarkGlyph = "\xE2\x86\x93";  // down arrow, UTF-8

std::vector<int> tuple_key(const TrackTuple& t) {
    std::vector<int> key;
    key.reserve(t.size() * 2);
    for (const TrackCell& c : t) {
        key.push_back(c.symbol);
        key.push_back(c.marked ? 1 : 0);
    }
    return key;
}

}  // namespace

CompositeAlphabet::CompositeAlphabet(int k, Sym multi_blank, Sym multi_start_marker,
                                     std::vector<std::string> multi_symbol_names)
    : k_(k),
      multi_blank_(multi_blank),
      multi_start_marker_(multi_start_marker),
      multi_symbol_names_(std::move(multi_symbol_names)) {
    intern(TrackTuple(static_cast<std::size_t>(k), TrackCell{multi_blank, false}));
}

Sym CompositeAlphabet::intern(const TrackTuple& tuple) {
    if (static_cast<int>(tuple.size()) != k_) {
        throw Error("track tuple arity differs from the tape count");
    }
    std::vector<int> key = tuple_key(tuple);
    if (auto it = index_.find(key); it != index_.end()) {
        return it->second;
    }
    Sym id = static_cast<Sym>(tuples_.size());
    bool all_blank = std::all_of(tuple.begin(), tuple.end(), [this](const TrackCell& c) {
        return c.symbol == multi_blank_ && !c.marked;
    });
    std::string name;
    if (all_blank) {
        name = multi_symbol_names_.at(static_cast<std::size_t>(multi_blank_));
    } else {
        name = "[";
        for (std::size_t i = 0; i < tuple.size(); ++i) {
            if (i > 0) {
                name += ',';
            }
            name += multi_symbol_names_.at(static_cast<std::size_t>(tuple[i].symbol));
            if (tuple[i].marked) {
                name += '*';
            }
        }
        name += ']';
        // source symbols may themselves contain '*', so keep names injective
        while (std::find(names_.begin(), names_.end(), name) != names_.end()) {
            name += '~';
        }
    }
    tuples_.push_back(tuple);
    names_.push_back(std::move(name));
    index_.emplace(std::move(key), id);
    return id;
}

std::optional<Sym> CompositeAlphabet::find(const TrackTuple& tuple) const {
    auto it = index_.find(tuple_key(tuple));
    return it == index_.end() ? std::nullopt : std::optional<Sym>(it->second);
}

const TrackTuple& CompositeAlphabet::tuple_of(Sym composite) const {
    if (composite < 0 || static_cast<std::size_t>(composite) >= tuples_.size()) {
        throw UnknownCompositeSymbol("composite symbol id " + std::to_string(composite) +
                                     " is not registered");
    }
    return tuples_[static_cast<std::size_t>(composite)];
}

const std::string& CompositeAlphabet::name_of(Sym composite) const {
    tuple_of(composite);  // range check
    return names_[static_cast<std::size_t>(composite)];
}

CompositeAlphabet make_track_alphabet(const MultiTapeMachine& m) {
    return CompositeAlphabet(m.tape_count, m.blank, m.start_marker, m.symbol_names);
}

BigInt alphabet_bound(const MultiTapeMachine& m) {
    BigInt bound = int_pow(2, m.tape_count);
    bound *= BigInt(m.input_alphabets.at(0).size() + 1);
    for (std::size_t i = 1; i < m.input_alphabets.size(); ++i) {
        bound *= BigInt(m.input_alphabets[i].size() + 2);
    }
    return bound;
}

EncodedTape encode_tapes(const Configuration& c, CompositeAlphabet& alphabet) {
    int k = alphabet.tape_count();
    if (static_cast<int>(c.tapes.size()) != k) {
        throw Error("configuration arity differs from the track alphabet");
    }
    long lo = 0;
    long hi = 0;
    for (const TapeContent& t : c.tapes) {
        lo = std::min(lo, -static_cast<long>(t.left.size()));
        hi = std::max(hi, static_cast<long>(t.right.size()) - 1);
    }
    auto symbol_at = [&](const TapeContent& t, long p) -> Sym {
        if (p < 0) {
            long idx = p + static_cast<long>(t.left.size());
            return idx >= 0 ? t.left[static_cast<std::size_t>(idx)] : alphabet.multi_blank();
        }
        return p < static_cast<long>(t.right.size()) ? t.right[static_cast<std::size_t>(p)]
                                                     : alphabet.multi_blank();
    };
    EncodedTape out;
    out.head = static_cast<std::size_t>(-lo);
    for (long p = lo; p <= hi; ++p) {
        TrackTuple tuple;
        tuple.reserve(static_cast<std::size_t>(k));
        for (const TapeContent& t : c.tapes) {
            tuple.push_back(TrackCell{symbol_at(t, p), p == 0});
        }
        out.cells.push_back(alphabet.intern(tuple));
    }
    return out;
}

std::vector<TapeContent> decode_tape(const std::vector<Sym>& cells,
                                     const CompositeAlphabet& alphabet) {
    int k = alphabet.tape_count();
    std::vector<long> marker(static_cast<std::size_t>(k), -1);
    std::vector<std::vector<Sym>> rows(static_cast<std::size_t>(k));
    for (std::size_t p = 0; p < cells.size(); ++p) {
        const TrackTuple& tuple = alphabet.tuple_of(cells[p]);
        for (int i = 0; i < k; ++i) {
            rows[static_cast<std::size_t>(i)].push_back(tuple[static_cast<std::size_t>(i)].symbol);
            if (tuple[static_cast<std::size_t>(i)].marked) {
                if (marker[static_cast<std::size_t>(i)] >= 0) {
                    throw Error("tape " + std::to_string(i + 1) + " carries more than one marker");
                }
                marker[static_cast<std::size_t>(i)] = static_cast<long>(p);
            }
        }
    }
    std::vector<TapeContent> out;
    for (int i = 0; i < k; ++i) {
        long at = marker[static_cast<std::size_t>(i)];
        if (at < 0) {
            throw Error("tape " + std::to_string(i + 1) + " carries no marker");
        }
        const auto& row = rows[static_cast<std::size_t>(i)];
        std::vector<Sym> left(row.begin(), row.begin() + at);
        std::vector<Sym> right(row.begin() + at, row.end());
        out.push_back(normalized_tape(std::move(left), std::move(right), alphabet.multi_blank()));
    }
    return out;
}

namespace {

struct CompKey {
    Phase phase = Phase::idle;
    int dir = 1;  // sweep direction; for idle, the direction of the next collect
    StateId sim = -1;
    int action = -1;
    std::vector<Sym> reads;  // collect only, -1 = not yet seen
    unsigned done = 0;
    unsigned carry = 0;
    unsigned seen = 0;

    auto operator<=>(const CompKey&) const = default;
};

struct SimAction {
    StateId next;
    std::vector<Sym> write;
    std::vector<Move> move;
};

struct Entry {
    TrackTuple write;
    Move move;
    CompKey next;
};

Move dir_move(int dir) {
    return dir > 0 ? Move::right : Move::left;
}

bool move_matches_dir(Move m, int dir) {
    return (m == Move::right && dir > 0) || (m == Move::left && dir < 0);
}

struct Builder {
    const MultiTapeMachine& m;
    int k;
    unsigned full;
    CompositeAlphabet alphabet;
    std::vector<SimAction> actions;
    std::map<std::vector<int>, int> action_index;

    explicit Builder(const MultiTapeMachine& machine)
        : m(machine),
          k(machine.tape_count),
          full((1u << machine.tape_count) - 1),
          alphabet(make_track_alphabet(machine)) {}

    int intern_action(const MultiTapeMachine::Action& a) {
        std::vector<int> key{a.next};
        for (Sym s : a.write) {
            key.push_back(s);
        }
        for (Move mv : a.move) {
            key.push_back(static_cast<int>(mv));
        }
        if (auto it = action_index.find(key); it != action_index.end()) {
            return it->second;
        }
        int id = static_cast<int>(actions.size());
        actions.push_back(SimAction{a.next, a.write, a.move});
        action_index.emplace(std::move(key), id);
        return id;
    }

    std::optional<Entry> evaluate(const CompKey& st, Sym composite) {
        const TrackTuple& cell = alphabet.tuple_of(composite);
        switch (st.phase) {
            case Phase::idle: {
                if (m.is_final(st.sim)) {
                    return std::nullopt;  // final compiled states have no outgoing rules
                }
                CompKey c;
                c.phase = Phase::collect;
                c.dir = st.dir;
                c.sim = st.sim;
                c.reads.assign(static_cast<std::size_t>(k), -1);
                return eval_collect(std::move(c), cell);
            }
            case Phase::collect:
                return eval_collect(st, cell);
            case Phase::write:
                return eval_write(st, TrackTuple(cell));
            case Phase::place:
                return eval_place(st, TrackTuple(cell));
        }
        return std::nullopt;
    }

    std::optional<Entry> eval_collect(CompKey st, const TrackTuple& cell) {
        bool complete = true;
        for (int i = 0; i < k; ++i) {
            std::size_t ti = static_cast<std::size_t>(i);
            if (cell[ti].marked) {
                if (st.reads[ti] != -1) {
                    return std::nullopt;  // second marker for one tape: unreachable
                }
                st.reads[ti] = cell[ti].symbol;
            }
            if (st.reads[ti] == -1) {
                complete = false;
            }
        }
        if (!complete) {
            return Entry{cell, dir_move(st.dir), st};
        }
        const auto* a = m.action(st.sim, st.reads);
        if (!a) {
            return std::nullopt;  // simulated reject: halt right here, tape untouched
        }
        CompKey w;
        w.phase = Phase::write;
        w.dir = -st.dir;
        w.action = intern_action(*a);
        return eval_write(std::move(w), TrackTuple(cell));
    }

    std::optional<Entry> eval_write(CompKey st, TrackTuple cell) {
        const SimAction& a = actions[static_cast<std::size_t>(st.action)];
        for (int j = 0; j < k; ++j) {
            std::size_t tj = static_cast<std::size_t>(j);
            if (st.carry & (1u << j)) {
                if (cell[tj].marked) {
                    return std::nullopt;
                }
                cell[tj].marked = true;  // marker arrives one cell along the sweep
                st.done |= 1u << j;
            }
        }
        st.carry = 0;
        for (int i = 0; i < k; ++i) {
            std::size_t ti = static_cast<std::size_t>(i);
            if (!cell[ti].marked || (st.done & (1u << i))) {
                continue;
            }
            cell[ti].symbol = a.write[ti];
            st.done |= 1u << i;
            if (a.move[ti] == Move::none) {
                continue;
            }
            if (move_matches_dir(a.move[ti], st.dir)) {
                cell[ti].marked = false;
                st.carry |= 1u << i;
            }
            // moves against this sweep stay marked and wait for the place pass
        }
        if (st.done == full && st.carry == 0) {
            CompKey p;
            p.phase = Phase::place;
            p.dir = -st.dir;
            p.action = st.action;
            return eval_place(std::move(p), std::move(cell));
        }
        return Entry{std::move(cell), dir_move(st.dir), st};
    }

    std::optional<Entry> eval_place(CompKey st, TrackTuple cell) {
        const SimAction& a = actions[static_cast<std::size_t>(st.action)];
        for (int j = 0; j < k; ++j) {
            std::size_t tj = static_cast<std::size_t>(j);
            if (st.carry & (1u << j)) {
                if (cell[tj].marked) {
                    return std::nullopt;
                }
                cell[tj].marked = true;
                st.seen |= 1u << j;
            }
        }
        st.carry = 0;
        for (int i = 0; i < k; ++i) {
            std::size_t ti = static_cast<std::size_t>(i);
            if (!cell[ti].marked || (st.seen & (1u << i))) {
                continue;
            }
            if (move_matches_dir(a.move[ti], st.dir)) {
                cell[ti].marked = false;
                st.carry |= 1u << i;
            } else {
                st.seen |= 1u << i;
            }
        }
        if (st.seen == full && st.carry == 0) {
            // Parked at the far-end marker; it becomes the idle side.
            CompKey idle;
            idle.phase = Phase::idle;
            idle.dir = -st.dir;
            idle.sim = a.next;
            return Entry{std::move(cell), Move::none, idle};
        }
        return Entry{std::move(cell), dir_move(st.dir), st};
    }
};

std::string mask_bits(unsigned mask, int k) {
    std::string out;
    for (int i = 0; i < k; ++i) {
        out += (mask & (1u << i)) ? '1' : '0';
    }
    return out;
}

std::string state_name_for(const CompKey& key, const MultiTapeMachine& m,
                           const std::vector<SimAction>& actions) {
    auto dir_out = [&](int d) { return d > 0 ? 'R' : 'L'; };
    std::string name;
    switch (key.phase) {
        case Phase::idle:
            // Idle parked left sweeps right next, and vice versa.
            name = std::string("I.") + (key.dir > 0 ? 'L' : 'R') + '.' +
                   m.state_names[static_cast<std::size_t>(key.sim)];
            break;
        case Phase::collect: {
            name = std::string("C.") + dir_out(key.dir) + '.' +
                   m.state_names[static_cast<std::size_t>(key.sim)] + '.';
            for (std::size_t i = 0; i < key.reads.size(); ++i) {
                if (i > 0) {
                    name += '|';
                }
                name += key.reads[i] < 0
                            ? std::string("?")
                            : m.symbol_names[static_cast<std::size_t>(key.reads[i])];
            }
            break;
        }
        case Phase::write:
            name = std::string("W.") + dir_out(key.dir) + ".a" + std::to_string(key.action) +
                   ".d" + mask_bits(key.done, static_cast<int>(actions[0].write.size())) + ".c" +
                   mask_bits(key.carry, static_cast<int>(actions[0].write.size()));
            break;
        case Phase::place:
            name = std::string("P.") + dir_out(key.dir) + ".a" + std::to_string(key.action) +
                   ".s" + mask_bits(key.seen, static_cast<int>(actions[0].write.size())) + ".c" +
                   mask_bits(key.carry, static_cast<int>(actions[0].write.size()));
            break;
    }
    return name;
}

std::string provenance_detail(const CompKey& key, const MultiTapeMachine& m,
                              const std::vector<SimAction>& actions) {
    std::ostringstream out;
    auto sim_name = [&](StateId q) { return m.state_names[static_cast<std::size_t>(q)]; };
    switch (key.phase) {
        case Phase::idle:
            out << "idle sim=" << sim_name(key.sim) << " park=" << (key.dir > 0 ? "left" : "right");
            break;
        case Phase::collect: {
            out << "collect sim=" << sim_name(key.sim)
                << " dir=" << (key.dir > 0 ? "right" : "left") << " reads=";
            for (std::size_t i = 0; i < key.reads.size(); ++i) {
                if (i > 0) {
                    out << ',';
                }
                out << (key.reads[i] < 0 ? "?"
                                         : m.symbol_names[static_cast<std::size_t>(key.reads[i])]);
            }
            break;
        }
        case Phase::write:
        case Phase::place: {
            const SimAction& a = actions[static_cast<std::size_t>(key.action)];
            out << (key.phase == Phase::write ? "write" : "place") << " sim_next=" << sim_name(a.next)
                << " dir=" << (key.dir > 0 ? "right" : "left") << " writes=";
            for (std::size_t i = 0; i < a.write.size(); ++i) {
                if (i > 0) {
                    out << ',';
                }
                out << m.symbol_names[static_cast<std::size_t>(a.write[i])];
            }
            out << " moves=";
            for (Move mv : a.move) {
                out << move_letter(mv);
            }
            if (key.phase == Phase::write) {
                out << " done=" << mask_bits(key.done, static_cast<int>(a.write.size()))
                    << " carry=" << mask_bits(key.carry, static_cast<int>(a.write.size()));
            } else {
                out << " seen=" << mask_bits(key.seen, static_cast<int>(a.write.size()))
                    << " carry=" << mask_bits(key.carry, static_cast<int>(a.write.size()));
            }
            break;
        }
    }
    return out.str();
}

}  // namespace

CompiledMachine compile(const MultiTapeMachine& m) {
    std::vector<Diagnostic> diags = validate(m);
    if (!diags.empty()) {
        std::string joined = "cannot compile an invalid machine:";
        for (const Diagnostic& d : diags) {
            joined += "\n  " + d.message;
        }
        throw Error(joined);
    }

    Builder b(m);

    // Seed the io composites every initial encoding needs: the first cell
    // (input symbol or blank under the tape-1 marker, start markers under the
    // others) and the plain input cells to its right.
    std::vector<Sym> sigma_prime;
    std::vector<Sym> first_cell_syms = m.input_alphabets.at(0);
    first_cell_syms.push_back(m.blank);
    for (Sym s : first_cell_syms) {
        TrackTuple first{TrackCell{s, true}};
        for (int i = 1; i < m.tape_count; ++i) {
            first.push_back(TrackCell{m.start_marker, true});
        }
        sigma_prime.push_back(b.alphabet.intern(first));
    }
    for (Sym s : m.input_alphabets.at(0)) {
        TrackTuple mid{TrackCell{s, false}};
        for (int i = 1; i < m.tape_count; ++i) {
            mid.push_back(TrackCell{m.blank, false});
        }
        sigma_prime.push_back(b.alphabet.intern(mid));
    }

    std::vector<CompKey> states;
    std::map<CompKey, StateId> state_index;
    auto intern_state = [&](const CompKey& key) -> StateId {
        if (auto it = state_index.find(key); it != state_index.end()) {
            return it->second;
        }
        StateId id = static_cast<StateId>(states.size());
        states.push_back(key);
        state_index.emplace(key, id);
        return id;
    };

    CompKey start_key;
    start_key.phase = Phase::idle;
    start_key.dir = 1;
    start_key.sim = m.start;
    intern_state(start_key);

    struct RawEntry {
        StateId next;
        Sym write;
        Move move;
    };
    std::map<std::pair<StateId, Sym>, RawEntry> table;
    std::vector<std::size_t> cursor;

    bool progress = true;
    while (progress) {
        progress = false;
        cursor.resize(states.size(), 0);
        for (std::size_t s = 0; s < states.size(); ++s) {
            while (cursor[s] < b.alphabet.size()) {
                Sym composite = static_cast<Sym>(cursor[s]++);
                progress = true;
                auto entry = b.evaluate(states[s], composite);
                if (!entry) {
                    continue;
                }
                Sym write = b.alphabet.intern(entry->write);
                StateId next = intern_state(entry->next);
                table[{static_cast<StateId>(s), composite}] =
                    RawEntry{next, write, entry->move};
                cursor.resize(states.size(), 0);
            }
        }
    }

    CompiledMachine cm;
    cm.k = m.tape_count;
    cm.alphabet = b.alphabet;

    SingleTapeMachine& sm = cm.machine;
    sm.name = m.name + "-1t";
    for (std::size_t i = 0; i < b.alphabet.size(); ++i) {
        sm.add_symbol(b.alphabet.name_of(static_cast<Sym>(i)));
    }
    sm.blank = 0;  // the all-blank tuple was interned first
    for (Sym s : sigma_prime) {
        if (s != sm.blank &&
            std::find(sm.input_alphabet.begin(), sm.input_alphabet.end(), s) ==
                sm.input_alphabet.end()) {
            sm.input_alphabet.push_back(s);
        }
    }

    std::vector<std::string> taken;
    for (const CompKey& key : states) {
        std::string name = state_name_for(key, m, b.actions);
        while (std::find(taken.begin(), taken.end(), name) != taken.end()) {
            name += '~';
        }
        taken.push_back(name);
        StateId id = sm.add_state(name);
        bool idle = key.phase == Phase::idle;
        cm.is_idle.push_back(idle);
        if (idle && m.is_final(key.sim)) {
            sm.final_states[static_cast<std::size_t>(id)] = true;
        }
        StateId sim = key.phase == Phase::idle || key.phase == Phase::collect
                          ? key.sim
                          : b.actions[static_cast<std::size_t>(key.action)].next;
        cm.provenance.push_back(StateProvenance{key.phase, sim, provenance_detail(key, m, b.actions)});
    }
    sm.start = 0;

    for (const auto& [where, entry] : table) {
        sm.set_rule(where.first, where.second,
                    SingleTapeMachine::Action{entry.next, entry.write, entry.move});
    }
    return cm;
}

EncodedTape encode_initial(const CompiledMachine& cm, const MultiTapeMachine& m,
                           const std::vector<Sym>& input) {
    Configuration c = initial_configuration(m, input);
    EncodedTape out;
    out.head = 0;
    for (long p = 0; p < static_cast<long>(c.tapes[0].right.size()); ++p) {
        TrackTuple tuple;
        for (const TapeContent& t : c.tapes) {
            Sym s = p < static_cast<long>(t.right.size()) ? t.right[static_cast<std::size_t>(p)]
                                                          : cm.alphabet.multi_blank();
            tuple.push_back(TrackCell{s, p == 0});
        }
        auto composite = cm.alphabet.find(tuple);
        if (!composite) {
            throw UnknownCompositeSymbol("initial cell tuple was not registered at compile time");
        }
        out.cells.push_back(*composite);
    }
    return out;
}

CompiledRun run_compiled(const CompiledMachine& cm, EncodedTape start,
                         unsigned long long sim_budget, unsigned long long step_cap) {
    CompiledRun r{RunOutcome::budget_exhausted, 0, 0, cm.machine.start,
                  Tape(cm.machine.blank, std::move(start.cells))};
    r.tape.set_head(static_cast<long>(start.head));
    StateId q = cm.machine.start;
    while (true) {
        if (r.sim_steps >= sim_budget) {
            r.outcome = RunOutcome::budget_exhausted;
            break;
        }
        if (cm.machine.is_final(q)) {
            r.outcome = RunOutcome::halted_final;
            break;
        }
        auto a = cm.machine.action(q, r.tape.read());
        if (!a) {
            r.outcome = RunOutcome::halted_undefined;
            break;
        }
        r.tape.write(a->write);
        r.tape.move(a->move);
        q = a->next;
        ++r.steps;
        if (cm.is_idle[static_cast<std::size_t>(q)]) {
            ++r.sim_steps;
        }
        if (r.steps > step_cap) {
            throw Error("compiled run exceeded the step cap");
        }
    }
    r.final_state = q;
    return r;
}

Accounting simulate_and_account(const CompiledMachine& cm, const MultiTapeMachine& m,
                                const std::vector<Sym>& input, unsigned long long budget) {
    RunOptions options;
    options.max_steps = budget;
    options.record_trace = false;
    RunResult multi = run(m, input, options);

    Accounting acc;
    acc.multi_steps = multi.steps;
    acc.multi_outcome = multi.outcome;

    unsigned long long sim_budget = multi.outcome == RunOutcome::budget_exhausted
                                        ? multi.steps
                                        : ~0ull;
    CompiledRun compiled = run_compiled(cm, encode_initial(cm, m, input), sim_budget);
    acc.single_steps = compiled.steps;

    BigInt t(acc.multi_steps);
    acc.paper_bound = t * t + t;
    acc.cost_passes = cm.cost_passes;
    acc.cost_overhead = cm.cost_overhead;
    acc.scaled_bound = BigInt(cm.cost_passes) * acc.paper_bound + BigInt(cm.cost_overhead) * t;
    acc.paper_bound_holds_scaled = BigInt(acc.single_steps) <= acc.scaled_bound;
    return acc;
}

Accounting simulate_and_account(const MultiTapeMachine& m, const std::vector<Sym>& input,
                                unsigned long long budget) {
    return simulate_and_account(compile(m), m, input, budget);
}

std::string write_sidecar(const CompiledMachine& cm) {
    std::ostringstream out;
    out << "# provenance for " << cm.machine.name << "\n";
    out << "tapes " << cm.k << "\n";
    out << "blank " << cm.alphabet.multi_symbol_name(cm.alphabet.multi_blank()) << "\n";
    out << "startmark " << cm.alphabet.multi_symbol_name(cm.alphabet.multi_start_marker()) << "\n";
    out << "constants C=" << cm.cost_passes << " C0=" << cm.cost_overhead << "\n";
    for (std::size_t i = 0; i < cm.alphabet.size(); ++i) {
        const TrackTuple& tuple = cm.alphabet.tuple_of(static_cast<Sym>(i));
        out << cm.alphabet.name_of(static_cast<Sym>(i)) << " = (";
        for (std::size_t t = 0; t < tuple.size(); ++t) {
            if (t > 0) {
                out << ',';
            }
            out << cm.alphabet.multi_symbol_name(tuple[t].symbol) << ','
                << (tuple[t].marked ? kMarkGlyph : "");
        }
        out << ")\n";
    }
    for (std::size_t s = 0; s < cm.provenance.size(); ++s) {
        out << "state " << cm.machine.state_names[s] << " = " << cm.provenance[s].detail << "\n";
    }
    return out.str();
}

Sidecar parse_sidecar(std::string_view text) {
    Sidecar sc;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') {
            continue;
        }
        std::istringstream ls(line);
        std::string head;
        ls >> head;
        if (head == "tapes") {
            ls >> sc.k;
        } else if (head == "blank") {
            ls >> sc.blank;
        } else if (head == "startmark") {
            ls >> sc.start_marker;
        } else if (head == "constants") {
            std::string field;
            while (ls >> field) {
                if (field.rfind("C=", 0) == 0) {
                    sc.cost_passes = std::stoi(field.substr(2));
                } else if (field.rfind("C0=", 0) == 0) {
                    sc.cost_overhead = std::stoi(field.substr(3));
                }
            }
        } else if (head == "state") {
            continue;  // phase descriptors are informational
        } else {
            // SYM = (a,<mark>,b,<mark>,...)
            std::size_t eq = line.find(" = (");
            std::size_t close = line.rfind(')');
            if (eq == std::string::npos || close == std::string::npos || close < eq) {
                throw SyntaxError("bad sidecar tuple line", line_no);
            }
            std::string name = line.substr(0, eq);
            std::string inner = line.substr(eq + 4, close - eq - 4);
            std::vector<std::string> fields;
            std::size_t pos = 0;
            while (true) {
                std::size_t comma = inner.find(',', pos);
                if (comma == std::string::npos) {
                    fields.push_back(inner.substr(pos));
                    break;
                }
                fields.push_back(inner.substr(pos, comma - pos));
                pos = comma + 1;
            }
            if (fields.size() % 2 != 0) {
                throw SyntaxError("sidecar tuple needs symbol,mark pairs", line_no);
            }
            std::vector<std::pair<std::string, bool>> tuple;
            for (std::size_t i = 0; i < fields.size(); i += 2) {
                bool marked = fields[i + 1] == kMarkGlyph || fields[i + 1] == "*";
                tuple.emplace_back(fields[i], marked);
            }
            sc.symbols.emplace_back(std::move(name), std::move(tuple));
        }
    }
    if (sc.k < 2) {
        throw Error("sidecar is missing a valid 'tapes' header");
    }
    return sc;
}

EncodedTape sidecar_initial(const Sidecar& sc, const SingleTapeMachine& compiled,
                            std::string_view raw_input) {
    // Tape-1 io symbols are whatever shows up on the first track, minus the
    // blank and the start marker.
    std::vector<std::string> sigma1;
    for (const auto& [name, tuple] : sc.symbols) {
        const std::string& s = tuple.at(0).first;
        if (s != sc.blank && s != sc.start_marker &&
            std::find(sigma1.begin(), sigma1.end(), s) == sigma1.end()) {
            sigma1.push_back(s);
        }
    }
    std::stable_sort(sigma1.begin(), sigma1.end(),
                     [](const std::string& a, const std::string& b) { return a.size() > b.size(); });
    std::vector<std::string> word;
    std::size_t pos = 0;
    while (pos < raw_input.size()) {
        bool matched = false;
        for (const std::string& s : sigma1) {
            if (raw_input.compare(pos, s.size(), s) == 0) {
                word.push_back(s);
                pos += s.size();
                matched = true;
                break;
            }
        }
        if (!matched) {
            throw InputSymbolOutOfAlphabet("no tape-1 symbol matches '" +
                                           std::string(raw_input.substr(pos)) + "'");
        }
    }

    std::map<std::vector<std::pair<std::string, bool>>, std::string> index;
    for (const auto& [name, tuple] : sc.symbols) {
        index.emplace(tuple, name);
    }
    auto lookup = [&](const std::vector<std::pair<std::string, bool>>& tuple) -> Sym {
        auto it = index.find(tuple);
        if (it == index.end()) {
            throw UnknownCompositeSymbol("input cell tuple is not in the sidecar map");
        }
        auto sym = compiled.find_symbol(it->second);
        if (!sym) {
            throw UnknownCompositeSymbol("sidecar symbol '" + it->second +
                                         "' is not in the compiled machine");
        }
        return *sym;
    };

    EncodedTape out;
    out.head = 0;
    std::size_t n = std::max<std::size_t>(word.size(), 1);
    for (std::size_t p = 0; p < n; ++p) {
        std::vector<std::pair<std::string, bool>> tuple;
        tuple.emplace_back(p < word.size() ? word[p] : sc.blank, p == 0);
        for (int i = 1; i < sc.k; ++i) {
            tuple.emplace_back(p == 0 ? sc.start_marker : sc.blank, p == 0);
        }
        out.cells.push_back(lookup(tuple));
    }
    return out;
}

std::vector<std::string> sidecar_decode(const Sidecar& sc, const SingleTapeMachine& compiled,
                                        const Tape& tape) {
    std::map<std::string, const std::vector<std::pair<std::string, bool>>*> by_name;
    for (const auto& [name, tuple] : sc.symbols) {
        by_name.emplace(name, &tuple);
    }
    std::vector<std::string> rows(static_cast<std::size_t>(sc.k));
    std::vector<bool> marked_done(static_cast<std::size_t>(sc.k), false);
    std::vector<std::string> lefts(static_cast<std::size_t>(sc.k));
    for (long p = tape.min_visited(); p <= tape.max_visited(); ++p) {
        const std::string& name = compiled.symbol_names.at(static_cast<std::size_t>(tape.at(p)));
        auto it = by_name.find(name);
        if (it == by_name.end()) {
            throw UnknownCompositeSymbol("cell '" + name + "' is not in the sidecar map");
        }
        for (int i = 0; i < sc.k; ++i) {
            std::size_t ti = static_cast<std::size_t>(i);
            const auto& [sym, marked] = (*it->second)[ti];
            if (marked) {
                marked_done[ti] = true;
                lefts[ti] = rows[ti];
                rows[ti].clear();
            }
            rows[ti] += sym;
        }
    }
    std::vector<std::string> out;
    for (int i = 0; i < sc.k; ++i) {
        std::size_t ti = static_cast<std::size_t>(i);
        std::string left = lefts[ti];
        std::string right = rows[ti];
        // trim blanks on both flanks, keep the head cell
        while (left.rfind(sc.blank, 0) == 0) {
            left.erase(0, sc.blank.size());
        }
        while (right.size() > sc.blank.size() &&
               right.compare(right.size() - sc.blank.size(), sc.blank.size(), sc.blank) == 0) {
            right.erase(right.size() - sc.blank.size());
        }
        if (right.empty()) {
            right = sc.blank;
        }
        out.push_back(left + '^' + right);
    }
    return out;
}

}  // namespace grosstm
