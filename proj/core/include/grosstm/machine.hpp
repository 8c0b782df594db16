#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace grosstm {

using StateId = int;
using Sym = int;

enum class Move : std::uint8_t { left, right, none };
enum class TapeMode { two_way_infinite, semi_infinite };

char move_letter(Move m);
std::optional<Move> move_from_letter(char c);

// Deterministic single-tape machine: states Q, tape alphabet, blank, io
// alphabet, start state, final states and a partial transition table over
// (Q \ F) x alphabet. States and symbols are interned; names live in the
// machine. Machines are immutable once built and safe to share.
struct SingleTapeMachine {
    struct Action {
        StateId next;
        Sym write;
        Move move;
    };

    std::string name;
    std::vector<std::string> state_names;
    std::vector<std::string> symbol_names;
    Sym blank = -1;
    std::vector<Sym> input_alphabet;
    StateId start = -1;
    std::vector<bool> final_states;
    TapeMode tape_mode = TapeMode::two_way_infinite;
    std::vector<std::optional<Action>> delta;  // dense, state * |alphabet| + symbol

    StateId add_state(const std::string& state_name);
    Sym add_symbol(const std::string& symbol_name);
    std::optional<StateId> find_state(std::string_view state_name) const;
    std::optional<Sym> find_symbol(std::string_view symbol_name) const;

    void set_rule(StateId q, Sym read, Action action);
    std::optional<Action> action(StateId q, Sym read) const;
    bool is_final(StateId q) const { return q >= 0 && final_states[static_cast<size_t>(q)]; }

    std::size_t state_count() const { return state_names.size(); }
    std::size_t symbol_count() const { return symbol_names.size(); }
};

// k-tape machine (k >= 2) with per-tape io alphabets, the shared blank and
// the start marker Z0 that tapes 2..k carry in the initial configuration.
// The tape alphabets are G1 = S1 ∪ {blank} and Gi = Si ∪ {blank, Z0}.
struct MultiTapeMachine {
    struct Action {
        StateId next;
        std::vector<Sym> write;
        std::vector<Move> move;
    };

    std::string name;
    int tape_count = 0;
    std::vector<std::string> state_names;
    std::vector<std::string> symbol_names;
    Sym blank = -1;
    Sym start_marker = -1;
    std::vector<std::vector<Sym>> input_alphabets;  // one entry per tape
    StateId start = -1;
    std::vector<bool> final_states;
    std::map<std::pair<StateId, std::vector<Sym>>, Action> delta;

    StateId add_state(const std::string& state_name);
    Sym add_symbol(const std::string& symbol_name);
    std::optional<StateId> find_state(std::string_view state_name) const;
    std::optional<Sym> find_symbol(std::string_view symbol_name) const;

    void set_rule(StateId q, std::vector<Sym> reads, Action action);
    const Action* action(StateId q, const std::vector<Sym>& reads) const;
    bool is_final(StateId q) const { return q >= 0 && final_states[static_cast<size_t>(q)]; }
    bool tape_symbol_allowed(int tape, Sym s) const;

    std::size_t state_count() const { return state_names.size(); }
    std::size_t symbol_count() const { return symbol_names.size(); }
};

struct Diagnostic {
    std::string message;
};

// Structural invariant checks; every violation is reported with a location.
std::vector<Diagnostic> validate(const SingleTapeMachine& m);
std::vector<Diagnostic> validate(const MultiTapeMachine& m);

}  // namespace grosstm
