#pragma once

#include "grosstm/configuration.hpp"
#include "grosstm/machine.hpp"
#include "grosstm/rational.hpp"
#include "grosstm/run.hpp"

#include <map>
#include <string>
#include <vector>

namespace grosstm {

// One track pair of a multi-track cell: the stored tape symbol plus whether
// the simulated head marker sits here.
struct TrackCell {
    Sym symbol;
    bool marked;

    bool operator==(const TrackCell&) const = default;
};

// The 2k tracks of one cell (k symbol tracks, k marker tracks).
using TrackTuple = std::vector<TrackCell>;

// Injective map between track tuples and composite symbols. The all-blank
// unmarked tuple is always composite 0 and carries the blank's name.
class CompositeAlphabet {
public:
    CompositeAlphabet() = default;
    CompositeAlphabet(int k, Sym multi_blank, Sym multi_start_marker,
                      std::vector<std::string> multi_symbol_names);

    Sym intern(const TrackTuple& tuple);                  // registers on demand
    std::optional<Sym> find(const TrackTuple& tuple) const;
    const TrackTuple& tuple_of(Sym composite) const;      // throws UnknownCompositeSymbol
    const std::string& name_of(Sym composite) const;

    int tape_count() const { return k_; }
    Sym multi_blank() const { return multi_blank_; }
    Sym multi_start_marker() const { return multi_start_marker_; }
    const std::string& multi_symbol_name(Sym s) const { return multi_symbol_names_.at(static_cast<std::size_t>(s)); }
    std::size_t size() const { return tuples_.size(); }

private:
    int k_ = 0;
    Sym multi_blank_ = -1;
    Sym multi_start_marker_ = -1;
    std::vector<std::string> multi_symbol_names_;
    std::vector<TrackTuple> tuples_;
    std::vector<std::string> names_;
    std::map<std::vector<int>, Sym> index_;
};

CompositeAlphabet make_track_alphabet(const MultiTapeMachine& m);

// |G'| = 2^k (|S1|+1) prod_{i=2..k} (|Si|+2)
BigInt alphabet_bound(const MultiTapeMachine& m);

// Tapes overlaid at a common origin: every head sits at relative position 0,
// so all markers land in cell `head` of the encoded span.
struct EncodedTape {
    std::vector<Sym> cells;
    std::size_t head = 0;
};

EncodedTape encode_tapes(const Configuration& c, CompositeAlphabet& alphabet);
std::vector<TapeContent> decode_tape(const std::vector<Sym>& cells,
                                     const CompositeAlphabet& alphabet);

enum class Phase { idle, collect, write, place };

struct StateProvenance {
    Phase phase;
    StateId sim_state;  // simulated state this compiled state works for
    std::string detail;
};

// Single-tape realization of a k-tape machine over a 2k-track tape. One
// simulated step costs three sweeps over the marker span: collect reads,
// write back applying the moves that point along the return sweep, then a
// placing sweep for the remaining markers which parks at the far end (the
// idle side alternates, so no fourth traversal is needed).
struct CompiledMachine {
    SingleTapeMachine machine;
    int k = 0;
    CompositeAlphabet alphabet;
    std::vector<StateProvenance> provenance;  // by compiled state id
    std::vector<bool> is_idle;                // sim-step boundaries
    int cost_passes = 3;     // C: sweeps per simulated step
    int cost_overhead = 8;   // C0: per-step constant, covers turnarounds and a
                             // final partial collect after a reject
};

// Throws Error when validate(m) reports diagnostics.
CompiledMachine compile(const MultiTapeMachine& m);

// Initial encoded tape for an input word (composites must be registered).
EncodedTape encode_initial(const CompiledMachine& cm, const MultiTapeMachine& m,
                           const std::vector<Sym>& input);

struct CompiledRun {
    RunOutcome outcome;
    unsigned long long steps = 0;
    unsigned long long sim_steps = 0;  // completed simulated steps
    StateId final_state = -1;
    Tape tape;
};

// Runs the compiled machine from an encoded tape, counting transitions into
// idle states as simulated-step boundaries. Stops after `sim_budget`
// simulated steps or when the machine halts.
CompiledRun run_compiled(const CompiledMachine& cm, EncodedTape start,
                         unsigned long long sim_budget,
                         unsigned long long step_cap = 1ull << 62);

struct Accounting {
    unsigned long long multi_steps = 0;   // t' = min(budget, steps to halt)
    unsigned long long single_steps = 0;  // measured compiled transitions
    RunOutcome multi_outcome = RunOutcome::budget_exhausted;
    BigInt paper_bound;                   // t'^2 + t' (reported, not asserted)
    int cost_passes = 3;                  // construction constants behind the
    int cost_overhead = 8;                // scaled bound
    BigInt scaled_bound;                  // C (t'^2 + t') + C0 t'
    bool paper_bound_holds_scaled = false;
};

Accounting simulate_and_account(const CompiledMachine& cm, const MultiTapeMachine& m,
                                const std::vector<Sym>& input, unsigned long long budget);
Accounting simulate_and_account(const MultiTapeMachine& m, const std::vector<Sym>& input,
                                unsigned long long budget);

// Sidecar provenance text: track-tuple lines `SYM = (a,<mark>,b,<mark>,...)`
// (the mark slot holds a down arrow when the marker track is set), state
// descriptor lines, and enough header to re-encode raw input words.
std::string write_sidecar(const CompiledMachine& cm);

struct Sidecar {
    int k = 0;
    std::string blank;
    std::string start_marker;
    int cost_passes = 3;
    int cost_overhead = 8;
    std::vector<std::pair<std::string, std::vector<std::pair<std::string, bool>>>> symbols;
};

Sidecar parse_sidecar(std::string_view text);

// Builds the encoded initial tape of a raw word for a compiled machine loaded
// from disk, using the sidecar's tuple map.
EncodedTape sidecar_initial(const Sidecar& sc, const SingleTapeMachine& compiled,
                            std::string_view raw_input);

// Per-tape "left^right" views of a compiled tape, for display.
std::vector<std::string> sidecar_decode(const Sidecar& sc, const SingleTapeMachine& compiled,
                                        const Tape& tape);

}  // namespace grosstm
