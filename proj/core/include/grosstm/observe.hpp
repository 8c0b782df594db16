#pragma once

#include "grosstm/compile.hpp"
#include "grosstm/gross_number.hpp"
#include "grosstm/machine.hpp"

#include <optional>
#include <string>
#include <vector>

namespace grosstm {

// Arithmetic record {first + (n-1)*step : n = 1..count}. Infinite sequences
// carry at most G elements; a sequence with count = G is complete.
struct GrossSequence {
    GrossNumber first;
    GrossNumber step;
    GrossNumber count;

    GrossSequence(GrossNumber first, GrossNumber step, GrossNumber count);
};

// count > 0 required; true iff count <= G.
bool sequence_length_ok(const GrossNumber& count);

bool is_complete(const GrossSequence& s);

// first + (count - 1) * step, exact.
GrossNumber last_element(const GrossSequence& s);

// Last element of the complete counting sequence {start + (n-1)*stride : G}.
GrossNumber counting_span(const GrossNumber& start, const GrossNumber& stride);

// A set of numerals through which sequences are observed: either an explicit
// finite set of gross-numbers or a positional family with radix u >= 2.
struct NumeralSystem {
    std::string name;
    std::optional<std::vector<GrossNumber>> expressible;
    std::optional<unsigned long> radix;

    static NumeralSystem explicit_set(std::string name, std::vector<GrossNumber> numerals);
    static NumeralSystem positional(std::string name, unsigned long radix);
};

// The ten-numeral fixture built from 1, 2 and G (the composites G/2-2 ..
// G/2+2 and G-2 .. G), and the same fixture extended with 2G-1.
NumeralSystem system_12G();
NumeralSystem system_12G_extended();

// Members of the sequence expressible in the system, in sequence order. The
// membership index is solved exactly: n = (v - first)/step + 1 must be a
// positive whole position <= count. Requires an explicit numeral set.
std::vector<GrossNumber> observable_elements(const NumeralSystem& ns, const GrossSequence& s);

enum class IntervalKind { half_open, open, integers };

// Numerals with at most G digits in radix b: b^G over [0,1) and over the
// integers, b^G - 1 over (0,1).
GrossNumber count_positional(unsigned long radix, IntervalKind kind);

// k*G symbols. Stated for k >= 2; k = 1 is the degenerate single-sequence
// value G.
GrossNumber complete_output_size(unsigned long k);

// prod (b_i + 1)^G, computed through the base-multiply rule.
GrossNumber count_complete_outputs(const std::vector<unsigned long>& alphabet_sizes);

enum class BudgetPolicy { single_tape, per_tape, two_tapes };

const char* budget_policy_name(BudgetPolicy p);

// Partition of the at-most-G sequential observations across k tapes; the
// allocations always sum to G.
std::vector<GrossNumber> observation_budget(unsigned long k, BudgetPolicy policy);

// true iff t^2 + t <= G (the radical bound in its equivalent quadratic form).
bool observable_simulation_steps(const GrossNumber& t);

struct StepsAnalysis {
    unsigned long long requested = 0;
    BigInt paper_bound;  // t^2 + t at the requested t
    bool observable = false;
    std::optional<Accounting> measured;
};

struct ObservabilityReport {
    std::string machine_name;
    int k = 0;
    std::vector<std::size_t> tape_alphabet_sizes;
    GrossNumber complete_output_size;
    GrossNumber complete_outputs;
    BudgetPolicy policy = BudgetPolicy::per_tape;
    std::vector<GrossNumber> budget;
    unsigned long user_radix = 0;
    std::size_t max_tape_radix = 0;
    bool decodable = false;  // u >= b
    std::optional<StepsAnalysis> steps;
};

// Assembles the report; throws Error when user_radix < 2.
ObservabilityReport machine_observability_report(const MultiTapeMachine& m,
                                                 unsigned long user_radix,
                                                 BudgetPolicy policy = BudgetPolicy::per_tape);

// Plain `key: value` lines, gross values in canonical format.
std::string render_report(const ObservabilityReport& r);

}  // namespace grosstm
