#include "grosstm/observe.hpp"

#include "grosstm/errors.hpp"

#include <algorithm>
#include <sstream>

namespace grosstm {

namespace {

const GrossNumber& G() {
    static const GrossNumber g = GrossNumber::grossone();
    return g;
}

// Positive whole position: no infinitesimal part, integer finite part.
// Coefficients of infinite monomials may be any rational (G/2, 2G/3, ...
// count whole elements).
bool is_whole_position(const GrossNumber& n) {
    Decomposition d = classify(n);
    if (!d.infinitesimal_part.is_zero()) {
        return false;
    }
    auto fin = d.finite_part.as_rational();
    return fin && is_integer(*fin);
}

}  // namespace

GrossSequence::GrossSequence(GrossNumber first_, GrossNumber step_, GrossNumber count_)
    : first(std::move(first_)), step(std::move(step_)), count(std::move(count_)) {
    if (step.is_zero()) {
        throw Error("sequence step must be nonzero");
    }
    if (compare(count, GrossNumber(0)) != Ordering::greater) {
        throw Error("sequence count must be positive");
    }
    if (!sequence_length_ok(count)) {
        throw Error("no sequence has more than G elements");
    }
}

bool sequence_length_ok(const GrossNumber& count) {
    if (compare(count, GrossNumber(0)) != Ordering::greater) {
        throw Error("sequence count must be positive");
    }
    return compare(count, G()) != Ordering::greater;
}

bool is_complete(const GrossSequence& s) {
    return s.count == G();
}

GrossNumber last_element(const GrossSequence& s) {
    return add(s.first, mul(sub(s.count, GrossNumber(1)), s.step));
}

GrossNumber counting_span(const GrossNumber& start, const GrossNumber& stride) {
    if (compare(stride, GrossNumber(0)) != Ordering::greater) {
        throw Error("counting stride must be positive");
    }
    return last_element(GrossSequence(start, stride, G()));
}

NumeralSystem NumeralSystem::explicit_set(std::string name, std::vector<GrossNumber> numerals) {
    std::sort(numerals.begin(), numerals.end(),
              [](const GrossNumber& a, const GrossNumber& b) { return a < b; });
    numerals.erase(std::unique(numerals.begin(), numerals.end()), numerals.end());
    return NumeralSystem{std::move(name), std::move(numerals), std::nullopt};
}

NumeralSystem NumeralSystem::positional(std::string name, unsigned long radix) {
    if (radix < 2) {
        throw Error("positional numeral systems need radix >= 2");
    }
    return NumeralSystem{std::move(name), std::nullopt, radix};
}

NumeralSystem system_12G() {
    const GrossNumber half = div(G(), GrossNumber(2));
    std::vector<GrossNumber> numerals{
        GrossNumber(1),
        GrossNumber(2),
        sub(half, GrossNumber(2)),
        sub(half, GrossNumber(1)),
        half,
        add(half, GrossNumber(1)),
        add(half, GrossNumber(2)),
        sub(G(), GrossNumber(2)),
        sub(G(), GrossNumber(1)),
        G(),
    };
    return NumeralSystem::explicit_set("12G", std::move(numerals));
}

NumeralSystem system_12G_extended() {
    NumeralSystem base = system_12G();
    base.expressible->push_back(sub(mul(GrossNumber(2), G()), GrossNumber(1)));
    return NumeralSystem::explicit_set("12G-ext", std::move(*base.expressible));
}

std::vector<GrossNumber> observable_elements(const NumeralSystem& ns, const GrossSequence& s) {
    if (!ns.expressible) {
        throw Error("observable_elements needs an explicit numeral set");
    }
    struct Hit {
        GrossNumber index;
        GrossNumber value;
    };
    std::vector<Hit> hits;
    for (const GrossNumber& v : *ns.expressible) {
        GrossNumber n = add(div(sub(v, s.first), s.step), GrossNumber(1));
        if (!is_whole_position(n)) {
            continue;
        }
        if (compare(n, GrossNumber(1)) == Ordering::less ||
            compare(n, s.count) == Ordering::greater) {
            continue;
        }
        hits.push_back(Hit{std::move(n), v});
    }
    std::sort(hits.begin(), hits.end(),
              [](const Hit& a, const Hit& b) { return a.index < b.index; });
    std::vector<GrossNumber> out;
    out.reserve(hits.size());
    for (Hit& h : hits) {
        out.push_back(std::move(h.value));
    }
    return out;
}

GrossNumber count_positional(unsigned long radix, IntervalKind kind) {
    if (radix < 2) {
        throw Error("count_positional needs radix >= 2");
    }
    GrossNumber base_count = pow(GrossNumber(static_cast<long>(radix)), G());
    if (kind == IntervalKind::open) {
        return sub(base_count, GrossNumber(1));
    }
    return base_count;
}

GrossNumber complete_output_size(unsigned long k) {
    if (k < 1) {
        throw Error("complete_output_size needs k >= 1");
    }
    return mul(GrossNumber(static_cast<long>(k)), G());
}

GrossNumber count_complete_outputs(const std::vector<unsigned long>& alphabet_sizes) {
    if (alphabet_sizes.empty()) {
        throw Error("count_complete_outputs needs at least one tape");
    }
    GrossNumber out(1);
    for (unsigned long b : alphabet_sizes) {
        if (b < 1) {
            throw Error("tape alphabets must have at least one symbol");
        }
        out = mul(out, pow(GrossNumber(static_cast<long>(b + 1)), G()));
    }
    return out;
}

const char* budget_policy_name(BudgetPolicy p) {
    switch (p) {
        case BudgetPolicy::single_tape: return "single-tape";
        case BudgetPolicy::per_tape: return "per-tape";
        case BudgetPolicy::two_tapes: return "two-tapes";
    }
    return "?";
}

std::vector<GrossNumber> observation_budget(unsigned long k, BudgetPolicy policy) {
    if (k < 2) {
        throw Error("observation budgets are defined for k >= 2");
    }
    std::vector<GrossNumber> out(k, GrossNumber(0));
    switch (policy) {
        case BudgetPolicy::single_tape:
            out[0] = G();
            break;
        case BudgetPolicy::per_tape: {
            GrossNumber share = div(G(), GrossNumber(static_cast<long>(k)));
            std::fill(out.begin(), out.end(), share);
            break;
        }
        case BudgetPolicy::two_tapes: {
            GrossNumber half = div(G(), GrossNumber(2));
            out[0] = half;
            out[1] = half;
            break;
        }
    }
    return out;
}

bool observable_simulation_steps(const GrossNumber& t) {
    if (compare(t, GrossNumber(0)) == Ordering::less) {
        throw Error("step counts are non-negative");
    }
    GrossNumber needed = add(mul(t, t), t);
    return compare(needed, G()) != Ordering::greater;
}

ObservabilityReport machine_observability_report(const MultiTapeMachine& m,
                                                 unsigned long user_radix, BudgetPolicy policy) {
    if (user_radix < 2) {
        throw Error("the user numeral system needs radix u >= 2");
    }
    ObservabilityReport r;
    r.machine_name = m.name;
    r.k = m.tape_count;
    std::vector<unsigned long> sizes;
    for (const auto& sigma : m.input_alphabets) {
        r.tape_alphabet_sizes.push_back(sigma.size());
        sizes.push_back(sigma.size());
        r.max_tape_radix = std::max(r.max_tape_radix, sigma.size());
    }
    r.complete_output_size = complete_output_size(static_cast<unsigned long>(m.tape_count));
    r.complete_outputs = count_complete_outputs(sizes);
    r.policy = policy;
    r.budget = observation_budget(static_cast<unsigned long>(m.tape_count), policy);
    r.user_radix = user_radix;
    r.decodable = user_radix >= r.max_tape_radix;
    return r;
}

std::string render_report(const ObservabilityReport& r) {
    std::ostringstream out;
    out << "machine: " << r.machine_name << "\n";
    out << "tapes: " << r.k << "\n";
    out << "tape_alphabet_sizes:";
    for (std::size_t b : r.tape_alphabet_sizes) {
        out << ' ' << b;
    }
    out << "\n";
    out << "complete_output_size: " << format_gross(r.complete_output_size) << "\n";
    out << "complete_outputs: " << format_gross(r.complete_outputs) << "\n";
    out << "budget_policy: " << budget_policy_name(r.policy) << "\n";
    for (std::size_t i = 0; i < r.budget.size(); ++i) {
        out << "budget_tape_" << (i + 1) << ": " << format_gross(r.budget[i]) << "\n";
    }
    out << "user_radix: " << r.user_radix << "\n";
    out << "max_tape_radix: " << r.max_tape_radix << "\n";
    out << "decodable: " << (r.decodable ? "yes" : "no") << "\n";
    out << "observable_steps_condition: t^2 + t <= G\n";
    if (r.steps) {
        out << "steps_requested: " << r.steps->requested << "\n";
        out << "paper_bound: " << r.steps->paper_bound.str() << "\n";
        out << "observable_in_sequence: " << (r.steps->observable ? "yes" : "no") << "\n";
        if (r.steps->measured) {
            const Accounting& a = *r.steps->measured;
            out << "multi_steps: " << a.multi_steps << "\n";
            out << "measured_single_steps: " << a.single_steps << "\n";
            out << "cost_constants: C=" << a.cost_passes << " C0=" << a.cost_overhead << "\n";
            out << "scaled_bound: " << a.scaled_bound.str() << "\n";
            out << "scaled_bound_holds: " << (a.paper_bound_holds_scaled ? "yes" : "no") << "\n";
        }
    }
    return out.str();
}

}  // namespace grosstm
