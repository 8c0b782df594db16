#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "grosstm/errors.hpp"
#include "grosstm/gross_parse.hpp"
#include "grosstm/machine_dsl.hpp"
#include "grosstm/observe.hpp"

using namespace grosstm;

namespace {

const GrossNumber G = GrossNumber::grossone();

GrossNumber gp(const char* text) {
    return parse_gross(text);
}

MultiTapeMachine load(const char* name) {
    return std::get<MultiTapeMachine>(
        parse_machine_file(std::string(GROSSTM_CORPUS_DIR) + "/" + name));
}

}  // namespace

TEST_CASE("sequence lengths stop at G") {
    CHECK(sequence_length_ok(G));
    CHECK(!sequence_length_ok(gp("G + 1")));
    CHECK(sequence_length_ok(GrossNumber(3)));
    CHECK_THROWS_AS(sequence_length_ok(GrossNumber(0)), Error);
    CHECK_THROWS_AS(GrossSequence(GrossNumber(1), GrossNumber(1), gp("2*G")), Error);
}

TEST_CASE("completeness means exactly G elements") {
    CHECK(is_complete(GrossSequence(gp("4"), gp("4"), G)));
    CHECK(!is_complete(GrossSequence(gp("4"), gp("4"), gp("G/2 - 1"))));
    CHECK(is_complete(GrossSequence(gp("1"), gp("1"), G)));
}

TEST_CASE("last elements of the three 4n sequences") {
    CHECK(last_element(GrossSequence(gp("4"), gp("4"), G)) == gp("4*G"));
    CHECK(last_element(GrossSequence(gp("4"), gp("4"), gp("G/2 - 1"))) == gp("2*G - 4"));
    CHECK(last_element(GrossSequence(gp("4"), gp("4"), gp("2*G/3"))) == gp("8*G/3"));
    CHECK(last_element(GrossSequence(gp("1"), gp("2"), G)) == gp("2*G - 1"));
}

TEST_CASE("counting spans") {
    CHECK(counting_span(gp("1"), gp("1")) == G);
    CHECK(counting_span(gp("5"), gp("1")) == gp("G + 4"));
    CHECK(counting_span(gp("1"), gp("2")) == gp("2*G - 1"));
    CHECK_THROWS_AS(counting_span(gp("1"), gp("0")), Error);

    // span(s,1) - span(1,1) = s - 1 for finite starts
    for (long s : {2L, 5L, 17L, 1000L}) {
        GrossNumber diff = sub(counting_span(GrossNumber(s), gp("1")),
                               counting_span(gp("1"), gp("1")));
        CHECK(diff == GrossNumber(s - 1));
    }
}

TEST_CASE("the ten-numeral fixture observes exactly the listed members") {
    NumeralSystem ns = system_12G();
    REQUIRE(ns.expressible.has_value());
    CHECK(ns.expressible->size() == 10);

    std::vector<GrossNumber> seen = observable_elements(ns, GrossSequence(gp("1"), gp("1"), G));
    const char* expected[] = {"1",         "2",         "G/2 - 2", "G/2 - 1", "G/2",
                              "G/2 + 1",   "G/2 + 2",   "G - 2",   "G - 1",   "G"};
    REQUIRE(seen.size() == 10);
    for (std::size_t i = 0; i < seen.size(); ++i) {
        CAPTURE(expected[i]);
        CHECK(seen[i] == gp(expected[i]));
    }
}

TEST_CASE("observation through small explicit sets") {
    NumeralSystem tiny = NumeralSystem::explicit_set("tiny", {gp("1"), gp("2")});
    std::vector<GrossNumber> seen = observable_elements(tiny, GrossSequence(gp("1"), gp("1"), G));
    REQUIRE(seen.size() == 2);
    CHECK(seen[0] == gp("1"));
    CHECK(seen[1] == gp("2"));

    // shifted sequence {n + 10 : G} drops the finite numerals, keeps the
    // eight infinite ones (all <= G + 9)
    std::vector<GrossNumber> shifted =
        observable_elements(system_12G(), GrossSequence(gp("11"), gp("1"), G));
    REQUIRE(shifted.size() == 8);
    CHECK(shifted.front() == gp("G/2 - 2"));
    CHECK(shifted.back() == gp("G"));
}

TEST_CASE("the extended fixture also sees 2G-1") {
    NumeralSystem ext = system_12G_extended();
    CHECK(ext.expressible->size() == 11);
    std::vector<GrossNumber> seen =
        observable_elements(ext, GrossSequence(gp("1"), gp("2"), G));
    // {2n-1 : G} contains 1 and its last element 2G-1
    REQUIRE(seen.size() >= 2);
    CHECK(seen.front() == gp("1"));
    CHECK(seen.back() == gp("2*G - 1"));
    // 2 is expressible but not a member; G/2 is not a whole position here
    for (const GrossNumber& v : seen) {
        CHECK(v != gp("2"));
        CHECK(v != gp("G/2"));
    }
}

TEST_CASE("observable_elements rejects positional systems and odd memberships") {
    NumeralSystem pos = NumeralSystem::positional("dec", 10);
    CHECK_THROWS_AS(observable_elements(pos, GrossSequence(gp("1"), gp("1"), G)), Error);

    // fractional positions are simply not members
    NumeralSystem halves = NumeralSystem::explicit_set("halves", {gp("3/2"), gp("2")});
    std::vector<GrossNumber> seen =
        observable_elements(halves, GrossSequence(gp("1"), gp("1"), G));
    REQUIRE(seen.size() == 1);
    CHECK(seen[0] == gp("2"));
}

TEST_CASE("positional numeral counting") {
    CHECK(count_positional(10, IntervalKind::half_open) == gp("10^G"));
    CHECK(count_positional(10, IntervalKind::open) == gp("10^G - 1"));
    CHECK(count_positional(2, IntervalKind::integers) == gp("2^G"));
    CHECK(count_positional(10, IntervalKind::integers) == gp("10^G"));
    CHECK_THROWS_AS(count_positional(1, IntervalKind::half_open), Error);

    // the half-open/open difference is exactly the one excluded point
    for (unsigned long b : {2ul, 3ul, 10ul}) {
        GrossNumber diff = sub(count_positional(b, IntervalKind::half_open),
                               count_positional(b, IntervalKind::open));
        CHECK(diff == GrossNumber(1));
    }
}

TEST_CASE("complete outputs") {
    CHECK(complete_output_size(2) == gp("2*G"));
    CHECK(complete_output_size(3) == gp("3*G"));
    CHECK(complete_output_size(10) == gp("10*G"));
    // k = 1 degenerates to a single complete sequence
    CHECK(complete_output_size(1) == G);
    // linearity in k
    for (unsigned long k : {2ul, 3ul, 7ul}) {
        CHECK(complete_output_size(k) == mul(GrossNumber(static_cast<long>(k)), G));
    }

    CHECK(count_complete_outputs({1, 2}) == gp("6^G"));
    CHECK(count_complete_outputs({1, 1}) == gp("4^G"));
    CHECK(compare(count_complete_outputs({1, 2}), gp("G^3")) == Ordering::greater);
    // always larger than G
    for (auto sizes : {std::vector<unsigned long>{1, 1}, {2, 2}, {1, 2, 3}}) {
        CHECK(compare(count_complete_outputs(sizes), G) == Ordering::greater);
    }
}

TEST_CASE("observation budgets partition G") {
    auto per4 = observation_budget(4, BudgetPolicy::per_tape);
    REQUIRE(per4.size() == 4);
    for (const auto& share : per4) {
        CHECK(share == gp("G/4"));
    }

    auto single3 = observation_budget(3, BudgetPolicy::single_tape);
    CHECK(single3 == std::vector<GrossNumber>{G, GrossNumber(0), GrossNumber(0)});

    auto two5 = observation_budget(5, BudgetPolicy::two_tapes);
    CHECK(two5[0] == gp("G/2"));
    CHECK(two5[1] == gp("G/2"));
    CHECK(two5[2] == GrossNumber(0));

    for (unsigned long k : {2ul, 3ul, 5ul}) {
        for (auto policy :
             {BudgetPolicy::single_tape, BudgetPolicy::per_tape, BudgetPolicy::two_tapes}) {
            GrossNumber total(0);
            for (const auto& share : observation_budget(k, policy)) {
                total = add(total, share);
            }
            CHECK(total == G);
        }
    }
}

TEST_CASE("observable simulation step bound") {
    CHECK(observable_simulation_steps(GrossNumber(10)));
    CHECK(observable_simulation_steps(GrossNumber(1'000'000)));
    CHECK(!observable_simulation_steps(gp("G/2")));
    CHECK(!observable_simulation_steps(G));
    CHECK(!observable_simulation_steps(gp("G^2")));
    CHECK_THROWS_AS(observable_simulation_steps(GrossNumber(-1)), Error);

    // monotone: once true, true for everything smaller
    bool larger = observable_simulation_steps(GrossNumber(1'000'000));
    for (long t : {100'000L, 1'000L, 10L, 0L}) {
        bool smaller = observable_simulation_steps(GrossNumber(t));
        CHECK((smaller || !larger));
        larger = smaller;
    }
}

TEST_CASE("machine observability reports") {
    MultiTapeMachine pal2 = load("pal2.tm");
    ObservabilityReport r = machine_observability_report(pal2, 10);
    CHECK(r.k == 2);
    CHECK(r.tape_alphabet_sizes == std::vector<std::size_t>{2, 2});
    CHECK(r.complete_output_size == gp("2*G"));
    CHECK(r.complete_outputs == gp("9^G"));
    CHECK(r.decodable);
    CHECK(r.max_tape_radix == 2);

    CHECK_THROWS_AS(machine_observability_report(pal2, 1), Error);

    MultiTapeMachine copy3 = load("copy3.tm");
    copy3.input_alphabets = {{*copy3.find_symbol("a")},
                             {*copy3.find_symbol("a")},
                             {*copy3.find_symbol("a")}};
    ObservabilityReport r3 = machine_observability_report(copy3, 2);
    CHECK(r3.complete_output_size == gp("3*G"));
    CHECK(r3.complete_outputs == gp("8^G"));
    CHECK(r3.decodable);

    // u below the tape radix flags decodability failure
    ObservabilityReport weak = machine_observability_report(load("pal2.tm"), 2);
    CHECK(weak.decodable);  // b = 2, u = 2 is still enough
    MultiTapeMachine wide = load("pal2.tm");
    wide.input_alphabets[0].push_back(wide.add_symbol("c"));
    ObservabilityReport fails = machine_observability_report(wide, 2);
    CHECK(!fails.decodable);
}

TEST_CASE("report text is key: value lines in canonical format") {
    MultiTapeMachine pal2 = load("pal2.tm");
    ObservabilityReport r = machine_observability_report(pal2, 10);
    std::string text = render_report(r);
    CHECK(text.find("complete_output_size: 2*G\n") != std::string::npos);
    CHECK(text.find("complete_outputs: 9^G\n") != std::string::npos);
    CHECK(text.find("budget_tape_1: 1/2*G\n") != std::string::npos);
    CHECK(text.find("decodable: yes\n") != std::string::npos);
}

TEST_CASE("complete sequences satisfy the last-element identity") {
    for (const char* first : {"1", "4", "5"}) {
        for (const char* stepv : {"1", "2", "4"}) {
            GrossSequence s(gp(first), gp(stepv), G);
            REQUIRE(is_complete(s));
            CHECK(last_element(s) ==
                  add(gp(first), mul(sub(G, GrossNumber(1)), gp(stepv))));
        }
    }
}
