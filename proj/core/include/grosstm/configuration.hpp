#pragma once

#include "grosstm/machine.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace grosstm {

// One tape of a machine snapshot in the q#a^b notation: `left` is the content
// strictly left of the head starting at the leftmost non-blank cell, `right`
// starts at the head and ends at the rightmost non-blank cell (never empty,
// padded with the blank on demand).
struct TapeContent {
    std::vector<Sym> left;
    std::vector<Sym> right;

    bool operator==(const TapeContent&) const = default;
};

struct Configuration {
    StateId state = -1;
    std::vector<TapeContent> tapes;

    bool operator==(const Configuration&) const = default;
};

// Greedy longest-match tokenization of a word over the given symbols.
std::vector<Sym> tokenize_word(const std::vector<std::string>& symbol_names,
                               const std::vector<Sym>& allowed, std::string_view text);

// Input word over the io alphabet of tape 1; throws InputSymbolOutOfAlphabet.
std::vector<Sym> tokenize_input(const SingleTapeMachine& m, std::string_view text);
std::vector<Sym> tokenize_input(const MultiTapeMachine& m, std::string_view text);

// State q0, empty left parts, tape 1 holding the input (or the blank when
// empty) and every other tape holding the start marker.
Configuration initial_configuration(const MultiTapeMachine& m, const std::vector<Sym>& input);
Configuration initial_configuration(const SingleTapeMachine& m, const std::vector<Sym>& input);

TapeContent normalized_tape(std::vector<Sym> left, std::vector<Sym> right, Sym blank);

// q#a1^b1#a2^b2#...#ak^bk with '^' marking the head position.
std::string render(const Configuration& c, const SingleTapeMachine& m);
std::string render(const Configuration& c, const MultiTapeMachine& m);

// Inverse of render (up to normalization); throws SyntaxError.
Configuration parse_configuration(std::string_view text, const SingleTapeMachine& m);
Configuration parse_configuration(std::string_view text, const MultiTapeMachine& m);

}  // namespace grosstm
