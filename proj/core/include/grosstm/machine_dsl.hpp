#pragma once

#include "grosstm/machine.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

namespace grosstm {

// Line-oriented machine files, '#' starts a comment:
//   machine NAME
//   tapes K
//   blank _
//   startmark >                  (k >= 2)
//   tapemode two-way|semi-infinite   (k = 1; default two-way)
//   start STATE
//   final S1 [S2 ...]
//   input I SYM...               (io alphabet of tape I)
//   rule STATE R1,...,RK -> STATE W1,...,WK M1,...,MK
// Symbols are single non-whitespace tokens; '_' is the blank, '>' the start
// marker. For k = 1 the read/write/move fields are single tokens (no comma
// splitting), so compiled composite symbols may contain commas.
using ParsedMachine = std::variant<SingleTapeMachine, MultiTapeMachine>;

ParsedMachine parse_machine(std::string_view text);
ParsedMachine parse_machine_file(const std::string& path);

std::string serialize_machine(const SingleTapeMachine& m);
std::string serialize_machine(const MultiTapeMachine& m);

}  // namespace grosstm
