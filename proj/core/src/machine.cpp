#include "grosstm/machine.hpp"

#include <algorithm>

namespace grosstm {

char move_letter(Move m) {
    switch (m) {
        case Move::left: return 'L';
        case Move::right: return 'R';
        case Move::none: return 'N';
    }
    return '?';
}

std::optional<Move> move_from_letter(char c) {
    switch (c) {
        case 'L': return Move::left;
        case 'R': return Move::right;
        case 'N': return Move::none;
        default: return std::nullopt;
    }
}

namespace {

int find_name(const std::vector<std::string>& names, std::string_view wanted) {
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i] == wanted) {
            return static_cast<int>(i);
        }
    }
    return -1;
}

}  // namespace

StateId SingleTapeMachine::add_state(const std::string& state_name) {
    if (int id = find_name(state_names, state_name); id >= 0) {
        return id;
    }
    state_names.push_back(state_name);
    final_states.push_back(false);
    delta.resize(state_names.size() * symbol_names.size());
    return static_cast<StateId>(state_names.size() - 1);
}

Sym SingleTapeMachine::add_symbol(const std::string& symbol_name) {
    if (int id = find_name(symbol_names, symbol_name); id >= 0) {
        return id;
    }
    if (!delta.empty()) {
        // Grow the dense table in place: rebuild with the new stride.
        std::vector<std::optional<Action>> wider(state_names.size() * (symbol_names.size() + 1));
        for (std::size_t q = 0; q < state_names.size(); ++q) {
            for (std::size_t s = 0; s < symbol_names.size(); ++s) {
                wider[q * (symbol_names.size() + 1) + s] = delta[q * symbol_names.size() + s];
            }
        }
        delta = std::move(wider);
    }
    symbol_names.push_back(symbol_name);
    if (delta.size() != state_names.size() * symbol_names.size()) {
        delta.resize(state_names.size() * symbol_names.size());
    }
    return static_cast<Sym>(symbol_names.size() - 1);
}

std::optional<StateId> SingleTapeMachine::find_state(std::string_view state_name) const {
    int id = find_name(state_names, state_name);
    return id >= 0 ? std::optional<StateId>(id) : std::nullopt;
}

std::optional<Sym> SingleTapeMachine::find_symbol(std::string_view symbol_name) const {
    int id = find_name(symbol_names, symbol_name);
    return id >= 0 ? std::optional<Sym>(id) : std::nullopt;
}

void SingleTapeMachine::set_rule(StateId q, Sym read, Action a) {
    delta.resize(state_names.size() * symbol_names.size());
    delta[static_cast<std::size_t>(q) * symbol_names.size() + static_cast<std::size_t>(read)] = a;
}

std::optional<SingleTapeMachine::Action> SingleTapeMachine::action(StateId q, Sym read) const {
    std::size_t index = static_cast<std::size_t>(q) * symbol_names.size() + static_cast<std::size_t>(read);
    if (index >= delta.size()) {
        return std::nullopt;
    }
    return delta[index];
}

StateId MultiTapeMachine::add_state(const std::string& state_name) {
    if (int id = find_name(state_names, state_name); id >= 0) {
        return id;
    }
    state_names.push_back(state_name);
    final_states.push_back(false);
    return static_cast<StateId>(state_names.size() - 1);
}

Sym MultiTapeMachine::add_symbol(const std::string& symbol_name) {
    if (int id = find_name(symbol_names, symbol_name); id >= 0) {
        return id;
    }
    symbol_names.push_back(symbol_name);
    return static_cast<Sym>(symbol_names.size() - 1);
}

std::optional<StateId> MultiTapeMachine::find_state(std::string_view state_name) const {
    int id = find_name(state_names, state_name);
    return id >= 0 ? std::optional<StateId>(id) : std::nullopt;
}

std::optional<Sym> MultiTapeMachine::find_symbol(std::string_view symbol_name) const {
    int id = find_name(symbol_names, symbol_name);
    return id >= 0 ? std::optional<Sym>(id) : std::nullopt;
}

void MultiTapeMachine::set_rule(StateId q, std::vector<Sym> reads, Action action) {
    delta[{q, std::move(reads)}] = std::move(action);
}

const MultiTapeMachine::Action* MultiTapeMachine::action(StateId q,
                                                         const std::vector<Sym>& reads) const {
    auto it = delta.find({q, reads});
    return it == delta.end() ? nullptr : &it->second;
}

bool MultiTapeMachine::tape_symbol_allowed(int tape, Sym s) const {
    if (s == blank) {
        return true;
    }
    if (s == start_marker) {
        return tape >= 1;  // Z0 belongs to tapes 2..k only
    }
    const auto& sigma = input_alphabets[static_cast<std::size_t>(tape)];
    return std::find(sigma.begin(), sigma.end(), s) != sigma.end();
}

namespace {

bool name_ok(const std::string& s, bool forbid_comma) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (c == '#' || c == '^' || std::isspace(static_cast<unsigned char>(c))) {
            return false;
        }
        if (forbid_comma && c == ',') {
            return false;
        }
    }
    return true;
}

}  // namespace

std::vector<Diagnostic> validate(const SingleTapeMachine& m) {
    std::vector<Diagnostic> out;
    auto complain = [&out](std::string msg) { out.push_back({std::move(msg)}); };

    if (m.state_names.empty()) {
        complain("machine has no states");
    }
    if (m.start < 0 || static_cast<std::size_t>(m.start) >= m.state_count()) {
        complain("start state is not a member of Q");
    }
    if (m.blank < 0 || static_cast<std::size_t>(m.blank) >= m.symbol_count()) {
        complain("blank symbol is not in the tape alphabet");
    }
    for (Sym s : m.input_alphabet) {
        if (s < 0 || static_cast<std::size_t>(s) >= m.symbol_count()) {
            complain("io symbol out of the tape alphabet");
        } else if (s == m.blank) {
            complain("io alphabet contains the blank");
        }
    }
    for (std::size_t i = 0; i < m.state_names.size(); ++i) {
        if (!name_ok(m.state_names[i], false)) {
            complain("state name '" + m.state_names[i] + "' contains a reserved character");
        }
    }
    for (std::size_t i = 0; i < m.symbol_names.size(); ++i) {
        if (!name_ok(m.symbol_names[i], false)) {
            complain("symbol name '" + m.symbol_names[i] + "' contains a reserved character");
        }
    }
    for (std::size_t q = 0; q < m.state_count(); ++q) {
        for (std::size_t s = 0; s < m.symbol_count(); ++s) {
            auto a = m.action(static_cast<StateId>(q), static_cast<Sym>(s));
            if (!a) {
                continue;
            }
            std::string where =
                "rule (" + m.state_names[q] + ", " + m.symbol_names[s] + "): ";
            if (m.is_final(static_cast<StateId>(q))) {
                complain(where + "transition defined on a final state");
            }
            if (a->next < 0 || static_cast<std::size_t>(a->next) >= m.state_count()) {
                complain(where + "next state out of Q");
            }
            if (a->write < 0 || static_cast<std::size_t>(a->write) >= m.symbol_count()) {
                complain(where + "written symbol out of the tape alphabet");
            }
        }
    }
    return out;
}

std::vector<Diagnostic> validate(const MultiTapeMachine& m) {
    std::vector<Diagnostic> out;
    auto complain = [&out](std::string msg) { out.push_back({std::move(msg)}); };
    std::size_t k = static_cast<std::size_t>(m.tape_count);

    if (m.tape_count < 2) {
        complain("a multi-tape machine needs k >= 2 tapes");
    }
    if (m.state_names.empty()) {
        complain("machine has no states");
    }
    if (m.start < 0 || static_cast<std::size_t>(m.start) >= m.state_count()) {
        complain("start state is not a member of Q");
    }
    if (m.blank < 0 || static_cast<std::size_t>(m.blank) >= m.symbol_count()) {
        complain("blank symbol is not in the alphabet");
    }
    if (m.start_marker < 0 || static_cast<std::size_t>(m.start_marker) >= m.symbol_count()) {
        complain("start marker is not in the alphabet");
    } else if (m.start_marker == m.blank) {
        complain("start marker must differ from the blank");
    }
    if (m.input_alphabets.size() != k) {
        complain("expected one io alphabet per tape");
    }
    for (std::size_t i = 0; i < m.input_alphabets.size(); ++i) {
        for (Sym s : m.input_alphabets[i]) {
            std::string where = "io alphabet of tape " + std::to_string(i + 1) + ": ";
            if (s < 0 || static_cast<std::size_t>(s) >= m.symbol_count()) {
                complain(where + "symbol out of the alphabet");
            } else if (s == m.blank) {
                complain(where + "contains the blank");
            } else if (s == m.start_marker) {
                complain(where + "contains the start marker");
            }
        }
    }
    for (const auto& name : m.state_names) {
        if (!name_ok(name, false)) {
            complain("state name '" + name + "' contains a reserved character");
        }
    }
    for (const auto& name : m.symbol_names) {
        if (!name_ok(name, true)) {
            complain("symbol name '" + name + "' contains a reserved character");
        }
    }
    for (const auto& [key, action] : m.delta) {
        const auto& [q, reads] = key;
        std::string where = "rule (" +
                            (q >= 0 && static_cast<std::size_t>(q) < m.state_count()
                                 ? m.state_names[static_cast<std::size_t>(q)]
                                 : std::string("?")) +
                            ", ...): ";
        if (q < 0 || static_cast<std::size_t>(q) >= m.state_count()) {
            complain(where + "state out of Q");
            continue;
        }
        if (m.is_final(q)) {
            complain(where + "transition defined on a final state");
        }
        if (reads.size() != k || action.write.size() != k || action.move.size() != k) {
            complain(where + "arity differs from the tape count");
            continue;
        }
        if (action.next < 0 || static_cast<std::size_t>(action.next) >= m.state_count()) {
            complain(where + "next state out of Q");
        }
        for (std::size_t i = 0; i < k; ++i) {
            if (!m.tape_symbol_allowed(static_cast<int>(i), reads[i])) {
                complain(where + "read symbol not in the alphabet of tape " + std::to_string(i + 1));
            }
            if (!m.tape_symbol_allowed(static_cast<int>(i), action.write[i])) {
                complain(where + "written symbol not in the alphabet of tape " +
                         std::to_string(i + 1));
            }
        }
    }
    return out;
}

}  // namespace grosstm
