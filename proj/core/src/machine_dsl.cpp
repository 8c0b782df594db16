#include "grosstm/machine_dsl.hpp"

#include "grosstm/errors.hpp"

#include <fstream>
#include <sstream>

namespace grosstm {

namespace {

struct RawRule {
    std::size_t line;
    std::string state;
    std::vector<std::string> reads;
    std::string next;
    std::vector<std::string> writes;
    std::vector<std::string> moves;
};

struct RawMachine {
    std::string name = "machine";
    int tapes = -1;
    std::string blank = "_";
    std::string startmark = ">";
    std::string tapemode;
    std::string start;
    std::size_t start_line = 0;
    std::vector<std::string> finals;
    std::vector<std::pair<std::size_t, std::vector<std::string>>> inputs;  // per line: [tape, syms...]
    std::vector<RawRule> rules;
};

std::vector<std::string> split_ws(std::string_view line) {
    std::vector<std::string> out;
    std::istringstream in{std::string(line)};
    std::string tok;
    while (in >> tok) {
        out.push_back(tok);
    }
    return out;
}

std::vector<std::string> split_commas(const std::string& field, int k) {
    if (k == 1) {
        return {field};
    }
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = field.find(',', pos);
        if (comma == std::string::npos) {
            out.push_back(field.substr(pos));
            break;
        }
        out.push_back(field.substr(pos, comma - pos));
        pos = comma + 1;
    }
    return out;
}

RawMachine scan(std::string_view text) {
    RawMachine raw;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    bool saw_tapes = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::vector<std::string> tok = split_ws(line);
        if (tok.empty()) {
            continue;
        }
        const std::string& head = tok[0];
        auto need = [&](std::size_t n) {
            if (tok.size() != n + 1) {
                throw SyntaxError("'" + head + "' expects " + std::to_string(n) + " argument(s)",
                                  line_no);
            }
        };
        if (head == "machine") {
            need(1);
            raw.name = tok[1];
        } else if (head == "tapes") {
            need(1);
            try {
                raw.tapes = std::stoi(tok[1]);
            } catch (...) {
                throw SyntaxError("bad tape count '" + tok[1] + "'", line_no);
            }
            if (raw.tapes < 1) {
                throw SyntaxError("tape count must be at least 1", line_no);
            }
            saw_tapes = true;
        } else if (head == "blank") {
            need(1);
            raw.blank = tok[1];
        } else if (head == "startmark") {
            need(1);
            raw.startmark = tok[1];
        } else if (head == "tapemode") {
            need(1);
            raw.tapemode = tok[1];
        } else if (head == "start") {
            need(1);
            raw.start = tok[1];
            raw.start_line = line_no;
        } else if (head == "final") {
            raw.finals.insert(raw.finals.end(), tok.begin() + 1, tok.end());
        } else if (head == "input") {
            if (tok.size() < 2) {
                throw SyntaxError("'input' expects a tape index", line_no);
            }
            raw.inputs.emplace_back(line_no, std::vector<std::string>(tok.begin() + 1, tok.end()));
        } else if (head == "rule") {
            if (tok.size() != 7 || tok[3] != "->") {
                throw SyntaxError("rule syntax: rule STATE READS -> STATE WRITES MOVES", line_no);
            }
            RawRule r;
            r.line = line_no;
            r.state = tok[1];
            r.next = tok[4];
            if (!saw_tapes) {
                throw SyntaxError("'tapes' must appear before any rule", line_no);
            }
            r.reads = split_commas(tok[2], raw.tapes);
            r.writes = split_commas(tok[5], raw.tapes);
            r.moves = split_commas(tok[6], raw.tapes);
            raw.rules.push_back(std::move(r));
        } else {
            throw SyntaxError("unknown directive '" + head + "'", line_no);
        }
    }
    if (!saw_tapes) {
        throw SyntaxError("missing 'tapes' directive", 0);
    }
    if (raw.start.empty()) {
        throw SyntaxError("missing 'start' directive", 0);
    }
    return raw;
}

std::vector<Move> to_moves(const std::vector<std::string>& fields, std::size_t line) {
    std::vector<Move> out;
    for (const std::string& f : fields) {
        if (f.size() != 1) {
            throw SyntaxError("move must be one of L, R, N", line);
        }
        auto m = move_from_letter(f[0]);
        if (!m) {
            throw SyntaxError("move must be one of L, R, N", line);
        }
        out.push_back(*m);
    }
    return out;
}

SingleTapeMachine build_single(const RawMachine& raw) {
    SingleTapeMachine m;
    m.name = raw.name;
    if (raw.tapemode.empty() || raw.tapemode == "two-way") {
        m.tape_mode = TapeMode::two_way_infinite;
    } else if (raw.tapemode == "semi-infinite") {
        m.tape_mode = TapeMode::semi_infinite;
    } else {
        throw SyntaxError("tapemode must be 'two-way' or 'semi-infinite'", 0);
    }
    m.blank = m.add_symbol(raw.blank);
    m.start = m.add_state(raw.start);
    for (const std::string& f : raw.finals) {
        StateId q = m.add_state(f);
        m.final_states[static_cast<std::size_t>(q)] = true;
    }
    for (const auto& [line, fields] : raw.inputs) {
        if (fields.size() < 1 || fields[0] != "1") {
            throw SyntaxError("single-tape machines take 'input 1 SYM...'", line);
        }
        for (std::size_t i = 1; i < fields.size(); ++i) {
            m.input_alphabet.push_back(m.add_symbol(fields[i]));
        }
    }
    // Work symbols may appear only in rules; intern everything first so the
    // dense table has its final stride.
    for (const RawRule& r : raw.rules) {
        m.add_state(r.state);
        m.add_state(r.next);
        m.add_symbol(r.reads[0]);
        m.add_symbol(r.writes[0]);
    }
    for (const RawRule& r : raw.rules) {
        StateId q = *m.find_state(r.state);
        Sym read = *m.find_symbol(r.reads[0]);
        if (m.action(q, read)) {
            throw SyntaxError("duplicate rule for (" + r.state + ", " + r.reads[0] + ")", r.line);
        }
        std::vector<Move> moves = to_moves(r.moves, r.line);
        m.set_rule(q, read,
                   SingleTapeMachine::Action{*m.find_state(r.next), *m.find_symbol(r.writes[0]),
                                             moves[0]});
    }
    return m;
}

MultiTapeMachine build_multi(const RawMachine& raw) {
    MultiTapeMachine m;
    m.name = raw.name;
    m.tape_count = raw.tapes;
    if (!raw.tapemode.empty()) {
        throw SyntaxError("tapemode applies to single-tape machines only", 0);
    }
    m.blank = m.add_symbol(raw.blank);
    m.start_marker = m.add_symbol(raw.startmark);
    m.start = m.add_state(raw.start);
    for (const std::string& f : raw.finals) {
        StateId q = m.add_state(f);
        m.final_states[static_cast<std::size_t>(q)] = true;
    }
    m.input_alphabets.resize(static_cast<std::size_t>(raw.tapes));
    for (const auto& [line, fields] : raw.inputs) {
        int tape = 0;
        try {
            tape = std::stoi(fields.at(0));
        } catch (...) {
            throw SyntaxError("bad tape index '" + fields.at(0) + "'", line);
        }
        if (tape < 1 || tape > raw.tapes) {
            throw SyntaxError("tape index out of range", line);
        }
        for (std::size_t i = 1; i < fields.size(); ++i) {
            m.input_alphabets[static_cast<std::size_t>(tape - 1)].push_back(
                m.add_symbol(fields[i]));
        }
    }
    std::size_t k = static_cast<std::size_t>(raw.tapes);
    for (const RawRule& r : raw.rules) {
        if (r.reads.size() != k || r.writes.size() != k || r.moves.size() != k) {
            throw SyntaxError("rule arity differs from the tape count", r.line);
        }
        StateId q = m.add_state(r.state);
        StateId next = m.add_state(r.next);
        std::vector<Sym> reads, writes;
        for (const std::string& s : r.reads) {
            reads.push_back(m.add_symbol(s));
        }
        for (const std::string& s : r.writes) {
            writes.push_back(m.add_symbol(s));
        }
        if (m.action(q, reads)) {
            throw SyntaxError("duplicate rule for (" + r.state + ", " + r.reads[0] + ", ...)",
                              r.line);
        }
        m.set_rule(q, std::move(reads),
                   MultiTapeMachine::Action{next, std::move(writes), to_moves(r.moves, r.line)});
    }
    return m;
}

std::string join_names(const std::vector<std::string>& names, const std::vector<Sym>& ids,
                       char sep) {
    std::string out;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i > 0) {
            out += sep;
        }
        out += names[static_cast<std::size_t>(ids[i])];
    }
    return out;
}

}  // namespace

ParsedMachine parse_machine(std::string_view text) {
    RawMachine raw = scan(text);
    if (raw.tapes == 1) {
        return build_single(raw);
    }
    return build_multi(raw);
}

ParsedMachine parse_machine_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open machine file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_machine(buffer.str());
}

std::string serialize_machine(const SingleTapeMachine& m) {
    std::ostringstream out;
    out << "machine " << m.name << "\n";
    out << "tapes 1\n";
    out << "blank " << m.symbol_names[static_cast<std::size_t>(m.blank)] << "\n";
    if (m.tape_mode == TapeMode::semi_infinite) {
        out << "tapemode semi-infinite\n";
    }
    out << "start " << m.state_names[static_cast<std::size_t>(m.start)] << "\n";
    std::string finals;
    for (std::size_t q = 0; q < m.state_count(); ++q) {
        if (m.final_states[q]) {
            finals += ' ' + m.state_names[q];
        }
    }
    if (!finals.empty()) {
        out << "final" << finals << "\n";
    }
    if (!m.input_alphabet.empty()) {
        out << "input 1 " << join_names(m.symbol_names, m.input_alphabet, ' ') << "\n";
    }
    for (std::size_t q = 0; q < m.state_count(); ++q) {
        for (std::size_t s = 0; s < m.symbol_count(); ++s) {
            auto a = m.action(static_cast<StateId>(q), static_cast<Sym>(s));
            if (!a) {
                continue;
            }
            out << "rule " << m.state_names[q] << ' ' << m.symbol_names[s] << " -> "
                << m.state_names[static_cast<std::size_t>(a->next)] << ' '
                << m.symbol_names[static_cast<std::size_t>(a->write)] << ' '
                << move_letter(a->move) << "\n";
        }
    }
    return out.str();
}

std::string serialize_machine(const MultiTapeMachine& m) {
    std::ostringstream out;
    out << "machine " << m.name << "\n";
    out << "tapes " << m.tape_count << "\n";
    out << "blank " << m.symbol_names[static_cast<std::size_t>(m.blank)] << "\n";
    out << "startmark " << m.symbol_names[static_cast<std::size_t>(m.start_marker)] << "\n";
    out << "start " << m.state_names[static_cast<std::size_t>(m.start)] << "\n";
    std::string finals;
    for (std::size_t q = 0; q < m.state_count(); ++q) {
        if (m.final_states[q]) {
            finals += ' ' + m.state_names[q];
        }
    }
    if (!finals.empty()) {
        out << "final" << finals << "\n";
    }
    for (std::size_t i = 0; i < m.input_alphabets.size(); ++i) {
        if (!m.input_alphabets[i].empty()) {
            out << "input " << (i + 1) << ' ' << join_names(m.symbol_names, m.input_alphabets[i], ' ')
                << "\n";
        }
    }
    for (const auto& [key, a] : m.delta) {
        out << "rule " << m.state_names[static_cast<std::size_t>(key.first)] << ' '
            << join_names(m.symbol_names, key.second, ',') << " -> "
            << m.state_names[static_cast<std::size_t>(a.next)] << ' '
            << join_names(m.symbol_names, a.write, ',') << ' ';
        for (std::size_t i = 0; i < a.move.size(); ++i) {
            if (i > 0) {
                out << ',';
            }
            out << move_letter(a.move[i]);
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace grosstm
