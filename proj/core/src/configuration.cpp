#include "grosstm/configuration.hpp"

#include "grosstm/errors.hpp"

#include <algorithm>

namespace grosstm {

namespace {

// Longest-name-first match so multi-character symbols win over prefixes.
std::vector<Sym> by_length(const std::vector<std::string>& names, const std::vector<Sym>& allowed) {
    std::vector<Sym> order = allowed;
    std::stable_sort(order.begin(), order.end(), [&names](Sym a, Sym b) {
        return names[static_cast<std::size_t>(a)].size() > names[static_cast<std::size_t>(b)].size();
    });
    return order;
}

std::vector<Sym> tokenize_or_throw(const std::vector<std::string>& names,
                                   const std::vector<Sym>& allowed, std::string_view text,
                                   bool input_error) {
    std::vector<Sym> order = by_length(names, allowed);
    std::vector<Sym> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        bool matched = false;
        for (Sym s : order) {
            const std::string& name = names[static_cast<std::size_t>(s)];
            if (text.compare(pos, name.size(), name) == 0) {
                out.push_back(s);
                pos += name.size();
                matched = true;
                break;
            }
        }
        if (!matched) {
            std::string msg = "no symbol matches '" + std::string(text.substr(pos)) + "'";
            if (input_error) {
                throw InputSymbolOutOfAlphabet(msg);
            }
            throw SyntaxError(msg, pos);
        }
    }
    return out;
}

}  // namespace

std::vector<Sym> tokenize_word(const std::vector<std::string>& symbol_names,
                               const std::vector<Sym>& allowed, std::string_view text) {
    return tokenize_or_throw(symbol_names, allowed, text, false);
}

std::vector<Sym> tokenize_input(const SingleTapeMachine& m, std::string_view text) {
    return tokenize_or_throw(m.symbol_names, m.input_alphabet, text, true);
}

std::vector<Sym> tokenize_input(const MultiTapeMachine& m, std::string_view text) {
    return tokenize_or_throw(m.symbol_names, m.input_alphabets.at(0), text, true);
}

TapeContent normalized_tape(std::vector<Sym> left, std::vector<Sym> right, Sym blank) {
    auto first_mark = std::find_if(left.begin(), left.end(), [blank](Sym s) { return s != blank; });
    left.erase(left.begin(), first_mark);
    while (right.size() > 1 && right.back() == blank) {
        right.pop_back();
    }
    if (right.empty()) {
        right.push_back(blank);
    }
    return TapeContent{std::move(left), std::move(right)};
}

Configuration initial_configuration(const MultiTapeMachine& m, const std::vector<Sym>& input) {
    for (Sym s : input) {
        const auto& sigma = m.input_alphabets.at(0);
        if (std::find(sigma.begin(), sigma.end(), s) == sigma.end()) {
            throw InputSymbolOutOfAlphabet("input symbol outside the io alphabet of tape 1");
        }
    }
    Configuration c;
    c.state = m.start;
    c.tapes.resize(static_cast<std::size_t>(m.tape_count));
    c.tapes[0].right = input.empty() ? std::vector<Sym>{m.blank} : input;
    for (std::size_t i = 1; i < c.tapes.size(); ++i) {
        c.tapes[i].right = {m.start_marker};
    }
    return c;
}

Configuration initial_configuration(const SingleTapeMachine& m, const std::vector<Sym>& input) {
    for (Sym s : input) {
        if (std::find(m.input_alphabet.begin(), m.input_alphabet.end(), s) ==
            m.input_alphabet.end()) {
            throw InputSymbolOutOfAlphabet("input symbol outside the io alphabet");
        }
    }
    Configuration c;
    c.state = m.start;
    c.tapes.resize(1);
    c.tapes[0].right = input.empty() ? std::vector<Sym>{m.blank} : input;
    return c;
}

namespace {

std::string render_impl(const Configuration& c, const std::vector<std::string>& state_names,
                        const std::vector<std::string>& symbol_names) {
    std::string out = state_names.at(static_cast<std::size_t>(c.state));
    for (const TapeContent& tape : c.tapes) {
        out += '#';
        for (Sym s : tape.left) {
            out += symbol_names.at(static_cast<std::size_t>(s));
        }
        out += '^';
        for (Sym s : tape.right) {
            out += symbol_names.at(static_cast<std::size_t>(s));
        }
    }
    return out;
}

std::vector<Sym> all_symbols(std::size_t count) {
    std::vector<Sym> out(count);
    for (std::size_t i = 0; i < count; ++i) {
        out[i] = static_cast<Sym>(i);
    }
    return out;
}

Configuration parse_impl(std::string_view text, const std::vector<std::string>& state_names,
                         const std::vector<std::string>& symbol_names, Sym blank,
                         std::size_t expected_tapes) {
    std::size_t first_hash = text.find('#');
    if (first_hash == std::string_view::npos) {
        throw SyntaxError("expected '#' after the state", 0);
    }
    std::string_view state_name = text.substr(0, first_hash);
    Configuration c;
    c.state = -1;
    for (std::size_t i = 0; i < state_names.size(); ++i) {
        if (state_names[i] == state_name) {
            c.state = static_cast<StateId>(i);
            break;
        }
    }
    if (c.state < 0) {
        throw SyntaxError("unknown state '" + std::string(state_name) + "'", 0);
    }

    std::vector<Sym> allowed = all_symbols(symbol_names.size());
    std::size_t pos = first_hash;
    while (pos < text.size()) {
        std::size_t next_hash = text.find('#', pos + 1);
        std::string_view segment = text.substr(
            pos + 1, (next_hash == std::string_view::npos ? text.size() : next_hash) - pos - 1);
        std::size_t caret = segment.find('^');
        if (caret == std::string_view::npos || segment.find('^', caret + 1) != std::string_view::npos) {
            throw SyntaxError("each tape needs exactly one '^'", pos + 1);
        }
        std::vector<Sym> left = tokenize_word(symbol_names, allowed, segment.substr(0, caret));
        std::vector<Sym> right = tokenize_word(symbol_names, allowed, segment.substr(caret + 1));
        c.tapes.push_back(normalized_tape(std::move(left), std::move(right), blank));
        pos = next_hash == std::string_view::npos ? text.size() : next_hash;
    }
    if (c.tapes.size() != expected_tapes) {
        throw SyntaxError("expected " + std::to_string(expected_tapes) + " tapes, found " +
                              std::to_string(c.tapes.size()),
                          0);
    }
    return c;
}

}  // namespace

std::string render(const Configuration& c, const SingleTapeMachine& m) {
    return render_impl(c, m.state_names, m.symbol_names);
}

std::string render(const Configuration& c, const MultiTapeMachine& m) {
    return render_impl(c, m.state_names, m.symbol_names);
}

Configuration parse_configuration(std::string_view text, const SingleTapeMachine& m) {
    return parse_impl(text, m.state_names, m.symbol_names, m.blank, 1);
}

Configuration parse_configuration(std::string_view text, const MultiTapeMachine& m) {
    Configuration c = parse_impl(text, m.state_names, m.symbol_names, m.blank,
                                 static_cast<std::size_t>(m.tape_count));
    for (std::size_t i = 0; i < c.tapes.size(); ++i) {
        for (Sym s : c.tapes[i].left) {
            if (!m.tape_symbol_allowed(static_cast<int>(i), s)) {
                throw SyntaxError("symbol not allowed on tape " + std::to_string(i + 1), 0);
            }
        }
        for (Sym s : c.tapes[i].right) {
            if (!m.tape_symbol_allowed(static_cast<int>(i), s)) {
                throw SyntaxError("symbol not allowed on tape " + std::to_string(i + 1), 0);
            }
        }
    }
    return c;
}

}  // namespace grosstm
