#pragma once

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "rsys/alphabet.hpp"
#include "rsys/error.hpp"
#include "rsys/mask.hpp"
#include "rsys/system.hpp"
#include "rsys/table.hpp"

namespace rsys {

// Line-based text formats.
//
// System document:
//     # comment
//     background: a b c          (or `input:` + `output:` for hybrids)
//     a | b -> c                 reactants | inhibitors -> products
//     - | - -> a                 `-` is the empty set
//
// Table document:
//     domain: a b                (optional `codomain:` for hybrid tables)
//     - -> a b
//     a -> b
//     ...                        one line per subset, any order, all present
//
// Rendered sets list symbols in alphabet index order; reactions keep
// insertion order; table lines are sorted by subset mask value. parse is a
// left inverse of render on well-formed values.

namespace detail {

inline std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) tokens.emplace_back(line.substr(start, i - start));
  }
  return tokens;
}

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

inline std::vector<Line> meaningful_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    std::string_view raw =
        end == std::string_view::npos ? text.substr(pos) : text.substr(pos, end - pos);
    ++line_no;
    if (std::size_t hash = raw.find('#'); hash != std::string_view::npos)
      raw = raw.substr(0, hash);
    auto tokens = tokenize(raw);
    if (!tokens.empty()) lines.push_back({line_no, std::move(tokens)});
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return lines;
}

inline Error line_error(std::size_t line, const std::string& what) {
  return Error("line " + std::to_string(line) + ": " + what);
}

inline Alphabet parse_declaration(const Line& line) {
  if (line.tokens.size() < 2)
    throw line_error(line.number, "declaration '" + line.tokens[0] + "' needs symbols");
  std::vector<std::string> names(line.tokens.begin() + 1, line.tokens.end());
  try {
    return Alphabet(std::move(names));
  } catch (const Error& e) {
    throw line_error(line.number, e.what());
  }
}

// A symbol list or `-`, as token span [from, to).
inline StateMask parse_subset_tokens(const std::vector<std::string>& tokens, std::size_t from,
                                     std::size_t to, const Alphabet& alphabet,
                                     std::size_t line_no) {
  if (from >= to) throw line_error(line_no, "missing set (use '-' for the empty set)");
  if (tokens[from] == "-") {
    if (to - from != 1) throw line_error(line_no, "'-' must stand alone");
    return StateMask{};
  }
  StateMask mask;
  for (std::size_t i = from; i < to; ++i) {
    auto idx = alphabet.find(tokens[i]);
    if (!idx) throw line_error(line_no, "undeclared symbol '" + tokens[i] + "'");
    mask.set(*idx);
  }
  return mask;
}

}  // namespace detail

inline std::string render_state(const StateMask& m, const Alphabet& alphabet) {
  if (m.empty()) return "-";
  std::string out;
  for (std::size_t b = m.next_bit(0); b < kMaxSymbols; b = m.next_bit(b + 1)) {
    if (!out.empty()) out += ' ';
    out += alphabet.name(b);
  }
  return out;
}

inline StateMask parse_state(std::string_view text, const Alphabet& alphabet) {
  auto tokens = detail::tokenize(text);
  return detail::parse_subset_tokens(tokens, 0, tokens.size(), alphabet, 1);
}

// Space-separated symbol names, e.g. the --domain flag.
inline Alphabet parse_domain(std::string_view text) {
  auto names = detail::tokenize(text);
  if (names.empty()) throw Error("empty domain");
  return Alphabet(std::move(names));
}

// Semicolon-separated subsets over `alphabet`, e.g. "a;b;-;a b".
inline std::vector<StateMask> parse_subset_list(std::string_view text, const Alphabet& alphabet) {
  std::vector<StateMask> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(';', pos);
    std::string_view part =
        end == std::string_view::npos ? text.substr(pos) : text.substr(pos, end - pos);
    out.push_back(parse_state(part, alphabet));
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return out;
}

inline ReactionSystem parse_system(std::string_view text) {
  auto lines = detail::meaningful_lines(text);
  if (lines.empty()) throw Error("empty system document");

  std::size_t at = 0;
  std::optional<Alphabet> input, output;
  if (lines[0].tokens[0] == "background:") {
    input = detail::parse_declaration(lines[0]);
    output = input;
    at = 1;
  } else if (lines[0].tokens[0] == "input:") {
    input = detail::parse_declaration(lines[0]);
    if (lines.size() < 2 || lines[1].tokens[0] != "output:")
      throw detail::line_error(lines[0].number, "'input:' must be followed by 'output:'");
    output = detail::parse_declaration(lines[1]);
    at = 2;
  } else {
    throw detail::line_error(lines[0].number,
                             "expected 'background:' or 'input:'/'output:' declaration");
  }

  std::vector<Reaction> reactions;
  for (; at < lines.size(); ++at) {
    const auto& [line_no, tokens] = lines.at(at);
    std::size_t bar = tokens.size(), arrow = tokens.size();
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      if (tokens[i] == "|") {
        if (bar != tokens.size()) throw detail::line_error(line_no, "multiple '|' separators");
        bar = i;
      } else if (tokens[i] == "->") {
        if (arrow != tokens.size()) throw detail::line_error(line_no, "multiple '->' separators");
        arrow = i;
      }
    }
    if (bar == tokens.size() || arrow == tokens.size() || bar > arrow)
      throw detail::line_error(line_no, "reaction must have the form 'R | I -> P'");
    StateMask r = detail::parse_subset_tokens(tokens, 0, bar, *input, line_no);
    StateMask i = detail::parse_subset_tokens(tokens, bar + 1, arrow, *input, line_no);
    StateMask p = detail::parse_subset_tokens(tokens, arrow + 1, tokens.size(), *output, line_no);
    if (p.empty()) throw detail::line_error(line_no, "empty product set");
    if (r.intersects(i))
      throw detail::line_error(line_no, "reactants and inhibitors overlap");
    reactions.push_back({r, i, p});
  }
  return ReactionSystem(std::move(*input), std::move(*output), std::move(reactions));
}

inline std::string render_system(const ReactionSystem& a) {
  std::ostringstream out;
  auto emit_names = [&](const Alphabet& alpha) {
    for (const auto& s : alpha.symbols()) out << ' ' << s;
    out << '\n';
  };
  if (a.is_ordinary()) {
    out << "background:";
    emit_names(a.input_alphabet());
  } else {
    out << "input:";
    emit_names(a.input_alphabet());
    out << "output:";
    emit_names(a.output_alphabet());
  }
  for (const Reaction& r : a.reactions()) {
    out << render_state(r.reactants, a.input_alphabet()) << " | "
        << render_state(r.inhibitors, a.input_alphabet()) << " -> "
        << render_state(r.products, a.output_alphabet()) << '\n';
  }
  return out.str();
}

inline FunctionTable parse_table(std::string_view text) {
  auto lines = detail::meaningful_lines(text);
  if (lines.empty()) throw Error("empty table document");
  if (lines[0].tokens[0] != "domain:")
    throw detail::line_error(lines[0].number, "expected 'domain:' declaration");
  Alphabet domain = detail::parse_declaration(lines[0]);
  Alphabet codomain = domain;
  std::size_t at = 1;
  if (lines.size() > 1 && lines[1].tokens[0] == "codomain:") {
    codomain = detail::parse_declaration(lines[1]);
    at = 2;
  }
  if (domain.size() > kMaxTabulationSymbols)
    throw Error("domain too large to tabulate");

  const std::uint64_t states = std::uint64_t{1} << domain.size();
  std::vector<StateMask> entries(states);
  std::vector<bool> filled(states, false);
  for (; at < lines.size(); ++at) {
    const auto& [line_no, tokens] = lines[at];
    std::size_t arrow = tokens.size();
    for (std::size_t i = 0; i < tokens.size(); ++i)
      if (tokens[i] == "->") {
        if (arrow != tokens.size()) throw detail::line_error(line_no, "multiple '->' separators");
        arrow = i;
      }
    if (arrow == tokens.size())
      throw detail::line_error(line_no, "mapping must have the form 'X -> Y'");
    StateMask x = detail::parse_subset_tokens(tokens, 0, arrow, domain, line_no);
    StateMask y = detail::parse_subset_tokens(tokens, arrow + 1, tokens.size(), codomain, line_no);
    if (filled[x.value()])
      throw detail::line_error(line_no, "subset mapped more than once");
    filled[x.value()] = true;
    entries[x.value()] = y;
  }
  for (std::uint64_t m = 0; m < states; ++m)
    if (!filled[m])
      throw Error("table is not total: missing subset '" +
                  render_state(StateMask::from_value(m), domain) + "'");
  return FunctionTable(std::move(domain), std::move(codomain), std::move(entries));
}

inline std::string render_table(const FunctionTable& f) {
  std::ostringstream out;
  out << "domain:";
  for (const auto& s : f.domain().symbols()) out << ' ' << s;
  out << '\n';
  if (!f.is_ordinary()) {
    out << "codomain:";
    for (const auto& s : f.codomain().symbols()) out << ' ' << s;
    out << '\n';
  }
  for (std::uint64_t m = 0; m < f.size(); ++m) {
    out << render_state(StateMask::from_value(m), f.domain()) << " -> "
        << render_state(f.at(m), f.codomain()) << '\n';
  }
  return out.str();
}

}  // namespace rsys
