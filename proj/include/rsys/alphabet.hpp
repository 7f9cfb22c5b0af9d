#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rsys/error.hpp"
#include "rsys/mask.hpp"

namespace rsys {

// Symbol names come in two flavours:
//  - plain names, written by users: nonempty, no whitespace or control
//    characters, and none of  | , - # ; ( )  which the text formats use as
//    separators;
//  - generated names, emitted by the constructions: "STAR", "DIAMOND",
//    "RX" + decimal digits, and "N(" + comma-joined plain names + ")".
// Generated spellings are reserved: any construction that introduces fresh
// symbols rejects input alphabets already containing one, so capture is
// impossible while rendered outputs stay re-parseable.

inline bool is_plain_symbol(std::string_view name) {
  if (name.empty()) return false;
  for (unsigned char c : name) {
    if (std::isspace(c) || std::iscntrl(c)) return false;
    if (c == '|' || c == ',' || c == '-' || c == '#' || c == ';' || c == '(' || c == ')')
      return false;
  }
  return true;
}

inline bool is_generated_symbol(std::string_view name) {
  if (name == "STAR" || name == "DIAMOND") return true;
  if (name.size() > 2 && name.substr(0, 2) == "RX") {
    for (char c : name.substr(2))
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  }
  if (name.size() >= 3 && name.substr(0, 2) == "N(" && name.back() == ')') {
    std::string_view inner = name.substr(2, name.size() - 3);
    if (inner.empty()) return true;  // N() names the empty subset
    std::size_t pos = 0;
    while (pos <= inner.size()) {
      std::size_t comma = inner.find(',', pos);
      std::string_view part =
          comma == std::string_view::npos ? inner.substr(pos) : inner.substr(pos, comma - pos);
      if (!is_plain_symbol(part)) return false;
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    return true;
  }
  return false;
}

inline bool is_valid_symbol(std::string_view name) {
  return is_plain_symbol(name) || is_generated_symbol(name);
}

// Reserved spellings are matched by prefix so near-collisions like "STARx"
// are kept out of construction inputs as well.
inline bool is_reserved_symbol(std::string_view name) {
  if (name.substr(0, 2) == "N(") return true;
  if (name.substr(0, 4) == "STAR") return true;
  if (name.substr(0, 7) == "DIAMOND") return true;
  if (name.size() > 2 && name.substr(0, 2) == "RX" &&
      std::isdigit(static_cast<unsigned char>(name[2])))
    return true;
  return false;
}

// Ordered background set: distinct symbol names with a name -> index map.
class Alphabet {
public:
  explicit Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
    if (symbols_.empty()) throw Error("alphabet must contain at least one symbol");
    if (symbols_.size() > kMaxSymbols)
      throw Error("alphabet exceeds " + std::to_string(kMaxSymbols) + " symbols");
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
      const std::string& name = symbols_[i];
      if (!is_valid_symbol(name)) throw Error("invalid symbol name '" + name + "'");
      if (!index_.emplace(name, i).second) throw Error("duplicate symbol '" + name + "'");
    }
  }

  std::size_t size() const { return symbols_.size(); }
  const std::vector<std::string>& symbols() const { return symbols_; }
  const std::string& name(std::size_t i) const { return symbols_.at(i); }

  std::optional<std::size_t> find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    return it == index_.end() ? std::nullopt : std::optional<std::size_t>(it->second);
  }

  bool contains(std::string_view name) const { return find(name).has_value(); }

  std::size_t index_of(std::string_view name) const {
    auto i = find(name);
    if (!i) throw Error("symbol '" + std::string(name) + "' not in alphabet");
    return *i;
  }

  StateMask universe() const { return StateMask::universe(size()); }

  bool contains_reserved() const {
    for (const auto& s : symbols_)
      if (is_reserved_symbol(s)) return true;
    return false;
  }

  // Sub-alphabet by name; indices may differ.
  bool is_subalphabet_of(const Alphabet& other) const {
    for (const auto& s : symbols_)
      if (!other.contains(s)) return false;
    return true;
  }

  bool operator==(const Alphabet& o) const { return symbols_ == o.symbols_; }
  bool operator!=(const Alphabet& o) const { return !(*this == o); }

  // Left operand's symbols in order, then the right's not already present.
  static Alphabet union_of(const Alphabet& a, const Alphabet& b) {
    std::vector<std::string> names = a.symbols_;
    for (const auto& s : b.symbols_)
      if (!a.contains(s)) names.push_back(s);
    return Alphabet(std::move(names));
  }

private:
  std::vector<std::string> symbols_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Re-indexes a mask from one alphabet into another by symbol name.
inline StateMask translate(const StateMask& m, const Alphabet& from, const Alphabet& to) {
  StateMask out;
  for (std::size_t b = m.next_bit(0); b < kMaxSymbols; b = m.next_bit(b + 1)) {
    if (b >= from.size()) throw Error("mask has bits outside its alphabet");
    out.set(to.index_of(from.name(b)));
  }
  return out;
}

// Keeps only the bits whose names exist in `to`; the partial counterpart of
// translate, used to form intersections with sub-alphabets.
inline StateMask project(const StateMask& m, const Alphabet& from, const Alphabet& to) {
  StateMask out;
  for (std::size_t b = m.next_bit(0); b < kMaxSymbols && b < from.size(); b = m.next_bit(b + 1)) {
    if (auto i = to.find(from.name(b))) out.set(*i);
  }
  return out;
}

}  // namespace rsys
