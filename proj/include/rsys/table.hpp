#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "rsys/alphabet.hpp"
#include "rsys/error.hpp"
#include "rsys/mask.hpp"
#include "rsys/system.hpp"

namespace rsys {

// Tabulation is exponential in the domain size; 2^20 entries is the cap.
inline constexpr std::size_t kMaxTabulationSymbols = 20;

// Explicit rs function f: 2^S -> 2^T, one output mask per subset of the
// domain, indexed by the subset's mask value. Ordinary tables have T = S.
class FunctionTable {
public:
  FunctionTable(Alphabet domain, Alphabet codomain, std::vector<StateMask> entries)
      : domain_(std::move(domain)), codomain_(std::move(codomain)), entries_(std::move(entries)) {
    if (domain_.size() > kMaxTabulationSymbols)
      throw Error("domain too large to tabulate (max " +
                  std::to_string(kMaxTabulationSymbols) + " symbols)");
    if (entries_.size() != (std::size_t{1} << domain_.size()))
      throw Error("function table must have exactly 2^|S| entries");
    for (const StateMask& m : entries_)
      if (m.width() > codomain_.size())
        throw Error("table entry does not fit the output alphabet");
  }

  static FunctionTable ordinary(Alphabet domain, std::vector<StateMask> entries) {
    Alphabet copy = domain;
    return FunctionTable(std::move(domain), std::move(copy), std::move(entries));
  }

  const Alphabet& domain() const { return domain_; }
  const Alphabet& codomain() const { return codomain_; }
  bool is_ordinary() const { return domain_ == codomain_; }
  std::size_t size() const { return entries_.size(); }
  const std::vector<StateMask>& entries() const { return entries_; }

  const StateMask& at(std::uint64_t index) const {
    if (index >= entries_.size()) throw Error("table index out of range");
    return entries_[index];
  }

  const StateMask& operator()(const StateMask& x) const { return at(x.value()); }

  bool operator==(const FunctionTable& o) const {
    return domain_ == o.domain_ && codomain_ == o.codomain_ && entries_ == o.entries_;
  }

private:
  Alphabet domain_;
  Alphabet codomain_;
  std::vector<StateMask> entries_;
};

// f^n(x) for ordinary f; n = 0 returns x.
inline StateMask apply_power(const FunctionTable& f, StateMask x, std::size_t n) {
  if (n >= 2 && !f.is_ordinary()) throw Error("cannot iterate a hybrid function table");
  for (std::size_t i = 0; i < n; ++i) x = f(x);
  return x;
}

// The full state transition table of a system.
inline FunctionTable tabulate(const ReactionSystem& a) {
  const std::size_t n = a.input_alphabet().size();
  if (n > kMaxTabulationSymbols)
    throw Error("alphabet too large to tabulate (max " +
                std::to_string(kMaxTabulationSymbols) + " symbols)");
  std::vector<StateMask> entries;
  entries.reserve(std::size_t{1} << n);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
    entries.push_back(result(a, StateMask::from_value(m)));
  return FunctionTable(a.input_alphabet(), a.output_alphabet(), std::move(entries));
}

// Canonical maximally inhibited system specifying f: one reaction
// (X, S\X, f(X)) per subset X with nonempty image, in mask order.
inline ReactionSystem canonical_system(const FunctionTable& f) {
  const StateMask full = f.domain().universe();
  std::vector<Reaction> reactions;
  for (std::uint64_t m = 0; m < f.size(); ++m) {
    const StateMask x = StateMask::from_value(m);
    const StateMask& image = f.at(m);
    if (image.empty()) continue;
    reactions.push_back({x, full - x, image});
  }
  return ReactionSystem(f.domain(), f.codomain(), std::move(reactions));
}

// (g o f)(x) = g(f(x)); f's codomain must equal g's domain.
inline FunctionTable compose(const FunctionTable& g, const FunctionTable& f) {
  if (f.codomain() != g.domain())
    throw Error("cannot compose: inner codomain differs from outer domain");
  std::vector<StateMask> entries;
  entries.reserve(f.size());
  for (std::uint64_t m = 0; m < f.size(); ++m) entries.push_back(g(f.at(m)));
  return FunctionTable(f.domain(), g.codomain(), std::move(entries));
}

}  // namespace rsys
