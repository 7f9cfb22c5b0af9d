#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "rsys/alphabet.hpp"
#include "rsys/error.hpp"
#include "rsys/mask.hpp"

namespace rsys {

// A reaction (R, I, P): disjoint reactant and inhibitor sets over the input
// alphabet, nonempty product set over the output alphabet. The pair (R, I)
// is the reaction's core.
struct Reaction {
  StateMask reactants;
  StateMask inhibitors;
  StateMask products;

  bool operator==(const Reaction&) const = default;
};

inline bool same_core(const Reaction& a, const Reaction& b) {
  return a.reactants == b.reactants && a.inhibitors == b.inhibitors;
}

// A (possibly hybrid) reaction system. Ordinary systems have equal input and
// output alphabets; hybrid ones read from one background set and produce
// into another. Reactions keep insertion order; duplicate cores are allowed
// in storage (normalize() merges them).
class ReactionSystem {
public:
  ReactionSystem(Alphabet input, Alphabet output, std::vector<Reaction> reactions)
      : input_(std::move(input)), output_(std::move(output)), reactions_(std::move(reactions)) {
    for (const Reaction& r : reactions_) {
      if (r.reactants.width() > input_.size() || r.inhibitors.width() > input_.size())
        throw Error("reaction core does not fit the input alphabet");
      if (r.products.width() > output_.size())
        throw Error("reaction product does not fit the output alphabet");
      if (r.reactants.intersects(r.inhibitors))
        throw Error("reactants and inhibitors overlap");
      if (r.products.empty()) throw Error("empty product set");
    }
  }

  static ReactionSystem ordinary(Alphabet background, std::vector<Reaction> reactions) {
    Alphabet copy = background;
    return ReactionSystem(std::move(background), std::move(copy), std::move(reactions));
  }

  const Alphabet& input_alphabet() const { return input_; }
  const Alphabet& output_alphabet() const { return output_; }
  const std::vector<Reaction>& reactions() const { return reactions_; }
  std::size_t size() const { return reactions_.size(); }
  bool is_ordinary() const { return input_ == output_; }

  bool operator==(const ReactionSystem& o) const {
    return input_ == o.input_ && output_ == o.output_ && reactions_ == o.reactions_;
  }

private:
  Alphabet input_;
  Alphabet output_;
  std::vector<Reaction> reactions_;
};

// R_a subseteq X and I_a disjoint from X.
inline bool enabled(const Reaction& a, const StateMask& state) {
  return a.reactants.subset_of(state) && !a.inhibitors.intersects(state);
}

// Cumulative union of product sets of all reactions enabled by `state`.
inline StateMask result(const ReactionSystem& a, const StateMask& state) {
  if (state.width() > a.input_alphabet().size())
    throw Error("state does not fit the system's input alphabet");
  StateMask out;
  for (const Reaction& r : a.reactions())
    if (enabled(r, state)) out |= r.products;
  return out;
}

// n-fold application of result; n = 0 returns the state unchanged. A hybrid
// system with distinct alphabets has no iterated semantics, so n >= 2 on one
// is an error.
inline StateMask iterate(const ReactionSystem& a, StateMask state, std::size_t n) {
  if (n >= 2 && !a.is_ordinary())
    throw Error("cannot iterate a hybrid system with distinct alphabets");
  if (n == 0 && state.width() > a.input_alphabet().size())
    throw Error("state does not fit the system's input alphabet");
  for (std::size_t i = 0; i < n; ++i) state = result(a, state);
  return state;
}

// [X, res(X), ..., res^n(X)], length n + 1.
inline std::vector<StateMask> trace(const ReactionSystem& a, StateMask state, std::size_t n) {
  if (n >= 2 && !a.is_ordinary())
    throw Error("cannot iterate a hybrid system with distinct alphabets");
  if (state.width() > a.input_alphabet().size())
    throw Error("state does not fit the system's input alphabet");
  std::vector<StateMask> out;
  out.reserve(n + 1);
  out.push_back(state);
  for (std::size_t i = 0; i < n; ++i) {
    state = result(a, state);
    out.push_back(state);
  }
  return out;
}

// Merges reactions with equal cores by product union, keeping the first
// occurrence of each core in place. result() is unchanged.
inline ReactionSystem normalize(const ReactionSystem& a) {
  std::vector<Reaction> merged;
  for (const Reaction& r : a.reactions()) {
    bool found = false;
    for (Reaction& m : merged) {
      if (same_core(m, r)) {
        m.products |= r.products;
        found = true;
        break;
      }
    }
    if (!found) merged.push_back(r);
  }
  return ReactionSystem(a.input_alphabet(), a.output_alphabet(), std::move(merged));
}

// Re-indexes a system into new alphabets; every symbol must exist by name.
inline ReactionSystem rehome(const ReactionSystem& a, Alphabet input, Alphabet output) {
  std::vector<Reaction> reactions;
  reactions.reserve(a.size());
  for (const Reaction& r : a.reactions()) {
    reactions.push_back({translate(r.reactants, a.input_alphabet(), input),
                         translate(r.inhibitors, a.input_alphabet(), input),
                         translate(r.products, a.output_alphabet(), output)});
  }
  return ReactionSystem(std::move(input), std::move(output), std::move(reactions));
}

// Union of two hybrid systems over name-unified alphabets. For every
// X over the union input, result(combined, X) = result(c, X cap S) union
// result(d, X cap T).
inline ReactionSystem combine(const ReactionSystem& c, const ReactionSystem& d) {
  Alphabet input = Alphabet::union_of(c.input_alphabet(), d.input_alphabet());
  Alphabet output = Alphabet::union_of(c.output_alphabet(), d.output_alphabet());
  std::vector<Reaction> reactions;
  reactions.reserve(c.size() + d.size());
  for (const ReactionSystem* part : {&c, &d}) {
    for (const Reaction& r : part->reactions()) {
      reactions.push_back({translate(r.reactants, part->input_alphabet(), input),
                           translate(r.inhibitors, part->input_alphabet(), input),
                           translate(r.products, part->output_alphabet(), output)});
    }
  }
  return ReactionSystem(std::move(input), std::move(output), std::move(reactions));
}

// Restriction of an ordinary system to a sub-alphabet: keeps reactions whose
// reactants lie inside `sub`, intersecting inhibitors and products with it
// and dropping reactions whose product empties out. For all X over `sub`,
// result(restricted, X) = result(a, X) cap sub.
inline ReactionSystem restrict_to(const ReactionSystem& a, const Alphabet& sub) {
  if (!a.is_ordinary()) throw Error("restrict_to requires an ordinary system");
  if (!sub.is_subalphabet_of(a.input_alphabet()))
    throw Error("restriction target is not a sub-alphabet");
  std::vector<Reaction> kept;
  for (const Reaction& r : a.reactions()) {
    bool reactants_inside = true;
    for (std::size_t b = r.reactants.next_bit(0); b < kMaxSymbols; b = r.reactants.next_bit(b + 1))
      if (!sub.contains(a.input_alphabet().name(b))) {
        reactants_inside = false;
        break;
      }
    if (!reactants_inside) continue;
    StateMask products = project(r.products, a.output_alphabet(), sub);
    if (products.empty()) continue;
    kept.push_back({translate(r.reactants, a.input_alphabet(), sub),
                    project(r.inhibitors, a.input_alphabet(), sub), products});
  }
  return ReactionSystem(sub, sub, std::move(kept));
}

}  // namespace rsys
