#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rsys/alphabet.hpp"
#include "rsys/error.hpp"
#include "rsys/mask.hpp"
#include "rsys/system.hpp"
#include "rsys/table.hpp"

namespace rsys {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Encoder constructions introduce 2^|S| fresh symbols.
inline constexpr std::size_t kMaxEncoderSymbols = 6;

// ---------------------------------------------------------------------------
// Fresh symbol naming. The spellings below are reserved: constructions
// refuse input alphabets that already contain one (see is_reserved_symbol),
// which makes capture impossible while keeping rendered outputs
// re-parseable. Naming depends only on content, never on context.

inline constexpr const char* kStarSymbol = "STAR";
inline constexpr const char* kDiamondSymbol = "DIAMOND";

// Tag for the i-th reaction of a system.
inline std::string reaction_tag(std::size_t i) { return "RX" + std::to_string(i); }

// Name of the subset X of s: "N(" + comma-joined members in index order + ")".
inline std::string subset_symbol(const Alphabet& s, const StateMask& x) {
  std::string name = "N(";
  bool first = true;
  for (std::size_t b = x.next_bit(0); b < kMaxSymbols; b = x.next_bit(b + 1)) {
    if (!first) name += ',';
    name += s.name(b);
    first = false;
  }
  name += ')';
  return name;
}

namespace detail {

inline void require_fresh_namable(const Alphabet& s, const char* op) {
  if (s.contains_reserved())
    throw Error(std::string(op) + ": input alphabet contains reserved symbol spellings");
}

inline void require_encoder_size(const Alphabet& s, const char* op) {
  if (s.size() > kMaxEncoderSymbols)
    throw Error(std::string(op) + ": alphabet too large (max " +
                std::to_string(kMaxEncoderSymbols) + " symbols)");
  require_fresh_namable(s, op);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Decomposition into strictly minimal hybrids: res_A = res_D o res_C with
// one tag symbol per reaction. C fires the tag of every reaction NOT enabled
// by the state; D emits the products of every reaction whose tag is absent.

struct Decomposition {
  ReactionSystem encoder;  // C over (S, T)
  ReactionSystem decoder;  // D over (T, S)
};

inline Decomposition decompose(const ReactionSystem& a) {
  if (!a.is_ordinary()) throw Error("decompose requires an ordinary system");
  detail::require_fresh_namable(a.input_alphabet(), "decompose");
  const Alphabet& s = a.input_alphabet();

  std::vector<std::string> tag_names;
  // Background sets are nonempty by definition; an empty system gets a dummy tag.
  if (a.reactions().empty()) tag_names.push_back(reaction_tag(0));
  for (std::size_t i = 0; i < a.size(); ++i) tag_names.push_back(reaction_tag(i));
  Alphabet tags(std::move(tag_names));

  std::vector<Reaction> c;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const StateMask& r = a.reactions()[i].reactants;
    for (std::size_t b = r.next_bit(0); b < kMaxSymbols; b = r.next_bit(b + 1))
      c.push_back({StateMask{}, StateMask::single(b), StateMask::single(i)});
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    const StateMask& inh = a.reactions()[i].inhibitors;
    for (std::size_t b = inh.next_bit(0); b < kMaxSymbols; b = inh.next_bit(b + 1))
      c.push_back({StateMask::single(b), StateMask{}, StateMask::single(i)});
  }

  std::vector<Reaction> d;
  for (std::size_t i = 0; i < a.size(); ++i)
    d.push_back({StateMask{}, StateMask::single(i), a.reactions()[i].products});

  return {ReactionSystem(s, tags, std::move(c)), ReactionSystem(tags, s, std::move(d))};
}

// The trivial enabled-semantics encoder: one reaction (R_a, I_a, {tag_a})
// per reaction, so the encoder fires exactly the tags of enabled reactions.
inline ReactionSystem enabled_encoder(const ReactionSystem& a) {
  if (!a.is_ordinary()) throw Error("enabled_encoder requires an ordinary system");
  detail::require_fresh_namable(a.input_alphabet(), "enabled_encoder");
  if (a.reactions().empty()) throw Error("enabled_encoder: system has no reactions to tag");
  std::vector<std::string> tag_names;
  for (std::size_t i = 0; i < a.size(); ++i) tag_names.push_back(reaction_tag(i));
  std::vector<Reaction> c;
  for (std::size_t i = 0; i < a.size(); ++i)
    c.push_back({a.reactions()[i].reactants, a.reactions()[i].inhibitors, StateMask::single(i)});
  return ReactionSystem(a.input_alphabet(), Alphabet(std::move(tag_names)), std::move(c));
}

// ---------------------------------------------------------------------------
// Universal encoder: T = {N(X) | X subseteq S} with N(X) at index value(X).
// Independent of any function; result(C, X) = T \ {N(X)} for every X.

inline Alphabet subset_name_alphabet(const Alphabet& s) {
  detail::require_encoder_size(s, "subset_name_alphabet");
  std::vector<std::string> names;
  names.reserve(std::size_t{1} << s.size());
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << s.size()); ++m)
    names.push_back(subset_symbol(s, StateMask::from_value(m)));
  return Alphabet(std::move(names));
}

inline ReactionSystem universal_encoder(const Alphabet& s) {
  detail::require_encoder_size(s, "universal_encoder");
  const std::uint64_t states = std::uint64_t{1} << s.size();
  std::vector<Reaction> c;
  for (std::uint64_t m = 0; m < states; ++m) {
    const StateMask x = StateMask::from_value(m);
    for (std::size_t b = x.next_bit(0); b < kMaxSymbols; b = x.next_bit(b + 1))
      c.push_back({StateMask{}, StateMask::single(b), StateMask::single(m)});
  }
  for (std::uint64_t m = 0; m < states; ++m) {
    const StateMask rest = s.universe() - StateMask::from_value(m);
    for (std::size_t b = rest.next_bit(0); b < kMaxSymbols; b = rest.next_bit(b + 1))
      c.push_back({StateMask::single(b), StateMask{}, StateMask::single(m)});
  }
  return ReactionSystem(s, subset_name_alphabet(s), std::move(c));
}

// Decoder for the universal encoder: (∅, {N(X)}, f(X)) per subset with a
// nonempty image; result(D, T \ {N(X)}) = f(X).
inline ReactionSystem table_decoder(const FunctionTable& f) {
  detail::require_encoder_size(f.domain(), "table_decoder");
  std::vector<Reaction> d;
  for (std::uint64_t m = 0; m < f.size(); ++m) {
    if (f.at(m).empty()) continue;
    d.push_back({StateMask{}, StateMask::single(m), f.at(m)});
  }
  return ReactionSystem(subset_name_alphabet(f.domain()), f.codomain(), std::move(d));
}

// Fixed-background 2-simulator: the ordinary system (S', C cup D) with
// S' = S ++ T. Strictly minimal; the encoder part depends only on S, so it
// is identical across all functions over the same domain.
inline ReactionSystem simulator2(const FunctionTable& f) {
  if (!f.is_ordinary()) throw Error("simulator2 requires an ordinary table");
  ReactionSystem c = universal_encoder(f.domain());
  ReactionSystem d = table_decoder(f);
  Alphabet prime = Alphabet::union_of(c.input_alphabet(), c.output_alphabet());
  return rehome(combine(c, d), prime, prime);
}

// ---------------------------------------------------------------------------
// Strong variant. T = {N(X) | nonempty X subseteq S} ++ {STAR, DIAMOND};
// the encoder reads S cup {DIAMOND}. For nonempty X, result(C, X) =
// T \ {N(X)}; result(C, ∅) = {DIAMOND}, which the decoder's diamond
// reaction turns into f(∅).

inline Alphabet strong_name_alphabet(const Alphabet& s) {
  detail::require_encoder_size(s, "strong_name_alphabet");
  std::vector<std::string> names;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << s.size()); ++m)
    names.push_back(subset_symbol(s, StateMask::from_value(m)));
  names.push_back(kStarSymbol);
  names.push_back(kDiamondSymbol);
  return Alphabet(std::move(names));
}

namespace detail {

inline Alphabet with_diamond(const Alphabet& s) {
  std::vector<std::string> names = s.symbols();
  names.push_back(kDiamondSymbol);
  return Alphabet(std::move(names));
}

// Index of N(X) in strong_name_alphabet for nonempty X of value m.
inline std::size_t strong_name_index(std::uint64_t m) { return std::size_t(m) - 1; }

}  // namespace detail

inline ReactionSystem strong_encoder(const Alphabet& s) {
  detail::require_encoder_size(s, "strong_encoder");
  const std::size_t n = s.size();
  const std::uint64_t states = std::uint64_t{1} << n;
  const std::size_t star = states - 1;    // index of STAR in T
  const std::size_t diamond = states;     // index of DIAMOND in T
  std::vector<Reaction> c;
  // ({y}, ∅, {N(X)}) for nonempty X and y outside X
  for (std::uint64_t m = 1; m < states; ++m) {
    const StateMask rest = s.universe() - StateMask::from_value(m);
    for (std::size_t b = rest.next_bit(0); b < kMaxSymbols; b = rest.next_bit(b + 1))
      c.push_back({StateMask::single(b), StateMask{},
                   StateMask::single(detail::strong_name_index(m))});
  }
  // ({s}, ∅, {STAR}) for every symbol
  for (std::size_t b = 0; b < n; ++b)
    c.push_back({StateMask::single(b), StateMask{}, StateMask::single(star)});
  // ({x}, {x'}, {N(X)}) for distinct x, x' inside X
  for (std::uint64_t m = 1; m < states; ++m) {
    const StateMask x = StateMask::from_value(m);
    for (std::size_t b = x.next_bit(0); b < kMaxSymbols; b = x.next_bit(b + 1))
      for (std::size_t b2 = x.next_bit(0); b2 < kMaxSymbols; b2 = x.next_bit(b2 + 1)) {
        if (b == b2) continue;
        c.push_back({StateMask::single(b), StateMask::single(b2),
                     StateMask::single(detail::strong_name_index(m))});
      }
  }
  // (∅, {DIAMOND}, {DIAMOND})
  c.push_back({StateMask{}, StateMask::single(n), StateMask::single(diamond)});
  return ReactionSystem(detail::with_diamond(s), strong_name_alphabet(s), std::move(c));
}

inline ReactionSystem strong_decoder(const FunctionTable& f) {
  detail::require_encoder_size(f.domain(), "strong_decoder");
  const std::uint64_t states = std::uint64_t{1} << f.domain().size();
  const std::size_t star = states - 1;
  const std::size_t diamond = states;
  std::vector<Reaction> d;
  for (std::uint64_t m = 1; m < states; ++m) {
    if (f.at(m).empty()) continue;
    d.push_back({StateMask::single(star), StateMask::single(detail::strong_name_index(m)),
                 f.at(m)});
  }
  if (!f.at(0).empty())
    d.push_back({StateMask::single(diamond), StateMask::single(star), f.at(0)});
  return ReactionSystem(strong_name_alphabet(f.domain()), f.codomain(), std::move(d));
}

// Fixed-background strong 2-simulator: minimal (not strictly minimal once
// |S| >= 2), with res^2(X) = f(X) exactly for every X subseteq S.
inline ReactionSystem strong_simulator2(const FunctionTable& f) {
  if (!f.is_ordinary()) throw Error("strong_simulator2 requires an ordinary table");
  ReactionSystem c = strong_encoder(f.domain());
  ReactionSystem d = strong_decoder(f);
  Alphabet prime = Alphabet::union_of(f.domain(), c.output_alphabet());
  return rehome(combine(c, d), prime, prime);
}

// ---------------------------------------------------------------------------
// Strong k-simulation with l extra symbols, k <= 2^l.

// Canonical chain ∅ = L_1, ..., L_k = full: L_i is the subset with value
// floor((i-1) * (2^l - 1) / (k - 1)). The values strictly increase because
// (2^l - 1) / (k - 1) >= 1, so the subsets are distinct with the required
// endpoints. Requires k >= 2.
inline std::vector<StateMask> subset_chain(std::size_t l, std::size_t k) {
  if (l == 0 || l > kMaxSymbols) throw Error("subset_chain: l out of range");
  const BigInt top = (BigInt(1) << l) - 1;
  if (k < 2 || BigInt(k) > top + 1) throw Error("subset_chain: need 2 <= k <= 2^l");
  std::vector<StateMask> chain;
  chain.reserve(k);
  for (std::size_t i = 1; i <= k; ++i) {
    const BigInt value = BigInt(i - 1) * top / (k - 1);
    StateMask mask;
    for (std::size_t b = 0; b < l; ++b)
      if (boost::multiprecision::bit_test(value, unsigned(b))) mask.set(b);
    chain.push_back(mask);
  }
  return chain;
}

inline ReactionSystem strong_simulator_k(const FunctionTable& f, std::size_t l, std::size_t k) {
  if (!f.is_ordinary()) throw Error("strong_simulator_k requires an ordinary table");
  detail::require_fresh_namable(f.domain(), "strong_simulator_k");
  if (k < 1) throw Error("strong_simulator_k: k must be positive");
  if (k > 1 && (l > kMaxSymbols || BigInt(k) > BigInt(1) << l))
    throw Error("strong_simulator_k: need k <= 2^l");
  const std::size_t n = f.domain().size();
  if (n + l > kMaxSymbols) throw Error("strong_simulator_k: extended alphabet too wide");

  std::vector<std::string> names = f.domain().symbols();
  for (std::size_t j = 0; j < l; ++j) names.push_back(reaction_tag(j));
  Alphabet prime{std::move(names)};

  if (k == 1) return rehome(canonical_system(f), prime, prime);

  // masks over S' (extras occupy bits n .. n+l-1)
  const StateMask s_full = StateMask::universe(n);
  StateMask t_full;
  for (std::size_t j = 0; j < l; ++j) t_full.set(n + j);
  std::vector<StateMask> chain = subset_chain(l, k);
  for (StateMask& li : chain) {
    StateMask shifted;
    for (std::size_t b = li.next_bit(0); b < kMaxSymbols; b = li.next_bit(b + 1))
      shifted.set(b + n);
    li = shifted;
  }

  std::vector<Reaction> b;
  // (X cup T, S \ X, f(X)), nonempty images only
  for (std::uint64_t m = 0; m < f.size(); ++m) {
    if (f.at(m).empty()) continue;
    const StateMask x = StateMask::from_value(m);
    b.push_back({x | t_full, s_full - x, f.at(m)});
  }
  // (L_i, T \ L_i, L_{i+1}) walks the chain up to T
  for (std::size_t i = 0; i + 1 < k; ++i)
    b.push_back({chain[i], t_full - chain[i], chain[i + 1]});
  // ({s}, {t}, {s}) keeps S-content alive while the chain is short of T
  for (std::size_t j = 0; j < l; ++j)
    for (std::size_t sb = 0; sb < n; ++sb)
      b.push_back({StateMask::single(sb), StateMask::single(n + j), StateMask::single(sb)});

  return ReactionSystem(prime, prime, std::move(b));
}

// ---------------------------------------------------------------------------
// Chain functions: f steps through an enumeration of all subsets and fixes
// the last one. The hard instances for the simulation lower bound.

inline FunctionTable chain_function(const Alphabet& s, std::span<const StateMask> order) {
  if (s.size() > kMaxTabulationSymbols)
    throw Error("chain_function: alphabet too large to tabulate");
  const std::uint64_t states = std::uint64_t{1} << s.size();
  if (order.size() != states)
    throw Error("chain order must enumerate all 2^|S| subsets");
  std::vector<bool> seen(states, false);
  for (const StateMask& m : order) {
    if (m.width() > s.size()) throw Error("chain order contains a subset outside the alphabet");
    if (seen[m.value()]) throw Error("chain order repeats a subset");
    seen[m.value()] = true;
  }
  std::vector<StateMask> entries(states);
  for (std::size_t i = 0; i + 1 < order.size(); ++i) entries[order[i].value()] = order[i + 1];
  entries[order.back().value()] = order.back();
  return FunctionTable::ordinary(s, std::move(entries));
}

// (2^|S'| - 2) / (2^|S| - 2), reduced. Chain functions over S cannot be
// k-simulated over S' for any k strictly above this bound.
inline Rational simulation_threshold(std::size_t size_s, std::size_t size_s_prime) {
  if (size_s < 2) throw Error("simulation_threshold requires |S| >= 2");
  if (size_s_prime < size_s) throw Error("simulation_threshold requires |S'| >= |S|");
  const BigInt num = (BigInt(1) << size_s_prime) - 2;
  const BigInt den = (BigInt(1) << size_s) - 2;
  return Rational(num, den);
}

}  // namespace rsys
