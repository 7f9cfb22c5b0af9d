#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rsys/error.hpp"
#include "rsys/mask.hpp"
#include "rsys/system.hpp"
#include "rsys/table.hpp"

namespace rsys {

// The subadditivity checks loop over all 4^|S| pairs of subsets.
inline constexpr std::size_t kMaxSubadditivitySymbols = 13;
// Exhaustive minimal-system search is (2^|S|)^(|S|^2+|S|+1) assignments.
inline constexpr std::size_t kMaxMinimalSearchSymbols = 2;

struct StructureReport {
  bool nondegenerate = false;
  bool maximally_inhibited = false;
  bool minimal = false;
  bool strictly_minimal = false;
  std::size_t reaction_count = 0;
  std::size_t distinct_core_count = 0;
};

// Evaluates the structural predicates; an empty reaction list satisfies all
// four vacuously.
inline StructureReport classify(const ReactionSystem& a) {
  StructureReport r;
  r.nondegenerate = true;
  r.maximally_inhibited = true;
  r.minimal = true;
  r.strictly_minimal = true;
  r.reaction_count = a.size();
  const StateMask full = a.input_alphabet().universe();
  std::vector<std::pair<StateMask, StateMask>> cores;
  for (const Reaction& x : a.reactions()) {
    if (x.reactants.empty() || x.inhibitors.empty()) r.nondegenerate = false;
    if (x.inhibitors != full - x.reactants) r.maximally_inhibited = false;
    if (x.reactants.count() > 1 || x.inhibitors.count() > 1) r.minimal = false;
    if ((x.reactants | x.inhibitors).count() > 1) r.strictly_minimal = false;
    std::pair<StateMask, StateMask> core{x.reactants, x.inhibitors};
    bool seen = false;
    for (const auto& c : cores)
      if (c == core) {
        seen = true;
        break;
      }
    if (!seen) cores.push_back(core);
  }
  r.distinct_core_count = cores.size();
  return r;
}

enum class SubadditivityKind { kUnion, kIntersection };

// A pair (X, Y) for which the inclusion fails, plus one element of the
// uncovered difference.
struct SubadditivityWitness {
  SubadditivityKind kind;
  StateMask x;
  StateMask y;
  std::size_t offending_element;
};

struct SubadditivityResult {
  bool holds = false;
  std::optional<SubadditivityWitness> witness;
};

namespace detail {

inline SubadditivityResult check_subadditive(const FunctionTable& f, SubadditivityKind kind) {
  if (!f.is_ordinary()) throw Error("subadditivity is defined for ordinary tables");
  const std::size_t n = f.domain().size();
  if (n > kMaxSubadditivitySymbols)
    throw Error("alphabet too large for the pairwise subadditivity check");
  const std::uint64_t states = std::uint64_t{1} << n;
  for (std::uint64_t x = 0; x < states; ++x) {
    for (std::uint64_t y = 0; y < states; ++y) {
      const std::uint64_t arg = kind == SubadditivityKind::kUnion ? (x | y) : (x & y);
      const StateMask covered = f.at(x) | f.at(y);
      const StateMask uncovered = f.at(arg) - covered;
      if (!uncovered.empty()) {
        return {false, SubadditivityWitness{kind, StateMask::from_value(x),
                                            StateMask::from_value(y), uncovered.next_bit(0)}};
      }
    }
  }
  return {true, std::nullopt};
}

}  // namespace detail

// f(X cup Y) subseteq f(X) cup f(Y) for all pairs. The witness, when the
// inclusion fails, is the first offending pair in mask order.
inline SubadditivityResult union_subadditive(const FunctionTable& f) {
  return detail::check_subadditive(f, SubadditivityKind::kUnion);
}

// f(X cap Y) subseteq f(X) cup f(Y) for all pairs.
inline SubadditivityResult intersection_subadditive(const FunctionTable& f) {
  return detail::check_subadditive(f, SubadditivityKind::kIntersection);
}

// A table is specifiable by a (possibly degenerate) minimal reaction system
// exactly when it is both union- and intersection-subadditive.
inline bool has_minimal_specification(const FunctionTable& f) {
  return union_subadditive(f).holds && intersection_subadditive(f).holds;
}

// Brute-force oracle: enumerates every normalized minimal system over the
// table's domain and returns the first whose transition table equals f.
// Cores are enumerated in lexicographic (R, I) order; each core's product is
// either absent or any nonempty subset, with the last core's choice cycling
// fastest. Degenerate cores (empty R or I) are included.
inline std::optional<ReactionSystem> search_minimal_system(const FunctionTable& f) {
  if (!f.is_ordinary()) throw Error("minimal-system search requires an ordinary table");
  const std::size_t n = f.domain().size();
  if (n > kMaxMinimalSearchSymbols)
    throw Error("alphabet too large for exhaustive minimal-system search");

  std::vector<std::uint64_t> parts{0};  // empty plus each singleton, ascending
  for (std::size_t j = 0; j < n; ++j) parts.push_back(std::uint64_t{1} << j);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> cores;
  for (std::uint64_t r : parts)
    for (std::uint64_t i : parts)
      if ((r & i) == 0) cores.emplace_back(r, i);

  const std::uint64_t states = std::uint64_t{1} << n;
  std::vector<std::uint64_t> image(states);
  for (std::uint64_t m = 0; m < states; ++m) image[m] = f.at(m).value();

  std::vector<std::uint64_t> product(cores.size(), 0);  // 0 = core absent
  for (;;) {
    bool match = true;
    for (std::uint64_t m = 0; m < states && match; ++m) {
      std::uint64_t out = 0;
      for (std::size_t c = 0; c < cores.size(); ++c) {
        const auto [r, i] = cores[c];
        if (product[c] != 0 && (r & ~m) == 0 && (i & m) == 0) out |= product[c];
      }
      match = out == image[m];
    }
    if (match) {
      std::vector<Reaction> reactions;
      for (std::size_t c = 0; c < cores.size(); ++c)
        if (product[c] != 0)
          reactions.push_back({StateMask::from_value(cores[c].first),
                               StateMask::from_value(cores[c].second),
                               StateMask::from_value(product[c])});
      return ReactionSystem::ordinary(f.domain(), std::move(reactions));
    }
    // advance the odometer, last core fastest
    std::size_t c = cores.size();
    while (c > 0) {
      --c;
      if (++product[c] < states) break;
      product[c] = 0;
      if (c == 0) return std::nullopt;
    }
  }
}

}  // namespace rsys
