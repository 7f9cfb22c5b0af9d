#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "rsys/alphabet.hpp"
#include "rsys/constructions.hpp"
#include "rsys/error.hpp"
#include "rsys/mask.hpp"
#include "rsys/system.hpp"
#include "rsys/table.hpp"

namespace rsys {

inline constexpr std::size_t kMaxSimulationSymbols = 13;
// The function-space oracle scans (2^m)^(2^m) candidate tables.
inline constexpr std::size_t kMaxNonsimulabilitySymbols = 3;
inline constexpr std::size_t kMaxSystemEnumerationSymbols = 2;

struct SimulationReport {
  bool holds = true;
  std::optional<StateMask> failing_state;   // initial X over f's domain
  std::optional<std::size_t> failing_step;  // n, counted in f-steps
  std::size_t states_checked = 0;
  std::size_t max_horizon_used = 0;
};

namespace detail {

struct PairKey {
  std::uint64_t u;
  std::uint64_t v0, v1;
  bool operator==(const PairKey&) const = default;
};

struct PairKeyHash {
  std::size_t operator()(const PairKey& p) const noexcept {
    std::uint64_t h = p.u * 0x9e3779b97f4a7c15ull;
    h ^= p.v0 + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h ^= p.v1 + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return std::size_t(h);
  }
};

// Index map from f's domain into the simulator's background set.
inline std::vector<std::size_t> domain_lift(const FunctionTable& f, const ReactionSystem& a,
                                            const char* op) {
  if (!f.is_ordinary()) throw Error(std::string(op) + ": requires an ordinary table");
  if (!a.is_ordinary()) throw Error(std::string(op) + ": requires an ordinary system");
  if (f.domain().size() > kMaxSimulationSymbols)
    throw Error(std::string(op) + ": domain too large (max " +
                std::to_string(kMaxSimulationSymbols) + " symbols)");
  std::vector<std::size_t> lift;
  lift.reserve(f.domain().size());
  for (const std::string& name : f.domain().symbols()) {
    auto i = a.input_alphabet().find(name);
    if (!i)
      throw Error(std::string(op) + ": simulated domain is not a sub-alphabet of the system");
    lift.push_back(*i);
  }
  return lift;
}

inline StateMask lift_mask(std::uint64_t value, const std::vector<std::size_t>& lift) {
  StateMask out;
  for (std::size_t b = 0; b < lift.size(); ++b)
    if ((value >> b) & 1) out.set(lift[b]);
  return out;
}

inline std::uint64_t project_value(const StateMask& m, const std::vector<std::size_t>& lift) {
  std::uint64_t out = 0;
  for (std::size_t b = 0; b < lift.size(); ++b)
    if (m.test(lift[b])) out |= std::uint64_t{1} << b;
  return out;
}

// One res-application, table-backed when the background set is small enough.
class Stepper {
public:
  explicit Stepper(const ReactionSystem& a) : system_(a) {
    if (a.input_alphabet().size() <= kMaxTabulationSymbols) {
      table_.reserve(std::size_t{1} << a.input_alphabet().size());
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << a.input_alphabet().size()); ++m)
        table_.push_back(result(a, StateMask::from_value(m)));
    }
  }

  StateMask operator()(const StateMask& x) const {
    if (!table_.empty()) return table_[x.value()];
    return result(system_, x);
  }

private:
  const ReactionSystem& system_;
  std::vector<StateMask> table_;
};

}  // namespace detail

// Strong k-simulation: res_A^k(X) equals f(X) exactly (no intersection with
// S) for every X over f's domain.
inline SimulationReport check_strong_simulation(const FunctionTable& f, const ReactionSystem& a,
                                                std::size_t k) {
  if (k < 1) throw Error("check_strong_simulation: k must be positive");
  const auto lift = detail::domain_lift(f, a, "check_strong_simulation");
  detail::Stepper step(a);
  SimulationReport report;
  report.max_horizon_used = 1;
  for (std::uint64_t x = 0; x < f.size(); ++x) {
    ++report.states_checked;
    StateMask v = detail::lift_mask(x, lift);
    for (std::size_t i = 0; i < k; ++i) v = step(v);
    if (v != detail::lift_mask(f.at(x).value(), lift)) {
      report.holds = false;
      report.failing_state = StateMask::from_value(x);
      report.failing_step = 1;
      return report;
    }
  }
  return report;
}

// Plain k-simulation: f^n(X) = res_A^(kn)(X) cap S for every X over f's
// domain and every positive n. The pair (f-state, system-state) evolves
// deterministically, so each X is advanced until its pair repeats; a closed
// orbit certifies all larger n.
inline SimulationReport check_simulation(const FunctionTable& f, const ReactionSystem& a,
                                         std::size_t k) {
  if (k < 1) throw Error("check_simulation: k must be positive");
  const auto lift = detail::domain_lift(f, a, "check_simulation");
  detail::Stepper step(a);
  SimulationReport report;
  for (std::uint64_t x = 0; x < f.size(); ++x) {
    ++report.states_checked;
    std::uint64_t u = x;
    StateMask v = detail::lift_mask(x, lift);
    std::unordered_set<detail::PairKey, detail::PairKeyHash> visited;
    visited.insert({u, v.word(0), v.word(1)});
    for (std::size_t n = 1;; ++n) {
      u = f.at(u).value();
      for (std::size_t i = 0; i < k; ++i) v = step(v);
      if (n > report.max_horizon_used) report.max_horizon_used = n;
      if (detail::project_value(v, lift) != u) {
        report.holds = false;
        report.failing_state = StateMask::from_value(x);
        report.failing_step = n;
        return report;
      }
      if (!visited.insert({u, v.word(0), v.word(1)}).second) break;
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Function-space impossibility oracle. Every transition function over the
// extended set is an rs function, so scanning all (2^m)^(2^m) tables settles
// whether ANY reaction system over an m-symbol background k-simulates f.

struct NonsimulabilityEntry {
  std::size_t k = 0;
  bool simulator_exists = false;
  std::uint64_t candidates_checked = 0;
  std::vector<std::uint32_t> witness;  // simulating table, empty when none found
};

struct NonsimulabilityReport {
  std::size_t size_s_prime = 0;
  std::uint64_t candidate_count = 0;
  std::vector<NonsimulabilityEntry> entries;
};

namespace detail {

// Pair-orbit check of "g k-simulates f" with S embedded as the low bits.
inline bool table_simulates(const std::vector<std::uint32_t>& ft, std::uint64_t s_bits,
                            const std::vector<std::uint32_t>& g, std::size_t k) {
  const std::uint64_t u_states = ft.size();
  const std::uint64_t v_states = g.size();
  for (std::uint64_t x = 0; x < u_states; ++x) {
    std::uint32_t u = std::uint32_t(x);
    std::uint32_t v = std::uint32_t(x);
    std::uint64_t visited = std::uint64_t{1} << (u * v_states + v);
    for (;;) {
      u = ft[u];
      for (std::size_t i = 0; i < k; ++i) v = g[v];
      if ((v & s_bits) != u) return false;
      const std::uint64_t bit = std::uint64_t{1} << (u * v_states + v);
      if (visited & bit) break;
      visited |= bit;
    }
  }
  return true;
}

}  // namespace detail

inline NonsimulabilityReport exhaustive_nonsimulability(const FunctionTable& f,
                                                        std::size_t size_s_prime,
                                                        const std::vector<std::size_t>& ks) {
  if (!f.is_ordinary()) throw Error("exhaustive_nonsimulability requires an ordinary table");
  const std::size_t n = f.domain().size();
  if (size_s_prime > kMaxNonsimulabilitySymbols)
    throw Error("nonsimulability search space too large (max " +
                std::to_string(kMaxNonsimulabilitySymbols) + " symbols)");
  if (n > size_s_prime)
    throw Error("extended background set smaller than the function's domain");
  for (std::size_t k : ks)
    if (k < 1) throw Error("nonsimulability: k must be positive");

  const std::uint64_t u_states = std::uint64_t{1} << n;
  const std::uint64_t v_states = std::uint64_t{1} << size_s_prime;
  std::vector<std::uint32_t> ft(u_states);
  for (std::uint64_t m = 0; m < u_states; ++m) ft[m] = std::uint32_t(f.at(m).value());

  std::uint64_t total = 1;
  for (std::uint64_t i = 0; i < v_states; ++i) total *= v_states;

  NonsimulabilityReport report;
  report.size_s_prime = size_s_prime;
  report.candidate_count = total;
  for (std::size_t k : ks) {
    NonsimulabilityEntry entry;
    entry.k = k;
    std::vector<std::uint32_t> g(v_states, 0);  // odometer, g[0] fastest
    for (std::uint64_t idx = 0;; ++idx) {
      if (detail::table_simulates(ft, u_states - 1, g, k)) {
        entry.simulator_exists = true;
        entry.candidates_checked = idx + 1;
        entry.witness = g;
        break;
      }
      std::size_t pos = 0;
      while (pos < g.size() && ++g[pos] == v_states) g[pos++] = 0;
      if (pos == g.size()) {
        entry.candidates_checked = total;
        break;
      }
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Enabled-semantics check and the containment property. If an encoder fires
// exactly the tags of the reactions enabled by each state, then every tag it
// produces must come from a reaction whose core contains the tagged
// reaction's core. A containment violation after a semantics pass would
// contradict that, so callers treat it as fatal.

struct ContainmentViolation {
  std::size_t encoder_reaction = 0;  // index into the encoder
  std::size_t tagged_reaction = 0;   // index into the tagged system
};

struct EnabledSemanticsReport {
  bool semantics_hold = false;
  std::optional<StateMask> failing_state;
  bool containments_checked = false;
  std::vector<ContainmentViolation> violations;

  bool ok() const { return semantics_hold && violations.empty(); }
};

inline EnabledSemanticsReport check_enabled_semantics(const ReactionSystem& c,
                                                      const ReactionSystem& a) {
  if (!a.is_ordinary()) throw Error("check_enabled_semantics: tagged system must be ordinary");
  if (c.input_alphabet() != a.input_alphabet())
    throw Error("check_enabled_semantics: encoder reads a different background set");
  if (a.input_alphabet().size() > kMaxSimulationSymbols)
    throw Error("check_enabled_semantics: background set too large");
  if (c.output_alphabet().size() != a.size())
    throw Error("check_enabled_semantics: tag alphabet does not match the reaction count");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (c.output_alphabet().name(i) != reaction_tag(i))
      throw Error("check_enabled_semantics: tag alphabet does not follow the tag naming");

  EnabledSemanticsReport report;
  report.semantics_hold = true;
  const std::uint64_t states = std::uint64_t{1} << a.input_alphabet().size();
  for (std::uint64_t m = 0; m < states; ++m) {
    const StateMask x = StateMask::from_value(m);
    StateMask expected;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (enabled(a.reactions()[i], x)) expected.set(i);
    if (result(c, x) != expected) {
      report.semantics_hold = false;
      report.failing_state = x;
      return report;
    }
  }

  report.containments_checked = true;
  for (std::size_t ci = 0; ci < c.size(); ++ci) {
    const Reaction& enc = c.reactions()[ci];
    for (std::size_t i = enc.products.next_bit(0); i < kMaxSymbols;
         i = enc.products.next_bit(i + 1)) {
      const Reaction& tagged = a.reactions()[i];
      if (!tagged.reactants.subset_of(enc.reactants) ||
          !tagged.inhibitors.subset_of(enc.inhibitors))
        report.violations.push_back({ci, i});
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Counting ingredients of the impossibility argument.

// Cores with |R cup I| <= 1 over an m-symbol set: (∅,∅) plus a reactant or
// an inhibitor singleton per symbol.
inline std::size_t count_strictly_minimal_cores(std::size_t m) {
  if (m < 1) throw Error("count_strictly_minimal_cores requires a nonempty set");
  return 2 * m + 1;
}

inline std::vector<std::pair<StateMask, StateMask>> enumerate_strictly_minimal_cores(
    std::size_t m) {
  if (m < 1 || m > kMaxSymbols) throw Error("core enumeration size out of range");
  std::vector<std::pair<StateMask, StateMask>> cores;
  cores.emplace_back(StateMask{}, StateMask{});
  for (std::size_t i = 0; i < m; ++i) cores.emplace_back(StateMask::single(i), StateMask{});
  for (std::size_t i = 0; i < m; ++i) cores.emplace_back(StateMask{}, StateMask::single(i));
  return cores;
}

// (2^m)^(2m+1): every core is absent or carries one of the 2^m - 1 nonempty
// products, and distinct assignments give distinct normalized systems.
inline BigInt count_strictly_minimal_systems(std::size_t m) {
  if (m < 1) throw Error("count_strictly_minimal_systems requires a nonempty set");
  return boost::multiprecision::pow(BigInt(1) << m, unsigned(2 * m + 1));
}

// Enumeration mode: materializes every assignment, normalizes, and counts
// distinct systems.
inline std::uint64_t enumerate_strictly_minimal_systems(std::size_t m) {
  if (m < 1) throw Error("system enumeration requires a nonempty set");
  if (m > kMaxSystemEnumerationSymbols)
    throw Error("system enumeration capped at " +
                std::to_string(kMaxSystemEnumerationSymbols) + " symbols");
  const auto cores = enumerate_strictly_minimal_cores(m);
  const std::uint64_t options = std::uint64_t{1} << m;  // 0 = core absent
  std::unordered_set<std::string> seen;
  std::vector<std::uint64_t> product(cores.size(), 0);
  for (;;) {
    std::string key;
    for (std::size_t c = 0; c < cores.size(); ++c) {
      if (product[c] == 0) continue;
      key += std::to_string(c) + ":" + std::to_string(product[c]) + ";";
    }
    seen.insert(std::move(key));
    std::size_t pos = cores.size();
    while (pos > 0) {
      --pos;
      if (++product[pos] < options) break;
      product[pos] = 0;
      if (pos == 0) return seen.size();
    }
  }
}

}  // namespace rsys
