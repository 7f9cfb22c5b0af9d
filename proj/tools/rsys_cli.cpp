// Command-line surface for the reaction systems workbench. All commands read
// and write the line-based text formats from rsys/text.hpp on files or
// standard streams ('-'). Exit codes: 0 success, 1 checked-property false,
// 2 error.

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rsys/rsys.hpp"

namespace {

using namespace rsys;

std::string read_document(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const char* yesno(bool b) { return b ? "true" : "false"; }

std::vector<std::size_t> parse_k_set(const std::string& text) {
  std::vector<std::size_t> ks;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string part =
        comma == std::string::npos ? text.substr(pos) : text.substr(pos, comma - pos);
    std::size_t used = 0;
    unsigned long k = 0;
    try {
      k = std::stoul(part, &used);
    } catch (...) {
      throw Error("bad k-set entry '" + part + "'");
    }
    if (used != part.size() || k == 0) throw Error("bad k-set entry '" + part + "'");
    ks.push_back(k);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (ks.empty()) throw Error("empty k-set");
  return ks;
}

void print_classification(const ReactionSystem& a) {
  StructureReport r = classify(a);
  std::cout << "nondegenerate: " << yesno(r.nondegenerate) << '\n'
            << "maximallyInhibited: " << yesno(r.maximally_inhibited) << '\n'
            << "minimal: " << yesno(r.minimal) << '\n'
            << "strictlyMinimal: " << yesno(r.strictly_minimal) << '\n'
            << "reactionCount: " << r.reaction_count << '\n'
            << "distinctCoreCount: " << r.distinct_core_count << '\n';
}

void print_subadditivity(const char* prefix, const SubadditivityResult& r, const Alphabet& s) {
  std::cout << prefix << "Subadditive: " << yesno(r.holds) << '\n';
  if (r.witness) {
    std::cout << prefix << "WitnessX: " << render_state(r.witness->x, s) << '\n'
              << prefix << "WitnessY: " << render_state(r.witness->y, s) << '\n'
              << prefix << "OffendingElement: " << s.name(r.witness->offending_element) << '\n';
  }
}

void print_simulation_report(const SimulationReport& r, const Alphabet& domain) {
  std::cout << "holds: " << yesno(r.holds) << '\n'
            << "statesChecked: " << r.states_checked << '\n'
            << "maxHorizonUsed: " << r.max_horizon_used << '\n';
  if (!r.holds) {
    std::cout << "failingState: " << render_state(*r.failing_state, domain) << '\n'
              << "failingStep: " << *r.failing_step << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reaction systems workbench"};
  app.require_subcommand(1);
  int property_rc = 0;

  // ---- eval -------------------------------------------------------------
  std::string eval_system, eval_state;
  auto* eval_cmd = app.add_subcommand("eval", "apply a system to a state once");
  eval_cmd->add_option("system", eval_system, "system document path or '-'")->required();
  eval_cmd->add_option("state", eval_state, "state, e.g. 'a b' or '-'")->required();
  eval_cmd->callback([&] {
    ReactionSystem a = parse_system(read_document(eval_system));
    StateMask x = parse_state(eval_state, a.input_alphabet());
    std::cout << render_state(result(a, x), a.output_alphabet()) << '\n';
  });

  // ---- trace ------------------------------------------------------------
  std::string trace_system, trace_state;
  std::size_t trace_steps = 0;
  auto* trace_cmd = app.add_subcommand("trace", "print the state sequence X, res(X), ...");
  trace_cmd->add_option("system", trace_system)->required();
  trace_cmd->add_option("state", trace_state)->required();
  trace_cmd->add_option("--steps", trace_steps, "number of res applications")->required();
  trace_cmd->callback([&] {
    ReactionSystem a = parse_system(read_document(trace_system));
    StateMask x = parse_state(trace_state, a.input_alphabet());
    auto states = trace(a, x, trace_steps);
    std::cout << render_state(states[0], a.input_alphabet()) << '\n';
    for (std::size_t i = 1; i < states.size(); ++i)
      std::cout << render_state(states[i], a.output_alphabet()) << '\n';
  });

  // ---- tabulate ----------------------------------------------------------
  std::string tab_system;
  auto* tab_cmd = app.add_subcommand("tabulate", "print the full transition table");
  tab_cmd->add_option("system", tab_system)->required();
  tab_cmd->callback([&] {
    std::cout << render_table(tabulate(parse_system(read_document(tab_system))));
  });

  // ---- classify ----------------------------------------------------------
  std::string cls_system;
  auto* cls_cmd = app.add_subcommand("classify", "structural classification of a system");
  cls_cmd->add_option("system", cls_system)->required();
  cls_cmd->callback([&] { print_classification(parse_system(read_document(cls_system))); });

  // ---- check-fn ----------------------------------------------------------
  std::string fn_table;
  auto* fn_cmd =
      app.add_subcommand("check-fn", "subadditivity and minimal-specifiability of a table");
  fn_cmd->add_option("table", fn_table)->required();
  fn_cmd->callback([&] {
    FunctionTable f = parse_table(read_document(fn_table));
    SubadditivityResult u = union_subadditive(f);
    SubadditivityResult i = intersection_subadditive(f);
    print_subadditivity("union", u, f.domain());
    print_subadditivity("intersection", i, f.domain());
    const bool specifiable = u.holds && i.holds;
    std::cout << "minimalSpecifiable: " << yesno(specifiable) << '\n';
    if (!specifiable) property_rc = 1;
  });

  // ---- construct ---------------------------------------------------------
  auto* con_cmd = app.add_subcommand("construct", "simulation constructions");
  con_cmd->require_subcommand(1);

  std::string dec_system;
  auto* dec_cmd = con_cmd->add_subcommand("decompose", "strictly minimal encoder/decoder pair");
  dec_cmd->add_option("system", dec_system)->required();
  dec_cmd->callback([&] {
    Decomposition d = decompose(parse_system(read_document(dec_system)));
    std::cout << "# encoder\n" << render_system(d.encoder) << "\n# decoder\n"
              << render_system(d.decoder);
  });

  std::string sim2_table;
  auto* sim2_cmd = con_cmd->add_subcommand("sim2", "fixed-background 2-simulator");
  sim2_cmd->add_option("table", sim2_table)->required();
  sim2_cmd->callback([&] {
    std::cout << render_system(simulator2(parse_table(read_document(sim2_table))));
  });

  std::string strong2_table;
  auto* strong2_cmd = con_cmd->add_subcommand("strong2", "fixed-background strong 2-simulator");
  strong2_cmd->add_option("table", strong2_table)->required();
  strong2_cmd->callback([&] {
    std::cout << render_system(strong_simulator2(parse_table(read_document(strong2_table))));
  });

  std::string strongk_table;
  std::size_t strongk_l = 0, strongk_k = 0;
  auto* strongk_cmd =
      con_cmd->add_subcommand("strongk", "strong k-simulator with l extra symbols");
  strongk_cmd->add_option("table", strongk_table)->required();
  strongk_cmd->add_option("--l", strongk_l, "number of extra symbols")->required();
  strongk_cmd->add_option("--k", strongk_k, "simulation order, k <= 2^l")->required();
  strongk_cmd->callback([&] {
    FunctionTable f = parse_table(read_document(strongk_table));
    std::cout << render_system(strong_simulator_k(f, strongk_l, strongk_k));
  });

  std::string enc_domain;
  auto* enc_cmd = con_cmd->add_subcommand("encoder", "universal subset encoder");
  enc_cmd->add_option("--domain", enc_domain, "background symbols, e.g. 'a b'")->required();
  enc_cmd->callback(
      [&] { std::cout << render_system(universal_encoder(parse_domain(enc_domain))); });

  std::string senc_domain;
  auto* senc_cmd = con_cmd->add_subcommand("strong-encoder", "strong-variant subset encoder");
  senc_cmd->add_option("--domain", senc_domain)->required();
  senc_cmd->callback(
      [&] { std::cout << render_system(strong_encoder(parse_domain(senc_domain))); });

  // ---- verify-sim ----------------------------------------------------------
  std::string vs_table, vs_system;
  std::size_t vs_k = 0;
  bool vs_strong = false;
  auto* vs_cmd = app.add_subcommand("verify-sim", "check (strong) k-simulation of a table");
  vs_cmd->add_option("table", vs_table)->required();
  vs_cmd->add_option("system", vs_system)->required();
  vs_cmd->add_option("--k", vs_k, "simulation order")->required();
  vs_cmd->add_flag("--strong", vs_strong, "check strong simulation (exact equality)");
  vs_cmd->callback([&] {
    FunctionTable f = parse_table(read_document(vs_table));
    ReactionSystem a = parse_system(read_document(vs_system));
    SimulationReport r =
        vs_strong ? check_strong_simulation(f, a, vs_k) : check_simulation(f, a, vs_k);
    print_simulation_report(r, f.domain());
    if (!r.holds) property_rc = 1;
  });

  // ---- gen-chain ----------------------------------------------------------
  std::string gc_domain, gc_order;
  auto* gc_cmd = app.add_subcommand("gen-chain", "chain function from a subset enumeration");
  gc_cmd->add_option("--domain", gc_domain)->required();
  gc_cmd->add_option("--order", gc_order, "semicolon-separated subsets, e.g. 'a;b;-;a b'")
      ->required();
  gc_cmd->callback([&] {
    Alphabet s = parse_domain(gc_domain);
    auto order = parse_subset_list(gc_order, s);
    std::cout << render_table(chain_function(s, order));
  });

  // ---- threshold ----------------------------------------------------------
  std::size_t th_s = 0, th_sprime = 0;
  auto* th_cmd = app.add_subcommand("threshold", "nonsimulability bound for chain functions");
  th_cmd->add_option("--s", th_s, "size of the original background set")->required();
  th_cmd->add_option("--sprime", th_sprime, "size of the extended background set")->required();
  th_cmd->callback([&] { std::cout << simulation_threshold(th_s, th_sprime) << '\n'; });

  // ---- count-cores ----------------------------------------------------------
  std::size_t cc_size = 0;
  bool cc_enumerate = false;
  auto* cc_cmd = app.add_subcommand("count-cores", "strictly minimal cores over a set");
  cc_cmd->add_option("--size", cc_size)->required();
  cc_cmd->add_flag("--enumerate", cc_enumerate, "list the cores and check the count");
  cc_cmd->callback([&] {
    std::size_t count = count_strictly_minimal_cores(cc_size);
    if (cc_enumerate) {
      std::vector<std::string> names;
      for (std::size_t i = 0; i < cc_size; ++i) names.push_back("x" + std::to_string(i + 1));
      Alphabet s(std::move(names));
      auto cores = enumerate_strictly_minimal_cores(cc_size);
      if (cores.size() != count) throw Error("core enumeration disagrees with the formula");
      for (const auto& [r, i] : cores)
        std::cout << render_state(r, s) << " | " << render_state(i, s) << '\n';
    }
    std::cout << count << '\n';
  });

  // ---- count-systems ----------------------------------------------------------
  std::size_t cs_size = 0;
  bool cs_enumerate = false;
  auto* cs_cmd = app.add_subcommand("count-systems", "strictly minimal systems over a set");
  cs_cmd->add_option("--size", cs_size)->required();
  cs_cmd->add_flag("--enumerate", cs_enumerate, "enumerate the systems and check the count");
  cs_cmd->callback([&] {
    BigInt formula = count_strictly_minimal_systems(cs_size);
    if (cs_enumerate) {
      std::uint64_t counted = enumerate_strictly_minimal_systems(cs_size);
      if (BigInt(counted) != formula)
        throw Error("system enumeration disagrees with the formula");
    }
    std::cout << formula << '\n';
  });

  // ---- nonsim ----------------------------------------------------------
  std::string ns_table, ns_kset;
  std::size_t ns_sprime = 0;
  auto* ns_cmd =
      app.add_subcommand("nonsim", "scan every transition function for a k-simulator");
  ns_cmd->add_option("table", ns_table)->required();
  ns_cmd->add_option("--sprime-size", ns_sprime, "extended background size (max 3)")->required();
  ns_cmd->add_option("--k-set", ns_kset, "comma-separated k values, e.g. '2,3,4'")->required();
  ns_cmd->callback([&] {
    FunctionTable f = parse_table(read_document(ns_table));
    NonsimulabilityReport r = exhaustive_nonsimulability(f, ns_sprime, parse_k_set(ns_kset));
    for (const auto& e : r.entries) {
      if (e.simulator_exists) {
        std::cout << "k=" << e.k << ": simulating function exists (candidate "
                  << e.candidates_checked << " of " << r.candidate_count << ")\n";
        property_rc = 1;
      } else {
        std::cout << "k=" << e.k << ": no simulating function (searched "
                  << e.candidates_checked << ")\n";
      }
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return property_rc;
}
