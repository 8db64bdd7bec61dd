// resgraph — exact invariants of resolution dual graphs.
//
// Subcommands operate on a graph given either as `catalog:<name>` or as a
// path to a JSON file (bare graph schema or the document container with
// analytic hints). Exit codes: 0 success, 1 I/O or parse error, 2 domain or
// precondition error, 3 inconsistent analytic input, 4 oracle bound too
// small.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "resgraph/blowup.hpp"
#include "resgraph/catalog.hpp"
#include "resgraph/classify.hpp"
#include "resgraph/elliptic.hpp"
#include "resgraph/errors.hpp"
#include "resgraph/json_io.hpp"
#include "resgraph/lattice.hpp"
#include "resgraph/reduction.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace resgraph;

constexpr const char* kReportSchema = "report-1";

int output_width() {
  if (const char* hint = std::getenv("RESGRAPH_WIDTH")) {
    const int w = std::atoi(hint);
    if (w >= 40 && w <= 200) return w;
  }
  return 72;
}

GraphDocument load_input(const std::string& arg) {
  if (arg.rfind("catalog:", 0) == 0) {
    const std::string name = arg.substr(8);
    if (!catalog_has(name)) throw ParseError("unknown catalog graph '" + name + "'");
    return catalog_graph(name);
  }
  return load_document(arg);
}

long to_int64(const Int& x) { return to_long(x); }

json cycle_json(const Cycle& c) {
  json out = json::object();
  for (std::size_t i : c.support()) {
    out[c.graph().vertex(i).id] = to_int64(c[i]);
  }
  return out;
}

json qcycle_json(const QCycle& c) {
  json out = json::object();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (sign(c[i]) != 0) out[c.graph().vertex(i).id] = format_rational(c[i]);
  }
  return out;
}

json support_json(const SupportSet& s) {
  json out = json::array();
  for (std::size_t i : s.indices()) out.push_back(s.graph().vertex(i).id);
  return out;
}

Cycle parse_cycle_arg(const DualGraph& g, const std::string& text) {
  std::vector<std::pair<std::string, Int>> entries;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    const std::string token = text.substr(start, comma - start);
    const std::size_t eq = token.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw ParseError("bad cycle entry '" + token + "', expected id=value");
    }
    entries.emplace_back(token.substr(0, eq), parse_integer(token.substr(eq + 1)));
    start = comma + 1;
  }
  return Cycle::from_ids(g, entries);
}

std::vector<std::string> parse_id_list(const std::string& text) {
  std::vector<std::string> ids;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    if (comma > start) ids.push_back(text.substr(start, comma - start));
    start = comma + 1;
  }
  return ids;
}

BlowupCenter parse_center_arg(const std::string& text) {
  const auto ids = parse_id_list(text);
  if (ids.size() == 1) return BlowupCenter::free_point(ids[0]);
  if (ids.size() == 2) return BlowupCenter::intersection_point(ids[0], ids[1]);
  throw ParseError("--center expects 'id' (free point) or 'id,id' (intersection)");
}

// Every report carries a combinatorial block and a conditional block; the
// latter holds only statements that depend on user-asserted analytic data.
struct Report {
  std::string command;
  std::string input;
  json combinatorial = json::object();
  json conditional = json::object();

  void print(bool as_json) const {
    if (as_json) {
      json out;
      out["schema"] = kReportSchema;
      out["command"] = command;
      out["input"] = input;
      out["combinatorial"] = combinatorial;
      out["conditional"] = conditional;
      std::cout << out.dump(2) << "\n";
      return;
    }
    const std::string rule(static_cast<std::size_t>(output_width()), '-');
    std::cout << command << " " << input << "\n" << rule << "\n";
    std::cout << "combinatorial facts:\n";
    print_block(combinatorial);
    std::cout << "conditional on analytic hints:\n";
    if (conditional.empty()) {
      std::cout << "  (none provided)\n";
    } else {
      print_block(conditional);
    }
  }

 private:
  static void print_block(const json& block) {
    for (const auto& [key, value] : block.items()) {
      std::cout << "  " << key << ": ";
      if (value.is_string()) {
        std::cout << value.get<std::string>();
      } else {
        std::cout << value.dump();
      }
      std::cout << "\n";
    }
  }
};

std::string hints_note(const GraphDocument& doc) {
  if (!doc.analytic_hints) return "";
  std::string note = "user-asserted:";
  if (doc.analytic_hints->pg) note += " pg=" + to_string(*doc.analytic_hints->pg);
  if (doc.analytic_hints->gorenstein) {
    note += std::string(" gorenstein=") + (*doc.analytic_hints->gorenstein ? "true" : "false");
  }
  return note;
}

int cmd_check(const GraphDocument& doc, const std::string& input, bool as_json) {
  const DualGraph& g = *doc.graph;
  Report report{"check", input};
  report.combinatorial["vertices"] = g.size();
  report.combinatorial["edges"] = g.edges().size();
  report.combinatorial["connected"] = true;  // enforced at load time
  report.combinatorial["negative_definite"] = g.is_negative_definite();
  report.print(as_json);
  if (!g.is_negative_definite()) {
    std::cerr << "error: not negative definite\n";
    return 2;
  }
  return 0;
}

int cmd_fundamental_cycle(const GraphDocument& doc, const std::string& input,
                          bool as_json, const std::string& support_arg) {
  const DualGraph& g = *doc.graph;
  const SupportSet support = support_arg.empty()
                                 ? SupportSet::full(g)
                                 : SupportSet::from_ids(g, parse_id_list(support_arg));
  const auto result = fundamental_cycle_with_steps(g, support);
  Report report{"fundamental-cycle", input};
  report.combinatorial["support"] = support_json(support);
  report.combinatorial["fundamental_cycle"] = cycle_json(result.cycle);
  report.combinatorial["laufer_steps"] = result.steps;
  report.combinatorial["self_intersection"] =
      to_int64(intersect(result.cycle, result.cycle));
  report.print(as_json);
  return 0;
}

int cmd_canonical_cycle(const GraphDocument& doc, const std::string& input, bool as_json) {
  const QCycle zk = canonical_cycle(*doc.graph);
  Report report{"canonical-cycle", input};
  report.combinatorial["canonical_cycle"] = qcycle_json(zk);
  report.combinatorial["numerically_gorenstein"] = zk.is_integral();
  report.print(as_json);
  return 0;
}

int cmd_classify(const GraphDocument& doc, const std::string& input, bool as_json) {
  const DualGraph& g = *doc.graph;
  const ClassificationReport c = classify(g);
  Report report{"classify", input};
  json& out = report.combinatorial;
  out["classification"] = c.label();
  out["is_rational"] = c.is_rational;
  out["is_elliptic"] = c.is_elliptic;
  out["chi_fundamental"] = to_int64(c.chi_fundamental);
  out["fundamental_cycle"] = cycle_json(fundamental_cycle(g));
  out["degree"] = to_int64(c.degree_value);
  out["canonical_cycle"] = qcycle_json(c.canonical_cycle);
  out["is_numerically_gorenstein"] = c.is_numerically_gorenstein;
  out["is_minimal_resolution_graph"] = c.is_minimal_resolution_graph;
  if (c.minimally_elliptic_cycle) {
    out["minimally_elliptic_cycle"] = cycle_json(*c.minimally_elliptic_cycle);
    out["is_minimally_elliptic"] = *c.is_minimally_elliptic;
  }

  if (doc.analytic_hints && doc.analytic_hints->pg && c.is_elliptic &&
      c.is_numerically_gorenstein) {
    const Int bound = pg_upper_bound(g);
    const Int& pg = *doc.analytic_hints->pg;
    if (pg > bound) {
      throw InconsistentInputError("user-asserted pg = " + to_string(pg) +
                                   " exceeds the bound m + 1 = " + to_string(bound));
    }
    report.conditional["note"] = hints_note(doc);
    report.conditional["pg_upper_bound"] = to_int64(bound);
    report.conditional["maximally_elliptic"] =
        pg == bound ? "yes (pg = m+1); implies Gorenstein"
                    : "no (pg < m+1)";
  } else if (doc.analytic_hints) {
    report.conditional["note"] = hints_note(doc);
  }
  report.print(as_json);
  return 0;
}

int cmd_elliptic_sequence(const GraphDocument& doc, const std::string& input,
                          bool as_json, const std::string& support_arg) {
  const DualGraph& g = *doc.graph;
  const SupportSet support = support_arg.empty()
                                 ? SupportSet::full(g)
                                 : SupportSet::from_ids(g, parse_id_list(support_arg));
  const EllipticSequence seq = elliptic_sequence(g, support);
  Report report{"elliptic-sequence", input};
  report.combinatorial["m"] = seq.length_m();
  json cycles = json::array();
  for (const Cycle& z : seq.cycles) cycles.push_back(cycle_json(z));
  report.combinatorial["cycles"] = cycles;
  json sums = json::array();
  for (const Cycle& c : seq.partial_sums) sums.push_back(cycle_json(c));
  report.combinatorial["partial_sums"] = sums;
  json supports = json::array();
  for (const SupportSet& s : seq.supports) supports.push_back(support_json(s));
  report.combinatorial["supports"] = supports;
  report.print(as_json);
  return 0;
}

int cmd_tomari_verify(const GraphDocument& doc, const std::string& input, bool as_json,
                      long bound) {
  const DualGraph& g = *doc.graph;
  const TomariVerification v = verify_tomari(g, SupportSet::full(g), bound);
  Report report{"tomari-verify", input};
  report.combinatorial["bound_multiplier"] = bound;
  report.combinatorial["ok"] = v.ok;
  json found = json::array();
  for (const Cycle& c : v.found) found.push_back(cycle_json(c));
  report.combinatorial["found"] = found;
  json expected = json::array();
  for (const Cycle& c : v.expected) expected.push_back(cycle_json(c));
  report.combinatorial["expected"] = expected;
  report.print(as_json);
  if (!v.ok) {
    throw InternalCheckError("enumerated anti-nef chi=0 set differs from the sequence");
  }
  return 0;
}

int cmd_degree(const GraphDocument& doc, const std::string& input, bool as_json) {
  Report report{"degree", input};
  report.combinatorial["degree"] = to_int64(degree(*doc.graph));
  report.print(as_json);
  return 0;
}

int cmd_maxell_check(const GraphDocument& doc, const std::string& input, bool as_json) {
  const MaxellShapeReport r = maxell_shape_check(*doc.graph);
  Report report{"maxell-check", input};
  report.combinatorial["ok"] = r.ok;
  report.combinatorial["m"] = r.m;
  report.combinatorial["chain"] = r.chain;
  report.combinatorial["diagnostic"] = r.diagnostic;
  report.print(as_json);
  return 0;
}

int cmd_reduction(const GraphDocument& doc, const std::string& input, bool as_json) {
  const DualGraph& g = *doc.graph;
  const ReductionReport r = normal_reduction_number(g);
  Report report{"reduction", input};
  if (r.value == ReductionReport::Value::Unknown) {
    report.combinatorial["normal_reduction_number"] = "unknown";
  } else {
    report.combinatorial["normal_reduction_number"] = static_cast<int>(r.value);
  }
  report.combinatorial["basis"] = r.basis;
  report.combinatorial["is_rational"] = r.is_rational;
  report.combinatorial["is_elliptic"] = r.is_elliptic;
  if (is_minimal_resolution_graph(g)) {
    const FinalTheoremReport f = check_final_theorem_shape(g);
    report.combinatorial["gorenstein_pg_maximal_candidate"] = f.satisfied;
    report.combinatorial["candidate_statement"] = f.statement;
  }

  if (doc.analytic_hints && doc.analytic_hints->pg && r.is_elliptic) {
    const QRange range = q_range_if_elliptic(g, *doc.analytic_hints->pg);
    report.conditional["note"] = hints_note(doc);
    report.conditional["q_range"] =
        "{" + to_string(range.lo) + ", ..., " + to_string(range.hi) + "}";
    report.conditional["q_range_basis"] = range.basis;
  } else if (doc.analytic_hints) {
    report.conditional["note"] = hints_note(doc);
  }
  report.print(as_json);
  return 0;
}

int cmd_kato(const GraphDocument& doc, const std::string& input, bool as_json,
             const std::string& cycle_arg, long q, long pg) {
  const DualGraph& g = *doc.graph;
  const Cycle z = parse_cycle_arg(g, cycle_arg);
  const Int colength = kato_colength(g, z, Int(q), Int(pg));
  Report report{"kato", input};
  report.combinatorial["cycle"] = cycle_json(z);
  Int cycle_part = -div_exact(intersect(z, z) + canonical_dot(z), Int(2));
  report.combinatorial["cycle_part"] = to_int64(cycle_part);
  report.conditional["q"] = q;
  report.conditional["pg"] = pg;
  report.conditional["colength"] = to_int64(colength);
  report.print(as_json);
  return 0;
}

int cmd_pg_max_ideal(const GraphDocument& doc, const std::string& input, bool as_json,
                     const std::string& cycle_arg) {
  const DualGraph& g = *doc.graph;
  const Cycle m = parse_cycle_arg(g, cycle_arg);
  const PgMaxIdealReport r = is_pg_maximal_ideal_cycle(g, m);
  Report report{"pg-max-ideal", input};
  report.combinatorial["cycle"] = cycle_json(m);
  report.combinatorial["is_pg_maximal_ideal_cycle"] = r.is_pg_cycle;
  report.combinatorial["pa"] = to_int64(r.pa);
  report.combinatorial["self_intersection"] = to_int64(r.self_intersection);
  report.combinatorial["canonical_dot"] = to_int64(r.canonical_dot);

  const bool gorenstein = doc.analytic_hints && doc.analytic_hints->gorenstein &&
                          *doc.analytic_hints->gorenstein;
  const TomariMpgReport t = tomari_mpg_numeric_conditions(g, m, gorenstein);
  report.conditional["notes"] = t.notes;
  if (doc.analytic_hints) report.conditional["hints"] = hints_note(doc);
  report.print(as_json);
  return 0;
}

int cmd_blowup(const GraphDocument& doc, const std::string& input, bool as_json,
               const std::string& center_arg) {
  const DualGraph& g = *doc.graph;
  const BlowupRecord record = blow_up(g, parse_center_arg(center_arg));
  const DualGraph& ng = record.new_graph();

  json pullback_table = json::object();
  for (std::size_t i = 0; i < g.size(); ++i) {
    pullback_table[g.vertex(i).id] = cycle_json(pullback(record, Cycle::unit(g, i)));
  }
  json envelope;
  envelope["schema_version"] = "1";
  envelope["graph"] = json::parse(graph_json(ng));
  envelope["pullback"] = json::object();
  envelope["pullback"]["new_vertex"] = record.new_vertex_id();
  envelope["pullback"]["center"] = center_arg;
  envelope["pullback"]["table"] = pullback_table;

  if (as_json) {
    std::cout << envelope.dump(2) << "\n";
  } else {
    std::cout << "blow-up of " << input << " at " << center_arg << "\n";
    std::cout << "new vertex: " << record.new_vertex_id() << "\n";
    std::cout << "pullback table (total transforms of the old curves):\n";
    for (std::size_t i = 0; i < g.size(); ++i) {
      std::cout << "  phi* " << g.vertex(i).id << " = "
                << to_string(pullback(record, Cycle::unit(g, i))) << "\n";
    }
    std::cout << "new graph JSON:\n" << graph_json(ng);
  }
  return 0;
}

int cmd_pullback(const GraphDocument& doc, const std::string& input, bool as_json,
                 const std::string& center_arg, const std::string& cycle_arg) {
  const DualGraph& g = *doc.graph;
  const BlowupRecord record = blow_up(g, parse_center_arg(center_arg));
  const Cycle d = parse_cycle_arg(g, cycle_arg);
  const Cycle lifted = pullback(record, d);
  Report report{"pullback", input};
  report.combinatorial["center"] = center_arg;
  report.combinatorial["new_vertex"] = record.new_vertex_id();
  report.combinatorial["cycle"] = cycle_json(d);
  report.combinatorial["pullback"] = cycle_json(lifted);
  report.combinatorial["self_intersection"] = to_int64(intersect(lifted, lifted));
  report.print(as_json);
  return 0;
}

int cmd_oracle(const GraphDocument& doc, const std::string& input, bool as_json,
               long bound) {
  const DualGraph& g = *doc.graph;
  struct Check {
    std::string name;
    bool ok;
    std::string details;
  };
  std::vector<Check> checks;

  const SupportSet all = SupportSet::full(g);
  const auto fc = fundamental_cycle_with_steps(g, all);
  {
    const Cycle oracle = oracle_minimal_anti_nef(g, all, bound);
    checks.push_back({"fundamental-vs-enumeration", oracle == fc.cycle,
                      "minimal anti-nef cycle " + to_string(oracle)});
  }
  {
    Int total = 0;
    for (const Int& c : fc.cycle.coefficients()) total += c;
    checks.push_back({"laufer-step-count", Int(fc.steps) == total - Int(g.size()),
                      std::to_string(fc.steps) + " additions"});
  }
  {
    const ChiScanResult scan = oracle_chi_nonnegative(g, bound);
    checks.push_back({"chi-scan-consistency", true,
                      "min chi = " + to_string(scan.min_chi) + " at " +
                          to_string(scan.attaining)});
  }
  if (is_elliptic(g)) {
    const Cycle e_min = minimally_elliptic_cycle(g);
    checks.push_back({"minimally-elliptic-cycle", true, "E_min = " + to_string(e_min)});
    checks.push_back({"tomari", verify_tomari(g, all, bound).ok,
                      "anti-nef chi=0 cycles match the elliptic sequence"});
    if (is_numerically_gorenstein(g) && is_minimal_resolution_graph(g)) {
      checks.push_back({"canonical-identity", verify_canonical_identity(g),
                        "Z_K equals the elliptic sequence sum"});
      if (degree(g) == 1) {
        const MaxellShapeReport shape = maxell_shape_check(g);
        checks.push_back({"maxell-shape", shape.ok, shape.diagnostic});
      }
    }
  }
  {
    const BlowupRecord record =
        blow_up(g, BlowupCenter::free_point(g.vertex(0).id));
    checks.push_back({"canonical-pullback", canonical_pullback_check(record),
                      "K identities after blowing up a free point on " +
                          g.vertex(0).id});
  }

  bool all_ok = true;
  if (as_json) {
    json out;
    out["schema"] = kReportSchema;
    out["command"] = "oracle";
    out["input"] = input;
    out["bound_multiplier"] = bound;
    out["checks"] = json::array();
    for (const Check& c : checks) {
      out["checks"].push_back({{"name", c.name}, {"ok", c.ok}, {"details", c.details}});
      all_ok = all_ok && c.ok;
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "oracle cross-checks for " << input << " (bound multiplier " << bound
              << ")\n";
    for (const Check& c : checks) {
      std::cout << (c.ok ? "PASS  " : "FAIL  ") << c.name << ": " << c.details << "\n";
      all_ok = all_ok && c.ok;
    }
  }
  if (!all_ok) throw InternalCheckError("an oracle cross-check failed");
  return 0;
}

int cmd_catalog(bool as_json) {
  if (as_json) {
    json out;
    out["schema"] = kReportSchema;
    out["command"] = "catalog";
    out["catalog"] = json::array();
    for (const CatalogEntry& e : catalog_entries()) {
      out["catalog"].push_back({{"name", e.name}, {"description", e.description}});
    }
    std::cout << out.dump(2) << "\n";
  } else {
    for (const CatalogEntry& e : catalog_entries()) {
      std::cout << e.name << "\n    " << e.description << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants of resolution dual graphs of normal surface singularities"};
  app.require_subcommand(1);

  bool as_json = false;
  app.add_flag("--json", as_json, "emit a machine-readable report");

  std::string input;
  std::string support_arg;
  std::string cycle_arg;
  std::string center_arg;
  long bound = 2;
  long q_value = 0;
  long pg_value = 0;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", input, "catalog:<name> or a JSON file path")->required();
    cmd->fallthrough();
  };

  CLI::App* check = app.add_subcommand("check", "connectivity and negative definiteness");
  add_input(check);

  CLI::App* fundamental =
      app.add_subcommand("fundamental-cycle", "Laufer's fundamental cycle");
  add_input(fundamental);
  fundamental->add_option("--support", support_arg, "comma-separated vertex ids");

  CLI::App* canonical = app.add_subcommand("canonical-cycle", "rational canonical cycle");
  add_input(canonical);

  CLI::App* classify_cmd =
      app.add_subcommand("classify", "full combinatorial classification");
  add_input(classify_cmd);

  CLI::App* sequence = app.add_subcommand("elliptic-sequence", "elliptic sequence");
  add_input(sequence);
  sequence->add_option("--support", support_arg, "comma-separated vertex ids");

  CLI::App* tomari = app.add_subcommand(
      "tomari-verify", "exhaustive check of the anti-nef chi=0 characterization");
  add_input(tomari);
  tomari->add_option("--bound", bound, "bound multiplier")->check(CLI::PositiveNumber);

  CLI::App* degree_cmd = app.add_subcommand("degree", "-Z_E^2");
  add_input(degree_cmd);

  CLI::App* maxell = app.add_subcommand("maxell-check", "degree-1 chain shape test");
  add_input(maxell);

  CLI::App* reduction = app.add_subcommand("reduction", "normal reduction number");
  add_input(reduction);

  CLI::App* kato = app.add_subcommand("kato", "colength by Kato's Riemann-Roch formula");
  add_input(kato);
  kato->add_option("--cycle", cycle_arg, "cycle as id=value,...")->required();
  kato->add_option("--q", q_value, "q(I), user-supplied")->required();
  kato->add_option("--pg", pg_value, "p_g(A), user-supplied")->required();

  CLI::App* pgmax =
      app.add_subcommand("pg-max-ideal", "p_a test for the maximal ideal cycle");
  add_input(pgmax);
  pgmax->add_option("--cycle", cycle_arg, "cycle as id=value,...")->required();

  CLI::App* blowup_cmd = app.add_subcommand("blowup", "monoidal transform");
  add_input(blowup_cmd);
  blowup_cmd->add_option("--center", center_arg, "vertex id, or id,id for an edge")
      ->required();

  CLI::App* pullback_cmd =
      app.add_subcommand("pullback", "total transform of a cycle under a blow-up");
  add_input(pullback_cmd);
  pullback_cmd->add_option("--center", center_arg, "vertex id, or id,id for an edge")
      ->required();
  pullback_cmd->add_option("--cycle", cycle_arg, "cycle as id=value,...")->required();

  CLI::App* oracle_cmd =
      app.add_subcommand("oracle", "run every oracle cross-check on the graph");
  add_input(oracle_cmd);
  oracle_cmd->add_option("--bound", bound, "bound multiplier")->check(CLI::PositiveNumber);

  CLI::App* catalog_cmd = app.add_subcommand("catalog", "list built-in graphs");
  catalog_cmd->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (catalog_cmd->parsed()) return cmd_catalog(as_json);

    const GraphDocument doc = load_input(input);
    if (check->parsed()) return cmd_check(doc, input, as_json);
    if (fundamental->parsed())
      return cmd_fundamental_cycle(doc, input, as_json, support_arg);
    if (canonical->parsed()) return cmd_canonical_cycle(doc, input, as_json);
    if (classify_cmd->parsed()) return cmd_classify(doc, input, as_json);
    if (sequence->parsed()) return cmd_elliptic_sequence(doc, input, as_json, support_arg);
    if (tomari->parsed()) return cmd_tomari_verify(doc, input, as_json, bound);
    if (degree_cmd->parsed()) return cmd_degree(doc, input, as_json);
    if (maxell->parsed()) return cmd_maxell_check(doc, input, as_json);
    if (reduction->parsed()) return cmd_reduction(doc, input, as_json);
    if (kato->parsed()) return cmd_kato(doc, input, as_json, cycle_arg, q_value, pg_value);
    if (pgmax->parsed()) return cmd_pg_max_ideal(doc, input, as_json, cycle_arg);
    if (blowup_cmd->parsed()) return cmd_blowup(doc, input, as_json, center_arg);
    if (pullback_cmd->parsed())
      return cmd_pullback(doc, input, as_json, center_arg, cycle_arg);
    if (oracle_cmd->parsed()) return cmd_oracle(doc, input, as_json, bound);
    std::cerr << "error: no subcommand selected\n";
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const InconsistentInputError& e) {
    std::cerr << "error (inconsistent analytic input): " << e.what() << "\n";
    return 3;
  } catch (const OracleBoundError& e) {
    std::cerr << "error (oracle bound): " << e.what() << "\n";
    return 4;
  } catch (const DomainError& e) {
    std::cerr << "error (domain): " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  }
}
