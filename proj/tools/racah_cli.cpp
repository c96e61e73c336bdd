// Command-line front end. Every result is one compact JSON document on
// stdout with a fixed key order, so identical invocations are byte-identical.
// Exit codes: 0 success, 2 usage error, 3 domain error.

#include <array>
#include <exception>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "racah/error.hpp"
#include "racah/gamma_series.hpp"
#include "racah/gt_pattern.hpp"
#include "racah/semiinvariant.hpp"
#include "racah/sixj.hpp"
#include "racah/threej.hpp"

using nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<int> parse_ints(const std::string& text, char sep,
                            const std::string& what) {
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t stop = text.find(sep, start);
    const std::string piece =
        text.substr(start, stop == std::string::npos ? stop : stop - start);
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(piece, &used));
      if (used != piece.size()) throw std::invalid_argument(piece);
    } catch (const std::exception&) {
      throw UsageError("cannot parse '" + text + "' as " + what);
    }
    if (stop == std::string::npos) break;
    start = stop + 1;
  }
  return out;
}

racah::Weight3 parse_weight(const std::string& text) {
  const auto v = parse_ints(text, ',', "a weight m1,m2,m3");
  if (v.size() != 3) throw UsageError("weight '" + text + "' needs 3 entries");
  return {v[0], v[1], v[2]};
}

racah::GTPattern parse_pattern(const std::string& text) {
  std::array<std::string, 3> rows;
  std::size_t start = 0;
  int count = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ';') {
      if (count == 3) throw UsageError("pattern '" + text + "' has too many rows");
      rows[count++] = text.substr(start, i - start);
      start = i + 1;
    }
  }
  if (count != 3)
    throw UsageError("pattern '" + text + "' needs rows m13,m23,m33;m12,m22;m11");
  const auto top = parse_ints(rows[0], ',', "a pattern row");
  const auto mid = parse_ints(rows[1], ',', "a pattern row");
  const auto low = parse_ints(rows[2], ',', "a pattern row");
  if (top.size() != 3 || mid.size() != 2 || low.size() != 1)
    throw UsageError("pattern '" + text + "' needs rows of sizes 3;2;1");
  return {top[0], top[1], top[2], mid[0], mid[1], low[0]};
}

racah::TauLabel parse_tau(const std::string& text) {
  const auto v = parse_ints(text, ',', "a label tau1,...,tau8");
  if (v.size() != 8) throw UsageError("label '" + text + "' needs 8 entries");
  racah::TauLabel t;
  for (int i = 0; i < 8; ++i) t.tau[i] = v[i];
  return t;
}

ordered_json pattern_json(const racah::GTPattern& p) {
  return ordered_json::array(
      {{p.m13, p.m23, p.m33}, {p.m12, p.m22}, {p.m11}});
}

ordered_json poly_json(const racah::SparsePoly& f) {
  ordered_json obj = ordered_json::object();
  for (const auto& [m, c] : f.terms())
    obj[racah::monomial_name(m[0])] = racah::rational_to_string(c);
  return obj;
}

void emit(const ordered_json& doc) { std::cout << doc.dump() << "\n"; }

int run_basis(const std::string& weight_arg) {
  const racah::Weight3 w = parse_weight(weight_arg);
  const auto patterns = racah::enumerate_patterns(w);
  ordered_json vectors = ordered_json::array();
  for (const auto& p : patterns) {
    ordered_json entry;
    entry["pattern"] = pattern_json(p);
    entry["polynomial"] = poly_json(racah::agkz_basis(p, racah::GroupId{0}));
    entry["norm_sq"] = racah::rational_to_string(racah::norm_sq(p));
    vectors.push_back(entry);
  }
  ordered_json doc;
  doc["weight"] = {w.m1, w.m2, w.m3};
  doc["dimension"] = patterns.size();
  doc["vectors"] = vectors;
  emit(doc);
  return 0;
}

int run_multiplicity(const std::array<std::string, 3>& weight_args,
                     bool generators) {
  std::array<racah::Weight3, 3> ws;
  for (int i = 0; i < 3; ++i) {
    ws[i] = parse_weight(weight_args[i]);
    racah::require_valid(ws[i]);
  }
  const auto labels =
      racah::enumerate_tau(ws[0], ws[1], ws[2], /*basis_only=*/!generators);
  ordered_json list = ordered_json::array();
  for (const auto& t : labels) list.push_back(t.tau);
  ordered_json doc;
  doc["labels"] = list;
  emit(doc);
  return 0;
}

int run_threej(const std::array<std::string, 3>& weight_args,
               const std::vector<std::string>& pattern_args,
               const std::string& tau_arg) {
  racah::ThreeJQuery q;
  for (int i = 0; i < 3; ++i) q.weights[i] = parse_weight(weight_args[i]);
  for (int i = 0; i < 3; ++i) q.patterns[i] = parse_pattern(pattern_args[i]);
  q.label = parse_tau(tau_arg);
  ordered_json doc;
  doc["value"] = racah::rational_to_string(racah::threej_value(q));
  emit(doc);
  return 0;
}

racah::SixJProblem parse_sixj(const std::array<std::string, 6>& weight_args,
                              const std::vector<std::string>& tau_args) {
  racah::SixJProblem p;
  p.v1 = parse_weight(weight_args[0]);
  p.v2 = parse_weight(weight_args[1]);
  p.u = parse_weight(weight_args[2]);
  p.v3 = parse_weight(weight_args[3]);
  p.w = parse_weight(weight_args[4]);
  p.h = parse_weight(weight_args[5]);
  for (int i = 0; i < 4; ++i) p.labels[i] = parse_tau(tau_args[i]);
  return p;
}

int run_sixj(const std::array<std::string, 6>& weight_args,
             const std::vector<std::string>& tau_args,
             const std::string& method) {
  const racah::SixJProblem p = parse_sixj(weight_args, tau_args);
  ordered_json doc;
  if (method == "lattice") {
    doc["value"] = racah::rational_to_string(racah::sixj_lattice(p));
  } else if (method == "contract") {
    doc["value"] = racah::rational_to_string(racah::sixj_contract(p));
  } else if (method == "definition") {
    doc["value"] = racah::rational_to_string(racah::sixj_by_definition(p));
  } else {
    const racah::Rational lat = racah::sixj_lattice(p);
    const racah::Rational con = racah::sixj_contract(p);
    const racah::Rational def = racah::sixj_by_definition(p);
    doc["lattice"] = racah::rational_to_string(lat);
    doc["contract"] = racah::rational_to_string(con);
    doc["definition"] = racah::rational_to_string(def);
    doc["agree"] = lat == con && con == def;
  }
  emit(doc);
  return 0;
}

int run_check_selection(const std::array<std::string, 6>& weight_args,
                        const std::vector<std::string>& tau_args) {
  const racah::SixJProblem p = parse_sixj(weight_args, tau_args);
  ordered_json doc;
  doc["feasible"] = racah::selection_rule(p);
  emit(doc);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Gelfand-Tsetlin bases, 3j- and 6j-symbols for gl3"};
  app.require_subcommand(1);

  std::string basis_weight;
  auto* basis = app.add_subcommand("basis", "orthogonal basis of one irrep");
  basis->add_option("weight", basis_weight, "highest weight m1,m2,0")
      ->required();

  std::array<std::string, 3> mult_weights;
  bool generators = false;
  auto* mult =
      app.add_subcommand("multiplicity", "coupling labels of a weight triple");
  mult->add_option("w1", mult_weights[0], "first weight")->required();
  mult->add_option("w2", mult_weights[1], "second weight")->required();
  mult->add_option("w3", mult_weights[2], "third weight")->required();
  mult->add_flag("--generators", generators,
                 "list all generators, not only the basis labels");

  std::array<std::string, 3> tj_weights;
  std::vector<std::string> tj_patterns;
  std::string tj_tau;
  auto* threej = app.add_subcommand("threej", "one 3j-symbol");
  threej->add_option("w1", tj_weights[0], "first weight")->required();
  threej->add_option("w2", tj_weights[1], "second weight")->required();
  threej->add_option("w3", tj_weights[2], "third weight")->required();
  threej
      ->add_option("--patterns", tj_patterns,
                   "three patterns m13,m23,m33;m12,m22;m11")
      ->expected(3)
      ->required();
  threej->add_option("--tau", tj_tau, "coupling label tau1,...,tau8")
      ->required();

  std::array<std::string, 6> sj_weights;
  std::vector<std::string> sj_taus;
  std::string method = "lattice";
  auto* sixj = app.add_subcommand("sixj", "one 6j-symbol");
  sixj->add_option("V1", sj_weights[0], "weight V1")->required();
  sixj->add_option("V2", sj_weights[1], "weight V2")->required();
  sixj->add_option("U", sj_weights[2], "weight U")->required();
  sixj->add_option("V3", sj_weights[3], "weight V3")->required();
  sixj->add_option("W", sj_weights[4], "weight W")->required();
  sixj->add_option("H", sj_weights[5], "weight H")->required();
  sixj->add_option("--tau", sj_taus, "four coupling labels")
      ->expected(4)
      ->required();
  sixj->add_option("--method", method, "lattice, contract, definition or all")
      ->check(CLI::IsMember({"lattice", "contract", "definition", "all"}));

  std::array<std::string, 6> cs_weights;
  std::vector<std::string> cs_taus;
  auto* check = app.add_subcommand("check-selection",
                                   "support feasibility of a 6j problem");
  check->add_option("V1", cs_weights[0], "weight V1")->required();
  check->add_option("V2", cs_weights[1], "weight V2")->required();
  check->add_option("U", cs_weights[2], "weight U")->required();
  check->add_option("V3", cs_weights[3], "weight V3")->required();
  check->add_option("W", cs_weights[4], "weight W")->required();
  check->add_option("H", cs_weights[5], "weight H")->required();
  check->add_option("--tau", cs_taus, "four coupling labels")
      ->expected(4)
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    emit({{"error", {{"code", "Usage"}, {"message", e.what()}}}});
    return 2;
  }

  try {
    if (*basis) return run_basis(basis_weight);
    if (*mult) return run_multiplicity(mult_weights, generators);
    if (*threej) return run_threej(tj_weights, tj_patterns, tj_tau);
    if (*sixj) return run_sixj(sj_weights, sj_taus, method);
    if (*check) return run_check_selection(cs_weights, cs_taus);
  } catch (const UsageError& e) {
    emit({{"error", {{"code", "Usage"}, {"message", e.what()}}}});
    return 2;
  } catch (const racah::Error& e) {
    emit({{"error", {{"code", e.code()}, {"message", e.what()}}}});
    return 3;
  }
  return 2;
}
