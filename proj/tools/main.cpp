#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

#include "forge/checks.hpp"
#include "forge/vaserstein.hpp"

namespace {

using namespace forge;

void emit(const json& j, const std::string& path) {
  if (path.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  out << j.dump(2) << "\n";
}

int cmd_verify(const std::string& suite, const std::string& ring_text,
               std::uint64_t seed, int trials, const std::string& json_path,
               bool timing) {
  Ring ring = Ring::parse(ring_text);
  CheckContext ctx{ring, seed, trials};
  auto t0 = std::chrono::steady_clock::now();
  std::vector<CheckResult> results = run_suite(suite, ctx);
  auto t1 = std::chrono::steady_clock::now();
  std::optional<double> wall;
  if (timing)
    wall = std::chrono::duration<double, std::milli>(t1 - t0).count();

  json config{{"suite", suite},
              {"ring", ring_text},
              {"seed", seed},
              {"trials", trials}};
  emit(report_to_json("verify", config, results, wall), json_path);
  for (const auto& r : results)
    std::cerr << (r.pass ? "[pass] " : "[FAIL] ") << r.name << "\n";
  return all_passed(results) ? 0 : 1;
}

int cmd_orbits(const std::string& ring_text, int n, const std::string& side,
               long budget, int degree_bound, const std::string& report_path) {
  Ring ring = Ring::parse(ring_text);
  if (degree_bound >= 0) {
    if (!ring.is_polynomial())
      throw CLI::ValidationError("--degree-bound applies to polynomial rings only");
    ring = Ring::polynomial(ring.base(), ring.num_vars(), degree_bound);
  }
  if (side == "um") {
    OrbitPartition part = um_orbits(ring, n, Int(budget));
    json sizes = json::array();
    for (const auto& c : part.classes) sizes.push_back(c.size());
    emit(json{{"ring", ring_to_json(ring)},
              {"n", n},
              {"side", "um"},
              {"orbit_count", part.classes.size()},
              {"class_sizes", sizes},
              {"generator_set", part.generator_set}},
         report_path);
    return 0;
  }
  if (side == "sphere") {
    OrbitPartition part = sphere_orbits(ring, n, Int(budget));
    json sizes = json::array();
    for (const auto& c : part.classes) sizes.push_back(c.size());
    emit(json{{"ring", ring_to_json(ring)},
              {"n", n},
              {"side", "sphere"},
              {"orbit_count", part.classes.size()},
              {"class_sizes", sizes},
              {"generator_set", part.generator_set}},
         report_path);
    return 0;
  }
  BijectionReport rep = bijection_check(ring, n, Int(budget));
  emit(bijection_report_to_json(rep), report_path);
  return rep.ok ? 0 : 1;
}

int cmd_symbol(const std::string& ring_text, const std::string& point_text,
               std::uint64_t seed, int trials, const std::string& json_path) {
  Ring ring = Ring::parse(ring_text);
  json pj = json::parse(point_text);
  SpherePoint p = pj.is_array()
                      ? SpherePoint(ring, row_from_json(ring, pj[0]),
                                    row_from_json(ring, pj[1]))
                      : point_from_json(ring, pj);
  AlternatingMatrix v = vaserstein_matrix(p);

  Sampler sampler(seed);
  int passed = 0;
  for (int t = 0; t < trials; t++) {
    MatrixR g = MatrixR::identity(ring, 4);
    int len = 1 + static_cast<int>(sampler.uniform(3));
    for (int k = 0; k < len; k++) {
      EpinGenerator gen{sampler.uniform(2) ? FirstSlot::E1 : FirstSlot::F1,
                        sampler.uniform(2) ? BasisKind::E : BasisKind::F,
                        2 + static_cast<int>(sampler.uniform(2)),
                        sampler.element(ring), 3};
      g = g * epin_top_block(gen);
    }
    auto [g_prime, v_moved] = transport_action(g, p);
    if (pfaffian4(v_moved) == pfaffian4(v)) passed++;
  }
  emit(json{{"ring", ring_to_json(ring)},
            {"point", point_to_json(p)},
            {"V", matrix_to_json(v.body)},
            {"pfaffian", elem_to_json(pfaffian4(v))},
            {"transport_checks",
             json{{"trials", trials}, {"passed", passed},
                  {"all_passed", passed == trials}}}},
       json_path);
  return passed == trials ? 0 : 1;
}

int cmd_compose(const std::string& algebra, const std::string& lhs_path,
                const std::string& rhs_path, const std::string& json_path) {
  std::ifstream lf(lhs_path), rf(rhs_path);
  if (!lf || !rf) throw CLI::ValidationError("cannot open operand file");
  json lj = json::parse(lf), rj = json::parse(rf);
  ZMatrix lhs = z_matrix_from_json(lj), rhs = z_matrix_from_json(rj);
  const bool want_oct = algebra == "octonion";
  if ((lhs.algebra == AlgebraKind::SplitOctonion) != want_oct ||
      (rhs.algebra == AlgebraKind::SplitOctonion) != want_oct)
    throw CLI::ValidationError("operand algebra does not match --algebra");
  ZMatrix out = compose(lhs, rhs);
  RingElem q_prod = lhs.q() * rhs.q();
  emit(json{{"result", z_matrix_to_json(out)},
            {"q_lhs", elem_to_json(lhs.q())},
            {"q_rhs", elem_to_json(rhs.q())},
            {"q_result", elem_to_json(out.q())},
            {"multiplicative", out.q() == q_prod}},
       json_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact engine for unimodular rows, Suslin matrices, elementary "
               "Spin orbits and composition algebras"};
  app.require_subcommand(1);

  std::string ring_text = "zmod:6";
  std::string suite = "all";
  std::string json_path;
  std::uint64_t seed = 0;
  int trials = 100;
  bool timing = false;

  auto* verify = app.add_subcommand("verify", "run an identity-check suite");
  verify->add_option("suite", suite,
                     "suslin | epin | vaserstein | composition | all");
  verify->add_option("--ring", ring_text, "int | zmod:<m> | poly:<base>:<k>");
  verify->add_option("--seed", seed, "rng seed (reports are reproducible)");
  verify->add_option("--trials", trials, "trials per randomized check");
  verify->add_option("--json", json_path, "write the report to this file");
  verify->add_flag("--timing", timing, "include wall time in the report");

  std::string side = "both";
  int n = 3;
  long budget = 1000000;
  int degree_bound = -1;
  std::string report_path;
  auto* orbits = app.add_subcommand("orbits", "enumerate orbits over a finite ring");
  orbits->add_option("--ring", ring_text, "zmod:<m> or an enumerable poly ring");
  orbits->add_option("--n", n, "row length");
  orbits->add_option("--side", side, "um | sphere | both");
  orbits->add_option("--budget", budget, "max points to enumerate");
  orbits->add_option("--degree-bound", degree_bound,
                     "enumeration window for polynomial rings");
  orbits->add_option("--report", report_path, "write the report to this file");

  std::string point_text;
  auto* symbol = app.add_subcommand("symbol", "Vaserstein matrix of a point");
  symbol->add_option("--ring", ring_text, "coefficient ring");
  symbol->add_option("--point", point_text, "[[a1,a2,a3],[b1,b2,b3]] as JSON")
      ->required();
  symbol->add_option("--seed", seed, "rng seed for the transport checks");
  symbol->add_option("--trials", trials, "number of transport checks");
  symbol->add_option("--json", json_path, "write the report to this file");

  std::string algebra = "quaternion";
  std::string lhs_path, rhs_path;
  auto* compose_cmd = app.add_subcommand("compose", "compose two Z-matrices");
  compose_cmd->add_option("--algebra", algebra, "quaternion | octonion");
  compose_cmd->add_option("--lhs", lhs_path, "left operand JSON file")->required();
  compose_cmd->add_option("--rhs", rhs_path, "right operand JSON file")->required();
  compose_cmd->add_option("--json", json_path, "write the result to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed())
      return cmd_verify(suite, ring_text, seed, trials, json_path, timing);
    if (orbits->parsed())
      return cmd_orbits(ring_text, n, side, budget, degree_bound, report_path);
    if (symbol->parsed())
      return cmd_symbol(ring_text, point_text, seed, trials, json_path);
    if (compose_cmd->parsed())
      return cmd_compose(algebra, lhs_path, rhs_path, json_path);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
