// Command-line harness: loads or generates an instance, runs one of the
// search algorithms, and writes a JSON result (and optional CSV trace).
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "aa/engine.hpp"
#include "aa/io.hpp"
#include "aa/tabu.hpp"
#include "aa/working_table.hpp"

namespace {

using nlohmann::ordered_json;

struct RandomSpec {
  int n = 0;
  double density = 0.5;
  std::int64_t range = 10;
};

RandomSpec parse_random(const std::string& s) {
  RandomSpec r;
  std::istringstream in(s);
  char c1 = 0, c2 = 0;
  if (!(in >> r.n >> c1 >> r.density >> c2 >> r.range) || c1 != ',' || c2 != ',')
    throw CLI::ValidationError("--random expects n,density,range");
  return r;
}

ordered_json result_json(const aa::RunResult& res, const ordered_json& config,
                         int n) {
  ordered_json j;
  j["config"] = config;
  j["iterations"] = res.iterations;
  j["best_objective"] = res.best_objective;
  std::string bits(n, '0');
  for (int v = 1; v <= n; ++v)
    if (v < static_cast<int>(res.best_assignment.size()) && res.best_assignment[v])
      bits[v - 1] = '1';
  j["best_assignment"] = bits;
  j["true_local_optima"] = res.true_local_optima;
  j["conditional_local_optima"] = res.conditional_local_optima;
  j["ascents_launched"] = res.ascents_launched;
  j["trigger_firings"] = res.trigger_firings;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"alternating-ascent search over binary quadratic instances"};

  std::string algo = "single";
  std::string choice = "weighted";
  std::string instance_path, random_spec, out_path, trace_path;
  int window = 15, depth = 8, trigger = 5;
  double alpha = 2.0, f = 0.8, w1 = 0.1, w2 = 10.0;
  std::string arithmetic = "int";
  std::string mc = "off";
  long max_iter = 1000;
  std::uint64_t seed = 1;
  bool do_brute = false, replay = false;

  app.add_option("--algo", algo)->check(CLI::IsMember({"single", "double-v1", "double-v2", "tabu"}));
  app.add_option("--choice", choice)->check(CLI::IsMember({"weighted", "simple-cutoff", "advanced-cutoff"}));
  auto* opt_inst = app.add_option("--instance", instance_path, "instance file");
  auto* opt_rand = app.add_option("--random", random_spec, "n,density,range");
  app.add_option("--Q", window, "memory window length");
  app.add_option("--r", depth, "recency depth");
  app.add_option("--trigger", trigger);
  app.add_option("--alpha", alpha);
  app.add_option("--arithmetic", arithmetic)->check(CLI::IsMember({"int", "real"}));
  app.add_option("--F", f);
  app.add_option("--W1", w1);
  app.add_option("--W2", w2);
  app.add_option("--mc", mc)->check(CLI::IsMember({"off", "A", "B"}));
  app.add_option("--max-iter", max_iter);
  app.add_option("--seed", seed);
  app.add_option("--out", out_path, "result JSON path");
  app.add_option("--trace", trace_path, "trace CSV path");
  app.add_flag("--brute-force", do_brute, "verify against exhaustive optimum (n <= 22)");
  app.add_flag("--replay-working-table", replay, "run the scripted replay and exit");
  opt_inst->excludes(opt_rand);

  CLI11_PARSE(app, argc, argv);

  try {
    if (replay) {
      const auto rep = aa::replay_working_table();
      std::cout << "initial EE row:";
      for (auto v : rep.initial_ee_row) std::cout << ' ' << v;
      std::cout << "\npost EE row:   ";
      for (auto v : rep.post_ee_row) std::cout << ' ' << v;
      std::cout << "\nstatus counts after moves 4-8:";
      for (int v : rep.status_count_trajectory) std::cout << ' ' << v;
      std::cout << "\ntrigger fired after move 8: "
                << (rep.trigger_fired_after_move8 ? "yes" : "no")
                << "\nheld variable: x" << rep.held_variable << '\n';
      return 0;
    }

    aa::QuboInstance instance = [&] {
      if (!instance_path.empty()) return aa::load_qubo_file(instance_path);
      if (!random_spec.empty()) {
        const RandomSpec r = parse_random(random_spec);
        return aa::generate_instance(r.n, r.density, r.range, seed);
      }
      throw std::runtime_error("need --instance or --random");
    }();

    ordered_json config;
    config["algo"] = algo;
    config["choice"] = choice;
    config["n"] = instance.size();
    config["Q"] = window;
    config["r"] = depth;
    config["trigger"] = trigger;
    config["alpha"] = alpha;
    config["arithmetic"] = arithmetic;
    config["F"] = f;
    config["W1"] = w1;
    config["W2"] = w2;
    config["mc"] = mc;
    config["max_iter"] = max_iter;
    config["seed"] = seed;

    aa::QuboProvider provider(instance);
    aa::RunResult res;
    if (algo == "tabu") {
      aa::TabuConfig tc;
      tc.max_iter = max_iter;
      tc.seed = seed;
      aa::TabuSearch search(provider, tc);
      search.trace_enabled = !trace_path.empty();
      res = search.run();
    } else {
      aa::AAConfig cfg;
      cfg.ee.window = window;
      cfg.ee.depth = depth;
      cfg.ee.alpha = alpha;
      cfg.ee.arithmetic =
          arithmetic == "int" ? aa::EEArithmetic::Integer : aa::EEArithmetic::Real;
      cfg.choice.rule = choice == "weighted"        ? aa::ChoiceRule::WeightedSum
                        : choice == "simple-cutoff" ? aa::ChoiceRule::SimpleCutoff
                                                    : aa::ChoiceRule::AdvancedCutoff;
      cfg.choice.f = f;
      cfg.choice.w1 = w1;
      cfg.choice.w2 = w2;
      cfg.trigger = trigger;
      cfg.max_iter = max_iter;
      cfg.seed = seed;
      cfg.mc = mc == "off" ? aa::McVariant::Off
               : mc == "A" ? aa::McVariant::A
                           : aa::McVariant::B;
      cfg.algo = algo == "single"      ? aa::Algorithm::SinglePass
                 : algo == "double-v1" ? aa::Algorithm::DoublePassV1
                                       : aa::Algorithm::DoublePassV2;
      if (cfg.ee.arithmetic == aa::EEArithmetic::Integer) {
        aa::EngineInt eng(provider, cfg);
        eng.trace_enabled = !trace_path.empty();
        res = eng.run();
      } else {
        aa::EngineReal eng(provider, cfg);
        eng.trace_enabled = !trace_path.empty();
        res = eng.run();
      }
    }

    ordered_json out = result_json(res, config, instance.size());
    if (do_brute) {
      const auto bf = aa::brute_force(instance);
      out["optimum"] = bf.optimum;
      out["optimum_found"] = res.best_objective == bf.optimum;
    }
    out["wall_time_ms"] = res.wall_time_ms;

    const std::string text = out.dump(2) + "\n";
    if (!out_path.empty()) {
      std::ofstream of(out_path);
      of << text;
    }
    std::cout << text;

    if (!trace_path.empty()) {
      std::ofstream tf(trace_path);
      tf << aa::trace_to_csv(res.trace);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
