// Copyright (c) 2026 The minhit authors
// SPDX-License-Identifier: MIT

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "minhit/asp.hpp"
#include "minhit/bench.hpp"
#include "minhit/core.hpp"
#include "minhit/engines.hpp"
#include "minhit/errors.hpp"
#include "minhit/io.hpp"

namespace {

bool use_color() {
  const char* v = std::getenv("MHS_COLOR");
  return v && std::string(v) == "1";
}

void report_error(const std::string& msg) {
  if (use_color())
    std::cerr << "\033[31merror:\033[0m " << msg << "\n";
  else
    std::cerr << "error: " << msg << "\n";
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw minhit::Error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

minhit::SetFamily load_instance(const std::string& path) {
  return minhit::parse_instance(slurp(path));
}

std::vector<std::uint32_t> parse_id_list(const std::string& csv) {
  std::vector<std::uint32_t> ids;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t used = 0;
    unsigned long v = std::stoul(tok, &used);
    if (used != tok.size()) throw minhit::Error("bad element id: " + tok);
    ids.push_back(static_cast<std::uint32_t>(v));
  }
  return ids;
}

// Weight files hold `<id> <weight>` lines; unlisted elements weigh 1.
std::vector<double> load_weights(const std::string& path, const minhit::SetFamily& fam) {
  std::vector<double> w(fam.universe_size(), 1.0);
  std::ifstream in(path);
  if (!in) throw minhit::Error("cannot open " + path);
  std::uint32_t id;
  double value;
  while (in >> id >> value) {
    for (std::size_t x = 0; x < fam.element_names().size(); ++x)
      if (fam.element_names()[x] == id) w[x] = value;
  }
  return w;
}

int cmd_enumerate(const std::string& input, const std::string& engine,
                  std::uint64_t limit, std::size_t size_bound, const std::string& require,
                  const std::string& weights_path, bool with_count,
                  const std::string& empty_as, bool verbose) {
  auto kind = minhit::engine_from_string(engine);
  auto fam = load_instance(input);
  std::optional<std::uint64_t> lim;
  if (limit > 0) lim = limit;
  auto result = minhit::enumerate(fam, *kind, lim);

  std::optional<std::size_t> sb;
  if (size_bound > 0) sb = size_bound;
  std::optional<minhit::ElementSet> req;
  if (!require.empty()) {
    minhit::ElementSet r(fam.universe_size());
    for (std::uint32_t id : parse_id_list(require)) {
      bool found = false;
      for (std::size_t x = 0; x < fam.element_names().size(); ++x)
        if (fam.element_names()[x] == id) {
          r.insert(x);
          found = true;
        }
      if (!found) {
        // Required element outside the universe: nothing can contain it.
        std::cout << minhit::write_mhses(minhit::EnumerationResult{}, fam.element_names(),
                                         with_count, empty_as);
        return result.partial ? 2 : 0;
      }
    }
    req = r;
  }
  std::optional<std::vector<double>> weights;
  if (!weights_path.empty()) weights = load_weights(weights_path, fam);

  if (sb || req || weights) result = minhit::filter_and_optimize(result, sb, req, weights);

  std::cout << minhit::write_mhses(result, fam.element_names(), with_count, empty_as);
  if (verbose)
    std::cerr << "engine=" << result.stats.engine << " decisions=" << result.stats.decisions
              << " time_ms=" << result.stats.wall_time.count() * 1000.0 << "\n";
  return result.partial ? 2 : 0;
}

int cmd_check(const std::string& input, const std::string& candidate) {
  auto fam = load_instance(input);
  minhit::ElementSet h(fam.universe_size());
  std::vector<std::uint32_t> unknown;
  for (std::uint32_t id : parse_id_list(candidate)) {
    bool found = false;
    for (std::size_t x = 0; x < fam.element_names().size(); ++x)
      if (fam.element_names()[x] == id) {
        h.insert(x);
        found = true;
      }
    if (!found) unknown.push_back(id);
  }
  if (!minhit::is_hitting_set(fam, h)) {
    std::cout << "not-hitting\n";
    return 0;
  }
  if (!unknown.empty()) {
    std::cout << "hitting-not-minimal (removable: " << unknown.front() << ")\n";
    return 0;
  }
  auto witnesses = minhit::critical_witnesses(fam, h);
  for (const auto& [x, w] : witnesses) {
    if (!w) {
      std::cout << "hitting-not-minimal (removable: " << fam.element_names()[x] << ")\n";
      return 0;
    }
  }
  std::cout << "minimal\n";
  return 0;
}

int cmd_bench(const std::vector<std::string>& files, const std::string& engines_csv,
              double time_limit, const std::string& out_path,
              const std::string& summary_path, std::size_t jobs, std::uint64_t seed,
              std::size_t gen_count, std::size_t gen_universe, std::size_t gen_sets,
              std::size_t gen_min, std::size_t gen_max) {
  std::vector<minhit::EngineKind> engines;
  std::stringstream ss(engines_csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    auto k = minhit::engine_from_string(tok);
    if (!k) throw minhit::Error("unknown engine: " + tok);
    engines.push_back(*k);
  }

  std::vector<std::pair<std::string, minhit::SetFamily>> instances;
  for (const auto& f : files) instances.emplace_back(f, load_instance(f));
  for (std::size_t i = 0; i < gen_count; ++i) {
    minhit::GenSpec spec{gen_universe, gen_sets, gen_min, gen_max, seed + i};
    instances.emplace_back("gen-" + std::to_string(seed + i), minhit::gen_random(spec));
  }
  if (instances.empty()) throw minhit::Error("no instances given");

  minhit::RunBudget budget;
  budget.time_limit_s = time_limit;
  auto rows = minhit::run_suite(instances, engines, budget, jobs);

  std::string csv = minhit::write_stats_csv(rows);
  if (out_path.empty()) {
    std::cout << csv;
  } else {
    std::ofstream(out_path) << csv;
  }
  if (!summary_path.empty())
    std::ofstream(summary_path) << minhit::write_summary_csv(minhit::summarize(rows));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimal hitting set enumeration"};
  app.require_subcommand(1);

  std::string input, engine = "mmcs", require, weights_path, candidate, empty_as;
  std::uint64_t limit = 0;
  std::size_t size_bound = 0;
  bool with_count = false, verbose = false;

  auto* enumerate = app.add_subcommand("enumerate", "enumerate all minimal hitting sets");
  enumerate->add_option("input", input)->required();
  enumerate->add_option("--engine", engine)->check(CLI::IsMember({"blocking", "berge", "mmcs"}));
  enumerate->add_option("--limit", limit);
  enumerate->add_option("--size-bound", size_bound);
  enumerate->add_option("--require", require);
  enumerate->add_option("--weights", weights_path);
  enumerate->add_flag("--count-trailer", with_count);
  enumerate->add_option("--empty-as", empty_as);
  enumerate->add_flag("--verbose", verbose);

  auto* count = app.add_subcommand("count", "count minimal hitting sets");
  count->add_option("input", input)->required();
  count->add_option("--engine", engine)->check(CLI::IsMember({"blocking", "berge", "mmcs"}));

  auto* check = app.add_subcommand("check", "classify a candidate hitting set");
  check->add_option("input", input)->required();
  check->add_option("--candidate", candidate)->required();

  auto* emit = app.add_subcommand("emit-asp", "print the ASP-Core-2 program");
  emit->add_option("input", input)->required();

  auto* stats = app.add_subcommand("stats", "print instance statistics");
  stats->add_option("input", input)->required();

  std::size_t gen_universe = 0, gen_sets = 0, gen_min = 1, gen_max = 1;
  std::uint64_t seed = 0;
  std::string out_path;
  auto* gen = app.add_subcommand("gen", "generate a random instance");
  gen->add_option("--universe", gen_universe)->required();
  gen->add_option("--sets", gen_sets)->required();
  gen->add_option("--min-size", gen_min);
  gen->add_option("--max-size", gen_max);
  gen->add_option("--seed", seed);
  gen->add_option("--out", out_path);

  std::vector<std::string> bench_files;
  std::string engines_csv = "blocking,berge,mmcs", summary_path;
  double time_limit = 1000.0;
  std::size_t jobs = 1, gen_count = 0;
  auto* bench = app.add_subcommand("bench", "run a benchmark suite");
  bench->add_option("inputs", bench_files);
  bench->add_option("--engines", engines_csv);
  bench->add_option("--time-limit", time_limit);
  bench->add_option("--out", out_path);
  bench->add_option("--summary", summary_path);
  bench->add_option("--jobs", jobs);
  bench->add_option("--seed", seed);
  bench->add_option("--gen-count", gen_count);
  bench->add_option("--gen-universe", gen_universe);
  bench->add_option("--gen-sets", gen_sets);
  bench->add_option("--gen-min", gen_min);
  bench->add_option("--gen-max", gen_max);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*enumerate)
      return cmd_enumerate(input, engine, limit, size_bound, require, weights_path,
                           with_count, empty_as, verbose);
    if (*count) {
      auto fam = load_instance(input);
      auto result = minhit::enumerate(fam, *minhit::engine_from_string(engine));
      std::cout << result.mhses.size() << "\n";
      return result.partial ? 2 : 0;
    }
    if (*check) return cmd_check(input, candidate);
    if (*emit) {
      auto fam = load_instance(input);
      std::cout << minhit::emit_asp_core2(minhit::dlp(fam), fam.element_names());
      return 0;
    }
    if (*stats) {
      auto fam = load_instance(input);
      auto st = minhit::instance_stats(fam);
      char dis[32];
      std::snprintf(dis, sizeof dis, "%.3f", st.avg_disjunction);
      std::cout << "sets=" << st.num_sets << " universe=" << st.universe_size
                << " dis=" << dis << "\n";
      return 0;
    }
    if (*gen) {
      minhit::GenSpec spec{gen_universe, gen_sets, gen_min, gen_max, seed};
      std::string text = minhit::write_instance(minhit::gen_random(spec));
      if (out_path.empty())
        std::cout << text;
      else
        std::ofstream(out_path) << text;
      return 0;
    }
    if (*bench)
      return cmd_bench(bench_files, engines_csv, time_limit, out_path, summary_path,
                       jobs, seed, gen_count, gen_universe, gen_sets, gen_min, gen_max);
  } catch (const minhit::Error& e) {
    report_error(e.what());
    return 1;
  } catch (const std::exception& e) {
    report_error(e.what());
    return 1;
  }
  return 0;
}
