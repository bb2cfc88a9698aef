// Copyright (c) 2026 The minhit authors
// SPDX-License-Identifier: MIT

#include "minhit/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include "minhit/core.hpp"
#include "minhit/errors.hpp"

namespace minhit {

namespace {

// Unbiased bounded draw, stable across standard libraries (the distribution
// classes in <random> are implementation-defined).
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - (std::numeric_limits<std::uint64_t>::max() % n);
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % n;
}

}  // namespace

SetFamily gen_random(const GenSpec& spec) {
  if (spec.set_size_min < 1 || spec.set_size_min > spec.set_size_max ||
      spec.set_size_max > spec.universe_size || spec.num_sets == 0)
    throw PreconditionError("infeasible generator spec");

  std::mt19937_64 rng(spec.seed);
  std::vector<std::uint32_t> pool(spec.universe_size);
  for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = static_cast<std::uint32_t>(i);

  std::vector<std::vector<std::uint32_t>> sets;
  sets.reserve(spec.num_sets);
  for (std::size_t i = 0; i < spec.num_sets; ++i) {
    std::size_t size =
        spec.set_size_min + bounded(rng, spec.set_size_max - spec.set_size_min + 1);
    // Partial Fisher-Yates: the first `size` entries become the sample.
    for (std::size_t k = 0; k < size; ++k) {
      std::size_t j = k + bounded(rng, pool.size() - k);
      std::swap(pool[k], pool[j]);
    }
    sets.emplace_back(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(size));
  }
  return SetFamily::from_external(sets);
}

namespace {

CsvRow run_one(const std::string& name, const SetFamily& family, EngineKind kind,
               const RunBudget& budget) {
  CsvRow row;
  row.instance = name;
  row.engine = to_string(kind);
  row.istats = instance_stats(family);
  row.status = "ok";

  auto deadline = std::chrono::steady_clock::now() +
                  std::chrono::duration<double>(budget.time_limit_s);
  bool timed_out = false;
  bool limit_hit = false;
  std::uint64_t count = 0;

  EmitSink sink;
  sink.on_mhs = [&](const ElementSet&) {
    ++count;
    if (budget.emit_limit && count >= *budget.emit_limit) {
      limit_hit = true;
      return false;
    }
    return true;
  };
  sink.should_stop = [&] {
    if (std::chrono::steady_clock::now() >= deadline) {
      timed_out = true;
      return true;
    }
    return false;
  };

  EngineStats stats;
  try {
    switch (kind) {
      case EngineKind::blocking:
        stats = enumerate_blocking(family, sink);
        break;
      case EngineKind::berge:
        stats = enumerate_berge(family, sink, budget.berge_cap);
        break;
      case EngineKind::mmcs:
        stats = enumerate_mmcs(family, sink);
        break;
    }
    row.time_ms = stats.wall_time.count() * 1000.0;
    row.decisions = stats.decisions;
    if (timed_out) {
      row.status = "timeout";
    } else if (limit_hit) {
      row.status = "partial";
      row.mhs_count = count;
    } else {
      row.mhs_count = count;
    }
  } catch (const BergeCapError&) {
    row.status = "memout";
  } catch (const Error&) {
    row.status = "error";
  }
  return row;
}

}  // namespace

std::vector<CsvRow> run_suite(const std::vector<std::pair<std::string, SetFamily>>& instances,
                              const std::vector<EngineKind>& engines,
                              const RunBudget& budget, std::size_t jobs) {
  if (budget.time_limit_s <= 0) throw PreconditionError("time limit must be positive");
  const std::size_t total = instances.size() * engines.size();
  std::vector<CsvRow> rows(total);
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= total) return;
      const auto& [name, family] = instances[i / engines.size()];
      rows[i] = run_one(name, family, engines[i % engines.size()], budget);
    }
  };

  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return rows;
}

std::vector<std::pair<std::size_t, double>> cactus_data(const std::vector<CsvRow>& rows) {
  std::vector<double> times;
  for (const CsvRow& r : rows)
    if (r.status == "ok") times.push_back(r.time_ms);
  std::sort(times.begin(), times.end());
  std::vector<std::pair<std::size_t, double>> out;
  out.reserve(times.size());
  for (std::size_t k = 0; k < times.size(); ++k) out.emplace_back(k + 1, times[k]);
  return out;
}

namespace {

// Power-of-ten bucket for v >= 1; values below 1 share the [0, 1) bucket.
std::pair<double, double> bucket_of(double v) {
  if (v < 1.0) return {0.0, 1.0};
  double lo = std::pow(10.0, std::floor(std::log10(v)));
  return {lo, lo * 10.0};
}

}  // namespace

std::vector<SummaryRow> summarize(const std::vector<CsvRow>& rows) {
  std::map<std::tuple<std::string, double, std::string>, SummaryRow> acc;
  for (const CsvRow& r : rows) {
    auto tally = [&](const std::string& kind, double value) {
      auto [lo, hi] = bucket_of(value);
      auto key = std::make_tuple(kind, lo, r.engine);
      SummaryRow& s = acc[key];
      s.bucket_kind = kind;
      s.bucket_lo = lo;
      s.bucket_hi = hi;
      s.engine = r.engine;
      ++s.total;
      if (r.status == "ok") ++s.solved;
    };
    tally("num_sets", static_cast<double>(r.istats.num_sets));
    tally("dis", r.istats.avg_disjunction);
  }
  std::vector<SummaryRow> out;
  out.reserve(acc.size());
  for (auto& [key, s] : acc) out.push_back(std::move(s));
  return out;
}

std::string write_summary_csv(const std::vector<SummaryRow>& rows) {
  std::ostringstream os;
  os << "bucket_kind,bucket_lo,bucket_hi,engine,solved,total\n";
  for (const SummaryRow& r : rows) {
    char lo[32], hi[32];
    std::snprintf(lo, sizeof lo, "%g", r.bucket_lo);
    std::snprintf(hi, sizeof hi, "%g", r.bucket_hi);
    os << r.bucket_kind << ',' << lo << ',' << hi << ',' << r.engine << ','
       << r.solved << ',' << r.total << '\n';
  }
  return os.str();
}

}  // namespace minhit
