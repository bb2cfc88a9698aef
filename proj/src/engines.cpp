// Copyright (c) 2026 The minhit authors
// SPDX-License-Identifier: MIT

#include "minhit/engines.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <unordered_set>

#include "minhit/errors.hpp"

namespace minhit {

std::string to_string(EngineKind kind) {
  switch (kind) {
    case EngineKind::blocking: return "blocking";
    case EngineKind::berge: return "berge";
    case EngineKind::mmcs: return "mmcs";
  }
  return "?";
}

std::optional<EngineKind> engine_from_string(const std::string& name) {
  if (name == "blocking") return EngineKind::blocking;
  if (name == "berge") return EngineKind::berge;
  if (name == "mmcs") return EngineKind::mmcs;
  return std::nullopt;
}

namespace {

std::vector<std::vector<std::uint32_t>> occurrence_lists(const SetFamily& family) {
  std::vector<std::vector<std::uint32_t>> occ(family.universe_size());
  for (std::size_t i = 0; i < family.num_sets(); ++i)
    family.sets()[i].for_each(
        [&](std::size_t x) { occ[x].push_back(static_cast<std::uint32_t>(i)); });
  return occ;
}

// ---------------------------------------------------------------------------
// Blocking engine: a minimal DPLL (two-watched literals, unit propagation,
// lowest-index decision heuristic, no learning) over the monotone clause
// system, plus a shrink-to-minimal pass per model.
// ---------------------------------------------------------------------------

// Literal encoding: variable v -> positive 2v, negative 2v+1.
class Dpll {
 public:
  explicit Dpll(std::size_t nvars)
      : nvars_(nvars), watches_(2 * nvars), assign_(nvars, 0) {}

  void add_clause(std::vector<std::uint32_t> lits) {
    if (lits.empty()) {
      has_empty_ = true;
      return;
    }
    if (lits.size() == 1) {
      units_.push_back(lits[0]);
      return;
    }
    std::size_t ci = clauses_.size();
    watches_[lits[0]].push_back(ci);
    watches_[lits[1]].push_back(ci);
    clauses_.push_back(std::move(lits));
  }

  /// Finds any model; fills `model` with per-variable truth values.
  bool solve(std::vector<bool>& model) {
    if (has_empty_) return false;
    std::fill(assign_.begin(), assign_.end(), std::int8_t{0});
    trail_.clear();
    decisions_.clear();
    qhead_ = 0;
    for (std::uint32_t u : units_)
      if (!enqueue(u)) return false;
    for (;;) {
      if (!propagate()) {
        if (!backtrack()) return false;
        continue;
      }
      std::size_t v = next_unassigned();
      if (v == nvars_) break;
      // Polarity false first: negative assignments satisfy blocking clauses
      // outright and let unit propagation force the monotone base clauses.
      decisions_.push_back({trail_.size(), false});
      enqueue(2 * static_cast<std::uint32_t>(v) + 1);
    }
    model.assign(nvars_, false);
    for (std::size_t v = 0; v < nvars_; ++v) model[v] = assign_[v] > 0;
    return true;
  }

 private:
  struct Decision {
    std::size_t trail_mark;
    bool flipped;
  };

  bool value_true(std::uint32_t lit) const {
    std::int8_t a = assign_[lit >> 1];
    return (lit & 1) ? a < 0 : a > 0;
  }
  bool value_false(std::uint32_t lit) const {
    std::int8_t a = assign_[lit >> 1];
    return (lit & 1) ? a > 0 : a < 0;
  }

  bool enqueue(std::uint32_t lit) {
    if (value_true(lit)) return true;
    if (value_false(lit)) return false;
    assign_[lit >> 1] = (lit & 1) ? -1 : 1;
    trail_.push_back(lit);
    return true;
  }

  bool propagate() {
    while (qhead_ < trail_.size()) {
      std::uint32_t falsified = trail_[qhead_++] ^ 1u;
      auto& wl = watches_[falsified];
      std::size_t keep = 0;
      for (std::size_t wi = 0; wi < wl.size(); ++wi) {
        std::size_t ci = wl[wi];
        auto& cls = clauses_[ci];
        if (cls[0] == falsified) std::swap(cls[0], cls[1]);
        if (value_true(cls[0])) {
          wl[keep++] = ci;
          continue;
        }
        bool moved = false;
        for (std::size_t k = 2; k < cls.size(); ++k) {
          if (!value_false(cls[k])) {
            std::swap(cls[1], cls[k]);
            watches_[cls[1]].push_back(ci);
            moved = true;
            break;
          }
        }
        if (moved) continue;
        wl[keep++] = ci;
        if (!enqueue(cls[0])) {
          for (std::size_t wj = wi + 1; wj < wl.size(); ++wj) wl[keep++] = wl[wj];
          wl.resize(keep);
          return false;
        }
      }
      wl.resize(keep);
    }
    return true;
  }

  // Chronological backtracking: pop to the deepest unflipped decision and
  // try the opposite polarity.
  bool backtrack() {
    while (!decisions_.empty() && decisions_.back().flipped) {
      undo_to(decisions_.back().trail_mark);
      decisions_.pop_back();
    }
    if (decisions_.empty()) return false;
    Decision& d = decisions_.back();
    std::uint32_t lit = trail_[d.trail_mark];
    undo_to(d.trail_mark);
    d.flipped = true;
    enqueue(lit ^ 1u);
    return true;
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      assign_[trail_.back() >> 1] = 0;
      trail_.pop_back();
    }
    qhead_ = std::min(qhead_, trail_.size());
  }

  std::size_t next_unassigned() const {
    for (std::size_t v = 0; v < nvars_; ++v)
      if (assign_[v] == 0) return v;
    return nvars_;
  }

  std::size_t nvars_;
  std::vector<std::vector<std::uint32_t>> clauses_;
  std::vector<std::vector<std::size_t>> watches_;
  std::vector<std::int8_t> assign_;
  std::vector<std::uint32_t> trail_;
  std::vector<Decision> decisions_;
  std::vector<std::uint32_t> units_;
  std::size_t qhead_ = 0;
  bool has_empty_ = false;
};

}  // namespace

EngineStats enumerate_blocking(const SetFamily& family, const EmitSink& sink) {
  auto start = std::chrono::steady_clock::now();
  EngineStats stats;
  stats.engine = "blocking";

  const std::size_t n = family.universe_size();
  Dpll solver(n);
  for (const ElementSet& s : family.sets()) {
    std::vector<std::uint32_t> clause;
    s.for_each([&](std::size_t x) { clause.push_back(2 * static_cast<std::uint32_t>(x)); });
    solver.add_clause(std::move(clause));
  }

  auto occ = occurrence_lists(family);
  std::vector<std::uint32_t> hitcnt(family.num_sets());
  std::vector<bool> model;

  while (!sink.cancelled()) {
    ++stats.decisions;
    if (!solver.solve(model)) break;

    // Shrink the model to a minimal hitting set: try removals in descending
    // index order, keeping any element that solely hits some set.
    ElementSet h(n);
    std::fill(hitcnt.begin(), hitcnt.end(), 0u);
    for (std::size_t x = 0; x < n; ++x) {
      if (!model[x]) continue;
      h.insert(x);
      for (std::uint32_t si : occ[x]) ++hitcnt[si];
    }
    for (std::size_t x = n; x-- > 0;) {
      if (!h.contains(x)) continue;
      bool removable = true;
      for (std::uint32_t si : occ[x])
        if (hitcnt[si] < 2) {
          removable = false;
          break;
        }
      if (removable) {
        h.erase(x);
        for (std::uint32_t si : occ[x]) --hitcnt[si];
      }
    }

    std::vector<std::uint32_t> block;
    h.for_each([&](std::size_t x) { block.push_back(2 * static_cast<std::uint32_t>(x) + 1); });
    solver.add_clause(std::move(block));

    ++stats.emitted;
    if (!sink.emit(h)) break;
  }

  stats.wall_time = std::chrono::steady_clock::now() - start;
  return stats;
}

// ---------------------------------------------------------------------------
// Berge dualization
// ---------------------------------------------------------------------------

std::vector<ElementSet> berge_step(const std::vector<ElementSet>& transversals,
                                   const ElementSet& next, std::size_t universe_size) {
  std::vector<ElementSet> kept;
  std::vector<ElementSet> cands;
  for (const ElementSet& t : transversals) {
    if (t.intersects(next)) {
      kept.push_back(t);
    } else {
      next.for_each([&](std::size_t x) {
        ElementSet c = t;
        c.insert(x);
        cands.push_back(std::move(c));
      });
    }
  }
  // Minimize: a candidate survives unless a kept member or a smaller
  // candidate is contained in it. Members of `kept` form an antichain and
  // are never dominated by a candidate. Equal-size subset means equality, so
  // same-size candidates only need hash dedup and proper-subset checks are
  // restricted to strictly smaller survivors.
  std::sort(cands.begin(), cands.end(),
            [](const ElementSet& a, const ElementSet& b) { return a.count() < b.count(); });
  struct WordsHash {
    std::size_t operator()(const std::vector<std::uint64_t>& w) const {
      std::size_t h = 0xcbf29ce484222325u;
      for (std::uint64_t v : w) h = (h ^ v) * 0x100000001b3u;
      return h;
    }
  };
  std::unordered_set<std::vector<std::uint64_t>, WordsHash> seen;
  const std::size_t base = kept.size();
  std::size_t smaller_end = base;  // kept candidates with count < current size
  std::size_t current_size = 0;
  for (const ElementSet& c : cands) {
    if (!seen.insert(c.words()).second) continue;
    if (c.count() > current_size) {
      current_size = c.count();
      smaller_end = kept.size();
    }
    bool dominated = false;
    for (std::size_t i = 0; i < base && !dominated; ++i)
      dominated = kept[i].is_subset_of(c);
    for (std::size_t i = base; i < smaller_end && !dominated; ++i)
      dominated = kept[i].is_subset_of(c);
    if (!dominated) kept.push_back(c);
  }
  (void)universe_size;
  return kept;
}

EngineStats enumerate_berge(const SetFamily& family, const EmitSink& sink,
                            std::size_t cap) {
  auto start = std::chrono::steady_clock::now();
  EngineStats stats;
  stats.engine = "berge";

  std::vector<ElementSet> transversals{ElementSet(family.universe_size())};
  for (const ElementSet& s : family.sets()) {
    if (sink.cancelled()) {
      stats.wall_time = std::chrono::steady_clock::now() - start;
      return stats;
    }
    transversals = berge_step(transversals, s, family.universe_size());
    ++stats.decisions;
    if (transversals.size() > cap) throw BergeCapError(cap);
  }
  for (const ElementSet& t : canonicalize(std::move(transversals))) {
    ++stats.emitted;
    if (!sink.emit(t)) break;
    if (sink.cancelled()) break;
  }
  stats.wall_time = std::chrono::steady_clock::now() - start;
  return stats;
}

// ---------------------------------------------------------------------------
// MMCS
// ---------------------------------------------------------------------------

namespace {

class MmcsSearch {
 public:
  MmcsSearch(const SetFamily& family, const EmitSink& sink)
      : family_(family),
        sink_(sink),
        occ_(occurrence_lists(family)),
        hitcnt_(family.num_sets(), 0),
        sole_(family.num_sets(), 0),
        critcnt_(family.universe_size(), 0),
        uncov_pos_(family.num_sets()),
        current_(family.universe_size()) {
    for (std::uint32_t i = 0; i < family.num_sets(); ++i) {
      uncov_.push_back(i);
      uncov_pos_[i] = i;
    }
  }

  EngineStats run() {
    auto start = std::chrono::steady_clock::now();
    cand_ = ElementSet(family_.universe_size());
    for (std::size_t x = 0; x < family_.universe_size(); ++x) cand_.insert(x);
    recurse();
    stats_.engine = "mmcs";
    stats_.wall_time = std::chrono::steady_clock::now() - start;
    return stats_;
  }

 private:
  void recurse() {
    ++stats_.decisions;
    if (stopped_ || sink_.cancelled()) {
      stopped_ = true;
      return;
    }
    if (uncov_.empty()) {
      ++stats_.emitted;
      if (!sink_.emit(current_)) stopped_ = true;
      return;
    }
    // Branch on the uncovered set with the fewest candidate elements,
    // lowest index breaking ties. 0 prunes outright and 1 cannot be beaten,
    // modulo finishing the tie-break scan at that same count.
    std::size_t best = std::numeric_limits<std::size_t>::max();
    std::uint32_t best_set = 0;
    for (std::uint32_t si : uncov_) {
      std::size_t k = family_.sets()[si].intersection_count(cand_);
      if (k == 0) return;
      if (k < best || (k == best && si < best_set)) {
        best = k;
        best_set = si;
      }
    }
    std::vector<std::size_t> branch = (family_.sets()[best_set] & cand_).indices();
    for (std::size_t x : branch) {
      cand_.erase(x);  // stays out for later siblings: duplicate avoidance
      add_element(x);
      if (zero_crit_ == 0) recurse();
      remove_element(x);
      if (stopped_) break;
    }
    for (std::size_t x : branch) cand_.insert(x);
  }

  void add_element(std::size_t x) {
    current_.insert(x);
    ++zero_crit_;  // critcnt[x] == 0 on entry
    for (std::uint32_t si : occ_[x]) {
      if (++hitcnt_[si] == 1) {
        uncov_remove(si);
        sole_[si] = static_cast<std::uint32_t>(x);
        if (critcnt_[x]++ == 0) --zero_crit_;
      } else if (hitcnt_[si] == 2) {
        if (--critcnt_[sole_[si]] == 0) ++zero_crit_;
      }
    }
  }

  // Exact inverse of add_element; sole_ entries survive LIFO removal because
  // a set's pre-existing sole hitter was added earlier and is still present.
  void remove_element(std::size_t x) {
    for (auto it = occ_[x].rbegin(); it != occ_[x].rend(); ++it) {
      std::uint32_t si = *it;
      if (--hitcnt_[si] == 0) {
        uncov_add(si);
        if (--critcnt_[x] == 0) ++zero_crit_;
      } else if (hitcnt_[si] == 1) {
        if (critcnt_[sole_[si]]++ == 0) --zero_crit_;
      }
    }
    --zero_crit_;
    current_.erase(x);
  }

  void uncov_remove(std::uint32_t si) {
    std::size_t pos = uncov_pos_[si];
    std::uint32_t last = uncov_.back();
    uncov_[pos] = last;
    uncov_pos_[last] = pos;
    uncov_.pop_back();
  }

  void uncov_add(std::uint32_t si) {
    uncov_pos_[si] = uncov_.size();
    uncov_.push_back(si);
  }

  const SetFamily& family_;
  const EmitSink& sink_;
  std::vector<std::vector<std::uint32_t>> occ_;
  std::vector<std::uint32_t> hitcnt_;
  std::vector<std::uint32_t> sole_;
  std::vector<std::uint32_t> critcnt_;
  std::vector<std::uint32_t> uncov_;
  std::vector<std::size_t> uncov_pos_;
  ElementSet current_;
  ElementSet cand_;
  std::size_t zero_crit_ = 0;
  EngineStats stats_;
  bool stopped_ = false;
};

}  // namespace

EngineStats enumerate_mmcs(const SetFamily& family, const EmitSink& sink) {
  return MmcsSearch(family, sink).run();
}

// ---------------------------------------------------------------------------
// Facade and post-filtering
// ---------------------------------------------------------------------------

EnumerationResult enumerate(const SetFamily& family, EngineKind kind,
                            std::optional<std::uint64_t> limit, std::size_t berge_cap) {
  EnumerationResult result;
  bool truncated = false;
  EmitSink sink;
  sink.on_mhs = [&](const ElementSet& h) {
    result.mhses.push_back(h);
    if (limit && result.mhses.size() >= *limit) {
      truncated = true;
      return false;
    }
    return true;
  };
  switch (kind) {
    case EngineKind::blocking:
      result.stats = enumerate_blocking(family, sink);
      break;
    case EngineKind::berge:
      result.stats = enumerate_berge(family, sink, berge_cap);
      break;
    case EngineKind::mmcs:
      result.stats = enumerate_mmcs(family, sink);
      break;
  }
  result.mhses = canonicalize(std::move(result.mhses));
  result.partial = truncated;
  return result;
}

EnumerationResult filter_and_optimize(const EnumerationResult& result,
                                      std::optional<std::size_t> size_bound,
                                      const std::optional<ElementSet>& required,
                                      const std::optional<std::vector<double>>& weights) {
  EnumerationResult out;
  out.stats = result.stats;
  out.partial = result.partial;
  for (const ElementSet& h : result.mhses) {
    if (size_bound && h.count() > *size_bound) continue;
    if (required && !required->is_subset_of(h)) continue;
    out.mhses.push_back(h);
  }
  if (weights && !out.mhses.empty()) {
    auto weight_of = [&](const ElementSet& h) {
      double w = 0.0;
      h.for_each([&](std::size_t x) { w += (*weights)[x]; });
      return w;
    };
    double best = std::numeric_limits<double>::infinity();
    for (const ElementSet& h : out.mhses) best = std::min(best, weight_of(h));
    std::erase_if(out.mhses, [&](const ElementSet& h) { return weight_of(h) > best; });
  }
  out.stats.emitted = out.mhses.size();
  return out;
}

}  // namespace minhit
