// Copyright (c) 2026 The minhit authors
// SPDX-License-Identifier: MIT

#include "minhit/asp.hpp"

#include <algorithm>
#include <sstream>

#include "minhit/errors.hpp"

namespace minhit {

DisjunctiveProgram dlp(const SetFamily& family) {
  DisjunctiveProgram p;
  p.atom_count = family.universe_size();
  p.rules.reserve(family.num_sets());
  for (const ElementSet& s : family.sets()) {
    Rule r{s, ElementSet(p.atom_count), ElementSet(p.atom_count)};
    p.rules.push_back(std::move(r));
  }
  return p;
}

bool satisfies(const Interpretation& m, const DisjunctiveProgram& p) {
  for (const Rule& r : p.rules) {
    if (r.head.intersects(m) || r.body_neg.intersects(m)) continue;
    if (!r.body_pos.is_subset_of(m)) continue;
    return false;
  }
  return true;
}

DisjunctiveProgram gl_reduct(const DisjunctiveProgram& p, const Interpretation& m) {
  DisjunctiveProgram out;
  out.atom_count = p.atom_count;
  for (const Rule& r : p.rules) {
    if (r.body_neg.intersects(m)) continue;
    out.rules.push_back(Rule{r.head, r.body_pos, ElementSet(p.atom_count)});
  }
  return out;
}

bool is_answer_set(const DisjunctiveProgram& p, const Interpretation& m) {
  for (const Rule& r : p.rules)
    if (!r.body_pos.empty() || !r.body_neg.empty())
      throw UnsupportedProgramError(
          "is_answer_set only supports negation-free, body-free programs");
  if (!satisfies(m, p)) return false;
  // Negation-free and body-free: the reduct equals p and models are
  // upward-closed, so single-atom removals witness any non-minimality.
  DisjunctiveProgram reduct = gl_reduct(p, m);
  Interpretation probe = m;
  bool minimal = true;
  m.for_each([&](std::size_t a) {
    if (!minimal) return;
    probe.erase(a);
    if (satisfies(probe, reduct)) minimal = false;
    probe.insert(a);
  });
  return minimal;
}

SetFamily family_from_program(const DisjunctiveProgram& p) {
  std::vector<std::vector<std::uint32_t>> sets;
  sets.reserve(p.rules.size());
  for (const Rule& r : p.rules) {
    std::vector<std::uint32_t> row;
    r.head.for_each([&](std::size_t a) { row.push_back(static_cast<std::uint32_t>(a)); });
    sets.push_back(std::move(row));
  }
  return SetFamily::from_external(sets);
}

EnumerationResult answer_sets_via_engine(const DisjunctiveProgram& p, EngineKind engine) {
  SetFamily family = family_from_program(p);
  EnumerationResult hs = enumerate(family, engine);
  // The reconstructed family compacts atoms by first appearance; map the
  // hitting sets back to the program's atom indices.
  EnumerationResult out;
  out.stats = hs.stats;
  out.partial = hs.partial;
  out.mhses.reserve(hs.mhses.size());
  for (const ElementSet& h : hs.mhses) {
    Interpretation m(p.atom_count);
    h.for_each([&](std::size_t x) { m.insert(family.element_names()[x]); });
    out.mhses.push_back(std::move(m));
  }
  out.mhses = canonicalize(std::move(out.mhses));
  return out;
}

std::string emit_asp_core2(const DisjunctiveProgram& p,
                           const std::vector<std::uint32_t>& element_names) {
  std::ostringstream os;
  for (const Rule& r : p.rules) {
    std::vector<std::uint32_t> ids;
    r.head.for_each([&](std::size_t a) { ids.push_back(element_names.at(a)); });
    std::sort(ids.begin(), ids.end());
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (i) os << " | ";
      os << "h(" << ids[i] << ")";
    }
    os << ".\n";
  }
  os << "#show h/1.\n";
  return os.str();
}

}  // namespace minhit
