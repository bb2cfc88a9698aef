// Copyright (c) 2026 The minhit authors
// SPDX-License-Identifier: MIT

#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "minhit/element_set.hpp"
#include "minhit/errors.hpp"

namespace minhit {

/// An instance: a family of non-empty sets over a compacted dense universe.
/// External element identifiers are remapped to dense indices at
/// construction; element_names() maps back. Immutable after construction.
class SetFamily {
 public:
  SetFamily() = default;

  /// Builds a family from sets of external identifiers. The dense index of an
  /// element is its rank in order of first appearance. Duplicate elements
  /// within a set collapse. Throws EmptySetError for an empty input set.
  static SetFamily from_external(const std::vector<std::vector<std::uint32_t>>& sets) {
    SetFamily fam;
    std::unordered_map<std::uint32_t, std::size_t> dense;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      if (sets[i].empty()) throw EmptySetError(i);
      for (std::uint32_t id : sets[i]) {
        if (dense.emplace(id, fam.element_names_.size()).second)
          fam.element_names_.push_back(id);
      }
    }
    fam.universe_size_ = fam.element_names_.size();
    fam.sets_.reserve(sets.size());
    for (const auto& s : sets) {
      ElementSet es(fam.universe_size_);
      for (std::uint32_t id : s) es.insert(dense.at(id));
      fam.sets_.push_back(std::move(es));
    }
    return fam;
  }

  /// Builds a family whose elements are already dense indices with identity
  /// naming. Sets must be non-empty and drawn from [0, universe_size); the
  /// universe is re-compacted so that no phantom element survives.
  static SetFamily from_dense(std::size_t universe_size,
                              const std::vector<ElementSet>& sets) {
    std::vector<std::vector<std::uint32_t>> ext;
    ext.reserve(sets.size());
    for (const auto& s : sets) {
      std::vector<std::uint32_t> row;
      s.for_each([&](std::size_t x) {
        (void)universe_size;
        row.push_back(static_cast<std::uint32_t>(x));
      });
      ext.push_back(std::move(row));
    }
    return from_external(ext);
  }

  std::size_t universe_size() const { return universe_size_; }
  const std::vector<ElementSet>& sets() const { return sets_; }
  std::size_t num_sets() const { return sets_.size(); }

  /// Dense index -> original external identifier (injective).
  const std::vector<std::uint32_t>& element_names() const { return element_names_; }

  /// Drops duplicate sets and any set that is a superset of another set.
  /// Sound for enumeration: minimal hitting sets depend only on the
  /// subset-minimal members of the family.
  SetFamily without_redundant_sets() const {
    std::vector<const ElementSet*> keep;
    for (const auto& s : sets_) {
      bool redundant = false;
      for (const auto* k : keep)
        if (k->is_subset_of(s)) {
          redundant = true;
          break;
        }
      if (redundant) continue;
      std::erase_if(keep, [&](const ElementSet* k) { return s.is_subset_of(*k); });
      keep.push_back(&s);
    }
    std::vector<std::vector<std::uint32_t>> ext;
    ext.reserve(keep.size());
    for (const auto* k : keep) {
      std::vector<std::uint32_t> row;
      k->for_each([&](std::size_t x) { row.push_back(element_names_[x]); });
      ext.push_back(std::move(row));
    }
    return from_external(ext);
  }

 private:
  std::size_t universe_size_ = 0;
  std::vector<ElementSet> sets_;
  std::vector<std::uint32_t> element_names_;
};

}  // namespace minhit
