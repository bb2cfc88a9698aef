// Copyright (c) 2026 The minhit authors
// SPDX-License-Identifier: MIT

#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace minhit {

/// A subset of a fixed universe [0, universe_size), packed into 64-bit words.
/// Immutable in spirit: engines build sets through the mutators and hand out
/// value copies; shared instances are never mutated.
class ElementSet {
 public:
  ElementSet() = default;

  explicit ElementSet(std::size_t universe_size)
      : universe_(universe_size), words_((universe_size + 63) / 64, 0) {}

  ElementSet(std::size_t universe_size, std::initializer_list<std::size_t> xs)
      : ElementSet(universe_size) {
    for (std::size_t x : xs) insert(x);
  }

  std::size_t universe_size() const { return universe_; }

  bool contains(std::size_t x) const {
    assert(x < universe_);
    return (words_[x >> 6] >> (x & 63)) & 1u;
  }

  void insert(std::size_t x) {
    assert(x < universe_);
    words_[x >> 6] |= std::uint64_t{1} << (x & 63);
  }

  void erase(std::size_t x) {
    assert(x < universe_);
    words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63));
  }

  std::size_t count() const {
    std::size_t n = 0;
    for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  bool empty() const {
    for (std::uint64_t w : words_)
      if (w) return false;
    return true;
  }

  /// |this & other| without materializing the intersection.
  std::size_t intersection_count(const ElementSet& other) const {
    assert(universe_ == other.universe_);
    std::size_t n = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      n += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    return n;
  }

  bool intersects(const ElementSet& other) const {
    assert(universe_ == other.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }

  bool is_subset_of(const ElementSet& other) const {
    assert(universe_ == other.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  ElementSet& operator|=(const ElementSet& other) {
    assert(universe_ == other.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }

  ElementSet& operator&=(const ElementSet& other) {
    assert(universe_ == other.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }

  /// Set difference: removes every element of `other`.
  ElementSet& operator-=(const ElementSet& other) {
    assert(universe_ == other.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
  }

  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

  bool operator==(const ElementSet& other) const = default;

  /// Ascending member indices.
  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        out.push_back(wi * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  /// Raw word storage, for hashing.
  const std::vector<std::uint64_t>& words() const { return words_; }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        fn(wi * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Canonical order: lexicographic over ascending member-index sequences,
/// so {1,3} < {2,3} and {1} < {1,2}.
inline bool canonical_less(const ElementSet& a, const ElementSet& b) {
  auto ia = a.indices();
  auto ib = b.indices();
  return ia < ib;
}

}  // namespace minhit
