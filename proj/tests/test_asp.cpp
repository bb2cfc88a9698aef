// Copyright (c) 2026 The minhit authors
// SPDX-License-Identifier: MIT

#include <doctest.h>

#include <random>

#include "asp_reader.hpp"
#include "helpers.hpp"
#include "minhit/asp.hpp"
#include "minhit/errors.hpp"

using namespace minhit;
using test::es;
using test::paper_family;

namespace {

Interpretation interp(std::size_t atoms, std::initializer_list<std::size_t> xs) {
  Interpretation m(atoms);
  for (std::size_t x : xs) m.insert(x);
  return m;
}

}  // namespace

TEST_CASE("dlp builds one disjunctive fact per set") {
  auto fam = paper_family();
  auto p = dlp(fam);
  CHECK(p.atom_count == 4);
  REQUIRE(p.rules.size() == 3);
  for (const Rule& r : p.rules) {
    CHECK(r.body_pos.empty());
    CHECK(r.body_neg.empty());
    CHECK_FALSE(r.head.empty());
  }
  CHECK(p.rules[0].head == fam.sets()[0]);
  CHECK(p.rules[1].head == fam.sets()[1]);
  CHECK(p.rules[2].head == fam.sets()[2]);

  auto one = dlp(SetFamily::from_external({{5}}));
  CHECK(one.atom_count == 1);
  REQUIRE(one.rules.size() == 1);
  CHECK(one.rules[0].head.count() == 1);

  auto empty = dlp(SetFamily{});
  CHECK(empty.atom_count == 0);
  CHECK(empty.rules.empty());
}

TEST_CASE("satisfies follows the rule-satisfaction definition") {
  auto fam = paper_family();
  auto p = dlp(fam);
  CHECK(satisfies(es(fam, {1, 3}), p));
  CHECK_FALSE(satisfies(Interpretation(4), p));
  CHECK(satisfies(Interpretation(0), DisjunctiveProgram{}));

  // Positive and negative bodies.
  DisjunctiveProgram q;
  q.atom_count = 3;
  q.rules.push_back(Rule{interp(3, {0}), interp(3, {1}), interp(3, {2})});
  CHECK(satisfies(interp(3, {}), q));        // body_pos unmet
  CHECK(satisfies(interp(3, {1, 2}), q));    // body_neg intersects m
  CHECK(satisfies(interp(3, {0, 1}), q));    // head satisfied
  CHECK_FALSE(satisfies(interp(3, {1}), q)); // body holds, head false
}

TEST_CASE("gl_reduct") {
  SUBCASE("fixpoint on negation-free images") {
    auto p = dlp(paper_family());
    std::mt19937_64 rng(3);
    for (int i = 0; i < 20; ++i) {
      Interpretation m(p.atom_count);
      for (std::size_t a = 0; a < p.atom_count; ++a)
        if (rng() & 1) m.insert(a);
      CHECK(gl_reduct(p, m) == p);
    }
  }
  SUBCASE("rules with satisfied negative bodies are dropped") {
    DisjunctiveProgram q;
    q.atom_count = 2;
    q.rules.push_back(Rule{interp(2, {0}), interp(2, {}), interp(2, {1})});
    CHECK(gl_reduct(q, interp(2, {1})).rules.empty());
    auto kept = gl_reduct(q, interp(2, {}));
    REQUIRE(kept.rules.size() == 1);
    CHECK(kept.rules[0].body_neg.empty());
  }
  SUBCASE("empty program") {
    CHECK(gl_reduct(DisjunctiveProgram{}, Interpretation(0)).rules.empty());
  }
}

TEST_CASE("is_answer_set on the worked example") {
  auto fam = paper_family();
  auto p = dlp(fam);
  CHECK(is_answer_set(p, es(fam, {1, 3})));
  CHECK(is_answer_set(p, es(fam, {2, 3})));
  CHECK_FALSE(is_answer_set(p, es(fam, {1, 2, 3})));
}

TEST_CASE("is_answer_set rejects programs with bodies") {
  DisjunctiveProgram q;
  q.atom_count = 2;
  q.rules.push_back(Rule{interp(2, {0}), interp(2, {1}), interp(2, {})});
  CHECK_THROWS_AS(is_answer_set(q, interp(2, {0})), UnsupportedProgramError);
}

TEST_CASE("answer_sets_via_engine matches the worked example") {
  auto fam = paper_family();
  auto p = dlp(fam);
  for (auto kind : {EngineKind::blocking, EngineKind::berge, EngineKind::mmcs}) {
    auto result = answer_sets_via_engine(p, kind);
    REQUIRE(result.mhses.size() == 2);
    CHECK(result.mhses[0] == es(fam, {1, 3}));
    CHECK(result.mhses[1] == es(fam, {2, 3}));
    for (const auto& m : result.mhses) CHECK(is_answer_set(p, m));
  }

  auto single = answer_sets_via_engine(dlp(SetFamily::from_external({{5}})), EngineKind::mmcs);
  REQUIRE(single.mhses.size() == 1);
  CHECK(single.mhses[0].count() == 1);
}

TEST_CASE("answer sets equal the oracle image on random instances") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    auto fam = test::random_family(rng, 8, 6, 4);
    auto p = dlp(fam);
    auto via = answer_sets_via_engine(p, EngineKind::mmcs);
    auto oracle = brute_force_mhs(fam);
    CHECK(via.mhses == oracle.mhses);  // dlp keeps dense indices
  }
}

TEST_CASE("model <-> hitting set bijection, exhaustively") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    auto fam = test::random_family(rng, 10, 8, 4);
    auto p = dlp(fam);
    const std::size_t u = fam.universe_size();
    for (std::uint32_t mask = 0; mask < (1u << u); ++mask) {
      Interpretation m(u);
      for (std::size_t a = 0; a < u; ++a)
        if (mask & (1u << a)) m.insert(a);
      CHECK(satisfies(m, p) == is_hitting_set(fam, m));
    }
  }
}

TEST_CASE("Lemma-style correspondence in both directions") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 30; ++trial) {
    auto fam = test::random_family(rng, 9, 7, 4);
    auto p = dlp(fam);
    auto oracle = brute_force_mhs(fam);
    // Direction 1: every enumerated MHS is an answer set.
    for (const auto& h : enumerate(fam, EngineKind::blocking).mhses)
      CHECK(is_answer_set(p, h));
    // Direction 2: every answer set is an oracle MHS (exhaustive).
    const std::size_t u = fam.universe_size();
    std::size_t answer_count = 0;
    for (std::uint32_t mask = 0; mask < (1u << u); ++mask) {
      Interpretation m(u);
      for (std::size_t a = 0; a < u; ++a)
        if (mask & (1u << a)) m.insert(a);
      if (is_answer_set(p, m)) {
        ++answer_count;
        CHECK(is_minimal_hitting_set(fam, m));
      }
    }
    CHECK(answer_count == oracle.mhses.size());
  }
}

TEST_CASE("emit_asp_core2 output") {
  auto fam = paper_family();
  CHECK(emit_asp_core2(dlp(fam), fam.element_names()) ==
        "h(1) | h(2).\nh(3).\nh(2) | h(3) | h(4).\n#show h/1.\n");

  auto one = SetFamily::from_external({{5}});
  CHECK(emit_asp_core2(dlp(one), one.element_names()) == "h(5).\n#show h/1.\n");

  CHECK(emit_asp_core2(DisjunctiveProgram{}, {}) == "#show h/1.\n");
}

TEST_CASE("emitted text round-trips to an isomorphic program") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 50; ++trial) {
    auto fam = test::random_family(rng, 10, 8, 5);
    auto p = dlp(fam);
    auto text = emit_asp_core2(p, fam.element_names());
    auto read = test::read_asp_core2(text);
    REQUIRE(read.has_value());
    auto back = SetFamily::from_external(read->heads);
    auto q = dlp(back);
    REQUIRE(q.rules.size() == p.rules.size());
    // Isomorphism: rule-wise identical head element names.
    for (std::size_t i = 0; i < p.rules.size(); ++i) {
      auto names_of = [](const Rule& r, const std::vector<std::uint32_t>& names) {
        std::vector<std::uint32_t> out;
        r.head.for_each([&](std::size_t a) { out.push_back(names[a]); });
        std::sort(out.begin(), out.end());
        return out;
      };
      CHECK(names_of(p.rules[i], fam.element_names()) ==
            names_of(q.rules[i], back.element_names()));
    }
  }
}
