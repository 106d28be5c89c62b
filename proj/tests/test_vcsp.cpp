#include <cstdint>
#include <limits>
#include <random>

#include "doctest.h"
#include "pbland/constructions.hpp"
#include "pbland/error.hpp"
#include "pbland/graph.hpp"
#include "pbland/vcsp.hpp"
#include "support.hpp"

using namespace pbland;
using testsupport::naive_delta;
using testsupport::naive_evaluate;

namespace {

VariableId var_of(const VcspInstance& inst, int k, const char* slot) {
  auto v = inst.find(k, slot);
  REQUIRE(v.has_value());
  return *v;
}

}  // namespace

TEST_CASE("evaluate: zero assignment and unary slot 5") {
  const auto g = build_cd_gadget(1, 1, {});
  CHECK(evaluate(g, Assignment::zeros(8)) == 0);
  Assignment x(8);
  x.set(var_of(g, 1, "5").index, true);
  CHECK(evaluate(g, x) == -1);
}

TEST_CASE("evaluate: chain n=1 m=1 P10 at 11111001 by straight-line summation") {
  const auto inst = build_cd_chain({1, 1, Variant::P10, BridgeConvention::ASide});
  const auto x = Assignment::from_string("11111001");
  // n = 1, k = 1: m_1 = 8, s_1 = 0. Set slots: 1,2,3,4,5,B.
  const std::int64_t m = 8, s = 0;
  std::int64_t expected = 0;
  expected += m + 3;                                      // top unary (1,1), P10
  expected += -(m + 5) + -(m + 3) + -(m + s + 7) + -1;    // (1,2) (1,3) (1,4) (1,5)
  expected += -(s + 3);                                   // (1,B)
  expected += (m + 6) + (m + 4) + (m + 6) + (m + 4);      // 12 23 14 45
  expected += -2 + (s + 4) + (s + 2);                     // 1B 2B 4B
  CHECK(evaluate(inst, x) == expected);
  CHECK(evaluate(inst, x) == naive_evaluate(inst, x));
}

TEST_CASE("evaluate: length mismatch and overflow") {
  InstanceBuilder b(2);
  b.add({VariableId{0}}, std::numeric_limits<std::int64_t>::max());
  b.add({VariableId{1}}, 1);
  const auto inst = b.build();
  CHECK_THROWS_AS(evaluate(inst, Assignment::zeros(3)), Error);
  try {
    evaluate(inst, Assignment::from_string("11"));
    FAIL("expected overflow");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ArithmeticOverflow);
  }
}

TEST_CASE("flip_delta: table first row context") {
  // Gadget k with P = 1, Q = 0 and all-zero state.
  const auto g = build_cd_gadget(3, 2, {true, false, false, false});
  const auto x = Assignment::zeros(8);
  CHECK(flip_delta(g, x, var_of(g, 2, "1")) == 3);
  CHECK(flip_delta(g, x, var_of(g, 2, "5")) == -1);
  try {
    flip_delta(g, x, VariableId{8});
    FAIL("expected InvalidVariable");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidVariable);
  }
}

TEST_CASE("flip_delta: flipping twice cancels") {
  std::mt19937_64 rng(11);
  const auto inst = build_cd_chain({3, 3, Variant::P10, BridgeConvention::ASide});
  for (int t = 0; t < 200; ++t) {
    auto x = testsupport::random_assignment(rng, inst.num_vars());
    VariableId v{rng() % inst.num_vars()};
    CHECK(flip_delta(inst, x, v) + flip_delta(inst, x.flipped(v), v) == 0);
  }
}

TEST_CASE("improving_moves: designated start and end") {
  const CdParams p{4, 4, Variant::P10, BridgeConvention::ASide};
  const auto inst = build_cd_chain(p);
  const auto moves = improving_moves(inst, cd_start(p));
  REQUIRE(moves.size() == 1);
  CHECK(moves[0].var == var_of(inst, 4, "1"));
  CHECK(moves[0].delta == cd_weights(4, 4).m + 3);
  CHECK(improving_moves(inst, cd_end(p)).empty());
}

TEST_CASE("improving_moves: exhaustive cross-check on the m=2 n=2 chain") {
  const auto inst = build_cd_chain({2, 2, Variant::P10, BridgeConvention::ASide});
  const std::size_t d = inst.num_vars();
  REQUIRE(d == 16);
  std::size_t mismatches = 0;
  for (std::uint64_t mask = 0; mask < (1u << d); ++mask) {
    const auto x = testsupport::from_mask(mask, d);
    std::vector<Move> naive;
    for (std::size_t v = 0; v < d; ++v) {
      const auto dv = naive_delta(inst, x, v);
      if (dv > 0) naive.push_back(Move{VariableId{v}, dv});
    }
    if (improving_moves(inst, x) != naive) ++mismatches;
  }
  CHECK(mismatches == 0);
}

TEST_CASE("primal_graph") {
  SUBCASE("single ternary scope is a triangle") {
    InstanceBuilder b(3);
    b.add({VariableId{2}, VariableId{0}, VariableId{1}}, 5);
    const auto g = primal_graph(b.build());
    CHECK(g.edge_count() == 3);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 2));
    CHECK(g.has_edge(0, 2));
  }
  SUBCASE("gadget ternaries induce 2-A and 4-A") {
    const auto inst = build_cd_gadget(2, 1, {});
    const auto g = primal_graph(inst);
    CHECK(g.has_edge(g.require("1.2"), g.require("1.A")));
    CHECK(g.has_edge(g.require("1.4"), g.require("1.A")));
  }
  SUBCASE("unary-only instance is edgeless") {
    InstanceBuilder b(4);
    for (std::size_t i = 0; i < 4; ++i) b.add({VariableId{i}}, -1);
    CHECK(primal_graph(b.build()).edge_count() == 0);
  }
}

TEST_CASE("builder: merges equal scopes, rejects bad ones") {
  InstanceBuilder b(3);
  b.add({VariableId{0}, VariableId{1}}, 4);
  b.add({VariableId{1}, VariableId{0}}, -1);
  const auto inst = b.build();
  REQUIRE(inst.constraints().size() == 1);
  CHECK(inst.constraints()[0].weight == 3);
  CHECK(inst.index_consistent());
  CHECK_THROWS_AS(InstanceBuilder(2).add({VariableId{0}, VariableId{0}}, 1), Error);
  CHECK_THROWS_AS(InstanceBuilder(2).add({}, 1), Error);
  CHECK_THROWS_AS(InstanceBuilder(2).add({VariableId{2}}, 1), Error);
}

TEST_CASE("assignment strings") {
  const auto x = Assignment::from_string("111110 01 0000_0000");
  CHECK(x.size() == 16);
  CHECK(x.to_string() == "1111100100000000");
  CHECK_THROWS_AS(Assignment::from_string("10x"), Error);
}

TEST_CASE("property: delta consistency and locality on random instances") {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 300; ++t) {
    const std::size_t d = 1 + rng() % 20;
    const auto inst = testsupport::random_instance(rng, d, 1 + rng() % 40);
    CHECK(inst.index_consistent());
    const auto x = testsupport::random_assignment(rng, d);
    const VariableId v{rng() % d};
    const auto dv = flip_delta(inst, x, v);
    REQUIRE(dv == evaluate(inst, x.flipped(v)) - evaluate(inst, x));

    // Zero every constraint not containing v; the delta must not move.
    InstanceBuilder local(d);
    for (const auto& c : inst.constraints()) {
      bool has_v = std::find(c.scope.begin(), c.scope.end(), v) != c.scope.end();
      local.add(c.scope, has_v ? c.weight : 0);
    }
    REQUIRE(flip_delta(local.build(), x, v) == dv);
    CHECK(evaluate(inst, Assignment::zeros(d)) == 0);
  }
}

TEST_CASE("property: peak characterization, exhaustive for d <= 12") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 20; ++t) {
    const std::size_t d = 2 + rng() % 11;
    const auto inst = testsupport::random_instance(rng, d, 3 * d);
    for (std::uint64_t mask = 0; mask < (1u << d); ++mask) {
      const auto x = testsupport::from_mask(mask, d);
      const auto fx = naive_evaluate(inst, x);
      bool peak = true;
      for (std::size_t v = 0; v < d; ++v) peak = peak && naive_evaluate(inst, x.flipped(VariableId{v})) <= fx;
      REQUIRE(improving_moves(inst, x).empty() == peak);
    }
  }
}
