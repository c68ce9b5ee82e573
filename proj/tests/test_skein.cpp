#include "doctest.h"
#include "skeinhom/certify.hpp"
#include "support.hpp"

using namespace skeinhom;
using namespace testsupport;

namespace {
LaurentPoly A(long e, long c = 1) { return LaurentPoly::monomial(e, c); }
BalledDiagram balled_kink() { return {{{1, 1, 2, 2}}, {0}, 0}; }
}  // namespace

TEST_CASE("chain arithmetic") {
  Chain t = example_T();
  CHECK((t + scale(-1, t)).is_zero());
  Chain at = scale(A(1), t);
  REQUIRE(at.size() == 1);
  CHECK(at.terms().begin()->second.coefficient == A(1));
  std::mt19937_64 rng(71);
  BalledDiagram d = t.terms().begin()->second.diagram;
  Chain two(2);
  two.add(d, A(2));
  two.add(scramble(rng, d), A(-1, 3));
  REQUIRE(two.size() == 1);
  CHECK(two.terms().begin()->second.coefficient == A(2) + A(-1, 3));
  try {
    t += Chain(1);
    FAIL("levels differ");
  } catch (const DiagramError& e) {
    CHECK(e.kind() == DiagramError::Kind::LevelMismatch);
  }
}

TEST_CASE("chains store no circles") {
  BalledDiagram d = closed_braid(2, {1, 1, 1});
  d.loops = 2;
  Chain c = Chain::single(d, A(1));
  REQUIRE(c.size() == 1);
  CHECK(c.terms().begin()->second.diagram.loops == 0);
  CHECK(c.terms().begin()->second.coefficient == A(1) * circle_factor() * circle_factor());
}

TEST_CASE("ball operator on the balled kink") {
  Chain d = ball_operator(Chain::single(balled_kink()), 1);
  Chain expect(0);
  expect.add(unmark(balled_kink(), 1), 1);
  expect.add(unknot_circle(), A(3));
  CHECK(d == expect);
  CHECK(d.size() == 2);
  CHECK(d.level() == 0);
}

TEST_CASE("d_1 of T has three terms") {
  Chain d1 = ball_operator(example_T(), 1);
  CHECK(d1.level() == 1);
  CHECK(d1.size() == 3);
  LaurentPoly sum;
  for (const auto& [k, t] : d1.terms()) sum += t.coefficient;
  CHECK(sum == LaurentPoly(1) - A(1) - A(-1));
  CHECK(d1 == ball_operator(example_T(), 2));
  CHECK(ball_operator(Chain(2), 1).is_zero());
  CHECK_THROWS_AS(ball_operator(example_T(), 3), DiagramError);
  CHECK_THROWS_AS(ball_operator(example_T(), 0), DiagramError);
}

TEST_CASE("boundary examples") {
  CHECK(boundary(example_T()).is_zero());
  CHECK(boundary(example_T()) == Chain(1));
  Chain zero_level = Chain::single(closed_braid(2, {1, 1, 1}), A(5));
  CHECK(boundary(zero_level).is_zero());
  CHECK(boundary(zero_level).level() == 0);
}

TEST_CASE("boundary squares to zero") {
  std::mt19937_64 rng(73);
  for (int k = 0; k < 100; ++k) {
    Chain c = random_chain(rng, std::uniform_int_distribution<std::size_t>(2, 5)(rng));
    REQUIRE(boundary(boundary(c)).is_zero());
  }
}

TEST_CASE("epsilon vanishes on boundaries and each d_i image evaluates to zero") {
  std::mt19937_64 rng(79);
  for (int k = 0; k < 100; ++k) {
    Chain c = random_chain(rng, std::uniform_int_distribution<std::size_t>(1, 4)(rng));
    REQUIRE(epsilon_chain(boundary(c)).is_zero());
    for (std::size_t i = 1; i <= c.level(); ++i) {
      Chain di = ball_operator(c, i);
      REQUIRE(epsilon_chain(di).is_zero());
      LaurentPoly v;
      for (const auto& [key, t] : di.terms()) v += t.coefficient * oracle_bracket(t.diagram);
      REQUIRE(v.is_zero());
      REQUIRE(eval_chain(di).is_zero());
    }
  }
}

TEST_CASE("epsilon examples") {
  CHECK(epsilon_chain(example_T()) == Cyclo6::one());
  Chain c = Chain::single(unmark(balled_kink(), 1));
  c.add(unknot_circle(), -A(3));
  CHECK(epsilon_chain(c) == Cyclo6(2, 0));
  CHECK(epsilon_chain(Chain(0)).is_zero());
}

TEST_CASE("eval_chain examples") {
  CHECK(eval_chain(example_T()) == oracle_bracket(closed_braid(2, {1, 1})));
  CHECK(eval_chain(Chain(3)).is_zero());
}

TEST_CASE("boundary pieces add up to the boundary") {
  std::mt19937_64 rng(83);
  for (int k = 0; k < 50; ++k) {
    Chain c = random_chain(rng, std::uniform_int_distribution<std::size_t>(1, 3)(rng));
    Chain sum(c.level() - 1);
    for (const auto& p : boundary_pieces(c)) sum.add(p.diagram, p.coefficient);
    REQUIRE(sum == boundary(c));
  }
}

TEST_CASE("is_cycle examples") {
  Reduction t = is_cycle(example_T(), {0});
  CHECK(t.verdict == Decision::Yes);
  CHECK(t.log.merges.empty());
  Reduction f = is_cycle(framing_cycle(1));
  CHECK(f.verdict == Decision::Yes);
  CHECK(f.log.merges.size() == 1);
  CHECK(is_cycle(framing_cycle(1), {0}).verdict == Decision::Unknown);
  Reduction single = is_cycle(Chain::single(balled_kink()));
  CHECK(single.verdict == Decision::No);
  REQUIRE(single.witness);
  CHECK(is_cycle(Chain(2)).verdict == Decision::Yes);
}

TEST_CASE("certificates") {
  Certificate t = certify_nonboundary(example_T());
  CHECK(t.verdict == Verdict::CycleNonBoundary);
  CHECK(t.epsilon_value == Cyclo6::one());
  CHECK(replay(t) == Verdict::CycleNonBoundary);
  Certificate z = certify_nonboundary(Chain(2));
  CHECK(z.verdict == Verdict::CycleOnly);
  CHECK(replay(z) == Verdict::CycleOnly);
  for (int s : {1, -1}) {
    Certificate f = certify_nonboundary(framing_cycle(s));
    CHECK(f.verdict == Verdict::CycleNonBoundary);
    CHECK(f.epsilon_value == Cyclo6(2, 0));
    CHECK(replay(f) == Verdict::CycleNonBoundary);
  }
  Certificate k = certify_nonboundary(Chain::single(balled_kink()));
  CHECK(k.verdict == Verdict::NotCycle);
  CHECK(replay(k) == Verdict::NotCycle);
}

TEST_CASE("tampered proof logs do not replay") {
  Certificate f = certify_nonboundary(framing_cycle(1));
  REQUIRE(!f.boundary_is_zero.log.merges.empty());
  Certificate no_moves = f;
  no_moves.boundary_is_zero.log.merges.front().moves_group.clear();
  no_moves.boundary_is_zero.log.merges.front().moves_representative.clear();
  CHECK(replay(no_moves) == Verdict::Inconclusive);
  Certificate other_chain = f;
  other_chain.chain = scale(2, f.chain);
  CHECK(replay(other_chain) == Verdict::Inconclusive);
}

TEST_CASE("reduction needs a separating invariant for No") {
  BalledDiagram pair{{{1, 2, 3, 3}, {2, 4, 4, 1}}, {}, 0};
  Canonical a = canonicalize(unknot_circle()), b = canonicalize(pair);
  std::vector<ReductionItem> items{{a.form, a.key, 1, "a"}, {b.form, b.key, -1, "b"}};
  CHECK(reduce_to_zero(items, {1}).verdict == Decision::Yes);
  CHECK(reduce_to_zero(items, {0}).verdict == Decision::Unknown);
}
