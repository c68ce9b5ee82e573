#include "doctest.h"
#include "skeinhom/canonical.hpp"
#include "skeinhom/families.hpp"
#include "skeinhom/invariants.hpp"
#include "support.hpp"

using namespace skeinhom;
using namespace testsupport;

namespace {
const BalledDiagram& only(const Chain& c) { return c.terms().begin()->second.diagram; }
}  // namespace

TEST_CASE("generators emit valid chains at the stated level") {
  CHECK(example_T().level() == 2);
  CHECK(framing_cycle(1).level() == 1);
  CHECK(framing_cycle(-1).level() == 1);
  for (unsigned n = 1; n <= 3; ++n) {
    CHECK(kinked_annulus(n).level() == 2 * n);
    CHECK(kinked_annulus(n, -1).level() == 2 * n);
    CHECK(torus_link_2_2n(n).level() == 2 * n);
  }
  std::vector<Chain> all{example_T(), framing_cycle(1), framing_cycle(-1)};
  for (unsigned n = 1; n <= 3; ++n) {
    all.push_back(kinked_annulus(n, 1));
    all.push_back(kinked_annulus(n, -1));
    all.push_back(torus_link_2_2n(n));
  }
  for (const auto& c : all)
    for (const auto& [k, t] : c.terms()) {
      CHECK(is_valid(t.diagram));
      CHECK(t.diagram.loops == 0);
    }
}

TEST_CASE("generators are deterministic") {
  for (unsigned n = 1; n <= 3; ++n) {
    CHECK(kinked_annulus(n).terms().begin()->first == kinked_annulus(n).terms().begin()->first);
    CHECK(torus_link_2_2n(n) == torus_link_2_2n(n));
  }
}

TEST_CASE("family shapes") {
  BalledDiagram hopf = unmark(unmark(only(torus_link_2_2n(1)), 1), 1);
  CHECK(component_count(hopf) == 2);
  CHECK(canonical_key(only(torus_link_2_2n(1))) == canonical_key(only(example_T())));
  for (unsigned n = 1; n <= 3; ++n) {
    CHECK(component_count(only(kinked_annulus(n))) == 1);
    CHECK(curls(only(kinked_annulus(n))).size() == 2 * n);
    for (const auto& c : curls(only(kinked_annulus(n)))) CHECK(c.sign == 1);
    for (const auto& c : curls(only(kinked_annulus(n, -1)))) CHECK(c.sign == -1);
    CHECK(component_count(only(torus_link_2_2n(n))) == 2);
    CHECK(bracket(only(torus_link_2_2n(n))) == oracle_bracket(only(torus_link_2_2n(n))));
    CHECK(epsilon_chain(kinked_annulus(n)) == Cyclo6::one());
    CHECK(epsilon_chain(torus_link_2_2n(n)) == Cyclo6::one());
  }
  BalledDiagram k = only(kinked_annulus(2));
  auto sigs = framed_invariants(k).signatures;
  REQUIRE(sigs.size() == 1);
  CHECK(sigs[0].self_writhe == 4);
}

TEST_CASE("boundaries of the families") {
  CHECK(boundary(example_T()).is_zero());
  CHECK(boundary(kinked_annulus(1)).is_zero());
  CHECK(boundary(torus_link_2_2n(1)).is_zero());
  CHECK(!boundary(framing_cycle(1)).is_zero());
  CHECK(is_cycle(framing_cycle(1)).verdict == Decision::Yes);
  CHECK(epsilon_chain(framing_cycle(1)) == Cyclo6(2, 0));
  CHECK(epsilon_chain(framing_cycle(-1)) == Cyclo6(2, 0));
  for (unsigned n = 1; n <= 3; ++n) {
    CHECK(is_cycle(kinked_annulus(n)).verdict == Decision::Yes);
    CHECK(is_cycle(kinked_annulus(n, -1)).verdict == Decision::Yes);
  }
}

TEST_CASE("cyclic symmetry") {
  CHECK(verify_cyclic_symmetry(example_T()).verdict == Symmetry::Verified);
  CHECK(verify_cyclic_symmetry(kinked_annulus(2)).verdict == Symmetry::Verified);
  CHECK(verify_cyclic_symmetry(torus_link_2_2n(1)).verdict == Symmetry::Verified);

  BalledDiagram d = disjoint_union(closed_braid(2, {1, 1, 1}), BalledDiagram{{{1, 1, 2, 2}}, {}, 0});
  d.balls = {0, 3};
  auto failed = verify_cyclic_symmetry(Chain::single(d));
  CHECK(failed.verdict == Symmetry::Failed);

  try {
    verify_cyclic_symmetry(framing_cycle(1));
    FAIL("two terms accepted");
  } catch (const SymmetryError& e) {
    CHECK(e.kind() == SymmetryError::Kind::MultiTerm);
  }
  BalledDiagram three = closed_braid(2, {1, 1, 1});
  three.balls = {0, 1, 2};
  try {
    verify_cyclic_symmetry(Chain::single(three));
    FAIL("odd level accepted");
  } catch (const SymmetryError& e) {
    CHECK(e.kind() == SymmetryError::Kind::OddLevel);
  }
}

TEST_CASE("capped smoothings of T(2,4) carry different ball words") {
  Reduction r = is_cycle(torus_link_2_2n(2));
  CHECK(r.verdict == Decision::No);
  CHECK(r.reason.find("ball order") != std::string::npos);
  CHECK(verify_cyclic_symmetry(torus_link_2_2n(2)).verdict == Symmetry::Failed);
}
