#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "skeinhom/bracket.hpp"
#include "skeinhom/canonical.hpp"
#include "skeinhom/cyclo6.hpp"
#include "skeinhom/diagram.hpp"
#include "skeinhom/laurent.hpp"

namespace skeinhom {

struct ChainTerm {
  BalledDiagram diagram;  // canonical form, trivial circles stripped
  LaurentPoly coefficient;
};

/// Finite Z[A,A^-1]-combination of marked diagrams at one level.
class Chain {
 public:
  using TermMap = std::map<CanonicalKey, ChainTerm>;

  explicit Chain(std::size_t level = 0) : level_(level) {}

  std::size_t level() const noexcept { return level_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Adds coefficient * d. Crossing-free circles are rewritten away with the
  /// factor (-A^2 - A^-2) each; equal diagrams merge; zero terms vanish.
  void add(const BalledDiagram& d, const LaurentPoly& coefficient);

  Chain& operator+=(const Chain& other);
  Chain& operator-=(const Chain& other);
  friend Chain operator+(Chain a, const Chain& b) { return a += b; }
  friend Chain operator-(Chain a, const Chain& b) { return a -= b; }

  bool operator==(const Chain& other) const;

  static Chain single(const BalledDiagram& d, const LaurentPoly& coefficient = 1);

 private:
  std::size_t level_;
  TermMap terms_;
};

Chain scale(const LaurentPoly& p, const Chain& c);

/// d_i: crossing kept with ball removed, minus A times the Zero smoothing,
/// minus A^-1 times the Infinity smoothing.
Chain ball_operator(const Chain& c, std::size_t ball);

/// Sum over i of (-1)^i d_i; zero on level 0.
Chain boundary(const Chain& c);

Cyclo6 epsilon_chain(const Chain& c);

/// Sum of coefficient * bracket(diagram), balls forgotten.
LaurentPoly eval_chain(const Chain& c, const BracketOptions& options = {});

// -- term-level expansion of the boundary, used by certification ------------

enum class BoundaryPart { Unmark, Zero, Infinity };
const char* part_name(BoundaryPart p);

struct BoundaryPiece {
  std::size_t generator;  // index into c.terms() in key order
  std::size_t ball;
  BoundaryPart part;
  LaurentPoly coefficient;  // sign, smoothing weight and circle factors folded in
  BalledDiagram diagram;    // canonical form
  CanonicalKey key;
};

/// Every summand of boundary(c) before like terms are merged.
std::vector<BoundaryPiece> boundary_pieces(const Chain& c);

}  // namespace skeinhom
