#include "skeinhom/chain.hpp"

namespace skeinhom {

const char* part_name(BoundaryPart p) {
  switch (p) {
    case BoundaryPart::Unmark: return "unmark";
    case BoundaryPart::Zero: return "zero";
    case BoundaryPart::Infinity: return "infinity";
  }
  return "?";
}

void Chain::add(const BalledDiagram& d, const LaurentPoly& coefficient) {
  if (d.level() != level_)
    throw DiagramError(DiagramError::Kind::LevelMismatch, "diagram with " + std::to_string(d.level()) +
                                                              " balls added to a level-" + std::to_string(level_) +
                                                              " chain");
  if (coefficient.is_zero()) return;
  validate(d);
  Stripped s = strip_trivial(d);
  LaurentPoly coeff = coefficient * circle_factor().pow(s.removed);
  Canonical c = canonicalize(s.diagram);
  auto [it, inserted] = terms_.try_emplace(c.key, ChainTerm{std::move(c.form), coeff});
  if (inserted) return;
  it->second.coefficient += coeff;
  if (it->second.coefficient.is_zero()) terms_.erase(it);
}

Chain& Chain::operator+=(const Chain& other) {
  if (other.level_ != level_)
    throw DiagramError(DiagramError::Kind::LevelMismatch, "adding chains at levels " + std::to_string(level_) +
                                                              " and " + std::to_string(other.level_));
  for (const auto& [key, term] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(key, term);
    if (inserted) continue;
    it->second.coefficient += term.coefficient;
    if (it->second.coefficient.is_zero()) terms_.erase(it);
  }
  return *this;
}

Chain& Chain::operator-=(const Chain& other) { return *this += scale(-1, other); }

bool Chain::operator==(const Chain& other) const {
  if (level_ != other.level_ || terms_.size() != other.terms_.size()) return false;
  for (auto a = terms_.begin(), b = other.terms_.begin(); a != terms_.end(); ++a, ++b)
    if (a->first != b->first || !(a->second.coefficient == b->second.coefficient)) return false;
  return true;
}

Chain Chain::single(const BalledDiagram& d, const LaurentPoly& coefficient) {
  Chain c(d.level());
  c.add(d, coefficient);
  return c;
}

Chain scale(const LaurentPoly& p, const Chain& c) {
  Chain out(c.level());
  if (p.is_zero()) return out;
  for (const auto& [key, term] : c.terms()) out.add(term.diagram, p * term.coefficient);
  return out;
}

namespace {

struct Summand {
  BoundaryPart part;
  BalledDiagram diagram;
  LaurentPoly weight;
};

std::vector<Summand> ball_summands(const BalledDiagram& d, std::size_t ball) {
  return {{BoundaryPart::Unmark, unmark(d, ball), LaurentPoly(1)},
          {BoundaryPart::Zero, smooth(d, ball, Smoothing::Zero), LaurentPoly::monomial(1, -1)},
          {BoundaryPart::Infinity, smooth(d, ball, Smoothing::Infinity), LaurentPoly::monomial(-1, -1)}};
}

}  // namespace

Chain ball_operator(const Chain& c, std::size_t ball) {
  if (ball == 0 || ball > c.level())
    throw DiagramError(DiagramError::Kind::BadBallIndex,
                       "ball " + std::to_string(ball) + " out of range for a level-" + std::to_string(c.level()) +
                           " chain");
  Chain out(c.level() - 1);
  for (const auto& [key, term] : c.terms())
    for (auto& s : ball_summands(term.diagram, ball)) out.add(s.diagram, term.coefficient * s.weight);
  return out;
}

Chain boundary(const Chain& c) {
  if (c.level() == 0) return Chain(0);
  Chain out(c.level() - 1);
  for (std::size_t i = 1; i <= c.level(); ++i) {
    Chain part = ball_operator(c, i);
    if (i % 2 == 1) out -= part;
    else out += part;
  }
  return out;
}

Cyclo6 epsilon_chain(const Chain& c) {
  Cyclo6 out;
  for (const auto& [key, term] : c.terms()) out += epsilon_scalar(term.coefficient);
  return out;
}

LaurentPoly eval_chain(const Chain& c, const BracketOptions& options) {
  LaurentPoly out;
  for (const auto& [key, term] : c.terms()) out += term.coefficient * bracket(term.diagram, options);
  return out;
}

std::vector<BoundaryPiece> boundary_pieces(const Chain& c) {
  std::vector<BoundaryPiece> out;
  if (c.level() == 0) return out;
  std::size_t g = 0;
  for (const auto& [key, term] : c.terms()) {
    for (std::size_t i = 1; i <= c.level(); ++i) {
      LaurentPoly sign = i % 2 == 1 ? LaurentPoly(-1) : LaurentPoly(1);
      for (auto& s : ball_summands(term.diagram, i)) {
        Stripped st = strip_trivial(s.diagram);
        Canonical canon = canonicalize(st.diagram);
        out.push_back({g, i, s.part, sign * term.coefficient * s.weight * circle_factor().pow(st.removed),
                       std::move(canon.form), std::move(canon.key)});
      }
    }
    ++g;
  }
  return out;
}

}  // namespace skeinhom
