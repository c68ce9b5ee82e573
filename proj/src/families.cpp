#include "skeinhom/families.hpp"

#include <cstdlib>
#include <numeric>

namespace skeinhom {

BalledDiagram closed_braid(unsigned strands, const std::vector<int>& word) {
  BalledDiagram d;
  std::vector<EdgeLabel> cur(strands);
  std::iota(cur.begin(), cur.end(), EdgeLabel{1});
  EdgeLabel next = strands + 1;
  for (int letter : word) {
    std::size_t i = static_cast<std::size_t>(std::abs(letter)) - 1;
    if (letter == 0 || i + 1 >= strands) throw std::invalid_argument("braid letter out of range");
    EdgeLabel in_l = cur[i], in_r = cur[i + 1], out_l = next++, out_r = next++;
    if (letter > 0) d.crossings.push_back({in_r, out_r, out_l, in_l});
    else d.crossings.push_back({in_l, in_r, out_r, out_l});
    cur[i] = out_l;
    cur[i + 1] = out_r;
  }
  for (unsigned j = 0; j < strands; ++j) {
    EdgeLabel start = j + 1;
    if (cur[j] == start) {
      ++d.loops;
      continue;
    }
    for (auto& c : d.crossings)
      for (auto& l : c)
        if (l == cur[j]) l = start;
  }
  return d;
}

namespace {

Crossing curl_tuple(EdgeLabel in, EdgeLabel out, EdgeLabel loop, int sign) {
  if (sign > 0) return {in, out, loop, loop};
  return {in, loop, loop, out};
}

BalledDiagram all_balled(BalledDiagram d) {
  d.balls.resize(d.crossings.size());
  std::iota(d.balls.begin(), d.balls.end(), std::size_t{0});
  return d;
}

// Strand of crossing-consecutive curls: curl k sits between edges k+1 and k+2 (cyclically).
BalledDiagram curl_circle(const std::vector<int>& signs) {
  BalledDiagram d;
  const auto m = static_cast<EdgeLabel>(signs.size());
  for (EdgeLabel k = 0; k < m; ++k)
    d.crossings.push_back(curl_tuple(k + 1, (k + 1) % m + 1, m + k + 1, signs[k]));
  return d;
}

}  // namespace

Chain example_T() { return Chain::single(all_balled(closed_braid(2, {1, 1}))); }

Chain kinked_annulus(unsigned n, int sign) {
  if (n == 0) throw std::invalid_argument("kinked_annulus needs n >= 1");
  return Chain::single(all_balled(curl_circle(std::vector<int>(2 * n, sign > 0 ? 1 : -1))));
}

Chain torus_link_2_2n(unsigned n) {
  if (n == 0) throw std::invalid_argument("torus_link_2_2n needs n >= 1");
  return Chain::single(all_balled(closed_braid(2, std::vector<int>(2 * n, 1))));
}

Chain framing_cycle(int sign) {
  int s = sign > 0 ? 1 : -1;
  BalledDiagram kink = all_balled(curl_circle({s}));
  BalledDiagram pair = curl_circle({s, -s});
  pair.balls = {1};
  Chain c = Chain::single(kink);
  c.add(pair, -LaurentPoly::monomial(3 * s));
  return c;
}

const char* symmetry_name(Symmetry s) {
  switch (s) {
    case Symmetry::Verified: return "Verified";
    case Symmetry::Failed: return "Failed";
    case Symmetry::Unknown: return "Unknown";
  }
  return "?";
}

SymmetryCheck verify_cyclic_symmetry(const Chain& c, const SearchOptions& options) {
  if (c.size() != 1)
    throw SymmetryError(SymmetryError::Kind::MultiTerm,
                        "cyclic symmetry needs a single-term chain, got " + std::to_string(c.size()) + " terms");
  if (c.level() % 2 != 0 || c.level() == 0)
    throw SymmetryError(SymmetryError::Kind::OddLevel,
                        "cyclic symmetry needs a positive even level, got " + std::to_string(c.level()));
  SymmetryCheck out;
  out.verdict = Symmetry::Verified;
  std::vector<Chain> parts;
  for (std::size_t i = 1; i <= c.level(); ++i) parts.push_back(ball_operator(c, i));
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    std::vector<ReductionItem> items;
    for (const auto& [key, t] : parts[i].terms())
      items.push_back({t.diagram, key, t.coefficient, "d_" + std::to_string(i + 1)});
    for (const auto& [key, t] : parts[i + 1].terms())
      items.push_back({t.diagram, key, -t.coefficient, "d_" + std::to_string(i + 2)});
    out.pairs.push_back(reduce_to_zero(items, options));
    Decision d = out.pairs.back().verdict;
    if (d == Decision::No) out.verdict = Symmetry::Failed;
    else if (d == Decision::Unknown && out.verdict == Symmetry::Verified) out.verdict = Symmetry::Unknown;
  }
  return out;
}

}  // namespace skeinhom
