#include "skeinhom/invariants.hpp"

#include <algorithm>

#include "skeinhom/bracket.hpp"

namespace skeinhom {

std::vector<std::size_t> least_cyclic_form(std::vector<std::size_t> word) {
  if (word.empty()) return word;
  std::vector<std::size_t> best = word;
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t r = 0; r < word.size(); ++r) {
      std::rotate(word.begin(), word.begin() + 1, word.end());
      best = std::min(best, word);
    }
    std::reverse(word.begin(), word.end());
  }
  return best;
}


std::vector<int> self_writhes(const BalledDiagram& d) {
  auto comps = link_components(d);
  const std::size_t n = d.crossings.size();
  std::vector<int> under_in(n, -1), over_in(n, -1);
  std::vector<std::size_t> under_comp(n), over_comp(n);
  for (std::size_t k = 0; k < comps.size(); ++k)
    for (const Dart& v : comps[k].visits) {
      if (v.position % 2 == 0) {
        under_in[v.crossing] = v.position;
        under_comp[v.crossing] = k;
      } else {
        over_in[v.crossing] = v.position;
        over_comp[v.crossing] = k;
      }
    }
  std::vector<int> out(comps.size(), 0);
  for (std::size_t x = 0; x < n; ++x)
    if (under_comp[x] == over_comp[x]) out[under_comp[x]] += crossing_sign(under_in[x], over_in[x]);
  return out;
}

FramedInvariants framed_invariants(const BalledDiagram& d, std::size_t max_crossings) {
  FramedInvariants inv;
  auto comps = link_components(d);
  auto writhes = self_writhes(d);
  auto numbers = ball_numbers(d);
  inv.components = comps.size() + d.loops;
  for (std::size_t k = 0; k < comps.size(); ++k) {
    ComponentSignature sig;
    sig.self_writhe = writhes[k];
    for (const Dart& v : comps[k].visits)
      if (numbers[v.crossing] != 0) sig.ball_word.push_back(numbers[v.crossing]);
    sig.ball_word = least_cyclic_form(std::move(sig.ball_word));
    inv.signatures.push_back(std::move(sig));
  }
  for (unsigned k = 0; k < d.loops; ++k) inv.signatures.push_back({});
  std::sort(inv.signatures.begin(), inv.signatures.end());
  if (d.crossings.size() <= max_crossings) inv.bracket = bracket(d, {max_crossings, 1});
  return inv;
}

std::string FramedInvariants::separating(const FramedInvariants& other) const {
  if (components != other.components) return "component count";
  if (bracket && other.bracket && !(*bracket == *other.bracket)) return "bracket";
  if (signatures != other.signatures) {
    std::vector<int> w1, w2;
    for (const auto& s : signatures) w1.push_back(s.self_writhe);
    for (const auto& s : other.signatures) w2.push_back(s.self_writhe);
    std::sort(w1.begin(), w1.end());
    std::sort(w2.begin(), w2.end());
    return w1 != w2 ? "self-writhe per component" : "ball order along components";
  }
  return {};
}

}  // namespace skeinhom
