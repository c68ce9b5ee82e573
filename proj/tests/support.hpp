#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "skeinhom/families.hpp"
#include "skeinhom/moves.hpp"

namespace testsupport {

using namespace skeinhom;

// Dense product of two Laurent polynomials with exponents in [-r, r].
inline LaurentPoly dense_product(const LaurentPoly& p, const LaurentPoly& q, long r) {
  std::vector<mpz_class> a(2 * r + 1), b(2 * r + 1), c(4 * r + 1);
  for (const auto& [e, v] : p.terms()) a[e + r] = v;
  for (const auto& [e, v] : q.terms()) b[e + r] = v;
  for (long i = 0; i <= 2 * r; ++i)
    for (long j = 0; j <= 2 * r; ++j) c[i + j] += a[i] * b[j];
  LaurentPoly out;
  for (long k = 0; k <= 4 * r; ++k) out.add_term(k - 2 * r, c[k]);
  return out;
}

inline LaurentPoly random_poly(std::mt19937_64& rng, long range = 8, int coeff = 9, int max_terms = 6) {
  std::uniform_int_distribution<long> e(-range, range);
  std::uniform_int_distribution<int> c(-coeff, coeff), n(0, max_terms);
  LaurentPoly p;
  for (int k = n(rng); k > 0; --k) p.add_term(e(rng), c(rng));
  return p;
}

// Kauffman bracket by recursive resolution of the last crossing, with its own
// edge rewiring: delta per circle, A for the 0-1/2-3 resolution.
inline LaurentPoly recursive_bracket(std::vector<Crossing> xs, unsigned circles) {
  if (xs.empty()) {
    LaurentPoly delta = -LaurentPoly::monomial(2) - LaurentPoly::monomial(-2), out = 1;
    for (unsigned k = 0; k < circles; ++k) out = out * delta;
    return out;
  }
  Crossing c = xs.back();
  xs.pop_back();
  auto resolve = [&](std::vector<std::pair<EdgeLabel, EdgeLabel>> joins) {
    std::vector<Crossing> ys = xs;
    unsigned closed = circles;
    for (std::size_t k = 0; k < joins.size(); ++k) {
      auto [p, q] = joins[k];
      if (p == q) {
        ++closed;
        continue;
      }
      for (auto& y : ys)
        for (auto& l : y)
          if (l == q) l = p;
      for (std::size_t j = k + 1; j < joins.size(); ++j) {
        if (joins[j].first == q) joins[j].first = p;
        if (joins[j].second == q) joins[j].second = p;
      }
    }
    return recursive_bracket(std::move(ys), closed);
  };
  return LaurentPoly::A() * resolve({{c[0], c[1]}, {c[2], c[3]}}) +
         LaurentPoly::monomial(-1) * resolve({{c[0], c[3]}, {c[1], c[2]}});
}

inline LaurentPoly oracle_bracket(const BalledDiagram& d) { return recursive_bracket(d.crossings, d.loops); }

inline std::vector<EdgeLabel> labels(const BalledDiagram& d) {
  std::vector<EdgeLabel> out;
  for (const auto& c : d.crossings)
    for (EdgeLabel l : c) out.push_back(l);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

template <class T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& v) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

inline int coin(std::mt19937_64& rng) { return std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1; }

// Random unballed diagram with at most max_crossings crossings.
inline BalledDiagram random_diagram(std::mt19937_64& rng, std::size_t max_crossings = 8, std::size_t min_crossings = 1) {
  std::uniform_int_distribution<unsigned> strands(2, 4);
  for (;;) {
    unsigned s = strands(rng);
    std::size_t len = std::uniform_int_distribution<std::size_t>(min_crossings, max_crossings)(rng);
    std::vector<int> word;
    for (std::size_t k = 0; k < len; ++k)
      word.push_back(coin(rng) * std::uniform_int_distribution<int>(1, static_cast<int>(s) - 1)(rng));
    BalledDiagram d = closed_braid(s, word);
    d.loops = 0;
    for (int extra = std::uniform_int_distribution<int>(0, 3)(rng); extra > 0; --extra) {
      if (d.crossings.size() >= max_crossings) break;
      int kind = std::uniform_int_distribution<int>(0, 3)(rng);
      auto ls = labels(d);
      if (kind == 0 && !ls.empty()) {
        d = insert_curl(d, pick(rng, ls), coin(rng), coin(rng) > 0 ? 1 : 0);
      } else if (kind == 1 && !ls.empty() && d.crossings.size() + 2 <= max_crossings) {
        auto r2 = insert_r2(d, pick(rng, ls), pick(rng, ls));
        if (!r2.empty()) d = pick(rng, r2);
      } else if (kind == 2 && !d.crossings.empty()) {
        d = switch_crossing(d, std::uniform_int_distribution<std::size_t>(0, d.crossings.size() - 1)(rng));
      } else if (kind == 3 && d.crossings.size() + 1 <= max_crossings) {
        BalledDiagram kink{{{1, 1, 2, 2}}, {}, 0};
        if (coin(rng) < 0) kink.crossings[0] = {1, 2, 2, 1};
        d = disjoint_union(d, kink);
      }
    }
    if (d.crossings.size() >= min_crossings && d.crossings.size() <= max_crossings) return d;
  }
}

inline BalledDiagram with_random_balls(std::mt19937_64& rng, BalledDiagram d, std::size_t level) {
  std::vector<std::size_t> idx(d.crossings.size());
  for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
  std::shuffle(idx.begin(), idx.end(), rng);
  idx.resize(level);
  d.balls = idx;
  return d;
}

inline Chain random_chain(std::mt19937_64& rng, std::size_t level, std::size_t max_crossings = 8) {
  Chain c(level);
  int terms = std::uniform_int_distribution<int>(1, 3)(rng);
  for (int t = 0; t < terms; ++t) {
    BalledDiagram d = with_random_balls(rng, random_diagram(rng, max_crossings, std::max<std::size_t>(level, 1)), level);
    LaurentPoly coeff = random_poly(rng, 4, 5, 3);
    if (coeff.is_zero()) coeff = 1;
    c.add(d, coeff);
  }
  return c;
}

// Random relabeling of edges and shuffle of crossings; balls follow their crossings.
inline BalledDiagram scramble(std::mt19937_64& rng, const BalledDiagram& d) {
  auto ls = labels(d);
  std::vector<EdgeLabel> image(ls.size());
  for (std::size_t k = 0; k < image.size(); ++k) image[k] = static_cast<EdgeLabel>(3 * k + 7);
  std::shuffle(image.begin(), image.end(), rng);
  std::map<EdgeLabel, EdgeLabel> ren;
  for (std::size_t k = 0; k < ls.size(); ++k) ren[ls[k]] = image[k];
  std::vector<std::size_t> perm(d.crossings.size());
  for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = k;
  std::shuffle(perm.begin(), perm.end(), rng);
  BalledDiagram out;
  out.loops = d.loops;
  out.crossings.resize(d.crossings.size());
  std::vector<std::size_t> where(perm.size());
  for (std::size_t k = 0; k < perm.size(); ++k) {
    Crossing c = d.crossings[perm[k]];
    for (auto& l : c) l = ren[l];
    out.crossings[k] = c;
    where[perm[k]] = k;
  }
  for (std::size_t b : d.balls) out.balls.push_back(where[b]);
  return out;
}

}  // namespace testsupport
