#include "skeinhom/bracket.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <thread>

namespace skeinhom {

namespace {

// counts[k][m]: number of states with k Zero-smoothings and m circles.
using StateCounts = std::vector<std::vector<std::uint64_t>>;

struct Compact {
  std::size_t crossings = 0;
  std::size_t labels = 0;
  std::vector<std::array<std::uint32_t, 4>> ids;
};

Compact compact(const BalledDiagram& d) {
  Compact c;
  c.crossings = d.crossings.size();
  std::map<EdgeLabel, std::uint32_t> index;
  for (const auto& x : d.crossings) {
    std::array<std::uint32_t, 4> row{};
    for (int p = 0; p < 4; ++p) {
      auto [it, inserted] = index.try_emplace(x[p], static_cast<std::uint32_t>(index.size()));
      row[p] = it->second;
    }
    c.ids.push_back(row);
  }
  c.labels = index.size();
  return c;
}

std::uint32_t find(std::vector<std::uint32_t>& parent, std::uint32_t v) {
  while (parent[v] != v) {
    parent[v] = parent[parent[v]];
    v = parent[v];
  }
  return v;
}

void count_range(const Compact& c, std::uint64_t begin, std::uint64_t end, StateCounts& counts) {
  std::vector<std::uint32_t> parent(c.labels);
  for (std::uint64_t state = begin; state < end; ++state) {
    std::iota(parent.begin(), parent.end(), 0u);
    std::size_t circles = c.labels;
    std::size_t zeros = 0;
    auto join = [&](std::uint32_t a, std::uint32_t b) {
      a = find(parent, a);
      b = find(parent, b);
      if (a != b) {
        parent[a] = b;
        --circles;
      }
    };
    for (std::size_t x = 0; x < c.crossings; ++x) {
      const auto& r = c.ids[x];
      if ((state >> x) & 1u) {
        join(r[0], r[3]);
        join(r[1], r[2]);
      } else {
        ++zeros;
        join(r[0], r[1]);
        join(r[2], r[3]);
      }
    }
    ++counts[zeros][circles];
  }
}

}  // namespace

LaurentPoly bracket(const BalledDiagram& d, const BracketOptions& options) {
  const std::size_t n = d.crossings.size();
  if (n > options.max_crossings || n >= 63)
    throw CrossingLimitError("bracket: " + std::to_string(n) + " crossings exceeds the state-sum limit of " +
                             std::to_string(options.max_crossings));
  edge_mates(d);  // label sanity

  LaurentPoly loops_factor = circle_factor().pow(d.loops);
  if (n == 0) return loops_factor;

  Compact c = compact(d);
  const std::uint64_t total = std::uint64_t{1} << n;
  unsigned workers = options.workers ? options.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(1, total >> 10)));

  std::vector<StateCounts> partial(workers, StateCounts(n + 1, std::vector<std::uint64_t>(c.labels + 1, 0)));
  if (workers == 1) {
    count_range(c, 0, total, partial[0]);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      std::uint64_t begin = total * w / workers, end = total * (w + 1) / workers;
      pool.emplace_back([&c, begin, end, &slot = partial[w]] { count_range(c, begin, end, slot); });
    }
    for (auto& t : pool) t.join();
  }

  std::vector<LaurentPoly> circle_powers{LaurentPoly(1)};
  for (std::size_t m = 1; m <= c.labels; ++m) circle_powers.push_back(circle_powers.back() * circle_factor());

  LaurentPoly out;
  for (std::size_t k = 0; k <= n; ++k) {
    for (std::size_t m = 0; m <= c.labels; ++m) {
      std::uint64_t count = 0;
      for (const auto& p : partial) count += p[k][m];
      if (count == 0) continue;
      mpz_class weight;
      mpz_import(weight.get_mpz_t(), 1, 1, sizeof(count), 0, 0, &count);
      auto exponent = static_cast<LaurentPoly::Exponent>(2 * k) - static_cast<LaurentPoly::Exponent>(n);
      out += LaurentPoly::monomial(exponent, weight) * circle_powers[m];
    }
  }
  return out * loops_factor;
}

}  // namespace skeinhom
