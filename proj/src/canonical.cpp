#include "skeinhom/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>

namespace skeinhom {

namespace {

struct Traversal {
  std::vector<std::uint32_t> code;
  std::vector<std::size_t> order;  // crossings in discovery order
  std::vector<int> offset;         // rotation applied to each discovered crossing, indexed by order
};

// Breadth-first walk of one connected component from (root, root_offset).
// A crossing reached through position q is read starting at q rounded down to
// an under-strand position, so the walk never depends on labels or indices.
Traversal traverse(const std::vector<std::array<Dart, 4>>& mates, const std::vector<std::size_t>& balls_of,
                   std::size_t root, int root_offset, std::size_t n) {
  Traversal t;
  std::vector<std::size_t> id(n, n);
  std::vector<int> off(n, 0);
  std::deque<std::size_t> queue;
  id[root] = 0;
  off[root] = root_offset;
  t.order.push_back(root);
  queue.push_back(root);
  while (!queue.empty()) {
    std::size_t x = queue.front();
    queue.pop_front();
    t.code.push_back(static_cast<std::uint32_t>(balls_of[x]));
    for (int k = 0; k < 4; ++k) {
      Dart m = mates[x][(off[x] + k) % 4];
      if (id[m.crossing] == n) {
        id[m.crossing] = t.order.size();
        off[m.crossing] = m.position & ~1;
        t.order.push_back(m.crossing);
        queue.push_back(m.crossing);
      }
      t.code.push_back(static_cast<std::uint32_t>(id[m.crossing]));
      t.code.push_back(static_cast<std::uint32_t>((m.position - off[m.crossing] + 4) % 4));
    }
  }
  for (std::size_t x : t.order) t.offset.push_back(off[x]);
  return t;
}

}  // namespace

std::string CanonicalKey::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 15]);
  }
  return out;
}

BalledDiagram canonical_form(const BalledDiagram& d) {
  const std::size_t n = d.crossings.size();
  auto mates = edge_mates(d);
  auto balls_of = ball_numbers(d);

  std::vector<bool> done(n, false);
  std::vector<Traversal> best_per_component;
  for (std::size_t s = 0; s < n; ++s) {
    if (done[s]) continue;
    std::optional<Traversal> best;
    Traversal first = traverse(mates, balls_of, s, 0, n);
    for (std::size_t x : first.order) done[x] = true;
    for (std::size_t root : first.order) {
      for (int o : {0, 2}) {
        Traversal t = traverse(mates, balls_of, root, o, n);
        if (!best || t.code < best->code) best = std::move(t);
      }
    }
    best_per_component.push_back(std::move(*best));
  }
  std::sort(best_per_component.begin(), best_per_component.end(),
            [](const Traversal& a, const Traversal& b) {
              if (a.code.size() != b.code.size()) return a.code.size() < b.code.size();
              return a.code < b.code;
            });

  BalledDiagram out;
  out.loops = d.loops;
  std::vector<std::size_t> new_index(n, 0);
  for (const auto& t : best_per_component) {
    for (std::size_t k = 0; k < t.order.size(); ++k) {
      std::size_t x = t.order[k];
      new_index[x] = out.crossings.size();
      const Crossing& c = d.crossings[x];
      int o = t.offset[k];
      out.crossings.push_back({c[o % 4], c[(o + 1) % 4], c[(o + 2) % 4], c[(o + 3) % 4]});
    }
  }
  std::map<EdgeLabel, EdgeLabel> relabel;
  for (auto& c : out.crossings)
    for (auto& l : c) {
      auto [it, inserted] = relabel.try_emplace(l, static_cast<EdgeLabel>(relabel.size() + 1));
      l = it->second;
    }
  for (std::size_t b : d.balls) out.balls.push_back(new_index[b]);
  return out;
}

namespace {

CanonicalKey encode(const BalledDiagram& f) {
  std::string bytes;
  auto put = [&bytes](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) bytes.push_back(static_cast<char>((v >> (8 * (7 - i))) & 0xff));
  };
  put(f.crossings.size());
  for (const auto& c : f.crossings)
    for (EdgeLabel l : c) put(static_cast<std::uint64_t>(l));
  put(f.balls.size());
  for (std::size_t b : f.balls) put(b);
  put(f.loops);
  return {std::move(bytes)};
}

}  // namespace

CanonicalKey canonical_key(const BalledDiagram& d) { return encode(canonical_form(d)); }

Canonical canonicalize(const BalledDiagram& d) {
  Canonical c{canonical_form(d), {}};
  c.key = encode(c.form);
  return c;
}

CanonicalKey orbit_key(const BalledDiagram& d) { return std::min(canonical_key(d), canonical_key(flip(d))); }

}  // namespace skeinhom
