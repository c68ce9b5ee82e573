#include "skeinhom/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace skeinhom {

const char* DiagramError::kind_name(Kind kind) {
  switch (kind) {
    case Kind::EdgeLabelCount: return "EdgeLabelCount";
    case Kind::NonPlanar: return "NonPlanar";
    case Kind::BadBallIndex: return "BadBallIndex";
    case Kind::LevelMismatch: return "LevelMismatch";
  }
  return "?";
}

namespace {

struct LabelUse {
  Dart first{0, -1};
  Dart second{0, -1};
  int count = 0;
};

std::map<EdgeLabel, LabelUse> label_uses(const BalledDiagram& d) {
  std::map<EdgeLabel, LabelUse> uses;
  for (std::size_t x = 0; x < d.crossings.size(); ++x) {
    for (int p = 0; p < 4; ++p) {
      auto& u = uses[d.crossings[x][p]];
      if (u.count == 0) u.first = {x, p};
      else if (u.count == 1) u.second = {x, p};
      ++u.count;
    }
  }
  return uses;
}

// Connected components of the 4-regular graph, as a component id per crossing.
std::vector<std::size_t> graph_components(const BalledDiagram& d, const std::vector<std::array<Dart, 4>>& mates,
                                          std::size_t& count) {
  const std::size_t n = d.crossings.size();
  std::vector<std::size_t> comp(n, n);
  count = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] != n) continue;
    std::vector<std::size_t> stack{s};
    comp[s] = count;
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      for (int p = 0; p < 4; ++p) {
        std::size_t y = mates[x][p].crossing;
        if (comp[y] == n) {
          comp[y] = count;
          stack.push_back(y);
        }
      }
    }
    ++count;
  }
  return comp;
}

void check_balls(const BalledDiagram& d) {
  std::set<std::size_t> seen;
  for (std::size_t b : d.balls) {
    if (b >= d.crossings.size())
      throw DiagramError(DiagramError::Kind::BadBallIndex, "ball on crossing " + std::to_string(b + 1) + " out of range");
    if (!seen.insert(b).second)
      throw DiagramError(DiagramError::Kind::BadBallIndex, "crossing " + std::to_string(b + 1) + " carries two balls");
  }
}

std::size_t ball_crossing(const BalledDiagram& d, std::size_t ball) {
  if (ball == 0 || ball > d.balls.size())
    throw DiagramError(DiagramError::Kind::BadBallIndex,
                       "ball " + std::to_string(ball) + " out of range 1.." + std::to_string(d.balls.size()));
  return d.balls[ball - 1];
}

}  // namespace

std::vector<std::array<Dart, 4>> edge_mates(const BalledDiagram& d) {
  auto uses = label_uses(d);
  std::vector<std::array<Dart, 4>> mates(d.crossings.size());
  for (const auto& [label, u] : uses) {
    if (u.count != 2)
      throw DiagramError(DiagramError::Kind::EdgeLabelCount,
                         "edge label " + std::to_string(label) + " appears " + std::to_string(u.count) + " times");
    mates[u.first.crossing][u.first.position] = u.second;
    mates[u.second.crossing][u.second.position] = u.first;
  }
  return mates;
}

std::vector<std::vector<Dart>> faces(const BalledDiagram& d) {
  auto mates = edge_mates(d);
  const std::size_t n = d.crossings.size();
  std::vector<std::array<bool, 4>> used(n, {false, false, false, false});
  std::vector<std::vector<Dart>> out;
  for (std::size_t x = 0; x < n; ++x) {
    for (int p = 0; p < 4; ++p) {
      if (used[x][p]) continue;
      std::vector<Dart> face;
      Dart cur{x, p};
      while (!used[cur.crossing][cur.position]) {
        used[cur.crossing][cur.position] = true;
        face.push_back(cur);
        Dart m = mates[cur.crossing][cur.position];
        cur = {m.crossing, (m.position + 1) % 4};
      }
      out.push_back(std::move(face));
    }
  }
  return out;
}

const BalledDiagram& validate(const BalledDiagram& d) {
  auto mates = edge_mates(d);
  check_balls(d);
  std::size_t ncomp = 0;
  auto comp = graph_components(d, mates, ncomp);
  std::vector<long> vertices(ncomp, 0), face_count(ncomp, 0);
  for (std::size_t x = 0; x < d.crossings.size(); ++x) ++vertices[comp[x]];
  for (const auto& f : faces(d)) ++face_count[comp[f.front().crossing]];
  for (std::size_t c = 0; c < ncomp; ++c) {
    // V - E + F = 2 with E = 2V
    if (face_count[c] - vertices[c] != 2)
      throw DiagramError(DiagramError::Kind::NonPlanar,
                         "component with " + std::to_string(vertices[c]) + " crossings has " +
                             std::to_string(face_count[c]) + " faces; not a sphere diagram");
  }
  return d;
}

bool is_valid(const BalledDiagram& d) noexcept {
  try {
    validate(d);
    return true;
  } catch (const DiagramError&) {
    return false;
  }
}

BalledDiagram remove_and_join(const BalledDiagram& d, std::vector<std::size_t> removed,
                              std::vector<std::pair<EdgeLabel, EdgeLabel>> joins) {
  std::sort(removed.begin(), removed.end());
  removed.erase(std::unique(removed.begin(), removed.end()), removed.end());

  BalledDiagram out;
  out.loops = d.loops;
  std::vector<std::size_t> new_index(d.crossings.size(), d.crossings.size());
  for (std::size_t x = 0; x < d.crossings.size(); ++x) {
    if (std::binary_search(removed.begin(), removed.end(), x)) continue;
    new_index[x] = out.crossings.size();
    out.crossings.push_back(d.crossings[x]);
  }
  for (std::size_t b : d.balls)
    if (new_index[b] != d.crossings.size()) out.balls.push_back(new_index[b]);

  for (std::size_t k = 0; k < joins.size(); ++k) {
    auto [p, q] = joins[k];
    if (p == q) {
      ++out.loops;
      continue;
    }
    EdgeLabel keep = std::min(p, q), drop = std::max(p, q);
    for (auto& c : out.crossings)
      for (auto& l : c)
        if (l == drop) l = keep;
    for (std::size_t j = k + 1; j < joins.size(); ++j) {
      if (joins[j].first == drop) joins[j].first = keep;
      if (joins[j].second == drop) joins[j].second = keep;
    }
  }
  return out;
}

BalledDiagram smooth(const BalledDiagram& d, std::size_t ball, Smoothing kind) {
  std::size_t x = ball_crossing(d, ball);
  const Crossing& c = d.crossings[x];
  std::vector<std::pair<EdgeLabel, EdgeLabel>> joins;
  if (kind == Smoothing::Zero) joins = {{c[0], c[1]}, {c[2], c[3]}};
  else joins = {{c[0], c[3]}, {c[1], c[2]}};
  return remove_and_join(d, {x}, std::move(joins));
}

BalledDiagram unmark(const BalledDiagram& d, std::size_t ball) {
  ball_crossing(d, ball);
  BalledDiagram out = d;
  out.balls.erase(out.balls.begin() + static_cast<std::ptrdiff_t>(ball - 1));
  return out;
}

BalledDiagram unknot_circle() {
  BalledDiagram d;
  d.loops = 1;
  return d;
}

bool is_unknot_circle(const BalledDiagram& d) noexcept { return d.crossings.empty() && d.loops == 1; }

Stripped strip_trivial(const BalledDiagram& d) {
  Stripped out{d, 0};
  if (d.crossings.empty() && d.loops > 0) {
    out.diagram.loops = 1;
    out.removed = d.loops - 1;
  } else {
    out.diagram.loops = 0;
    out.removed = d.loops;
  }
  return out;
}

std::vector<std::size_t> ball_numbers(const BalledDiagram& d) {
  std::vector<std::size_t> out(d.crossings.size(), 0);
  for (std::size_t k = 0; k < d.balls.size(); ++k) out[d.balls[k]] = k + 1;
  return out;
}

std::vector<LinkComponent> link_components(const BalledDiagram& d) {
  auto mates = edge_mates(d);
  std::set<EdgeLabel> seen;
  std::vector<LinkComponent> out;
  for (std::size_t x = 0; x < d.crossings.size(); ++x) {
    for (int p = 0; p < 4; ++p) {
      if (seen.count(d.crossings[x][p])) continue;
      LinkComponent comp;
      const Dart start{x, p};
      Dart cur = start;
      do {
        seen.insert(d.crossings[cur.crossing][cur.position]);
        comp.visits.push_back(cur);
        cur = mates[cur.crossing][(cur.position + 2) % 4];
      } while (!(cur == start));
      out.push_back(std::move(comp));
    }
  }
  return out;
}

std::size_t component_count(const BalledDiagram& d) { return link_components(d).size() + d.loops; }

int crossing_sign(int under_in, int over_in) noexcept { return over_in == (under_in + 3) % 4 ? 1 : -1; }

BalledDiagram flip(const BalledDiagram& d) {
  BalledDiagram out = d;
  for (auto& c : out.crossings) c = {c[3], c[2], c[1], c[0]};
  return out;
}

BalledDiagram switch_crossing(const BalledDiagram& d, std::size_t index) {
  BalledDiagram out = d;
  auto& c = out.crossings.at(index);
  c = {c[1], c[2], c[3], c[0]};
  return out;
}

EdgeLabel max_label(const BalledDiagram& d) noexcept {
  EdgeLabel m = 0;
  for (const auto& c : d.crossings)
    for (EdgeLabel l : c) m = std::max(m, l);
  return m;
}

BalledDiagram disjoint_union(const BalledDiagram& a, const BalledDiagram& b) {
  BalledDiagram out = a;
  EdgeLabel shift = max_label(a);
  std::size_t base = a.crossings.size();
  for (auto c : b.crossings) {
    for (auto& l : c) l += shift;
    out.crossings.push_back(c);
  }
  for (std::size_t x : b.balls) out.balls.push_back(x + base);
  out.loops += b.loops;
  return out;
}

}  // namespace skeinhom
