#include "skeinhom/moves.hpp"

#include <algorithm>
#include <set>

#include "skeinhom/canonical.hpp"

namespace skeinhom {

const char* move_name(MoveKind kind) {
  switch (kind) {
    case MoveKind::R2Delete: return "R2Delete";
    case MoveKind::R3: return "R3";
    case MoveKind::CurlCancel: return "CurlCancel";
    case MoveKind::CurlTransfer: return "CurlTransfer";
    case MoveKind::TwistBallSlide: return "TwistBallSlide";
  }
  return "?";
}

std::optional<MoveKind> move_from_name(const std::string& name) {
  for (auto k : {MoveKind::R2Delete, MoveKind::R3, MoveKind::CurlCancel, MoveKind::CurlTransfer,
                 MoveKind::TwistBallSlide})
    if (name == move_name(k)) return k;
  return std::nullopt;
}

namespace {

constexpr int next(int p, int k = 1) { return (p + k) % 4; }

struct Bigon {
  std::size_t x, y;
  int px, py;  // first bigon edge at x (px) and y (py); second edge at x: px-1, at y: py+1
  bool alternating;
};

struct Triangle {
  std::array<std::size_t, 3> crossing;
  std::array<int, 3> leave;   // edge k leaves crossing[k] at leave[k]
  std::array<int, 3> arrive;  // and arrives at crossing[k+1] at arrive[k]
};

struct CurlEnds {
  Curl curl;
  int end_to_loop_start;  // position p+2, strand-connected to the loop's position p
  int end_to_loop_end;    // position p+3
};

std::optional<Bigon> bigon_at(const BalledDiagram& d, const std::vector<std::array<Dart, 4>>& mates, Dart start) {
  Dart m = mates[start.crossing][start.position];
  if (m.crossing == start.crossing) return std::nullopt;
  Dart second{m.crossing, next(m.position)};
  Dart back = mates[second.crossing][second.position];
  if (!(Dart{back.crossing, next(back.position)} == start)) return std::nullopt;
  (void)d;
  Bigon b{start.crossing, m.crossing, start.position, m.position, (start.position % 2) != (m.position % 2)};
  return b;
}

std::optional<Triangle> triangle_at(const std::vector<std::array<Dart, 4>>& mates, Dart start) {
  Triangle t;
  Dart cur = start;
  for (int k = 0; k < 3; ++k) {
    t.crossing[k] = cur.crossing;
    t.leave[k] = cur.position;
    Dart m = mates[cur.crossing][cur.position];
    t.arrive[k] = m.position;
    cur = {m.crossing, next(m.position)};
  }
  if (!(cur == start)) return std::nullopt;
  if (t.crossing[0] == t.crossing[1] || t.crossing[1] == t.crossing[2] || t.crossing[0] == t.crossing[2])
    return std::nullopt;
  return t;
}

std::vector<CurlEnds> curl_ends(const BalledDiagram& d) {
  std::vector<CurlEnds> out;
  for (const Curl& c : curls(d)) {
    const Crossing& x = d.crossings[c.crossing];
    int p = c.loop_position;
    if (x[next(p, 2)] == x[next(p, 3)]) continue;  // single-crossing component
    out.push_back({c, next(p, 2), next(p, 3)});
  }
  return out;
}

const CurlEnds* find_curl(const std::vector<CurlEnds>& all, std::size_t crossing) {
  for (const auto& c : all)
    if (c.curl.crossing == crossing) return &c;
  return nullptr;
}

bool is_balled(const BalledDiagram& d, std::size_t x) {
  return std::find(d.balls.begin(), d.balls.end(), x) != d.balls.end();
}

// Shared strand end of two curls: position at u and at v, or nullopt.
std::optional<std::pair<int, int>> shared_end(const BalledDiagram& d, const CurlEnds& u, const CurlEnds& v) {
  for (int pu : {u.end_to_loop_start, u.end_to_loop_end})
    for (int pv : {v.end_to_loop_start, v.end_to_loop_end})
      if (d.crossings[u.curl.crossing][pu] == d.crossings[v.curl.crossing][pv]) return std::make_pair(pu, pv);
  return std::nullopt;
}

int other_end(const CurlEnds& c, int pos) { return pos == c.end_to_loop_start ? c.end_to_loop_end : c.end_to_loop_start; }

std::optional<BalledDiagram> apply_bigon_move(const BalledDiagram& d, const Move& m) {
  if (m.args.size() != 2 || m.args[0] >= d.crossings.size() || m.args[1] > 3) return std::nullopt;
  auto mates = edge_mates(d);
  auto b = bigon_at(d, mates, {m.args[0], static_cast<int>(m.args[1])});
  if (!b) return std::nullopt;
  if (m.kind == MoveKind::R2Delete) {
    if (b->alternating || is_balled(d, b->x) || is_balled(d, b->y)) return std::nullopt;
    const Crossing& cx = d.crossings[b->x];
    const Crossing& cy = d.crossings[b->y];
    EdgeLabel f1 = cx[next(b->px, 2)], g1 = cy[next(b->py, 2)];
    EdgeLabel f2 = cx[next(b->px, 1)], g2 = cy[next(b->py, 3)];
    return remove_and_join(d, {b->x, b->y}, {{f1, g1}, {f2, g2}});
  }
  // TwistBallSlide
  if (!b->alternating) return std::nullopt;
  bool bx = is_balled(d, b->x), by = is_balled(d, b->y);
  if (bx == by) return std::nullopt;
  BalledDiagram out = d;
  for (auto& ball : out.balls) {
    if (ball == b->x) ball = b->y;
    else if (ball == b->y) ball = b->x;
  }
  return out;
}

std::optional<BalledDiagram> apply_r3(const BalledDiagram& d, const Move& m) {
  if (m.args.size() != 2 || m.args[0] >= d.crossings.size() || m.args[1] > 3) return std::nullopt;
  auto mates = edge_mates(d);
  auto t = triangle_at(mates, {m.args[0], static_cast<int>(m.args[1])});
  if (!t) return std::nullopt;
  // Edge k runs from crossing[k] (position leave[k]) to crossing[k+1] (position arrive[k]).
  int top = -1, bottom = -1;
  for (int k = 0; k < 3; ++k) {
    bool over_a = t->leave[k] % 2 == 1, over_b = t->arrive[k] % 2 == 1;
    if (over_a && over_b) top = k;
    if (!over_a && !over_b) bottom = k;
  }
  if (top < 0 || bottom < 0) return std::nullopt;
  // at most one balled crossing in the triangle
  int balled = 0;
  for (std::size_t x : t->crossing) balled += is_balled(d, x) ? 1 : 0;
  if (balled > 1) return std::nullopt;

  BalledDiagram out = d;
  for (int k = 0; k < 3; ++k) {
    std::size_t a = t->crossing[k], b = t->crossing[(k + 1) % 3];
    int oa = next(t->leave[k], 2), ob = next(t->arrive[k], 2);
    out.crossings[a][oa] = d.crossings[b][ob];
    out.crossings[b][ob] = d.crossings[a][oa];
  }
  if (!is_valid(out)) return std::nullopt;
  return out;
}

std::optional<BalledDiagram> apply_curl_move(const BalledDiagram& d, const Move& m) {
  if (m.args.size() != 2 || m.args[0] == m.args[1]) return std::nullopt;
  auto all = curl_ends(d);
  const CurlEnds* u = find_curl(all, m.args[0]);
  const CurlEnds* v = find_curl(all, m.args[1]);
  if (!u || !v) return std::nullopt;
  auto shared = shared_end(d, *u, *v);
  if (!shared) return std::nullopt;
  const Crossing& cu = d.crossings[u->curl.crossing];
  const Crossing& cv = d.crossings[v->curl.crossing];
  int fu = other_end(*u, shared->first), gv = other_end(*v, shared->second);
  EdgeLabel e = cu[shared->first], f = cu[fu], g = cv[gv];

  if (m.kind == MoveKind::CurlCancel) {
    if (u->curl.sign == v->curl.sign || is_balled(d, u->curl.crossing) || is_balled(d, v->curl.crossing))
      return std::nullopt;
    return remove_and_join(d, {u->curl.crossing, v->curl.crossing}, {{f, g}});
  }
  // CurlTransfer: f - u - e - v - g  becomes  f - v - e - u - g
  if (is_balled(d, u->curl.crossing) || f == g) return std::nullopt;
  BalledDiagram out = d;
  out.crossings[u->curl.crossing][fu] = e;
  out.crossings[u->curl.crossing][shared->first] = g;
  out.crossings[v->curl.crossing][shared->second] = f;
  out.crossings[v->curl.crossing][gv] = e;
  if (!is_valid(out)) return std::nullopt;
  return out;
}

}  // namespace

std::vector<Curl> curls(const BalledDiagram& d) {
  std::vector<Curl> out;
  for (std::size_t x = 0; x < d.crossings.size(); ++x)
    for (int p = 0; p < 4; ++p)
      if (d.crossings[x][p] == d.crossings[x][next(p)]) out.push_back({x, p, p % 2 == 0 ? 1 : -1});
  return out;
}

std::vector<Move> enumerate_moves(const BalledDiagram& d) {
  std::vector<Move> out;
  auto mates = edge_mates(d);
  for (const auto& face : faces(d)) {
    const Dart start = face.front();
    std::vector<std::size_t> args{start.crossing, static_cast<std::size_t>(start.position)};
    if (face.size() == 2) {
      if (auto b = bigon_at(d, mates, start)) {
        Move m{b->alternating ? MoveKind::TwistBallSlide : MoveKind::R2Delete, args};
        if (apply_move(d, m)) out.push_back(m);
      }
    } else if (face.size() == 3) {
      Move m{MoveKind::R3, args};
      if (apply_move(d, m)) out.push_back(m);
    }
  }
  auto all = curl_ends(d);
  for (const auto& u : all)
    for (const auto& v : all) {
      if (u.curl.crossing == v.curl.crossing) continue;
      Move cancel{MoveKind::CurlCancel, {u.curl.crossing, v.curl.crossing}};
      if (u.curl.crossing < v.curl.crossing && apply_move(d, cancel)) out.push_back(cancel);
      Move transfer{MoveKind::CurlTransfer, {u.curl.crossing, v.curl.crossing}};
      if (apply_move(d, transfer)) out.push_back(transfer);
    }
  return out;
}

std::optional<BalledDiagram> apply_move(const BalledDiagram& d, const Move& m) {
  switch (m.kind) {
    case MoveKind::R2Delete:
    case MoveKind::TwistBallSlide: return apply_bigon_move(d, m);
    case MoveKind::R3: return apply_r3(d, m);
    case MoveKind::CurlCancel:
    case MoveKind::CurlTransfer: return apply_curl_move(d, m);
  }
  return std::nullopt;
}

BalledDiagram insert_curl(const BalledDiagram& d, EdgeLabel label, int sign, int side) {
  BalledDiagram out = d;
  const EdgeLabel top = max_label(d);
  const EdgeLabel loop = top + 1, fresh = top + 2;
  EdgeLabel a = label, b = fresh;
  if (label == 0) {
    if (d.loops == 0) throw std::invalid_argument("insert_curl: no crossing-free circle to put a curl on");
    --out.loops;
    a = fresh;
  } else {
    bool seen = false, replaced = false;
    for (auto& c : out.crossings)
      for (auto& l : c)
        if (l == label) {
          if (seen && !replaced) {
            l = fresh;
            replaced = true;
          }
          seen = true;
        }
    if (!replaced) throw std::invalid_argument("insert_curl: label " + std::to_string(label) + " not an edge");
  }
  if (side != 0) std::swap(a, b);
  if (sign > 0) out.crossings.push_back({a, b, loop, loop});
  else out.crossings.push_back({a, loop, loop, b});
  return out;
}

std::vector<BalledDiagram> insert_r2(const BalledDiagram& d, EdgeLabel over, EdgeLabel under) {
  std::vector<BalledDiagram> out;
  if (over == under) return out;
  const EdgeLabel top = max_label(d);
  const EdgeLabel mo = top + 1, no = top + 2, mu = top + 3, nu = top + 4;

  auto relabel_second = [](BalledDiagram& g, EdgeLabel label, EdgeLabel fresh) {
    bool seen = false;
    for (auto& c : g.crossings)
      for (auto& l : c)
        if (l == label) {
          if (seen) {
            l = fresh;
            return true;
          }
          seen = true;
        }
    return false;
  };

  BalledDiagram base = d;
  if (!relabel_second(base, over, no) || !relabel_second(base, under, nu)) return out;
  const std::size_t p = base.crossings.size(), q = p + 1;
  const CanonicalKey original = canonical_key(d);
  std::set<CanonicalKey> seen;

  for (int under_order = 0; under_order < 2; ++under_order) {
    // The under strand meets P then Q (order 0) or Q then P (order 1).
    std::array<EdgeLabel, 2> under_p = under_order == 0 ? std::array<EdgeLabel, 2>{under, mu}
                                                        : std::array<EdgeLabel, 2>{mu, nu};
    std::array<EdgeLabel, 2> under_q = under_order == 0 ? std::array<EdgeLabel, 2>{mu, nu}
                                                        : std::array<EdgeLabel, 2>{under, mu};
    for (int mask = 0; mask < 16; ++mask) {
      auto pick = [mask](std::array<EdgeLabel, 2> pair, int bit) {
        if (mask & (1 << bit)) std::swap(pair[0], pair[1]);
        return pair;
      };
      auto up = pick(under_p, 0), op = pick({over, mo}, 1), uq = pick(under_q, 2), oq = pick({mo, no}, 3);
      BalledDiagram g = base;
      g.crossings.push_back({up[0], op[0], up[1], op[1]});
      g.crossings.push_back({uq[0], oq[0], uq[1], oq[1]});
      if (!is_valid(g)) continue;
      bool deletes_back = false;
      for (const Move& m : enumerate_moves(g)) {
        if (m.kind != MoveKind::R2Delete) continue;
        std::size_t x = m.args[0];
        if (x != p && x != q) continue;
        auto back = apply_move(g, m);
        if (back && canonical_key(*back) == original) deletes_back = true;
      }
      if (deletes_back && seen.insert(canonical_key(g)).second) out.push_back(std::move(g));
    }
  }
  return out;
}

}  // namespace skeinhom
