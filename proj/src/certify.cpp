#include "skeinhom/certify.hpp"

#include <map>
#include <numeric>

#include "skeinhom/invariants.hpp"

namespace skeinhom {

const char* decision_name(Decision d) {
  switch (d) {
    case Decision::Yes: return "Yes";
    case Decision::No: return "No";
    case Decision::Unknown: return "Unknown";
  }
  return "?";
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::CycleNonBoundary: return "CycleNonBoundary";
    case Verdict::CycleOnly: return "CycleOnly";
    case Verdict::NotCycle: return "NotCycle";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

namespace {

std::vector<LiteralGroup> literal_groups(const std::vector<ReductionItem>& items) {
  std::map<CanonicalKey, LiteralGroup> by_key;
  for (std::size_t i = 0; i < items.size(); ++i) {
    auto& g = by_key[items[i].key];
    g.key = items[i].key;
    g.members.push_back(i);
    g.sum += items[i].coefficient;
  }
  std::vector<LiteralGroup> out;
  for (auto& [k, g] : by_key) out.push_back(std::move(g));
  return out;
}

const BalledDiagram& group_diagram(const std::vector<ReductionItem>& items, const LiteralGroup& g) {
  return items[g.members.front()].diagram;
}

struct Classes {
  std::vector<std::size_t> root;  // per group
  std::map<std::size_t, LaurentPoly> sums;
};

Classes class_sums(const std::vector<LiteralGroup>& groups, const std::vector<MergeRecord>& merges) {
  Classes c;
  c.root.resize(groups.size());
  std::iota(c.root.begin(), c.root.end(), 0);
  for (const auto& m : merges) c.root[m.group] = c.root[m.representative];
  for (std::size_t g = 0; g < groups.size(); ++g)
    if (!groups[g].sum.is_zero()) c.sums[c.root[g]] += groups[g].sum;
  return c;
}

bool all_zero(const Classes& c) {
  for (const auto& [r, s] : c.sums)
    if (!s.is_zero()) return false;
  return true;
}

}  // namespace

Reduction reduce_to_zero(const std::vector<ReductionItem>& items, const SearchOptions& options) {
  Reduction out;
  out.log.groups = literal_groups(items);
  const auto& groups = out.log.groups;

  std::vector<std::size_t> live;
  for (std::size_t g = 0; g < groups.size(); ++g)
    if (!groups[g].sum.is_zero()) live.push_back(g);

  std::vector<FramedInvariants> inv;
  std::vector<std::optional<Neighborhood>> hood;
  for (std::size_t g : live) inv.push_back(framed_invariants(group_diagram(items, groups[g]), options.max_crossings));
  hood.resize(live.size());
  auto neighborhood = [&](std::size_t k) -> const Neighborhood& {
    if (!hood[k]) hood[k].emplace(group_diagram(items, groups[live[k]]), options.budget, options.node_limit);
    return *hood[k];
  };

  // reps: indices into live; distinct[k] counts reps that k was proven distinct from
  std::vector<std::size_t> reps;
  std::map<std::pair<std::size_t, std::size_t>, std::string> separated;
  for (std::size_t k = 0; k < live.size(); ++k) {
    bool merged = false;
    const auto& dk = group_diagram(items, groups[live[k]]);
    for (std::size_t r : reps) {
      const auto& dr = group_diagram(items, groups[live[r]]);
      if (dk.level() != dr.level()) {
        separated[{r, k}] = "level";
        continue;
      }
      if (auto why = inv[k].separating(inv[r]); !why.empty()) {
        separated[{r, k}] = why;
        continue;
      }
      if (options.budget == 0) continue;
      if (auto paths = neighborhood(k).meet(neighborhood(r), options.budget)) {
        out.log.merges.push_back({live[k], live[r], std::move(paths->first), std::move(paths->second)});
        merged = true;
        break;
      }
    }
    if (!merged) reps.push_back(k);
  }

  Classes cls = class_sums(groups, out.log.merges);
  if (all_zero(cls)) {
    out.verdict = Decision::Yes;
    out.reason = std::to_string(groups.size()) + " literal group(s), " + std::to_string(out.log.merges.size()) +
                 " merge(s) by moves";
    return out;
  }
  for (std::size_t a = 0; a < reps.size(); ++a) {
    std::size_t g = live[reps[a]];
    const LaurentPoly& s = cls.sums[g];
    if (s.is_zero()) continue;
    std::string why;
    bool alone = true;
    for (std::size_t b = 0; b < reps.size() && alone; ++b) {
      if (a == b) continue;
      auto key = std::minmax(reps[a], reps[b]);
      auto it = separated.find({key.first, key.second});
      if (it == separated.end()) alone = false;
      else if (why.empty()) why = it->second;
    }
    if (alone) {
      out.verdict = Decision::No;
      out.witness = g;
      out.witness_coefficient = s;
      out.reason = reps.size() == 1 ? "single surviving class" : "surviving class separated by " + why;
      return out;
    }
  }
  out.verdict = Decision::Unknown;
  out.reason = "surviving terms could not be matched or separated within budget " + std::to_string(options.budget);
  return out;
}

Decision check_reduction(const std::vector<ReductionItem>& items, const Reduction& claimed,
                         const SearchOptions& options) {
  auto groups = literal_groups(items);
  const auto& log = claimed.log;
  if (groups.size() != log.groups.size()) return Decision::Unknown;
  for (std::size_t g = 0; g < groups.size(); ++g)
    if (groups[g].key != log.groups[g].key || groups[g].members != log.groups[g].members ||
        !(groups[g].sum == log.groups[g].sum))
      return Decision::Unknown;

  std::vector<bool> joined(groups.size(), false);
  for (const auto& m : log.merges) {
    if (m.group >= groups.size() || m.representative >= groups.size() || joined[m.group] ||
        joined[m.representative] || m.group == m.representative)
      return Decision::Unknown;
    auto a = replay_moves(group_diagram(items, groups[m.group]), m.moves_group);
    auto b = replay_moves(group_diagram(items, groups[m.representative]), m.moves_representative);
    if (!a || !b || a->circles_removed != b->circles_removed || orbit_key(a->diagram) != orbit_key(b->diagram))
      return Decision::Unknown;
    joined[m.group] = true;
  }
  Classes cls = class_sums(groups, log.merges);
  if (all_zero(cls)) return Decision::Yes;
  if (claimed.verdict != Decision::No || !claimed.witness || *claimed.witness >= groups.size())
    return Decision::Unknown;

  std::size_t w = *claimed.witness;
  if (cls.root[w] != w || cls.sums[w].is_zero()) return Decision::Unknown;
  const auto& dw = group_diagram(items, groups[w]);
  auto iw = framed_invariants(dw, options.max_crossings);
  for (const auto& [r, s] : cls.sums) {
    if (r == w) continue;
    const auto& dr = group_diagram(items, groups[r]);
    if (dr.level() != dw.level()) continue;
    if (iw.separating(framed_invariants(dr, options.max_crossings)).empty()) return Decision::Unknown;
  }
  return Decision::No;
}

std::vector<ReductionItem> boundary_items(const Chain& c) {
  std::vector<ReductionItem> items;
  for (auto& p : boundary_pieces(c)) {
    std::string origin = "term " + std::to_string(p.generator + 1) + ", ball " + std::to_string(p.ball) + ", " +
                         part_name(p.part);
    items.push_back({std::move(p.diagram), std::move(p.key), std::move(p.coefficient), std::move(origin)});
  }
  return items;
}

Reduction is_cycle(const Chain& c, const SearchOptions& options) {
  return reduce_to_zero(boundary_items(c), options);
}

namespace {

Verdict verdict_from(Decision cycle, const Cyclo6& eps) {
  switch (cycle) {
    case Decision::Yes: return eps.is_zero() ? Verdict::CycleOnly : Verdict::CycleNonBoundary;
    case Decision::No: return Verdict::NotCycle;
    case Decision::Unknown: return Verdict::Inconclusive;
  }
  return Verdict::Inconclusive;
}

}  // namespace

Certificate certify_nonboundary(const Chain& c, const SearchOptions& options) {
  Certificate cert{c, is_cycle(c, options), epsilon_chain(c), std::nullopt, Verdict::Inconclusive};
  try {
    cert.bracket_value = eval_chain(c, {options.max_crossings, 0});
  } catch (const CrossingLimitError&) {
  }
  cert.verdict = verdict_from(cert.boundary_is_zero.verdict, cert.epsilon_value);
  return cert;
}

Verdict replay(const Certificate& cert, const SearchOptions& options) {
  Decision d = check_reduction(boundary_items(cert.chain), cert.boundary_is_zero, options);
  return verdict_from(d, epsilon_chain(cert.chain));
}

}  // namespace skeinhom
