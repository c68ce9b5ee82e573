#include "skeinhom/equivalence.hpp"

#include <deque>

#include "skeinhom/invariants.hpp"

namespace skeinhom {

const char* equivalence_name(Equivalence e) {
  switch (e) {
    case Equivalence::Equal: return "Equal";
    case Equivalence::Distinct: return "Distinct";
    case Equivalence::Unknown: return "Unknown";
  }
  return "?";
}

Neighborhood::Neighborhood(const BalledDiagram& start, unsigned depth, std::size_t node_limit) {
  std::vector<BalledDiagram> diagrams{start};
  std::vector<unsigned> removed{0};
  nodes_.push_back({});
  index_.emplace(std::make_pair(orbit_key(start), 0u), 0);
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t at = queue.front();
    queue.pop_front();
    if (nodes_[at].depth >= depth) continue;
    for (const Move& m : enumerate_moves(diagrams[at])) {
      auto next = apply_move(diagrams[at], m);
      if (!next) continue;
      Stripped s = strip_trivial(*next);
      unsigned r = removed[at] + s.removed;
      auto key = std::make_pair(orbit_key(s.diagram), r);
      if (index_.count(key)) continue;
      if (nodes_.size() >= node_limit) {
        truncated_ = true;
        return;
      }
      index_.emplace(std::move(key), nodes_.size());
      nodes_.push_back({nodes_[at].depth + 1, static_cast<std::ptrdiff_t>(at), m});
      diagrams.push_back(std::move(s.diagram));
      removed.push_back(r);
      queue.push_back(nodes_.size() - 1);
    }
  }
}

std::vector<Move> Neighborhood::path_to(std::size_t at) const {
  std::vector<Move> moves;
  for (auto i = static_cast<std::ptrdiff_t>(at); nodes_[i].parent >= 0; i = nodes_[i].parent)
    moves.push_back(nodes_[i].via);
  return {moves.rbegin(), moves.rend()};
}

std::optional<std::pair<std::vector<Move>, std::vector<Move>>> Neighborhood::meet(const Neighborhood& other,
                                                                                  unsigned budget) const {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  unsigned best_cost = budget + 1;
  for (const auto& [key, ia] : index_) {
    auto it = other.index_.find(key);
    if (it == other.index_.end()) continue;
    unsigned cost = nodes_[ia].depth + other.nodes_[it->second].depth;
    if (cost < best_cost) {
      best_cost = cost;
      best = {ia, it->second};
    }
  }
  if (!best) return std::nullopt;
  return std::make_pair(path_to(best->first), other.path_to(best->second));
}

std::optional<Replayed> replay_moves(const BalledDiagram& d, const std::vector<Move>& moves) {
  Replayed r{d, 0};
  for (const Move& m : moves) {
    auto next = apply_move(r.diagram, m);
    if (!next) return std::nullopt;
    Stripped s = strip_trivial(*next);
    r.diagram = std::move(s.diagram);
    r.circles_removed += s.removed;
  }
  return r;
}

EquivalenceResult equivalent_bounded(const BalledDiagram& d1, const BalledDiagram& d2, const SearchOptions& options) {
  validate(d1);
  validate(d2);
  if (d1.level() != d2.level())
    throw DiagramError(DiagramError::Kind::LevelMismatch, "cannot compare diagrams at levels " +
                                                              std::to_string(d1.level()) + " and " +
                                                              std::to_string(d2.level()));
  EquivalenceResult result;
  if (orbit_key(d1) == orbit_key(d2)) {
    result.verdict = Equivalence::Equal;
    result.reason = "canonical keys match";
    return result;
  }
  auto i1 = framed_invariants(d1, options.max_crossings);
  auto i2 = framed_invariants(d2, options.max_crossings);
  if (auto why = i1.separating(i2); !why.empty()) {
    result.verdict = Equivalence::Distinct;
    result.reason = why + " differs";
    return result;
  }
  if (options.budget == 0) {
    result.reason = "keys differ and no invariant separates them";
    return result;
  }
  Neighborhood a(d1, options.budget, options.node_limit);
  Neighborhood b(d2, options.budget, options.node_limit);
  if (auto paths = a.meet(b, options.budget)) {
    result.verdict = Equivalence::Equal;
    result.moves_first = std::move(paths->first);
    result.moves_second = std::move(paths->second);
    result.reason = std::to_string(result.moves_first.size() + result.moves_second.size()) + " framed move(s)";
    return result;
  }
  result.reason = (a.truncated() || b.truncated()) ? "search truncated at node limit"
                                                   : "no connecting moves within budget";
  return result;
}

}  // namespace skeinhom
