#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skeinhom/bracket.hpp"
#include "skeinhom/canonical.hpp"
#include "skeinhom/diagram.hpp"
#include "skeinhom/moves.hpp"

namespace skeinhom {

inline constexpr unsigned kDefaultBudget = 6;

enum class Equivalence { Equal, Distinct, Unknown };
const char* equivalence_name(Equivalence e);

struct SearchOptions {
  unsigned budget = kDefaultBudget;
  std::size_t max_crossings = kDefaultMaxCrossings;  // for the bracket invariant
  std::size_t node_limit = 20000;                    // per search side
};

/// Outcome of comparing two marked diagrams. For Equal, applying `moves_first`
/// to the first diagram and `moves_second` to the second reaches diagrams with
/// the same orbit key.
struct EquivalenceResult {
  Equivalence verdict = Equivalence::Unknown;
  std::vector<Move> moves_first;
  std::vector<Move> moves_second;
  std::string reason;
};

/// Bounded search for a framed, ball-preserving isotopy between d1 and d2.
/// Distinct only when a computable invariant separates them. Throws
/// DiagramError(LevelMismatch) when the ball counts differ.
EquivalenceResult equivalent_bounded(const BalledDiagram& d1, const BalledDiagram& d2, const SearchOptions& options = {});

/// Diagrams reachable from a start diagram by non-increasing framed moves,
/// up to orbit key and the number of circles split off.
class Neighborhood {
 public:
  Neighborhood(const BalledDiagram& start, unsigned depth, std::size_t node_limit);

  /// Cheapest pair of paths (total length <= budget) to a common diagram.
  std::optional<std::pair<std::vector<Move>, std::vector<Move>>> meet(const Neighborhood& other,
                                                                     unsigned budget) const;
  bool truncated() const noexcept { return truncated_; }
  std::size_t size() const noexcept { return nodes_.size(); }

 private:
  struct Node {
    unsigned depth = 0;
    std::ptrdiff_t parent = -1;
    Move via{MoveKind::R3, {}};
  };
  std::vector<Move> path_to(std::size_t at) const;

  std::vector<Node> nodes_;
  std::map<std::pair<CanonicalKey, unsigned>, std::size_t> index_;
  bool truncated_ = false;
};

/// Applies a move sequence, normalizing away crossing-free circles produced
/// on the way. Returns nullopt when some move does not apply.
struct Replayed {
  BalledDiagram diagram;
  unsigned circles_removed = 0;
};
std::optional<Replayed> replay_moves(const BalledDiagram& d, const std::vector<Move>& moves);

}  // namespace skeinhom
