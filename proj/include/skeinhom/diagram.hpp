#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace skeinhom {

using EdgeLabel = std::int64_t;

/// Edge labels counterclockwise around a crossing, starting at the incoming
/// under-strand end. Positions 0,2 carry the under-strand, 1,3 the over-strand.
using Crossing = std::array<EdgeLabel, 4>;

/// Planar diagram of a blackboard-framed link in S^3 with ordered crossing balls.
///
/// `balls[k]` is the (0-based) crossing index carrying ball number k+1.
/// `loops` counts crossing-free circles disjoint from everything else.
struct BalledDiagram {
  std::vector<Crossing> crossings;
  std::vector<std::size_t> balls;
  unsigned loops = 0;

  std::size_t level() const noexcept { return balls.size(); }
  bool operator==(const BalledDiagram&) const = default;
};

class DiagramError : public std::runtime_error {
 public:
  enum class Kind { EdgeLabelCount, NonPlanar, BadBallIndex, LevelMismatch };

  DiagramError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

  static const char* kind_name(Kind kind);

 private:
  Kind kind_;
};

/// Returns `d` iff every label occurs exactly twice, the map embeds in S^2
/// and the ball list is in range and duplicate-free; throws DiagramError otherwise.
const BalledDiagram& validate(const BalledDiagram& d);
bool is_valid(const BalledDiagram& d) noexcept;

enum class Smoothing { Zero, Infinity };

/// Resolves the crossing under ball `ball` (1-based). Zero joins positions
/// 0-1 and 2-3, Infinity joins 0-3 and 1-2. Closed crossing-free circles go to `loops`.
BalledDiagram smooth(const BalledDiagram& d, std::size_t ball, Smoothing kind);

/// Forgets ball `ball` (1-based); the crossing stays.
BalledDiagram unmark(const BalledDiagram& d, std::size_t ball);

struct Stripped {
  BalledDiagram diagram;
  unsigned removed = 0;
};

/// Drops crossing-free circles. A diagram made only of circles keeps one of
/// them (the unknot generator), so its `removed` is loops - 1.
Stripped strip_trivial(const BalledDiagram& d);

/// The unknot generator: no crossings, one circle.
BalledDiagram unknot_circle();
bool is_unknot_circle(const BalledDiagram& d) noexcept;

// -- structure ---------------------------------------------------------------

struct Dart {
  std::size_t crossing;
  int position;
  bool operator==(const Dart&) const = default;
};

/// For each crossing and position, the other end of that edge.
std::vector<std::array<Dart, 4>> edge_mates(const BalledDiagram& d);

/// Ball number (1-based) per crossing, 0 when unballed.
std::vector<std::size_t> ball_numbers(const BalledDiagram& d);

struct LinkComponent {
  /// Entering darts in traversal order.
  std::vector<Dart> visits;
};

/// Components with at least one crossing; crossing-free circles are `d.loops`.
std::vector<LinkComponent> link_components(const BalledDiagram& d);
std::size_t component_count(const BalledDiagram& d);

/// +1 or -1 given the entering positions of the under and over strands.
int crossing_sign(int under_in, int over_in) noexcept;

/// Faces as cycles of darts (the dart a face leaves a crossing through).
std::vector<std::vector<Dart>> faces(const BalledDiagram& d);

/// Rotates S^3 by pi about an axis in the projection plane: mirror the plane
/// and exchange over/under. Preserves the framed isotopy class and the balls.
BalledDiagram flip(const BalledDiagram& d);

/// Exchanges over/under at crossing `index`.
BalledDiagram switch_crossing(const BalledDiagram& d, std::size_t index);

/// Split union; balls of `b` are numbered after those of `a`.
BalledDiagram disjoint_union(const BalledDiagram& a, const BalledDiagram& b);

EdgeLabel max_label(const BalledDiagram& d) noexcept;

/// Deletes `removed` crossings (indices into d.crossings) and then joins the
/// listed label pairs in order. A pair that meets itself closes a circle.
/// Ball indices are remapped; balls on removed crossings are dropped.
BalledDiagram remove_and_join(const BalledDiagram& d, std::vector<std::size_t> removed,
                              std::vector<std::pair<EdgeLabel, EdgeLabel>> joins);

}  // namespace skeinhom
