#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skeinhom/diagram.hpp"

namespace skeinhom {

/// Framed moves on blackboard-framed diagrams. None of them deletes or
/// changes a balled crossing; a ball is only ever carried along with its crossing.
enum class MoveKind {
  R2Delete,       // bigon, one strand over at both ends, both crossings unballed
  R3,             // triangle with a strand over at both of its ends, at most one ball
  CurlCancel,     // adjacent unballed curls of opposite writhe
  CurlTransfer,   // unballed curl swaps past the adjacent curl along the strand
  TwistBallSlide  // ball moves across an alternating bigon to the unballed crossing
};

const char* move_name(MoveKind kind);
std::optional<MoveKind> move_from_name(const std::string& name);

/// A move is identified by its kind and where it acts, so that replaying it
/// on the same diagram reproduces the same result. Face moves (R2Delete, R3,
/// TwistBallSlide) store the face's first dart as {crossing, position}; curl
/// moves store the two curl crossings.
struct Move {
  MoveKind kind;
  std::vector<std::size_t> args;
  bool operator==(const Move&) const = default;
};

struct Curl {
  std::size_t crossing;
  int loop_position;  // loop edge sits at positions loop_position, loop_position+1
  int sign;           // bracket factor -A^(3*sign)
};

/// Crossings whose loop edge joins two adjacent positions.
std::vector<Curl> curls(const BalledDiagram& d);

/// Every applicable move, in a deterministic order.
std::vector<Move> enumerate_moves(const BalledDiagram& d);

/// Applies `m`; nullopt if it does not apply to `d`.
std::optional<BalledDiagram> apply_move(const BalledDiagram& d, const Move& m);

// -- insertions (framing-changing or crossing-adding; used to build diagrams) --

/// Adds a curl of the given writhe on the edge `label` (or on a crossing-free
/// circle when label == 0 and d.loops > 0). `side` picks which side of the strand.
BalledDiagram insert_curl(const BalledDiagram& d, EdgeLabel label, int sign, int side);

/// All R2 insertions pushing edge `over` across edge `under`; empty when the
/// two edges share no face.
std::vector<BalledDiagram> insert_r2(const BalledDiagram& d, EdgeLabel over, EdgeLabel under);

}  // namespace skeinhom
