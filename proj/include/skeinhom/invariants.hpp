#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skeinhom/bracket.hpp"
#include "skeinhom/diagram.hpp"
#include "skeinhom/laurent.hpp"

namespace skeinhom {

/// Per-component data preserved by any ball-preserving framed isotopy.
struct ComponentSignature {
  int self_writhe = 0;
  /// Ball numbers met along the component, least rotation/reversal.
  std::vector<std::size_t> ball_word;
  auto operator<=>(const ComponentSignature&) const = default;
};

struct FramedInvariants {
  std::size_t components = 0;
  std::vector<ComponentSignature> signatures;  // sorted; crossing-free circles included
  std::optional<LaurentPoly> bracket;          // absent above the state-sum cap

  /// Name of the first invariant that differs, or empty when none does.
  std::string separating(const FramedInvariants& other) const;
};

FramedInvariants framed_invariants(const BalledDiagram& d, std::size_t max_crossings = kDefaultMaxCrossings);

/// Least rotation of `word` or of its reverse.
std::vector<std::size_t> least_cyclic_form(std::vector<std::size_t> word);

/// Sum of crossing signs over crossings where a component meets itself.
std::vector<int> self_writhes(const BalledDiagram& d);

}  // namespace skeinhom
