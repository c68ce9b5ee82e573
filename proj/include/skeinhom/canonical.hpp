#pragma once

#include <compare>
#include <string>

#include "skeinhom/diagram.hpp"

namespace skeinhom {

/// Isomorphism class of a marked sphere diagram under edge relabeling,
/// crossing reordering and reversal of strand roles at a crossing.
struct CanonicalKey {
  std::string bytes;

  auto operator<=>(const CanonicalKey&) const = default;
  std::string hex() const;
};

/// Representative of the isomorphism class: crossings in traversal order,
/// edges numbered 1.. by first appearance. Isomorphic diagrams give equal forms.
BalledDiagram canonical_form(const BalledDiagram& d);

CanonicalKey canonical_key(const BalledDiagram& d);

struct Canonical {
  BalledDiagram form;
  CanonicalKey key;
};
Canonical canonicalize(const BalledDiagram& d);

/// Key up to the sphere flip as well; used where framed isotopy is the question.
CanonicalKey orbit_key(const BalledDiagram& d);

}  // namespace skeinhom
