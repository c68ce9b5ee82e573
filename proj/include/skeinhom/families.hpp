#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "skeinhom/certify.hpp"
#include "skeinhom/chain.hpp"

namespace skeinhom {

/// Closure of a braid word on `strands` strands; letter +i / -i is sigma_i^(+-1), 1-based.
BalledDiagram closed_braid(unsigned strands, const std::vector<int>& word);

/// Hopf diagram with both crossings balled.
Chain example_T();

/// One circle carrying 2n curls of writhe `sign`, every curl balled in order along the strand.
Chain kinked_annulus(unsigned n, int sign = 1);

/// Closed 2-braid sigma_1^(2n), all crossings balled in order.
Chain torus_link_2_2n(unsigned n);

/// Level-1 cycle detecting framing: balled curl minus A^(3 sign) times the
/// same circle with an extra balled curl of opposite writhe.
Chain framing_cycle(int sign = 1);

class SymmetryError : public std::invalid_argument {
 public:
  enum class Kind { OddLevel, MultiTerm };
  SymmetryError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

enum class Symmetry { Verified, Failed, Unknown };
const char* symmetry_name(Symmetry s);

struct SymmetryCheck {
  Symmetry verdict = Symmetry::Unknown;
  /// pairs[k] compares d_{k+1} with d_{k+2}
  std::vector<Reduction> pairs;
};

/// Checks d_i(c) = d_{i+1}(c) for i = 1..2n-1.
SymmetryCheck verify_cyclic_symmetry(const Chain& c, const SearchOptions& options = {});

}  // namespace skeinhom
