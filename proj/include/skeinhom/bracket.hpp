#pragma once

#include <cstddef>
#include <stdexcept>

#include "skeinhom/diagram.hpp"
#include "skeinhom/laurent.hpp"

namespace skeinhom {

inline constexpr std::size_t kDefaultMaxCrossings = 20;

class CrossingLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BracketOptions {
  std::size_t max_crossings = kDefaultMaxCrossings;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned workers = 0;
};

/// Kauffman bracket of the underlying framed link (balls are forgotten):
/// sum over all 2^c states of A^(#Zero - #Infinity) (-A^2 - A^-2)^(#circles).
/// The empty diagram evaluates to 1. Enumeration is iterative; per-worker
/// state counts are merged in a fixed order so the result does not depend on scheduling.
LaurentPoly bracket(const BalledDiagram& d, const BracketOptions& options = {});

}  // namespace skeinhom
