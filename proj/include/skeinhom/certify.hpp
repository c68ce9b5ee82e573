#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "skeinhom/chain.hpp"
#include "skeinhom/equivalence.hpp"

namespace skeinhom {

/// One summand of a sum that is to be shown zero.
struct ReductionItem {
  BalledDiagram diagram;  // canonical form
  CanonicalKey key;
  LaurentPoly coefficient;
  std::string origin;  // free-form, for the log
};

/// Summands with one canonical key, added literally.
struct LiteralGroup {
  CanonicalKey key;
  std::vector<std::size_t> members;  // indices into the item list
  LaurentPoly sum;
};

/// Group `group` joins the class of `representative` via the two move paths.
struct MergeRecord {
  std::size_t group;
  std::size_t representative;
  std::vector<Move> moves_group;
  std::vector<Move> moves_representative;
};

struct ReductionLog {
  std::vector<LiteralGroup> groups;  // key order
  std::vector<MergeRecord> merges;
};

enum class Decision { Yes, No, Unknown };
const char* decision_name(Decision d);

struct Reduction {
  Decision verdict = Decision::Unknown;
  ReductionLog log;
  /// For No: the group whose class survives, and why it cannot cancel.
  std::optional<std::size_t> witness;
  LaurentPoly witness_coefficient;
  std::string reason;
};

/// Tries to show the items sum to zero: literal merging by key, then
/// equivalent_bounded between the surviving groups.
Reduction reduce_to_zero(const std::vector<ReductionItem>& items, const SearchOptions& options = {});

/// Re-checks a log against the items. Returns the decision it supports.
Decision check_reduction(const std::vector<ReductionItem>& items, const Reduction& claimed,
                         const SearchOptions& options = {});

std::vector<ReductionItem> boundary_items(const Chain& c);

Reduction is_cycle(const Chain& c, const SearchOptions& options = {});

enum class Verdict { CycleNonBoundary, CycleOnly, NotCycle, Inconclusive };
const char* verdict_name(Verdict v);

struct Certificate {
  Chain chain;
  Reduction boundary_is_zero;
  Cyclo6 epsilon_value;
  std::optional<LaurentPoly> bracket_value;  // absent above the crossing cap
  Verdict verdict = Verdict::Inconclusive;
};

Certificate certify_nonboundary(const Chain& c, const SearchOptions& options = {});

/// Recomputes the boundary, checks the stored log against it and returns
/// the verdict the log supports.
Verdict replay(const Certificate& cert, const SearchOptions& options = {});

}  // namespace skeinhom
