#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "skeinhom/certify.hpp"
#include "skeinhom/chain.hpp"
#include "skeinhom/families.hpp"

namespace skeinhom {

inline constexpr int kSchemaVersion = 1;

/// Malformed input; `validator` names the check that rejected it.
class InputError : public std::runtime_error {
 public:
  InputError(std::string validator, const std::string& what)
      : std::runtime_error(what), validator_(std::move(validator)) {}
  const std::string& validator() const noexcept { return validator_; }

 private:
  std::string validator_;
};

using json = nlohmann::ordered_json;

json to_json(const LaurentPoly& p);
json to_json(const Cyclo6& z);
json to_json(const BalledDiagram& d);
json to_json(const Chain& c);
json to_json(const Move& m);
json to_json(const Reduction& r, const std::vector<ReductionItem>& items);
json to_json(const Certificate& cert);
json to_json(const SymmetryCheck& s);

LaurentPoly laurent_from_json(const json& j);
BalledDiagram diagram_from_json(const json& j);
/// Accepts a chain object or a bare diagram (a one-term chain with coefficient 1).
Chain chain_from_json(const json& j);

}  // namespace skeinhom
