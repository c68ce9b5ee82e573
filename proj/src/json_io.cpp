#include "skeinhom/json_io.hpp"

#include <limits>

namespace skeinhom {

namespace {

json integer(const mpz_class& z) {
  if (z.fits_slong_p()) return static_cast<long>(z.get_si());
  return z.get_str();
}

mpz_class integer_from(const json& j, const char* what) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
  if (j.is_number_unsigned()) return mpz_class(std::to_string(j.get<unsigned long long>()));
  if (j.is_string()) {
    mpz_class z;
    if (z.set_str(j.get<std::string>(), 10) == 0) return z;
  }
  throw InputError(what, std::string(what) + ": expected an integer, got " + j.dump());
}

const json& field(const json& j, const char* name, const char* validator) {
  if (!j.is_object() || !j.contains(name))
    throw InputError(validator, std::string(validator) + ": missing field \"" + name + "\"");
  return j.at(name);
}

}  // namespace

json to_json(const LaurentPoly& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms()) out.push_back({e, integer(c)});
  return out;
}

json to_json(const Cyclo6& z) { return {integer(z.a), integer(z.b)}; }

json to_json(const BalledDiagram& d) {
  json crossings = json::array();
  for (const auto& c : d.crossings) crossings.push_back({c[0], c[1], c[2], c[3]});
  json balls = json::array();
  for (std::size_t b : d.balls) balls.push_back(b + 1);
  return {{"crossings", crossings}, {"balls", balls}, {"loops", d.loops}};
}

json to_json(const Chain& c) {
  json terms = json::array();
  for (const auto& [key, t] : c.terms()) terms.push_back({{"coeff", to_json(t.coefficient)}, {"diagram", to_json(t.diagram)}});
  return {{"level", c.level()}, {"terms", terms}};
}

json to_json(const Move& m) { return {{"move", move_name(m.kind)}, {"at", m.args}}; }

json to_json(const Reduction& r, const std::vector<ReductionItem>& items) {
  json groups = json::array();
  for (const auto& g : r.log.groups) {
    json members = json::array();
    for (std::size_t i : g.members)
      members.push_back({{"origin", items[i].origin}, {"coeff", to_json(items[i].coefficient)}});
    groups.push_back({{"key", g.key.hex()},
                      {"diagram", to_json(items[g.members.front()].diagram)},
                      {"members", members},
                      {"sum", to_json(g.sum)}});
  }
  json merges = json::array();
  for (const auto& m : r.log.merges) {
    json a = json::array(), b = json::array();
    for (const auto& mv : m.moves_group) a.push_back(to_json(mv));
    for (const auto& mv : m.moves_representative) b.push_back(to_json(mv));
    merges.push_back({{"group", m.group}, {"representative", m.representative}, {"moves_group", a},
                      {"moves_representative", b}});
  }
  json out = {{"verdict", decision_name(r.verdict)}, {"reason", r.reason}, {"groups", groups}, {"merges", merges}};
  if (r.witness) {
    out["witness"] = {{"group", *r.witness}, {"coeff", to_json(r.witness_coefficient)}};
  }
  return out;
}

json to_json(const Certificate& cert) {
  json out = {{"chain", to_json(cert.chain)},
              {"boundary_is_zero", to_json(cert.boundary_is_zero, boundary_items(cert.chain))},
              {"epsilon_value", to_json(cert.epsilon_value)}};
  out["bracket_value"] = cert.bracket_value ? to_json(*cert.bracket_value) : json(nullptr);
  out["verdict"] = verdict_name(cert.verdict);
  return out;
}

LaurentPoly laurent_from_json(const json& j) {
  if (!j.is_array()) throw InputError("coeff", "coeff: expected a list of [exponent, coefficient] pairs");
  LaurentPoly p;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer())
      throw InputError("coeff", "coeff: bad term " + t.dump());
    p.add_term(t[0].get<std::int64_t>(), integer_from(t[1], "coeff"));
  }
  return p;
}

BalledDiagram diagram_from_json(const json& j) {
  BalledDiagram d;
  const json& cs = field(j, "crossings", "diagram");
  if (!cs.is_array()) throw InputError("diagram", "diagram: \"crossings\" must be a list");
  for (const auto& c : cs) {
    if (!c.is_array() || c.size() != 4)
      throw InputError("diagram", "diagram: crossing " + c.dump() + " is not a 4-tuple");
    Crossing x;
    for (int p = 0; p < 4; ++p) {
      if (!c[p].is_number_integer() || c[p].get<std::int64_t>() <= 0)
        throw InputError("diagram", "diagram: edge labels must be positive integers, got " + c[p].dump());
      x[p] = c[p].get<std::int64_t>();
    }
    d.crossings.push_back(x);
  }
  if (j.contains("balls")) {
    const json& bs = j.at("balls");
    if (!bs.is_array()) throw InputError("diagram", "diagram: \"balls\" must be a list");
    for (const auto& b : bs) {
      if (!b.is_number_integer() || b.get<std::int64_t>() < 1)
        throw InputError(DiagramError::kind_name(DiagramError::Kind::BadBallIndex),
                         "ball index " + b.dump() + " is not a positive integer");
      d.balls.push_back(static_cast<std::size_t>(b.get<std::int64_t>()) - 1);
    }
  }
  if (j.contains("loops")) {
    const json& l = j.at("loops");
    if (!l.is_number_integer() || l.get<std::int64_t>() < 0)
      throw InputError("diagram", "diagram: \"loops\" must be a non-negative integer");
    d.loops = static_cast<unsigned>(l.get<std::int64_t>());
  }
  try {
    validate(d);
  } catch (const DiagramError& e) {
    throw InputError(DiagramError::kind_name(e.kind()), e.what());
  }
  return d;
}

Chain chain_from_json(const json& j) {
  if (j.is_object() && j.contains("crossings") && !j.contains("terms")) {
    BalledDiagram d = diagram_from_json(j);
    return Chain::single(d);
  }
  const json& terms = field(j, "terms", "chain");
  if (!terms.is_array()) throw InputError("chain", "chain: \"terms\" must be a list");
  std::size_t level = 0;
  if (j.contains("level")) {
    if (!j.at("level").is_number_integer() || j.at("level").get<std::int64_t>() < 0)
      throw InputError("chain", "chain: \"level\" must be a non-negative integer");
    level = static_cast<std::size_t>(j.at("level").get<std::int64_t>());
  } else if (!terms.empty()) {
    level = diagram_from_json(field(terms[0], "diagram", "chain")).level();
  }
  Chain c(level);
  for (const auto& t : terms) {
    BalledDiagram d = diagram_from_json(field(t, "diagram", "chain"));
    LaurentPoly coeff = t.contains("coeff") ? laurent_from_json(t.at("coeff")) : LaurentPoly(1);
    if (d.level() != level)
      throw InputError(DiagramError::kind_name(DiagramError::Kind::LevelMismatch),
                       "term at level " + std::to_string(d.level()) + " in a level-" + std::to_string(level) + " chain");
    c.add(d, coeff);
  }
  return c;
}

json to_json(const SymmetryCheck& s) {
  json pairs = json::array();
  for (std::size_t k = 0; k < s.pairs.size(); ++k) {
    const auto& r = s.pairs[k];
    pairs.push_back({{"balls", {k + 1, k + 2}},
                     {"verdict", decision_name(r.verdict)},
                     {"reason", r.reason},
                     {"merges", r.log.merges.size()}});
  }
  return {{"verdict", symmetry_name(s.verdict)}, {"pairs", pairs}};
}

}  // namespace skeinhom
