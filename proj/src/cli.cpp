#include "skeinhom/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "skeinhom/json_io.hpp"

namespace skeinhom::cli {

namespace {

struct Flags {
  std::string input;
  unsigned budget = kDefaultBudget;
  std::size_t max_crossings = kDefaultMaxCrossings;
  std::string format = "json";
  std::string out_path;
  std::string family;
  unsigned n = 1;
  std::string sign = "+";
};

SearchOptions search_options(const Flags& f) {
  SearchOptions o;
  o.budget = f.budget;
  o.max_crossings = f.max_crossings;
  return o;
}

Chain read_chain(const Flags& f, std::istream& in) {
  std::string text;
  if (f.input.empty() || f.input == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  } else {
    std::ifstream file(f.input);
    if (!file) throw InputError("input", "cannot open " + f.input);
    std::ostringstream ss;
    ss << file.rdbuf();
    text = ss.str();
  }
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("json", std::string("json: ") + e.what());
  }
  try {
    return chain_from_json(j);
  } catch (const DiagramError& e) {
    throw InputError(DiagramError::kind_name(e.kind()), e.what());
  }
}

void merge(json& dst, const json& src) {
  for (const auto& [k, v] : src.items()) dst[k] = v;
}

json report(const char* command) { return {{"schema_version", kSchemaVersion}, {"command", command}}; }

std::string chain_text(const Chain& c) {
  std::ostringstream s;
  s << "level " << c.level() << ", " << c.size() << " term(s)\n";
  for (const auto& [key, t] : c.terms()) s << "  (" << t.coefficient.to_string() << ") " << to_json(t.diagram).dump() << "\n";
  return s.str();
}

std::string reduction_text(const Reduction& r) {
  std::ostringstream s;
  s << "cycle: " << decision_name(r.verdict) << " (" << r.reason << ")\n";
  for (const auto& m : r.log.merges)
    s << "  group " << m.group << " ~ group " << m.representative << " by "
      << m.moves_group.size() + m.moves_representative.size() << " move(s)\n";
  if (r.witness) s << "  surviving group " << *r.witness << " with coefficient " << r.witness_coefficient.to_string() << "\n";
  return s.str();
}

struct Output {
  json j;
  std::string text;
  int status = kExitOk;
};

Output selftest(const Flags& f) {
  Output o;
  o.j = report("selftest");
  json checks = json::array();
  bool all = true;
  std::ostringstream text;
  auto check = [&](const std::string& name, const std::function<bool()>& fn) {
    bool pass = false;
    try {
      pass = fn();
    } catch (const std::exception&) {
      pass = false;
    }
    all = all && pass;
    checks.push_back({{"name", name}, {"pass", pass}});
    text << (pass ? "PASS " : "FAIL ") << name << "\n";
  };
  SearchOptions opts = search_options(f);

  check("kink: d_1 = kink + A^3 circle", [] {
    BalledDiagram kink{{{1, 1, 2, 2}}, {0}, 0};
    Chain expect(0);
    expect.add(unmark(kink, 1), 1);
    expect.add(unknot_circle(), LaurentPoly::monomial(3));
    return ball_operator(Chain::single(kink), 1) == expect && expect.size() == 2;
  });
  check("T: boundary is zero", [] {
    Chain t = example_T();
    return boundary(t).is_zero() && t.level() == 2;
  });
  check("T: d_1 = d_2", [] {
    Chain t = example_T();
    return ball_operator(t, 1) == ball_operator(t, 2);
  });
  check("T: epsilon = 1, certified non-boundary", [&] {
    Certificate c = certify_nonboundary(example_T(), opts);
    return c.verdict == Verdict::CycleNonBoundary && c.epsilon_value == Cyclo6::one();
  });
  for (int s : {1, -1}) {
    std::string name = std::string("framing cycle (") + (s > 0 ? "+" : "-") + "): cycle, epsilon = 2, non-boundary";
    check(name, [&, s] {
      Certificate c = certify_nonboundary(framing_cycle(s), opts);
      return c.verdict == Verdict::CycleNonBoundary && c.epsilon_value == Cyclo6(2, 0) &&
             replay(c, opts) == Verdict::CycleNonBoundary;
    });
  }
  check("epsilon(1 - A - A^-1) = 0", [] {
    LaurentPoly p = LaurentPoly(1) - LaurentPoly::A() - LaurentPoly::monomial(-1);
    return epsilon_chain(Chain::single(example_T().terms().begin()->second.diagram, p)).is_zero();
  });
  o.j["checks"] = checks;
  o.j["pass"] = all;
  o.text = text.str() + (all ? "all checks passed\n" : "some checks failed\n");
  o.status = all ? kExitOk : kExitBadInput;
  return o;
}

Output generate(const Flags& f) {
  int sign = 1;
  if (f.sign == "-" || f.sign == "-1") sign = -1;
  else if (f.sign != "+" && f.sign != "+1" && f.sign != "1")
    throw CLI::ValidationError("--sign", "expected + or -");
  Chain c(0);
  json family = {{"name", f.family}};
  if (f.family == "example-t") {
    c = example_T();
  } else if (f.family == "kinked-annulus") {
    c = kinked_annulus(f.n, sign);
    family["n"] = f.n;
    family["sign"] = sign;
  } else if (f.family == "torus-link") {
    c = torus_link_2_2n(f.n);
    family["n"] = f.n;
  } else {
    c = framing_cycle(sign);
    family["sign"] = sign;
  }
  Output o;
  o.j = report("gen");
  o.j["family"] = family;
  merge(o.j, to_json(c));
  o.text = chain_text(c);
  return o;
}

Output dispatch(const std::string& cmd, const Flags& f, std::istream& in) {
  if (cmd == "selftest") return selftest(f);
  if (cmd == "gen") return generate(f);
  Chain c = read_chain(f, in);
  SearchOptions opts = search_options(f);
  Output o;
  o.j = report(cmd.c_str());
  if (cmd == "bracket") {
    LaurentPoly v = eval_chain(c, {f.max_crossings, 0});
    o.j["value"] = to_json(v);
    o.text = v.to_string() + "\n";
  } else if (cmd == "boundary") {
    Chain b = boundary(c);
    merge(o.j, to_json(b));
    o.text = chain_text(b);
  } else if (cmd == "epsilon") {
    Cyclo6 e = epsilon_chain(c);
    o.j["epsilon"] = to_json(e);
    o.text = e.to_string() + "\n";
  } else if (cmd == "verify-cycle") {
    auto items = boundary_items(c);
    Reduction r = reduce_to_zero(items, opts);
    merge(o.j, to_json(r, items));
    o.text = reduction_text(r);
    if (r.verdict == Decision::Unknown) o.status = kExitUnknown;
  } else if (cmd == "certify") {
    Certificate cert = certify_nonboundary(c, opts);
    merge(o.j, to_json(cert));
    o.text = std::string("verdict: ") + verdict_name(cert.verdict) + "\nepsilon: " + cert.epsilon_value.to_string() +
             "\n" + (cert.bracket_value ? "bracket: " + cert.bracket_value->to_string() + "\n" : std::string()) +
             reduction_text(cert.boundary_is_zero);
    if (cert.verdict == Verdict::Inconclusive) o.status = kExitUnknown;
  }
  return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Flags f;
  if (const char* env = std::getenv("SKEINHOM_BUDGET")) {
    try {
      f.budget = static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      err << "error: SKEINHOM_BUDGET is not a non-negative integer\n";
      return kExitUsage;
    }
  }

  CLI::App app{"Kauffman bracket skein homology of link diagrams in S^3", "skeinhom"};
  app.require_subcommand(1);
  auto common = [&](CLI::App* sub, bool takes_input) {
    if (takes_input) sub->add_option("input", f.input, "chain or diagram JSON file (stdin if omitted)");
    sub->add_option("--budget", f.budget, "move budget for equivalence search")->capture_default_str();
    sub->add_option("--max-crossings", f.max_crossings, "state-sum crossing cap")->capture_default_str();
    sub->add_option("--format", f.format, "output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
    sub->add_option("--out", f.out_path, "write the report here instead of stdout");
  };
  std::vector<std::pair<std::string, std::string>> commands = {
      {"bracket", "evaluate the chain in the skein module of S^3"},
      {"boundary", "apply the boundary operator"},
      {"epsilon", "evaluate epsilon into Z[zeta_6] as [a, b]"},
      {"verify-cycle", "decide whether the chain is a cycle, with a proof log"},
      {"certify", "certify a cycle as a non-boundary"},
  };
  for (const auto& [name, help] : commands) common(app.add_subcommand(name, help), true);
  CLI::App* gen = app.add_subcommand("gen", "emit a family chain");
  common(gen, false);
  gen->add_option("family", f.family, "example-t, kinked-annulus, torus-link or framing-cycle")
      ->required()
      ->check(CLI::IsMember({"example-t", "kinked-annulus", "torus-link", "framing-cycle"}));
  gen->add_option("--n", f.n, "family parameter n")->check(CLI::PositiveNumber)->capture_default_str();
  gen->add_option("--sign", f.sign, "curl handedness, + or -")->capture_default_str();
  common(app.add_subcommand("selftest", "run the built-in example checks"), false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }
  std::string cmd = app.get_subcommands().front()->get_name();

  Output o;
  try {
    o = dispatch(cmd, f, in);
  } catch (const InputError& e) {
    err << "malformed input [" << e.validator() << "]: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const DiagramError& e) {
    err << "malformed input [" << DiagramError::kind_name(e.kind()) << "]: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const CrossingLimitError& e) {
    err << "error [max-crossings]: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  std::string body = f.format == "json" ? o.j.dump(2) + "\n" : o.text;
  if (f.out_path.empty()) {
    out << body;
  } else {
    std::ofstream file(f.out_path);
    if (!file) {
      err << "error: cannot write " << f.out_path << "\n";
      return kExitBadInput;
    }
    file << body;
  }
  return o.status;
}

}  // namespace skeinhom::cli
