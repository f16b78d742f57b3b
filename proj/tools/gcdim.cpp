// gcdim: batch front-end over a workspace JSON file.

#include <algorithm>
#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "gcdim/gcdim_complex.hpp"
#include "gcdim/workspace.hpp"

using namespace gcdim;
using nlohmann::json;

namespace {

enum Exit { ok = 0, unknown = 1, input_error = 2, refuted = 3, inconclusive = 4 };

struct Options {
  std::string workspace;
  std::vector<std::string> names;
  std::optional<std::size_t> bound;
  std::optional<std::size_t> ext_bound;
  std::string output = "table";
};

struct Context {
  Workspace ws;
  std::size_t bound;
  std::size_t ext_bound;
};

std::optional<std::size_t> env_bound() {
  const char* v = std::getenv("GCDIM_DEFAULT_BOUND");
  if (!v || !*v) return std::nullopt;
  std::string s(v);
  if (s.find_first_not_of("0123456789") != std::string::npos || std::stoull(s) == 0) {
    throw InputError("GCDIM_DEFAULT_BOUND: expected a positive integer, got \"" + s + "\"");
  }
  return std::stoull(s);
}

Context open(const Options& o, std::size_t expected_names) {
  if (o.names.size() != expected_names) {
    throw InputError("expected " + std::to_string(expected_names) + " name(s), got " + std::to_string(o.names.size()));
  }
  Context c{load_workspace(o.workspace), 4, 0};
  auto env = env_bound();
  c.bound = o.bound.value_or(env.value_or(4));
  c.ext_bound = o.ext_bound.value_or(env.value_or(default_ext_bound(c.ws.algebra)));
  if (c.bound == 0 || c.ext_bound == 0) throw InputError("bounds must be positive");
  return c;
}

/// A module named in the workspace, as a module or as a candidate.
const Module& any_module(const Workspace& ws, const std::string& name) {
  if (ws.modules.count(name)) return ws.modules.at(name);
  return ws.candidate(name);
}

std::optional<BoundedComplex> as_complex(const Workspace& ws, const std::string& name) {
  if (ws.modules.count(name) || ws.candidates.count(name)) return std::nullopt;
  if (ws.complexes.count(name)) return ws.complexes.at(name);
  throw WorkspaceError("/modules/" + name, "no module or complex with this name");
}

json verification_json(const SemidualizingDatum& d) {
  const auto& v = d.verification;
  json fails = json::array();
  for (const auto& [side, i] : v.ext_failures) fails.push_back({{"side", to_string(side)}, {"degree", i}});
  auto gl = [](const std::optional<std::size_t>& g) { return g ? json(*g) : json(nullptr); };
  return {{"status", to_string(v.status)},
          {"homothety_left_bijective", v.homothety_left_bijective},
          {"homothety_right_bijective", v.homothety_right_bijective},
          {"ext_r_vanishing_checked_to", v.ext_r_vanishing_checked_to},
          {"ext_s_vanishing_checked_to", v.ext_s_vanishing_checked_to},
          {"ext_failures", fails},
          {"end_dim", d.s_op->dim()},
          {"r_gldim", gl(d.r_gldim)},
          {"s_op_gldim", gl(d.s_op_gldim)}};
}

/// The datum for a candidate; refuted candidates stop the command.
SemidualizingDatum datum(const Context& c, const std::string& name, json& report) {
  SemidualizingDatum d = make_semidualizing(c.ws.candidate(name), c.ext_bound);
  report["candidate"] = name;
  report["candidate_status"] = to_string(d.verification.status);
  return d;
}

Exit status_exit(Status s) {
  switch (s) {
    case Status::verified_exact: return ok;
    case Status::verified_to_bound: return inconclusive;
    case Status::refuted: return refuted;
  }
  return unknown;
}

std::string cell(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void print(const json& report, const std::string& mode) {
  if (mode == "json") {
    std::cout << report.dump(2) << "\n";
    return;
  }
  std::size_t width = 0;
  for (const auto& [k, v] : report.items()) width = std::max(width, k.size());
  for (const auto& [k, v] : report.items()) {
    std::cout << k << std::string(width - k.size() + 2, ' ') << cell(v) << "\n";
  }
}

json ext_table(const std::vector<std::size_t>& dims) {
  json t = json::array();
  for (std::size_t i = 0; i < dims.size(); ++i) t.push_back({{"i", i}, {"dim", dims[i]}});
  return t;
}

Exit check_semidualizing(const Options& o, json& r) {
  Context c = open(o, 1);
  SemidualizingDatum d = make_semidualizing(c.ws.candidate(o.names[0]), c.ext_bound);
  r["candidate"] = o.names[0];
  r.update(verification_json(d));
  return status_exit(d.verification.status);
}

Exit gcdim_cmd(const Options& o, json& r) {
  Context c = open(o, 2);
  SemidualizingDatum d = datum(c, o.names[1], r);
  if (d.verification.status == Status::refuted) return refuted;
  r["bound"] = c.bound;
  r["ext_bound"] = c.ext_bound;
  r["object"] = o.names[0];
  if (auto k = as_complex(c.ws, o.names[0])) {
    GcDimComplexResult g = gc_dim_complex(*k, d, c.bound);
    r["kind"] = "complex";
    r["member"] = g.member;
    if (g.degenerate) {
      r["value"] = "-inf";
      return unknown;
    }
    r["inf"] = *g.i_inf;
    r["trunk_dim"] = g.trunk->dim();
    if (!g.member) {
      r["value"] = "not finite within bound";
      return inconclusive;
    }
    r["value"] = *g.value;
    r["route_sup_rhom"] = *g.s_rhom;
    r["route_trunk"] = static_cast<int>(*g.trunk_value) - *g.i_inf;
    r["trunk_gc_dim"] = *g.trunk_value;
    r["exact"] = g.exact;
    return g.exact ? ok : inconclusive;
  }
  const Module& m = any_module(c.ws, o.names[0]);
  GcDimResult g = gc_dim_module(m, d, c.bound);
  r["kind"] = "module";
  r["ext_profile"] = ext_table(ext_profile(m, d.c, c.bound));
  if (!g.finite) {
    r["value"] = "not finite within bound";
    return inconclusive;
  }
  r["value"] = g.value;
  r["witness_syzygy"] = g.value;
  r["exact"] = g.exact;
  return g.exact ? ok : inconclusive;
}

Exit ext_cmd(const Options& o, json& r) {
  Context c = open(o, 2);
  const Module& m = any_module(c.ws, o.names[0]);
  const Module& n = any_module(c.ws, o.names[1]);
  r["source"] = o.names[0];
  r["target"] = o.names[1];
  r["ext"] = ext_table(ext_profile(m, n, c.ext_bound));
  return ok;
}

Exit hom_cmd(const Options& o, json& r) {
  Context c = open(o, 2);
  r["source"] = o.names[0];
  r["target"] = o.names[1];
  r["hom_dim"] = hom_dim(any_module(c.ws, o.names[0]), any_module(c.ws, o.names[1]));
  return ok;
}

Exit reflexive_cmd(const Options& o, json& r) {
  Context c = open(o, 2);
  SemidualizingDatum d = datum(c, o.names[1], r);
  if (d.verification.status == Status::refuted) return refuted;
  ReflexivityReport rep = is_reflexive(any_module(c.ws, o.names[0]), d, c.ext_bound);
  r["module"] = o.names[0];
  r["verdict"] = to_string(rep.verdict);
  r["ext_bound"] = rep.bound;
  r["ext_module_c"] = rep.ext_m;
  r["ext_dual_c"] = rep.ext_dual;
  r["biduality_bijective"] = rep.biduality_bijective ? json(*rep.biduality_bijective) : json(nullptr);
  auto vanish = [](const std::vector<std::size_t>& v) {
    return std::all_of(v.begin(), v.end(), [](std::size_t x) { return x == 0; });
  };
  r["conditions"] = {{"ext_module_c_vanishes", vanish(rep.ext_m)},
                     {"ext_dual_c_vanishes", vanish(rep.ext_dual)},
                     {"biduality_bijective", rep.biduality_bijective.value_or(false)}};
  if (!rep.reason.empty()) r["reason"] = rep.reason;
  switch (rep.verdict) {
    case Reflexivity::yes: return ok;
    case Reflexivity::yes_to_bound: return inconclusive;
    case Reflexivity::no: return refuted;
  }
  return unknown;
}

Exit trunk_cmd(const Options& o, json& r) {
  Context c = open(o, 1);
  Trunk t = trunk(c.ws.complex(o.names[0]));
  r["complex"] = o.names[0];
  r["inf"] = t.i;
  r["b"] = t.b;
  r["truncation_shift"] = t.truncation_shift;
  r["omega_shift"] = t.omega_shift;
  r["dim"] = t.t.dim();
  json iso = json::array();
  for (const auto& [name, m] : c.ws.modules) {
    if (find_isomorphism(t.t, m)) iso.push_back(name);
  }
  r["isomorphic_to"] = iso;
  r["module"] = to_json(t.t);
  return ok;
}

Exit dualize_cmd(const Options& o, json& r) {
  Context c = open(o, 2);
  SemidualizingDatum d = datum(c, o.names[1], r);
  if (d.verification.status == Status::refuted) return refuted;
  r["object"] = o.names[0];
  r["over"] = "End_R(C)";
  r["end_dim"] = d.s_op->dim();
  if (auto k = as_complex(c.ws, o.names[0])) {
    GcDimComplexResult g = gc_dim_complex(*k, d, c.bound);
    if (!g.member) {
      r["member"] = false;
      return inconclusive;
    }
    r["complex"] = to_json(dual_complex(*k, d, c.bound));
    return ok;
  }
  Module m = dualize(any_module(c.ws, o.names[0]), d);
  r["dim"] = m.dim();
  r["module"] = to_json(m);
  return ok;
}

Exit approx_cmd(const Options& o, json& r) {
  Context c = open(o, 2);
  SemidualizingDatum d = datum(c, o.names[1], r);
  if (d.verification.status == Status::refuted) return refuted;
  r["object"] = o.names[0];
  auto k = as_complex(c.ws, o.names[0]);
  BoundedComplex m = k ? *k : BoundedComplex::concentrated(any_module(c.ws, o.names[0]), 0);
  if (!gc_dim_complex(m, d, c.bound).member) {
    r["member"] = false;
    return inconclusive;
  }
  Approximation a = approximate(m, d, c.bound);
  r["x_degree"] = a.x_degree;
  r["x_dim"] = a.x_module.dim();
  r["x_reflexive"] = to_string(is_reflexive(a.x_module, d, c.ext_bound).verdict);
  json copies = json::object();
  for (const auto& [n, g] : a.copies) copies[std::to_string(n)] = g;
  r["copies_of_c"] = copies;
  r["cone_matches_middle"] = is_quasi_isomorphism(a.cone_to_middle);
  r["f"] = to_json(a.f);
  r["x"] = to_json(a.x_module);
  r["middle"] = to_json(a.middle);
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"G_C-dimension and semidualizing checks over finite-dimensional algebras"};
  app.require_subcommand(1);
  Options o;
  using Handler = Exit (*)(const Options&, json&);
  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto add = [&](const char* name, const char* help, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("workspace", o.workspace, "workspace JSON file")->required();
    sub->add_option("names", o.names, "module, complex and candidate names");
    sub->add_option("--bound", o.bound, "syzygy bound (default 4, or GCDIM_DEFAULT_BOUND)");
    sub->add_option("--ext-bound", o.ext_bound, "Ext bound (default max(4, global dimension))");
    sub->add_option("--output", o.output, "json or table")->check(CLI::IsMember({"json", "table"}));
    commands.emplace_back(sub, h);
  };
  add("check-semidualizing", "verify a semidualizing candidate: <workspace> <candidate>", check_semidualizing);
  add("gcdim", "G_C-dimension: <workspace> <module|complex> <candidate>", gcdim_cmd);
  add("ext", "Ext dimensions: <workspace> <module> <module>", ext_cmd);
  add("hom", "Hom dimension: <workspace> <module> <module>", hom_cmd);
  add("reflexive", "C-reflexivity: <workspace> <module> <candidate>", reflexive_cmd);
  add("trunk", "trunk module: <workspace> <complex>", trunk_cmd);
  add("dualize", "Hom(-, C): <workspace> <module|complex> <candidate>", dualize_cmd);
  add("approx", "approximation triangle: <workspace> <module|complex> <candidate>", approx_cmd);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? ok : input_error;
  }
  for (const auto& [sub, handler] : commands) {
    if (!sub->parsed()) continue;
    json report = {{"command", sub->get_name()}};
    try {
      Exit code = handler(o, report);
      report["exit_code"] = static_cast<int>(code);
      print(report, o.output);
      return code;
    } catch (const WorkspaceError& e) {
      std::cerr << "input error at " << e.what() << "\n";
      return input_error;
    } catch (const InputError& e) {
      std::cerr << "input error: " << e.what() << "\n";
      return input_error;
    } catch (const PreconditionError& e) {
      std::cerr << "cannot compute: " << e.what() << "\n";
      return unknown;
    } catch (const InternalError& e) {
      std::cerr << "internal error: " << e.what() << "\n";
      return unknown;
    }
  }
  return input_error;
}
