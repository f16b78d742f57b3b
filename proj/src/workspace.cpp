#include "gcdim/workspace.hpp"

#include <fstream>
#include <set>

namespace gcdim {

using nlohmann::json;

const Module& Workspace::module(const std::string& name) const {
  auto it = modules.find(name);
  if (it == modules.end()) throw WorkspaceError("/modules/" + name, "no such module");
  return it->second;
}

const BoundedComplex& Workspace::complex(const std::string& name) const {
  auto it = complexes.find(name);
  if (it == complexes.end()) throw WorkspaceError("/complexes/" + name, "no such complex");
  return it->second;
}

const Module& Workspace::candidate(const std::string& name) const {
  auto it = candidates.find(name);
  if (it != candidates.end()) return module(it->second);
  if (modules.count(name)) return modules.at(name);
  throw WorkspaceError("/candidates/" + name, "no such candidate or module");
}

namespace {

std::string at(const std::string& where, const std::string& key) { return where + "/" + key; }
std::string at(const std::string& where, std::size_t i) { return where + "/" + std::to_string(i); }

const json& member(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) throw WorkspaceError(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw WorkspaceError(where, "missing field \"" + key + "\"");
  return *it;
}

std::size_t size_value(const json& j, const std::string& where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    throw WorkspaceError(where, "expected a non-negative integer");
  }
  return j.get<std::size_t>();
}

int int_key(const std::string& key, const std::string& where) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(key, &pos);
    if (pos == key.size()) return v;
  } catch (const std::exception&) {
  }
  throw WorkspaceError(where, "degree keys must be integers, got \"" + key + "\"");
}

Scalar scalar_from_json(const json& j, const Field& f, const std::string& where) {
  try {
    if (j.is_string()) return f.parse(j.get<std::string>());
    if (j.is_number_integer()) return f.from_int(j.get<long long>());
  } catch (const InputError& e) {
    throw WorkspaceError(where, e.what());
  }
  throw WorkspaceError(where, "scalars are strings \"p/q\" or integers");
}

Vector vector_from_json(const json& j, const Field& f, std::size_t n, const std::string& where) {
  if (!j.is_array() || j.size() != n) throw WorkspaceError(where, "expected an array of " + std::to_string(n) + " scalars");
  Vector v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(scalar_from_json(j[i], f, at(where, i)));
  return v;
}

/// Wraps library input errors raised while building an object at `where`.
template <class F>
auto located(const std::string& where, F&& build) {
  try {
    return build();
  } catch (const WorkspaceError&) {
    throw;
  } catch (const InputError& e) {
    throw WorkspaceError(where, e.what());
  }
}

AlgebraSpec::Kind algebra_kind(const json& j, const std::string& where) {
  const json& t = member(j, "type", where);
  if (t == "path_algebra") return AlgebraSpec::Kind::path_algebra;
  if (t == "structure_constants") return AlgebraSpec::Kind::structure_constants;
  throw WorkspaceError(at(where, "type"), "algebra type must be path_algebra or structure_constants");
}

void parse_algebra(const json& j, Workspace& ws) {
  const std::string where = "/algebra";
  const Field& f = ws.field;
  ws.spec.kind = algebra_kind(j, where);
  if (ws.spec.kind == AlgebraSpec::Kind::path_algebra) {
    Quiver& q = ws.spec.quiver;
    q.vertices = size_value(member(j, "vertices", where), at(where, "vertices"));
    std::map<std::string, std::size_t> by_name;
    if (j.contains("arrows")) {
      const json& arrows = j.at("arrows");
      if (!arrows.is_array()) throw WorkspaceError(at(where, "arrows"), "expected an array");
      for (std::size_t k = 0; k < arrows.size(); ++k) {
        const std::string w = at(at(where, "arrows"), k);
        Arrow a;
        a.source = size_value(member(arrows[k], "source", w), at(w, "source"));
        a.target = size_value(member(arrows[k], "target", w), at(w, "target"));
        const json& name = member(arrows[k], "name", w);
        if (!name.is_string()) throw WorkspaceError(at(w, "name"), "expected a string");
        a.name = name.get<std::string>();
        if (!by_name.emplace(a.name, k).second) throw WorkspaceError(at(w, "name"), "duplicate arrow name");
        q.arrows.push_back(std::move(a));
      }
    }
    if (j.contains("relations")) {
      const json& rels = j.at("relations");
      const std::string rw = at(where, "relations");
      if (!rels.is_array()) throw WorkspaceError(rw, "expected an array");
      for (std::size_t r = 0; r < rels.size(); ++r) {
        const std::string w = at(rw, r);
        if (!rels[r].is_array()) throw WorkspaceError(w, "a relation is an array of terms");
        std::vector<PathTerm> terms;
        for (std::size_t t = 0; t < rels[r].size(); ++t) {
          const std::string tw = at(w, t);
          PathTerm term{scalar_from_json(member(rels[r][t], "coeff", tw), f, at(tw, "coeff")), {}};
          const json& path = member(rels[r][t], "path", tw);
          if (!path.is_array()) throw WorkspaceError(at(tw, "path"), "expected an array of arrow names");
          for (std::size_t p = 0; p < path.size(); ++p) {
            auto it = path[p].is_string() ? by_name.find(path[p].get<std::string>()) : by_name.end();
            if (it == by_name.end()) throw WorkspaceError(at(at(tw, "path"), p), "unknown arrow");
            term.arrows.push_back(it->second);
          }
          terms.push_back(std::move(term));
        }
        q.relations.push_back(std::move(terms));
      }
    }
    if (j.contains("nilpotency_bound")) {
      q.nilpotency_bound = size_value(j.at("nilpotency_bound"), at(where, "nilpotency_bound"));
    }
    PathAlgebra pa = located(where, [&] { return build_path_algebra(q, f); });
    ws.algebra = pa.algebra;
    ws.idempotents = pa.idempotents;
    return;
  }
  const std::size_t d = size_value(member(j, "dim", where), at(where, "dim"));
  Vector unit = vector_from_json(member(j, "unit", where), f, d, at(where, "unit"));
  const json& products = member(j, "products", where);
  const std::string pw = at(where, "products");
  if (!products.is_array() || products.size() != d) throw WorkspaceError(pw, "expected dim rows of products");
  std::vector<Scalar> structure(d * d * d);
  for (std::size_t a = 0; a < d; ++a) {
    if (!products[a].is_array() || products[a].size() != d) throw WorkspaceError(at(pw, a), "expected dim products");
    for (std::size_t b = 0; b < d; ++b) {
      Vector v = vector_from_json(products[a][b], f, d, at(at(pw, a), b));
      for (std::size_t k = 0; k < d; ++k) structure[(a * d + b) * d + k] = v[k];
    }
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    const json& l = j.at("labels");
    if (!l.is_array() || l.size() != d) throw WorkspaceError(at(where, "labels"), "expected dim labels");
    for (const auto& s : l) labels.push_back(s.get<std::string>());
  }
  ws.algebra = located(where, [&] {
    return std::make_shared<const Algebra>(f, d, std::move(structure), std::move(unit), std::move(labels));
  });
}

json algebra_to_json(const Workspace& ws) {
  const Algebra& a = *ws.algebra;
  if (ws.spec.kind == AlgebraSpec::Kind::path_algebra) {
    const Quiver& q = ws.spec.quiver;
    json arrows = json::array();
    for (const auto& ar : q.arrows) arrows.push_back({{"name", ar.name}, {"source", ar.source}, {"target", ar.target}});
    json out = {{"type", "path_algebra"}, {"vertices", q.vertices}, {"arrows", arrows}};
    if (!q.relations.empty()) {
      json rels = json::array();
      for (const auto& rel : q.relations) {
        json terms = json::array();
        for (const auto& t : rel) {
          json path = json::array();
          for (std::size_t k : t.arrows) path.push_back(q.arrows[k].name);
          terms.push_back({{"coeff", to_json(t.coeff)}, {"path", path}});
        }
        rels.push_back(terms);
      }
      out["relations"] = rels;
    }
    if (q.nilpotency_bound) out["nilpotency_bound"] = *q.nilpotency_bound;
    return out;
  }
  const std::size_t d = a.dim();
  json products = json::array();
  for (std::size_t i = 0; i < d; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < d; ++j) {
      json v = json::array();
      for (std::size_t k = 0; k < d; ++k) v.push_back(to_json(a.structure(i, j, k)));
      row.push_back(v);
    }
    products.push_back(row);
  }
  json unit = json::array();
  for (const auto& u : a.unit()) unit.push_back(to_json(u));
  json out = {{"type", "structure_constants"}, {"dim", d}, {"unit", unit}, {"products", products}};
  if (!a.labels().empty()) out["labels"] = a.labels();
  return out;
}

struct ModuleResolver {
  const json& raw;
  Workspace& ws;
  std::set<std::string> pending;

  const Module& get(const std::string& name, const std::string& from) {
    auto done = ws.modules.find(name);
    if (done != ws.modules.end()) return done->second;
    if (!raw.contains(name)) throw WorkspaceError(from, "unknown module \"" + name + "\"");
    if (!pending.insert(name).second) throw WorkspaceError(from, "modules refer to each other in a cycle");
    Module m = build(raw.at(name), "/modules/" + name);
    pending.erase(name);
    return ws.modules.emplace(name, std::move(m)).first->second;
  }

  Module build(const json& j, const std::string& where) {
    if (j.is_object() && j.contains("direct_sum")) {
      const json& parts = j.at("direct_sum");
      if (!parts.is_array()) throw WorkspaceError(at(where, "direct_sum"), "expected an array of module names");
      std::vector<Module> ms;
      for (std::size_t k = 0; k < parts.size(); ++k) {
        const std::string w = at(at(where, "direct_sum"), k);
        if (!parts[k].is_string()) throw WorkspaceError(w, "expected a module name");
        ms.push_back(get(parts[k].get<std::string>(), w));
      }
      if (ms.empty()) return Module::zero(ws.algebra);
      return direct_sum(ms).sum;
    }
    return module_from_json(j, ws, where);
  }
};

}  // namespace

Field field_from_json(const json& j, const std::string& where) {
  if (!j.is_string()) throw WorkspaceError(where, "field is \"Q\" or \"GF(p)\"");
  const std::string s = j.get<std::string>();
  if (s == "Q") return Field::rationals();
  if (s.size() > 4 && s.rfind("GF(", 0) == 0 && s.back() == ')') {
    const std::string p = s.substr(3, s.size() - 4);
    try {
      std::size_t pos = 0;
      unsigned long long v = std::stoull(p, &pos);
      if (pos == p.size()) return located(where, [&] { return Field::prime(v); });
    } catch (const std::logic_error& e) {
      if (dynamic_cast<const InputError*>(&e)) throw WorkspaceError(where, e.what());
    }
  }
  throw WorkspaceError(where, "field is \"Q\" or \"GF(p)\", got \"" + s + "\"");
}

json to_json(const Field& f) {
  return f.is_rational() ? json("Q") : json("GF(" + std::to_string(f.characteristic()) + ")");
}

json to_json(const Scalar& s) { return s.get_str(); }

json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

Matrix matrix_from_json(const json& j, const Field& f, std::size_t rows, std::size_t cols, const std::string& where) {
  const std::string shape = std::to_string(rows) + "x" + std::to_string(cols);
  if (!j.is_array()) throw WorkspaceError(where, "expected a " + shape + " matrix");
  Matrix m(f, rows, cols);
  if (cols == 0 && j.empty()) return m;
  if (j.size() != rows) {
    throw WorkspaceError(where, "expected a " + shape + " matrix, got " + std::to_string(j.size()) + " rows");
  }
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string w = at(where, r);
    if (!j[r].is_array() || j[r].size() != cols) throw WorkspaceError(w, "expected a row of " + std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar_from_json(j[r][c], f, at(w, c));
  }
  return m;
}

json to_json(const Module& m) {
  json actions = json::array();
  for (const auto& a : m.actions()) actions.push_back(to_json(a));
  return {{"dim", m.dim()}, {"actions", actions}};
}

Module module_from_json(const json& j, const Workspace& ws, const std::string& where) {
  const AlgebraPtr& alg = ws.algebra;
  const Field& f = ws.field;
  if (!j.is_object()) throw WorkspaceError(where, "a module is an object");
  if (j.contains("actions")) {
    const json& acts = j.at("actions");
    const std::string aw = at(where, "actions");
    if (!acts.is_array() || acts.size() != alg->dim()) {
      throw WorkspaceError(aw, "expected one action matrix per basis element (" + std::to_string(alg->dim()) + ")");
    }
    std::size_t n = 0;
    if (j.contains("dim")) {
      n = size_value(j.at("dim"), at(where, "dim"));
    } else if (!acts.empty()) {
      n = acts[0].size();
    }
    std::vector<Matrix> action;
    for (std::size_t k = 0; k < acts.size(); ++k) action.push_back(matrix_from_json(acts[k], f, n, n, at(aw, k)));
    return located(where, [&] { return Module(alg, std::move(action)); });
  }
  if (j.contains("builtin")) {
    const json& b = j.at("builtin");
    if (b == "regular") return Module::regular(alg);
    if (b == "injective_cogenerator") return dual_of_right_regular(alg);
    const std::size_t v = size_value(member(j, "vertex", where), at(where, "vertex"));
    if (ws.idempotents.empty()) throw WorkspaceError(at(where, "builtin"), "vertex modules need a path algebra");
    if (v >= ws.idempotents.size()) throw WorkspaceError(at(where, "vertex"), "no such vertex");
    if (b == "simple") return located(where, [&] { return simple_module(alg, v); });
    if (b == "projective") return indecomposable_projective(alg, ws.idempotents[v]);
    if (b == "injective") return indecomposable_injective(alg, ws.idempotents[v]);
    throw WorkspaceError(at(where, "builtin"), "unknown builtin module");
  }
  if (j.contains("dims")) {
    if (ws.spec.kind != AlgebraSpec::Kind::path_algebra) {
      throw WorkspaceError(at(where, "dims"), "representations need a path algebra");
    }
    const Quiver& q = ws.spec.quiver;
    const json& dj = j.at("dims");
    if (!dj.is_array() || dj.size() != q.vertices) {
      throw WorkspaceError(at(where, "dims"), "expected one dimension per vertex");
    }
    std::vector<std::size_t> dims;
    for (std::size_t v = 0; v < dj.size(); ++v) dims.push_back(size_value(dj[v], at(at(where, "dims"), v)));
    std::vector<Matrix> maps;
    const json empty = json::object();
    const json& arrows = j.contains("arrows") ? j.at("arrows") : empty;
    if (!arrows.is_object()) throw WorkspaceError(at(where, "arrows"), "expected an object keyed by arrow name");
    for (const auto& [key, value] : arrows.items()) {
      bool known = false;
      for (const auto& a : q.arrows) known = known || a.name == key;
      if (!known) throw WorkspaceError(at(at(where, "arrows"), key), "unknown arrow");
    }
    for (const auto& a : q.arrows) {
      const std::string w = at(at(where, "arrows"), a.name);
      if (arrows.contains(a.name)) {
        maps.push_back(matrix_from_json(arrows.at(a.name), f, dims[a.source], dims[a.target], w));
      } else {
        maps.emplace_back(f, dims[a.source], dims[a.target]);
      }
    }
    return located(where, [&] { return from_representation(alg, dims, maps); });
  }
  throw WorkspaceError(where, "a module needs \"actions\", \"dims\", \"builtin\" or \"direct_sum\"");
}

namespace {

json complex_to_json(const BoundedComplex& c, const Workspace* ws) {
  json comps = json::object();
  json diffs = json::object();
  for (int n = c.lo(); n <= c.hi(); ++n) {
    const Module& m = c.at(n);
    json ref;
    if (ws) {
      for (const auto& [name, mod] : ws->modules) {
        if (mod == m) {
          ref = name;
          break;
        }
      }
    }
    comps[std::to_string(n)] = ref.is_null() ? to_json(m) : ref;
    if (n > c.lo()) diffs[std::to_string(n)] = to_json(c.differential(n));
  }
  return {{"components", comps}, {"differentials", diffs}};
}

}  // namespace

json to_json(const BoundedComplex& c) { return complex_to_json(c, nullptr); }

BoundedComplex complex_from_json(const json& j, const Workspace& ws, const std::string& where) {
  const json& comps = member(j, "components", where);
  const std::string cw = at(where, "components");
  if (!comps.is_object()) throw WorkspaceError(cw, "expected an object keyed by degree");
  if (comps.empty()) return BoundedComplex::zero(ws.algebra);
  std::map<int, Module> by_degree;
  for (const auto& [key, value] : comps.items()) {
    const std::string w = at(cw, key);
    const int n = int_key(key, w);
    if (value.is_string()) {
      auto it = ws.modules.find(value.get<std::string>());
      if (it == ws.modules.end()) throw WorkspaceError(w, "unknown module \"" + value.get<std::string>() + "\"");
      by_degree.emplace(n, it->second);
    } else {
      by_degree.emplace(n, module_from_json(value, ws, w));
    }
  }
  const int lo = by_degree.begin()->first, hi = by_degree.rbegin()->first;
  std::vector<Module> modules;
  for (int n = lo; n <= hi; ++n) {
    auto it = by_degree.find(n);
    modules.push_back(it == by_degree.end() ? Module::zero(ws.algebra) : it->second);
  }
  auto dim = [&](int n) { return modules[static_cast<std::size_t>(n - lo)].dim(); };
  std::map<int, Matrix> given;
  if (j.contains("differentials")) {
    const json& ds = j.at("differentials");
    const std::string dw = at(where, "differentials");
    if (!ds.is_object()) throw WorkspaceError(dw, "expected an object keyed by degree");
    for (const auto& [key, value] : ds.items()) {
      const std::string w = at(dw, key);
      const int n = int_key(key, w);
      if (n <= lo || n > hi) throw WorkspaceError(w, "differential d^n needs components in degrees n-1 and n");
      given.emplace(n, matrix_from_json(value, ws.field, dim(n), dim(n - 1), w));
    }
  }
  std::vector<Matrix> diffs;
  for (int n = lo + 1; n <= hi; ++n) {
    auto it = given.find(n);
    diffs.push_back(it == given.end() ? Matrix(ws.field, dim(n), dim(n - 1)) : it->second);
  }
  return located(where, [&] { return BoundedComplex(ws.algebra, lo, std::move(modules), std::move(diffs)); });
}

Workspace parse_workspace(const json& doc) {
  if (!doc.is_object()) throw WorkspaceError("", "a workspace is a JSON object");
  const json& format = member(doc, "format", "");
  if (format != kWorkspaceFormat) {
    throw WorkspaceError("/format", std::string("unsupported format, expected \"") + kWorkspaceFormat + "\"");
  }
  Workspace ws;
  ws.field = field_from_json(member(doc, "field", ""), "/field");
  parse_algebra(member(doc, "algebra", ""), ws);
  if (doc.contains("modules")) {
    const json& raw = doc.at("modules");
    if (!raw.is_object()) throw WorkspaceError("/modules", "expected an object keyed by name");
    ModuleResolver resolver{raw, ws, {}};
    for (const auto& [name, value] : raw.items()) resolver.get(name, "/modules/" + name);
  }
  if (doc.contains("complexes")) {
    const json& raw = doc.at("complexes");
    if (!raw.is_object()) throw WorkspaceError("/complexes", "expected an object keyed by name");
    for (const auto& [name, value] : raw.items()) {
      ws.complexes.emplace(name, complex_from_json(value, ws, "/complexes/" + name));
    }
  }
  if (doc.contains("candidates")) {
    const json& raw = doc.at("candidates");
    if (!raw.is_object()) throw WorkspaceError("/candidates", "expected an object: candidate name -> module name");
    for (const auto& [name, value] : raw.items()) {
      const std::string w = "/candidates/" + name;
      if (!value.is_string()) throw WorkspaceError(w, "expected a module name");
      if (!ws.modules.count(value.get<std::string>())) throw WorkspaceError(w, "unknown module");
      ws.candidates.emplace(name, value.get<std::string>());
    }
  }
  return ws;
}

Workspace load_workspace(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw WorkspaceError(path, "cannot open file");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw WorkspaceError(path + " (byte " + std::to_string(e.byte) + ")", "invalid JSON");
  }
  try {
    return parse_workspace(doc);
  } catch (const WorkspaceError& e) {
    throw WorkspaceError(path + "#" + e.location(), std::string(e.what()).substr(e.location().size() + 2));
  }
}

json to_json(const Workspace& ws) {
  json modules = json::object();
  for (const auto& [name, m] : ws.modules) modules[name] = to_json(m);
  json complexes = json::object();
  for (const auto& [name, c] : ws.complexes) complexes[name] = complex_to_json(c, &ws);
  json candidates = json::object();
  for (const auto& [name, m] : ws.candidates) candidates[name] = m;
  return {{"format", kWorkspaceFormat}, {"field", to_json(ws.field)},    {"algebra", algebra_to_json(ws)},
          {"modules", modules},         {"complexes", complexes},         {"candidates", candidates}};
}

}  // namespace gcdim
