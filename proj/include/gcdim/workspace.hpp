#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gcdim/complexes.hpp"

namespace gcdim {

inline constexpr const char* kWorkspaceFormat = "gcdim-workspace/1";

/// Malformed workspace input. `location` is a JSON pointer into the document.
class WorkspaceError : public InputError {
 public:
  WorkspaceError(std::string location, const std::string& what)
      : InputError(location + ": " + what), location_(std::move(location)) {}
  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

/// How the algebra was described, kept for serialization.
struct AlgebraSpec {
  enum class Kind { path_algebra, structure_constants } kind = Kind::path_algebra;
  Quiver quiver;  // path_algebra only
};

struct Workspace {
  Field field = Field::rationals();
  AlgebraSpec spec;
  AlgebraPtr algebra;
  /// e_v for path algebras; empty otherwise.
  std::vector<Vector> idempotents;
  std::map<std::string, Module> modules;
  std::map<std::string, BoundedComplex> complexes;
  /// Candidate name -> module name.
  std::map<std::string, std::string> candidates;

  const Module& module(const std::string& name) const;
  const BoundedComplex& complex(const std::string& name) const;
  /// A candidate name, or a module name used as a candidate.
  const Module& candidate(const std::string& name) const;
};

Workspace parse_workspace(const nlohmann::json& doc);
/// Parse errors carry the file name in front of the location.
Workspace load_workspace(const std::string& path);
nlohmann::json to_json(const Workspace& ws);

Field field_from_json(const nlohmann::json& j, const std::string& where);
nlohmann::json to_json(const Field& f);
nlohmann::json to_json(const Scalar& s);
nlohmann::json to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j, const Field& f, std::size_t rows, std::size_t cols,
                        const std::string& where);

/// {"actions": [...]} with one matrix per basis element of the algebra.
nlohmann::json to_json(const Module& m);
/// Accepts {"actions"}, {"dims", "arrows"} (path algebras) or {"direct_sum": [names]}.
Module module_from_json(const nlohmann::json& j, const Workspace& ws, const std::string& where);

/// {"components": {"n": module}, "differentials": {"n": d^n}}; a component
/// is a module name or an inline module.
nlohmann::json to_json(const BoundedComplex& c);
BoundedComplex complex_from_json(const nlohmann::json& j, const Workspace& ws, const std::string& where);

}  // namespace gcdim
