#include <doctest.h>

#include "gcdim/gcdim_complex.hpp"
#include "gcdim/workspace.hpp"
#include "support/generators.hpp"

using namespace gcdim;
using nlohmann::json;

namespace {

json minimal(json modules = json::object()) {
  return {{"format", kWorkspaceFormat},
          {"field", "Q"},
          {"algebra", {{"type", "path_algebra"}, {"vertices", 2}, {"arrows", {{{"name", "a"}, {"source", 0}, {"target", 1}}}}}},
          {"modules", modules}};
}

std::string location_of(const json& doc) {
  try {
    parse_workspace(doc);
  } catch (const WorkspaceError& e) {
    return e.location();
  }
  return "<no error>";
}

}  // namespace

TEST_CASE("the example workspace") {
  Workspace ws = load_workspace(GCDIM_EXAMPLE_WORKSPACE);
  CHECK(ws.algebra->dim() == 3);
  CHECK(ws.idempotents.size() == 2);
  CHECK(ws.module("I2").dim() == 1);
  CHECK(ws.module("C2").dim() == 3);
  CHECK(ws.module("R") == Module::regular(ws.algebra));
  CHECK(ws.candidate("C2") == ws.module("C2"));
  CHECK(ws.candidate("I2") == ws.module("I2"));
  CHECK(ws.complex("R2plusR").lo() == -2);
  CHECK(ws.complex("R2plusR").hi() == 0);
  CHECK(ws.complexes.count("P1_to_P2") == 1);
  CHECK_THROWS_AS(ws.module("nope"), WorkspaceError);
}

TEST_CASE("serialization round-trips") {
  Workspace ws = load_workspace(GCDIM_EXAMPLE_WORKSPACE);
  json once = to_json(ws);
  Workspace back = parse_workspace(once);
  CHECK(*back.algebra == *ws.algebra);
  CHECK(back.modules.size() == ws.modules.size());
  for (const auto& [name, m] : ws.modules) CHECK(back.module(name) == m);
  for (const auto& [name, c] : ws.complexes) CHECK(back.complex(name) == c);
  CHECK(back.candidates == ws.candidates);
  CHECK(to_json(back) == once);
}

TEST_CASE("computed modules and complexes serialize") {
  Workspace ws = load_workspace(GCDIM_EXAMPLE_WORKSPACE);
  SemidualizingDatum d = make_semidualizing(ws.candidate("C2"), 2);
  Trunk t = trunk(ws.complex("R2plusR"));
  CHECK(module_from_json(to_json(t.t), ws, "/t") == t.t);
  StandardResolution r = standard_projective_resolution(ws.complex("P1_to_P2"), -3);
  CHECK(complex_from_json(to_json(r.p), ws, "/p") == r.p);
  Module sum = direct_sum(ws.module("I2"), ws.module("P2"));
  CHECK(module_from_json(to_json(sum), ws, "/s") == sum);
  CHECK(dualize(sum, d).dim() > 0);
}

TEST_CASE("scalars and matrices") {
  Field f = Field::prime(3);
  CHECK(matrix_from_json(json::parse(R"([["4", 2], ["-1", "1/2"]])"), f, 2, 2, "/m") ==
        Matrix(f, 2, 2, {Scalar(1), Scalar(2), Scalar(2), Scalar(2)}));
  CHECK(to_json(Scalar(-3, 4)) == "-3/4");
  CHECK(field_from_json("GF(7)", "/field").characteristic() == 7);
  CHECK(to_json(Field::prime(7)) == "GF(7)");
  CHECK_THROWS_AS(matrix_from_json(json::parse(R"([["1"]])"), f, 2, 1, "/m"), WorkspaceError);
}

TEST_CASE("error locations point into the document") {
  json doc = minimal({{"A", {{"dims", {1, 1}}, {"arrows", {{"b", {{"1"}}}}}}}});
  CHECK(location_of(doc) == "/modules/A/arrows/b");

  doc = minimal({{"A", {{"direct_sum", {"B", "missing"}}}}, {"B", {{"dims", {1, 0}}}}});
  CHECK(location_of(doc) == "/modules/A/direct_sum/1");

  doc = minimal({{"A", {{"direct_sum", {"B"}}}}, {"B", {{"direct_sum", {"A"}}}}});
  CHECK(location_of(doc).rfind("/modules/", 0) == 0);

  doc = minimal();
  doc["field"] = "GF(6)";
  CHECK(location_of(doc) == "/field");

  doc = minimal();
  doc["format"] = "other/2";
  CHECK(location_of(doc) == "/format");

  doc = minimal({{"A", {{"dims", {1, 1}}, {"arrows", {{"a", {{"1", "2"}}}}}}}});
  CHECK(location_of(doc).rfind("/modules/A/arrows/a", 0) == 0);

  doc = minimal({{"A", {{"dims", {1, 1}}}}});
  doc["complexes"] = {{"X", {{"components", {{"zero", "A"}}}}}};
  CHECK(location_of(doc).rfind("/complexes/X/components", 0) == 0);

  doc = minimal({{"A", {{"dims", {1, 0}}}}});
  doc["candidates"] = {{"C", "nope"}};
  CHECK(location_of(doc).rfind("/candidates/C", 0) == 0);
}

TEST_CASE("prime fields and structure constants") {
  json doc = json::parse(R"j({
    "format": "gcdim-workspace/1",
    "field": "GF(3)",
    "algebra": {"type": "structure_constants", "dim": 2, "unit": ["1", "0"], "labels": ["1", "x"],
                "products": [[["1", "0"], ["0", "1"]], [["0", "1"], ["0", "0"]]]},
    "modules": {"R": {"builtin": "regular"}, "k": {"actions": [[["1"]], [["0"]]]}}
  })j");
  Workspace ws = parse_workspace(doc);
  CHECK(ws.field.characteristic() == 3);
  CHECK(ws.algebra->dim() == 2);
  CHECK(ws.idempotents.empty());
  CHECK(ws.module("k").dim() == 1);
  CHECK(ext_dim(ws.module("k"), ws.module("k"), 3) == 1);
  Workspace back = parse_workspace(to_json(ws));
  CHECK(*back.algebra == *ws.algebra);
  CHECK(back.module("k") == ws.module("k"));

  doc["algebra"]["products"][1][1] = json::array({"0", "1"});
  doc["algebra"]["products"][1][0] = json::array({"1", "0"});
  CHECK(location_of(doc) == "/algebra");
}
