#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "elemvar/catalog.hpp"
#include "elemvar/io.hpp"
#include "json.hpp"

using namespace elemvar;

TEST_CASE("algebra specs build the advertised dimensions") {
  CHECK(algebra_from_spec("gl:3", 3).dim() == 9);
  CHECK(algebra_from_spec("sl:4", 3).dim() == 15);
  CHECK(algebra_from_spec("sp:4", 3).dim() == 10);
  CHECK(algebra_from_spec("un:4", 3).dim() == 6);
  CHECK(algebra_from_spec("unr:2,3", 3).dim() == 6);
  CHECK(algebra_from_spec("parab-nilrad:5:J=2,3", 3).dim() == 7);
  CHECK(algebra_from_spec("heis:3", 3).dim() == 5);
  CHECK(algebra_from_spec("abelian:2", 3).dim() == 2);
  CHECK(algebra_from_spec("gtilde:2", 3).dim() == 5);
  CHECK(algebra_from_spec("g1n:3", 3).dim() == 12);
  CHECK(algebra_from_spec("sl:2+sl:2+sl:2", 3).dim() == 9);
}

TEST_CASE("unknown specs are rejected with the catalog attached") {
  try {
    algebra_from_spec("so:5", 3);
    FAIL("expected rejection");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("algebra specs") != std::string::npos);
  }
  CHECK_THROWS_AS(algebra_from_spec("gl:x", 3), std::invalid_argument);
  LieAlgebra g = algebra_from_spec("gl:2", 3);
  CHECK_THROWS_AS(module_from_spec("spinor", g), std::invalid_argument);
  CHECK_THROWS_AS(within_from_spec("borel", g), std::invalid_argument);
}

TEST_CASE("module specs compose") {
  LieAlgebra g = algebra_from_spec("sl:2", 5);
  CHECK(module_from_spec("triv", g).dim() == 1);
  CHECK(module_from_spec("defining", g).dim() == 2);
  CHECK(module_from_spec("adjoint", g).dim() == 3);
  CHECK(module_from_spec("dual:defining", g).dim() == 2);
  CHECK(module_from_spec("tensor:defining,defining", g).dim() == 4);
  CHECK(module_from_spec("sum:defining,triv", g).dim() == 3);
  LieAlgebra ab = algebra_from_spec("abelian:2", 3);
  CHECK(module_from_spec("free:2,2", ab).dim() == 18);
  CHECK_THROWS_AS(module_from_spec("free:2,1", g), std::invalid_argument);
}

TEST_CASE("custom modules load from JSON with validation") {
  LieAlgebra ab = algebra_from_spec("abelian:1", 3);
  const char* path = "elemvar_test_module.json";
  {
    std::ofstream out(path);
    out << R"({"dim": 3, "ops": [[[0,0,0],[1,0,0],[0,1,0]]]})";
  }
  Module m = module_from_spec(std::string("file:") + path, ab);
  CHECK(m.dim() == 3);
  {
    std::ofstream out(path);
    // identity is not p-nilpotent compatible with the zero p-map
    out << R"({"dim": 2, "ops": [[[1,0],[0,1]]]})";
  }
  CHECK_THROWS(module_from_spec(std::string("file:") + path, ab));
  std::remove(path);
}

TEST_CASE("within specs resolve to scan subspaces") {
  LieAlgebra g = algebra_from_spec("gl:3", 3);
  CHECK_FALSE(within_from_spec("all", g).has_value());
  auto nil = within_from_spec("nilradical", g);
  REQUIRE(nil.has_value());
  CHECK(nil->dim() == 3);
  auto sub = within_from_spec("subalgebra:un:3", g);
  REQUIRE(sub.has_value());
  CHECK(*sub == *nil);
  LieAlgebra ab = algebra_from_spec("abelian:2", 3);
  CHECK_THROWS_AS(within_from_spec("nilradical", ab), std::invalid_argument);
}

TEST_CASE("point records and summaries are valid, stable JSON") {
  LieAlgebra u3 = algebra_from_spec("un:3", 3);
  auto pts = elementary_points(u3, 2);
  PointFlags fl;
  fl.with_maximal = true;
  fl.maximal = true;
  fl.certificate = pts[0].certificate;
  std::string rec = point_record(pts[0], fl);
  auto parsed = nlohmann::json::parse(rec);
  CHECK(parsed.at("sigma").size() == 2);
  CHECK(parsed.at("basis_matrix").size() == 3);
  CHECK(parsed.at("flags").at("maximal") == true);
  CHECK(parsed.at("flags").at("certificate") == "full-plane");
  // serialization is deterministic
  CHECK(rec == point_record(pts[0], fl));

  Module ad = module_from_spec("adjoint", u3);
  RankSurvey sv = rank_survey(u3, ad, 2);
  std::string summary = survey_summary_json("un:3", "adjoint", 2, 3, sv);
  auto sj = nlohmann::json::parse(summary);
  CHECK(sj.at("schema_version") == kSchemaVersion);
  CHECK(sj.at("points") == 4);
  CHECK(sj.at("max").size() == sv.jmax);
  CHECK(sj.at("constant_rad").size() == sv.jmax);
  // round trip: parse(emit(x)) reproduces the numbers
  for (size_t j = 0; j < sv.jmax; ++j) {
    CHECK(sj.at("max")[j] == sv.max_rad[j]);
    CHECK(sj.at("min")[j] == sv.min_soc[j]);
    CHECK(sj.at("below_max_counts")[j] == sv.below_max_counts[j]);
  }
  CHECK(summary == survey_summary_json("un:3", "adjoint", 2, 3, sv));
}

TEST_CASE("survey CSV carries the pinned column layout") {
  LieAlgebra u3 = algebra_from_spec("un:3", 3);
  Module ad = module_from_spec("adjoint", u3);
  RankSurvey sv = rank_survey(u3, ad, 2);
  std::ostringstream os1, os2;
  write_survey_csv(os1, sv);
  write_survey_csv(os2, sv);
  CHECK(os1.str() == os2.str());  // byte-identical reruns
  std::istringstream in(os1.str());
  std::string line;
  std::getline(in, line);
  CHECK(line.rfind("# survey schema", 0) == 0);
  std::getline(in, line);
  CHECK(line ==
        "sigma,basis,rad_1,rad_2,rad_3,rad_4,soc_1,soc_2,soc_3,soc_4,free,free_rank,in_support,"
        "maximal");
  size_t rows = 0;
  while (std::getline(in, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 4);
}
