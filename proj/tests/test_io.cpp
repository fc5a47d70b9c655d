#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "taufp/error.hpp"
#include "taufp/io.hpp"

using namespace taufp;
using nlohmann::json;

TEST_CASE("quiver JSON round trip") {
  const Quiver q = load_quiver(TAUFP_FIXTURES "/allones2.json");
  CHECK(q.matrix() == std::vector<int>{1, 1, 1, 1});
  CHECK(quiver_from_json(quiver_to_json(q)) == q);
  CHECK(load_quiver(TAUFP_FIXTURES "/empty.json").empty());
  CHECK(load_quiver(TAUFP_FIXTURES "/path4.json").total_arrows() == 3);
  const Quiver two = quiver_from_json(json::parse(R"({"vertices":["a","b"],"arrows":[["a","b"],["a","b",2]]})"));
  CHECK(two.arrows(0, 1) == 3);
}

TEST_CASE("lattice JSON round trip") {
  const FiniteLattice l = load_lattice(TAUFP_FIXTURES "/three_covers.json");
  CHECK(l.size() == 32);
  const FiniteLattice again = lattice_from_json(lattice_to_json(l));
  CHECK(again.elements() == l.elements());
  CHECK(again.covers() == l.covers());
  CHECK(load_lattice(TAUFP_FIXTURES "/chain5.json").size() == 5);
  CHECK_THROWS_AS(load_lattice(TAUFP_FIXTURES "/bowtie.json"), Error);
}

TEST_CASE("malformed input") {
  CHECK_THROWS_AS(quiver_from_json(json::parse(R"({"vertices":["a"]})")), Error);
  CHECK_THROWS_AS(quiver_from_json(json::parse(R"([1,2])")), Error);
  CHECK_THROWS_AS(quiver_from_json(json::parse(R"({"vertices":["a"],"arrows":[["a","a",0]]})")), Error);
  CHECK_THROWS_AS(quiver_from_json(json::parse(R"({"vertices":["a"],"arrows":[["a"]]})")), Error);
  CHECK_THROWS_AS(lattice_from_json(json::parse(R"({"elements":["a"],"covers":[["a"]]})")), Error);
  CHECK_THROWS_AS(load_quiver("/nonexistent/file.json"), Error);

  const std::string path = "taufp_io_test_bad.json";
  {
    std::ofstream out(path);
    out << "{\n  \"vertices\": [\"1\",\n  ]\n}\n";
  }
  try {
    load_quiver(path);
    FAIL("parse error not reported");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidInput);
    CHECK(std::string(e.what()).find(path + ":3:") != std::string::npos);
  }
  std::remove(path.c_str());
}
