#include <doctest.h>

#include <filesystem>
#include <random>

#include "okforce/errors.hpp"
#include "okforce/generators.hpp"
#include "okforce/invariants.hpp"
#include "okforce/io.hpp"
#include "okforce/serialize.hpp"

using namespace okf;

TEST_CASE("text formats round-trip") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const Graph g = gnp_graph(n, 0.4, rng());
    const OrientedGraph d = random_orientation(g, rng());
    CHECK(parse_ug(format_ug(g)) == g);
    CHECK(parse_dg(format_dg(d)) == d);
    CHECK(graph_from_json(to_json(g)) == g);
    CHECK(oriented_from_json(to_json(d)) == d);
  }
}

TEST_CASE("parser accepts comments and rejects bad headers") {
  CHECK(parse_ug("# triangle\n3 3\n0 1\n1 2\n0 2\n") == complete_graph(3));
  CHECK_THROWS_AS(parse_ug("3 2\n0 1\n"), ParameterError);
  CHECK_THROWS_AS(parse_ug("3 1\n0 5\n"), ParameterError);
  CHECK_THROWS_AS(parse_dg("2 2\n0 1\n1 0\n"), ParameterError);
  CHECK_THROWS_AS(parse_ug("x\n"), ParameterError);
}

TEST_CASE("files dispatch on extension") {
  const auto dir = std::filesystem::temp_directory_path() / "okforce_unit_io";
  std::filesystem::create_directories(dir);
  const OrientedGraph d = alternating_orientation(cycle_graph(6));
  write_graph_file(dir / "c6.dg", d);
  CHECK(std::get<OrientedGraph>(read_graph_file(dir / "c6.dg")) == d);
  write_graph_file(dir / "c6.ug", d.underlying());
  CHECK(std::get<Graph>(read_graph_file(dir / "c6.ug")) == cycle_graph(6));
  CHECK_THROWS_AS(read_graph_file(dir / "c6.txt"), ParameterError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("covers round-trip through JSON") {
  const auto cover = tree_cover_number(gnp_graph(8, 0.3, 4), 1).cover;
  const auto back = cover_from_json(to_json(cover));
  REQUIRE(back.size() == cover.size());
  for (std::size_t i = 0; i < cover.size(); ++i) {
    CHECK(back[i].root == cover[i].root);
    CHECK(back[i].vertices == cover[i].vertices);
    CHECK(back[i].edges == cover[i].edges);
  }
}

TEST_CASE("dot export") {
  const auto s = VertexSet::from_list(3, {1});
  const std::string dot = to_dot(forward_orientation(path_graph(3)), &s);
  CHECK(dot.find("0 -> 1") != std::string::npos);
  CHECK(dot.find("1 [style=filled]") != std::string::npos);
  CHECK(to_dot(path_graph(3)).find("1 -- 2") != std::string::npos);
}
