#include <doctest.h>

#include <map>
#include <random>

#include "fixtures.hpp"
#include "graphprod/graph_io.hpp"
#include "graphprod/isomorphism.hpp"

using namespace graphprod;
using graphprod::testing::graph;

TEST_CASE("labeled_iso examples") {
  auto p = graph({{"a", "Z"}, {"b", "Z"}, {"c", "Z"}}, {{"a", "b"}, {"b", "c"}});
  auto q = graph({{"x", "Z"}, {"y", "Z"}, {"z", "Z"}}, {{"x", "y"}, {"y", "z"}});
  auto w = labeled_iso(p, q);
  REQUIRE(w);
  CHECK(w->mapping.at("b") == "y");
  CHECK(w->certifies(p, q));

  auto marked =
      graph({{"x", "Z"}, {"y", "Z/2"}, {"z", "Z"}}, {{"x", "y"}, {"y", "z"}});
  CHECK_FALSE(labeled_iso(p, marked));

  auto cycle = graph({{"a", "Z"}, {"b", "Z"}, {"c", "Z"}, {"d", "Z"}},
                     {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}});
  auto path = graph({{"a", "Z"}, {"b", "Z"}, {"c", "Z"}, {"d", "Z"}},
                    {{"a", "b"}, {"b", "c"}, {"c", "d"}});
  CHECK_FALSE(labeled_iso(cycle, path));
  CHECK_FALSE(testing::brute_isomorphic(cycle, path));
}

TEST_CASE("labels are compared up to group isomorphism") {
  auto a = graph({{"a", "Z/6"}});
  auto b = graph({{"b", "Z/2xZ/3"}});
  CHECK(labeled_iso(a, b));
  CHECK(canonical_serialization(a) == canonical_serialization(b));
  CHECK_FALSE(labeled_iso(graph({{"a", "Z/4"}}), graph({{"b", "Z/2xZ/2"}})));
}

TEST_CASE("witnesses compose as an equivalence") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<std::size_t> size(1, 8);
    auto g = testing::random_graph(rng, size(rng), {"Z", "Z/2", "Z/3"});
    auto h = testing::permuted(g, testing::random_permutation(rng, g.size()),
                               "h");
    auto k = testing::permuted(h, testing::random_permutation(rng, h.size()),
                               "k");
    auto self = labeled_iso(g, g);
    REQUIRE(self);
    CHECK(IsoWitness::identity(g).certifies(g, g));
    auto gh = labeled_iso(g, h);
    auto hk = labeled_iso(h, k);
    REQUIRE(gh);
    REQUIRE(hk);
    CHECK(gh->inverse().certifies(h, g));
    CHECK(gh->then(*hk).certifies(g, k));
    CHECK(canonical_serialization(g) == canonical_serialization(k));
  }
}

TEST_CASE("canonical form examples") {
  auto abc = graph({{"a", "Z"}, {"b", "Z/2"}, {"c", "Z"}},
                   {{"a", "b"}, {"b", "c"}});
  auto cba = graph({{"c", "Z"}, {"b", "Z/2"}, {"a", "Z"}},
                   {{"c", "b"}, {"b", "a"}});
  CHECK(canonical_serialization(abc) == canonical_serialization(cba));
  auto star = graph({{"a", "Z"}, {"b", "Z"}, {"c", "Z"}},
                    {{"a", "b"}, {"a", "c"}});
  auto tri = graph({{"a", "Z"}, {"b", "Z"}, {"c", "Z"}},
                   {{"a", "b"}, {"a", "c"}, {"b", "c"}});
  CHECK(canonical_serialization(star) != canonical_serialization(tri));
  CHECK(canonical_form(star).name(0) == "v0");
  CHECK(canonical_serialization(LabeledGraph()) == "");
}

TEST_CASE("canonical form partitions exactly as isomorphism (<= 4 vertices)") {
  auto graphs = testing::all_labeled_graphs(4, {"Z", "Z/2", "Z/3", "Z/4"});
  CHECK(graphs.size() == 4 + 16 * 2 + 64 * 8 + 256 * 64);
  std::map<std::string, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < graphs.size(); ++i)
    classes[canonical_serialization(graphs[i])].push_back(i);

  // Every member is isomorphic to its class representative...
  for (const auto& [key, members] : classes) {
    const auto& rep = graphs[members.front()];
    for (std::size_t i : members) {
      auto w = labeled_iso(graphs[i], rep);
      REQUIRE(w);
      CHECK(w->certifies(graphs[i], rep));
    }
    // Brute force on a few members keeps the iso search honest.
    for (std::size_t k = 0; k < std::min<std::size_t>(members.size(), 3); ++k)
      CHECK(testing::brute_isomorphic(graphs[members[k]], rep));
  }
  // ...and representatives of different classes are never isomorphic.
  std::vector<std::size_t> reps;
  for (const auto& [key, members] : classes) reps.push_back(members.front());
  std::size_t brute_checked = 0;
  for (std::size_t a = 0; a < reps.size(); ++a)
    for (std::size_t b = a + 1; b < reps.size(); ++b) {
      const auto& ga = graphs[reps[a]];
      const auto& gb = graphs[reps[b]];
      CHECK_FALSE(labeled_iso(ga, gb));
      if (ga.size() == gb.size() && ga.edge_count() == gb.edge_count() &&
          brute_checked < 20000) {
        ++brute_checked;
        CHECK_FALSE(testing::brute_isomorphic(ga, gb));
      }
    }
  MESSAGE(classes.size(), " isomorphism classes, ", brute_checked,
          " brute-force negative checks");
}

TEST_CASE("canonical form is stable under relabeling of larger graphs") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = testing::random_graph(rng, 12, {"Z", "Z/2"}, 0.3);
    auto h = testing::permuted(g, testing::random_permutation(rng, g.size()));
    CHECK(canonical_serialization(g) == canonical_serialization(h));
    CHECK(labeled_iso(g, h));
  }
  // Many interchangeable vertices (twins) stay cheap.
  std::vector<std::pair<std::string, std::string>> vs;
  for (int i = 0; i < 20; ++i) vs.emplace_back("u" + std::to_string(i), "Z/2");
  auto discrete = graph(vs);
  CHECK(canonical_form(discrete).size() == 20);
}
