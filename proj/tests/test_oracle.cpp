#include <doctest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "graphprod/oracle.hpp"

using namespace graphprod;
using graphprod::testing::graph;

TEST_CASE("ball sizes on small groups") {
  // Infinite dihedral: e; a, b; ab, ba; aba, bab.
  auto dihedral = graph({{"a", "Z/2"}, {"b", "Z/2"}});
  CHECK(enumerate_ball(dihedral, 3).sizes() ==
        std::vector<std::size_t>{1, 3, 5, 7});
  // Z/3: e, u, u^-1, and u^2 = u^-1 adds nothing.
  CHECK(enumerate_ball(graph({{"u", "Z/3"}}), 2).sizes() ==
        std::vector<std::size_t>{1, 3, 3});
  auto z2 = graph({{"a", "Z"}, {"b", "Z"}}, {{"a", "b"}});
  CHECK(enumerate_ball(z2, 1).sizes() == std::vector<std::size_t>{1, 5});
  // Z^2 spheres grow linearly: 1, 4, 8, 12.
  CHECK(enumerate_ball(z2, 3).sizes() ==
        std::vector<std::size_t>{1, 5, 13, 25});
}

TEST_CASE("ball invariants") {
  auto g = graph({{"a", "Z"}, {"b", "Z/2"}, {"c", "Z/3"}}, {{"a", "b"}});
  Ball ball = enumerate_ball(g, 4);
  CHECK(ball.sizes().front() == 1);
  CHECK(std::is_sorted(ball.sizes().begin(), ball.sizes().end()));
  CHECK(ball.elements().front().empty());
  std::set<std::string> keys;
  for (std::size_t i = 0; i < ball.elements().size(); ++i) {
    const Word& x = ball.elements()[i];
    CHECK(keys.insert(element_key(x)).second);
    CHECK(geodesic_length(x) == ball.distance(i));
    CHECK(ball.distance(i) <= 4);
  }
}

TEST_CASE("ball radius and size caps") {
  auto g = graph({{"a", "Z"}, {"b", "Z"}});
  CHECK_THROWS_AS(enumerate_ball(g, 7), std::out_of_range);
  CHECK_NOTHROW(enumerate_ball(g, 7, BallOptions{8, 1'000'000}));
  CHECK_THROWS_AS(enumerate_ball(g, 5, BallOptions{6, 100}),
                  std::out_of_range);
  CHECK_THROWS_AS(enumerate_ball(graph({{"a", "Z/6"}}), 1),
                  std::invalid_argument);
}

TEST_CASE("ball sizes are invariant under relabeling") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = testing::random_graph(rng, 4, {"Z", "Z/2", "Z/3", "Z/4"});
    auto h = testing::permuted(g, testing::random_permutation(rng, 4));
    CHECK(enumerate_ball(g, 3).sizes() == enumerate_ball(h, 3).sizes());
  }
}

TEST_CASE("conjugacy_min_length") {
  auto g = graph({{"a", "Z"}, {"u", "Z/2"}});
  auto c = Context::make(g);
  CHECK(conjugacy_min_length(g, parse_word(c, "a u a^-1"), 2) == 1);
  CHECK(conjugacy_min_length(g, parse_word(c, "a u"), 3) == 2);
}

TEST_CASE("commutation_table") {
  auto path = graph({{"a", "Z"}, {"b", "Z"}, {"c", "Z"}},
                    {{"a", "b"}, {"b", "c"}});
  auto pc = Context::make(path);
  Ball ball = enumerate_ball(pc, 2);
  CHECK(commutation_table(ball, parse_word(pc, "b")).size() ==
        ball.elements().size());
  CHECK(commutation_table(ball, Word(pc)).size() == ball.elements().size());

  auto dihedral = graph({{"a", "Z/2"}, {"b", "Z/2"}});
  auto dc = Context::make(dihedral);
  auto table = commutation_table(dihedral, parse_word(dc, "a"), 2);
  std::vector<std::string> names;
  for (const Word& x : table) names.push_back(x.to_string());
  CHECK(names == std::vector<std::string>{"1", "a"});
}
