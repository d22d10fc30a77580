#include <doctest.h>

#include <random>

#include "braidforms/braid.hpp"
#include "braidforms/brick.hpp"

using namespace braidforms;

TEST_CASE("bricks: consecutive same-column pairs") {
  auto b1 = bricks(parse("1^3"));
  REQUIRE(b1.size() == 2);
  CHECK(b1[0] == Brick{1, 1, 2});
  CHECK(b1[1] == Brick{1, 2, 3});

  auto b2 = bricks(parse("1 2 2 1"));
  REQUIRE(b2.size() == 2);
  CHECK(b2[0] == Brick{1, 1, 4});
  CHECK(b2[1] == Brick{2, 2, 3});

  CHECK(bricks(parse("1 2")).empty());
}

TEST_CASE("linking_graph: trefoil presentations and the unlinked pair") {
  LinkingGraph tre = linking_graph(parse("1^3"));
  REQUIRE(tre.vertex_count() == 2);
  CHECK(tre.edges == std::vector<std::pair<int, int>>{{0, 1}});

  LinkingGraph sum = linking_graph(parse("1 2 2 1"));
  CHECK(sum.vertex_count() == 2);
  CHECK(sum.edge_count() == 0);

  // interleaved adjacent-column bricks are linked
  CHECK(linking_graph(parse("1 2 1 2")).edge_count() == 1);
  CHECK(linking_graph(parse("2 1 2 1")).edge_count() == 1);
}

TEST_CASE("linking_graph: the X braid is a 4-star around brick (3,6)") {
  LinkingGraph g = linking_graph(parse("1 2^2 1 3 2^2 3"));
  REQUIRE(g.vertex_count() == 5);
  int center = -1;
  for (int v = 0; v < 5; ++v)
    if (g.adjacency[v].size() == 4) center = v;
  REQUIRE(center >= 0);
  CHECK(g.vertices[center] == Brick{2, 3, 6});
  CHECK(g.edge_count() == 4);
  for (int v = 0; v < 5; ++v)
    if (v != center) CHECK(g.adjacency[v].size() == 1);
}

TEST_CASE("vertex count equals first_betti") {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 400; ++it) {
    BraidWord w{2 + static_cast<int>(rng() % 4), {}};
    int len = static_cast<int>(rng() % 13);
    for (int i = 0; i < len; ++i) w.letters.push_back(1 + static_cast<int>(rng() % (w.strands - 1)));
    CHECK(linking_graph(w).vertex_count() == first_betti(w));
  }
}

TEST_CASE("edge rule is symmetric") {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 200; ++it) {
    BraidWord w{4, {}};
    int len = 4 + static_cast<int>(rng() % 8);
    for (int i = 0; i < len; ++i) w.letters.push_back(1 + static_cast<int>(rng() % 3));
    auto bs = bricks(w);
    for (std::size_t i = 0; i < bs.size(); ++i)
      for (std::size_t j = 0; j < bs.size(); ++j)
        if (i != j) CHECK(linked(bs[i], bs[j]) == linked(bs[j], bs[i]));
  }
}

TEST_CASE("canonical_graph: isomorphism keys") {
  CHECK(canonical_graph(linking_graph(parse("1^3"))) ==
        canonical_graph(linking_graph(parse("strands=3; 2^3"))));
  CHECK(canonical_graph(linking_graph(parse("(4,4)"))) !=
        canonical_graph(linking_graph(parse("(6,3)"))));
  CHECK(canonical_graph(linking_graph(parse("1 2"))) ==
        canonical_graph(linking_graph(parse("strands=2;"))));
}

TEST_CASE("far commutation leaves the linking graph unchanged up to isomorphism") {
  std::mt19937_64 rng(9);
  int done = 0;
  while (done < 200) {
    BraidWord w{5, {}};
    int len = 4 + static_cast<int>(rng() % 8);
    for (int i = 0; i < len; ++i) w.letters.push_back(1 + static_cast<int>(rng() % 4));
    std::vector<Move> fits;
    for (const Move& m : site_moves(w))
      if (m.kind == MoveKind::FarCommutation) fits.push_back(m);
    if (fits.empty()) continue;
    Move m = fits[rng() % fits.size()];
    CHECK(canonical_graph(linking_graph(w)) ==
          canonical_graph(linking_graph(apply_move(w, m))));
    ++done;
  }
}
