#include <doctest.h>

#include <random>
#include <set>

#include "braidforms/braid.hpp"
#include "braidforms/brick.hpp"
#include "braidforms/form.hpp"

using namespace braidforms;

namespace {

BraidWord random_word(std::mt19937_64& rng, int max_strands, int max_len) {
  std::uniform_int_distribution<int> sd(2, max_strands), ld(0, max_len);
  BraidWord w;
  w.strands = sd(rng);
  int len = ld(rng);
  std::uniform_int_distribution<int> gd(1, w.strands - 1);
  for (int i = 0; i < len; ++i) w.letters.push_back(gd(rng));
  return w;
}

std::pair<BigInt, Inertia> form_invariants(const BraidWord& w) {
  SymForm m = symmetrized_form(linking_graph(w));
  return {determinant(m), signature(m)};
}

}  // namespace

TEST_CASE("parse: tuple shortcut") {
  BraidWord t = parse("(4,4)");
  CHECK(t.strands == 3);
  CHECK(t.letters == std::vector<int>{1, 1, 1, 1, 2, 1, 1, 1, 1, 2});

  BraidWord x = parse("(2,0,2,0)");
  CHECK(x.letters == std::vector<int>{1, 1, 2, 2, 1, 1, 2, 2});

  CHECK(parse("(3,0,3)").letters == std::vector<int>{1, 1, 1, 2, 2, 1, 1, 1, 2});
}

TEST_CASE("parse: generator syntax") {
  BraidWord w = parse("1^2");
  CHECK(w.strands == 2);
  CHECK(w.letters == std::vector<int>{1, 1});

  BraidWord h = parse("strands=4; 1 3");
  CHECK(h.strands == 4);
  CHECK(h.letters == std::vector<int>{1, 3});

  CHECK(parse("1 1 2 1^3").letters == std::vector<int>{1, 1, 2, 1, 1, 1});
  CHECK(parse("strands=3;").letters.empty());
  CHECK(parse("strands=3;").strands == 3);
}

TEST_CASE("parse: errors") {
  CHECK_THROWS_AS(parse("1^-2"), std::invalid_argument);
  CHECK_THROWS_AS(parse("(4,-4)"), std::invalid_argument);
  CHECK_THROWS_AS(parse("strands=2; 2"), std::invalid_argument);
  CHECK_THROWS_AS(parse("x 1"), std::invalid_argument);
  CHECK_THROWS_AS(parse("0"), std::invalid_argument);
  CHECK_THROWS_AS(parse("(4,4) junk"), std::invalid_argument);
  CHECK_THROWS_AS(parse("()"), std::invalid_argument);
}

TEST_CASE("parse . render is the identity on canonical renderings") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 500; ++it) {
    BraidWord w = random_word(rng, 6, 14);
    BraidWord back = parse(render(w));
    CHECK(back == w);
    CHECK(render(back) == render(w));
  }
  CHECK(render(parse("(4,4)")) == "1^4 2 1^4 2");
}

TEST_CASE("closure_components") {
  CHECK(closure_components(parse("1^3")) == 1);
  CHECK(closure_components(parse("1^2")) == 2);
  CHECK(closure_components(parse("1^3 2 1^3 2")) == 1);  // T(3,4)
  CHECK(closure_components(parse("strands=4;")) == 4);
}

TEST_CASE("first_betti") {
  CHECK(first_betti(parse("1^4 2 1^4 2")) == 8);
  CHECK(first_betti(parse("1 2^2 1 3 2^2 3")) == 5);
  CHECK(first_betti(BraidWord{3, {}}) == 0);
}

TEST_CASE("apply_move: examples") {
  BraidWord w = parse("1 2 1");
  BraidWord r = apply_move(w, {MoveKind::BraidRelation, 1, 0});
  CHECK(r.letters == std::vector<int>{2, 1, 2});

  BraidWord c = parse("2 1^4 2 1^4");
  CHECK(apply_move(c, {MoveKind::CyclicRotation, 1, 0}) == parse("1^4 2 1^4 2"));

  CHECK(apply_move(parse("1^3"), {MoveKind::DeleteLetter, 3, 0}) == parse("1^2"));

  BraidWord s = apply_move(parse("1^2"), {MoveKind::Stabilize, 0, 0});
  CHECK(s.strands == 3);
  CHECK(s.letters == std::vector<int>{1, 1, 2});

  BraidWord d = apply_move(s, {MoveKind::Destabilize, 3, 1});
  CHECK(d == parse("1^2"));

  BraidWord b = apply_move(parse("1 2^3"), {MoveKind::Destabilize, 1, -1});
  CHECK(b == parse("1^3"));
}

TEST_CASE("apply_move: illegal sites throw") {
  CHECK_THROWS_AS(apply_move(parse("1 1 1"), {MoveKind::BraidRelation, 1, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(apply_move(parse("1 2"), {MoveKind::FarCommutation, 1, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(apply_move(parse("1^2"), {MoveKind::Destabilize, 1, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(apply_move(parse("1^3"), {MoveKind::DeleteLetter, 4, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(apply_move(BraidWord{2, {}}, {MoveKind::CyclicRotation, 1, 0}),
                  std::invalid_argument);
}

TEST_CASE("link-preserving moves fix length, strands, betti, components, det, signature") {
  std::mt19937_64 rng(11);
  int checked = 0;
  while (checked < 400) {
    BraidWord w = random_word(rng, 5, 12);
    if (w.letters.empty()) continue;
    auto before = form_invariants(w);
    std::vector<Move> moves;
    for (const Move& m : site_moves(w))
      if (m.kind == MoveKind::BraidRelation || m.kind == MoveKind::FarCommutation)
        moves.push_back(m);
    for (int k = 1; k < w.length(); ++k) moves.push_back({MoveKind::CyclicRotation, k, 0});
    if (moves.empty()) continue;
    Move m = moves[rng() % moves.size()];
    BraidWord v = apply_move(w, m);
    CHECK(v.length() == w.length());
    CHECK(v.strands == w.strands);
    CHECK(first_betti(v) == first_betti(w));
    CHECK(closure_components(v) == closure_components(w));
    auto after = form_invariants(v);
    CHECK(after.first == before.first);
    CHECK(after.second == before.second);
    ++checked;
  }
}

TEST_CASE("DeleteLetter drops length by one and never raises betti") {
  std::mt19937_64 rng(13);
  for (int it = 0; it < 300; ++it) {
    BraidWord w = random_word(rng, 5, 12);
    if (w.letters.empty()) continue;
    int p = 1 + static_cast<int>(rng() % w.length());
    BraidWord v = apply_move(w, {MoveKind::DeleteLetter, p, 0});
    CHECK(v.length() == w.length() - 1);
    CHECK(first_betti(v) <= first_betti(w));
  }
}

TEST_CASE("normal_form_3braid: fixtures") {
  auto nf = normal_form_3braid(parse("(4,4)"));
  REQUIRE(std::holds_alternative<ThreeBraidTuple>(nf));
  CHECK(std::get<ThreeBraidTuple>(nf).entries == std::vector<int>{4, 4});

  auto nf2 = normal_form_3braid(parse("2 1^6 2 1^3"));
  REQUIRE(std::holds_alternative<ThreeBraidTuple>(nf2));
  ThreeBraidTuple t2 = std::get<ThreeBraidTuple>(nf2);
  CHECK(t2.entries == std::vector<int>{6, 3});
  CHECK(canonical_graph(linking_graph(t2.expand())) ==
        canonical_graph(linking_graph(parse("(6,3)"))));

  auto nf3 = normal_form_3braid(parse("1 2 1"));
  REQUIRE(std::holds_alternative<BraidWord>(nf3));
  BraidWord r = std::get<BraidWord>(nf3);
  CHECK(r.strands == 2);
  CHECK(r.letters == std::vector<int>{1, 1});
  SymForm hopf = symmetrized_form(linking_graph(r));
  CHECK(hopf.dim == 1);
  CHECK(hopf.at(0, 0) == 2);  // the Hopf link form (2)
}

TEST_CASE("normal_form_3braid: exhaustive invariants, length <= 12") {
  for (int len = 0; len <= 12; ++len) {
    const std::uint64_t total = 1ull << len;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      BraidWord w{3, {}};
      for (int p = 0; p < len; ++p) w.letters.push_back((mask >> p & 1) ? 2 : 1);
      auto inv = form_invariants(w);
      auto nf = normal_form_3braid(w);
      BraidWord v;
      if (auto* t = std::get_if<ThreeBraidTuple>(&nf)) {
        for (auto [a, b] : t->blocks()) {
          CHECK(a >= 2);
          CHECK(b >= 1);
        }
        v = t->expand();
      } else {
        v = std::get<BraidWord>(nf);
      }
      CHECK(first_betti(v) == first_betti(w));
      bool both_generators = column_occurrences(w, 1) > 0 && column_occurrences(w, 2) > 0;
      if (both_generators) CHECK(closure_components(v) == closure_components(w));
      auto after = form_invariants(v);
      CHECK(after.first == inv.first);
      CHECK(after.second == inv.second);
    }
  }
}
