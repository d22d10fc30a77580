#include <doctest.h>

#include "braidforms/brick.hpp"
#include "braidforms/classify.hpp"
#include "braidforms/form.hpp"

using namespace braidforms;

namespace {

Classification run(const std::string& text) { return classify(parse(text)); }

std::pair<BigInt, Inertia> invariants(const std::string& text) {
  SymForm m = symmetrized_form(linking_graph(parse(text)));
  return {determinant(m), signature(m)};
}

}  // namespace

TEST_CASE("torus knots of the E-series") {
  Classification e8 = run("1^5 2 1^3 2");
  CHECK(e8.verdict == Verdict::Spherical);
  CHECK(to_string(e8.dynkin) == "E8");
  CHECK(e8.torus == "T(3,5)");
  CHECK(e8.components == 1);

  Classification e6 = run("(3,3)");
  CHECK(to_string(e6.dynkin) == "E6");
  CHECK(e6.torus == "T(3,4)");

  Classification e7 = run("(3,4)");
  CHECK(to_string(e7.dynkin) == "E7");
  CHECK_FALSE(e7.torus.has_value());
}

TEST_CASE("(2,2,2) and (2,2,3) are E7 and E8") {
  Classification a = run("(2,2,2)");
  CHECK(a.verdict == Verdict::Spherical);
  CHECK(to_string(a.dynkin) == "E7");
  auto [det_a, sig_a] = invariants("(2,2,2)");
  CHECK(det_a == 2);
  CHECK(sig_a == Inertia{7, 0, 0});

  Classification b = run("(2,2,3)");
  CHECK(to_string(b.dynkin) == "E8");
  auto [det_b, sig_b] = invariants("(2,2,3)");
  CHECK(det_b == 1);
  CHECK(sig_b == Inertia{8, 0, 0});
}

TEST_CASE("A-series and D-series") {
  Classification a = run("1^9");
  CHECK(a.verdict == Verdict::Spherical);
  CHECK(to_string(a.dynkin) == "A8");
  CHECK(a.torus == "T(2,9)");
  CHECK(a.components == 1);

  Classification d = run("1^4 2 1^2 2");
  CHECK(d.verdict == Verdict::Spherical);
  CHECK(to_string(d.dynkin) == "D6");
  CHECK_FALSE(d.torus.has_value());

  Classification unknot = run("1");
  CHECK(unknot.verdict == Verdict::Spherical);
  CHECK(to_string(unknot.dynkin) == "A0");
  CHECK(unknot.torus == "T(2,1)");
}

TEST_CASE("connected sums along disconnected linking graphs") {
  Classification s = run("1 2 2 1");
  CHECK(s.verdict == Verdict::ConnectedSum);
  REQUIRE(s.parts.size() == 2);
  for (const auto& f : s.parts) {
    CHECK(f.verdict == Verdict::Spherical);
    CHECK(f.dynkin == DynkinType{DynkinClass::A, 1});
    CHECK(f.torus == "T(2,2)");
  }
  CHECK(s.positive);
  CHECK(s.betti == s.parts[0].betti + s.parts[1].betti);
}

TEST_CASE("splits at missing interior generators") {
  Classification s = classify(parse("strands=4; 1^3 3^2"));
  CHECK(s.verdict == Verdict::Split);
  REQUIRE(s.parts.size() == 2);
  CHECK(to_string(s.parts[0].dynkin) == "A2");
  CHECK(to_string(s.parts[1].dynkin) == "A1");
}

TEST_CASE("figure-4 rewrite instances agree on all invariants") {
  Classification lhs = run("(2,4,0,0,0,0)");
  Classification rhs = run("(4,6)");
  CHECK(lhs.verdict == rhs.verdict);
  CHECK(lhs.betti == rhs.betti);
  CHECK(lhs.components == rhs.components);
  CHECK(lhs.det == rhs.det);
  CHECK(lhs.inertia == rhs.inertia);

  for (int a = 2; a <= 6; ++a)
    for (int b = 1; b <= 6; ++b) {
      std::vector<int> left{2, a};
      for (int z = 1; z < b; ++z) left.push_back(0);
      BraidWord wl = expand_tuple(left);
      BraidWord wr = expand_tuple({a, b + 1});
      CHECK(first_betti(wl) == first_betti(wr));
      CHECK(closure_components(wl) == closure_components(wr));
      SymForm ml = symmetrized_form(linking_graph(wl));
      SymForm mr = symmetrized_form(linking_graph(wr));
      CHECK(determinant(ml) == determinant(mr));
      CHECK(signature(ml) == signature(mr));
    }
}

TEST_CASE("non-positive three-braids carry certificates") {
  Classification t = run("(4,4)");
  CHECK(t.verdict == Verdict::NonPositive);
  REQUIRE(t.certificate.has_value());
  CHECK(t.certificate->inertia == Inertia{7, 1, 0});
  REQUIRE(t.certificate->witness.has_value());
  CHECK(t.certificate->witness->target == MinorTarget::T);

  Classification x = run("(2,0,2,0)");
  CHECK(x.verdict == Verdict::NonPositive);
  CHECK(x.inertia == Inertia{5, 1, 0});
}

TEST_CASE("positive forms on four strands reduce by conjugation instead of lying") {
  // sigma1 sigma2 sigma1 sigma2 sigma3 sigma2^2 sigma3 admits no direct
  // destabilization but is conjugation-equivalent to a reducible word; its
  // closure is the D5 link.
  BraidWord w = parse("1 2 1 2 3 2^2 3");
  SymForm m = symmetrized_form(linking_graph(w));
  REQUIRE(is_positive_definite(m));

  Classification c = classify(w);
  CHECK(c.verdict == Verdict::Spherical);
  CHECK_FALSE(c.anomaly);
  CHECK(to_string(c.dynkin) == "D5");
  CHECK(c.det == 4);
}

TEST_CASE("verdict json shape") {
  nlohmann::json j = to_json(run("1^5 2 1^3 2"));
  CHECK(j["word"] == "1^5 2 1^3 2");
  CHECK(j["strands"] == 3);
  CHECK(j["length"] == 10);
  CHECK(j["betti"] == 8);
  CHECK(j["components"] == 1);
  CHECK(j["det"] == 1);
  CHECK(j["signature"] == nlohmann::json({8, 0, 0}));
  CHECK(j["verdict"] == "Spherical");
  CHECK(j["dynkin"] == "E8");
  CHECK(j["torus"] == "T(3,5)");
  CHECK_FALSE(j.contains("anomaly"));

  nlohmann::json sum = to_json(run("1 2 2 1"));
  CHECK(sum["verdict"] == "ConnectedSum");
  CHECK(sum["factors"].size() == 2);

  nlohmann::json np = to_json(run("(4,4)"));
  CHECK(np["verdict"] == "NonPositive");
  REQUIRE(np.contains("witness"));
  CHECK(np["witness"]["target"] == "T");
  auto round = witness_from_json(np["witness"]);
  REQUIRE(round.has_value());
  CHECK(replay_witness(parse("(4,4)"), *round));
}
