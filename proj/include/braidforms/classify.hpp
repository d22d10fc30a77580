#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "braidforms/braid.hpp"
#include "braidforms/dynkin.hpp"
#include "braidforms/minors.hpp"

namespace braidforms {

enum class Verdict { Split, ConnectedSum, Spherical, NonPositive };

const char* to_string(Verdict v);

struct ClassifyOptions {
  bool metadata = true;      // exact det / inertia on every node
  bool certificates = true;  // witness search for non-positive leaves
  SearchBudget budget{};
  WitnessMemo* memo = nullptr;
  long conjugacy_cap = 200000;  // states for the reduction-by-conjugation hunt
};

struct Classification {
  Verdict verdict = Verdict::Spherical;
  BraidWord word;  // the (sub)word this node describes, renumbered
  int betti = 0;
  int components = 0;
  bool positive = false;  // symmetrised form positive definite

  bool has_metadata = false;
  BigInt det;
  Inertia inertia;

  DynkinType dynkin;                     // Spherical leaves
  std::optional<std::string> torus;      // torus-link name when applicable
  std::vector<Classification> parts;     // Split parts / ConnectedSum factors
  std::optional<Certificate> certificate;  // NonPositive leaves

  // Positive-definite form on >= 4 strands that no amount of conjugation-
  // assisted destabilization could reduce; would contradict the paper's
  // minimal-index claim, so it is surfaced loudly rather than folded away.
  bool anomaly = false;
};

Classification classify(const BraidWord& w, const ClassifyOptions& opts = {});

// A-type closures are T(2, n); E6 and E8 are the torus knots T(3,4), T(3,5).
// D-type and E7 closures have no torus name.
std::optional<std::string> torus_name(const DynkinType& t);

nlohmann::json to_json(const MinorWitness& wit);
std::optional<MinorWitness> witness_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Classification& c);

}  // namespace braidforms
