#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "braidforms/classify.hpp"

namespace braidforms {

enum class VerifyMode {
  Full,      // classify every word; witness search; theorem-1 agreement
  NoWitness, // classify every word; skip the witness search
  Min4Scan,  // fast scan for positive-definite prime factors on >= 4 strands
};

struct EnumSpec {
  int strands_lo = 2;
  int strands_hi = 3;
  int len_lo = 0;
  int len_hi = 8;
  bool dedup = true;   // process one representative per rotation class
  int workers = 1;
  VerifyMode mode = VerifyMode::Full;
  SearchBudget budget{};
  int hard_cap = 16;
};

struct VerifyReport {
  long long raw_words = 0;   // words iterated
  long long words = 0;       // processed after dedup
  long long split = 0, connected_sum = 0, spherical = 0, non_positive = 0;
  long long positive_words = 0, nonpositive_words = 0;
  long long agree = 0, witness_missing = 0, contradiction = 0;
  long long replay_failures = 0;
  long long min4_candidates = 0;     // words whose fast scan needed adjudication
  long long min4_pd_exceptions = 0;  // irreducible PD prime factors on >= 4 strands
  std::vector<std::string> anomalies;  // capped example words

  void merge(const VerifyReport& other);
  bool ok() const { return contradiction == 0 && replay_failures == 0 && min4_pd_exceptions == 0; }
};

nlohmann::json to_json(const EnumSpec& spec);
nlohmann::json to_json(const VerifyReport& r);

// Index-decoded word enumeration: word #i of given length over n-1 letters.
BraidWord word_from_index(int strands, int length, std::uint64_t index);
std::uint64_t words_of_length(int strands, int length);

// True when w.letters is the lexicographically least among its rotations;
// the dedup representative of its conjugation class.
bool is_rotation_canonical(const BraidWord& w);

// Serial reference implementation and the OpenMP kernel; both produce the
// same report (anomaly example order may differ in parallel runs).
VerifyReport run_verify_serial(const EnumSpec& spec);
VerifyReport run_verify_parallel(const EnumSpec& spec);
VerifyReport run_verify(const EnumSpec& spec);

// Streaming enumeration for the CLI: invokes the sink per processed word.
void enumerate_words(const EnumSpec& spec,
                     const std::function<void(const BraidWord&)>& sink);

}  // namespace braidforms
