#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "braidforms/braid.hpp"
#include "braidforms/dynkin.hpp"
#include "braidforms/form.hpp"

namespace braidforms {

struct SearchBudget {
  int max_depth = 16;
  long max_states = 200000;
  bool allow_stabilize = true;
  int max_stabilize = 2;
};

// A replayable certificate that the input's fibre surface contains one of the
// four forbidden minors: applying `moves` in order to the input word yields
// `terminal`, whose linking graph is the target's affine tree.
struct MinorWitness {
  MinorTarget target{};
  std::vector<Move> moves;
  BraidWord terminal;
};

// Shared search cache, safe across searches and threads.
//
// Negative side: fully-explored no-witness regions. An entry says that from
// that state no witness is reachable within the recorded move and
// stabilization allowance; lookups prune provably dead regions only, so
// answers stay exact.
//
// Positive side: witness chain links. Once some search has walked a state to
// an affine terminal, later searches splice into that tail (re-aligned by a
// rotation) instead of re-deriving it; spliced witnesses are replay-checked
// before being returned.
class WitnessMemo {
 public:
  WitnessMemo();
  ~WitnessMemo();
  WitnessMemo(const WitnessMemo&) = delete;
  WitnessMemo& operator=(const WitnessMemo&) = delete;

  std::size_t size() const;

  struct Impl;

 private:
  friend class MinorSearch;
  std::unique_ptr<Impl> impl_;
};

// Breadth-first search over the move space, memoised on a rotation-canonical
// word key. Returns the first witness found; nullopt means no witness within
// the budget, not a positivity claim.
std::optional<MinorWitness> find_minor(const BraidWord& w, const SearchBudget& budget,
                                       WitnessMemo* shared = nullptr);

// One search over the union of every seed's reachable region, depth counted
// from the nearest seed. Covers at least as much of each seed's move space as
// a per-seed run with the same depth budget, in one pass. Returns the seed
// that reached a terminal, when any does.
struct MultiMinorResult {
  std::size_t seed_index = 0;
  MinorWitness witness;
};
std::optional<MultiMinorResult> find_minor_multi(const std::vector<BraidWord>& seeds,
                                                 const SearchBudget& budget,
                                                 long global_max_states,
                                                 WitnessMemo* shared = nullptr);

// Replays the witness through apply_move and checks the terminal graph.
bool replay_witness(const BraidWord& start, const MinorWitness& wit);

struct Certificate {
  bool positive = false;  // positive definite symmetrised form
  Inertia inertia;
  std::optional<MinorWitness> witness;  // evidence for the non-positive case
};

// The decision procedure: exact definiteness of the symmetrised form, with a
// best-effort minor witness attached to non-positive verdicts.
Certificate certify_nonpositive(const BraidWord& w, const SearchBudget& budget,
                                WitnessMemo* shared = nullptr);

}  // namespace braidforms
