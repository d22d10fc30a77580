#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace braidforms {

// A positive braid word: letters[k] = i means the generator sigma_i acting on
// strands i, i+1. All letters lie in [1, strands-1]. The empty word is allowed.
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  bool operator==(const BraidWord&) const = default;
  int length() const { return static_cast<int>(letters.size()); }
};

// Tuple shorthand for 3-braids: entries (a1, 0^{b1-1}, a2, 0^{b2-1}, ..).
// A nonzero entry a contributes sigma_1^a sigma_2, a zero contributes one
// extra sigma_2, so every block ends in a sigma_2 run of length b_k >= 1.
struct ThreeBraidTuple {
  std::vector<int> entries;

  bool operator==(const ThreeBraidTuple&) const = default;

  // (a_i, b_i) block decomposition.
  std::vector<std::pair<int, int>> blocks() const;
  BraidWord expand() const;
  std::string render() const;
};

BraidWord expand_tuple(const std::vector<int>& entries);

enum class MoveKind {
  BraidRelation,   // sigma_i sigma_j sigma_i -> sigma_j sigma_i sigma_j, |i-j|=1
  FarCommutation,  // swap adjacent letters with |i-j| >= 2
  CyclicRotation,  // move the first `pos` letters to the end (conjugation)
  DeleteLetter,    // drop one letter (subword surface minor)
  Destabilize,     // remove the unique extreme generator, detail=+1 top / -1 bottom
  Stabilize,       // append sigma_n, one new strand on top
};

struct Move {
  MoveKind kind{};
  int pos = 0;     // 1-based site, or rotation amount for CyclicRotation
  int detail = 0;  // Destabilize: +1 top, -1 bottom; otherwise 0

  bool operator==(const Move&) const = default;
};

const char* to_string(MoveKind kind);
std::optional<MoveKind> move_kind_from_string(const std::string& name);

// Throws std::invalid_argument when the move is illegal at its site.
BraidWord apply_move(const BraidWord& w, const Move& m);

// All moves legal on w, excluding Stabilize (always legal) and rotations
// beyond amount 1..len-1.
std::vector<Move> site_moves(const BraidWord& w);

// Text grammar: optional "strands=INT;" header then INT('^'INT)? tokens, or
// the 3-braid tuple shortcut "(a1,a2,...)". Throws std::invalid_argument.
BraidWord parse(const std::string& text);
std::string render(const BraidWord& w);

// Number of cycles of the closure permutation.
int closure_components(const BraidWord& w);

// First Betti number of the fibre surface = brick count
// = sum over columns i of max(occurrences_i - 1, 0).
int first_betti(const BraidWord& w);

int column_occurrences(const BraidWord& w, int column);

// Result of the 3-braid rewrite: either a tuple with all a_i >= 2, b_k >= 1,
// or a word on <= 2 strands reached by destabilization.
using ThreeBraidNormalForm = std::variant<ThreeBraidTuple, BraidWord>;

ThreeBraidNormalForm normal_form_3braid(const BraidWord& w);

}  // namespace braidforms
