#include "braidforms/braid.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace braidforms {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

void check_word(const BraidWord& w) {
  if (w.strands < 1) fail("strand count must be positive");
  for (int x : w.letters)
    if (x < 1 || x >= w.strands) fail("generator index out of range for strand count");
}

}  // namespace

std::vector<std::pair<int, int>> ThreeBraidTuple::blocks() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i] == 0) {
      if (out.empty()) fail("tuple may not start with a zero entry");
      ++out.back().second;
    } else {
      out.push_back({entries[i], 1});
    }
  }
  return out;
}

BraidWord ThreeBraidTuple::expand() const { return expand_tuple(entries); }

std::string ThreeBraidTuple::render() const {
  std::string s = "(";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(entries[i]);
  }
  s += ")";
  return s;
}

BraidWord expand_tuple(const std::vector<int>& entries) {
  if (entries.empty()) fail("empty tuple");
  BraidWord w;
  w.strands = 3;
  for (int e : entries) {
    if (e < 0) fail("negative tuple entry");
    for (int k = 0; k < e; ++k) w.letters.push_back(1);
    w.letters.push_back(2);
  }
  return w;
}

const char* to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::BraidRelation: return "BraidRelation";
    case MoveKind::FarCommutation: return "FarCommutation";
    case MoveKind::CyclicRotation: return "CyclicRotation";
    case MoveKind::DeleteLetter: return "DeleteLetter";
    case MoveKind::Destabilize: return "Destabilize";
    case MoveKind::Stabilize: return "Stabilize";
  }
  return "?";
}

std::optional<MoveKind> move_kind_from_string(const std::string& name) {
  static const std::pair<const char*, MoveKind> table[] = {
      {"BraidRelation", MoveKind::BraidRelation},
      {"FarCommutation", MoveKind::FarCommutation},
      {"CyclicRotation", MoveKind::CyclicRotation},
      {"DeleteLetter", MoveKind::DeleteLetter},
      {"Destabilize", MoveKind::Destabilize},
      {"Stabilize", MoveKind::Stabilize},
  };
  for (auto& [s, k] : table)
    if (name == s) return k;
  return std::nullopt;
}

BraidWord apply_move(const BraidWord& w, const Move& m) {
  const int L = w.length();
  BraidWord out = w;
  switch (m.kind) {
    case MoveKind::BraidRelation: {
      if (m.pos < 1 || m.pos + 2 > L) fail("braid relation site out of range");
      int a = w.letters[m.pos - 1], b = w.letters[m.pos], c = w.letters[m.pos + 1];
      if (a != c || std::abs(a - b) != 1) fail("no braid relation at site");
      out.letters[m.pos - 1] = b;
      out.letters[m.pos] = a;
      out.letters[m.pos + 1] = b;
      return out;
    }
    case MoveKind::FarCommutation: {
      if (m.pos < 1 || m.pos + 1 > L) fail("commutation site out of range");
      int a = w.letters[m.pos - 1], b = w.letters[m.pos];
      if (std::abs(a - b) < 2) fail("letters do not commute");
      std::swap(out.letters[m.pos - 1], out.letters[m.pos]);
      return out;
    }
    case MoveKind::CyclicRotation: {
      if (L == 0) fail("cannot rotate the empty word");
      int k = ((m.pos % L) + L) % L;
      std::rotate(out.letters.begin(), out.letters.begin() + k, out.letters.end());
      return out;
    }
    case MoveKind::DeleteLetter: {
      if (m.pos < 1 || m.pos > L) fail("delete position out of range");
      out.letters.erase(out.letters.begin() + (m.pos - 1));
      return out;
    }
    case MoveKind::Destabilize: {
      if (m.pos < 1 || m.pos > L) fail("destabilize position out of range");
      int g = w.letters[m.pos - 1];
      if (std::count(w.letters.begin(), w.letters.end(), g) != 1)
        fail("generator does not occur exactly once");
      auto [lo, hi] = std::minmax_element(w.letters.begin(), w.letters.end());
      if (m.detail == 1) {
        if (g != *hi) fail("not the top generator");
      } else if (m.detail == -1) {
        if (g != *lo || g != 1) fail("bottom destabilization requires generator 1");
      } else {
        fail("destabilize detail must be +1 or -1");
      }
      out.letters.erase(out.letters.begin() + (m.pos - 1));
      if (m.detail == -1) {
        for (int& x : out.letters) --x;
      }
      if (out.strands < 2) fail("cannot destabilize a 1-strand braid");
      --out.strands;
      check_word(out);
      return out;
    }
    case MoveKind::Stabilize: {
      out.letters.push_back(w.strands);
      ++out.strands;
      return out;
    }
  }
  fail("unknown move kind");
}

std::vector<Move> site_moves(const BraidWord& w) {
  std::vector<Move> out;
  const int L = w.length();
  for (int p = 1; p + 2 <= L; ++p) {
    if (w.letters[p - 1] == w.letters[p + 1] && std::abs(w.letters[p - 1] - w.letters[p]) == 1)
      out.push_back({MoveKind::BraidRelation, p, 0});
  }
  for (int p = 1; p + 1 <= L; ++p) {
    if (std::abs(w.letters[p - 1] - w.letters[p]) >= 2)
      out.push_back({MoveKind::FarCommutation, p, 0});
  }
  for (int p = 1; p <= L; ++p) out.push_back({MoveKind::DeleteLetter, p, 0});
  if (L > 0) {
    auto [lo, hi] = std::minmax_element(w.letters.begin(), w.letters.end());
    if (std::count(w.letters.begin(), w.letters.end(), *hi) == 1) {
      int p = static_cast<int>(std::find(w.letters.begin(), w.letters.end(), *hi) -
                               w.letters.begin()) + 1;
      out.push_back({MoveKind::Destabilize, p, 1});
    }
    if (*lo == 1 && *lo != *hi && std::count(w.letters.begin(), w.letters.end(), *lo) == 1) {
      int p = static_cast<int>(std::find(w.letters.begin(), w.letters.end(), *lo) -
                               w.letters.begin()) + 1;
      out.push_back({MoveKind::Destabilize, p, -1});
    }
  }
  return out;
}

namespace {

BraidWord parse_tuple(const std::string& text) {
  std::vector<int> entries;
  std::size_t i = text.find('(') + 1;
  std::size_t close = text.rfind(')');
  if (close == std::string::npos) fail("unterminated tuple");
  std::string body = text.substr(i, close - i);
  for (std::size_t k = close + 1; k < text.size(); ++k)
    if (!std::isspace(static_cast<unsigned char>(text[k]))) fail("trailing text after tuple");
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t a = item.find_first_not_of(" \t");
    std::size_t b = item.find_last_not_of(" \t");
    if (a == std::string::npos) fail("empty tuple entry");
    item = item.substr(a, b - a + 1);
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(item, &used);
    } catch (...) {
      fail("malformed tuple entry '" + item + "'");
    }
    if (used != item.size()) fail("malformed tuple entry '" + item + "'");
    if (v < 0) fail("negative tuple entry");
    entries.push_back(static_cast<int>(v));
  }
  return expand_tuple(entries);
}

}  // namespace

BraidWord parse(const std::string& text) {
  std::size_t start = text.find_first_not_of(" \t\r\n");
  if (start != std::string::npos && text[start] == '(') return parse_tuple(text);

  std::string body = text;
  int declared = 0;
  std::size_t semi = text.find(';');
  if (semi != std::string::npos) {
    std::string head = text.substr(0, semi);
    head.erase(std::remove_if(head.begin(), head.end(),
                              [](unsigned char c) { return std::isspace(c); }),
               head.end());
    if (head.rfind("strands=", 0) != 0) fail("malformed header, expected strands=INT;");
    std::string num = head.substr(8);
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(num, &used);
    } catch (...) {
      fail("malformed strand count");
    }
    if (used != num.size() || v < 1) fail("malformed strand count");
    declared = static_cast<int>(v);
    body = text.substr(semi + 1);
  }

  std::vector<int> letters;
  int max_index = 0;
  std::stringstream ss(body);
  std::string tok;
  while (ss >> tok) {
    int idx = 0, exp = 1;
    std::size_t caret = tok.find('^');
    std::string head = (caret == std::string::npos) ? tok : tok.substr(0, caret);
    try {
      std::size_t used = 0;
      long v = std::stol(head, &used);
      if (used != head.size()) throw std::exception();
      idx = static_cast<int>(v);
    } catch (...) {
      fail("malformed token '" + tok + "'");
    }
    if (caret != std::string::npos) {
      std::string tail = tok.substr(caret + 1);
      try {
        std::size_t used = 0;
        long v = std::stol(tail, &used);
        if (used != tail.size()) throw std::exception();
        exp = static_cast<int>(v);
      } catch (...) {
        fail("malformed exponent in '" + tok + "'");
      }
      if (exp < 0) fail("negative exponent in '" + tok + "'");
    }
    if (idx < 1) fail("generator index must be >= 1");
    for (int k = 0; k < exp; ++k) letters.push_back(idx);
    if (exp > 0) max_index = std::max(max_index, idx);
  }

  BraidWord w;
  w.letters = std::move(letters);
  w.strands = declared ? declared : max_index + 1;
  if (declared && max_index >= declared)
    fail("generator index >= declared strand count");
  return w;
}

std::string render(const BraidWord& w) {
  if (w.letters.empty()) return "strands=" + std::to_string(w.strands) + ";";
  int max_index = *std::max_element(w.letters.begin(), w.letters.end());
  std::string out;
  if (w.strands != max_index + 1) out = "strands=" + std::to_string(w.strands) + "; ";
  std::size_t i = 0;
  while (i < w.letters.size()) {
    std::size_t j = i;
    while (j < w.letters.size() && w.letters[j] == w.letters[i]) ++j;
    if (i) out += " ";
    out += std::to_string(w.letters[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

int closure_components(const BraidWord& w) {
  std::vector<int> perm(w.strands);
  std::iota(perm.begin(), perm.end(), 0);
  for (int x : w.letters) std::swap(perm[x - 1], perm[x]);
  int cycles = 0;
  std::vector<bool> seen(w.strands, false);
  for (int s = 0; s < w.strands; ++s) {
    if (seen[s]) continue;
    ++cycles;
    for (int t = s; !seen[t]; t = perm[t]) seen[t] = true;
  }
  return cycles;
}

int column_occurrences(const BraidWord& w, int column) {
  return static_cast<int>(std::count(w.letters.begin(), w.letters.end(), column));
}

int first_betti(const BraidWord& w) {
  std::vector<int> count(w.strands, 0);
  for (int x : w.letters) ++count[x - 1];
  int betti = 0;
  for (int c : count) betti += std::max(c - 1, 0);
  return betti;
}

namespace {

// Rotate so that the word starts a maximal sigma_1 run (first letter 1, last
// letter 2), using the smallest rotation amount. Requires both letters present.
BraidWord rotate_to_run_start(const BraidWord& w) {
  const int L = w.length();
  for (int k = 0; k < L; ++k) {
    int prev = w.letters[(k + L - 1) % L];
    if (w.letters[k] == 1 && prev == 2) {
      return k == 0 ? w : apply_move(w, {MoveKind::CyclicRotation, k, 0});
    }
  }
  fail("word has no run boundary");
}

}  // namespace

ThreeBraidNormalForm normal_form_3braid(const BraidWord& input) {
  if (input.strands != 3) fail("normal_form_3braid expects a 3-strand word");
  BraidWord w = input;
  for (;;) {
    int c1 = column_occurrences(w, 1);
    int c2 = column_occurrences(w, 2);
    if (c1 == 0 && c2 == 0) return BraidWord{1, {}};
    if (c2 == 0) return BraidWord{2, w.letters};
    if (c1 == 0) {
      BraidWord r{2, {}};
      r.letters.assign(w.letters.size(), 1);
      return r;
    }
    if (c2 == 1) {
      int p = static_cast<int>(std::find(w.letters.begin(), w.letters.end(), 2) -
                               w.letters.begin()) + 1;
      return apply_move(w, {MoveKind::Destabilize, p, 1});
    }
    if (c1 == 1) {
      int p = static_cast<int>(std::find(w.letters.begin(), w.letters.end(), 1) -
                               w.letters.begin()) + 1;
      return apply_move(w, {MoveKind::Destabilize, p, -1});
    }

    w = rotate_to_run_start(w);
    const int L = w.length();
    // Leftmost isolated sigma_1 (cyclic pattern 2,1,2). After the rotation the
    // word starts with sigma_1 and ends with sigma_2, so any isolated sigma_1
    // after the first run is a linear 2,1,2 site; the first run has length >= 1
    // and is isolated only if it has length 1, which the rotation rules out
    // unless the whole run structure is a=1 (then letters[0..1] = 1,2 and the
    // site wraps; rotate once more to linearize it).
    int site = 0;  // 1-based start of a 2,1,2 pattern
    for (int p = 1; p + 2 <= L; ++p) {
      if (w.letters[p - 1] == 2 && w.letters[p] == 1 && w.letters[p + 1] == 2) {
        site = p;
        break;
      }
    }
    bool first_isolated = (L >= 2 && w.letters[0] == 1 && w.letters[1] == 2);
    if (site == 0 && !first_isolated) {
      // All sigma_1 runs have length >= 2: read off the tuple.
      ThreeBraidTuple t;
      int i = 0;
      while (i < L) {
        int a = 0;
        while (i < L && w.letters[i] == 1) ++a, ++i;
        int b = 0;
        while (i < L && w.letters[i] == 2) ++b, ++i;
        t.entries.push_back(a);
        for (int z = 1; z < b; ++z) t.entries.push_back(0);
      }
      return t;
    }
    if (site == 0) {
      // Isolated first letter: rotate by L-1 so the wrapped 2,1,2 is linear.
      w = apply_move(w, {MoveKind::CyclicRotation, L - 1, 0});
      site = 1;
    }
    w = apply_move(w, {MoveKind::BraidRelation, site, 0});
  }
}

}  // namespace braidforms
