#include "braidforms/minors.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <mutex>
#include <unordered_map>

#include "braidforms/brick.hpp"

namespace braidforms {

namespace {

// Fixed-size word for the search core: no heap traffic on copies. Fits every
// state a default-budget search can reach from a word within the CLI length
// cap; anything larger falls back to string-keyed bookkeeping.
struct SmallWord {
  std::uint8_t strands = 1;
  std::uint8_t len = 0;
  std::int8_t a[18] = {};

  static bool fits(const BraidWord& w) {
    return w.length() <= 18 && w.strands <= 8;
  }
  static SmallWord of(const BraidWord& w) {
    SmallWord s;
    s.strands = static_cast<std::uint8_t>(w.strands);
    s.len = static_cast<std::uint8_t>(w.letters.size());
    for (int i = 0; i < s.len; ++i) s.a[i] = static_cast<std::int8_t>(w.letters[i]);
    return s;
  }
  BraidWord big() const {
    BraidWord w{strands, {}};
    w.letters.assign(a, a + len);
    return w;
  }
  bool operator==(const SmallWord& o) const {
    if (strands != o.strands || len != o.len) return false;
    return std::equal(a, a + len, o.a);
  }
};

// Booth's least-rotation algorithm, O(L).
int least_rotation_start(const std::int8_t* v, int n) {
  if (n == 0) return 0;
  static thread_local std::vector<int> f;
  f.assign(2 * n, -1);
  int k = 0;
  for (int j = 1; j < 2 * n; ++j) {
    int i = f[j - k - 1];
    while (i != -1 && v[j % n] != v[(k + i + 1) % n]) {
      if (v[j % n] < v[(k + i + 1) % n]) k = j - i - 1;
      i = f[i];
    }
    if (i == -1 && v[j % n] != v[(k + i + 1) % n]) {
      if (v[j % n] < v[(k + i + 1) % n]) k = j;
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  return k % n;
}

// Exact packed key of (least rotation, strands, length, stabs): 3 bits per
// letter works while letters stay <= 7, length <= 16.
bool pack_key(const SmallWord& w, int stabs, std::uint64_t& out) {
  if (w.len > 16 || w.strands > 8) return false;
  int s = least_rotation_start(w.a, w.len);
  std::uint64_t key = 0;
  for (int i = 0; i < w.len; ++i) {
    std::uint64_t letter = static_cast<std::uint64_t>(w.a[(s + i) % w.len]);
    if (letter > 7) return false;
    key = (key << 3) | letter;
  }
  key |= static_cast<std::uint64_t>(w.strands - 1) << 48;
  key |= static_cast<std::uint64_t>(w.len) << 51;
  key |= static_cast<std::uint64_t>(stabs) << 56;
  out = key;
  return true;
}

std::string string_key(const SmallWord& w, int stabs) {
  std::string key;
  key.reserve(w.len + 3);
  key.push_back(static_cast<char>('0' + w.strands));
  key.push_back(static_cast<char>('0' + stabs));
  key.push_back('|');
  int s = least_rotation_start(w.a, w.len);
  for (int i = 0; i < w.len; ++i)
    key.push_back(static_cast<char>('a' + w.a[(s + i) % w.len]));
  return key;
}

int cyclic_betti(const SmallWord& w) {
  int count[10] = {0};
  for (int i = 0; i < w.len; ++i) ++count[static_cast<int>(w.a[i])];
  int betti = 0;
  for (int c = 1; c < 10; ++c) betti += std::max(count[c] - 1, 0);
  return betti;
}

constexpr int kMinTargetBetti = 5;  // X has the smallest affine tree

std::optional<MinorTarget> goal_target(const SmallWord& w) {
  int b = cyclic_betti(w);
  if (b != 5 && b != 7 && b != 8 && b != 9) return std::nullopt;
  return is_affine_forbidden(linking_graph(w.big()));
}

struct Edge {
  SmallWord word;
  Move via[2];
  int nvia = 0;
  bool stab = false;
};

SmallWord rotate_sw(const SmallWord& w, int k) {
  SmallWord r = w;
  for (int i = 0; i < w.len; ++i) r.a[i] = w.a[(k + i) % w.len];
  return r;
}

// Children over cyclic sites: branching ~4L. Rotation prefixes appear only
// where a site wraps, so recorded moves replay verbatim.
int expand(const SmallWord& w, bool may_stabilize, Edge* out) {
  int n = 0;
  const int L = w.len;

  for (int p = 0; p < L; ++p) {
    Edge& e = out[n++];
    e = Edge{};
    e.word = w;
    --e.word.len;
    for (int i = p; i < L - 1; ++i) e.word.a[i] = w.a[i + 1];
    e.via[0] = {MoveKind::DeleteLetter, p + 1, 0};
    e.nvia = 1;
  }
  if (L >= 3) {
    for (int p = 0; p < L; ++p) {
      int x = w.a[p], y = w.a[(p + 1) % L], z = w.a[(p + 2) % L];
      if (x != z || (y != x + 1 && y != x - 1)) continue;
      Edge& e = out[n++];
      e = Edge{};
      if (p + 2 < L) {
        e.word = w;
        e.word.a[p] = static_cast<std::int8_t>(y);
        e.word.a[p + 1] = static_cast<std::int8_t>(x);
        e.word.a[p + 2] = static_cast<std::int8_t>(y);
        e.via[0] = {MoveKind::BraidRelation, p + 1, 0};
        e.nvia = 1;
      } else {
        e.word = rotate_sw(w, p);
        e.word.a[0] = static_cast<std::int8_t>(y);
        e.word.a[1] = static_cast<std::int8_t>(x);
        e.word.a[2] = static_cast<std::int8_t>(y);
        e.via[0] = {MoveKind::CyclicRotation, p, 0};
        e.via[1] = {MoveKind::BraidRelation, 1, 0};
        e.nvia = 2;
      }
    }
  }
  if (L >= 2) {
    for (int p = 0; p < L; ++p) {
      int x = w.a[p], y = w.a[(p + 1) % L];
      if (x - y < 2 && y - x < 2) continue;
      Edge& e = out[n++];
      e = Edge{};
      if (p + 1 < L) {
        e.word = w;
        std::swap(e.word.a[p], e.word.a[p + 1]);
        e.via[0] = {MoveKind::FarCommutation, p + 1, 0};
        e.nvia = 1;
      } else {
        e.word = rotate_sw(w, p);
        std::swap(e.word.a[0], e.word.a[1]);
        e.via[0] = {MoveKind::CyclicRotation, p, 0};
        e.via[1] = {MoveKind::FarCommutation, 1, 0};
        e.nvia = 2;
      }
    }
  }
  if (L >= 1) {
    int count[10] = {0};
    int lo = 9, hi = 0;
    for (int i = 0; i < L; ++i) {
      int x = w.a[i];
      ++count[x];
      lo = std::min(lo, x);
      hi = std::max(hi, x);
    }
    if (count[hi] == 1) {
      int p = 0;
      while (w.a[p] != hi) ++p;
      Edge& e = out[n++];
      e = Edge{};
      e.word = w;
      --e.word.len;
      for (int i = p; i < L - 1; ++i) e.word.a[i] = w.a[i + 1];
      --e.word.strands;
      e.via[0] = {MoveKind::Destabilize, p + 1, 1};
      e.nvia = 1;
    }
    if (lo == 1 && lo != hi && count[1] == 1) {
      int p = 0;
      while (w.a[p] != 1) ++p;
      Edge& e = out[n++];
      e = Edge{};
      e.word = w;
      --e.word.len;
      for (int i = p; i < L - 1; ++i) e.word.a[i] = w.a[i + 1];
      for (int i = 0; i < e.word.len; ++i) --e.word.a[i];
      --e.word.strands;
      e.via[0] = {MoveKind::Destabilize, p + 1, -1};
      e.nvia = 1;
    }
  }
  if (may_stabilize && w.len < 17) {
    for (int k = 0; k < std::max(L, 1); ++k) {
      Edge& e = out[n++];
      e = Edge{};
      e.word = (k == 0) ? w : rotate_sw(w, k);
      e.word.a[e.word.len++] = static_cast<std::int8_t>(w.strands);
      ++e.word.strands;
      if (k == 0) {
        e.via[0] = {MoveKind::Stabilize, 0, 0};
        e.nvia = 1;
      } else {
        e.via[0] = {MoveKind::CyclicRotation, k, 0};
        e.via[1] = {MoveKind::Stabilize, 0, 0};
        e.nvia = 2;
      }
      e.stab = true;
    }
  }
  return n;
}

constexpr int kMaxEdges = 6 * 18 + 4;

}  // namespace

struct WitnessMemo::Impl {
  struct DeadShard {
    mutable std::mutex mu;
    std::unordered_map<std::uint64_t, std::pair<std::int8_t, std::int8_t>> map;
    std::unordered_map<std::string, std::pair<std::int8_t, std::int8_t>> overflow;
  };
  struct ChainLink {
    SmallWord rep;
    Move via[2];
    std::int8_t nvia = 0;
    bool terminal = false;
    MinorTarget target{};
    std::int8_t stabs_ahead = 0;
  };
  struct LinkShard {
    mutable std::mutex mu;
    std::unordered_map<std::uint64_t, ChainLink> map;
  };
  static constexpr std::size_t kShards = 16;
  mutable DeadShard dead[kShards];
  mutable LinkShard links[kShards];

  // Dead-region entries below this remaining depth are cheap to re-derive and
  // not worth the memory.
  static constexpr int kMinRecordDepth = 5;

  bool covers(const SmallWord& w, int stabs, int depth_left, int stabs_left) const {
    std::uint64_t key;
    if (pack_key(w, stabs, key)) {
      DeadShard& s = dead[key % kShards];
      std::lock_guard<std::mutex> lock(s.mu);
      auto it = s.map.find(key);
      return it != s.map.end() && it->second.first >= depth_left &&
             it->second.second >= stabs_left;
    }
    std::string k = string_key(w, stabs);
    DeadShard& s = dead[std::hash<std::string>{}(k) % kShards];
    std::lock_guard<std::mutex> lock(s.mu);
    auto it = s.overflow.find(k);
    return it != s.overflow.end() && it->second.first >= depth_left &&
           it->second.second >= stabs_left;
  }

  void record_dead(const SmallWord& w, int stabs, int depth_left, int stabs_left) {
    if (depth_left < kMinRecordDepth) return;
    auto val = std::make_pair(static_cast<std::int8_t>(depth_left),
                              static_cast<std::int8_t>(stabs_left));
    std::uint64_t key;
    if (pack_key(w, stabs, key)) {
      DeadShard& s = dead[key % kShards];
      std::lock_guard<std::mutex> lock(s.mu);
      auto [it, inserted] = s.map.try_emplace(key, val);
      if (!inserted && val.first >= it->second.first && val.second >= it->second.second)
        it->second = val;
      return;
    }
    std::string k = string_key(w, stabs);
    DeadShard& s = dead[std::hash<std::string>{}(k) % kShards];
    std::lock_guard<std::mutex> lock(s.mu);
    auto [it, inserted] = s.overflow.try_emplace(k, val);
    if (!inserted && val.first >= it->second.first && val.second >= it->second.second)
      it->second = val;
  }

  bool lookup_link(const SmallWord& w, ChainLink& out) const {
    std::uint64_t key;
    if (!pack_key(w, 0, key)) return false;
    LinkShard& s = links[key % kShards];
    std::lock_guard<std::mutex> lock(s.mu);
    auto it = s.map.find(key);
    if (it == s.map.end()) return false;
    out = it->second;
    return true;
  }

  void record_link(const SmallWord& w, const ChainLink& link) {
    std::uint64_t key;
    if (!pack_key(w, 0, key)) return;
    LinkShard& s = links[key % kShards];
    std::lock_guard<std::mutex> lock(s.mu);
    s.map.try_emplace(key, link);
  }

  std::size_t size() const {
    std::size_t n = 0;
    for (auto& s : dead) {
      std::lock_guard<std::mutex> lock(s.mu);
      n += s.map.size() + s.overflow.size();
    }
    return n;
  }
};

WitnessMemo::WitnessMemo() : impl_(new Impl) {}
WitnessMemo::~WitnessMemo() = default;
std::size_t WitnessMemo::size() const { return impl_->size(); }

namespace {

// Extend a witness by walking cached chain links from `from` to a terminal.
std::optional<MinorWitness> follow_chain(WitnessMemo::Impl& memo, const SmallWord& from,
                                         int stabs_left, std::vector<Move>& moves) {
  WitnessMemo::Impl::ChainLink link;
  if (!memo.lookup_link(from, link)) return std::nullopt;
  if (link.stabs_ahead > stabs_left) return std::nullopt;

  SmallWord cur = from;
  for (int guard = 0; guard < 4096; ++guard) {
    if (!(cur == link.rep)) {
      const int L = cur.len;
      int k = -1;
      for (int r = 0; r < L && k < 0; ++r) {
        bool same = cur.strands == link.rep.strands && cur.len == link.rep.len;
        for (int i = 0; i < L && same; ++i)
          if (cur.a[(r + i) % L] != link.rep.a[i]) same = false;
        if (same) k = r;
      }
      if (k < 0) return std::nullopt;  // stale entry
      if (k > 0) {
        moves.push_back({MoveKind::CyclicRotation, k, 0});
        cur = rotate_sw(cur, k);
      }
    }
    if (link.terminal) {
      MinorWitness wit;
      wit.target = link.target;
      wit.terminal = cur.big();
      wit.moves = moves;
      return wit;
    }
    BraidWord cur_big = cur.big();
    for (int i = 0; i < link.nvia; ++i) {
      moves.push_back(link.via[i]);
      cur_big = apply_move(cur_big, link.via[i]);
    }
    if (!SmallWord::fits(cur_big)) return std::nullopt;
    cur = SmallWord::of(cur_big);
    if (!memo.lookup_link(cur, link)) return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

class MinorSearch {
 public:
  MinorSearch(const SearchBudget& budget, long max_states, WitnessMemo* shared)
      : budget_(budget),
        max_states_(max_states),
        max_stab_(budget.allow_stabilize ? budget.max_stabilize : 0),
        memo_(shared ? shared->impl_.get() : nullptr) {}

  // Runs the BFS from the given seeds; returns the first witness with the
  // index of the seed whose region produced it.
  std::optional<MultiMinorResult> run(const std::vector<BraidWord>& seeds) {
    for (std::size_t s = 0; s < seeds.size(); ++s) {
      if (!SmallWord::fits(seeds[s])) continue;  // outside the packed envelope
      pending_seed_ = s;
      if (push(SmallWord::of(seeds[s]), 0, 0, -1, nullptr, 0)) return result_;
    }

    Edge edges[kMaxEdges];
    while (!frontier_.empty()) {
      auto bucket = frontier_.begin();
      if (bucket->second.empty()) {
        frontier_.erase(bucket);
        continue;
      }
      int idx = bucket->second.front();
      bucket->second.pop_front();

      const int depth = pool_[idx].depth;
      const int stabs = pool_[idx].stabs;
      if (depth >= budget_.max_depth) continue;
      const SmallWord base = pool_[idx].word;
      if (cyclic_betti(base) < kMinTargetBetti) continue;  // betti never increases

      int n = expand(base, stabs < max_stab_ && base.len < 17, edges);
      for (int i = 0; i < n; ++i) {
        int d = depth + edges[i].nvia;
        if (d > budget_.max_depth) continue;
        if (push(edges[i].word, d, stabs + (edges[i].stab ? 1 : 0), idx, edges[i].via,
                 edges[i].nvia))
          return result_;
      }
    }

    if (memo_ && !capped_) {
      for (const Node& node : pool_)
        memo_->record_dead(node.word, node.stabs, budget_.max_depth - node.depth,
                           max_stab_ - node.stabs);
    }
    return std::nullopt;
  }

 private:
  struct Node {
    SmallWord word;
    std::int16_t depth;
    std::int8_t stabs;
    std::int8_t nvia;
    int parent;
    int root;  // pool index of this node's seed
    Move via[2];
  };

  bool seen(const SmallWord& w, int stabs) const {
    std::uint64_t key;
    if (pack_key(w, stabs, key)) return visited_.count(key) > 0;
    return visited_overflow_.count(string_key(w, stabs)) > 0;
  }
  void mark(const SmallWord& w, int stabs, int idx) {
    std::uint64_t key;
    if (pack_key(w, stabs, key)) visited_.emplace(key, idx);
    else visited_overflow_.emplace(string_key(w, stabs), idx);
  }

  std::vector<Move> path_moves(int idx) const {
    std::vector<Move> rev;
    for (int i = idx; i >= 0; i = pool_[i].parent)
      for (int v = pool_[i].nvia - 1; v >= 0; --v) rev.push_back(pool_[i].via[v]);
    return std::vector<Move>(rev.rbegin(), rev.rend());
  }

  void record_chain(int idx, MinorTarget target, bool terminal_at_idx, int base_stabs_ahead) {
    if (!memo_) return;
    std::vector<int> path;
    for (int i = idx; i >= 0; i = pool_[i].parent) path.push_back(i);
    std::reverse(path.begin(), path.end());
    int stabs_ahead = base_stabs_ahead;
    for (int t = static_cast<int>(path.size()) - 1; t >= 0; --t) {
      int i = path[t];
      WitnessMemo::Impl::ChainLink link;
      link.rep = pool_[i].word;
      link.target = target;
      if (t + 1 < static_cast<int>(path.size())) {
        int child = path[t + 1];
        link.terminal = false;
        link.nvia = pool_[child].nvia;
        for (int v = 0; v < pool_[child].nvia; ++v) {
          link.via[v] = pool_[child].via[v];
          if (link.via[v].kind == MoveKind::Stabilize) ++stabs_ahead;
        }
      } else {
        link.terminal = terminal_at_idx;
        if (!terminal_at_idx) continue;  // the chain continues via existing links
      }
      link.stabs_ahead = static_cast<std::int8_t>(stabs_ahead);
      memo_->record_link(pool_[i].word, link);
    }
  }

  std::size_t seed_index_of(int idx) const { return root_seed_.at(pool_[idx].root); }

  bool push(const SmallWord& w, int depth, int stabs, int parent, const Move* via, int nvia) {
    if (static_cast<long>(pool_.size()) >= max_states_) {
      capped_ = true;
      return false;
    }
    if (seen(w, stabs)) return false;
    if (memo_ && memo_->covers(w, stabs, budget_.max_depth - depth, max_stab_ - stabs))
      return false;  // proven dead region
    int idx = static_cast<int>(pool_.size());
    Node node;
    node.word = w;
    node.depth = static_cast<std::int16_t>(depth);
    node.stabs = static_cast<std::int8_t>(stabs);
    node.parent = parent;
    node.root = parent < 0 ? idx : pool_[parent].root;
    node.nvia = static_cast<std::int8_t>(nvia);
    for (int i = 0; i < nvia; ++i) node.via[i] = via[i];
    pool_.push_back(node);
    if (parent < 0) root_seed_[idx] = pending_seed_;
    mark(w, stabs, idx);

    if (auto t = goal_target(w)) {
      MultiMinorResult res;
      res.seed_index = seed_index_of(idx);
      res.witness.target = *t;
      res.witness.terminal = w.big();
      res.witness.moves = path_moves(idx);
      record_chain(idx, *t, true, 0);
      result_ = std::move(res);
      return true;
    }
    if (memo_) {
      WitnessMemo::Impl::ChainLink probe;
      if (memo_->lookup_link(w, probe) && probe.stabs_ahead <= max_stab_ - stabs) {
        std::vector<Move> prefix = path_moves(idx);
        std::size_t prefix_len = prefix.size();
        if (auto spliced = follow_chain(*memo_, w, max_stab_ - stabs, prefix)) {
          BraidWord origin = pool_[pool_[idx].root].word.big();
          if (replay_witness(origin, *spliced)) {
            int tail_stabs = 0;
            for (std::size_t i = prefix_len; i < spliced->moves.size(); ++i)
              if (spliced->moves[i].kind == MoveKind::Stabilize) ++tail_stabs;
            record_chain(idx, spliced->target, false, tail_stabs);
            MultiMinorResult res;
            res.seed_index = seed_index_of(idx);
            res.witness = std::move(*spliced);
            result_ = std::move(res);
            return true;
          }
        }
      }
    }
    frontier_[depth].push_back(idx);
    return false;
  }

  SearchBudget budget_;
  long max_states_;
  int max_stab_;
  WitnessMemo::Impl* memo_;
  std::vector<Node> pool_;
  std::unordered_map<std::uint64_t, int> visited_;
  std::unordered_map<std::string, int> visited_overflow_;
  std::map<int, std::deque<int>> frontier_;
  std::unordered_map<int, std::size_t> root_seed_;
  std::size_t pending_seed_ = 0;
  bool capped_ = false;
  std::optional<MultiMinorResult> result_;
};

std::optional<MinorWitness> find_minor(const BraidWord& input, const SearchBudget& budget,
                                       WitnessMemo* shared) {
  MinorSearch search(budget, budget.max_states, shared);
  auto res = search.run({input});
  if (!res) return std::nullopt;
  return std::move(res->witness);
}

std::optional<MultiMinorResult> find_minor_multi(const std::vector<BraidWord>& seeds,
                                                 const SearchBudget& budget,
                                                 long global_max_states, WitnessMemo* shared) {
  MinorSearch search(budget, global_max_states, shared);
  return search.run(seeds);
}

bool replay_witness(const BraidWord& start, const MinorWitness& wit) {
  BraidWord w = start;
  try {
    for (const Move& m : wit.moves) w = apply_move(w, m);
  } catch (const std::exception&) {
    return false;
  }
  if (!(w == wit.terminal)) return false;
  auto tag = is_affine_forbidden(linking_graph(w));
  return tag && *tag == wit.target;
}

Certificate certify_nonpositive(const BraidWord& w, const SearchBudget& budget,
                                WitnessMemo* shared) {
  Certificate cert;
  SymForm m = symmetrized_form(linking_graph(w));
  cert.inertia = signature(m);
  cert.positive = (cert.inertia.n_zero == 0 && cert.inertia.n_minus == 0);
  if (!cert.positive) cert.witness = find_minor(w, budget, shared);
  return cert;
}

}  // namespace braidforms
