#include "tgp/burning.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "bits.hpp"

namespace tgp {

using detail::Bits;

namespace {

// Edges grouped by activation time, for times 1..horizon.
std::vector<std::vector<VertexPair>> edges_by_time(const TemporalGraph& g, int horizon) {
  std::vector<std::vector<VertexPair>> at(horizon + 2);
  for (const auto& [p, ts] : g.edges())
    for (Time t : ts)
      if (t <= horizon) at[t].push_back(p);
  return at;
}

void spread(Bits& burning, const std::vector<VertexPair>& active) {
  Bits before = burning;
  for (auto [u, v] : active) {
    if (before.test(u)) burning.set(v);
    if (before.test(v)) burning.set(u);
  }
}

struct Context {
  const TemporalGraph& g;
  const NeighbourhoodPartition& p;
  int h;
  std::vector<std::vector<VertexPair>> at;
  Bits all;

  Context(const TemporalGraph& g_, const NeighbourhoodPartition& p_, int h_)
      : g(g_), p(p_), h(h_), at(edges_by_time(g_, h_)), all(g_.n()) {
    for (int v = 0; v < g.n(); ++v) all.set(v);
  }

  // Smallest unburnt member of class c, else its smallest member.
  int pick(int c, const Bits& burning) const {
    for (int v : p.classes[c])
      if (!burning.test(v)) return v;
    return p.classes[c].front();
  }

  // Continues from `burning` after `t` moves: each step spreads, then fires
  // the first unburnt vertex of the B classes or waits at `wait_at`.
  // Returns true on success and appends the moves made.
  bool finish(Bits burning, int t, const std::vector<int>& b_set, int wait_at, BurningStrategy* moves) const {
    if (burning == all) return true;
    while (t < h) {
      ++t;
      spread(burning, at[t]);
      int v = -1;
      for (int c : b_set) {
        for (int x : p.classes[c])
          if (!burning.test(x)) {
            v = x;
            break;
          }
        if (v >= 0) break;
      }
      if (v < 0) v = wait_at;
      burning.set(v);
      if (moves) moves->push_back(v);
      if (burning == all) return true;
    }
    return false;
  }
};

NeighbourhoodPartition resolve_partition(const TemporalGraph& g, const std::optional<NeighbourhoodPartition>& p) {
  if (!p) return temporal_neighbourhood_partition(g);
  return make_partition(g, p->classes);
}

void check_h(const TemporalGraph& g, int h) {
  if (h < 1) throw InputError("h must be >= 1");
  if (g.n() == 0) throw InputError("graph has no vertices");
}

}  // namespace

BurnTrace simulate(const TemporalGraph& g, const BurningStrategy& s) {
  if (s.empty()) throw InputError("burning strategy is empty");
  for (int v : s)
    if (v < 0 || v >= g.n()) throw InputError("strategy names an unknown vertex");
  auto at = edges_by_time(g, static_cast<int>(s.size()));
  BurnTrace tr;
  Bits burning(g.n());
  for (size_t i = 0; i < s.size(); ++i) {
    int t = static_cast<int>(i) + 1;
    spread(burning, at[t]);
    burning.set(s[i]);
    std::vector<char> snap(g.n());
    for (int v = 0; v < g.n(); ++v) snap[v] = burning.test(v);
    tr.burning.push_back(std::move(snap));
  }
  return tr;
}

bool is_successful(const TemporalGraph& g, const BurningStrategy& s) {
  auto tr = simulate(g, s);
  const auto& last = tr.burning.back();
  return std::all_of(last.begin(), last.end(), [](char c) { return c != 0; });
}

BurningStrategy class_strategy(const TemporalGraph& g, const NeighbourhoodPartition& p,
                               const std::vector<int>& order, const std::vector<int>& b_set, int h) {
  for (const auto* list : {&order, &b_set})
    for (int c : *list)
      if (c < 0 || c >= p.k()) throw InputError("class index out of range");
  if (static_cast<int>(p.class_of.size()) != g.n()) throw InputError("partition does not match the graph");
  Context ctx(g, p, h);
  BurningStrategy moves;
  Bits burning(g.n());
  int t = 0;
  for (int c : order) {
    if (t >= h) return moves;
    ++t;
    spread(burning, ctx.at[t]);
    int v = ctx.pick(c, burning);
    burning.set(v);
    moves.push_back(v);
    if (burning == ctx.all) return moves;
  }
  if (!moves.empty()) ctx.finish(burning, t, b_set, moves.front(), &moves);
  return moves;
}

namespace {

std::vector<std::vector<int>> subsets_by_size(const std::vector<int>& base) {
  // All subsets ordered by size, then lexicographically by sorted content.
  std::vector<int> sorted = base;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::vector<int>> out;
  const int m = static_cast<int>(sorted.size());
  for (int size = 0; size <= m; ++size) {
    std::vector<int> idx(size);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      std::vector<int> s;
      for (int i : idx) s.push_back(sorted[i]);
      out.push_back(std::move(s));
      int i = size - 1;
      while (i >= 0 && idx[i] == m - size + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

}  // namespace

BurningResult solve_tnd_burning_reference(const TemporalGraph& g, int h,
                                          const std::optional<NeighbourhoodPartition>& part) {
  check_h(g, h);
  auto p = resolve_partition(g, part);
  const int k = p.k();
  BurningResult r;
  std::vector<int> classes(k);
  std::iota(classes.begin(), classes.end(), 0);
  for (int a = 1; a <= std::min(k, h); ++a) {
    for (const auto& A : subsets_by_size(classes)) {
      if (static_cast<int>(A.size()) != a) continue;
      std::vector<int> order = A;
      do {
        for (const auto& B : subsets_by_size(A)) {
          ++r.strategies_checked;
          auto s = class_strategy(g, p, order, B, h);
          if (!s.empty() && static_cast<int>(s.size()) <= h && is_successful(g, s)) {
            r.yes = true;
            r.witness = s;
            r.order = order;
            r.b_set = B;
            return r;
          }
        }
      } while (std::next_permutation(order.begin(), order.end()));
    }
  }
  return r;
}

namespace {

struct Key {
  std::vector<int> sorted_a;
  std::vector<int> order;
  std::vector<int> b;

  bool operator<(const Key& o) const {
    if (sorted_a != o.sorted_a) return sorted_a < o.sorted_a;
    if (order != o.order) return order < o.order;
    if (b.size() != o.b.size()) return b.size() < o.b.size();
    return b < o.b;
  }
};

struct VisitKey {
  std::vector<uint64_t> words;
  bool operator==(const VisitKey&) const = default;
};
struct VisitHash {
  size_t operator()(const VisitKey& k) const {
    size_t h = 1469598103934665603ull;
    for (auto x : k.words) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

// Exact decision over arbitrary strategies from a (step, burning set) state.
// Moves fire the smallest unburnt member of a class; states that cannot
// finish within h are remembered.
class Decider {
 public:
  Decider(const Context& ctx, const std::vector<std::vector<Bits>>& reach,
          const std::vector<std::vector<Bits>>& conflict, const std::vector<std::vector<int>>& order_by_cover)
      : ctx_(ctx), reach_(reach), conflict_(conflict), order_by_cover_(order_by_cover) {}

  // Burning set at the horizon if no further fires are placed after step t.
  Bits horizon(const Bits& burning, int t) const {
    Bits b = burning;
    for (int s = t + 1; s <= ctx_.h; ++s) spread(b, ctx_.at[s]);
    return b;
  }

  int demand(const Bits& covered, int t) const {
    const int q = t + 1;
    if (q > ctx_.h) return covered == ctx_.all ? 0 : 1;
    Bits chosen(ctx_.g.n());
    int r = 0;
    for (int v : order_by_cover_[q]) {
      if (covered.test(v)) continue;
      if (conflict_[q][v].intersects(chosen)) continue;
      chosen.set(v);
      ++r;
    }
    return r;
  }

  // True if some continuation of `burning` after t moves burns everything
  // within h moves; fills `moves` with one such continuation.
  bool can_finish(const Bits& burning, int t, BurningStrategy* moves) {
    if (burning == ctx_.all) return true;
    if (t >= ctx_.h) return false;
    if (t + demand(horizon(burning, t), t) > ctx_.h) return false;
    Key key{t, burning};
    if (failed_.count(key)) return false;
    ++nodes_;
    Bits nb = burning;
    spread(nb, ctx_.at[t + 1]);
    for (int v : candidates(nb, t + 1)) {
      Bits x = nb;
      x.set(v);
      if (moves) moves->push_back(v);
      if (can_finish(x, t + 1, moves)) return true;
      if (moves) moves->pop_back();
    }
    failed_.insert(std::move(key));
    return false;
  }

  // Moves tried at step q on the spread set nb: one per class with an unburnt
  // member, the one covering most new vertices first. A fully burnt graph
  // still needs one move.
  std::vector<int> candidates(const Bits& nb, int q) const {
    if (nb == ctx_.all) return {ctx_.p.classes.front().front()};
    Bits cov = horizon(nb, q);
    std::vector<std::pair<int, int>> scored;
    for (int c = 0; c < ctx_.p.k(); ++c) {
      int v = -1;
      for (int x : ctx_.p.classes[c])
        if (!nb.test(x)) {
          v = x;
          break;
        }
      if (v < 0) continue;
      Bits gain = reach_[q][v];
      gain.and_not(cov);
      scored.push_back({-gain.count(), v});
    }
    std::stable_sort(scored.begin(), scored.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<int> out;
    for (auto [s, v] : scored) out.push_back(v);
    return out;
  }

  long long nodes() const { return nodes_; }

 private:
  struct Key {
    int t;
    Bits b;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    size_t operator()(const Key& k) const { return k.b.hash() * 31 + static_cast<size_t>(k.t); }
  };

  const Context& ctx_;
  const std::vector<std::vector<Bits>>& reach_;
  const std::vector<std::vector<Bits>>& conflict_;
  const std::vector<std::vector<int>>& order_by_cover_;
  std::unordered_set<Key, KeyHash> failed_;
  long long nodes_ = 0;
};

class PrunedSearch {
 public:
  PrunedSearch(const TemporalGraph& g, const NeighbourhoodPartition& p, int h, bool prune)
      : ctx_(g, p, h), prune_(prune), decider_(ctx_, reach_, conflict_, order_by_cover_) {
    const int n = g.n();
    // reach_[q][w]: vertices burnt by horizon h from a single fire at w on step q.
    reach_.assign(h + 2, std::vector<Bits>(n, Bits(n)));
    conflict_.assign(h + 2, std::vector<Bits>(n, Bits(n)));
    order_by_cover_.assign(h + 2, {});
    for (int q = 1; q <= h + 1; ++q) {
      std::vector<int> cover_count(n, 0);
      for (int w = 0; w < n; ++w) {
        Bits b(n);
        b.set(w);
        for (int t = q + 1; t <= h; ++t) spread(b, ctx_.at[t]);
        reach_[q][w] = b;
        b.for_each([&](int v) { ++cover_count[v]; });
      }
      for (int w = 0; w < n; ++w) reach_[q][w].for_each([&](int v) { conflict_[q][v] |= reach_[q][w]; });
      auto& ord = order_by_cover_[q];
      ord.resize(n);
      std::iota(ord.begin(), ord.end(), 0);
      std::stable_sort(ord.begin(), ord.end(), [&](int x, int y) { return cover_count[x] < cover_count[y]; });
    }
  }

  // Lower bound on further moves needed after step t given what is already
  // guaranteed to burn by the horizon.
  int demand(const Bits& covered, int t) const {
    const int q = t + 1;
    Bits chosen(ctx_.g.n());
    int r = 0;
    for (int v : order_by_cover_[q]) {
      if (covered.test(v)) continue;
      if (conflict_[q][v].intersects(chosen)) continue;
      chosen.set(v);
      ++r;
    }
    return r;
  }

  bool hopeless_at_start() const {
    Bits none(ctx_.g.n());
    return prune_ && demand(none, 0) > ctx_.h;
  }

  // Decides the instance over all strategies; fills one successful strategy.
  bool decide(BurningStrategy& moves) { return decider_.can_finish(Bits(ctx_.g.n()), 0, &moves); }
  long long decision_nodes() const { return decider_.nodes(); }

  // Searches orderings of size a that begin with `first`; improves `best`.
  void run(int a, int first, std::optional<Key>& best, BurningStrategy& best_moves, long long& checked) {
    a_ = a;
    best_ = &best;
    best_moves_ = &best_moves;
    checked_ = &checked;
    visited_.clear();
    const int n = ctx_.g.n();
    used_.assign(ctx_.p.k(), 0);
    order_.clear();
    moves_.clear();
    step(Bits(n), Bits(n), first);
  }

 private:
  // Smallest sorted A reachable by completing the current used set to size a.
  std::vector<int> min_completion(int extra) const {
    std::vector<int> s;
    for (int c = 0; c < ctx_.p.k(); ++c)
      if (used_[c] || c == extra) s.push_back(c);
    for (int c = 0; c < ctx_.p.k() && static_cast<int>(s.size()) < a_; ++c)
      if (!used_[c] && c != extra) s.push_back(c);
    std::sort(s.begin(), s.end());
    return s;
  }

  bool beaten(int extra) const {
    if (!*best_) return false;
    auto m = min_completion(extra);
    const auto& b = **best_;
    if (m != b.sorted_a) return b.sorted_a < m;
    // Same set: compare the ordering prefix.
    std::vector<int> prefix = order_;
    prefix.push_back(extra);
    std::vector<int> bp(b.order.begin(), b.order.begin() + prefix.size());
    return bp < prefix;
  }

  void record(Key key, const BurningStrategy& moves) {
    if (!*best_ || key < **best_) {
      *best_ = std::move(key);
      *best_moves_ = moves;
    }
  }

  void step(const Bits& burning, const Bits& covered, int forced) {
    const int t = static_cast<int>(order_.size());
    if (t == a_) {
      leaf(burning);
      return;
    }
    for (int c = 0; c < ctx_.p.k(); ++c) {
      if (used_[c]) continue;
      if (forced >= 0 && c != forced) continue;
      if (beaten(c)) continue;
      Bits nb = burning;
      spread(nb, ctx_.at[t + 1]);
      int v = ctx_.pick(c, nb);
      nb.set(v);
      Bits ncov = covered;
      ncov |= reach_[t + 1][v];

      used_[c] = 1;
      order_.push_back(c);
      moves_.push_back(v);
      if (nb == ctx_.all) {
        ++*checked_;
        // Every completion succeeds with B empty; keep the smallest one.
        Key key{min_completion(-1), order_, {}};
        for (int x : key.sorted_a)
          if (!used_[x]) key.order.push_back(x);
        record(std::move(key), moves_);
      } else if (!(prune_ && t + 1 + demand(ncov, t + 1) > ctx_.h) && fresh(t + 1, nb) &&
                 (!prune_ || decider_.can_finish(nb, t + 1, nullptr))) {
        step(nb, ncov, -1);
      }
      used_[c] = 0;
      order_.pop_back();
      moves_.pop_back();
    }
  }

  bool fresh(int t, const Bits& burning) {
    if (!prune_) return true;
    VisitKey key;
    key.words.push_back(static_cast<uint64_t>(t));
    uint64_t acc = 0;
    for (int c = 0; c < ctx_.p.k(); ++c) {
      if (used_[c]) acc |= uint64_t{1} << (c & 63);
      if ((c & 63) == 63) {
        key.words.push_back(acc);
        acc = 0;
      }
    }
    key.words.push_back(acc);
    key.words.insert(key.words.end(), burning.words().begin(), burning.words().end());
    return visited_.insert(std::move(key)).second;
  }

  void leaf(const Bits& burning) {
    std::vector<int> sorted_a = order_;
    std::sort(sorted_a.begin(), sorted_a.end());
    std::vector<int> open;
    for (int c : sorted_a)
      for (int x : ctx_.p.classes[c])
        if (!burning.test(x)) {
          open.push_back(c);
          break;
        }
    for (const auto& B : subsets_by_size(open)) {
      Key key{sorted_a, order_, B};
      if (*best_ && !(key < **best_)) return;  // later B only compare larger
      ++*checked_;
      BurningStrategy moves = moves_;
      if (ctx_.finish(burning, a_, B, moves_.front(), &moves)) {
        record(std::move(key), moves);
        return;
      }
    }
  }

  Context ctx_;
  bool prune_;
  std::vector<std::vector<Bits>> reach_, conflict_;
  std::vector<std::vector<int>> order_by_cover_;
  Decider decider_;
  std::unordered_set<VisitKey, VisitHash> visited_;

  int a_ = 0;
  std::optional<Key>* best_ = nullptr;
  BurningStrategy* best_moves_ = nullptr;
  long long* checked_ = nullptr;
  std::vector<char> used_;
  std::vector<int> order_;
  BurningStrategy moves_;
};

}  // namespace

BurningResult solve_tnd_burning(const TemporalGraph& g, int h, const std::optional<NeighbourhoodPartition>& part,
                                const BurningOptions& opt) {
  check_h(g, h);
  auto p = resolve_partition(g, part);
  const int k = p.k();
  BurningResult r;
  if (opt.prune) {
    PrunedSearch probe(g, p, h, opt.prune);
    if (probe.hopeless_at_start()) return r;
    BurningStrategy moves;
    bool ok = probe.decide(moves);
    r.strategies_checked += probe.decision_nodes();
    if (!ok) return r;
    if (k > opt.canonical_max_classes) {
      r.yes = true;
      r.canonical = false;
      // Placement classes in first-use order; classes used twice form B.
      std::vector<int> seen(k, 0);
      for (int v : moves) {
        int c = p.class_of[v];
        if (seen[c]++ == 0) r.order.push_back(c);
        else if (seen[c] == 2) r.b_set.push_back(c);
      }
      std::sort(r.b_set.begin(), r.b_set.end());
      auto s = class_strategy(g, p, r.order, r.b_set, h);
      if (static_cast<int>(s.size()) <= h && is_successful(g, s)) {
        r.witness = s;
      } else {
        r.witness = moves;
        r.order.clear();
        r.b_set.clear();
      }
      return r;
    }
  }
  const int threads = std::max(1, opt.threads);
  for (int a = 1; a <= std::min(k, h); ++a) {
    std::vector<std::optional<Key>> best(k);
    std::vector<BurningStrategy> moves(k);
    std::vector<long long> checked(k, 0);
    if (threads > 1) {
#pragma omp parallel num_threads(threads)
      {
        PrunedSearch search(g, p, h, opt.prune);
#pragma omp for schedule(dynamic)
        for (int first = 0; first < k; ++first) search.run(a, first, best[first], moves[first], checked[first]);
      }
    } else {
      PrunedSearch search(g, p, h, opt.prune);
      std::optional<Key> running;
      BurningStrategy running_moves;
      for (int first = 0; first < k; ++first) {
        best[first] = running;
        search.run(a, first, best[first], moves[first], checked[first]);
        if (best[first] && (!running || *best[first] < *running)) {
          running = best[first];
          running_moves = moves[first];
        }
      }
      std::fill(best.begin(), best.end(), std::nullopt);
      if (running) {
        best[0] = running;
        moves[0] = running_moves;
      }
    }
    for (auto c : checked) r.strategies_checked += c;
    int winner = -1;
    for (int f = 0; f < k; ++f)
      if (best[f] && (winner < 0 || *best[f] < *best[winner])) winner = f;
    if (winner >= 0) {
      r.yes = true;
      r.witness = moves[winner];
      r.order = best[winner]->order;
      r.b_set = best[winner]->b;
      return r;
    }
  }
  return r;
}

int brute_force_burning_number(const TemporalGraph& g, int max_n) {
  const int n = g.n();
  if (n == 0) throw InputError("graph has no vertices");
  if (n > max_n) throw SizeBoundError("brute-force burning bound is " + std::to_string(max_n) + " vertices");
  auto at = edges_by_time(g, n);
  Bits all(n);
  for (int v = 0; v < n; ++v) all.set(v);
  std::unordered_set<Bits, detail::BitsHash> level{Bits(n)};
  for (int t = 1; t <= n; ++t) {
    std::unordered_set<Bits, detail::BitsHash> next;
    for (const auto& b : level) {
      Bits s = b;
      spread(s, at[t]);
      for (int v = 0; v < n; ++v) {
        Bits x = s;
        x.set(v);
        if (x == all) return t;
        next.insert(std::move(x));
      }
    }
    level = std::move(next);
  }
  return n;  // unreachable: firing every vertex once always succeeds
}

}  // namespace tgp
