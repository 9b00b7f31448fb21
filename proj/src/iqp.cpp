#include "iqp_internal.hpp"

namespace tgp {

IQPInstance build_iqp(const SubclassGraph& h, const DeletionPlan& plan, const NeighbourhoodPartition& p, int source,
                      int r, bool exclude_source) {
  const int n = static_cast<int>(h.nodes.size());
  if (n == 0 || h.nodes[0].cls != -1) throw InputError("subclass graph lacks its source node");
  IQPInstance inst;
  inst.q.assign(n, std::vector<long long>(n, 0));
  for (const auto& [ij, ts] : plan.times) {
    auto [i, j] = ij;
    if (i >= n || j >= n || i == j) throw InputError("deletion plan does not match the subclass graph");
    inst.q[std::min(i, j)][std::max(i, j)] = static_cast<long long>(ts.size());
  }
  const int sc = p.class_of.at(source);
  std::vector<int> group_of_class(p.k(), -1);
  for (int i = 1; i < n; ++i) {
    int c = h.nodes[i].cls;
    if (group_of_class[c] < 0) {
      group_of_class[c] = static_cast<int>(inst.groups.size());
      inst.groups.emplace_back();
      inst.group_size.push_back(static_cast<int>(p.classes[c].size()) - (c == sc ? 1 : 0));
    }
    inst.groups[group_of_class[c]].push_back(i);
    if (h.nodes[i].target != kInf) inst.reached.push_back(i);
  }
  for (int c = 0; c < p.k(); ++c) {
    int size = static_cast<int>(p.classes[c].size()) - (c == sc ? 1 : 0);
    if (size > 0 && group_of_class[c] < 0) throw InputError("assignment leaves a class without subclasses");
  }
  if (!exclude_source) inst.reached.insert(inst.reached.begin(), 0);
  inst.r = r;
  return inst;
}

namespace {

class LatticeSearch {
 public:
  LatticeSearch(const IQPInstance& inst, std::optional<long long> cap) : inst_(inst), cap_(cap) {
    x_.assign(inst.num_vars(), 0);
    x_[0] = 1;
    is_reached_.assign(inst.num_vars(), 0);
    for (int v : inst.reached) is_reached_[v] = 1;
    assigned_.push_back(0);
  }

  std::optional<IQPSolution> run() {
    int mass = is_reached_[0] ? 1 : 0;
    if (mass > inst_.r) return std::nullopt;
    group(0, 0, mass);
    return best_;
  }

 private:
  bool prune(long long obj) const {
    if (cap_ && obj > *cap_) return true;
    return best_ && obj >= best_->objective;
  }

  long long gain(int v, int value) const {
    long long s = 0;
    for (int u : assigned_) s += inst_.q[std::min(u, v)][std::max(u, v)] * x_[u];
    return s * value;
  }

  void group(size_t g, long long obj, int mass) {
    if (prune(obj)) return;
    if (g == inst_.groups.size()) {
      best_ = IQPSolution{obj, x_};
      return;
    }
    const auto& vars = inst_.groups[g];
    if (static_cast<int>(vars.size()) > inst_.group_size[g]) return;
    part(g, 0, inst_.group_size[g], obj, mass);
  }

  void part(size_t g, size_t i, int left, long long obj, int mass) {
    const auto& vars = inst_.groups[g];
    const int v = vars[i];
    const int rest = static_cast<int>(vars.size() - i - 1);
    const int lo = rest == 0 ? left : 1;
    const int hi = left - rest;
    for (int val = lo; val <= hi; ++val) {
      int m = mass + (is_reached_[v] ? val : 0);
      if (m > inst_.r) break;
      long long o = obj + gain(v, val);
      if (prune(o)) continue;
      x_[v] = val;
      assigned_.push_back(v);
      if (rest == 0)
        group(g + 1, o, m);
      else
        part(g, i + 1, left - val, o, m);
      assigned_.pop_back();
      x_[v] = 0;
    }
  }

  const IQPInstance& inst_;
  std::optional<long long> cap_;
  std::vector<int> x_;
  std::vector<char> is_reached_;
  std::vector<int> assigned_;
  std::optional<IQPSolution> best_;
};

}  // namespace

namespace detail {

std::optional<IQPSolution> solve_iqp_capped(const IQPInstance& inst, int max_vars, std::optional<long long> cap) {
  if (static_cast<int>(inst.num_vars()) - 1 > max_vars)
    throw SizeBoundError("integer program has " + std::to_string(inst.num_vars() - 1) + " variables; bound is " +
                         std::to_string(max_vars));
  return LatticeSearch(inst, cap).run();
}

}  // namespace detail

std::optional<IQPSolution> solve_iqp_exact(const IQPInstance& inst, int max_vars) {
  return detail::solve_iqp_capped(inst, max_vars, std::nullopt);
}

}  // namespace tgp
