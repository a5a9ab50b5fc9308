#include "tfd/search.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

namespace tfd {

namespace {

struct Prepared {
  std::vector<int> order;
  std::vector<int> prev_in_block;          // per position: var of the previous block's same slot, or -1
  std::vector<bool> block_start;           // per position: first slot of a block
  std::vector<std::vector<std::pair<int, Int>>> touching;  // per position: (constraint, coef)
  std::vector<std::vector<Int>> suffix_max;  // [constraint][position]
};

Prepared prepare(const SearchProblem& p) {
  Prepared pr;
  pr.order = p.order;
  if (pr.order.empty()) {
    pr.order.resize(p.nvars);
    std::iota(pr.order.begin(), pr.order.end(), 0);
  }
  const int n = p.nvars;
  std::vector<int> pos_of(n, -1);
  for (int i = 0; i < n; ++i) pos_of[pr.order[i]] = i;
  pr.prev_in_block.assign(n, -1);
  pr.block_start.assign(n, false);
  for (std::size_t b = 0; b < p.blocks.size(); ++b) {
    pr.block_start[pos_of[p.blocks[b][0]]] = true;
    if (b == 0) continue;
    for (std::size_t t = 0; t < p.blocks[b].size(); ++t) pr.prev_in_block[pos_of[p.blocks[b][t]]] = p.blocks[b - 1][t];
  }
  pr.touching.assign(n, {});
  pr.suffix_max.assign(p.constraints.size(), std::vector<Int>(n + 1, 0));
  for (std::size_t c = 0; c < p.constraints.size(); ++c) {
    const auto& coef = p.constraints[c].coef;
    for (int i = n - 1; i >= 0; --i) {
      const int v = pr.order[i];
      const Int a = coef[v];
      pr.suffix_max[c][i] = pr.suffix_max[c][i + 1] + std::max(a * p.lo[v], a * p.hi[v]);
      if (a != 0) pr.touching[i].push_back({static_cast<int>(c), a});
    }
  }
  return pr;
}

struct Worker {
  const SearchProblem& p;
  const Prepared& pr;
  std::vector<Int> val;
  std::vector<Int> partial;
  std::vector<std::vector<Int>> out;
  std::size_t nodes = 0;

  Worker(const SearchProblem& prob, const Prepared& prep)
      : p(prob), pr(prep), val(prob.nvars, 0), partial(prob.constraints.size(), 0) {}

  bool feasible_after(int pos) const {
    for (const auto& [c, a] : pr.touching[pos]) {
      (void)a;
      if (partial[c] + pr.suffix_max[c][pos + 1] < p.constraints[c].bound) return false;
    }
    return true;
  }

  void assign(int pos, Int v, Int sign) {
    for (const auto& [c, a] : pr.touching[pos]) partial[c] += sign * a * v;
  }

  void dfs(int pos, bool tight) {
    ++nodes;
    if (pos == p.nvars) {
      out.push_back(val);
      return;
    }
    const int var = pr.order[pos];
    if (pr.block_start[pos]) tight = true;
    Int hi = p.hi[var];
    const int prev = pr.prev_in_block[pos];
    const bool ordered = prev >= 0 && tight;
    if (ordered) hi = std::min(hi, val[prev]);
    for (Int v = p.lo[var]; v <= hi; ++v) {
      val[var] = v;
      assign(pos, v, 1);
      if (feasible_after(pos)) dfs(pos + 1, ordered ? (v == val[prev]) : (prev >= 0 ? false : tight));
      assign(pos, v, -1);
    }
    val[var] = 0;
  }
};

}  // namespace

std::vector<std::vector<Int>> solve_box(const SearchProblem& problem, int jobs, SearchStats* stats) {
  // Constraints without a variable are never visited by the pruning below.
  for (const auto& c : problem.constraints)
    if (std::all_of(c.coef.begin(), c.coef.end(), [](Int a) { return a == 0; }) && 0 < c.bound) return {};
  if (problem.nvars == 0) {
    if (stats) stats->nodes = 1;
    return {std::vector<Int>{}};
  }
  const Prepared pr = prepare(problem);
  const int first = pr.order[0];
  const Int lo = problem.lo[first], hi = problem.hi[first];
  const std::size_t nvals = static_cast<std::size_t>(hi - lo + 1);
  std::vector<std::vector<std::vector<Int>>> per_value(nvals);
  std::vector<std::size_t> per_nodes(nvals, 0);
  std::atomic<std::size_t> next{0};

  auto run = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < nvals;) {
      Worker w(problem, pr);
      const Int v = lo + static_cast<Int>(i);
      w.val[first] = v;
      w.assign(0, v, 1);
      ++w.nodes;
      if (w.feasible_after(0)) w.dfs(1, true);
      per_value[i] = std::move(w.out);
      per_nodes[i] = w.nodes;
    }
  };
  const int n = std::max(1, jobs);
  std::vector<std::thread> threads;
  for (int t = 1; t < n; ++t) threads.emplace_back(run);
  run();
  for (auto& t : threads) t.join();

  std::vector<std::vector<Int>> all;
  std::size_t nodes = 0;
  for (std::size_t i = 0; i < nvals; ++i) {
    nodes += per_nodes[i];
    for (auto& pt : per_value[i]) all.push_back(std::move(pt));
  }
  if (stats) stats->nodes = nodes;
  return all;
}

}  // namespace tfd
