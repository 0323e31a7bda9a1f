#include "uncsimp/simplify.hpp"

#include <atomic>
#include <limits>
#include <stdexcept>
#include <thread>

namespace uncsimp {

ShortcutGraph build_graph(const UncertainCurve& c, double eps, Metric metric,
                          const GraphOptions& opt) {
  size_t n = c.size();
  if (n < 2) throw std::invalid_argument("curve needs at least 2 points");
  ShortcutGraph g;
  g.n = n;
  g.adj.assign(n, {});

  std::vector<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i + 1 < n; ++i)
    for (size_t j = i + 1; j < n; ++j) pairs.push_back({i, j});
  g.edges_tested = pairs.size();

  std::vector<char> valid(pairs.size(), 0);
  ShortcutOptions sopt;
  sopt.want_witness = false;
  auto test = [&](size_t p) {
    valid[p] = check_shortcut(c, pairs[p].first, pairs[p].second, eps, metric, sopt).valid;
  };

  size_t jobs = std::max<size_t>(opt.jobs, 1);
  if (jobs == 1 || pairs.size() < 2) {
    for (size_t p = 0; p < pairs.size(); ++p) test(p);
  } else {
    std::atomic<size_t> next{0};
    auto worker = [&]() {
      for (;;) {
        size_t p = next.fetch_add(1);
        if (p >= pairs.size()) return;
        test(p);
      }
    };
    std::vector<std::thread> pool;
    for (size_t t = 0; t < std::min(jobs, pairs.size()); ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  for (size_t p = 0; p < pairs.size(); ++p) {
    if (valid[p]) {
      g.adj[pairs[p].first].push_back(pairs[p].second);
      ++g.valid_edges;
    }
  }
  return g;
}

std::vector<size_t> shortest_path(const ShortcutGraph& g) {
  size_t n = g.n;
  if (n == 0) return {};
  if (n == 1) return {0};
  const size_t inf = std::numeric_limits<size_t>::max();
  std::vector<size_t> dist(n, inf);
  dist[n - 1] = 0;
  for (size_t i = n - 1; i-- > 0;) {
    for (size_t j : g.adj[i])
      if (dist[j] != inf) dist[i] = std::min(dist[i], dist[j] + 1);
  }
  if (dist[0] == inf) throw std::logic_error("no path from first to last vertex");
  std::vector<size_t> path{0};
  size_t cur = 0;
  while (cur != n - 1) {
    size_t pick = inf;
    for (size_t j : g.adj[cur]) {  // ascending: first hit is the smallest index
      if (dist[j] != inf && dist[j] + 1 == dist[cur]) {
        pick = j;
        break;
      }
    }
    if (pick == inf) throw std::logic_error("inconsistent distance labels");
    path.push_back(pick);
    cur = pick;
  }
  return path;
}

SimplifyResult simplify(const UncertainCurve& c, double eps, Metric metric,
                        const GraphOptions& opt) {
  ShortcutGraph g = build_graph(c, eps, metric, opt);
  SimplifyResult r;
  r.indices = shortest_path(g);
  r.links = r.indices.size() - 1;
  r.edges_tested = g.edges_tested;
  r.valid_edges = g.valid_edges;
  return r;
}

}  // namespace uncsimp
