#include "fracpow/transversal.hpp"

#include <algorithm>
#include <numeric>

#include "fracpow/errors.hpp"

namespace fracpow {

namespace {

struct MaxFlow {
  struct Arc {
    int to;
    int cap;
    int rev;
  };

  explicit MaxFlow(int nodes) : graph(nodes), level(nodes), iter(nodes) {}

  void add_edge(int from, int to, int cap) {
    graph[from].push_back({to, cap, static_cast<int>(graph[to].size())});
    graph[to].push_back({from, 0, static_cast<int>(graph[from].size()) - 1});
  }

  bool bfs(int s, int t) {
    std::fill(level.begin(), level.end(), -1);
    std::vector<int> queue{s};
    level[s] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int v = queue[head];
      for (const Arc& a : graph[v]) {
        if (a.cap > 0 && level[a.to] < 0) {
          level[a.to] = level[v] + 1;
          queue.push_back(a.to);
        }
      }
    }
    return level[t] >= 0;
  }

  int dfs(int v, int t, int f) {
    if (v == t) return f;
    for (int& i = iter[v]; i < static_cast<int>(graph[v].size()); ++i) {
      Arc& a = graph[v][i];
      if (a.cap > 0 && level[v] < level[a.to]) {
        int d = dfs(a.to, t, std::min(f, a.cap));
        if (d > 0) {
          a.cap -= d;
          graph[a.to][a.rev].cap += d;
          return d;
        }
      }
    }
    return 0;
  }

  int run(int s, int t) {
    int flow = 0;
    while (bfs(s, t)) {
      std::fill(iter.begin(), iter.end(), 0);
      int f;
      while ((f = dfs(s, t, 1 << 30)) > 0) flow += f;
    }
    return flow;
  }

  std::vector<char> residual_reachable(int s) const {
    std::vector<char> seen(graph.size(), 0);
    std::vector<int> queue{s};
    seen[s] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int v = queue[head];
      for (const Arc& a : graph[v]) {
        if (a.cap > 0 && !seen[a.to]) {
          seen[a.to] = 1;
          queue.push_back(a.to);
        }
      }
    }
    return seen;
  }

  std::vector<std::vector<Arc>> graph;
  std::vector<int> level;
  std::vector<int> iter;
};

// Node layout for the b-matching network: source 0, set i -> 1+i,
// element x -> 1+k+x, sink 1+k+U.
MaxFlow build_network(const SetFamily& f, int demand) {
  const int k = static_cast<int>(f.sets.size());
  const int u = f.universe_size;
  MaxFlow flow(2 + k + u);
  for (int i = 0; i < k; ++i) flow.add_edge(0, 1 + i, demand);
  for (int i = 0; i < k; ++i) {
    for (int x : f.sets[i]) flow.add_edge(1 + i, 1 + k + x, 1);
  }
  for (int x = 0; x < u; ++x) flow.add_edge(1 + k + x, 1 + k + u, 1);
  return flow;
}

}  // namespace

SetFamily make_set_family(std::vector<std::vector<int>> sets, int universe_size) {
  if (universe_size < 0) {
    throw InvalidInput("set family: negative universe size");
  }
  for (auto& s : sets) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (!s.empty() && (s.front() < 0 || s.back() >= universe_size)) {
      throw InvalidInput("set family: element outside universe");
    }
  }
  return SetFamily{std::move(sets), universe_size};
}

std::optional<Transversal> find_transversal(const SetFamily& f) {
  const int k = static_cast<int>(f.sets.size());
  const int u = f.universe_size;
  std::vector<int> element_owner(u, -1);
  std::vector<char> visited(u, 0);

  // Kuhn's augmenting paths; element order within a set is ascending.
  auto augment = [&](auto&& self, int i) -> bool {
    for (int x : f.sets[i]) {
      if (visited[x]) continue;
      visited[x] = 1;
      if (element_owner[x] < 0 || self(self, element_owner[x])) {
        element_owner[x] = i;
        return true;
      }
    }
    return false;
  };

  for (int i = 0; i < k; ++i) {
    std::fill(visited.begin(), visited.end(), 0);
    if (!augment(augment, i)) return std::nullopt;
  }
  Transversal t;
  t.assignment.assign(k, -1);
  for (int x = 0; x < u; ++x) {
    if (element_owner[x] >= 0) t.assignment[element_owner[x]] = x;
  }
  return t;
}

std::optional<std::vector<std::vector<int>>> find_b_transversal(const SetFamily& f, int demand) {
  if (demand < 1) {
    throw InvalidInput("b-transversal: demand must be positive");
  }
  const int k = static_cast<int>(f.sets.size());
  if (k == 0) return std::vector<std::vector<int>>{};
  MaxFlow net = build_network(f, demand);
  const int sink = 1 + k + f.universe_size;
  if (net.run(0, sink) != demand * k) return std::nullopt;

  std::vector<std::vector<int>> chosen(k);
  for (int i = 0; i < k; ++i) {
    for (const auto& a : net.graph[1 + i]) {
      if (a.to > k && a.to < sink && a.cap == 0) {
        chosen[i].push_back(a.to - 1 - k);
      }
    }
    // arcs were added in ascending element order, so chosen[i] is sorted
  }
  return chosen;
}

std::optional<std::vector<int>> hall_violator(const SetFamily& f, int demand) {
  if (demand < 1) {
    throw InvalidInput("hall_violator: demand must be positive");
  }
  const int k = static_cast<int>(f.sets.size());
  // An empty set fails fast with the singleton violator.
  for (int i = 0; i < k; ++i) {
    if (f.sets[i].empty()) return std::vector<int>{i};
  }
  if (k == 0) return std::nullopt;

  MaxFlow net = build_network(f, demand);
  const int sink = 1 + k + f.universe_size;
  if (net.run(0, sink) == demand * k) return std::nullopt;

  std::vector<char> reach = net.residual_reachable(0);
  std::vector<int> violator;
  std::vector<char> in_union(f.universe_size, 0);
  long long union_size = 0;
  for (int i = 0; i < k; ++i) {
    if (!reach[1 + i]) continue;
    violator.push_back(i);
    for (int x : f.sets[i]) {
      if (!in_union[x]) {
        in_union[x] = 1;
        ++union_size;
      }
    }
  }
  if (violator.empty() ||
      union_size >= static_cast<long long>(demand) * static_cast<long long>(violator.size())) {
    throw ProofViolation("hall_violator: extracted cut does not violate Hall's condition");
  }
  return violator;
}

}  // namespace fracpow
