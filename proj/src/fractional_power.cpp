#include "fracpow/fractional_power.hpp"

#include <algorithm>

#include "fracpow/errors.hpp"

namespace fracpow {

VertexId FractionalPower::path_vertex(EdgeId e, VertexId from, int depth) const {
  const auto& [u, v] = source.edge(e);
  if (from != u && from != v) {
    throw InvalidInput("path_vertex: `from` is not an endpoint of the edge");
  }
  if (depth < 0 || depth > n) {
    throw InvalidInput("path_vertex: depth out of range");
  }
  if (depth == 0) return from;
  if (depth == n) return from == u ? v : u;
  int pos = from == u ? depth : n - depth;
  return branch_count() + e * (n - 1) + pos - 1;
}

FractionalPower subdivide(const Graph& g, int n) {
  if (n < 1) {
    throw InvalidInput("subdivide: n must be positive");
  }
  FractionalPower fp;
  fp.source = g;
  fp.n = n;
  fp.m = 1;

  const int nb = g.vertex_count();
  fp.roles.resize(nb + (n - 1) * g.edge_count());
  for (VertexId v = 0; v < nb; ++v) {
    fp.roles[v] = VertexRole{VertexRole::Kind::Branch, v, -1, -1, 0};
  }
  fp.hub.assign(nb, {});

  if (n == 1) {
    fp.graph = g;
    return fp;
  }

  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(static_cast<std::size_t>(n) * g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto& [u, w] = g.edge(e);
    VertexId prev = u;
    for (int pos = 1; pos <= n - 1; ++pos) {
      VertexId id = nb + e * (n - 1) + pos - 1;
      edges.emplace_back(prev, id);
      prev = id;
      if (2 * pos < n) {
        fp.roles[id] = VertexRole{VertexRole::Kind::Inner, -1, e, u, pos};
        fp.hub[u].push_back(id);
      } else if (2 * pos == n) {
        fp.roles[id] = VertexRole{VertexRole::Kind::Middle, -1, e, -1, 0};
      } else {
        fp.roles[id] = VertexRole{VertexRole::Kind::Inner, -1, e, w, n - pos};
        fp.hub[w].push_back(id);
      }
    }
    edges.emplace_back(prev, w);
  }
  fp.graph = Graph(nb + (n - 1) * g.edge_count(), std::move(edges));
  for (auto& h : fp.hub) {
    std::sort(h.begin(), h.end());
  }
  return fp;
}

Graph power(const Graph& h, int m) {
  if (m < 1) {
    throw InvalidInput("power: m must be positive");
  }
  const int n = h.vertex_count();
  std::vector<int> dist(n, -1);
  std::vector<VertexId> frontier;
  std::vector<VertexId> touched;
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId s = 0; s < n; ++s) {
    dist[s] = 0;
    frontier.assign(1, s);
    touched.assign(1, s);
    for (int level = 1; level <= m && !frontier.empty(); ++level) {
      std::vector<VertexId> next;
      for (VertexId x : frontier) {
        for (VertexId y : h.neighbours(x)) {
          if (dist[y] == -1) {
            dist[y] = level;
            next.push_back(y);
            touched.push_back(y);
            if (y > s) edges.emplace_back(s, y);
          }
        }
      }
      frontier = std::move(next);
    }
    for (VertexId t : touched) dist[t] = -1;
  }
  return Graph(n, std::move(edges));
}

FractionalPower fractional_power(const Graph& g, int m, int n) {
  if (m < 1) {
    throw InvalidInput("fractional_power: m must be positive");
  }
  FractionalPower fp = subdivide(g, n);
  fp.m = m;
  if (m > 1) {
    fp.graph = power(fp.graph, m);
  }
  return fp;
}

std::unordered_map<VertexId, int> distances_from(const Graph& h, VertexId s, int cap) {
  if (s < 0 || s >= h.vertex_count()) {
    throw InvalidInput("distances_from: source vertex out of range");
  }
  if (cap < 0) {
    throw InvalidInput("distances_from: cap must be non-negative");
  }
  std::unordered_map<VertexId, int> dist;
  dist.emplace(s, 0);
  std::vector<VertexId> frontier{s};
  for (int level = 1; level <= cap && !frontier.empty(); ++level) {
    std::vector<VertexId> next;
    for (VertexId x : frontier) {
      for (VertexId y : h.neighbours(x)) {
        if (dist.emplace(y, level).second) {
          next.push_back(y);
        }
      }
    }
    frontier = std::move(next);
  }
  return dist;
}

}  // namespace fracpow
