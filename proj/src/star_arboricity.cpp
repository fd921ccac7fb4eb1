#include "fracpow/star_arboricity.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "fracpow/errors.hpp"

namespace fracpow {

namespace {

std::vector<int> indegree_class(const Digraph& d) {
  std::vector<int> next(d.vertex_count, 0);
  std::vector<int> cls(d.arcs.size());
  for (std::size_t i = 0; i < d.arcs.size(); ++i) {
    cls[i] = next[d.arcs[i].second]++;
  }
  return cls;
}

}  // namespace

Digraph::Digraph(int vertex_count_, std::vector<std::pair<VertexId, VertexId>> arcs_)
    : vertex_count(vertex_count_), arcs(std::move(arcs_)) {
  if (vertex_count < 0) {
    throw InvalidInput("digraph: negative vertex count");
  }
  for (const auto& [t, h] : arcs) {
    if (t < 0 || h < 0 || t >= vertex_count || h >= vertex_count) {
      throw InvalidInput("digraph: arc endpoint out of range");
    }
    if (t == h) {
      throw InvalidInput("digraph: self-loop rejected");
    }
  }
}

int Digraph::max_indegree() const {
  std::vector<int> indeg(vertex_count, 0);
  int best = 0;
  for (const auto& [t, h] : arcs) {
    best = std::max(best, ++indeg[h]);
  }
  return best;
}

std::vector<Digraph> split_by_indegree(const Digraph& d) {
  const int c = d.max_indegree();
  std::vector<int> cls = indegree_class(d);
  std::vector<Digraph> parts(c);
  for (auto& p : parts) p.vertex_count = d.vertex_count;
  for (std::size_t i = 0; i < d.arcs.size(); ++i) {
    parts[cls[i]].arcs.push_back(d.arcs[i]);
  }
  return parts;
}

StarForestDecomposition decompose_pseudoforest(const Digraph& d1) {
  const int n = d1.vertex_count;

  // in_arc[v]: the unique arc whose head is v, or -1.
  std::vector<int> in_arc(n, -1);
  std::vector<int> parent(n, -1);
  for (std::size_t i = 0; i < d1.arcs.size(); ++i) {
    const auto& [t, h] = d1.arcs[i];
    if (in_arc[h] != -1) {
      throw InvalidInput("decompose_pseudoforest: max indegree exceeds 1");
    }
    in_arc[h] = static_cast<int>(i);
    parent[h] = t;
  }
  std::vector<std::vector<int>> out_arcs(n);
  for (std::size_t i = 0; i < d1.arcs.size(); ++i) {
    out_arcs[d1.arcs[i].first].push_back(static_cast<int>(i));
  }

  std::vector<int> arc_class(d1.arcs.size(), -1);
  std::vector<char> on_cycle(n, 0);
  std::vector<int> state(n, 0);  // 0 new, 1 current walk, 2 done

  // Phase 1: find each component's unique cycle by parent-walking and label
  // its arcs, starting at the minimum-id cycle vertex.
  for (VertexId v = 0; v < n; ++v) {
    if (state[v] != 0) continue;
    std::vector<VertexId> walk;
    VertexId x = v;
    while (x != -1 && state[x] == 0) {
      state[x] = 1;
      walk.push_back(x);
      x = parent[x];
    }
    if (x != -1 && state[x] == 1) {
      auto it = std::find(walk.begin(), walk.end(), x);
      std::vector<VertexId> cycle(it, walk.end());
      auto min_it = std::min_element(cycle.begin(), cycle.end());
      std::rotate(cycle.begin(), min_it, cycle.end());
      const int len = static_cast<int>(cycle.size());
      for (int j = 0; j < len; ++j) {
        on_cycle[cycle[j]] = 1;
        // cycle[j+1] = parent(cycle[j]): consecutive in-arcs conflict
        arc_class[in_arc[cycle[j]]] = (len % 2 == 1 && j == len - 1) ? 2 : j % 2;
      }
    }
    for (VertexId u : walk) state[u] = 2;
  }

  // Phase 2: tree arcs, top-down from roots and cycle vertices. The in-arc of
  // a child only has to differ from the in-arc of its parent.
  std::vector<VertexId> queue;
  for (VertexId v = 0; v < n; ++v) {
    if (parent[v] == -1 || on_cycle[v]) queue.push_back(v);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    VertexId p = queue[head];
    const int parent_class = in_arc[p] >= 0 ? arc_class[in_arc[p]] : -1;
    for (int a : out_arcs[p]) {
      VertexId child = d1.arcs[a].second;
      if (on_cycle[child]) continue;
      arc_class[a] = parent_class == 0 ? 1 : 0;
      queue.push_back(child);
    }
  }

  StarForestDecomposition dec;
  dec.arc_class = std::move(arc_class);
  for (int c : dec.arc_class) dec.class_count = std::max(dec.class_count, c + 1);
  return dec;
}

StarForestDecomposition star_forest_decompose(const Digraph& d) {
  std::vector<int> stage1 = indegree_class(d);
  const int c = d.max_indegree();

  std::vector<int> labels(d.arcs.size(), -1);
  for (int part = 0; part < c; ++part) {
    Digraph sub;
    sub.vertex_count = d.vertex_count;
    std::vector<int> original;
    for (std::size_t i = 0; i < d.arcs.size(); ++i) {
      if (stage1[i] == part) {
        sub.arcs.push_back(d.arcs[i]);
        original.push_back(static_cast<int>(i));
      }
    }
    StarForestDecomposition part_dec = decompose_pseudoforest(sub);
    for (std::size_t j = 0; j < original.size(); ++j) {
      labels[original[j]] = 3 * part + part_dec.arc_class[j];
    }
  }

  // Dense relabel (stride-3 labels may have gaps).
  std::vector<int> used(labels.begin(), labels.end());
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  StarForestDecomposition dec;
  dec.class_count = static_cast<int>(used.size());
  dec.arc_class.resize(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    dec.arc_class[i] = static_cast<int>(
        std::lower_bound(used.begin(), used.end(), labels[i]) - used.begin());
  }

  auto violations = validate_decomposition(d, dec);
  if (!violations.empty()) {
    throw ProofViolation("star_forest_decompose: invalid decomposition: " + violations.front());
  }
  return dec;
}

std::vector<std::string> validate_decomposition(const Digraph& d,
                                                const StarForestDecomposition& dec) {
  std::vector<std::string> out;
  if (dec.arc_class.size() != d.arcs.size()) {
    out.push_back("arc label count does not match arc count");
    return out;
  }
  for (std::size_t i = 0; i < dec.arc_class.size(); ++i) {
    if (dec.arc_class[i] < 0 || dec.arc_class[i] >= dec.class_count) {
      out.push_back("arc " + std::to_string(i) + " has label outside [0, class_count)");
      return out;
    }
  }
  // Per class and vertex: indegree <= 1, never both in- and out-arcs.
  std::vector<int> in_count(static_cast<std::size_t>(dec.class_count) * d.vertex_count, 0);
  std::vector<char> has_out(in_count.size(), 0);
  auto at = [&](int cls, VertexId v) {
    return static_cast<std::size_t>(cls) * d.vertex_count + v;
  };
  for (std::size_t i = 0; i < d.arcs.size(); ++i) {
    const auto& [t, h] = d.arcs[i];
    const int cls = dec.arc_class[i];
    has_out[at(cls, t)] = 1;
    ++in_count[at(cls, h)];
  }
  for (int cls = 0; cls < dec.class_count; ++cls) {
    for (VertexId v = 0; v < d.vertex_count; ++v) {
      if (in_count[at(cls, v)] > 1) {
        out.push_back("class " + std::to_string(cls) + ": vertex " + std::to_string(v) +
                      " has indegree " + std::to_string(in_count[at(cls, v)]));
      }
      if (in_count[at(cls, v)] > 0 && has_out[at(cls, v)]) {
        out.push_back("class " + std::to_string(cls) + ": vertex " + std::to_string(v) +
                      " has both incoming and outgoing arcs");
      }
    }
  }
  return out;
}

Digraph parse_digraph(const std::string& text) {
  std::istringstream in(text);
  std::string tag;
  if (!(in >> tag) || tag != "d") {
    throw InvalidInput("digraph: expected header line `d <vertices> <arcs>`");
  }
  long long nv = -1, na = -1;
  if (!(in >> nv >> na) || nv < 0 || na < 0) {
    throw InvalidInput("digraph: malformed header counts");
  }
  std::vector<std::pair<VertexId, VertexId>> arcs;
  arcs.reserve(static_cast<std::size_t>(na));
  for (long long i = 0; i < na; ++i) {
    long long t, h;
    if (!(in >> t >> h)) {
      throw InvalidInput("digraph: fewer arcs than announced");
    }
    arcs.emplace_back(static_cast<VertexId>(t), static_cast<VertexId>(h));
  }
  std::string extra;
  if (in >> extra) {
    throw InvalidInput("digraph: trailing content after announced arcs");
  }
  return Digraph(static_cast<int>(nv), std::move(arcs));
}

std::string format_digraph(const Digraph& d) {
  std::ostringstream out;
  out << "d " << d.vertex_count << ' ' << d.arc_count() << '\n';
  for (const auto& [t, h] : d.arcs) {
    out << t << ' ' << h << '\n';
  }
  return out.str();
}

Digraph read_digraph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw InvalidInput("cannot open digraph file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_digraph(buf.str());
}

std::string format_decomposition(const StarForestDecomposition& dec) {
  std::ostringstream out;
  for (std::size_t i = 0; i < dec.arc_class.size(); ++i) {
    out << i << ' ' << dec.arc_class[i] << '\n';
  }
  return out.str();
}

}  // namespace fracpow
