#include "fracpow/generators.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <unordered_set>

#include "fracpow/errors.hpp"

namespace fracpow {

namespace {

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

// 53-bit uniform double in [0, 1); stable across platforms for mt19937_64.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

Graph complete_graph(int k) {
  if (k < 1) throw InvalidInput("complete: k must be positive");
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int u = 0; u < k; ++u) {
    for (int v = u + 1; v < k; ++v) edges.emplace_back(u, v);
  }
  return Graph(k, std::move(edges));
}

Graph cycle_graph(int n) {
  if (n < 3) throw InvalidInput("cycle: n must be at least 3");
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int u = 0; u < n; ++u) edges.emplace_back(u, (u + 1) % n);
  return Graph(n, std::move(edges));
}

Graph path_graph(int n) {
  if (n < 1) throw InvalidInput("path: n must be positive");
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
  return Graph(n, std::move(edges));
}

Graph hypercube_graph(int dimension) {
  if (dimension < 0 || dimension > 20) {
    throw InvalidInput("hypercube: dimension must be in 0..20");
  }
  int n = 1 << dimension;
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int u = 0; u < n; ++u) {
    for (int b = 0; b < dimension; ++b) {
      if (!(u & (1 << b))) edges.emplace_back(u, u | (1 << b));
    }
  }
  return Graph(n, std::move(edges));
}

Graph random_regular_graph(int n, int d, std::uint64_t seed) {
  if (n < 1 || d < 0 || d >= n) {
    throw InvalidInput("random_regular: need 0 <= d < n");
  }
  if ((static_cast<long long>(n) * d) % 2 != 0) {
    throw InvalidInput("random_regular: n*d must be even");
  }
  if (d == 0) return Graph(n, {});

  // Circulant start: jumps 1..d/2, plus n/2 when d is odd (n even then).
  // Each unordered pair {u, u+j} appears exactly once as u runs over all
  // vertices, since j <= d/2 < n/2.
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int j = 1; j <= d / 2; ++j) {
    for (int u = 0; u < n; ++u) {
      int v = (u + j) % n;
      edges.emplace_back(std::min(u, v), std::max(u, v));
    }
  }
  if (d % 2 == 1) {
    for (int u = 0; u < n / 2; ++u) edges.emplace_back(u, u + n / 2);
  }

  auto key = [n](VertexId u, VertexId v) {
    if (u > v) std::swap(u, v);
    return static_cast<long long>(u) * n + v;
  };
  std::unordered_set<long long> present;
  present.reserve(edges.size() * 2);
  for (const auto& [u, v] : edges) present.insert(key(u, v));

  std::mt19937_64 rng(seed);
  const long long swaps = 20LL * n * d;
  const auto m = edges.size();
  for (long long it = 0; it < swaps; ++it) {
    std::size_t i = rng() % m, j = rng() % m;
    if (i == j) continue;
    auto [a, b] = edges[i];
    auto [c, e] = edges[j];
    if (rng() & 1) std::swap(c, e);
    // rewire {a,b},{c,e} -> {a,c},{b,e}
    if (a == c || a == e || b == c || b == e) continue;
    if (present.count(key(a, c)) || present.count(key(b, e))) continue;
    present.erase(key(a, b));
    present.erase(key(c, e));
    present.insert(key(a, c));
    present.insert(key(b, e));
    edges[i] = {std::min(a, c), std::max(a, c)};
    edges[j] = {std::min(b, e), std::max(b, e)};
  }
  return Graph(n, std::move(edges));
}

Graph erdos_renyi_graph(int n, double p, std::uint64_t seed) {
  if (n < 0) throw InvalidInput("erdos_renyi: n must be non-negative");
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidInput("erdos_renyi: p must be in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (uniform01(rng) < p) edges.emplace_back(u, v);
    }
  }
  return Graph(n, std::move(edges));
}

Graph paley_graph(int q) {
  if (!is_prime(q)) {
    throw InvalidInput("paley: q must be prime (prime powers not supported)");
  }
  if (q % 4 != 1) {
    throw InvalidInput("paley: q must be congruent to 1 mod 4");
  }
  std::vector<char> residue(q, 0);
  for (int x = 1; x < q; ++x) {
    residue[static_cast<long long>(x) * x % q] = 1;
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int u = 0; u < q; ++u) {
    for (int v = u + 1; v < q; ++v) {
      if (residue[v - u]) edges.emplace_back(u, v);
    }
  }
  return Graph(q, std::move(edges));
}

Graph generate(const std::string& family_spec) {
  std::istringstream in(family_spec);
  std::string family;
  if (!(in >> family)) {
    throw InvalidInput("generate: empty family spec");
  }
  auto read_int = [&](const char* what) {
    long long x;
    if (!(in >> x)) throw InvalidInput(std::string("generate: missing/invalid ") + what);
    return x;
  };
  auto read_double = [&](const char* what) {
    double x;
    if (!(in >> x)) throw InvalidInput(std::string("generate: missing/invalid ") + what);
    return x;
  };
  auto done = [&in, &family]() {
    std::string extra;
    if (in >> extra) {
      throw InvalidInput("generate: trailing arguments for family " + family);
    }
  };

  if (family == "complete") {
    int k = static_cast<int>(read_int("k"));
    done();
    return complete_graph(k);
  }
  if (family == "cycle") {
    int n = static_cast<int>(read_int("n"));
    done();
    return cycle_graph(n);
  }
  if (family == "path") {
    int n = static_cast<int>(read_int("n"));
    done();
    return path_graph(n);
  }
  if (family == "hypercube") {
    int d = static_cast<int>(read_int("dimension"));
    done();
    return hypercube_graph(d);
  }
  if (family == "random_regular") {
    int n = static_cast<int>(read_int("n"));
    int d = static_cast<int>(read_int("d"));
    auto seed = static_cast<std::uint64_t>(read_int("seed"));
    done();
    return random_regular_graph(n, d, seed);
  }
  if (family == "erdos_renyi") {
    int n = static_cast<int>(read_int("n"));
    double p = read_double("p");
    auto seed = static_cast<std::uint64_t>(read_int("seed"));
    done();
    return erdos_renyi_graph(n, p, seed);
  }
  if (family == "paley") {
    int q = static_cast<int>(read_int("q"));
    done();
    return paley_graph(q);
  }
  throw InvalidInput("generate: unknown family `" + family + "`");
}

}  // namespace fracpow
