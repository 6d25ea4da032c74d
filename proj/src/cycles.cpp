#include "ktori/cycles.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <queue>
#include <unordered_map>

namespace ktori {

namespace {

constexpr int kUnreached = std::numeric_limits<int>::max();

// Packs a covering-graph state (vertex, class) into one key.
std::uint64_t state_key(Vertex v, const HomologySignature& s) {
  constexpr std::int64_t kOffset = std::int64_t{1} << 23;
  return (static_cast<std::uint64_t>(v) << 48) | (static_cast<std::uint64_t>(s.p + kOffset) << 24) |
         static_cast<std::uint64_t>(s.q + kOffset);
}

std::vector<std::vector<Vertex>> sorted_neighbours(const Triangulation& t) {
  std::vector<std::vector<Vertex>> nb(t.num_vertices() + 1);
  for (Vertex v = 1; v <= t.num_vertices(); ++v) {
    nb[v] = t.link(v);
    std::sort(nb[v].begin(), nb[v].end());
  }
  return nb;
}

// BFS in the covering graph from (s, 0) through vertices >= s, up to `limit`
// levels. Records distances and the accepted classes first reached at s.
struct CoverSearch {
  std::unordered_map<std::uint64_t, int> dist;
  int found_at = kUnreached;
  std::vector<HomologySignature> targets;  // accepted classes at depth found_at
};

CoverSearch cover_bfs(const std::vector<std::vector<Vertex>>& nb, const HomologyBasis& basis, Vertex s,
                      const ClassPredicate& accept, int limit) {
  CoverSearch cs;
  std::vector<std::pair<Vertex, HomologySignature>> frontier{{s, {}}};
  cs.dist[state_key(s, {})] = 0;
  for (int depth = 1; depth <= limit && !frontier.empty(); ++depth) {
    std::vector<std::pair<Vertex, HomologySignature>> next;
    for (const auto& [u, sig] : frontier) {
      for (Vertex w : nb[u]) {
        if (w < s) continue;
        HomologySignature ns = sig + basis.edge(u, w);
        auto [it, fresh] = cs.dist.try_emplace(state_key(w, ns), depth);
        if (!fresh) continue;
        next.emplace_back(w, ns);
        if (w == s && accept(ns)) {
          cs.found_at = depth;
          cs.targets.push_back(ns);
        }
      }
    }
    if (cs.found_at != kUnreached) break;
    frontier = std::move(next);
  }
  return cs;
}

// Lexicographically least closed walk of length L from s realising a target.
std::vector<Vertex> greedy_walk(const std::vector<std::vector<Vertex>>& nb, const HomologyBasis& basis, Vertex s,
                                const CoverSearch& cs) {
  const int L = cs.found_at;
  auto remaining_ok = [&](Vertex w, const HomologySignature& tau, int remaining) {
    for (const auto& target : cs.targets) {
      auto it = cs.dist.find(state_key(w, tau - target));
      if (it != cs.dist.end() && it->second <= remaining) return true;
    }
    return false;
  };
  std::vector<Vertex> walk{s};
  Vertex x = s;
  HomologySignature tau;
  for (int i = 0; i < L; ++i) {
    bool moved = false;
    for (Vertex w : nb[x]) {
      if (w < s) continue;
      HomologySignature nt = tau + basis.edge(x, w);
      if (!remaining_ok(w, nt, L - i - 1)) continue;
      x = w;
      tau = nt;
      if (i + 1 < L) walk.push_back(w);
      moved = true;
      break;
    }
    if (!moved) return {};
  }
  return walk;
}

bool all_distinct(std::vector<Vertex> v) {
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

// Exhaustive search for the lexicographically least simple cycle of exactly
// `length` edges whose class is accepted.
std::optional<Cycle> dfs_simple_cycle(const Triangulation& t, const std::vector<std::vector<Vertex>>& nb,
                                      const HomologyBasis& basis, const ClassPredicate& accept, int length) {
  const int n = t.num_vertices();
  std::vector<Vertex> path;
  std::vector<char> on_path(n + 1, 0);
  std::vector<int> back(n + 1);
  for (Vertex s = 1; s <= n; ++s) {
    // Distances back to s through vertices >= s.
    std::fill(back.begin(), back.end(), kUnreached);
    std::queue<Vertex> q;
    back[s] = 0;
    q.push(s);
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      for (Vertex w : nb[u])
        if (w > s && back[w] == kUnreached) {
          back[w] = back[u] + 1;
          q.push(w);
        }
    }
    path.assign(1, s);
    on_path[s] = 1;
    std::optional<Cycle> found;
    std::function<void(HomologySignature)> extend = [&](HomologySignature sig) {
      if (found) return;
      Vertex u = path.back();
      const int used = static_cast<int>(path.size()) - 1;
      if (used == length - 1) {
        if (path[1] < u && t.has_edge(u, s)) {
          HomologySignature total = sig + basis.edge(u, s);
          if (accept(total)) found = Cycle{path};
        }
        return;
      }
      for (Vertex w : nb[u]) {
        if (w <= s || on_path[w] || back[w] > length - used - 1) continue;
        path.push_back(w);
        on_path[w] = 1;
        extend(sig + basis.edge(u, w));
        on_path[w] = 0;
        path.pop_back();
        if (found) return;
      }
    };
    extend({});
    on_path[s] = 0;
    if (found) return found;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Cycle> shortest_simple_cycle(const Triangulation& t, const HomologyBasis& basis,
                                           const ClassPredicate& accept) {
  const int n = t.num_vertices();
  auto nb = sorted_neighbours(t);
  CoverSearch first = cover_bfs(nb, basis, 1, accept, n);
  if (first.found_at == kUnreached) return std::nullopt;
  const int L = first.found_at;

  for (Vertex s = 1; s <= n; ++s) {
    CoverSearch cs = s == 1 ? std::move(first) : cover_bfs(nb, basis, s, accept, L);
    if (cs.found_at != L) continue;
    std::vector<Vertex> walk = greedy_walk(nb, basis, s, cs);
    if (!walk.empty() && all_distinct(walk)) return Cycle{walk};
    break;  // the least walk repeats a vertex; fall back to exhaustive search
  }
  for (int len = std::max(L, 3); len <= n; ++len)
    if (auto c = dfs_simple_cycle(t, nb, basis, accept, len)) return c;
  return std::nullopt;
}

ShortestResult shortest_nonseparating(const Triangulation& t, const HomologyBasis& basis) {
  auto c = shortest_simple_cycle(t, basis, [](const HomologySignature& s) { return !s.is_zero(); });
  if (!c) throw Error(ErrorCode::NotGenusOne, "no non-separating cycle");
  return {static_cast<int>(c->length()), *c};
}

ShortestResult shortest_nonseparating(const Triangulation& t) {
  HomologyBasis basis(t);
  return shortest_nonseparating(t, basis);
}

MarkedType marked_type(const Triangulation& t, const HomologyBasis& basis, const Cycle& mark) {
  HomologySignature sm = cycle_signature(t, basis, mark);
  if (sm.is_zero()) throw Error(ErrorCode::SeparatingMark, "mark " + to_string(mark) + " bounds a disc");
  auto same = shortest_simple_cycle(t, basis, [&](const HomologySignature& s) { return same_class(s, sm); });
  auto other = shortest_simple_cycle(
      t, basis, [&](const HomologySignature& s) { return !s.is_zero() && !same_class(s, sm); });
  if (!same || !other) throw Error(ErrorCode::NotGenusOne, "missing cycle class");
  return {static_cast<int>(same->length()), static_cast<int>(other->length()), *same, *other};
}

MarkedType marked_type(const Triangulation& t, const Cycle& mark) {
  HomologyBasis basis(t);
  return marked_type(t, basis, mark);
}

TorusTypeResult stick_number_and_type(const Triangulation& t, const HomologyBasis& basis) {
  ShortestResult shortest = shortest_nonseparating(t, basis);
  HomologySignature sm = cycle_signature(t, basis, shortest.witness);
  auto other = shortest_simple_cycle(
      t, basis, [&](const HomologySignature& s) { return !s.is_zero() && !same_class(s, sm); });
  if (!other) throw Error(ErrorCode::NotGenusOne, "missing second cycle class");
  TorusTypeResult r;
  r.m = shortest.length;
  r.s = static_cast<int>(other->length());
  r.witness_m = shortest.witness;
  r.witness_s = *other;
  r.class_m = sm;
  r.class_s = cycle_signature(t, basis, *other);
  return r;
}

TorusTypeResult stick_number_and_type(const Triangulation& t) {
  HomologyBasis basis(t);
  return stick_number_and_type(t, basis);
}

long long lower_bound(int m, int k) {
  if (m < 3 || m > k)
    throw Error(ErrorCode::InvalidType, "need 3 <= m <= k, got " + std::to_string(m) + "x" + std::to_string(k));
  const long long c = (m + 1) / 2;
  return 2 * c * c + (k - 2 * c) * static_cast<long long>(m) + 1;
}

bool bound_strict_gap(int m, int k) {
  if (m < 3 || m > k)
    throw Error(ErrorCode::InvalidType, "need 3 <= m <= k, got " + std::to_string(m) + "x" + std::to_string(k));
  const long long c = (m + 1) / 2;
  return static_cast<long long>(m - 3) * k + 2 * c * c - 2 * c * m + 3 > 0;
}

CutReport cut_along(const Triangulation& t, const Cycle& c) {
  check_cycle(t, c);
  const int nf = t.num_faces();
  const int len = static_cast<int>(c.length());
  std::vector<int> parent(nf);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };

  std::vector<char> on_cycle(t.num_edges(), 0);
  for (int i = 0; i < len; ++i) on_cycle[t.edge_index(c.vertices[i], c.vertices[(i + 1) % len])] = 1;
  for (int e = 0; e < t.num_edges(); ++e) {
    if (on_cycle[e]) continue;
    auto [f, g] = t.edge_faces(t.edges()[e].first, t.edges()[e].second);
    parent[find(f)] = find(g);
  }
  CutReport r;
  for (int f = 0; f < nf; ++f)
    if (find(f) == f) ++r.components;

  // Each cycle vertex splits into two copies, one per side of the cycle.
  auto side_of = [&](int i, int face) {
    Vertex x = c.vertices[i];
    Vertex prev = c.vertices[(i + len - 1) % len], next = c.vertices[(i + 1) % len];
    const auto& lk = t.link(x);
    const int d = static_cast<int>(lk.size());
    int a = static_cast<int>(std::find(lk.begin(), lk.end(), prev) - lk.begin());
    const Face& f = t.faces()[face];
    for (int j = a, steps = 0; steps < d; j = (j + 1) % d, ++steps) {
      if (lk[j] == next) return 1;
      Face corner = make_face(x, lk[j], lk[(j + 1) % d]);
      if (corner == f) return 0;
    }
    return 1;
  };
  std::vector<int> copy_parent(2 * len);
  std::iota(copy_parent.begin(), copy_parent.end(), 0);
  std::function<int(int)> find_copy = [&](int x) {
    return copy_parent[x] == x ? x : copy_parent[x] = find_copy(copy_parent[x]);
  };
  for (int i = 0; i < len; ++i) {
    int j = (i + 1) % len;
    auto [f, g] = t.edge_faces(c.vertices[i], c.vertices[j]);
    for (int face : {f, g}) {
      int a = 2 * i + side_of(i, face), b = 2 * j + side_of(j, face);
      copy_parent[find_copy(a)] = find_copy(b);
    }
  }
  for (int x = 0; x < 2 * len; ++x)
    if (find_copy(x) == x) ++r.boundary_circles;
  return r;
}

}  // namespace ktori
