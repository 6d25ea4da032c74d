#include "ktori/homology.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <set>

namespace ktori {

std::string to_string(const HomologySignature& s) {
  return "(" + std::to_string(s.p) + "," + std::to_string(s.q) + ")";
}

HomologyBasis::HomologyBasis(const Triangulation& t) : t_(&t) {
  require_torus(t);
  const int n = t.num_vertices();
  const int ne = t.num_edges();
  const int nf = t.num_faces();
  tree_.assign(ne, 0);

  // Primal BFS spanning tree from vertex 1.
  std::vector<char> seen(n + 1, 0);
  std::queue<Vertex> q;
  seen[1] = 1;
  q.push(1);
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop();
    std::vector<Vertex> nb = t.link(u);
    std::sort(nb.begin(), nb.end());
    for (Vertex w : nb) {
      if (seen[w]) continue;
      seen[w] = 1;
      tree_[t.edge_index(u, w)] = 1;
      q.push(w);
    }
  }

  // Dual BFS spanning tree over edges not in the primal tree.
  std::vector<int> parent_edge(nf, -1);
  std::vector<char> cotree(ne, 0), fseen(nf, 0);
  std::vector<int> order;
  std::queue<int> fq;
  fseen[0] = 1;
  fq.push(0);
  while (!fq.empty()) {
    int f = fq.front();
    fq.pop();
    order.push_back(f);
    const Face& face = t.faces()[f];
    for (int k = 0; k < 3; ++k) {
      Vertex a = face[k], b = face[(k + 1) % 3];
      int e = t.edge_index(a, b);
      if (tree_[e]) continue;
      auto [f1, f2] = t.edge_faces(a, b);
      int g = f1 == f ? f2 : f1;
      if (fseen[g]) continue;
      fseen[g] = 1;
      cotree[e] = 1;
      parent_edge[g] = e;
      fq.push(g);
    }
  }

  for (int e = 0; e < ne; ++e)
    if (!tree_[e] && !cotree[e]) leftover_.push_back(t.edges()[e]);
  if (leftover_.size() != 2)
    throw Error(ErrorCode::NotGenusOne,
                "tree-cotree leaves " + std::to_string(leftover_.size()) + " edges, expected 2");

  value_.assign(ne, {});
  value_[t.edge_index(leftover_[0].first, leftover_[0].second)] = {1, 0};
  value_[t.edge_index(leftover_[1].first, leftover_[1].second)] = {0, 1};

  auto oriented_value = [&](Vertex a, Vertex b) {
    HomologySignature v = value_[t.edge_index(a, b)];
    return a < b ? v : -v;
  };

  // Peel dual-tree leaves: each face's boundary must sum to zero.
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int f = *it;
    if (parent_edge[f] < 0) continue;
    const Face& o = t.oriented()[f];
    const Edge pe = t.edges()[parent_edge[f]];
    HomologySignature rest;
    int sign = 0;
    for (int k = 0; k < 3; ++k) {
      Vertex a = o[k], b = o[(k + 1) % 3];
      if (make_edge(a, b) == pe) {
        sign = a < b ? 1 : -1;
        continue;
      }
      rest += oriented_value(a, b);
    }
    // sign * value(pe) + rest == 0
    value_[parent_edge[f]] = sign > 0 ? -rest : rest;
  }

  for (const auto& v : value_) {
    max_p_ = std::max<std::int64_t>(max_p_, std::llabs(v.p));
    max_q_ = std::max<std::int64_t>(max_q_, std::llabs(v.q));
  }
}

HomologySignature HomologyBasis::edge(Vertex a, Vertex b) const {
  int e = t_->edge_index(a, b);
  if (e < 0) throw Error(ErrorCode::NotACycle, "not an edge: " + to_string(make_edge(a, b)));
  return a < b ? value_[e] : -value_[e];
}

bool HomologyBasis::is_tree_edge(Vertex a, Vertex b) const {
  int e = t_->edge_index(a, b);
  return e >= 0 && tree_[e];
}

HomologySignature walk_signature(const Triangulation& t, const HomologyBasis& basis,
                                 std::span<const Vertex> walk) {
  HomologySignature s;
  const std::size_t len = walk.size();
  for (std::size_t i = 0; i < len; ++i) {
    Vertex a = walk[i], b = walk[(i + 1) % len];
    if (!t.has_edge(a, b)) throw Error(ErrorCode::NotACycle, "not an edge: " + to_string(make_edge(a, b)));
    s += basis.edge(a, b);
  }
  return s;
}

void check_cycle(const Triangulation& t, const Cycle& c) {
  if (c.length() < 3) throw Error(ErrorCode::NotACycle, "cycle " + to_string(c) + " has fewer than 3 vertices");
  std::set<Vertex> distinct(c.vertices.begin(), c.vertices.end());
  if (distinct.size() != c.length()) throw Error(ErrorCode::NotACycle, "cycle " + to_string(c) + " repeats a vertex");
  for (std::size_t i = 0; i < c.length(); ++i) {
    Vertex a = c.vertices[i], b = c.vertices[(i + 1) % c.length()];
    if (!t.has_edge(a, b))
      throw Error(ErrorCode::NotACycle, "cycle " + to_string(c) + " uses non-edge " + to_string(make_edge(a, b)));
  }
}

HomologySignature cycle_signature(const Triangulation& t, const HomologyBasis& basis, const Cycle& c) {
  check_cycle(t, c);
  return walk_signature(t, basis, c.vertices);
}

bool is_separating(const Triangulation& t, const HomologyBasis& basis, const Cycle& c) {
  return cycle_signature(t, basis, c).is_zero();
}

}  // namespace ktori
