#include "ktori/layers.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>

#include "ktori/cycles.hpp"
#include "ktori/homology.hpp"

namespace ktori {

namespace {

enum Side { kRight = 0, kLeft = 1 };

// For every (cycle vertex, incident face) the side of M the face lies on,
// made globally consistent by following the two boundary circles of the cut.
class SideMap {
 public:
  SideMap(const Triangulation& t, const Cycle& c) : t_(t), c_(c), len_(static_cast<int>(c.length())) {
    pos_.assign(t.num_vertices() + 1, -1);
    for (int i = 0; i < len_; ++i) pos_[c.vertices[i]] = i;
    std::vector<int> parent(2 * len_);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (int i = 0; i < len_; ++i) {
      int j = (i + 1) % len_;
      auto [f, g] = t.edge_faces(c.vertices[i], c.vertices[j]);
      for (int face : {f, g}) parent[find(2 * i + local(i, face))] = find(2 * j + local(j, face));
    }
    side_.resize(2 * len_);
    int right_root = find(0);
    for (int x = 0; x < 2 * len_; ++x) side_[x] = find(x) == right_root ? kRight : kLeft;
  }

  bool on_cycle(Vertex x) const { return pos_[x] >= 0; }
  bool is_cycle_edge(Vertex a, Vertex b) const {
    if (!on_cycle(a) || !on_cycle(b)) return false;
    int d = std::abs(pos_[a] - pos_[b]);
    return d == 1 || d == len_ - 1;
  }

  // Side at cycle vertex x of the (non-cycle) edge x-w.
  Side edge_side(Vertex x, Vertex w) const {
    auto [f, g] = t_.edge_faces(x, w);
    (void)g;
    int i = pos_[x];
    return side_[2 * i + local(i, f)];
  }

 private:
  // 0/1 split of the link of c[i] by its two cycle neighbours.
  int local(int i, int face) const {
    Vertex x = c_.vertices[i];
    Vertex prev = c_.vertices[(i + len_ - 1) % len_], next = c_.vertices[(i + 1) % len_];
    const auto& lk = t_.link(x);
    const int d = static_cast<int>(lk.size());
    int a = static_cast<int>(std::find(lk.begin(), lk.end(), prev) - lk.begin());
    const Face& f = t_.faces()[face];
    for (int j = a, steps = 0; steps < d; j = (j + 1) % d, ++steps) {
      if (lk[j] == next) return 1;
      if (make_face(x, lk[j], lk[(j + 1) % d]) == f) return 0;
    }
    return 1;
  }

  const Triangulation& t_;
  const Cycle& c_;
  int len_;
  std::vector<int> pos_;
  std::vector<Side> side_;
};

}  // namespace

DistanceLayerReport distance_layers(const Triangulation& t, const Cycle& mark, Vertex v) {
  HomologyBasis basis(t);
  if (cycle_signature(t, basis, mark).is_zero())
    throw Error(ErrorCode::SeparatingMark, "mark " + to_string(mark) + " bounds a disc");
  if (std::find(mark.vertices.begin(), mark.vertices.end(), v) == mark.vertices.end())
    throw Error(ErrorCode::InvalidArgument, "vertex " + std::to_string(v) + " is not on the mark");
  TorusTypeResult type = stick_number_and_type(t, basis);
  if (static_cast<int>(mark.length()) > type.m)
    throw Error(ErrorCode::MarkNotShortest, "mark has length " + std::to_string(mark.length()) +
                                                " but m = " + std::to_string(type.m));

  const int n = t.num_vertices();
  SideMap sides(t, mark);

  // Level change along the directed edge a -> b in the cyclic cover.
  auto delta = [&](Vertex a, Vertex b) {
    const bool ma = sides.on_cycle(a), mb = sides.on_cycle(b);
    if (!ma && !mb) return 0;
    if (sides.is_cycle_edge(a, b)) return 0;
    int d = 0;
    if (ma) d += sides.edge_side(a, b) == kRight ? 0 : -1;
    if (mb) d += sides.edge_side(b, a) == kRight ? 0 : 1;
    return d;
  };

  std::vector<int> dist(n + 1, -1);
  std::map<std::pair<Vertex, int>, int> cover;
  std::queue<std::pair<Vertex, int>> q;
  cover[{v, 0}] = 0;
  q.push({v, 0});
  while (!q.empty()) {
    auto [u, level] = q.front();
    q.pop();
    int du = cover[{u, level}];
    if (dist[u] < 0) dist[u] = du;
    if (du > n) continue;
    for (Vertex w : t.link(u)) {
      std::pair<Vertex, int> key{w, level + delta(u, w)};
      if (cover.count(key)) continue;
      cover[key] = du + 1;
      q.push(key);
    }
  }

  DistanceLayerReport r;
  r.m = type.m;
  r.k = type.s;
  int ecc = *std::max_element(dist.begin() + 1, dist.end());
  r.level_sizes.assign(ecc + 1, 0);
  r.right_sizes.assign(ecc + 1, 0);
  r.left_sizes.assign(ecc + 1, 0);
  for (Vertex w = 1; w <= n; ++w) {
    const int i = dist[w];
    ++r.level_sizes[i];
    if (sides.on_cycle(w)) {
      ++r.right_sizes[i];
      continue;
    }
    bool right = false, left = false;
    for (const auto& [key, d] : cover) {
      if (key.first != w || d != i) continue;
      (key.second >= 0 ? right : left) = true;
    }
    if (right && left) ++r.ambiguous;
    ++(left && !right ? r.left_sizes[i] : r.right_sizes[i]);
  }

  const int m = r.m, k = r.k;
  const int half = (m + 1) / 2;
  const int split_max = (k - 1) / 2;
  auto at = [](const std::vector<int>& v, int i) { return i < static_cast<int>(v.size()) ? v[i] : 0; };
  auto add = [&](std::vector<LayerCount>& out, const char* name, int i, int size, long long need, bool checked) {
    out.push_back({i, size, need, checked});
    if (checked && size < need)
      r.violated.push_back(std::string("|") + name + "_" + std::to_string(i) + "| = " + std::to_string(size) +
                           " < " + std::to_string(need));
  };
  for (int i = 0; i <= half - 1; ++i) add(r.a, "A", i, at(r.right_sizes, i), 2 * i + 1, i <= std::max(split_max, 0));
  for (int i = half; i <= split_max; ++i) add(r.b, "B", i, at(r.right_sizes, i), m, true);
  for (int i = half + 1; i <= split_max; ++i) add(r.d, "D", i, at(r.left_sizes, i), m, true);
  for (int i = 1; i <= half; ++i) add(r.e, "E", i, at(r.left_sizes, i), 2 * i - 1, i <= split_max);
  if (k % 2 == 0) {
    LayerCount c{k / 2, at(r.level_sizes, k / 2), m, true};
    r.c = c;
    if (c.size < m)
      r.violated.push_back("|C_" + std::to_string(k / 2) + "| = " + std::to_string(c.size) + " < " +
                           std::to_string(m));
  }
  for (int i = 0; i <= k / 2; ++i)
    if (at(r.level_sizes, i) == 0) r.violated.push_back("V_" + std::to_string(i) + " is empty");
  return r;
}

}  // namespace ktori
