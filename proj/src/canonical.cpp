#include "ktori/canonical.hpp"

#include <algorithm>

namespace ktori {

namespace {

int position_in(const std::vector<Vertex>& link, Vertex x) {
  auto it = std::find(link.begin(), link.end(), x);
  return it == link.end() ? -1 : static_cast<int>(it - link.begin());
}

}  // namespace

std::optional<std::vector<int>> flag_code(const Triangulation& t, const Flag& flag,
                                          const std::vector<int>* bound,
                                          std::vector<Vertex>* new_label) {
  const int n = t.num_vertices();
  std::vector<Vertex> label(n + 1, 0);
  std::vector<Vertex> ref(n + 1, 0), toward(n + 1, 0);
  std::vector<Vertex> order;
  order.reserve(n);

  std::vector<int> code;
  code.reserve(static_cast<std::size_t>(n) + 2 * static_cast<std::size_t>(t.num_edges()));
  bool less = false;  // already strictly below bound
  auto emit = [&](int value) -> bool {
    if (bound && !less) {
      std::size_t i = code.size();
      if (i < bound->size()) {
        if (value > (*bound)[i]) return false;
        if (value < (*bound)[i]) less = true;
      }
    }
    code.push_back(value);
    return true;
  };

  label[flag.root] = 1;
  order.push_back(flag.root);
  ref[flag.root] = flag.first;
  toward[flag.root] = flag.second;
  int next_label = 2;

  for (std::size_t head = 0; head < order.size(); ++head) {
    Vertex u = order[head];
    const auto& lk = t.link(u);
    const int d = static_cast<int>(lk.size());
    int start = position_in(lk, ref[u]);
    int step = lk[(start + 1) % d] == toward[u] ? 1 : d - 1;
    if (!emit(d)) return std::nullopt;
    Vertex prev = lk[(start + (d - step) % d) % d];
    for (int i = 0, pos = start; i < d; ++i, pos = (pos + step) % d) {
      Vertex w = lk[pos];
      if (label[w] == 0) {
        label[w] = next_label++;
        order.push_back(w);
        ref[w] = u;
        toward[w] = prev;
      }
      if (!emit(label[w])) return std::nullopt;
      prev = w;
    }
  }
  if (new_label) *new_label = std::move(label);
  return code;
}

std::vector<Flag> seed_flags(const Triangulation& t) {
  int maxdeg = 0;
  for (Vertex v = 1; v <= t.num_vertices(); ++v) maxdeg = std::max(maxdeg, t.degree(v));
  std::vector<Flag> flags;
  for (Vertex v = 1; v <= t.num_vertices(); ++v) {
    if (t.degree(v) != maxdeg) continue;
    const auto& lk = t.link(v);
    const int d = static_cast<int>(lk.size());
    for (int i = 0; i < d; ++i) {
      flags.push_back({v, lk[i], lk[(i + 1) % d]});
      flags.push_back({v, lk[i], lk[(i + d - 1) % d]});
    }
  }
  return flags;
}

CanonicalLabeling canonical_labeling(const Triangulation& t) {
  CanonicalLabeling best;
  std::vector<Vertex> labels;
  for (const Flag& f : seed_flags(t)) {
    auto code = flag_code(t, f, best.code.empty() ? nullptr : &best.code, &labels);
    if (!code) continue;
    if (best.code.empty() || *code < best.code) {
      best.code = std::move(*code);
      best.new_label = labels;
      best.automorphism_order = 1;
    } else if (*code == best.code) {
      ++best.automorphism_order;
    }
  }
  best.faces = relabel(t.faces(), best.new_label);
  return best;
}

std::vector<Face> canonical_form(const Triangulation& t) { return canonical_labeling(t).faces; }

std::optional<std::vector<Vertex>> is_isomorphic(const Triangulation& t1, const Triangulation& t2) {
  if (t1.num_vertices() != t2.num_vertices() || t1.num_faces() != t2.num_faces()) return std::nullopt;
  CanonicalLabeling c1 = canonical_labeling(t1);
  CanonicalLabeling c2 = canonical_labeling(t2);
  if (c1.code != c2.code) return std::nullopt;
  const int n = t1.num_vertices();
  std::vector<Vertex> inverse2(n + 1, 0);
  for (Vertex v = 1; v <= n; ++v) inverse2[c2.new_label[v]] = v;
  std::vector<Vertex> phi(n + 1, 0);
  for (Vertex v = 1; v <= n; ++v) phi[v] = inverse2[c1.new_label[v]];
  return phi;
}

bool is_minimal_flag(const Triangulation& t, const Flag& flag) {
  auto reference = flag_code(t, flag);
  for (const Flag& f : seed_flags(t)) {
    auto code = flag_code(t, f, &*reference);
    if (code && *code < *reference) return false;
  }
  return true;
}

bool is_automorphism(const Triangulation& t, const std::vector<Vertex>& perm) {
  const int n = t.num_vertices();
  if (static_cast<int>(perm.size()) != n + 1) return false;
  std::vector<char> hit(n + 1, 0);
  for (Vertex v = 1; v <= n; ++v) {
    if (perm[v] < 1 || perm[v] > n || hit[perm[v]]) return false;
    hit[perm[v]] = 1;
  }
  for (const Face& f : t.faces())
    if (t.face_index({perm[f[0]], perm[f[1]], perm[f[2]]}) < 0) return false;
  return true;
}

}  // namespace ktori
