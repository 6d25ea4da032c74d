#include "ktori/census.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <mutex>
#include <set>
#include <thread>

#include "ktori/canonical.hpp"
#include "ktori/cycles.hpp"
#include "ktori/generators.hpp"

namespace ktori {

namespace {

constexpr int kN = kCensusMax + 1;

// A partial closed surface: every link is a disjoint union of paths until it
// closes into a single cycle.
struct State {
  std::array<std::array<std::uint8_t, kN>, kN> cnt{};  // faces on edge
  std::array<std::array<std::int8_t, kN>, kN> pend{};  // in link(x): other end of y's path
  std::array<std::array<std::array<std::int8_t, 2>, kN>, kN> third{};
  std::array<std::int8_t, kN> deg{}, open{}, ref{}, toward{};
  std::array<bool, kN> closed{};
  std::array<Face, 2 * kN> faces{};
  int nf = 0;
  int labels = 0;

  bool link_ok(int x, int y, int z, int dmax) const {
    if (closed[x] || cnt[x][y] == 2 || cnt[x][z] == 2) return false;
    if (deg[x] + (cnt[x][y] == 0) + (cnt[x][z] == 0) > dmax) return false;
    if (cnt[x][y] == 1 && cnt[x][z] == 1 && pend[x][y] == z) return open[x] == 2 && deg[x] >= 3;
    return true;
  }

  void link_add(int x, int y, int z) {
    const int cy = cnt[x][y], cz = cnt[x][z];
    deg[x] += (cy == 0) + (cz == 0);
    if (cy == 0 && cz == 0) {
      pend[x][y] = static_cast<std::int8_t>(z);
      pend[x][z] = static_cast<std::int8_t>(y);
      open[x] += 2;
    } else if (cy == 1 && cz == 0) {
      int e = pend[x][y];
      pend[x][e] = static_cast<std::int8_t>(z);
      pend[x][z] = static_cast<std::int8_t>(e);
    } else if (cy == 0 && cz == 1) {
      int e = pend[x][z];
      pend[x][e] = static_cast<std::int8_t>(y);
      pend[x][y] = static_cast<std::int8_t>(e);
    } else if (pend[x][y] == z) {
      open[x] -= 2;
      closed[x] = true;
    } else {
      int ey = pend[x][y], ez = pend[x][z];
      pend[x][ey] = static_cast<std::int8_t>(ez);
      pend[x][ez] = static_cast<std::int8_t>(ey);
      open[x] -= 2;
    }
  }

  void bump(int a, int b, int c) {
    third[a][b][cnt[a][b]] = static_cast<std::int8_t>(c);
    third[b][a][cnt[b][a]] = static_cast<std::int8_t>(c);
    ++cnt[a][b];
    ++cnt[b][a];
  }

  bool try_add(int a, int b, int c, int dmax, int max_faces) {
    if (nf >= max_faces) return false;
    if (!link_ok(a, b, c, dmax) || !link_ok(b, c, a, dmax) || !link_ok(c, a, b, dmax)) return false;
    link_add(a, b, c);
    link_add(b, c, a);
    link_add(c, a, b);
    bump(a, b, c);
    bump(b, c, a);
    bump(c, a, b);
    faces[nf++] = make_face(a, b, c);
    return true;
  }

  bool all_closed() const {
    for (int v = 1; v <= labels; ++v)
      if (!closed[v]) return false;
    return true;
  }

  std::vector<Face> face_list() const {
    std::vector<Face> out(faces.begin(), faces.begin() + nf);
    std::sort(out.begin(), out.end());
    return out;
  }
};

// Vertex 1 of degree d with link 2, 3, ..., d+1.
State root_star(int d) {
  State s;
  s.labels = d + 1;
  for (int i = 2; i <= d + 1; ++i) {
    int j = i == d + 1 ? 2 : i + 1;
    s.try_add(1, i, j, d, 2 * kN);
  }
  s.ref[1] = 2;
  s.toward[1] = 3;
  for (int i = 2; i <= d + 1; ++i) {
    s.ref[i] = 1;
    s.toward[i] = static_cast<std::int8_t>(i == 2 ? d + 1 : i - 1);
  }
  return s;
}

bool is_torus_faces(const std::vector<Face>& faces, int n) {
  Triangulation t(faces);
  auto r = t.report();
  return t.num_vertices() == n && r.connected && r.orientable && r.euler == 0;
}

class Budget {
 public:
  explicit Budget(double secs) : secs_(secs), start_(std::chrono::steady_clock::now()) {}
  bool expired() {
    if (secs_ <= 0) return false;
    if (stop_.load(std::memory_order_relaxed)) return true;
    if ((++ticks_ & 0x3fff) != 0) return false;
    if (elapsed() > secs_) stop_ = true;
    return stop_;
  }
  bool stopped() const { return stop_; }
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  double secs_;
  std::chrono::steady_clock::time_point start_;
  std::atomic<bool> stop_{false};
  thread_local static inline std::uint64_t ticks_ = 0;
};

class Orderly {
 public:
  Orderly(int n, int worker, int workers, Budget& budget)
      : n_(n), worker_(worker), workers_(workers), budget_(budget) {}

  std::vector<std::vector<Face>> run() {
    for (int d = 6; d <= n_ - 1; ++d) {
      dmax_ = d;
      split_faces_ = std::min(d + 3, 2 * n_);
      State s = root_star(d);
      process(s, 2);
      if (budget_.stopped()) break;
    }
    return std::move(found_);
  }

 private:
  void process(const State& s, int u) {
    while (u <= s.labels && s.closed[u]) ++u;
    if (u > s.labels) return finish(s);
    walk(s, u, s.ref[u], s.toward[u]);
  }

  void walk(const State& s, int u, int prev, int cur) {
    if (budget_.expired()) return;
    while (cur != s.ref[u]) {
      if (s.cnt[u][cur] == 2) {
        int next = s.third[u][cur][0] == prev ? s.third[u][cur][1] : s.third[u][cur][0];
        prev = cur;
        cur = next;
        continue;
      }
      const int top = s.labels < n_ ? s.labels + 1 : s.labels;
      for (int x = 1; x <= top; ++x) {
        if (x == u || x == cur) continue;
        State t = s;
        if (!t.try_add(u, cur, x, dmax_, 2 * n_)) continue;
        if (x > s.labels) {
          t.labels = x;
          t.ref[x] = static_cast<std::int8_t>(u);
          t.toward[x] = static_cast<std::int8_t>(cur);
        }
        if (t.nf == split_faces_ && static_cast<int>(branch_++ % workers_) != worker_) continue;
        walk(t, u, cur, x);
      }
      return;
    }
    process(s, u + 1);
  }

  void finish(const State& s) {
    if (s.labels != n_ || s.nf != 2 * n_ || !s.all_closed()) return;
    if (s.nf < split_faces_ && worker_ != 0) return;
    auto faces = s.face_list();
    if (!is_torus_faces(faces, n_)) return;
    if (!is_minimal_flag(Triangulation(faces), {1, 2, 3})) return;
    found_.push_back(std::move(faces));
  }

  int n_, worker_, workers_;
  Budget& budget_;
  int dmax_ = 0;
  int split_faces_ = 0;
  std::uint64_t branch_ = 0;
  std::vector<std::vector<Face>> found_;
};

class Lexicographic {
 public:
  explicit Lexicographic(int n) : n_(n) {}

  std::vector<std::vector<Face>> run() {
    for (int d = 6; d <= n_ - 1; ++d) {
      dmax_ = d;
      search(root_star(d));
    }
    return {found_.begin(), found_.end()};
  }

 private:
  void search(const State& s) {
    int a = 0, b = 0;
    for (int x = 1; x <= s.labels && !a; ++x)
      for (int y = x + 1; y <= s.labels; ++y)
        if (s.cnt[x][y] == 1) {
          a = x;
          b = y;
          break;
        }
    if (!a) {
      if (s.labels != n_ || s.nf != 2 * n_ || !s.all_closed()) return;
      auto faces = s.face_list();
      if (is_torus_faces(faces, n_)) found_.insert(canonical_form(Triangulation(faces)));
      return;
    }
    const int top = s.labels < n_ ? s.labels + 1 : s.labels;
    for (int c = 1; c <= top; ++c) {
      if (c == a || c == b) continue;
      State t = s;
      if (!t.try_add(a, b, c, dmax_, 2 * n_)) continue;
      t.labels = std::max(t.labels, c);
      search(t);
    }
  }

  int n_;
  int dmax_ = 0;
  std::set<std::vector<Face>> found_;
};

void check_range(int n, int lo) {
  if (n < lo || n > kCensusMax)
    throw Error(ErrorCode::OutOfRange, "census supports " + std::to_string(lo) + " <= n <= " +
                                           std::to_string(kCensusMax) + ", got n = " + std::to_string(n));
}

}  // namespace

std::map<std::string, int> CensusResult::by_type() const {
  std::map<std::string, int> out;
  for (const auto& r : records) ++out[r.type_string()];
  return out;
}

std::vector<std::vector<Face>> orderly_tori(int n, const CensusOptions& options, bool* complete) {
  check_range(n, 4);
  const int workers = std::max(1, options.threads);
  Budget budget(options.time_budget_secs);
  std::vector<std::vector<std::vector<Face>>> parts(workers);
  if (workers == 1) {
    parts[0] = Orderly(n, 0, 1, budget).run();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&, w] { parts[w] = Orderly(n, w, workers, budget).run(); });
    for (auto& th : pool) th.join();
  }
  std::vector<std::vector<Face>> out;
  for (auto& p : parts)
    for (auto& f : p) out.push_back(std::move(f));
  std::sort(out.begin(), out.end());
  if (complete) *complete = !budget.stopped();
  return out;
}

std::vector<std::vector<Face>> lexicographic_tori(int n) {
  check_range(n, 4);
  return Lexicographic(n).run();
}

CensusRecord make_record(const Triangulation& t) {
  CensusRecord r;
  CanonicalLabeling c = canonical_labeling(t);
  r.canonical_faces = c.faces;
  r.automorphism_order = c.automorphism_order;
  r.n = t.num_vertices();
  auto type = stick_number_and_type(t);
  r.m = type.m;
  r.s = type.s;
  r.equivelar = true;
  for (Vertex v = 1; v <= r.n; ++v) r.equivelar = r.equivelar && t.degree(v) == 6;
  return r;
}

CensusResult run_census(int n, const CensusOptions& options) {
  check_range(n, kCensusMin);
  auto start = std::chrono::steady_clock::now();
  CensusResult result;
  result.n = n;
  auto faces = orderly_tori(n, options, &result.complete);
  result.records.reserve(faces.size());
  for (const auto& f : faces) result.records.push_back(make_record(Triangulation(f)));
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::vector<CensusRecord> enumerate_tori(int n) { return run_census(n).records; }

MinimalTypeReport census_verify_theorem31(int k, const CensusOptions& options) {
  if (k < 3) throw Error(ErrorCode::InvalidK, "k = " + std::to_string(k) + " < 3");
  const int top = 3 * k - 2;
  if (top > kCensusMax)
    throw Error(ErrorCode::OutOfRange, "3k-2 = " + std::to_string(top) + " exceeds the census range");
  MinimalTypeReport r;
  r.k = k;
  r.none_below = true;
  std::vector<std::vector<Face>> at_top;
  for (int n = kCensusMin; n <= top; ++n) {
    bool complete = true;
    auto faces = orderly_tori(n, options, &complete);
    if (!complete) throw Error(ErrorCode::OutOfRange, "time budget exhausted at n = " + std::to_string(n));
    int count = 0;
    for (const auto& f : faces) {
      auto type = stick_number_and_type(Triangulation(f));
      if (type.m != 3 || type.s != k) continue;
      ++count;
      if (n == top) at_top.push_back(f);
    }
    r.count_by_n[n] = count;
    if (n < top && count) r.none_below = false;
  }
  r.unique_at_minimum = at_top.size() == 1;
  if (r.unique_at_minimum) {
    r.witness = at_top[0];
    r.matches_generator = canonical_form(minimal_torus_3k(k)) == r.witness;
  }
  return r;
}

}  // namespace ktori
