#pragma once

// Naive reference implementations used only by the tests. They work with
// plain coordinate vectors and integer matrices and share no code with the
// library beyond the labels of Dynkin vertices.

#include <boost/rational.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oracle {

using Vec = std::vector<long>;
using Mat = std::vector<Vec>;  // row-major, square
using Q = boost::rational<long>;

/// Bourbaki edges, 0-based.
inline std::vector<std::pair<int, int>> edges(char family, int r) {
  std::vector<std::pair<int, int>> out;
  if (family == 'A') {
    for (int i = 0; i + 1 < r; ++i) out.emplace_back(i, i + 1);
  } else if (family == 'D') {
    for (int i = 0; i + 2 < r; ++i) out.emplace_back(i, i + 1);
    out.emplace_back(r - 3, r - 1);
  } else {
    out = {{0, 2}, {1, 3}, {2, 3}};
    for (int i = 3; i + 1 < r; ++i) out.emplace_back(i, i + 1);
  }
  return out;
}

inline Mat cartan(char family, int r) {
  Mat a(r, Vec(r, 0));
  for (int i = 0; i < r; ++i) a[i][i] = 2;
  for (auto [i, j] : edges(family, r)) a[i][j] = a[j][i] = -1;
  return a;
}

inline long form(const Mat& a, const Vec& x, const Vec& y) {
  long s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) s += x[i] * a[i][j] * y[j];
  return s;
}

inline Vec unit(int r, int i) {
  Vec v(r, 0);
  v[i] = 1;
  return v;
}

inline Vec reflect(const Mat& a, const Vec& v, const Vec& root) {
  const long c = form(a, v, root);
  Vec out = v;
  for (std::size_t k = 0; k < v.size(); ++k) out[k] -= c * root[k];
  return out;
}

/// All roots, by closing the simple roots under simple reflections.
inline std::set<Vec> roots(const Mat& a) {
  const int r = static_cast<int>(a.size());
  std::set<Vec> out;
  std::vector<Vec> todo;
  for (int i = 0; i < r; ++i) todo.push_back(unit(r, i));
  while (!todo.empty()) {
    Vec v = todo.back();
    todo.pop_back();
    if (!out.insert(v).second) continue;
    for (int i = 0; i < r; ++i) todo.push_back(reflect(a, v, unit(r, i)));
  }
  return out;
}

inline bool nonnegative(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](long c) { return c >= 0; });
}

inline std::vector<Vec> positive_roots(const Mat& a) {
  std::vector<Vec> out;
  for (const auto& v : roots(a))
    if (nonnegative(v)) out.push_back(v);
  return out;
}

inline Mat identity(int r) {
  Mat m(r, Vec(r, 0));
  for (int i = 0; i < r; ++i) m[i][i] = 1;
  return m;
}

inline Mat multiply(const Mat& x, const Mat& y) {
  const std::size_t r = x.size();
  Mat m(r, Vec(r, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < r; ++k)
      for (std::size_t j = 0; j < r; ++j) m[i][j] += x[i][k] * y[k][j];
  return m;
}

inline Vec act(const Mat& m, const Vec& v) {
  Vec out(v.size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

/// Matrix of the reflection in a root, acting on simple-root coordinates.
inline Mat reflection(const Mat& a, const Vec& root) {
  const int r = static_cast<int>(a.size());
  Mat m(r, Vec(r, 0));
  for (int j = 0; j < r; ++j) {
    const Vec col = reflect(a, unit(r, j), root);
    for (int i = 0; i < r; ++i) m[i][j] = col[i];
  }
  return m;
}

/// s_{word[0]} s_{word[1]} ... in the reference simple reflections.
inline Mat word_matrix(const Mat& a, const std::vector<int>& word) {
  const int r = static_cast<int>(a.size());
  Mat m = identity(r);
  for (int i : word) m = multiply(m, reflection(a, unit(r, i)));
  return m;
}

struct Element {
  Mat w;
  Mat inverse;
};

/// Breadth-first closure of W as matrices; refuses more than `cap` elements.
inline std::vector<Element> weyl_group(const Mat& a, std::size_t cap = 60000) {
  const int r = static_cast<int>(a.size());
  std::map<Mat, Mat> seen;
  seen.emplace(identity(r), identity(r));
  std::vector<Mat> frontier{identity(r)};
  while (!frontier.empty()) {
    std::vector<Mat> next;
    for (const auto& w : frontier)
      for (int i = 0; i < r; ++i) {
        const Mat s = reflection(a, unit(r, i));
        Mat ws = multiply(w, s);
        if (seen.count(ws)) continue;
        seen.emplace(ws, multiply(s, seen.at(w)));
        next.push_back(std::move(ws));
        if (seen.size() > cap) throw std::length_error("Weyl group larger than the oracle cap");
      }
    frontier = std::move(next);
  }
  std::vector<Element> out;
  for (auto& [w, inv] : seen) out.push_back({w, inv});
  return out;
}

/// #{alpha > 0 : w(alpha) < 0}.
inline int length(const Mat& a, const Mat& w) {
  int n = 0;
  for (const auto& v : positive_roots(a))
    if (!nonnegative(act(w, v))) ++n;
  return n;
}

/// The simple system w(Pi_ref), vertex by vertex.
inline std::vector<Vec> simple_system(const Element& e) {
  const int r = static_cast<int>(e.w.size());
  std::vector<Vec> out;
  for (int i = 0; i < r; ++i) out.push_back(act(e.w, unit(r, i)));
  return out;
}

/// The length of C with respect to w(Pi_ref) is the reference length of w^-1 C w.
inline int length_wrt(const Mat& a, const Element& e, const Mat& c) {
  return length(a, multiply(e.inverse, multiply(c, e.w)));
}

/// Reflexive reachability in an orientation given as arrows (tail, head).
inline bool reaches(int r, const std::vector<std::pair<int, int>>& arrows, int from, int to) {
  std::vector<bool> seen(r, false);
  std::vector<int> todo{from};
  while (!todo.empty()) {
    const int v = todo.back();
    todo.pop_back();
    if (seen[v]) continue;
    seen[v] = true;
    for (auto [x, y] : arrows)
      if (x == v) todo.push_back(y);
  }
  return seen[to];
}

/// Arrows i -> j for each edge, i being the one that comes first in `word`.
inline std::vector<std::pair<int, int>> orientation(char family, int r, const std::vector<int>& word) {
  std::vector<int> position(r);
  for (int k = 0; k < r; ++k) position[word[k]] = k;
  std::vector<std::pair<int, int>> out;
  for (auto [i, j] : edges(family, r)) out.push_back(position[i] < position[j] ? std::pair(i, j) : std::pair(j, i));
  return out;
}

/// Exact inverse by Gauss-Jordan over Q.
inline std::vector<std::vector<Q>> inverse(const Mat& m) {
  const std::size_t r = m.size();
  std::vector<std::vector<Q>> a(r, std::vector<Q>(2 * r, Q(0)));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) a[i][j] = Q(m[i][j]);
    a[i][r + i] = Q(1);
  }
  for (std::size_t col = 0; col < r; ++col) {
    std::size_t p = col;
    while (p < r && a[p][col].numerator() == 0) ++p;
    if (p == r) throw std::domain_error("singular");
    std::swap(a[p], a[col]);
    const Q lead = a[col][col];
    for (auto& x : a[col]) x /= lead;
    for (std::size_t i = 0; i < r; ++i) {
      if (i == col || a[i][col].numerator() == 0) continue;
      const Q f = a[i][col];
      for (std::size_t j = 0; j < 2 * r; ++j) a[i][j] -= f * a[col][j];
    }
  }
  std::vector<std::vector<Q>> out(r, std::vector<Q>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) out[i][j] = a[i][r + j];
  return out;
}

}  // namespace oracle
