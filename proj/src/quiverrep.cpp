#include "coxar/quiverrep.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace coxar {

namespace {

std::string show(ZIVertex v) { return "(" + std::to_string(v.i + 1) + "," + std::to_string(v.k) + ")"; }

std::string show(IhatVertex v) { return "(" + std::to_string(v.i + 1) + "," + std::to_string(v.n) + ")"; }

std::string show(const IntVector& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
  os << ']';
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// ZI
// ---------------------------------------------------------------------------

ZIQuiver::ZIQuiver(DynkinType type, int radius) : diagram_(type), radius_(radius) {
  if (radius < type.coxeter_number())
    throw std::invalid_argument("window radius " + std::to_string(radius) + " is below h = " +
                                std::to_string(type.coxeter_number()));
}

std::vector<ZIVertex> ZIQuiver::vertices() const {
  std::vector<ZIVertex> out;
  for (int k = -radius_; k <= radius_; ++k)
    for (int i = 0; i < diagram_.rank(); ++i) out.push_back({i, k});
  return out;
}

std::vector<ZIVertex> ZIQuiver::successors(ZIVertex v) const {
  std::vector<ZIVertex> out;
  for (int j : diagram_.neighbors(v.i)) {
    const bool farther = diagram_.distance_from_first(j) > diagram_.distance_from_first(v.i);
    out.push_back({j, farther ? v.k : v.k + 1});
  }
  return out;
}

std::vector<ZIVertex> ZIQuiver::predecessors(ZIVertex v) const {
  std::vector<ZIVertex> out;
  for (int j : diagram_.neighbors(v.i)) {
    const bool farther = diagram_.distance_from_first(j) > diagram_.distance_from_first(v.i);
    out.push_back({j, farther ? v.k - 1 : v.k});
  }
  return out;
}

std::vector<std::pair<ZIVertex, ZIVertex>> ZIQuiver::edges() const {
  std::vector<std::pair<ZIVertex, ZIVertex>> out;
  for (const auto& v : vertices())
    for (const auto& w : successors(v))
      if (contains(w)) out.emplace_back(v, w);
  return out;
}

ZIQuiver build_zi(DynkinType type, std::optional<int> radius) {
  return ZIQuiver(type, radius.value_or(2 * type.coxeter_number()));
}

ZIVertex nakayama_zi(const RootSystem& rs, ZIVertex v) {
  const DynkinDiagram& d = rs.diagram();
  const int j = rs.check(v.i);
  const int shift2 = rs.coxeter_number() + d.distance_from_first(v.i) - d.distance_from_first(j);
  if (shift2 % 2 != 0) throw InvariantError("Nakayama shift is not an integer");
  return {j, v.k + shift2 / 2};
}

// ---------------------------------------------------------------------------
// Projectives and the AR quiver
// ---------------------------------------------------------------------------

std::vector<IntVector> projectives(const Orientation& omega) {
  const int r = omega.rank();
  std::vector<IntVector> out(r, IntVector(r, 0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (omega.path(i, j)) out[i][j] = 1;
  return out;
}

std::vector<int> zi_slice(const DynkinDiagram& diagram, const Orientation& slice_orientation) {
  std::vector<int> k(diagram.rank(), 0);
  std::vector<bool> done(diagram.rank(), false);
  done[0] = true;
  std::deque<int> todo{0};
  while (!todo.empty()) {
    const int v = todo.front();
    todo.pop_front();
    for (int u : diagram.neighbors(v)) {
      if (done[u]) continue;
      // v is nearer to vertex 1 than u.
      k[u] = slice_orientation.has_arrow(v, u) ? k[v] : k[v] - 1;
      done[u] = true;
      todo.push_back(u);
    }
  }
  return k;
}

ARQuiver ar_quiver(const RootSystem& rs, const Orientation& omega) {
  const DynkinDiagram& d = rs.diagram();
  const int r = rs.rank();
  const auto start = zi_slice(d, omega.opposite());
  std::vector<int> stop(r, 0);
  for (int i = 0; i < r; ++i) {
    const ZIVertex image = nakayama_zi(rs, {i, start[i]});
    stop[image.i] = image.k;
  }

  ARQuiver ar{omega, {}, {}, {}, {}};
  for (int i = 0; i < r; ++i)
    for (int k = start[i]; k < stop[i]; ++k) ar.vertices.push_back({i, k});
  auto level = [&](const ZIVertex& v) { return 2 * v.k + d.distance_from_first(v.i); };
  std::sort(ar.vertices.begin(), ar.vertices.end(), [&](const ZIVertex& a, const ZIVertex& b) {
    return level(a) != level(b) ? level(a) < level(b) : a.i < b.i;
  });
  if (static_cast<int>(ar.vertices.size()) != rs.positive_count())
    throw InvariantError("AR region has " + std::to_string(ar.vertices.size()) + " vertices, expected " +
                         std::to_string(rs.positive_count()));

  const auto proj = projectives(omega);
  const ZIQuiver zi(rs.type(), std::max(rs.coxeter_number(), 1));
  for (int i = 0; i < r; ++i) {
    ar.projective.push_back({i, start[i]});
    ar.dimension[{i, start[i]}] = proj[i];
  }
  for (const auto& x : ar.vertices) {
    if (x.k == start[x.i]) continue;
    const ZIVertex tx = ZIQuiver::tau(x);
    IntVector dim(r, 0);
    for (const auto& y : zi.successors(tx)) {
      auto it = ar.dimension.find(y);
      if (it == ar.dimension.end())
        throw InvariantError("mesh ending at " + show(x) + " leaves the AR region at " + show(y));
      for (int j = 0; j < r; ++j) dim[j] += it->second[j];
    }
    const IntVector& prev = ar.dimension.at(tx);
    for (int j = 0; j < r; ++j) dim[j] -= prev[j];
    if (std::any_of(dim.begin(), dim.end(), [](Int c) { return c < 0; }) ||
        std::all_of(dim.begin(), dim.end(), [](Int c) { return c == 0; }))
      throw InvariantError("knitting produced " + show(dim) + " at " + show(x));
    ar.dimension[x] = std::move(dim);
  }
  for (const auto& x : ar.vertices)
    for (const auto& y : zi.successors(x))
      if (ar.contains(y)) ar.edges.emplace_back(x, y);
  return ar;
}

// ---------------------------------------------------------------------------
// Covering map and the identification theorems
// ---------------------------------------------------------------------------

IhatVertex covering_map(const CoxeterContext& ctx, const HeightFunction& height, ZIVertex v) {
  const int period = 2 * ctx.coxeter_number();
  const int n = height.values.at(0) + ctx.roots().diagram().distance_from_first(v.i) + 2 * v.k;
  return {v.i, ((n % period) + period) % period};
}

IhatVertex covering_map(const CoxeterContext& ctx, const SimpleSystem& pi, ZIVertex v) {
  return covering_map(ctx, height_of(ctx, pi), v);
}

Verdict verify_commutative_diagram(const CoxeterContext& ctx, const SimpleSystem& pi) {
  const RootSystem& rs = ctx.roots();
  const Orientation omega = orientation_of(ctx, pi);
  const ARQuiver ar = ar_quiver(rs, omega.opposite());
  const PhiMap phi = build_phi(ctx, pi);
  const HeightFunction height = height_of(ctx, pi);

  std::vector<IhatVertex> image;
  for (const auto& x : ar.vertices) {
    const IntVector& dim = ar.dimension.at(x);
    const auto root = pi.root_from_coords(rs, dim);
    if (!root) return {false, "dimension vector " + show(dim) + " at " + show(x) + " is not a root"};
    const IhatVertex expected = covering_map(ctx, height, x);
    if (phi(*root) != expected)
      return {false, "X = " + show(x) + ": Phi(dim X) = " + show(phi(*root)) + " but P(X) = " + show(expected)};
    image.push_back(expected);
  }
  std::sort(image.begin(), image.end());
  if (image != delta_region(ctx, pi)) return {false, "P(AR quiver) differs from Delta"};
  return {};
}

Int euler_form_rep(const Orientation& omega, const IntVector& x, const IntVector& y) {
  if (static_cast<int>(x.size()) != omega.rank() || static_cast<int>(y.size()) != omega.rank())
    throw std::invalid_argument("dimension vector length does not match the quiver");
  Int out = 0;
  for (std::size_t i = 0; i < x.size(); ++i) out += x[i] * y[i];
  for (auto [a, b] : omega.arrows()) out -= x[a] * y[b];
  return out;
}

Verdict verify_euler_identification(const CoxeterContext& ctx, const SimpleSystem& pi) {
  const RootSystem& rs = ctx.roots();
  const IhatQuiver ihat(rs.type());
  const Orientation omega = orientation_of(ctx, pi);
  const ARQuiver ar = ar_quiver(rs, omega.opposite());
  const PhiMap phi = build_phi(ctx, pi);
  const HeightFunction height = height_of(ctx, pi);
  const EulerTable table = euler_form_from_pi(ctx, pi);

  std::vector<int> root_of;
  for (const auto& x : ar.vertices) root_of.push_back(phi.inverse.at(ihat.index(covering_map(ctx, height, x))));
  for (std::size_t a = 0; a < ar.vertices.size(); ++a)
    for (std::size_t b = 0; b < ar.vertices.size(); ++b) {
      const Int rep = euler_form_rep(ar.omega, ar.dimension.at(ar.vertices[a]), ar.dimension.at(ar.vertices[b]));
      const Int lattice = euler_pairing(rs, table, root_of[a], root_of[b]);
      if (rep != lattice)
        return {false, "<" + show(ar.vertices[a]) + "," + show(ar.vertices[b]) + ">: representations give " +
                           std::to_string(rep) + ", roots give " + std::to_string(lattice)};
    }
  return {};
}

}  // namespace coxar
