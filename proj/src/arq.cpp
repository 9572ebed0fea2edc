#include "coxar/arq.hpp"

#include <algorithm>
#include <deque>

namespace coxar {

// ---------------------------------------------------------------------------
// The quiver
// ---------------------------------------------------------------------------

IhatQuiver::IhatQuiver(DynkinType type) : diagram_(type), h_(type.coxeter_number()) {
  for (int n = 0; n < period(); ++n)
    for (int i = 0; i < rank(); ++i)
      if ((parity(i) + n) % 2 == 0) vertices_.push_back({i, n});
}

bool IhatQuiver::contains(IhatVertex v) const {
  return v.i >= 0 && v.i < rank() && v.n >= 0 && v.n < period() && (parity(v.i) + v.n) % 2 == 0;
}

int IhatQuiver::index(IhatVertex v) const {
  v = normalize(v);
  if (!contains(v))
    throw std::invalid_argument("(" + std::to_string(v.i + 1) + "," + std::to_string(v.n) +
                                ") violates the parity condition");
  // Vertices of one level are consecutive; count the earlier levels.
  const int even = static_cast<int>(std::count_if(vertices_.begin(), vertices_.end(),
                                                  [](const IhatVertex& u) { return u.n == 0; }));
  const int before = (v.n / 2) * rank() + (v.n % 2 ? even : 0);
  int offset = 0;
  for (int i = 0; i < v.i; ++i)
    if ((parity(i) + v.n) % 2 == 0) ++offset;
  return before + offset;
}

std::vector<IhatVertex> IhatQuiver::successors(IhatVertex v) const {
  std::vector<IhatVertex> out;
  for (int j : diagram_.neighbors(v.i)) out.push_back(normalize({j, v.n + 1}));
  return out;
}

std::vector<IhatVertex> IhatQuiver::predecessors(IhatVertex v) const {
  std::vector<IhatVertex> out;
  for (int j : diagram_.neighbors(v.i)) out.push_back(normalize({j, v.n - 1}));
  return out;
}

std::vector<std::pair<IhatVertex, IhatVertex>> IhatQuiver::edges() const {
  std::vector<std::pair<IhatVertex, IhatVertex>> out;
  for (const auto& v : vertices_)
    for (const auto& w : successors(v)) out.emplace_back(v, w);
  return out;
}

IhatQuiver build_ihat(DynkinType type) { return IhatQuiver(type); }

// ---------------------------------------------------------------------------
// Height functions
// ---------------------------------------------------------------------------

bool is_height_function(const IhatQuiver& ihat, const HeightFunction& f) {
  if (static_cast<int>(f.values.size()) != ihat.rank()) return false;
  for (int i = 0; i < ihat.rank(); ++i)
    if (!ihat.contains({i, f.values[i]})) return false;
  for (auto [a, b] : ihat.diagram().edges()) {
    const int d = ihat.mod(f.values[b] - f.values[a]);
    if (d != 1 && d != ihat.period() - 1) return false;
  }
  return true;
}

std::vector<HeightFunction> all_height_functions(const IhatQuiver& ihat) {
  std::vector<HeightFunction> out;
  const auto& edges = ihat.diagram().edges();
  for (int start = 0; start < ihat.period(); start += 2)
    for (unsigned long mask = 0; mask < (1ul << edges.size()); ++mask) {
      const Orientation o(ihat.diagram(), [&] {
        std::vector<std::pair<int, int>> arrows;
        for (std::size_t k = 0; k < edges.size(); ++k) {
          auto [a, b] = edges[k];
          arrows.push_back((mask >> k) & 1 ? std::make_pair(b, a) : std::make_pair(a, b));
        }
        return arrows;
      }());
      HeightFunction f{std::vector<int>(ihat.rank(), -1)};
      f.values[0] = start;
      std::deque<int> todo{0};
      while (!todo.empty()) {
        const int v = todo.front();
        todo.pop_front();
        for (int u : ihat.diagram().neighbors(v)) {
          if (f.values[u] >= 0) continue;
          f.values[u] = ihat.mod(f.values[v] + (o.has_arrow(v, u) ? 1 : -1));
          todo.push_back(u);
        }
      }
      out.push_back(std::move(f));
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IhatVertex> slice_of(const HeightFunction& f) {
  std::vector<IhatVertex> out;
  for (int i = 0; i < static_cast<int>(f.values.size()); ++i) out.push_back({i, f.values[i]});
  return out;
}

std::vector<int> lift_heights(const IhatQuiver& ihat, const HeightFunction& f) {
  if (!is_height_function(ihat, f)) throw std::invalid_argument("not a height function");
  std::vector<int> lifted(ihat.rank(), 0);
  std::vector<bool> done(ihat.rank(), false);
  lifted[0] = ihat.mod(f.values[0]);
  done[0] = true;
  std::deque<int> todo{0};
  while (!todo.empty()) {
    const int v = todo.front();
    todo.pop_front();
    for (int u : ihat.diagram().neighbors(v)) {
      if (done[u]) continue;
      lifted[u] = lifted[v] + (ihat.mod(f.values[u] - f.values[v]) == 1 ? 1 : -1);
      done[u] = true;
      todo.push_back(u);
    }
  }
  return lifted;
}

Orientation orientation_of_height(const IhatQuiver& ihat, const HeightFunction& f) {
  const auto lifted = lift_heights(ihat, f);
  std::vector<std::pair<int, int>> arrows;
  for (auto [a, b] : ihat.diagram().edges())
    arrows.push_back(lifted[b] == lifted[a] + 1 ? std::make_pair(a, b) : std::make_pair(b, a));
  return Orientation(ihat.diagram(), std::move(arrows));
}

// ---------------------------------------------------------------------------
// Phi
// ---------------------------------------------------------------------------

namespace {

// Levels of Phi(beta_i^pi) along the tree, given the level of vertex 1.
std::vector<int> beta_levels(const IhatQuiver& ihat, const Orientation& o, int first) {
  std::vector<int> level(ihat.rank(), 0);
  std::vector<bool> done(ihat.rank(), false);
  level[0] = first;
  done[0] = true;
  std::deque<int> todo{0};
  while (!todo.empty()) {
    const int v = todo.front();
    todo.pop_front();
    for (int u : ihat.diagram().neighbors(v)) {
      if (done[u]) continue;
      level[u] = level[v] + (o.has_arrow(v, u) ? 1 : -1);
      done[u] = true;
      todo.push_back(u);
    }
  }
  return level;
}

}  // namespace

PhiMap build_phi(const CoxeterContext& ctx, const SimpleSystem& pi) {
  const RootSystem& rs = ctx.roots();
  const IhatQuiver ihat(rs.type());
  const int h = ctx.coxeter_number();
  const BetaFamily anchor_family = beta_family(ctx, ctx.canonical());
  const BetaFamily family = beta_family(ctx, pi);
  const Orientation o = orientation_of(ctx, pi);

  const auto shift = orbit_position(ctx, anchor_family.beta[0], family.beta[0]);
  if (!shift) throw InvariantError("beta_1 of two compatible systems lie in different C-orbits");
  const IhatVertex anchor{0, ihat.parity(0)};
  const auto level = beta_levels(ihat, o, anchor.n + 2 * *shift);

  PhiMap phi;
  phi.anchor = anchor;
  phi.forward.assign(rs.size(), IhatVertex{-1, -1});
  phi.inverse.assign(ihat.size(), -1);
  for (int i = 0; i < rs.rank(); ++i) {
    int root = family.beta[i];
    for (int m = 0; m < h; ++m) {
      const IhatVertex v = ihat.normalize({i, level[i] + 2 * m});
      if (!ihat.contains(v)) throw InvariantError("Phi lands outside the quiver at vertex " + std::to_string(i + 1));
      if (phi.forward[root].i >= 0) throw InvariantError("C-orbits of two beta roots overlap");
      const int slot = ihat.index(v);
      if (phi.inverse[slot] >= 0) throw InvariantError("Phi is not injective");
      phi.forward[root] = v;
      phi.inverse[slot] = root;
      root = ctx.element()(root);
    }
    if (root != family.beta[i]) throw InvariantError("C-orbit length differs from h");
  }
  for (int x = 0; x < rs.size(); ++x)
    if (phi.forward[x].i < 0) throw InvariantError("Phi misses root " + rs.display(x));
  return phi;
}

HeightFunction height_of(const CoxeterContext& ctx, const SimpleSystem& pi) {
  const PhiMap phi = build_phi(ctx, pi);
  const BetaFamily family = beta_family(ctx, pi);
  HeightFunction f;
  for (int i = 0; i < ctx.rank(); ++i) f.values.push_back(phi(family.beta[i]).n);
  return f;
}

SimpleSystem simple_system_from_height(const CoxeterContext& ctx, const HeightFunction& target) {
  const IhatQuiver ihat(ctx.roots().type());
  if (!is_height_function(ihat, target)) throw std::invalid_argument("not a height function");
  SimpleSystem pi = ctx.canonical();
  std::vector<int> current = lift_heights(ihat, height_of(ctx, pi));
  std::vector<int> wanted = lift_heights(ihat, target);
  // Shift the target lift so that both agree at vertex 1 up to [0, 2h).
  const int offset = ihat.mod(wanted[0] - current[0]) + current[0] - wanted[0];
  for (auto& w : wanted) w += offset;

  const int r = ctx.rank();
  for (;;) {
    int pick = -1;
    bool raise = false;
    for (int i = 0; i < r && pick < 0; ++i) {
      if (current[i] == wanted[i]) continue;
      bool below = true, above = true;  // all neighbours one level higher / lower
      for (int j : ihat.diagram().neighbors(i)) {
        below = below && current[j] == current[i] + 1;
        above = above && current[j] == current[i] - 1;
      }
      if (current[i] < wanted[i] && below) pick = i, raise = true;
      if (current[i] > wanted[i] && above) pick = i, raise = false;
    }
    if (pick < 0) {
      if (current == wanted) break;
      throw InvariantError("no sink or source moves the height function towards its target");
    }
    pi = elementary_reflection(ctx, pi, pick);
    current[pick] += raise ? 2 : -2;
  }
  if (height_of(ctx, pi) != target) throw InvariantError("reconstructed system has the wrong height function");
  return pi;
}

// ---------------------------------------------------------------------------
// Nakayama involution, Delta and w0
// ---------------------------------------------------------------------------

IhatVertex nakayama_ihat(const CoxeterContext& ctx, IhatVertex v) {
  const int period = 2 * ctx.coxeter_number();
  return {ctx.roots().check(v.i), ((v.n + ctx.coxeter_number()) % period + period) % period};
}

SimpleSystem negative_system(const CoxeterContext& ctx, const SimpleSystem& pi) {
  const RootSystem& rs = ctx.roots();
  return pi.transformed(rs, longest_element(rs, pi));
}

std::vector<int> check_involution(const CoxeterContext& ctx, const SimpleSystem& pi) {
  const RootSystem& rs = ctx.roots();
  const int r = rs.rank();
  const WeylElement w0 = longest_element(rs, pi);
  std::vector<int> check(r, -1);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (w0(pi.root(j)) == rs.negate(pi.root(i))) check[i] = j;
  if (std::count(check.begin(), check.end(), -1))
    throw InvariantError("w0 does not send the simple roots to negative simple roots");

  const SimpleSystem minus = pi.transformed(rs, w0);
  const BetaFamily plus_beta = beta_family(ctx, pi);
  const BetaFamily minus_beta = beta_family(ctx, minus);
  for (int i = 0; i < r; ++i)
    if (rs.negate(plus_beta.beta[i]) != minus_beta.beta[check[i]])
      throw InvariantError("-beta_i and beta_{i-check} of the negative system differ at vertex " +
                           std::to_string(i + 1));
  return check;
}

std::vector<IhatVertex> lifted_delta(const CoxeterContext& ctx, const SimpleSystem& pi) {
  const IhatQuiver ihat(ctx.roots().type());
  const HeightFunction lower = height_of(ctx, pi);
  const HeightFunction upper = height_of(ctx, negative_system(ctx, pi));
  const auto lifted = lift_heights(ihat, lower);
  std::vector<IhatVertex> out;
  for (int i = 0; i < ihat.rank(); ++i) {
    const int span = ihat.mod(upper.values[i] - lower.values[i]);
    for (int m = 0; m < span / 2; ++m) out.push_back({i, lifted[i] + 2 * m});
  }
  std::sort(out.begin(), out.end(), [](const IhatVertex& a, const IhatVertex& b) {
    return a.n != b.n ? a.n < b.n : a.i < b.i;
  });
  if (static_cast<int>(out.size()) != ctx.roots().positive_count())
    throw InvariantError("Delta has " + std::to_string(out.size()) + " vertices, expected " +
                         std::to_string(ctx.roots().positive_count()));
  return out;
}

std::vector<IhatVertex> delta_region(const CoxeterContext& ctx, const SimpleSystem& pi) {
  const IhatQuiver ihat(ctx.roots().type());
  std::vector<IhatVertex> out;
  for (const auto& v : lifted_delta(ctx, pi)) out.push_back(ihat.normalize(v));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> w0_word(const CoxeterContext& ctx, const SimpleSystem& pi) {
  const RootSystem& rs = ctx.roots();
  std::vector<int> word;
  for (const auto& v : lifted_delta(ctx, pi)) word.push_back(v.i);
  const WeylElement w = evaluate_word(rs, pi, word);
  if (weyl_length(rs, pi, w) != static_cast<int>(word.size()) || static_cast<int>(word.size()) != rs.positive_count())
    throw InvariantError("w0 word is not reduced of length |R+|");
  for (int i = 0; i < rs.rank(); ++i)
    if (pi.is_positive(w(pi.root(i)))) throw InvariantError("w0 word does not send Pi to -Pi");
  return word;
}

// ---------------------------------------------------------------------------
// Root lattice
// ---------------------------------------------------------------------------

IntVector lattice_reduce(const IhatQuiver& ihat, const HeightFunction& reference, const IhatCombination& x) {
  const auto base = lift_heights(ihat, reference);
  const int period = ihat.period();
  // Keyed by (level, vertex) so the highest level is at the back.
  std::map<std::pair<int, int>, Int> terms;
  for (const auto& [v, c] : x) {
    if (c == 0) continue;
    const IhatVertex u = ihat.normalize(v);
    if (!ihat.contains(u)) throw std::invalid_argument("combination contains a vertex outside the quiver");
    const int level = base[u.i] + ((u.n - base[u.i]) % period + period) % period;
    terms[{level, u.i}] += c;
  }
  IntVector out(ihat.rank(), 0);
  while (!terms.empty()) {
    auto it = std::prev(terms.end());
    const auto [level, i] = it->first;
    const Int c = it->second;
    terms.erase(it);
    if (c == 0) continue;
    if (level == base[i]) {
      out[i] += c;
      continue;
    }
    for (int j : ihat.diagram().neighbors(i)) terms[{level - 1, j}] += c;
    terms[{level - 2, i}] -= c;
  }
  return out;
}

IntMatrix mesh_relation_matrix(const IhatQuiver& ihat) {
  IntMatrix m(ihat.size(), ihat.size());
  for (int row = 0; row < ihat.size(); ++row) {
    const IhatVertex v = ihat.vertices()[row];
    m(row, ihat.index(v)) += 1;
    for (const auto& w : ihat.successors(v)) m(row, ihat.index(w)) -= 1;
    m(row, ihat.index(ihat.tau(v))) += 1;
  }
  return m;
}

}  // namespace coxar
