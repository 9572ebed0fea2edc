#include "coxar/euler.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace coxar {

namespace {

IntMatrix columns_of(const RootSystem& rs, std::span<const int> roots) {
  IntMatrix m(rs.rank(), roots.size());
  for (std::size_t j = 0; j < roots.size(); ++j)
    for (int i = 0; i < rs.rank(); ++i) m(i, j) = rs.coords(roots[j])[i];
  return m;
}

IntMatrix integral(const RatMatrix& m, const char* what) {
  auto out = to_integer(m);
  if (!out) throw InvariantError(std::string(what) + " is not integral");
  return *out;
}

RatMatrix invert(const RatMatrix& m, const char* what) {
  auto out = inverse(m);
  if (!out) throw InvariantError(std::string(what) + " is singular");
  return *out;
}

IntMatrix lattice_gram(const CoxeterContext& ctx, const IntMatrix& ref_gram) {
  const IntMatrix b = columns_of(ctx.roots(), beta_family(ctx, ctx.canonical()).beta);
  return b.transpose() * ref_gram * b;
}

}  // namespace

Int euler_pairing(const RootSystem& rs, const EulerTable& table, int x, int y) {
  return bilinear(table.ref_gram, rs.coords(x), rs.coords(y));
}

EulerTable euler_form_from_pi(const CoxeterContext& ctx, const SimpleSystem& pi) {
  const RootSystem& rs = ctx.roots();
  const RatMatrix beta = to_rational(columns_of(rs, beta_family(ctx, pi).beta));
  const RatMatrix alpha = to_rational(columns_of(rs, pi.base()));
  // beta^T G alpha = 1  =>  G = beta^{-T} alpha^{-1}
  const RatMatrix g = invert(beta, "beta basis").transpose() * invert(alpha, "simple root basis");
  EulerTable out;
  out.ref_gram = integral(g, "Euler form");
  out.on_lattice = lattice_gram(ctx, out.ref_gram);
  return out;
}

EulerTable euler_form_closed(const CoxeterContext& ctx) {
  const RootSystem& rs = ctx.roots();
  const std::size_t r = static_cast<std::size_t>(rs.rank());
  const RatMatrix cartan = to_rational(rs.cartan());
  const RatMatrix id = RatMatrix::identity(r);
  const RatMatrix c = to_rational(ctx.matrix());
  const RatMatrix c_inv = to_rational(ctx.element_inverse().matrix(rs));

  const RatMatrix right = cartan * invert(id - c_inv, "1 - C^-1");
  const RatMatrix left = invert(id - c, "1 - C").transpose() * cartan;
  if (right != left) throw InvariantError("the two closed forms of the Euler form differ");
  EulerTable out;
  out.ref_gram = integral(right, "closed Euler form");
  out.on_lattice = lattice_gram(ctx, out.ref_gram);
  return out;
}

std::vector<RatVector> fundamental_weights(const CoxeterContext& ctx, const SimpleSystem& pi) {
  const RootSystem& rs = ctx.roots();
  const std::size_t r = static_cast<std::size_t>(rs.rank());
  const RatMatrix alpha = to_rational(columns_of(rs, pi.base()));
  const RatMatrix cartan = to_rational(rs.cartan());
  // Columns w with alpha^T Cartan w = 1.
  const RatMatrix weights = invert(alpha.transpose() * cartan, "weight system");
  const auto beta = beta_family(ctx, pi).beta;
  const RatMatrix one_minus_c = RatMatrix::identity(r) - to_rational(ctx.matrix());

  std::vector<RatVector> out;
  for (std::size_t i = 0; i < r; ++i) {
    RatVector w = weights.column(i);
    for (std::size_t j = 0; j < r; ++j) {
      const RatVector a = alpha.column(j);
      Rational pairing = 0;
      for (std::size_t p = 0; p < r; ++p)
        for (std::size_t q = 0; q < r; ++q) pairing += a[p] * cartan(p, q) * w[q];
      if (pairing != Rational(i == j ? 1 : 0)) throw InvariantError("(omega_i, alpha_j) != delta_ij");
    }
    const RatVector image = one_minus_c * w;
    if (image != to_rational(rs.coords(beta[i])))
      throw InvariantError("(1 - C) omega_" + std::to_string(i + 1) + " != beta_" + std::to_string(i + 1));
    out.push_back(std::move(w));
  }
  // 1 - C from the weight basis to the simple-root basis of Q; the columns
  // are the beta coordinates, so the determinant must be a unit.
  const RatMatrix transition = invert(alpha, "simple root basis") * one_minus_c * weights;
  const Rational det = determinant(transition);
  if (det != Rational(1) && det != Rational(-1))
    throw InvariantError("1 - C is not unimodular from weights to roots");
  const Int det_cartan = determinant(rs.cartan());
  const Rational det_one_minus_c = determinant(one_minus_c);
  if (det_one_minus_c != Rational(det_cartan) && det_one_minus_c != Rational(-det_cartan))
    throw InvariantError("|det(1 - C)| differs from det(Cartan)");
  return out;
}

IntMatrix euler_form_ihat(const IhatQuiver& ihat, const std::optional<SeedPerturbation>& perturbation) {
  const int size = ihat.size();
  const int period = ihat.period();
  const DynkinDiagram& diagram = ihat.diagram();
  IntMatrix out(size, size);
  bool perturbation_used = false;

  for (const IhatVertex& q : ihat.vertices()) {
    // Values keyed by (integer level, vertex), levels q.n .. q.n + 2h + 1.
    std::map<std::pair<int, int>, Int> value;
    auto on_level = [&](int level, int i) { return (ihat.parity(i) + level) % 2 == 0; };
    std::map<std::pair<int, int>, Int> seeds;
    for (int i = 0; i < ihat.rank(); ++i) {
      if (on_level(q.n, i)) seeds[{q.n, i}] = i == q.i ? 1 : 0;
      if (on_level(q.n + 1, i)) seeds[{q.n + 1, i}] = diagram.adjacent(q.i, i) ? 1 : 0;
    }
    if (perturbation && ihat.normalize(perturbation->source) == q) {
      const IhatVertex t = ihat.normalize(perturbation->target);
      bool hit = false;
      for (auto& [key, v] : seeds)
        if (key.second == t.i && ihat.mod(key.first) == t.n) {
          v += perturbation->delta;
          hit = true;
        }
      if (!hit) throw std::invalid_argument("perturbation target is not a seed of its source vertex");
      perturbation_used = true;
    }
    value = seeds;
    for (int level = q.n; level + 2 <= q.n + period + 1; ++level)
      for (int i = 0; i < ihat.rank(); ++i) {
        if (!on_level(level, i)) continue;
        Int next = -value.at({level, i});
        for (int j : diagram.neighbors(i)) next += value.at({level + 1, j});
        value[{level + 2, i}] = next;
      }
    for (const auto& [key, v] : seeds)
      if (value.at({key.first + period, key.second}) != v)
        throw WraparoundError("wraparound mismatch for row (" + std::to_string(q.i + 1) + "," +
                              std::to_string(q.n) + ") at vertex (" + std::to_string(key.second + 1) + "," +
                              std::to_string(ihat.mod(key.first)) + ")");
    const int row = ihat.index(q);
    for (const auto& [key, v] : value)
      if (key.first < q.n + period) out(row, ihat.index({key.second, key.first})) = v;
  }
  if (perturbation && !perturbation_used) throw std::invalid_argument("perturbation source is not a vertex");
  return out;
}

SymmetrizedCheck symmetrized_form_check(const IhatQuiver& ihat, const IntMatrix& form, const HeightFunction& reference) {
  const int r = ihat.rank();
  SymmetrizedCheck out;
  const auto slice = slice_of(reference);
  out.gram = IntMatrix(r, r);
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) {
      const int x = ihat.index(slice[a]), y = ihat.index(slice[b]);
      out.gram(a, b) = form(x, y) + form(y, x);
    }
  out.minors = leading_principal_minors(out.gram);
  out.positive_definite = std::all_of(out.minors.begin(), out.minors.end(), [](Int m) { return m > 0; });

  const Orientation o = orientation_of_height(ihat, reference);
  out.change_of_basis = IntMatrix::identity(r);
  for (int i = 0; i < r; ++i)
    for (int j : o.predecessors(i)) out.change_of_basis(j, i) = -1;
  const Int det = determinant(out.change_of_basis);
  out.congruent_to_cartan = (det == 1 || det == -1) &&
                            out.change_of_basis.transpose() * out.gram * out.change_of_basis == ihat.diagram().cartan();

  out.all_norm_two = true;
  std::set<IntVector> seen;
  for (const auto& q : ihat.vertices()) {
    const int x = ihat.index(q);
    const IntVector v = lattice_reduce(ihat, reference, {{q, 1}});
    if (2 * form(x, x) != 2 || bilinear(out.gram, v, v) != 2) out.all_norm_two = false;
    seen.insert(v);
  }
  out.distinct_vectors = static_cast<int>(seen.size()) == ihat.size();
  return out;
}

}  // namespace coxar
