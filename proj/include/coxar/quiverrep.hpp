#pragma once

// Representations of a Dynkin quiver (I, Omega), seen only through dimension
// vectors: the translation quiver ZI, the Nakayama permutation, projectives,
// the Auslander-Reiten quiver obtained by knitting, and the covering map
// ZI -> I-hat that matches it with the positive region of I-hat.

#include "coxar/euler.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace coxar {

struct ZIVertex {
  int i = 0;
  int k = 0;
  auto operator<=>(const ZIVertex&) const = default;
};

/// ZI restricted to |k| <= radius. For adjacent i, j with i nearer to
/// vertex 1 than j, the arrows are (i, k) -> (j, k) and (j, k) -> (i, k + 1).
class ZIQuiver {
 public:
  ZIQuiver(DynkinType type, int radius);

  const DynkinDiagram& diagram() const { return diagram_; }
  int radius() const { return radius_; }
  bool contains(ZIVertex v) const { return v.i >= 0 && v.i < diagram_.rank() && v.k >= -radius_ && v.k <= radius_; }
  std::vector<ZIVertex> vertices() const;
  /// Arrow targets, including ones that leave the window.
  std::vector<ZIVertex> successors(ZIVertex v) const;
  std::vector<ZIVertex> predecessors(ZIVertex v) const;
  std::vector<std::pair<ZIVertex, ZIVertex>> edges() const;  // both ends inside the window
  bool is_interior(ZIVertex v) const { return v.k > -radius_ && v.k < radius_; }

  static ZIVertex tau(ZIVertex v) { return {v.i, v.k - 1}; }
  static ZIVertex tau_inverse(ZIVertex v) { return {v.i, v.k + 1}; }

 private:
  DynkinDiagram diagram_;
  int radius_;
};

/// Default radius is 2h; anything below h is rejected.
ZIQuiver build_zi(DynkinType type, std::optional<int> radius = std::nullopt);

/// (i, k) -> (i-check, k + (h + l(i) - l(i-check)) / 2), l = distance to
/// vertex 1. This is (i-check, k + i) in type A and (i-check, k + h/2) when
/// l(i-check) = l(i).
ZIVertex nakayama_zi(const RootSystem& rs, ZIVertex v);

/// dim P(i)_j = 1 iff there is an oriented path i -> ... -> j in Omega.
std::vector<IntVector> projectives(const Orientation& omega);

/// The slice of ZI through (1, 0) whose arrows follow `slice_orientation`;
/// result indexed by vertex gives k.
std::vector<int> zi_slice(const DynkinDiagram& diagram, const Orientation& slice_orientation);

struct ARQuiver {
  Orientation omega;
  std::vector<ZIVertex> vertices;            // sorted by (2k + l(i), i)
  std::map<ZIVertex, IntVector> dimension;   // knitted dimension vectors
  std::vector<ZIVertex> projective;          // indexed by vertex: position of P(i)
  std::vector<std::pair<ZIVertex, ZIVertex>> edges;
  bool contains(ZIVertex v) const { return dimension.count(v) != 0; }
};

/// The region of ZI from the slice I_{Omega^opp} (the projectives) up to,
/// but excluding, its Nakayama image, with dimension vectors knitted from
/// the projectives. Throws InvariantError on a negative or zero entry.
ARQuiver ar_quiver(const RootSystem& rs, const Orientation& omega);

/// P(i, k) = (i, h^Pi(1) + l(i) + 2k).
IhatVertex covering_map(const CoxeterContext& ctx, const HeightFunction& height, ZIVertex v);
IhatVertex covering_map(const CoxeterContext& ctx, const SimpleSystem& pi, ZIVertex v);

struct Verdict {
  bool ok = true;
  std::string counterexample;  // empty when ok
};

/// For every X in ar_quiver(Omega^opp): Phi(root with Pi-coordinates dim X)
/// equals P(X); and P maps the AR quiver onto Delta^Pi.
Verdict verify_commutative_diagram(const CoxeterContext& ctx, const SimpleSystem& pi);

/// sum_i x_i y_i - sum_{i -> j in Omega} x_i y_j.
Int euler_form_rep(const Orientation& omega, const IntVector& x, const IntVector& y);

/// euler_form_rep on ar_quiver(Omega^opp) agrees with the lattice Euler form
/// pulled back through P and Phi.
Verdict verify_euler_identification(const CoxeterContext& ctx, const SimpleSystem& pi);

}  // namespace coxar
