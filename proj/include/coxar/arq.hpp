#pragma once

// The periodic quiver I-hat = {(i, n) : p(i) + n even} with n taken mod 2h,
// the bijection Phi from roots onto it, height functions, the positive
// region Delta, reduced words for w0 and the mesh presentation of the root
// lattice.

#include "coxar/coxeter.hpp"

#include <compare>
#include <map>
#include <utility>
#include <vector>

namespace coxar {

struct IhatVertex {
  int i = 0;  // Dynkin vertex, 0-based
  int n = 0;  // level; reduced mod 2h unless stated otherwise
  auto operator<=>(const IhatVertex&) const = default;
};

class IhatQuiver {
 public:
  explicit IhatQuiver(DynkinType type);

  const DynkinDiagram& diagram() const { return diagram_; }
  int rank() const { return diagram_.rank(); }
  int coxeter_number() const { return h_; }
  int period() const { return 2 * h_; }
  int parity(int i) const { return diagram_.parity(i); }

  /// All vertices, ordered by (n, i).
  const std::vector<IhatVertex>& vertices() const { return vertices_; }
  int size() const { return static_cast<int>(vertices_.size()); }
  int mod(int n) const { return ((n % period()) + period()) % period(); }
  IhatVertex normalize(IhatVertex v) const { return {v.i, mod(v.n)}; }
  bool contains(IhatVertex v) const;
  /// Position in vertices(); the level is reduced first.
  int index(IhatVertex v) const;

  std::vector<IhatVertex> successors(IhatVertex v) const;
  std::vector<IhatVertex> predecessors(IhatVertex v) const;
  std::vector<std::pair<IhatVertex, IhatVertex>> edges() const;

  IhatVertex tau(IhatVertex v, int times = 1) const { return normalize({v.i, v.n + 2 * times}); }

 private:
  DynkinDiagram diagram_;
  int h_ = 0;
  std::vector<IhatVertex> vertices_;
};

IhatQuiver build_ihat(DynkinType type);

/// Values in Z/2h, indexed by Dynkin vertex.
struct HeightFunction {
  std::vector<int> values;
  bool operator==(const HeightFunction&) const = default;
  auto operator<=>(const HeightFunction&) const = default;
};

bool is_height_function(const IhatQuiver& ihat, const HeightFunction& f);

/// All h * 2^{r-1} height functions, sorted.
std::vector<HeightFunction> all_height_functions(const IhatQuiver& ihat);

/// The slice {(i, f(i))}.
std::vector<IhatVertex> slice_of(const HeightFunction& f);

/// Integer lift of f along the Dynkin tree, starting from f(vertex 1) in [0, 2h).
std::vector<int> lift_heights(const IhatQuiver& ihat, const HeightFunction& f);

/// The orientation induced by a height function: i -> j when f(j) = f(i) + 1.
Orientation orientation_of_height(const IhatQuiver& ihat, const HeightFunction& f);

struct PhiMap {
  std::vector<IhatVertex> forward;  // indexed by root
  std::vector<int> inverse;         // indexed by IhatQuiver::index
  IhatVertex anchor;                // image of beta_1 of the canonical system
  bool operator==(const PhiMap& other) const { return forward == other.forward; }

  const IhatVertex& operator()(int root) const { return forward.at(root); }
};

/// Phi through a compatible system. The result does not depend on pi.
PhiMap build_phi(const CoxeterContext& ctx, const SimpleSystem& pi);

/// h^Pi(i) = level of Phi(beta_i^Pi).
HeightFunction height_of(const CoxeterContext& ctx, const SimpleSystem& pi);

/// The unique compatible system with the given height function.
SimpleSystem simple_system_from_height(const CoxeterContext& ctx, const HeightFunction& f);

/// (i, n) -> (i-check, n + h).
IhatVertex nakayama_ihat(const CoxeterContext& ctx, IhatVertex v);

/// w0^Pi(Pi), indexed so that alpha_i^{-Pi} = w0^Pi(alpha_i^Pi) = -alpha_{i-check}^Pi.
SimpleSystem negative_system(const CoxeterContext& ctx, const SimpleSystem& pi);

/// i -> i-check from -alpha_i^Pi = w0^Pi(alpha_{i-check}^Pi), cross-checked
/// against -beta_i^Pi = beta_{i-check}^{-Pi}.
std::vector<int> check_involution(const CoxeterContext& ctx, const SimpleSystem& pi);

/// Vertices (i, n) with n = h^Pi(i), h^Pi(i) + 2, ... up to but excluding
/// h^{-Pi}(i), levels reduced mod 2h; sorted.
std::vector<IhatVertex> delta_region(const CoxeterContext& ctx, const SimpleSystem& pi);

/// Delta with integer levels, lifted so that line i starts at the lifted
/// height of pi. Ordered by (level, i). Edges are (i, L) -> (j, L + 1).
std::vector<IhatVertex> lifted_delta(const CoxeterContext& ctx, const SimpleSystem& pi);

/// The letters of lifted_delta in order: a reduced word for w0^Pi. The word
/// is checked to have length |R+| and to send Pi to -Pi.
std::vector<int> w0_word(const CoxeterContext& ctx, const SimpleSystem& pi);

/// Formal integer combination of I-hat vertices.
using IhatCombination = std::map<IhatVertex, Int>;

/// Rewrites x in the slice basis {(i, reference(i))} using the mesh relations
/// (i, n) - sum_{j - i} (j, n + 1) + (i, n + 2) = 0. Coordinates are indexed
/// by Dynkin vertex.
IntVector lattice_reduce(const IhatQuiver& ihat, const HeightFunction& reference, const IhatCombination& x);

/// One row per vertex (i, n): the mesh relation starting there, over the
/// columns IhatQuiver::vertices().
IntMatrix mesh_relation_matrix(const IhatQuiver& ihat);

}  // namespace coxar
