#pragma once

// Coxeter elements and the simple systems compatible with them: orientation
// correspondence, elementary (sink/source) reflections, the closure of all
// compatible systems, and the C-orbit representatives beta_i.

#include "coxar/rootsys.hpp"

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace coxar {

/// One direction per Dynkin edge. Arrows are (tail, head) pairs listed in
/// the order of DynkinDiagram::edges().
class Orientation {
 public:
  Orientation(const DynkinDiagram& diagram, std::vector<std::pair<int, int>> arrows);

  /// Orients every edge towards the later vertex of `order`.
  static Orientation from_order(const DynkinDiagram& diagram, std::span<const int> order);
  /// All 2^{#edges} orientations, in a fixed order.
  static std::vector<Orientation> all(const DynkinDiagram& diagram);

  int rank() const { return rank_; }
  const std::vector<std::pair<int, int>>& arrows() const { return arrows_; }
  bool has_arrow(int from, int to) const;
  std::vector<int> predecessors(int i) const;  // j with j -> i
  std::vector<int> successors(int i) const;    // j with i -> j
  bool is_sink(int i) const;
  bool is_source(int i) const;
  /// Reflexive reachability: i = j or an oriented path i -> ... -> j.
  bool path(int from, int to) const;

  Orientation reversed_at(int i) const;
  Orientation opposite() const;

  /// "1>2 3>2" with 1-based labels.
  std::string to_string() const;

  bool operator==(const Orientation&) const = default;
  auto operator<=>(const Orientation&) const = default;

 private:
  int rank_ = 0;
  std::vector<std::pair<int, int>> arrows_;
};

/// Parses "1>2 2>3" (or "2<1"); every Dynkin edge must be oriented exactly once.
Orientation parse_orientation(const DynkinDiagram& diagram, std::string_view text);

/// Vertex labels separated by spaces or commas, repeats allowed; 0-based result.
std::vector<int> parse_word(const DynkinDiagram& diagram, std::string_view text);

/// Accepts either an orientation ("1>2 2>3") or a word ("1 2 3") that lists
/// every vertex once; a word is read as the orientation it induces.
Orientation parse_coxeter_spec(const DynkinDiagram& diagram, std::string_view text);

class CoxeterContext {
 public:
  /// Validates that C has length r with respect to `witness` and has no
  /// nonzero fixed vector, then computes the canonical compatible system.
  CoxeterContext(RootSystemPtr roots, WeylElement element, SimpleSystem witness);

  const RootSystem& roots() const { return *roots_; }
  const RootSystemPtr& roots_ptr() const { return roots_; }
  const WeylElement& element() const { return element_; }
  const WeylElement& element_inverse() const { return inverse_; }
  int coxeter_number() const { return h_; }
  int rank() const { return roots_->rank(); }
  /// The system C was built from.
  const SimpleSystem& witness() const { return witness_; }
  /// The compatible system whose carrying element has the shortlex-least
  /// reduced word. Anchors the identification with the periodic quiver.
  const SimpleSystem& canonical() const { return canonical_; }
  /// Action of C on reference coordinates.
  const IntMatrix& matrix() const { return matrix_; }

 private:
  RootSystemPtr roots_;
  WeylElement element_;
  WeylElement inverse_;
  int h_ = 0;
  SimpleSystem witness_;
  SimpleSystem canonical_;
  IntMatrix matrix_;
};

/// C = s_{order[0]} ... s_{order[r-1]} with respect to pi.
CoxeterContext coxeter_from_word(RootSystemPtr roots, const SimpleSystem& pi, std::span<const int> order);

enum class TieBreak { Ascending, Descending };

/// Topologically sorts the orientation and builds the corresponding C.
CoxeterContext coxeter_from_orientation(RootSystemPtr roots, const SimpleSystem& pi, const Orientation& orientation,
                                        TieBreak tie_break = TieBreak::Ascending);

/// Topological order of the vertices, ties broken by label.
std::vector<int> topological_order(const Orientation& orientation, TieBreak tie_break = TieBreak::Ascending);

struct Compatibility {
  bool compatible = false;
  int length = 0;           // l^Pi(C)
  std::vector<int> word;    // reduced word for C in the s_i^Pi
};

Compatibility is_compatible(const CoxeterContext& ctx, const SimpleSystem& pi);

/// Throws std::invalid_argument for an incompatible pi.
Orientation orientation_of(const CoxeterContext& ctx, const SimpleSystem& pi);

/// s_i^Pi(Pi); i must be a sink or a source of orientation_of(ctx, pi).
SimpleSystem elementary_reflection(const CoxeterContext& ctx, const SimpleSystem& pi, int i);

/// Closure of ctx.witness() under elementary reflections, sorted by base.
/// Always has h * 2^{r-1} members.
std::vector<SimpleSystem> enumerate_compatible(const CoxeterContext& ctx);

struct BetaFamily {
  std::vector<int> beta;  // root index of beta_i, indexed by vertex
  bool operator==(const BetaFamily&) const = default;
};

/// beta_i = sum of alpha_j^Pi over j with an oriented path j -> ... -> i.
/// Cross-checked against the prefix-reflection formula and the
/// {alpha > 0 : C^{-1} alpha < 0} characterization; a mismatch throws
/// InvariantError.
BetaFamily beta_family(const CoxeterContext& ctx, const SimpleSystem& pi);

/// The beta family of s_i(Pi), obtained from that of Pi by replacing beta_i
/// with C^{-1} beta_i (sink) or C beta_i (source).
BetaFamily beta_after_reflection(const CoxeterContext& ctx, const SimpleSystem& pi, int i);

/// Position of `root` on the C-orbit of `base`: the k in [0, h) with
/// C^k(base) = root, or nullopt if the orbits differ.
std::optional<int> orbit_position(const CoxeterContext& ctx, int base, int root);

}  // namespace coxar
