#pragma once

// Simply-laced root systems with exact integer coordinates, their Weyl
// groups (as permutations of the root table) and simple systems.
//
// Conventions used throughout the library:
//   * Dynkin vertices are 0-based internally; labels shown to users are
//     index + 1 and follow Bourbaki (D_n: fork vertices n-1, n; E_n: vertex 2
//     hangs off vertex 4).
//   * Roots are integer vectors in the basis of the reference simple system
//     (the standard simple roots alpha_1..alpha_r).
//   * Root indices: positive roots first, sorted by height and then by
//     coordinates in descending lexicographic order (so alpha_i has index
//     i - 1); root k + N is the negative of root k, N = number of positive
//     roots.

#include "coxar/linalg.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace coxar {

/// Raised for malformed textual input; carries a 1-based column.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t column)
      : std::invalid_argument(what + " (column " + std::to_string(column) + ")"), column_(column) {}
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

/// An internal cross-check failed. Signals a bug, never bad user input.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class Family { A, D, E };

class DynkinType {
 public:
  /// Throws std::invalid_argument for ranks outside A_{>=1}, D_{>=4}, E_{6,7,8}.
  DynkinType(Family family, int rank);

  /// Parses "A5", "d4", "E6".
  static DynkinType parse(std::string_view text);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  std::string name() const;

  /// Coxeter number from the classification table.
  int coxeter_number() const;

  /// |W| from the classification table.
  std::uint64_t weyl_group_order() const;

  auto operator<=>(const DynkinType&) const = default;

 private:
  Family family_;
  int rank_;
};

class DynkinDiagram {
 public:
  explicit DynkinDiagram(DynkinType type);

  const DynkinType& type() const { return type_; }
  int rank() const { return type_.rank(); }
  bool adjacent(int i, int j) const;
  const std::vector<int>& neighbors(int i) const { return neighbors_.at(i); }
  /// Unordered edges as (i, j) with i < j, sorted.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  /// Number of edges between vertex 1 and i.
  int distance_from_first(int i) const { return distance_.at(i); }
  /// Parity function p(i) = distance_from_first(i) mod 2.
  int parity(int i) const { return distance_.at(i) % 2; }
  IntMatrix cartan() const;

 private:
  DynkinType type_;
  std::vector<std::vector<int>> neighbors_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> distance_;
};

class RootSystem {
 public:
  /// Closure of the reference simple roots under the simple reflections.
  explicit RootSystem(DynkinType type);

  const DynkinType& type() const { return diagram_.type(); }
  const DynkinDiagram& diagram() const { return diagram_; }
  int rank() const { return diagram_.rank(); }
  int size() const { return static_cast<int>(roots_.size()); }
  int positive_count() const { return size() / 2; }
  /// Order of s_1 s_2 ... s_r, computed from the root action.
  int coxeter_number() const { return coxeter_number_; }
  const IntMatrix& cartan() const { return cartan_; }

  const IntVector& coords(int root) const { return roots_.at(root); }
  std::optional<int> find(std::span<const Int> coords) const;
  /// Like find, but throws InvariantError when coords is not a root.
  int index_of(std::span<const Int> coords) const;
  int negate(int root) const { return root < positive_count() ? root + positive_count() : root - positive_count(); }
  bool is_positive(int root) const { return root < positive_count(); }
  Int height(int root) const;

  /// x^T Cartan y; throws std::invalid_argument on dimension mismatch.
  Int inner_product(std::span<const Int> x, std::span<const Int> y) const;
  Int inner_product(int a, int b) const { return inner_product(coords(a), coords(b)); }

  /// The reflection s_alpha as a permutation of root indices (cached).
  std::span<const int> reflection(int root) const;

  /// The involution i -> i-check defined by w0(alpha_i) = -alpha_{i-check},
  /// computed here from the reference longest element.
  int check(int i) const { return check_.at(i); }
  const std::vector<int>& check_map() const { return check_; }

  /// Ambient Euclidean coordinates (A: e_1..e_{r+1}; D: e_1..e_r). Only
  /// defined for the A and D families.
  IntVector ambient(int root) const;
  /// "e1-e3", "-e2-e4", ... for A/D; "[1,0,1,...]" otherwise.
  std::string display(int root) const;

 private:
  DynkinDiagram diagram_;
  IntMatrix cartan_;
  std::vector<IntVector> roots_;
  std::map<IntVector, int> lookup_;
  int coxeter_number_ = 0;
  std::vector<int> check_;
  std::vector<std::vector<int>> reflections_;  // indexed by positive root
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

RootSystemPtr build_root_system(DynkinType type);

Int inner_product(const RootSystem& rs, std::span<const Int> x, std::span<const Int> y);

/// A Weyl group element as a permutation of root indices. Composition is
/// right-to-left: (a * b)(x) = a(b(x)).
class WeylElement {
 public:
  WeylElement() = default;
  explicit WeylElement(std::vector<int> perm) : perm_(std::move(perm)) {}
  static WeylElement identity(const RootSystem& rs);

  int operator()(int root) const { return perm_[static_cast<std::size_t>(root)]; }
  WeylElement operator*(const WeylElement& rhs) const;
  WeylElement inverse() const;
  WeylElement power(long k) const;
  int order() const;
  bool is_identity() const;
  std::span<const int> perm() const { return perm_; }

  /// Action on the reference coordinate lattice; column j is w(alpha_j).
  IntMatrix matrix(const RootSystem& rs) const;

  auto operator<=>(const WeylElement&) const = default;

 private:
  std::vector<int> perm_;
};

/// Validates that w preserves the inner product and commutes with negation.
bool is_weyl_permutation(const RootSystem& rs, const WeylElement& w);

/// An ordered base {alpha_i^Pi} indexed by Dynkin vertices, stored together
/// with the unique w in W with w(alpha_i^ref) = alpha_i^Pi.
class SimpleSystem {
 public:
  static SimpleSystem reference(const RootSystem& rs);
  static SimpleSystem from_witness(const RootSystem& rs, WeylElement witness);

  int rank() const { return static_cast<int>(base_.size()); }
  int root(int i) const { return base_.at(i); }
  const std::vector<int>& base() const { return base_; }
  const WeylElement& witness() const { return witness_; }

  bool is_positive(int root) const { return witness_inv_(root) < positive_count_; }
  /// Coordinates of a root in the basis alpha_1^Pi..alpha_r^Pi.
  IntVector coords(const RootSystem& rs, int root) const;
  /// The root sum_i c_i alpha_i^Pi; nullopt if that vector is not a root.
  std::optional<int> root_from_coords(const RootSystem& rs, std::span<const Int> c) const;

  /// w(Pi) with the canonical indexing w(alpha_i^Pi) = alpha_i^{w Pi}.
  SimpleSystem transformed(const RootSystem& rs, const WeylElement& w) const;

  bool operator==(const SimpleSystem& other) const { return base_ == other.base_; }
  auto operator<=>(const SimpleSystem& other) const { return base_ <=> other.base_; }

 private:
  SimpleSystem(WeylElement witness, WeylElement witness_inv, std::vector<int> base, int positive_count)
      : witness_(std::move(witness)),
        witness_inv_(std::move(witness_inv)),
        base_(std::move(base)),
        positive_count_(positive_count) {}

  WeylElement witness_;
  WeylElement witness_inv_;
  std::vector<int> base_;
  int positive_count_ = 0;
};

/// Checks both simple-system invariants: sign-coherent expansions of every
/// root and Cartan-matrix inner products.
bool is_valid_simple_system(const RootSystem& rs, const SimpleSystem& pi);

/// s_i^Pi : x -> x - (x, alpha_i^Pi) alpha_i^Pi on root indices.
WeylElement simple_reflection(const RootSystem& rs, const SimpleSystem& pi, int i);

/// Evaluates s_{word[0]} s_{word[1]} ... w.r.t. Pi.
WeylElement evaluate_word(const RootSystem& rs, const SimpleSystem& pi, std::span<const int> word);

/// #{alpha in R_+^Pi : w(alpha) in R_-^Pi}.
int weyl_length(const RootSystem& rs, const SimpleSystem& pi, const WeylElement& w);

enum class DescentSide {
  Right,  // strip the smallest i with w(alpha_i) < 0, building the word from the back
  Left,   // strip the largest i with w^{-1}(alpha_i) < 0, building the word from the front
};

/// Greedy reduced word for w in the simple reflections of Pi.
std::vector<int> reduced_word(const RootSystem& rs, const SimpleSystem& pi, const WeylElement& w,
                              DescentSide side = DescentSide::Right);

/// Lexicographically least reduced word (shortlex normal form).
std::vector<int> shortlex_word(const RootSystem& rs, const SimpleSystem& pi, const WeylElement& w);

/// Longest element w0^Pi, built by right multiplication by ascents.
WeylElement longest_element(const RootSystem& rs, const SimpleSystem& pi);

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

/// Raised when brute-force enumeration would exceed its cap.
class EnumerationCapExceeded : public std::runtime_error {
 public:
  EnumerationCapExceeded(std::uint64_t order, std::uint64_t cap);
};

/// All of W by closure under the reference simple reflections. The result is
/// sorted. Refuses (EnumerationCapExceeded) when |W| > cap, and cross-checks
/// the size against the order formula and against orbit-stabilizer on the
/// root action.
std::vector<WeylElement> enumerate_weyl_group(const RootSystem& rs,
                                              std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace coxar
