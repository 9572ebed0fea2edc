#include "coxar/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <unordered_set>

namespace coxar {

// ---------------------------------------------------------------------------
// Dynkin data
// ---------------------------------------------------------------------------

DynkinType::DynkinType(Family family, int rank) : family_(family), rank_(rank) {
  const bool ok = (family == Family::A && rank >= 1) || (family == Family::D && rank >= 4) ||
                  (family == Family::E && rank >= 6 && rank <= 8);
  if (!ok) throw std::invalid_argument("invalid Dynkin type " + name());
}

DynkinType DynkinType::parse(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == text.size()) throw ParseError("empty Dynkin type", pos + 1);
  Family family;
  switch (std::toupper(static_cast<unsigned char>(text[pos]))) {
    case 'A': family = Family::A; break;
    case 'D': family = Family::D; break;
    case 'E': family = Family::E; break;
    default:
      throw ParseError("expected Dynkin family A, D or E, got '" + std::string(1, text[pos]) + "'", pos + 1);
  }
  ++pos;
  const std::size_t digits_start = pos;
  int rank = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    rank = rank * 10 + (text[pos] - '0');
    if (rank > 1000) throw ParseError("rank too large", pos + 1);
    ++pos;
  }
  if (pos == digits_start) throw ParseError("expected rank after family letter", pos + 1);
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos != text.size()) throw ParseError("trailing characters in Dynkin type", pos + 1);
  try {
    return DynkinType(family, rank);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), digits_start + 1);
  }
}

std::string DynkinType::name() const {
  const char letter = family_ == Family::A ? 'A' : family_ == Family::D ? 'D' : 'E';
  return std::string(1, letter) + std::to_string(rank_);
}

int DynkinType::coxeter_number() const {
  switch (family_) {
    case Family::A: return rank_ + 1;
    case Family::D: return 2 * rank_ - 2;
    case Family::E: return rank_ == 6 ? 12 : rank_ == 7 ? 18 : 30;
  }
  return 0;
}

std::uint64_t DynkinType::weyl_group_order() const {
  std::uint64_t fact = 1;
  for (int k = 2; k <= rank_ + (family_ == Family::A ? 1 : 0); ++k) fact *= static_cast<std::uint64_t>(k);
  switch (family_) {
    case Family::A: return fact;
    case Family::D: return (std::uint64_t{1} << (rank_ - 1)) * fact;
    case Family::E: return rank_ == 6 ? 51840 : rank_ == 7 ? 2903040 : 696729600;
  }
  return 0;
}

DynkinDiagram::DynkinDiagram(DynkinType type) : type_(type), neighbors_(type.rank()) {
  const int r = type.rank();
  auto link = [&](int a, int b) {  // 1-based labels
    edges_.emplace_back(std::min(a, b) - 1, std::max(a, b) - 1);
  };
  switch (type.family()) {
    case Family::A:
      for (int i = 1; i < r; ++i) link(i, i + 1);
      break;
    case Family::D:
      for (int i = 1; i <= r - 2; ++i) link(i, i + 1);
      link(r - 2, r);
      break;
    case Family::E:
      link(1, 3);
      link(2, 4);
      for (int i = 3; i < r; ++i) link(i, i + 1);
      break;
  }
  std::sort(edges_.begin(), edges_.end());
  for (auto [a, b] : edges_) {
    neighbors_[a].push_back(b);
    neighbors_[b].push_back(a);
  }
  for (auto& n : neighbors_) std::sort(n.begin(), n.end());

  distance_.assign(r, -1);
  std::deque<int> todo{0};
  distance_[0] = 0;
  while (!todo.empty()) {
    const int v = todo.front();
    todo.pop_front();
    for (int u : neighbors_[v])
      if (distance_[u] < 0) {
        distance_[u] = distance_[v] + 1;
        todo.push_back(u);
      }
  }
}

bool DynkinDiagram::adjacent(int i, int j) const {
  const auto& n = neighbors_.at(i);
  return std::binary_search(n.begin(), n.end(), j);
}

IntMatrix DynkinDiagram::cartan() const {
  IntMatrix c(rank(), rank());
  for (int i = 0; i < rank(); ++i) c(i, i) = 2;
  for (auto [a, b] : edges_) c(a, b) = c(b, a) = -1;
  return c;
}

// ---------------------------------------------------------------------------
// Root system
// ---------------------------------------------------------------------------

namespace {

IntVector reflect(const IntMatrix& cartan, const IntVector& x, int i) {
  Int pairing = 0;
  for (std::size_t k = 0; k < x.size(); ++k) pairing += cartan(i, k) * x[k];
  IntVector y = x;
  y[i] -= pairing;
  return y;
}

Int coordinate_sum(const IntVector& v) { return std::accumulate(v.begin(), v.end(), Int{0}); }

}  // namespace

RootSystem::RootSystem(DynkinType type) : diagram_(type), cartan_(diagram_.cartan()) {
  const int r = rank();
  std::set<IntVector> seen;
  std::deque<IntVector> todo;
  for (int i = 0; i < r; ++i) {
    IntVector e(r, 0);
    e[i] = 1;
    seen.insert(e);
    todo.push_back(e);
  }
  while (!todo.empty()) {
    IntVector x = std::move(todo.front());
    todo.pop_front();
    for (int i = 0; i < r; ++i) {
      IntVector y = reflect(cartan_, x, i);
      if (seen.insert(y).second) todo.push_back(std::move(y));
    }
  }

  std::vector<IntVector> positive;
  for (const auto& v : seen) {
    const bool nonneg = std::all_of(v.begin(), v.end(), [](Int c) { return c >= 0; });
    const bool nonpos = std::all_of(v.begin(), v.end(), [](Int c) { return c <= 0; });
    if (!nonneg && !nonpos) throw InvariantError("root with mixed-sign coordinates in " + type.name());
    if (nonneg) positive.push_back(v);
  }
  std::sort(positive.begin(), positive.end(), [](const IntVector& a, const IntVector& b) {
    const Int ha = coordinate_sum(a), hb = coordinate_sum(b);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  if (positive.size() * 2 != seen.size()) throw InvariantError("root set is not symmetric");

  roots_ = positive;
  for (const auto& v : positive) {
    IntVector neg = v;
    for (auto& c : neg) c = -c;
    roots_.push_back(std::move(neg));
  }
  for (int k = 0; k < size(); ++k) {
    lookup_.emplace(roots_[k], k);
    if (inner_product(roots_[k], roots_[k]) != 2) throw InvariantError("root of squared length != 2");
  }

  reflections_.resize(positive_count());
  for (int a = 0; a < positive_count(); ++a) {
    auto& perm = reflections_[a];
    perm.resize(size());
    const IntVector& av = roots_[a];
    for (int x = 0; x < size(); ++x) {
      const Int pairing = inner_product(roots_[x], av);
      IntVector y = roots_[x];
      for (std::size_t k = 0; k < y.size(); ++k) y[k] -= pairing * av[k];
      perm[x] = index_of(y);
    }
  }

  const auto ref = SimpleSystem::reference(*this);
  std::vector<int> order(r);
  std::iota(order.begin(), order.end(), 0);
  coxeter_number_ = evaluate_word(*this, ref, order).order();
  if (size() != r * coxeter_number_) throw InvariantError("|R| != r*h for " + type.name());

  const WeylElement w0 = longest_element(*this, ref);
  check_.assign(r, -1);
  for (int i = 0; i < r; ++i) {
    const int image = w0(i);  // w0(alpha_i) = -alpha_{check(i)}
    const int j = negate(image);
    if (j < 0 || j >= r) throw InvariantError("w0 does not send a simple root to a negative simple root");
    check_[i] = j;
  }
}

std::optional<int> RootSystem::find(std::span<const Int> coords) const {
  auto it = lookup_.find(IntVector(coords.begin(), coords.end()));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

int RootSystem::index_of(std::span<const Int> coords) const {
  auto idx = find(coords);
  if (!idx) {
    std::ostringstream os;
    os << "vector [";
    for (std::size_t k = 0; k < coords.size(); ++k) os << (k ? "," : "") << coords[k];
    os << "] is not a root of " << type().name();
    throw InvariantError(os.str());
  }
  return *idx;
}

std::span<const int> RootSystem::reflection(int root) const {
  return reflections_.at(is_positive(root) ? root : negate(root));
}

Int RootSystem::height(int root) const { return coordinate_sum(coords(root)); }

Int RootSystem::inner_product(std::span<const Int> x, std::span<const Int> y) const {
  return bilinear(cartan_, x, y);
}

Int inner_product(const RootSystem& rs, std::span<const Int> x, std::span<const Int> y) {
  return rs.inner_product(x, y);
}

IntVector RootSystem::ambient(int root) const {
  const auto& c = coords(root);
  const int r = rank();
  switch (type().family()) {
    case Family::A: {
      IntVector v(r + 1, 0);
      for (int i = 0; i < r; ++i) {
        v[i] += c[i];
        v[i + 1] -= c[i];
      }
      return v;
    }
    case Family::D: {
      IntVector v(r, 0);
      for (int i = 0; i < r - 1; ++i) {
        v[i] += c[i];
        v[i + 1] -= c[i];
      }
      v[r - 2] += c[r - 1];
      v[r - 1] += c[r - 1];
      return v;
    }
    case Family::E: break;
  }
  throw std::invalid_argument("no Euclidean realization for " + type().name());
}

std::string RootSystem::display(int root) const {
  std::ostringstream os;
  if (type().family() == Family::E) {
    os << '[';
    const auto& c = coords(root);
    for (std::size_t k = 0; k < c.size(); ++k) os << (k ? "," : "") << c[k];
    os << ']';
    return os.str();
  }
  const IntVector v = ambient(root);
  bool first = true;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0) continue;
    if (v[k] < 0) os << '-';
    else if (!first) os << '+';
    if (v[k] != 1 && v[k] != -1) os << (v[k] < 0 ? -v[k] : v[k]);
    os << 'e' << (k + 1);
    first = false;
  }
  return os.str();
}

RootSystemPtr build_root_system(DynkinType type) { return std::make_shared<const RootSystem>(type); }

// ---------------------------------------------------------------------------
// Weyl elements
// ---------------------------------------------------------------------------

WeylElement WeylElement::identity(const RootSystem& rs) {
  std::vector<int> p(rs.size());
  std::iota(p.begin(), p.end(), 0);
  return WeylElement(std::move(p));
}

WeylElement WeylElement::operator*(const WeylElement& rhs) const {
  if (perm_.size() != rhs.perm_.size()) throw std::invalid_argument("composing Weyl elements of different systems");
  std::vector<int> p(perm_.size());
  for (std::size_t k = 0; k < p.size(); ++k) p[k] = perm_[static_cast<std::size_t>(rhs.perm_[k])];
  return WeylElement(std::move(p));
}

WeylElement WeylElement::inverse() const {
  std::vector<int> p(perm_.size());
  for (std::size_t k = 0; k < p.size(); ++k) p[static_cast<std::size_t>(perm_[k])] = static_cast<int>(k);
  return WeylElement(std::move(p));
}

WeylElement WeylElement::power(long k) const {
  WeylElement base = k < 0 ? inverse() : *this;
  unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
  std::vector<int> idp(perm_.size());
  std::iota(idp.begin(), idp.end(), 0);
  WeylElement result(std::move(idp));
  while (e) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

bool WeylElement::is_identity() const {
  for (std::size_t k = 0; k < perm_.size(); ++k)
    if (perm_[k] != static_cast<int>(k)) return false;
  return true;
}

int WeylElement::order() const {
  // lcm of cycle lengths
  std::vector<bool> seen(perm_.size(), false);
  long result = 1;
  for (std::size_t k = 0; k < perm_.size(); ++k) {
    if (seen[k]) continue;
    long len = 0;
    for (std::size_t j = k; !seen[j]; j = static_cast<std::size_t>(perm_[j])) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return static_cast<int>(result);
}

IntMatrix WeylElement::matrix(const RootSystem& rs) const {
  IntMatrix m(rs.rank(), rs.rank());
  for (int j = 0; j < rs.rank(); ++j) {
    const auto& img = rs.coords((*this)(j));
    for (int i = 0; i < rs.rank(); ++i) m(i, j) = img[i];
  }
  return m;
}

bool is_weyl_permutation(const RootSystem& rs, const WeylElement& w) {
  if (static_cast<int>(w.perm().size()) != rs.size()) return false;
  for (int x = 0; x < rs.size(); ++x) {
    if (w(rs.negate(x)) != rs.negate(w(x))) return false;
    for (int y = x; y < rs.size(); ++y)
      if (rs.inner_product(w(x), w(y)) != rs.inner_product(x, y)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Simple systems
// ---------------------------------------------------------------------------

SimpleSystem SimpleSystem::reference(const RootSystem& rs) { return from_witness(rs, WeylElement::identity(rs)); }

SimpleSystem SimpleSystem::from_witness(const RootSystem& rs, WeylElement witness) {
  std::vector<int> base(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) base[i] = witness(i);
  WeylElement inv = witness.inverse();
  return SimpleSystem(std::move(witness), std::move(inv), std::move(base), rs.positive_count());
}

IntVector SimpleSystem::coords(const RootSystem& rs, int root) const { return rs.coords(witness_inv_(root)); }

std::optional<int> SimpleSystem::root_from_coords(const RootSystem& rs, std::span<const Int> c) const {
  auto ref = rs.find(c);
  if (!ref) return std::nullopt;
  return witness_(*ref);
}

SimpleSystem SimpleSystem::transformed(const RootSystem& rs, const WeylElement& w) const {
  return from_witness(rs, w * witness_);
}

bool is_valid_simple_system(const RootSystem& rs, const SimpleSystem& pi) {
  if (pi.rank() != rs.rank()) return false;
  const IntMatrix& cartan = rs.cartan();
  for (int i = 0; i < rs.rank(); ++i)
    for (int j = 0; j < rs.rank(); ++j)
      if (rs.inner_product(pi.root(i), pi.root(j)) != cartan(i, j)) return false;
  // Expansion of every root in the base must be sign coherent. Solve with
  // exact arithmetic rather than trusting the witness.
  IntMatrix basis(rs.rank(), rs.rank());
  for (int j = 0; j < rs.rank(); ++j)
    for (int i = 0; i < rs.rank(); ++i) basis(i, j) = rs.coords(pi.root(j))[i];
  const auto inv = inverse(to_rational(basis));
  if (!inv) return false;
  for (int x = 0; x < rs.size(); ++x) {
    const auto c = *inv * to_rational(rs.coords(x));
    const auto ci = to_integer(c);
    if (!ci) return false;
    const bool nonneg = std::all_of(ci->begin(), ci->end(), [](Int v) { return v >= 0; });
    const bool nonpos = std::all_of(ci->begin(), ci->end(), [](Int v) { return v <= 0; });
    if (!nonneg && !nonpos) return false;
  }
  return true;
}

WeylElement simple_reflection(const RootSystem& rs, const SimpleSystem& pi, int i) {
  if (i < 0 || i >= rs.rank()) throw std::invalid_argument("vertex " + std::to_string(i + 1) + " out of range");
  const auto perm = rs.reflection(pi.root(i));
  return WeylElement(std::vector<int>(perm.begin(), perm.end()));
}

WeylElement evaluate_word(const RootSystem& rs, const SimpleSystem& pi, std::span<const int> word) {
  WeylElement w = WeylElement::identity(rs);
  for (int i : word) w = w * simple_reflection(rs, pi, i);
  return w;
}

int weyl_length(const RootSystem& rs, const SimpleSystem& pi, const WeylElement& w) {
  int count = 0;
  for (int x = 0; x < rs.size(); ++x)
    if (pi.is_positive(x) && !pi.is_positive(w(x))) ++count;
  return count;
}

std::vector<int> reduced_word(const RootSystem& rs, const SimpleSystem& pi, const WeylElement& w,
                              DescentSide side) {
  std::vector<WeylElement> reflections;
  for (int i = 0; i < rs.rank(); ++i) reflections.push_back(simple_reflection(rs, pi, i));
  std::vector<int> word;
  WeylElement cur = w;
  if (side == DescentSide::Right) {
    for (;;) {
      int found = -1;
      for (int i = 0; i < rs.rank() && found < 0; ++i)
        if (!pi.is_positive(cur(pi.root(i)))) found = i;
      if (found < 0) break;
      word.push_back(found);
      cur = cur * reflections[found];
    }
    std::reverse(word.begin(), word.end());
  } else {
    for (;;) {
      const WeylElement inv = cur.inverse();
      int found = -1;
      for (int i = rs.rank() - 1; i >= 0 && found < 0; --i)
        if (!pi.is_positive(inv(pi.root(i)))) found = i;
      if (found < 0) break;
      word.push_back(found);
      cur = reflections[found] * cur;
    }
  }
  return word;
}

std::vector<int> shortlex_word(const RootSystem& rs, const SimpleSystem& pi, const WeylElement& w) {
  std::vector<int> word;
  WeylElement cur = w;
  for (;;) {
    const WeylElement inv = cur.inverse();
    int found = -1;
    for (int i = 0; i < rs.rank() && found < 0; ++i)
      if (!pi.is_positive(inv(pi.root(i)))) found = i;
    if (found < 0) break;
    word.push_back(found);
    cur = simple_reflection(rs, pi, found) * cur;
  }
  return word;
}

WeylElement longest_element(const RootSystem& rs, const SimpleSystem& pi) {
  std::vector<WeylElement> reflections;
  for (int i = 0; i < rs.rank(); ++i) reflections.push_back(simple_reflection(rs, pi, i));
  WeylElement w = WeylElement::identity(rs);
  for (;;) {
    int ascent = -1;
    for (int i = 0; i < rs.rank() && ascent < 0; ++i)
      if (pi.is_positive(w(pi.root(i)))) ascent = i;
    if (ascent < 0) return w;
    w = w * reflections[ascent];
  }
}

// ---------------------------------------------------------------------------
// Brute-force enumeration
// ---------------------------------------------------------------------------

EnumerationCapExceeded::EnumerationCapExceeded(std::uint64_t order, std::uint64_t cap)
    : std::runtime_error("oracle skipped: |W| = " + std::to_string(order) + " exceeds enumeration cap " +
                         std::to_string(cap)) {}

std::vector<WeylElement> enumerate_weyl_group(const RootSystem& rs, std::uint64_t cap) {
  const std::uint64_t expected = rs.type().weyl_group_order();
  if (expected > cap) throw EnumerationCapExceeded(expected, cap);

  const auto ref = SimpleSystem::reference(rs);
  std::vector<WeylElement> gens;
  for (int i = 0; i < rs.rank(); ++i) gens.push_back(simple_reflection(rs, ref, i));

  // An element is determined by the images of the simple roots.
  auto key = [&](const WeylElement& w) {
    std::string k(static_cast<std::size_t>(rs.rank()), '\0');
    for (int i = 0; i < rs.rank(); ++i) k[i] = static_cast<char>(w(i));
    return k;
  };
  std::vector<WeylElement> elements{WeylElement::identity(rs)};
  std::unordered_set<std::string> seen{key(elements.front())};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : gens) {
      WeylElement next = elements[head] * g;
      if (seen.insert(key(next)).second) {
        if (elements.size() >= cap) throw EnumerationCapExceeded(elements.size() + 1, cap);
        elements.push_back(std::move(next));
      }
    }
  }
  if (elements.size() != expected)
    throw InvariantError("enumerated |W| = " + std::to_string(elements.size()) + " but the order formula gives " +
                         std::to_string(expected));
  // Orbit-stabilizer on alpha_1: W is transitive on R in the simply-laced case.
  std::set<int> orbit;
  std::uint64_t stabilizer = 0;
  for (const auto& w : elements) {
    orbit.insert(w(0));
    if (w(0) == 0) ++stabilizer;
  }
  if (static_cast<int>(orbit.size()) != rs.size() || orbit.size() * stabilizer != elements.size())
    throw InvariantError("orbit-stabilizer check failed for " + rs.type().name());
  std::sort(elements.begin(), elements.end());
  return elements;
}

}  // namespace coxar
