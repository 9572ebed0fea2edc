#include "coxar/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <queue>
#include <set>
#include <sstream>

namespace coxar {

// ---------------------------------------------------------------------------
// Orientations
// ---------------------------------------------------------------------------

Orientation::Orientation(const DynkinDiagram& diagram, std::vector<std::pair<int, int>> arrows)
    : rank_(diagram.rank()) {
  const auto& edges = diagram.edges();
  if (arrows.size() != edges.size())
    throw std::invalid_argument("orientation must direct each of the " + std::to_string(edges.size()) +
                                " edges exactly once");
  arrows_.resize(edges.size());
  std::vector<bool> used(edges.size(), false);
  for (auto [a, b] : arrows) {
    const auto key = std::make_pair(std::min(a, b), std::max(a, b));
    const auto it = std::lower_bound(edges.begin(), edges.end(), key);
    if (it == edges.end() || *it != key)
      throw std::invalid_argument("no Dynkin edge between " + std::to_string(a + 1) + " and " +
                                  std::to_string(b + 1));
    const auto k = static_cast<std::size_t>(it - edges.begin());
    if (used[k])
      throw std::invalid_argument("edge " + std::to_string(key.first + 1) + "-" + std::to_string(key.second + 1) +
                                  " oriented twice");
    used[k] = true;
    arrows_[k] = {a, b};
  }
}

Orientation Orientation::from_order(const DynkinDiagram& diagram, std::span<const int> order) {
  const int r = diagram.rank();
  std::vector<int> position(r, -1);
  if (static_cast<int>(order.size()) != r) throw std::invalid_argument("order must list every vertex once");
  for (std::size_t k = 0; k < order.size(); ++k) {
    const int v = order[k];
    if (v < 0 || v >= r || position[v] >= 0) throw std::invalid_argument("order must list every vertex once");
    position[v] = static_cast<int>(k);
  }
  std::vector<std::pair<int, int>> arrows;
  for (auto [a, b] : diagram.edges())
    arrows.push_back(position[a] < position[b] ? std::make_pair(a, b) : std::make_pair(b, a));
  return Orientation(diagram, std::move(arrows));
}

std::vector<Orientation> Orientation::all(const DynkinDiagram& diagram) {
  const auto& edges = diagram.edges();
  std::vector<Orientation> out;
  for (unsigned long mask = 0; mask < (1ul << edges.size()); ++mask) {
    std::vector<std::pair<int, int>> arrows;
    for (std::size_t k = 0; k < edges.size(); ++k) {
      auto [a, b] = edges[k];
      arrows.push_back((mask >> k) & 1 ? std::make_pair(b, a) : std::make_pair(a, b));
    }
    out.emplace_back(diagram, std::move(arrows));
  }
  return out;
}

bool Orientation::has_arrow(int from, int to) const {
  return std::find(arrows_.begin(), arrows_.end(), std::make_pair(from, to)) != arrows_.end();
}

std::vector<int> Orientation::predecessors(int i) const {
  std::vector<int> out;
  for (auto [a, b] : arrows_)
    if (b == i) out.push_back(a);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> Orientation::successors(int i) const {
  std::vector<int> out;
  for (auto [a, b] : arrows_)
    if (a == i) out.push_back(b);
  std::sort(out.begin(), out.end());
  return out;
}

bool Orientation::is_sink(int i) const {
  return std::none_of(arrows_.begin(), arrows_.end(), [i](const auto& e) { return e.first == i; });
}

bool Orientation::is_source(int i) const {
  return std::none_of(arrows_.begin(), arrows_.end(), [i](const auto& e) { return e.second == i; });
}

bool Orientation::path(int from, int to) const {
  std::vector<bool> seen(rank_, false);
  std::vector<int> stack{from};
  seen[from] = true;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    if (v == to) return true;
    for (auto [a, b] : arrows_)
      if (a == v && !seen[b]) {
        seen[b] = true;
        stack.push_back(b);
      }
  }
  return false;
}

Orientation Orientation::reversed_at(int i) const {
  Orientation out = *this;
  for (auto& e : out.arrows_)
    if (e.first == i || e.second == i) std::swap(e.first, e.second);
  return out;
}

Orientation Orientation::opposite() const {
  Orientation out = *this;
  for (auto& e : out.arrows_) std::swap(e.first, e.second);
  return out;
}

std::string Orientation::to_string() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < arrows_.size(); ++k) os << (k ? " " : "") << arrows_[k].first + 1 << '>' << arrows_[k].second + 1;
  return os.str();
}

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ',')) ++pos;
    if (pos == text.size()) break;
    const std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) && text[pos] != ',') ++pos;
    out.push_back({std::string(text.substr(start, pos - start)), start + 1});
  }
  return out;
}

int parse_label(const std::string& s, std::size_t column, int rank) {
  if (s.empty() || s.size() > 4 || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw ParseError("expected a vertex label, got '" + s + "'", column);
  const int v = std::stoi(s);
  if (v < 1 || v > rank) throw ParseError("vertex " + s + " out of range 1.." + std::to_string(rank), column);
  return v - 1;
}

}  // namespace

Orientation parse_orientation(const DynkinDiagram& diagram, std::string_view text) {
  std::vector<std::pair<int, int>> arrows;
  std::set<std::pair<int, int>> seen;
  for (const auto& tok : tokenize(text)) {
    const auto sep = tok.text.find_first_of("<>");
    if (sep == std::string::npos || tok.text.find_first_of("<>", sep + 1) != std::string::npos)
      throw ParseError("expected an arrow like '1>2', got '" + tok.text + "'", tok.column);
    const int a = parse_label(tok.text.substr(0, sep), tok.column, diagram.rank());
    const int b = parse_label(tok.text.substr(sep + 1), tok.column + sep + 1, diagram.rank());
    const auto arrow = tok.text[sep] == '>' ? std::make_pair(a, b) : std::make_pair(b, a);
    if (!diagram.adjacent(a, b))
      throw ParseError("vertices " + std::to_string(a + 1) + " and " + std::to_string(b + 1) + " are not adjacent",
                       tok.column);
    if (!seen.insert({std::min(a, b), std::max(a, b)}).second)
      throw ParseError("edge oriented twice", tok.column);
    arrows.push_back(arrow);
  }
  if (arrows.size() != diagram.edges().size())
    throw ParseError("orientation covers " + std::to_string(arrows.size()) + " of " +
                         std::to_string(diagram.edges().size()) + " edges",
                     text.size() + 1);
  return Orientation(diagram, std::move(arrows));
}

std::vector<int> parse_word(const DynkinDiagram& diagram, std::string_view text) {
  std::vector<int> word;
  for (const auto& tok : tokenize(text)) word.push_back(parse_label(tok.text, tok.column, diagram.rank()));
  return word;
}

Orientation parse_coxeter_spec(const DynkinDiagram& diagram, std::string_view text) {
  if (text.find_first_of("<>") != std::string_view::npos) return parse_orientation(diagram, text);
  std::vector<int> order;
  std::vector<bool> seen(diagram.rank(), false);
  for (const auto& tok : tokenize(text)) {
    const int v = parse_label(tok.text, tok.column, diagram.rank());
    if (seen[v]) throw ParseError("vertex " + tok.text + " repeated in Coxeter word", tok.column);
    seen[v] = true;
    order.push_back(v);
  }
  if (static_cast<int>(order.size()) != diagram.rank())
    throw ParseError("Coxeter word must use each of the " + std::to_string(diagram.rank()) + " vertices once",
                     text.size() + 1);
  return Orientation::from_order(diagram, order);
}

// ---------------------------------------------------------------------------
// Coxeter contexts
// ---------------------------------------------------------------------------

namespace {

std::vector<WeylElement> reflections_of(const RootSystem& rs, const SimpleSystem& pi) {
  std::vector<WeylElement> out;
  for (int i = 0; i < rs.rank(); ++i) out.push_back(simple_reflection(rs, pi, i));
  return out;
}

std::vector<int> word_for_coxeter(const RootSystem& rs, const SimpleSystem& pi, const WeylElement& c,
                                  DescentSide side) {
  return reduced_word(rs, pi, c, side);
}

bool is_permutation_word(std::span<const int> word, int rank) {
  if (static_cast<int>(word.size()) != rank) return false;
  std::vector<bool> seen(rank, false);
  for (int v : word) {
    if (v < 0 || v >= rank || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Orientation orientation_from_word(const DynkinDiagram& diagram, std::span<const int> word) {
  return Orientation::from_order(diagram, word);
}

// Orientation of C relative to a system already known to be compatible.
Orientation orientation_unchecked(const RootSystem& rs, const WeylElement& c, const SimpleSystem& pi) {
  const auto word = word_for_coxeter(rs, pi, c, DescentSide::Right);
  if (!is_permutation_word(word, rs.rank()))
    throw InvariantError("reduced word of a compatible Coxeter element repeats a vertex");
  return orientation_from_word(rs.diagram(), word);
}

std::vector<SimpleSystem> compatible_closure(const RootSystem& rs, const WeylElement& c, const SimpleSystem& seed) {
  std::set<SimpleSystem> seen{seed};
  std::deque<SimpleSystem> todo{seed};
  while (!todo.empty()) {
    const SimpleSystem pi = todo.front();
    todo.pop_front();
    const Orientation o = orientation_unchecked(rs, c, pi);
    for (int i = 0; i < rs.rank(); ++i) {
      if (!o.is_sink(i) && !o.is_source(i)) continue;
      SimpleSystem next = pi.transformed(rs, simple_reflection(rs, pi, i));
      if (seen.insert(next).second) todo.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

CoxeterContext::CoxeterContext(RootSystemPtr roots, WeylElement element, SimpleSystem witness)
    : roots_(std::move(roots)),
      element_(std::move(element)),
      inverse_(element_.inverse()),
      witness_(witness),
      canonical_(witness) {
  const RootSystem& rs = *roots_;
  if (static_cast<int>(element_.perm().size()) != rs.size())
    throw std::invalid_argument("Coxeter element acts on a different root system");
  const int len = weyl_length(rs, witness_, element_);
  if (len != rs.rank())
    throw std::invalid_argument("element has length " + std::to_string(len) + " with respect to its witness, expected " +
                                std::to_string(rs.rank()));
  if (!is_permutation_word(word_for_coxeter(rs, witness_, element_, DescentSide::Right), rs.rank()))
    throw std::invalid_argument("element is not a product of distinct simple reflections");
  h_ = element_.order();
  if (h_ != rs.type().coxeter_number())
    throw InvariantError("Coxeter element of order " + std::to_string(h_) + " in " + rs.type().name());
  matrix_ = element_.matrix(rs);
  const IntMatrix fixed = IntMatrix::identity(rs.rank()) - matrix_;
  if (determinant(fixed) == 0) throw InvariantError("Coxeter element has a nonzero fixed vector");

  // Canonical system: shortlex-least reduced word of its carrying element
  // (length first, then lexicographic order of the word).
  const auto ref = SimpleSystem::reference(rs);
  const auto ref_reflections = reflections_of(rs, ref);
  auto word_of = [&](const WeylElement& w) {
    std::vector<int> word;
    WeylElement cur = w;
    for (;;) {
      const WeylElement inv = cur.inverse();
      int found = -1;
      for (int i = 0; i < rs.rank() && found < 0; ++i)
        if (!ref.is_positive(inv(i))) found = i;
      if (found < 0) return word;
      word.push_back(found);
      cur = ref_reflections[found] * cur;
    }
  };
  bool first = true;
  std::vector<int> best;
  for (const auto& pi : compatible_closure(rs, element_, witness_)) {
    auto word = word_of(pi.witness());
    if (first || word.size() < best.size() || (word.size() == best.size() && word < best)) {
      best = std::move(word);
      canonical_ = pi;
      first = false;
    }
  }
}

CoxeterContext coxeter_from_word(RootSystemPtr roots, const SimpleSystem& pi, std::span<const int> order) {
  if (!is_permutation_word(order, roots->rank()))
    throw std::invalid_argument("Coxeter word must use each vertex exactly once");
  WeylElement c = evaluate_word(*roots, pi, order);
  return CoxeterContext(std::move(roots), std::move(c), pi);
}

std::vector<int> topological_order(const Orientation& orientation, TieBreak tie_break) {
  const int r = orientation.rank();
  std::vector<int> indegree(r, 0);
  for (auto [a, b] : orientation.arrows()) ++indegree[b];
  std::function<bool(int, int)> cmp = tie_break == TieBreak::Ascending ? std::function<bool(int, int)>(std::greater<int>())
                                                                       : std::function<bool(int, int)>(std::less<int>());
  std::priority_queue<int, std::vector<int>, std::function<bool(int, int)>> ready(cmp);
  for (int v = 0; v < r; ++v)
    if (indegree[v] == 0) ready.push(v);
  std::vector<int> order;
  while (!ready.empty()) {
    const int v = ready.top();
    ready.pop();
    order.push_back(v);
    for (int u : orientation.successors(v))
      if (--indegree[u] == 0) ready.push(u);
  }
  if (static_cast<int>(order.size()) != r) throw InvariantError("orientation has a cycle");
  return order;
}

CoxeterContext coxeter_from_orientation(RootSystemPtr roots, const SimpleSystem& pi, const Orientation& orientation,
                                        TieBreak tie_break) {
  const auto order = topological_order(orientation, tie_break);
  return coxeter_from_word(std::move(roots), pi, order);
}

Compatibility is_compatible(const CoxeterContext& ctx, const SimpleSystem& pi) {
  const RootSystem& rs = ctx.roots();
  Compatibility out;
  out.length = weyl_length(rs, pi, ctx.element());
  if (out.length != rs.rank()) return out;
  out.word = word_for_coxeter(rs, pi, ctx.element(), DescentSide::Right);
  if (!is_permutation_word(out.word, rs.rank()))
    throw InvariantError("length-r reduced word of a Coxeter element repeats a vertex");
  out.compatible = true;
  return out;
}

Orientation orientation_of(const CoxeterContext& ctx, const SimpleSystem& pi) {
  const auto compat = is_compatible(ctx, pi);
  if (!compat.compatible)
    throw std::invalid_argument("simple system is not compatible with the Coxeter element (length " +
                                std::to_string(compat.length) + ")");
  const RootSystem& rs = ctx.roots();
  const Orientation o = orientation_from_word(rs.diagram(), compat.word);
  const auto second = word_for_coxeter(rs, pi, ctx.element(), DescentSide::Left);
  if (!is_permutation_word(second, rs.rank()) || orientation_from_word(rs.diagram(), second) != o)
    throw InvariantError("orientation depends on the choice of reduced word");
  return o;
}

SimpleSystem elementary_reflection(const CoxeterContext& ctx, const SimpleSystem& pi, int i) {
  const RootSystem& rs = ctx.roots();
  if (i < 0 || i >= rs.rank()) throw std::invalid_argument("vertex " + std::to_string(i + 1) + " out of range");
  const Orientation o = orientation_of(ctx, pi);
  if (!o.is_sink(i) && !o.is_source(i))
    throw std::invalid_argument("vertex " + std::to_string(i + 1) + " is neither a sink nor a source");
  return pi.transformed(rs, simple_reflection(rs, pi, i));
}

std::vector<SimpleSystem> enumerate_compatible(const CoxeterContext& ctx) {
  const RootSystem& rs = ctx.roots();
  auto out = compatible_closure(rs, ctx.element(), ctx.witness());
  const std::size_t expected = static_cast<std::size_t>(ctx.coxeter_number()) << (rs.rank() - 1);
  if (out.size() != expected)
    throw InvariantError("found " + std::to_string(out.size()) + " compatible systems, expected " +
                         std::to_string(expected));
  return out;
}

BetaFamily beta_family(const CoxeterContext& ctx, const SimpleSystem& pi) {
  const RootSystem& rs = ctx.roots();
  const int r = rs.rank();
  const auto compat = is_compatible(ctx, pi);
  if (!compat.compatible) throw std::invalid_argument("beta family needs a compatible simple system");
  const Orientation o = orientation_of(ctx, pi);

  BetaFamily partial;
  for (int i = 0; i < r; ++i) {
    IntVector c(r, 0);
    for (int j = 0; j < r; ++j)
      if (o.path(j, i)) c[j] = 1;
    const auto root = pi.root_from_coords(rs, c);
    if (!root) throw InvariantError("path sum for vertex " + std::to_string(i + 1) + " is not a root");
    partial.beta.push_back(*root);
  }

  BetaFamily prefix;
  prefix.beta.assign(r, -1);
  WeylElement acc = WeylElement::identity(rs);
  for (int v : compat.word) {
    prefix.beta[v] = acc(pi.root(v));
    acc = acc * simple_reflection(rs, pi, v);
  }
  if (prefix != partial) throw InvariantError("path sums disagree with the prefix-reflection formula");

  std::vector<int> filtered;
  for (int x = 0; x < rs.size(); ++x)
    if (pi.is_positive(x) && !pi.is_positive(ctx.element_inverse()(x))) filtered.push_back(x);
  std::vector<int> sorted = partial.beta;
  std::sort(sorted.begin(), sorted.end());
  if (filtered != sorted) throw InvariantError("beta family differs from the set of positive roots sent negative by C^-1");
  return partial;
}

BetaFamily beta_after_reflection(const CoxeterContext& ctx, const SimpleSystem& pi, int i) {
  const Orientation o = orientation_of(ctx, pi);
  if (i < 0 || i >= ctx.rank() || (!o.is_sink(i) && !o.is_source(i)))
    throw std::invalid_argument("vertex " + std::to_string(i + 1) + " is neither a sink nor a source");
  BetaFamily out = beta_family(ctx, pi);
  out.beta[i] = o.is_sink(i) ? ctx.element_inverse()(out.beta[i]) : ctx.element()(out.beta[i]);
  if (beta_family(ctx, elementary_reflection(ctx, pi, i)) != out)
    throw InvariantError("beta family after reflection at " + std::to_string(i + 1) + " disagrees with recomputation");
  return out;
}

std::optional<int> orbit_position(const CoxeterContext& ctx, int base, int root) {
  int cur = base;
  for (int k = 0; k < ctx.coxeter_number(); ++k) {
    if (cur == root) return k;
    cur = ctx.element()(cur);
  }
  return std::nullopt;
}

}  // namespace coxar
