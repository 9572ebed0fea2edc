#include "coxar/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace coxar {

namespace {

struct Failure {
  std::string message;
};

void require(bool condition, const std::string& message) {
  if (!condition) throw Failure{message};
}

std::string label(int i) { return std::to_string(i + 1); }

std::string show(IhatVertex v) { return "(" + label(v.i) + "," + std::to_string(v.n) + ")"; }

template <class T>
std::vector<T> sample(std::vector<T> items, std::size_t limit, std::mt19937_64& rng) {
  if (items.size() <= limit) return items;
  std::shuffle(items.begin(), items.end(), rng);
  items.erase(items.begin() + static_cast<std::ptrdiff_t>(limit), items.end());
  return items;
}

// Everything the suites share for one Dynkin type.
struct Fixture {
  RootSystemPtr rs;
  SimpleSystem ref;
  CoxeterContext ctx;
  IhatQuiver ihat;
  std::vector<SimpleSystem> compatible;
  const VerifyOptions& options;
  mutable std::mt19937_64 rng;

  Fixture(DynkinType type, const VerifyOptions& opts)
      : rs(build_root_system(type)),
        ref(SimpleSystem::reference(*rs)),
        ctx(make_context(rs, ref)),
        ihat(type),
        compatible(enumerate_compatible(ctx)),
        options(opts),
        rng(opts.seed) {}

  static CoxeterContext make_context(const RootSystemPtr& rs, const SimpleSystem& ref) {
    std::vector<int> order(rs->rank());
    std::iota(order.begin(), order.end(), 0);
    return coxeter_from_word(rs, ref, order);
  }

  bool perturbed(const std::string& table) const { return options.perturb && *options.perturb == table; }

  std::vector<SimpleSystem> systems() const { return sample(compatible, options.exhaustive_limit, rng); }
};

template <class T>
void flip(T& value) {
  value ^= 1;
}

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

std::string suite_roots(const Fixture& f) {
  const RootSystem& rs = *f.rs;
  const int r = rs.rank();
  IntMatrix cartan = rs.diagram().cartan();
  if (f.perturbed("cartan")) flip(cartan(0, 0));
  require(rs.size() == r * rs.type().coxeter_number(), "|R| != r*h");
  require(rs.coxeter_number() == rs.type().coxeter_number(), "order of s_1...s_r differs from the table value of h");
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      require(rs.inner_product(i, j) == cartan(i, j),
              "(alpha_" + label(i) + ", alpha_" + label(j) + ") differs from the Cartan matrix");
  for (int x = 0; x < rs.size(); ++x) {
    require(rs.inner_product(x, x) == 2, "root " + rs.display(x) + " has squared length != 2");
    for (int i = 0; i < r; ++i) {
      const auto img = simple_reflection(rs, f.ref, i)(x);
      require(img >= 0 && img < rs.size(), "root set not closed under s_" + label(i));
    }
  }
  return std::to_string(rs.size()) + " roots";
}

std::string suite_weyl_oracle(const Fixture& f) {
  const RootSystem& rs = *f.rs;
  const auto group = enumerate_weyl_group(rs, f.options.enumeration_cap);
  const bool small = group.size() <= 2000;
  const bool medium = group.size() <= 60000;
  for (const auto& w : group) {
    if (medium) require(is_weyl_permutation(rs, w), "element does not preserve the inner product");
    if (small) {
      const auto word = reduced_word(rs, f.ref, w);
      require(static_cast<int>(word.size()) == weyl_length(rs, f.ref, w), "greedy word length differs from inversions");
      require(evaluate_word(rs, f.ref, word) == w, "greedy word does not evaluate back");
    }
  }
  // Brute-force filter of all simple systems against the closure.
  std::set<SimpleSystem> brute;
  int min_length = rs.positive_count() + 1;
  for (const auto& w : group) {
    const SimpleSystem pi = SimpleSystem::from_witness(rs, w);
    if (small) require(is_valid_simple_system(rs, pi), "w(Pi_ref) violates the simple-system invariants");
    const auto c = is_compatible(f.ctx, pi);
    min_length = std::min(min_length, c.length);
    if (c.compatible) brute.insert(pi);
  }
  require(min_length >= rs.rank(), "some simple system gives l(C) < r");
  require(std::vector<SimpleSystem>(brute.begin(), brute.end()) == f.compatible,
          "brute-force compatible systems differ from the reflection closure");
  std::string extra;
  if (small) {
    // Centralizer of C is generated by C.
    std::set<WeylElement> powers;
    for (int k = 0; k < f.ctx.coxeter_number(); ++k) powers.insert(f.ctx.element().power(k));
    std::size_t centralizer = 0;
    for (const auto& w : group)
      if (w * f.ctx.element() == f.ctx.element() * w) {
        ++centralizer;
        require(powers.count(w) == 1, "centralizer of C contains a non-power of C");
      }
    require(centralizer == powers.size(), "centralizer of C is not cyclic of order h");
    // Orientation <-> compatible Coxeter element is a bijection for fixed Pi.
    std::set<WeylElement> elements;
    for (const auto& o : Orientation::all(rs.diagram())) {
      const auto c = coxeter_from_orientation(f.rs, f.ref, o);
      require(orientation_of(c, f.ref) == o, "orientation does not round-trip through its Coxeter element");
      elements.insert(c.element());
    }
    require(elements.size() == Orientation::all(rs.diagram()).size(), "two orientations give the same C");
    extra = ", centralizer and orientation bijection checked";
  }
  return "|W| = " + std::to_string(group.size()) + ", " + std::to_string(brute.size()) + " compatible" + extra;
}

std::string suite_compatible(const Fixture& f) {
  const int h = f.ctx.coxeter_number();
  const std::size_t expected = static_cast<std::size_t>(h) << (f.rs->rank() - 1);
  require(f.compatible.size() == expected, "compatible count differs from h*2^(r-1)");
  std::map<Orientation, std::vector<SimpleSystem>> classes;
  for (const auto& pi : f.compatible) classes[orientation_of(f.ctx, pi)].push_back(pi);
  require(classes.size() == Orientation::all(f.rs->diagram()).size(), "not every orientation occurs");
  for (const auto& [o, members] : classes) {
    require(static_cast<int>(members.size()) == h, "orientation class " + o.to_string() + " has the wrong size");
    std::set<SimpleSystem> orbit;
    SimpleSystem cur = members.front();
    for (int k = 0; k < h; ++k) {
      orbit.insert(cur);
      cur = cur.transformed(*f.rs, f.ctx.element());
    }
    require(std::vector<SimpleSystem>(orbit.begin(), orbit.end()) == members,
            "orientation class " + o.to_string() + " is not a C-orbit");
  }
  return std::to_string(f.compatible.size()) + " systems in " + std::to_string(classes.size()) + " classes";
}

std::string suite_beta(const Fixture& f) {
  const RootSystem& rs = *f.rs;
  const int r = rs.rank();
  const auto systems = f.systems();
  for (const auto& pi : systems) {
    BetaFamily family = beta_family(f.ctx, pi);
    if (f.perturbed("beta") && pi == systems.front()) flip(family.beta[0]);
    const Orientation o = orientation_of(f.ctx, pi);
    auto vec = [&](int root) { return rs.coords(root); };
    for (int i = 0; i < r; ++i) {
      // alpha_i = beta_i - sum_{j -> i} beta_j
      IntVector a = vec(family.beta[i]);
      for (int j : o.predecessors(i))
        for (int k = 0; k < r; ++k) a[k] -= vec(family.beta[j])[k];
      require(a == vec(pi.root(i)), "alpha-recovery fails at vertex " + label(i));
      // C beta_i = -beta_i + sum_{j -> i} C beta_j + sum_{i -> j} beta_j
      IntVector rhs(r, 0);
      for (int k = 0; k < r; ++k) rhs[k] -= vec(family.beta[i])[k];
      for (int j : o.predecessors(i))
        for (int k = 0; k < r; ++k) rhs[k] += vec(f.ctx.element()(family.beta[j]))[k];
      for (int j : o.successors(i))
        for (int k = 0; k < r; ++k) rhs[k] += vec(family.beta[j])[k];
      require(rhs == vec(f.ctx.element()(family.beta[i])), "C beta relation fails at vertex " + label(i));
    }
    std::set<int> orbits;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        if (orbit_position(f.ctx, family.beta[i], family.beta[j])) orbits.insert(i * r + j);
    require(static_cast<int>(orbits.size()) == r, "beta roots share a C-orbit");
    for (int i = 0; i < r; ++i)
      if (o.is_sink(i) || o.is_source(i)) {
        const BetaFamily after = beta_after_reflection(f.ctx, pi, i);
        for (int j = 0; j < r; ++j)
          require(orbit_position(f.ctx, family.beta[j], after.beta[j]).has_value(),
                  "elementary reflection moved beta_" + label(j) + " to another C-orbit");
      }
  }
  return std::to_string(systems.size()) + " systems";
}

std::string suite_phi(const Fixture& f) {
  const RootSystem& rs = *f.rs;
  PhiMap reference = build_phi(f.ctx, f.ref);
  if (f.perturbed("phi")) flip(reference.forward[0].n);
  for (int x = 0; x < rs.size(); ++x)
    require(f.ihat.tau(reference(x)) == reference(f.ctx.element()(x)),
            "Phi(C x) != tau Phi(x) at " + rs.display(x));
  const auto systems = f.systems();
  for (const auto& pi : systems) {
    const PhiMap phi = build_phi(f.ctx, pi);
    for (int x = 0; x < rs.size(); ++x)
      require(phi(x) == reference(x), "Phi depends on the simple system at root " + rs.display(x));
  }
  return std::to_string(systems.size()) + " systems give one bijection";
}

std::string suite_heights(const Fixture& f) {
  const auto all = all_height_functions(f.ihat);
  require(all.size() == f.compatible.size(), "number of height functions differs from compatible count");
  std::set<HeightFunction> seen;
  for (const auto& pi : f.compatible) {
    const HeightFunction hf = height_of(f.ctx, pi);
    require(is_height_function(f.ihat, hf), "h^Pi is not a height function");
    seen.insert(hf);
  }
  require(std::vector<HeightFunction>(seen.begin(), seen.end()) == all, "Pi -> h^Pi is not onto height functions");
  const auto sampled = sample(all, f.options.exhaustive_limit, f.rng);
  for (const auto& hf : sampled) {
    const SimpleSystem pi = simple_system_from_height(f.ctx, hf);
    require(height_of(f.ctx, pi) == hf, "height function does not round-trip");
    HeightFunction shifted = hf;
    for (auto& v : shifted.values) v = f.ihat.mod(v + 2);
    require(height_of(f.ctx, pi.transformed(*f.rs, f.ctx.element())) == shifted, "h^{C Pi} != h^Pi + 2");
    const Orientation o = orientation_of(f.ctx, pi);
    for (int i = 0; i < f.rs->rank(); ++i) {
      if (!o.is_sink(i)) continue;
      HeightFunction lowered = hf;
      lowered.values[i] = f.ihat.mod(lowered.values[i] - 2);
      require(height_of(f.ctx, elementary_reflection(f.ctx, pi, i)) == lowered,
              "sink reflection at " + label(i) + " does not lower the height by 2");
    }
    // Slices meet every tau-orbit once.
    std::set<int> lines;
    for (const auto& v : slice_of(hf)) lines.insert(v.i);
    require(static_cast<int>(lines.size()) == f.rs->rank(), "slice misses a tau-orbit");
  }
  return std::to_string(all.size()) + " height functions";
}

std::string suite_nakayama(const Fixture& f) {
  const RootSystem& rs = *f.rs;
  const PhiMap phi = build_phi(f.ctx, f.ref);
  for (int x = 0; x < rs.size(); ++x)
    require(phi(rs.negate(x)) == nakayama_ihat(f.ctx, phi(x)), "Phi(-x) != nu Phi(x) at " + rs.display(x));
  for (const auto& v : f.ihat.vertices()) {
    require(f.ihat.contains(nakayama_ihat(f.ctx, v)), "nu leaves the quiver at " + show(v));
    require(nakayama_ihat(f.ctx, nakayama_ihat(f.ctx, v)) == v, "nu is not an involution at " + show(v));
  }
  for (const auto& pi : f.systems())
    require(check_involution(f.ctx, pi) == rs.check_map(), "i-check depends on the simple system");
  std::ostringstream os;
  os << "i-check =";
  for (int c : rs.check_map()) os << ' ' << c + 1;
  return os.str();
}

std::string suite_w0(const Fixture& f) {
  const RootSystem& rs = *f.rs;
  const auto systems = f.systems();
  const PhiMap phi = build_phi(f.ctx, f.ref);
  for (const auto& pi : systems) {
    std::vector<int> word = w0_word(f.ctx, pi);
    if (f.perturbed("w0") && pi == systems.front()) flip(word.front());
    for (int letter : word) require(letter >= 0 && letter < rs.rank(), "w0 word has a letter outside the diagram");
    const WeylElement w = evaluate_word(rs, pi, word);
    require(static_cast<int>(word.size()) == rs.positive_count(), "w0 word has the wrong length");
    require(weyl_length(rs, pi, w) == static_cast<int>(word.size()), "w0 word is not reduced");
    for (int i = 0; i < rs.rank(); ++i) require(!pi.is_positive(w(pi.root(i))), "w0 word does not send Pi to -Pi");

    const auto delta = delta_region(f.ctx, pi);
    std::vector<IhatVertex> positive;
    for (int x = 0; x < rs.size(); ++x)
      if (pi.is_positive(x)) positive.push_back(phi(x));
    std::sort(positive.begin(), positive.end());
    require(positive == delta, "Delta differs from Phi(R+)");
    const SimpleSystem minus = negative_system(f.ctx, pi);
    auto both = delta;
    for (const auto& v : delta_region(f.ctx, minus)) both.push_back(v);
    std::sort(both.begin(), both.end());
    auto everything = f.ihat.vertices();
    std::sort(everything.begin(), everything.end());
    require(both == everything, "Delta(Pi) and Delta(-Pi) do not partition the quiver");
    const auto lower = slice_of(height_of(f.ctx, pi));
    auto mapped = lower;
    for (auto& v : mapped) v = nakayama_ihat(f.ctx, v);
    std::sort(mapped.begin(), mapped.end());
    auto upper = slice_of(height_of(f.ctx, minus));
    std::sort(upper.begin(), upper.end());
    require(mapped == upper, "nu(I_Pi) != I_{-Pi}");
  }
  // Kostant: bipartite Pi with h = 2g gives w0 = C^g.
  std::string kostant;
  const int h = f.ctx.coxeter_number();
  if (h % 2 == 0) {
    const DynkinDiagram& d = rs.diagram();
    std::vector<int> order;
    for (int parity = 0; parity < 2; ++parity)
      for (int i = 0; i < rs.rank(); ++i)
        if (d.parity(i) == parity) order.push_back(i);
    const auto bip = coxeter_from_word(f.rs, f.ref, order);
    require(bip.element().power(h / 2) == longest_element(rs, f.ref), "w0 != C^(h/2) for bipartite C");
    kostant = ", w0 = C^" + std::to_string(h / 2) + " for bipartite C";
  }
  return std::to_string(systems.size()) + " systems" + kostant;
}

std::string suite_lattice(const Fixture& f) {
  const RootSystem& rs = *f.rs;
  const int r = rs.rank();
  const SmithForm snf = smith_form(mesh_relation_matrix(f.ihat));
  require(static_cast<int>(snf.rank) == f.ihat.size() - r, "mesh relations do not have corank r");
  require(std::all_of(snf.invariants.begin(), snf.invariants.end(), [](Int d) { return d == 1; }),
          "mesh quotient has torsion");
  const HeightFunction reference = height_of(f.ctx, f.ref);
  const PhiMap phi = build_phi(f.ctx, f.ref);
  const BetaFamily beta = beta_family(f.ctx, f.ref);
  IntMatrix basis(r, r);
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < r; ++i) basis(i, j) = rs.coords(beta.beta[j])[i];
  const RatMatrix to_beta = *inverse(to_rational(basis));
  for (int x = 0; x < rs.size(); ++x) {
    IntVector expected = *to_integer(to_beta * to_rational(rs.coords(x)));
    if (f.perturbed("lattice") && x == 0) flip(expected[0]);
    require(lattice_reduce(f.ihat, reference, {{phi(x), 1}}) == expected,
            "lattice_reduce(Phi(x)) differs from beta coordinates at " + rs.display(x));
  }
  for (const auto& v : f.ihat.vertices()) {
    IhatCombination mesh{{v, 1}};
    mesh[f.ihat.tau(v)] += 1;
    for (const auto& w : f.ihat.successors(v)) mesh[w] -= 1;
    require(lattice_reduce(f.ihat, reference, mesh) == IntVector(r, 0), "mesh relation at " + show(v) + " is not zero");
  }
  return "rank " + std::to_string(f.ihat.size() - static_cast<int>(snf.rank)) + ", torsion-free";
}

std::string suite_euler(const Fixture& f) {
  const RootSystem& rs = *f.rs;
  EulerTable closed = euler_form_closed(f.ctx);
  if (f.perturbed("euler_closed")) flip(closed.ref_gram(0, 0));
  IntMatrix ihat_form = euler_form_ihat(f.ihat);
  if (f.perturbed("euler_ihat")) flip(ihat_form(0, 0));
  const auto systems = f.systems();
  for (const auto& pi : systems) {
    require(euler_form_from_pi(f.ctx, pi).ref_gram == closed.ref_gram, "Euler form from Pi differs from closed form");
    fundamental_weights(f.ctx, pi);
  }
  const PhiMap phi = build_phi(f.ctx, f.ref);
  for (int x = 0; x < rs.size(); ++x)
    for (int y = 0; y < rs.size(); ++y) {
      const Int xy = euler_pairing(rs, closed, x, y);
      require(ihat_form(f.ihat.index(phi(x)), f.ihat.index(phi(y))) == xy,
              "I-hat form differs from the pullback at (" + rs.display(x) + ", " + rs.display(y) + ")");
      require(xy + euler_pairing(rs, closed, y, x) == rs.inner_product(x, y), "symmetrization fails");
      require(xy == -euler_pairing(rs, closed, y, f.ctx.element_inverse()(x)), "Serre duality fails");
      require(xy == euler_pairing(rs, closed, f.ctx.element()(x), f.ctx.element()(y)), "C-invariance fails");
    }
  return std::to_string(systems.size()) + " systems, " + std::to_string(rs.size() * rs.size()) + " root pairs";
}

std::string suite_positive_definite(const Fixture& f) {
  IntMatrix form = euler_form_ihat(f.ihat);
  if (f.perturbed("gram")) flip(form(0, 0));
  const auto check = symmetrized_form_check(f.ihat, form, height_of(f.ctx, f.ref));
  require(check.positive_definite, "symmetrized form is not positive definite");
  require(check.congruent_to_cartan, "symmetrized form is not congruent to the Cartan matrix");
  require(check.all_norm_two, "some vertex has (q, q) != 2");
  require(check.distinct_vectors, "two vertices give the same lattice vector");
  return "det = " + std::to_string(check.minors.back());
}

std::string suite_representations(const Fixture& f) {
  const RootSystem& rs = *f.rs;
  std::vector<IntVector> positive;
  for (int x = 0; x < rs.positive_count(); ++x) positive.push_back(rs.coords(x));
  std::sort(positive.begin(), positive.end());

  std::map<Orientation, SimpleSystem> by_orientation;
  for (const auto& pi : f.compatible) by_orientation.emplace(orientation_of(f.ctx, pi), pi);
  std::vector<std::pair<Orientation, SimpleSystem>> classes(by_orientation.begin(), by_orientation.end());
  classes = sample(classes, f.options.exhaustive_limit, f.rng);
  bool first = true;
  for (const auto& [omega, pi] : classes) {
    const ARQuiver ar = ar_quiver(rs, omega);
    require(static_cast<int>(ar.vertices.size()) == rs.positive_count(), "AR quiver size != |R+|");
    std::vector<IntVector> dims;
    for (const auto& v : ar.vertices) dims.push_back(ar.dimension.at(v));
    if (f.perturbed("dims") && first) flip(dims[0][0]);
    first = false;
    std::sort(dims.begin(), dims.end());
    require(dims == positive, "dimension vectors differ from positive roots for " + omega.to_string());
    const auto proj = projectives(omega);
    for (int i = 0; i < rs.rank(); ++i)
      for (int j = 0; j < rs.rank(); ++j) {
        IntVector unit(rs.rank(), 0);
        unit[j] = 1;
        require(euler_form_rep(omega, proj[i], unit) == (i == j ? 1 : 0), "<P(i), S(j)> != delta_ij");
      }
    for (const auto& d : dims) require(euler_form_rep(omega, d, d) == 1, "<x, x> != 1 on a positive root");
    for (const auto& x : ar.vertices) {
      const ZIVertex tx = ZIQuiver::tau(x);
      if (!ar.contains(tx)) continue;
      for (const auto& y : ar.vertices)
        require(euler_form_rep(omega, ar.dimension.at(x), ar.dimension.at(y)) ==
                    -euler_form_rep(omega, ar.dimension.at(y), ar.dimension.at(tx)),
                "<X, Y> != -<Y, tau X>");
    }
    const Verdict diagram = verify_commutative_diagram(f.ctx, pi);
    require(diagram.ok, "diagram does not commute: " + diagram.counterexample);
    const Verdict euler = verify_euler_identification(f.ctx, pi);
    require(euler.ok, "Euler forms differ: " + euler.counterexample);
  }
  return std::to_string(classes.size()) + " orientations";
}

using Suite = std::function<std::string(const Fixture&)>;

const std::vector<std::pair<std::string, Suite>>& suites() {
  static const std::vector<std::pair<std::string, Suite>> all = {
      {"roots", suite_roots},
      {"weyl_oracle", suite_weyl_oracle},
      {"compatible", suite_compatible},
      {"beta", suite_beta},
      {"phi", suite_phi},
      {"heights", suite_heights},
      {"nakayama", suite_nakayama},
      {"w0", suite_w0},
      {"lattice", suite_lattice},
      {"euler", suite_euler},
      {"positive_definite", suite_positive_definite},
      {"representations", suite_representations},
  };
  return all;
}

}  // namespace

const std::vector<std::string>& perturbable_tables() {
  static const std::vector<std::string> names = {"cartan", "beta", "phi", "w0", "lattice",
                                                 "euler_closed", "euler_ihat", "gram", "dims"};
  return names;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : suites()) out.push_back(name);
    return out;
  }();
  return names;
}

std::string to_string(SuiteStatus status) {
  switch (status) {
    case SuiteStatus::Pass: return "PASS";
    case SuiteStatus::Fail: return "FAIL";
    case SuiteStatus::Skip: return "SKIP";
  }
  return "?";
}

std::vector<SuiteResult> run_verification(DynkinType type, const VerifyOptions& options) {
  if (options.perturb &&
      std::find(perturbable_tables().begin(), perturbable_tables().end(), *options.perturb) == perturbable_tables().end())
    throw std::invalid_argument("unknown table '" + *options.perturb + "'");
  const Fixture fixture(type, options);
  std::vector<SuiteResult> out;
  for (const auto& [name, suite] : suites()) {
    SuiteResult result{name, SuiteStatus::Pass, {}};
    try {
      result.detail = suite(fixture);
    } catch (const Failure& e) {
      result.status = SuiteStatus::Fail;
      result.detail = e.message;
    } catch (const EnumerationCapExceeded&) {
      result.status = SuiteStatus::Skip;
      result.detail = "oracle skipped: |W| exceeds cap";
    } catch (const std::exception& e) {
      result.status = SuiteStatus::Fail;
      result.detail = e.what();
    }
    out.push_back(std::move(result));
  }
  return out;
}

}  // namespace coxar
