// Acceptance criteria 1-8, one PASS/FAIL line each. Exit status is nonzero
// when any criterion fails.

#include "coxar/quiverrep.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace coxar;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void expect(bool condition, const std::string& what) {
    if (!condition && pass) {
      pass = false;
      detail << "first failure: " << what << "; ";
    }
  }
};

CoxeterContext standard(const std::string& name) {
  auto rs = build_root_system(DynkinType::parse(name));
  std::vector<int> order(rs->rank());
  std::iota(order.begin(), order.end(), 0);
  return coxeter_from_word(rs, SimpleSystem::reference(*rs), order);
}

void compatible_count(Outcome& o) {
  const std::vector<std::pair<std::string, std::size_t>> expected = {
      {"A2", 6}, {"A3", 16}, {"A4", 40}, {"D4", 48}, {"D5", 128}, {"E6", 384}};
  for (const auto& [name, count] : expected) {
    const auto ctx = standard(name);
    const auto all = enumerate_compatible(ctx);
    o.expect(all.size() == count, name + " count " + std::to_string(all.size()));
    o.detail << name << "=" << all.size() << " ";
  }
  for (const char* name : {"A2", "A3", "D4"}) {
    const auto ctx = standard(name);
    const RootSystem& rs = ctx.roots();
    std::vector<SimpleSystem> brute;
    for (const auto& w : enumerate_weyl_group(rs)) {
      const SimpleSystem pi = SimpleSystem::from_witness(rs, w);
      if (is_compatible(ctx, pi).compatible) brute.push_back(pi);
    }
    std::sort(brute.begin(), brute.end());
    o.expect(brute == enumerate_compatible(ctx), std::string(name) + " brute-force set differs");
  }
  o.detail << "brute force A2 A3 D4 matched";
}

void phi_canonicity(Outcome& o) {
  std::size_t systems = 0;
  for (const char* name : {"A2", "A3", "A4", "D4"}) {
    const auto ctx = standard(name);
    const RootSystem& rs = ctx.roots();
    const IhatQuiver ihat(rs.type());
    const auto all = enumerate_compatible(ctx);
    const PhiMap first = build_phi(ctx, all.front());
    for (const auto& pi : all) {
      const PhiMap phi = build_phi(ctx, pi);
      o.expect(phi == first, std::string(name) + " Phi depends on Pi");
      for (int x = 0; x < rs.size(); ++x)
        o.expect(phi(ctx.element()(x)) == ihat.tau(phi(x)), std::string(name) + " Phi(C x) != tau Phi(x)");
      ++systems;
    }
  }
  o.detail << systems << " compatible systems, one bijection per type";
}

void w0_golden(Outcome& o) {
  const auto a4 = standard("A4");
  const auto word = w0_word(a4, SimpleSystem::reference(a4.roots()));
  std::string shown;
  for (int l : word) shown += (shown.empty() ? "" : " ") + std::to_string(l + 1);
  o.expect(shown == "1 2 1 3 2 4 1 3 2 1", "A4 word " + shown);
  o.detail << "A4: " << shown << "; ";
  std::size_t systems = 0;
  for (const char* name : {"A3", "A4", "D4"}) {
    const auto ctx = standard(name);
    const RootSystem& rs = ctx.roots();
    for (const auto& pi : enumerate_compatible(ctx)) {
      const auto w = w0_word(ctx, pi);
      const WeylElement e = evaluate_word(rs, pi, w);
      o.expect(static_cast<int>(w.size()) == rs.rank() * ctx.coxeter_number() / 2, std::string(name) + " length");
      o.expect(weyl_length(rs, pi, e) == static_cast<int>(w.size()), std::string(name) + " not reduced");
      for (int i = 0; i < rs.rank(); ++i) {
        const int image = e(pi.root(i));
        bool negative_simple = false;
        for (int j = 0; j < rs.rank(); ++j) negative_simple |= image == rs.negate(pi.root(j));
        o.expect(negative_simple, std::string(name) + " w0(Pi) != -Pi");
      }
      ++systems;
    }
  }
  o.detail << systems << " systems reduced and sending Pi to -Pi";
}

void euler_agreement(Outcome& o) {
  std::size_t pairs = 0;
  for (const char* name : {"A2", "A3", "A4", "A5", "D4", "D5", "E6"}) {
    const auto ctx = standard(name);
    const RootSystem& rs = ctx.roots();
    const IhatQuiver ihat(rs.type());
    const EulerTable closed = euler_form_closed(ctx);
    for (const auto& pi : enumerate_compatible(ctx))
      o.expect(euler_form_from_pi(ctx, pi) == closed, std::string(name) + " from-Pi form differs");
    const IntMatrix on_ihat = euler_form_ihat(ihat);
    const PhiMap phi = build_phi(ctx, ctx.canonical());
    for (int x = 0; x < rs.size(); ++x)
      for (int y = 0; y < rs.size(); ++y) {
        const Int xy = euler_pairing(rs, closed, x, y);
        o.expect(on_ihat(ihat.index(phi(x)), ihat.index(phi(y))) == xy, std::string(name) + " pullback differs");
        o.expect(xy == -euler_pairing(rs, closed, y, ctx.element_inverse()(x)), std::string(name) + " Serre duality");
        o.expect(xy + euler_pairing(rs, closed, y, x) == rs.inner_product(x, y), std::string(name) + " symmetrization");
        ++pairs;
      }
  }
  o.detail << pairs << " root pairs over A2-A5 D4 D5 E6";
}

const std::vector<std::string> kAllTypes = {"A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8",
                                            "D4", "D5", "D6", "D7", "D8", "E6", "E7", "E8"};

void positive_definite(Outcome& o) {
  for (const auto& name : kAllTypes) {
    const auto ctx = standard(name);
    const IhatQuiver ihat(ctx.roots().type());
    const auto check = symmetrized_form_check(ihat, euler_form_ihat(ihat), height_of(ctx, ctx.canonical()));
    o.expect(check.positive_definite, name + " not positive definite");
    o.expect(check.congruent_to_cartan, name + " not congruent to Cartan");
    o.expect(check.all_norm_two, name + " some (q, q) != 2");
  }
  o.detail << kAllTypes.size() << " types";
}

void lattice_presentation(Outcome& o) {
  std::mt19937_64 rng(2024);
  for (const auto& name : kAllTypes) {
    const auto ctx = standard(name);
    const RootSystem& rs = ctx.roots();
    const IhatQuiver ihat(rs.type());
    const SmithForm snf = smith_form(mesh_relation_matrix(ihat));
    o.expect(static_cast<int>(snf.rank) == ihat.size() - rs.rank(), name + " quotient rank");
    o.expect(std::all_of(snf.invariants.begin(), snf.invariants.end(), [](Int d) { return d == 1; }), name + " torsion");
    const HeightFunction reference = height_of(ctx, ctx.canonical());
    const PhiMap phi = build_phi(ctx, ctx.canonical());
    const BetaFamily beta = beta_family(ctx, ctx.canonical());
    std::uniform_int_distribution<int> pick(0, rs.size() - 1);
    for (int trial = 0; trial < 100; ++trial) {
      const int x = pick(rng);
      const IntVector c = lattice_reduce(ihat, reference, {{phi(x), 1}});
      IntVector back(rs.rank(), 0);
      for (int j = 0; j < rs.rank(); ++j)
        for (int k = 0; k < rs.rank(); ++k) back[k] += c[j] * rs.coords(beta.beta[j])[k];
      o.expect(back == rs.coords(x), name + " lattice_reduce(Phi(x)) != x");
    }
  }
  o.detail << "free of rank r, 100 sampled roots per type over " << kAllTypes.size() << " types";
}

void representations(Outcome& o) {
  std::size_t orientations = 0;
  for (const char* name : {"A2", "A3", "A4", "D4"}) {
    const auto ctx = standard(name);
    const RootSystem& rs = ctx.roots();
    std::vector<IntVector> positive;
    for (int x = 0; x < rs.positive_count(); ++x) positive.push_back(rs.coords(x));
    std::sort(positive.begin(), positive.end());
    std::map<Orientation, SimpleSystem> classes;
    for (const auto& pi : enumerate_compatible(ctx)) classes.emplace(orientation_of(ctx, pi), pi);
    o.expect(classes.size() == Orientation::all(rs.diagram()).size(), std::string(name) + " orientation missing");
    for (const auto& [omega, pi] : classes) {
      const ARQuiver ar = ar_quiver(rs, omega);
      o.expect(static_cast<int>(ar.vertices.size()) == rs.rank() * ctx.coxeter_number() / 2,
               std::string(name) + " AR size");
      std::vector<IntVector> dims;
      for (const auto& v : ar.vertices) dims.push_back(ar.dimension.at(v));
      std::sort(dims.begin(), dims.end());
      o.expect(dims == positive, std::string(name) + " dimension vectors");
      const Verdict diagram = verify_commutative_diagram(ctx, pi);
      o.expect(diagram.ok, std::string(name) + " diagram: " + diagram.counterexample);
      const Verdict euler = verify_euler_identification(ctx, pi);
      o.expect(euler.ok, std::string(name) + " Euler: " + euler.counterexample);
      ++orientations;
    }
  }
  o.detail << orientations << " orientations of A2 A3 A4 D4";
}

void negative_controls(Outcome& o) {
  // (a) every single-seed perturbation must trip the wraparound check.
  std::size_t perturbations = 0, caught = 0, changed = 0;
  for (const char* name : {"A2", "A3", "A4", "D4"}) {
    const IhatQuiver ihat(DynkinType::parse(name));
    const IntMatrix clean = euler_form_ihat(ihat);
    for (const auto& q : ihat.vertices())
      for (int level : {q.n, q.n + 1})
        for (int i = 0; i < ihat.rank(); ++i) {
          if ((ihat.parity(i) + level) % 2 != 0) continue;
          ++perturbations;
          try {
            const IntMatrix dirty = euler_form_ihat(ihat, SeedPerturbation{q, {i, level}, 1});
            if (!(dirty == clean)) ++changed;
          } catch (const WraparoundError&) {
            ++caught;
          }
        }
  }
  o.expect(caught == perturbations, "seed perturbations caught by wraparound: " + std::to_string(caught) + "/" +
                                        std::to_string(perturbations));
  o.detail << "wraparound caught " << caught << "/" << perturbations << " seed perturbations (" << changed
           << " of the rest change the table); ";

  // (b) elementary reflection away from sinks and sources.
  std::size_t rejected = 0, attempts = 0;
  for (const char* name : {"A3", "A4", "D4"}) {
    const auto ctx = standard(name);
    for (const auto& pi : enumerate_compatible(ctx)) {
      const Orientation omega = orientation_of(ctx, pi);
      for (int i = 0; i < ctx.rank(); ++i) {
        if (omega.is_sink(i) || omega.is_source(i)) continue;
        ++attempts;
        try {
          elementary_reflection(ctx, pi, i);
        } catch (const std::invalid_argument&) {
          ++rejected;
        }
      }
    }
  }
  o.expect(attempts > 0 && rejected == attempts, "elementary reflection accepted at an interior vertex");
  o.detail << "interior reflections rejected " << rejected << "/" << attempts << "; ";

  // (c) A3: 8 of the 24 simple systems are incompatible with s1 s2 s3.
  const auto a3 = standard("A3");
  std::size_t incompatible = 0, total = 0;
  for (const auto& w : enumerate_weyl_group(a3.roots())) {
    const SimpleSystem pi = SimpleSystem::from_witness(a3.roots(), w);
    ++total;
    if (is_compatible(a3, pi).compatible) continue;
    try {
      orientation_of(a3, pi);
    } catch (const std::invalid_argument&) {
      ++incompatible;
    }
  }
  o.expect(total == 24 && incompatible == 8, "A3 incompatible count " + std::to_string(incompatible));
  o.detail << "A3 incompatible " << incompatible << "/" << total;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"compatible-system count", compatible_count},
      {"Phi canonicity", phi_canonicity},
      {"w0 golden word", w0_golden},
      {"Euler three-way agreement", euler_agreement},
      {"positive definiteness", positive_definite},
      {"lattice presentation", lattice_presentation},
      {"representation correspondence", representations},
      {"negative controls", negative_controls},
  };
  bool all = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[k].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && o.pass;
    std::ostringstream time;
    time.precision(2);
    time << std::fixed << seconds;
    std::cout << "criterion " << k + 1 << " " << (o.pass ? "PASS" : "FAIL") << " " << criteria[k].first << ": "
              << o.detail.str() << " [" << time.str() << "s]" << std::endl;
  }
  return all ? 0 : 1;
}
