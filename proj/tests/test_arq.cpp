#include "support.hpp"

#include <doctest.h>

#include <functional>

using namespace coxar;
using support::type;

namespace {

std::string show(IhatVertex v) { return std::to_string(v.i + 1) + ":" + std::to_string(v.n); }

}  // namespace

TEST_CASE("I-hat vertices, arrows and indexing") {
  for (const auto& name : support::all_types()) {
    CAPTURE(name);
    const IhatQuiver q(type(name));
    const int r = q.rank(), h = q.coxeter_number();
    CHECK(q.size() == r * h);
    CHECK(static_cast<int>(q.edges().size()) == 2 * (r - 1) * h);
    std::set<int> indices;
    for (const auto& v : q.vertices()) {
      CHECK((q.parity(v.i) + v.n) % 2 == 0);
      CHECK(q.contains(v));
      CHECK_FALSE(q.contains({v.i, v.n + 1}));
      indices.insert(q.index(v));
      CHECK(q.vertices()[q.index(v)] == v);
      CHECK(q.tau(v, h) == v);
      for (const auto& w : q.successors(v)) {
        CHECK(q.contains(w));
        CHECK(w.n == q.mod(v.n + 1));
        const auto back = q.predecessors(w);
        CHECK(std::find(back.begin(), back.end(), v) != back.end());
      }
    }
    CHECK(static_cast<int>(indices.size()) == q.size());
  }
  CHECK(IhatQuiver(type("D5")).size() == 40);
}

TEST_CASE("height functions match a brute-force search") {
  for (const auto& name : support::small_types()) {
    CAPTURE(name);
    const IhatQuiver q(type(name));
    const int r = q.rank(), period = q.period();
    std::vector<HeightFunction> brute;
    std::vector<int> values(r, 0);
    std::function<void(int)> fill = [&](int i) {
      if (i == r) {
        HeightFunction f{values};
        bool ok = true;
        for (auto [a, b] : q.diagram().edges()) {
          const int d = q.mod(values[a] - values[b]);
          ok = ok && (d == 1 || d == period - 1);
        }
        if (ok) brute.push_back(f);
        return;
      }
      for (int n = q.parity(i); n < period; n += 2) {
        values[i] = n;
        fill(i + 1);
      }
    };
    fill(0);
    std::sort(brute.begin(), brute.end());
    CHECK(all_height_functions(q) == brute);
    for (const auto& f : brute) CHECK(is_height_function(q, f));
    CHECK_FALSE(is_height_function(q, HeightFunction{std::vector<int>(r, 1)}));
  }
}

TEST_CASE("Phi agrees with the orbit construction and is frozen for A4") {
  // Oracle: Phi(C^k beta_i) = (i, h(i) + 2k) with beta_i the path sums for
  // the orientation 1 > 2 > 3 > 4 and h(1) = 0, h(i + 1) = h(i) + 1.
  const auto ctx = support::standard("A4");
  const RootSystem& rs = ctx.roots();
  const oracle::Mat a = support::oracle_cartan(rs.type());
  const oracle::Mat c = oracle::word_matrix(a, {0, 1, 2, 3});
  std::map<oracle::Vec, std::pair<int, int>> expected;
  for (int i = 0; i < 4; ++i) {
    oracle::Vec beta(4, 0);
    for (int j = 0; j <= i; ++j) beta[j] = 1;
    for (int k = 0; k < 5; ++k) {
      expected[beta] = {i, (i + 2 * k) % 10};
      beta = oracle::act(c, beta);
    }
  }
  const PhiMap phi = build_phi(ctx, SimpleSystem::reference(rs));
  REQUIRE(expected.size() == 20);
  for (int x = 0; x < rs.size(); ++x) {
    const auto [i, n] = expected.at(support::vec(rs.coords(x)));
    CHECK(phi(x) == IhatVertex{i, n});
  }
  CHECK(phi.anchor == IhatVertex{0, 0});

  const std::map<std::string, std::string> frozen = {
      {"1:0", "e1-e2"},  {"3:0", "-e3+e5"}, {"2:1", "e1-e3"},  {"4:1", "-e4+e5"}, {"1:2", "e2-e3"},
      {"3:2", "e1-e4"},  {"2:3", "e2-e4"},  {"4:3", "e1-e5"},  {"1:4", "e3-e4"},  {"3:4", "e2-e5"},
      {"2:5", "e3-e5"},  {"4:5", "-e1+e2"}, {"1:6", "e4-e5"},  {"3:6", "-e1+e3"}, {"2:7", "-e1+e4"},
      {"4:7", "-e2+e3"}, {"1:8", "-e1+e5"}, {"3:8", "-e2+e4"}, {"2:9", "-e2+e5"}, {"4:9", "-e3+e4"},
  };
  for (int x = 0; x < rs.size(); ++x) CHECK(frozen.at(show(phi(x))) == rs.display(x));
}

TEST_CASE("Phi does not depend on the compatible system and intertwines C with tau") {
  for (const auto& name : {"A2", "A3", "A4", "D4", "D5", "E6"}) {
    CAPTURE(name);
    const auto ctx = support::standard(name);
    const RootSystem& rs = ctx.roots();
    const IhatQuiver q(rs.type());
    const PhiMap reference = build_phi(ctx, ctx.canonical());
    std::set<IhatVertex> image;
    for (int x = 0; x < rs.size(); ++x) {
      image.insert(reference(x));
      CHECK(q.tau(reference(x)) == reference(ctx.element()(x)));
      CHECK(reference.inverse.at(q.index(reference(x))) == x);
    }
    CHECK(static_cast<int>(image.size()) == q.size());
    for (const auto& pi : enumerate_compatible(ctx)) CHECK(build_phi(ctx, pi) == reference);
  }
}

TEST_CASE("height functions and compatible systems determine each other") {
  for (const auto& name : {"A3", "D4", "D5"}) {
    CAPTURE(name);
    const auto ctx = support::standard(name);
    const IhatQuiver q(ctx.roots().type());
    std::set<HeightFunction> seen;
    for (const auto& pi : enumerate_compatible(ctx)) {
      const HeightFunction f = height_of(ctx, pi);
      CHECK(is_height_function(q, f));
      CHECK(simple_system_from_height(ctx, f) == pi);
      CHECK(orientation_of_height(q, f) == orientation_of(ctx, pi));
      seen.insert(f);
      const Orientation o = orientation_of(ctx, pi);
      for (int i = 0; i < q.rank(); ++i) {
        if (!o.is_sink(i) && !o.is_source(i)) continue;
        HeightFunction g = f;
        g.values[i] = q.mod(g.values[i] + (o.is_sink(i) ? -2 : 2));
        CHECK(height_of(ctx, elementary_reflection(ctx, pi, i)) == g);
      }
    }
    CHECK(seen.size() == all_height_functions(q).size());
  }
}

TEST_CASE("the A4 word for w0") {
  const auto ctx = support::standard("A4");
  const auto word = w0_word(ctx, SimpleSystem::reference(ctx.roots()));
  CHECK(word == std::vector<int>{0, 1, 0, 2, 1, 3, 0, 2, 1, 0});
  CHECK(height_of(ctx, SimpleSystem::reference(ctx.roots())).values == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("w0 words are reduced and send Pi to -Pi") {
  for (const auto& name : {"A3", "A4", "D4", "D5"}) {
    CAPTURE(name);
    const auto ctx = support::standard(name);
    const RootSystem& rs = ctx.roots();
    const oracle::Mat a = support::oracle_cartan(rs.type());
    for (const auto& pi : enumerate_compatible(ctx)) {
      const auto word = w0_word(ctx, pi);
      CHECK(static_cast<int>(word.size()) == rs.rank() * ctx.coxeter_number() / 2);
      CHECK(weyl_length(rs, pi, evaluate_word(rs, pi, word)) == static_cast<int>(word.size()));
      oracle::Mat w = oracle::identity(rs.rank());
      for (int letter : word) w = oracle::multiply(w, oracle::reflection(a, support::vec(rs.coords(pi.root(letter)))));
      std::set<oracle::Vec> minus;
      for (int i = 0; i < rs.rank(); ++i) minus.insert(support::vec(rs.coords(rs.negate(pi.root(i)))));
      for (int i = 0; i < rs.rank(); ++i) CHECK(minus.count(oracle::act(w, support::vec(rs.coords(pi.root(i))))) == 1);
      const auto lifted = lifted_delta(ctx, pi);
      CHECK(lifted.size() == word.size());
    }
  }
}

TEST_CASE("Delta is Phi of the positive roots and nu swaps Delta with its complement") {
  for (const auto& name : {"A3", "A4", "D4", "D5", "E6"}) {
    CAPTURE(name);
    const auto ctx = support::standard(name);
    const RootSystem& rs = ctx.roots();
    const PhiMap phi = build_phi(ctx, ctx.canonical());
    for (const auto& pi : enumerate_compatible(ctx)) {
      std::vector<IhatVertex> positive;
      for (int x = 0; x < rs.size(); ++x)
        if (pi.is_positive(x)) positive.push_back(phi(x));
      std::sort(positive.begin(), positive.end());
      const auto delta = delta_region(ctx, pi);
      CHECK(delta == positive);
      std::vector<IhatVertex> moved;
      for (const auto& v : delta) moved.push_back(nakayama_ihat(ctx, v));
      std::sort(moved.begin(), moved.end());
      CHECK(moved == delta_region(ctx, negative_system(ctx, pi)));
      CHECK(check_involution(ctx, pi) == rs.check_map());
    }
    for (int x = 0; x < rs.size(); ++x) CHECK(phi(rs.negate(x)) == nakayama_ihat(ctx, phi(x)));
  }
}

TEST_CASE("mesh presentation of the root lattice") {
  for (const auto& name : support::all_types()) {
    CAPTURE(name);
    const IhatQuiver q(type(name));
    const SmithForm s = smith_form(mesh_relation_matrix(q));
    CHECK(static_cast<int>(s.rank) == q.size() - q.rank());
    for (Int d : s.invariants) CHECK(d == 1);
  }
}

TEST_CASE("lattice_reduce recovers beta coordinates") {
  for (const auto& name : {"A4", "D5", "E6", "E8"}) {
    CAPTURE(name);
    const auto ctx = support::standard(name);
    const RootSystem& rs = ctx.roots();
    const IhatQuiver q(rs.type());
    const SimpleSystem& canonical = ctx.canonical();
    const PhiMap phi = build_phi(ctx, canonical);
    const BetaFamily beta = beta_family(ctx, canonical);
    const HeightFunction reference = height_of(ctx, canonical);
    for (int x = 0; x < rs.size(); ++x) {
      const IntVector c = lattice_reduce(q, reference, {{phi(x), 1}});
      IntVector back(rs.rank(), 0);
      for (int j = 0; j < rs.rank(); ++j)
        for (int k = 0; k < rs.rank(); ++k) back[k] += c[j] * rs.coords(beta.beta[j])[k];
      CHECK(back == rs.coords(x));
    }
    IntVector sum(rs.rank(), 0);
    IhatCombination combo;
    for (int x = 0; x < 3; ++x) {
      combo[phi(x)] += 2;
      const IntVector c = lattice_reduce(q, reference, {{phi(x), 1}});
      for (int k = 0; k < rs.rank(); ++k) sum[k] += 2 * c[k];
    }
    CHECK(lattice_reduce(q, reference, combo) == sum);
  }
}
