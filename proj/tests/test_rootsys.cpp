#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace coxar;
using support::type;

TEST_CASE("Dynkin type parsing") {
  CHECK(type("A5").rank() == 5);
  CHECK(type("d4").family() == Family::D);
  CHECK(type("E6").name() == "E6");
  for (const char* bad : {"", "A", "A0", "D3", "E5", "E9", "X4", "A-1", "A4x", "4A"})
    CHECK_THROWS_AS(type(bad), std::invalid_argument);
}

TEST_CASE("Coxeter numbers and group orders from the classification") {
  CHECK(type("A4").coxeter_number() == 5);
  CHECK(type("D5").coxeter_number() == 8);
  CHECK(type("E6").coxeter_number() == 12);
  CHECK(type("E7").coxeter_number() == 18);
  CHECK(type("E8").coxeter_number() == 30);
  CHECK(type("A5").weyl_group_order() == 720);
  CHECK(type("D4").weyl_group_order() == 192);
  CHECK(type("E6").weyl_group_order() == 51840);
  CHECK(type("E8").weyl_group_order() == 696729600ULL);
}

TEST_CASE("root tables match an independent closure") {
  for (const auto& name : support::all_types()) {
    CAPTURE(name);
    const auto rs = build_root_system(type(name));
    const oracle::Mat a = support::oracle_cartan(rs->type());
    const auto expected = oracle::roots(a);
    std::set<oracle::Vec> got;
    for (int x = 0; x < rs->size(); ++x) got.insert(support::vec(rs->coords(x)));
    CHECK(got == expected);
    CHECK(static_cast<int>(expected.size()) == rs->rank() * rs->type().coxeter_number());
    CHECK(rs->coxeter_number() == rs->type().coxeter_number());
    for (int i = 0; i < rs->rank(); ++i)
      for (int j = 0; j < rs->rank(); ++j) CHECK(rs->cartan()(i, j) == a[i][j]);
  }
}

TEST_CASE("root indexing: positives first by height, alpha_i at i - 1, negation pairs") {
  for (const auto& name : support::all_types()) {
    CAPTURE(name);
    const auto rs = build_root_system(type(name));
    for (int i = 0; i < rs->rank(); ++i) CHECK(rs->coords(i) == support::vec(oracle::unit(rs->rank(), i)));
    for (int x = 0; x + 1 < rs->positive_count(); ++x) CHECK(rs->height(x) <= rs->height(x + 1));
    for (int x = 0; x < rs->size(); ++x) {
      CHECK(rs->is_positive(x) == oracle::nonnegative(support::vec(rs->coords(x))));
      IntVector minus = rs->coords(x);
      for (auto& c : minus) c = -c;
      CHECK(rs->coords(rs->negate(x)) == minus);
      CHECK(rs->index_of(rs->coords(x)) == x);
    }
    CHECK_FALSE(rs->find(IntVector(rs->rank(), 5)).has_value());
    CHECK_THROWS_AS(rs->index_of(IntVector(rs->rank(), 5)), InvariantError);
  }
}

TEST_CASE("Euclidean models reproduce the inner product") {
  for (const auto& name : {"A1", "A4", "A7", "D4", "D5", "D8"}) {
    CAPTURE(name);
    const auto rs = build_root_system(type(name));
    for (int x = 0; x < rs->size(); ++x)
      for (int y = 0; y < rs->size(); ++y) {
        const IntVector u = rs->ambient(x), v = rs->ambient(y);
        Int dot = 0;
        for (std::size_t k = 0; k < u.size(); ++k) dot += u[k] * v[k];
        CHECK(dot == rs->inner_product(x, y));
      }
  }
}

TEST_CASE("root display") {
  const auto a = build_root_system(type("A4"));
  CHECK(a->display(0) == "e1-e2");
  CHECK(a->display(a->negate(3)) == "-e4+e5");
  const auto d = build_root_system(type("D4"));
  CHECK(d->display(3) == "e3+e4");
  const auto e = build_root_system(type("E6"));
  CHECK(e->display(1) == "[0,1,0,0,0,0]");
}

TEST_CASE("Weyl group enumeration agrees with a matrix closure") {
  for (const auto& name : support::small_types()) {
    CAPTURE(name);
    const auto rs = build_root_system(type(name));
    const auto group = enumerate_weyl_group(*rs);
    CHECK(group.size() == oracle::weyl_group(support::oracle_cartan(rs->type())).size());
    CHECK(group.size() == rs->type().weyl_group_order());
    CHECK(std::is_sorted(group.begin(), group.end()));
  }
  const auto e6 = build_root_system(type("E6"));
  CHECK(enumerate_weyl_group(*e6).size() == 51840);
}

TEST_CASE("enumeration refuses groups above the cap") {
  const auto e7 = build_root_system(type("E7"));
  CHECK_THROWS_AS(enumerate_weyl_group(*e7), EnumerationCapExceeded);
  const auto a4 = build_root_system(type("A4"));
  CHECK_THROWS_AS(enumerate_weyl_group(*a4, 100), EnumerationCapExceeded);
  CHECK(enumerate_weyl_group(*a4, 120).size() == 120);
}

TEST_CASE("lengths and reduced words of random elements") {
  std::mt19937_64 rng(5);
  for (const auto& name : {"A4", "D5", "E6", "E8"}) {
    CAPTURE(name);
    const auto rs = build_root_system(type(name));
    const SimpleSystem ref = SimpleSystem::reference(*rs);
    const oracle::Mat a = support::oracle_cartan(rs->type());
    std::uniform_int_distribution<int> letter(0, rs->rank() - 1);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<int> word(1 + trial % 17);
      for (auto& l : word) l = letter(rng);
      const WeylElement w = evaluate_word(*rs, ref, word);
      const int len = weyl_length(*rs, ref, w);
      CHECK(len == oracle::length(a, oracle::word_matrix(a, word)));
      CHECK(len <= static_cast<int>(word.size()));
      CHECK((static_cast<int>(word.size()) - len) % 2 == 0);
      for (auto side : {DescentSide::Right, DescentSide::Left}) {
        const auto reduced = reduced_word(*rs, ref, w, side);
        CHECK(static_cast<int>(reduced.size()) == len);
        CHECK(evaluate_word(*rs, ref, reduced) == w);
      }
      const auto normal = shortlex_word(*rs, ref, w);
      CHECK(evaluate_word(*rs, ref, normal) == w);
      CHECK(static_cast<int>(normal.size()) == len);
      CHECK(normal <= reduced_word(*rs, ref, w));
      CHECK(is_weyl_permutation(*rs, w));
      CHECK((w * w.inverse()).is_identity());
    }
  }
}

TEST_CASE("longest element and the involution i -> i-check") {
  const std::map<std::string, std::vector<int>> expected = {
      {"A1", {0}},          {"A4", {3, 2, 1, 0}},          {"D4", {0, 1, 2, 3}},
      {"D5", {0, 1, 2, 4, 3}}, {"E6", {5, 1, 4, 3, 2, 0}}, {"E7", {0, 1, 2, 3, 4, 5, 6}},
      {"E8", {0, 1, 2, 3, 4, 5, 6, 7}},
  };
  for (const auto& [name, check] : expected) {
    CAPTURE(name);
    const auto rs = build_root_system(type(name));
    const SimpleSystem ref = SimpleSystem::reference(*rs);
    const WeylElement w0 = longest_element(*rs, ref);
    CHECK(weyl_length(*rs, ref, w0) == rs->positive_count());
    CHECK(rs->check_map() == check);
    for (int i = 0; i < rs->rank(); ++i) CHECK(w0(i) == rs->negate(check[i]));
  }
}

TEST_CASE("simple systems from witnesses") {
  const auto rs = build_root_system(type("D4"));
  const SimpleSystem ref = SimpleSystem::reference(*rs);
  std::set<SimpleSystem> distinct;
  for (const auto& w : enumerate_weyl_group(*rs)) {
    const SimpleSystem pi = SimpleSystem::from_witness(*rs, w);
    CHECK(is_valid_simple_system(*rs, pi));
    distinct.insert(pi);
    for (int x = 0; x < rs->size(); ++x) {
      const IntVector c = pi.coords(*rs, x);
      CHECK(pi.root_from_coords(*rs, c) == x);
      CHECK(pi.is_positive(x) == oracle::nonnegative(support::vec(c)));
    }
    CHECK(ref.transformed(*rs, w) == pi);
  }
  CHECK(distinct.size() == 192);
}

TEST_CASE("a non-Weyl permutation is rejected") {
  const auto rs = build_root_system(type("A3"));
  std::vector<int> perm(rs->size());
  std::iota(perm.begin(), perm.end(), 0);
  std::swap(perm[0], perm[1]);
  CHECK_FALSE(is_weyl_permutation(*rs, WeylElement(perm)));
  CHECK(is_weyl_permutation(*rs, simple_reflection(*rs, SimpleSystem::reference(*rs), 1)));
}
