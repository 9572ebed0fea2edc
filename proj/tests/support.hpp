#pragma once

#include "coxar/quiverrep.hpp"
#include "oracle.hpp"

#include <numeric>
#include <string>
#include <vector>

namespace support {

inline coxar::DynkinType type(const std::string& name) { return coxar::DynkinType::parse(name); }

inline char family_letter(const coxar::DynkinType& t) {
  return t.family() == coxar::Family::A ? 'A' : t.family() == coxar::Family::D ? 'D' : 'E';
}

inline oracle::Mat oracle_cartan(const coxar::DynkinType& t) { return oracle::cartan(family_letter(t), t.rank()); }

inline oracle::Vec vec(const coxar::IntVector& v) { return oracle::Vec(v.begin(), v.end()); }

inline std::vector<int> ascending(int r) {
  std::vector<int> order(r);
  std::iota(order.begin(), order.end(), 0);
  return order;
}

/// C = s_1 s_2 ... s_r with respect to the reference system.
inline coxar::CoxeterContext standard(const std::string& name) {
  auto rs = coxar::build_root_system(type(name));
  return coxar::coxeter_from_word(rs, coxar::SimpleSystem::reference(*rs), ascending(rs->rank()));
}

/// Types small enough for exhaustive checks in unit tests.
inline const std::vector<std::string>& small_types() {
  static const std::vector<std::string> names = {"A1", "A2", "A3", "A4", "A5", "D4", "D5"};
  return names;
}

inline const std::vector<std::string>& all_types() {
  static const std::vector<std::string> names = {"A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8",
                                                 "D4", "D5", "D6", "D7", "E6", "E7", "E8"};
  return names;
}

}  // namespace support
