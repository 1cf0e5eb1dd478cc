#pragma once

#include <string>
#include <vector>

#include "oracles.hpp"
#include "sepcong/sepcong.hpp"

namespace fixtures {

  using sepcong::Semigroup;
  using sepcong::SubsetMask;

  // min on {0,1}
  inline Semigroup e1() {
    return sepcong::parse_table("2\n0 0\n0 1");
  }
  // null semigroup on {0,1}
  inline Semigroup e2() {
    return sepcong::parse_table("2\n0 0\n0 0");
  }
  // multiplication mod 3
  inline Semigroup e3() {
    return sepcong::make_named("zmod_mult", 3);
  }
  // min on {0,1,2}
  inline Semigroup e5() {
    return sepcong::make_named("chain_min", 3);
  }

  inline SubsetMask set(Semigroup const& s, std::initializer_list<sepcong::Element> xs) {
    return SubsetMask::from_elements(s.order(), xs);
  }

  inline oracle::Table table_of(Semigroup const& s) {
    return oracle::Table(s.cells().begin(), s.cells().end());
  }

  inline oracle::Set set_of(SubsetMask m) {
    oracle::Set out;
    m.for_each([&](sepcong::Element e) { out.insert(static_cast<int>(e)); });
    return out;
  }

  inline std::vector<int> labels_of(sepcong::Partition const& p) {
    return std::vector<int>(p.labels().begin(), p.labels().end());
  }

  /// Every semigroup of order 1..max_order, commutative or not.
  inline std::vector<Semigroup> all_up_to(std::size_t max_order) {
    std::vector<Semigroup> out;
    for (std::size_t n = 1; n <= max_order; ++n) {
      for (auto& s : sepcong::enumerate_all(n)) {
        out.push_back(std::move(s));
      }
    }
    return out;
  }

  inline std::vector<Semigroup> commutative_up_to(std::size_t max_order) {
    std::vector<Semigroup> out;
    for (std::size_t n = 1; n <= max_order; ++n) {
      for (auto& s : sepcong::enumerate_commutative(n)) {
        out.push_back(std::move(s));
      }
    }
    return out;
  }

}  // namespace fixtures
