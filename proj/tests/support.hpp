#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "gradedlc/lattice.hpp"

namespace testing_support {

using gradedlc::BaseRing;
using gradedlc::CMonomial;
using gradedlc::CMonomialIdeal;

// Ideal of K[X_1..X_d] from X-exponent vectors.
inline CMonomialIdeal field_ideal(std::initializer_list<std::vector<std::uint32_t>> gens) {
  std::vector<CMonomial> g;
  for (const auto& x : gens) g.push_back({0, x});
  const std::size_t d = g.front().x_exps.size();
  return CMonomialIdeal(d, BaseRing::Field, std::move(g));
}

// Ideal of K[Y][X_1..X_d] from (Y-power, X-exponents) pairs.
inline CMonomialIdeal pid_ideal(std::initializer_list<std::pair<std::uint32_t, std::vector<std::uint32_t>>> gens) {
  std::vector<CMonomial> g;
  for (const auto& [y, x] : gens) g.push_back({y, x});
  const std::size_t d = g.front().x_exps.size();
  return CMonomialIdeal(d, BaseRing::GradedPID, std::move(g));
}

}  // namespace testing_support
