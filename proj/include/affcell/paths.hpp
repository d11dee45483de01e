#pragma once

#include <map>
#include <vector>

#include "affcell/cellular.hpp"

namespace affcell {

// Fundamental weight indices m_1..m_N, each in 1..n.
using PathType = std::vector<int>;
// gamma -> number of paths from 0 to gamma.
using PathProfile = std::map<Weight, Integer>;

// Lattice paths in the antidominant cone of type A whose l-th step subtracts an
// element of the W_0-orbit of omega_{m_l}.
class PathCounter {
public:
  explicit PathCounter(WeightSystemPtr ws);

  const WeightSystem& weights() const { return *ws_; }

  Integer count(const PathType& m, const Weight& gamma) const;
  // Dynamic program over prefixes; only reachable antidominant points are stored.
  PathProfile full_profile(const PathType& m) const;
  // Oracle: enumerates every sequence of orbit choices.
  PathProfile full_profile_brute(const PathType& m) const;
  // Vertex sequences x_0 = 0, ..., x_N = gamma. Limited to N <= kMaxWitnessSteps.
  std::vector<std::vector<Weight>> witnesses(const PathType& m, const Weight& gamma) const;

  static constexpr int kMaxWitnessSteps = 6;

private:
  void check_type(const PathType& m) const;

  WeightSystemPtr ws_;
  std::vector<std::vector<Weight>> orbits_;  // orbits_[i] for omega_i, index 0 unused
};

// a_1 ones, then a_2 twos, and so on.
PathType path_type(const WeightSystem& ws, const Weight& tau);
// i -> n + 1 - i, the action of nu on fundamental weight indices in type A.
PathType nu_type(const PathType& m, int rank);

// Path profile of type nu(m(tau)) against decompose_P_tau(tau). The nu accounts
// for p_tau w_0 = w_0 p_{-nu(tau)}.
bool cross_check(const CellularAlgebra& A, const Weight& tau);

}  // namespace affcell
