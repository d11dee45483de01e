#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "affcell/cellular.hpp"

namespace affcell {

// Everything built from one root datum and length bound.
struct Context {
  WeightConfig config;
  std::shared_ptr<const AffineWeylGroup> group;
  std::shared_ptr<const HeckeAlgebra> hecke;
  std::shared_ptr<const LowestCell> cell;
  std::shared_ptr<const CellularAlgebra> cellular;

  static Context create(const WeightConfig& config, int length_bound);
  // e.g. "A2(1,1,1)"
  std::string name() const;
};

struct CheckResult {
  CheckResult() = default;
  explicit CheckResult(std::string n) : name(std::move(n)) {}

  std::string name;
  bool passed = true;
  long long cases = 0;
  std::string detail;  // first failure, if any
};

struct SuiteReport {
  std::string suite;
  std::string setting;
  std::vector<CheckResult> checks;
  bool passed() const;
};

const std::vector<std::string>& suite_names();

// bar(C_w) = C_w, C_w - T_w in H_<0, P_{y,w} = P_{y^-1,w^-1}, C_w^flat = C_{w^-1}.
SuiteReport verify_kl_axioms(const Context& ctx, int max_len);
// deg f_{x,y,z} <= c_{x,y} on random pairs; c_{x,vy} against L(w_0) - L(v).
SuiteReport verify_degree_bounds(const Context& ctx, int pairs, int max_len, std::uint32_t seed);
// Factorization bijection on c_0 up to l(w_0) + extra; P(z) C_{w_0 y} = C_{z w_0 y}.
SuiteReport verify_lowest_cell(const Context& ctx, int extra);
// Homomorphism on basis pairs of total reassembled length <= total_len, involution
// and unitriangularity on the keys involved.
SuiteReport verify_cellular(const Context& ctx, int total_len);
// Far-from-wall invariance of decompose_P_omega on the first `pairs` pairs found.
SuiteReport verify_translation_invariance(const Context& ctx, int pairs);
// Path profiles against the Hecke side for all tau with L-coordinate sum <= max_sum.
SuiteReport verify_type_a_paths(const Context& ctx, int max_sum);

// Default sizes used by the command line driver.
SuiteReport run_suite(const std::string& name, const Context& ctx, std::uint32_t seed);

}  // namespace affcell
