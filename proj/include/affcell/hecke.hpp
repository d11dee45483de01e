#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "affcell/laurent.hpp"
#include "affcell/weyl.hpp"

namespace affcell {

// Raised when a computation would need a KL element longer than the
// configured length bound.
class BoundExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Finitely supported combination of T_w with no zero coefficients stored.
class HeckeElt {
public:
  using Map = std::map<GroupElement, LaurentPoly>;

  HeckeElt() = default;
  static HeckeElt basis(const GroupElement& w, const LaurentPoly& c = 1);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Map& terms() const { return terms_; }
  LaurentPoly coeff(const GroupElement& w) const;

  void add(const GroupElement& w, const LaurentPoly& c);
  // this += c * h
  void add_scaled(const HeckeElt& h, const LaurentPoly& c);

  HeckeElt& operator+=(const HeckeElt& h);
  HeckeElt& operator-=(const HeckeElt& h);
  friend HeckeElt operator+(HeckeElt a, const HeckeElt& b) { return a += b; }
  friend HeckeElt operator-(HeckeElt a, const HeckeElt& b) { return a -= b; }
  friend HeckeElt operator*(const LaurentPoly& c, const HeckeElt& h);
  friend bool operator==(const HeckeElt& a, const HeckeElt& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const HeckeElt& a, const HeckeElt& b) { return !(a == b); }

private:
  Map terms_;
};

// Coefficients keyed by group element, e.g. a KL decomposition.
using Coefficients = std::map<GroupElement, LaurentPoly>;

struct DegreeData {
  GroupElement x, y;
  std::set<std::pair<int, int>> hyperplanes;  // H_{x,y} as (root, level)
  std::set<int> directions;                   // I_{x,y}
  std::map<int, int> c_per_alpha;
  int c = 0;
};

// Bounded cell preorder graph. Edge lists hold indices into elements.
struct CellPreorderGraph {
  std::vector<GroupElement> elements;
  std::map<GroupElement, int> index;
  std::vector<std::vector<int>> left_below;   // z <-_L y : left_below[y] holds z
  std::vector<std::vector<int>> right_below;  // z <-_R y

  bool leq_L(const GroupElement& z, const GroupElement& y) const;
  bool leq_R(const GroupElement& z, const GroupElement& y) const;
  bool leq_LR(const GroupElement& z, const GroupElement& y) const;

private:
  bool reach(int from, int to, bool left, bool right) const;
};

class HeckeAlgebra {
public:
  explicit HeckeAlgebra(std::shared_ptr<const AffineWeylGroup> group, int length_bound = 40);

  const AffineWeylGroup& group() const { return *group_; }
  const std::shared_ptr<const AffineWeylGroup>& group_ptr() const { return group_; }
  const WeightSystem& weights() const { return group_->weights(); }
  int length_bound() const { return length_bound_; }

  HeckeElt T(const GroupElement& w) const { return HeckeElt::basis(w); }

  // T_s h (Left) or h T_s (Right) for the generator s_i.
  HeckeElt mul_gen(Side side, int i, const HeckeElt& h) const;
  // T_x h or h T_x.
  HeckeElt mul_T(Side side, const GroupElement& x, const HeckeElt& h) const;
  HeckeElt mul(const HeckeElt& a, const HeckeElt& b) const;

  HeckeElt bar(const HeckeElt& h) const;
  // bar(T_w), memoized.
  const HeckeElt& bar_T(const GroupElement& w) const;
  // Anti-automorphism T_w -> T_{w^-1}.
  HeckeElt flat(const HeckeElt& h) const;
  // Automorphism T_w -> T_{nu(w)} induced by -w_0.
  GroupElement nu(const GroupElement& w) const;
  HeckeElt nu(const HeckeElt& h) const;

  // Kazhdan-Lusztig element C_w, memoized; throws BoundExceeded past the bound.
  const HeckeElt& C(const GroupElement& w) const;
  const HeckeElt& kl_basis(const GroupElement& w) const { return C(w); }
  LaurentPoly P(const GroupElement& y, const GroupElement& w) const { return C(w).coeff(y); }
  // C_s = T_s + q^-L(s) T_e.
  HeckeElt C_gen(int i) const;
  // Expansion h = sum a_z C_z by elimination at the longest support element.
  Coefficients kl_decompose(const HeckeElt& h) const;

  Coefficients h_constants(const GroupElement& x, const GroupElement& y) const;
  // f_{x,y,z} by right multiplication of T_x along a reduced word of y.
  Coefficients f_constants(const GroupElement& x, const GroupElement& y) const;
  // f_{x,y,z} by enumerating the admissible subsets of a reduced word of x.
  Coefficients f_constants_subsets(const GroupElement& x, const GroupElement& y) const;
  // z' -> a_{z'} with T_x T_y = sum a_{z'} T_{z'y}.
  Coefficients profile(const GroupElement& x, const GroupElement& y) const;
  bool same_profile(const GroupElement& x, const GroupElement& y, const GroupElement& y2) const;

  DegreeData degree_data(const GroupElement& x, const GroupElement& y) const;

  CellPreorderGraph cell_preorder_graph(int bound) const;

  std::size_t cached_kl_count() const;

private:
  HeckeElt compute_C(const GroupElement& w) const;
  void check_bound(const GroupElement& w) const;

  std::shared_ptr<const AffineWeylGroup> group_;
  int length_bound_;
  std::vector<LaurentPoly> xi_;  // xi_[i] = xi(L(s_i))
  mutable std::recursive_mutex mutex_;
  mutable std::map<GroupElement, HeckeElt> bar_cache_;
  mutable std::map<GroupElement, HeckeElt> kl_cache_;
};

}  // namespace affcell
