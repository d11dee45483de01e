#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "affcell/rootdata.hpp"

namespace affcell {

// Element of W_e = W_0 x| P stored as the affine map x -> x.u + lambda acting on
// the right. The element w with w A_0 = A_0 sigma_w is stored as sigma_w, so
// products compose left to right: (u1,l1)(u2,l2) = (u1 u2, l1.u2 + l2).
struct GroupElement {
  Weight lambda;
  int u = 0;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

enum class Side { Left, Right };

// Pi exponent and generator word with w = pi^k s_{i_1} ... s_{i_m}.
struct ReducedWord {
  int pi = 0;
  std::vector<int> letters;
  friend bool operator==(const ReducedWord&, const ReducedWord&) = default;
};

class AffineWeylGroup {
public:
  explicit AffineWeylGroup(WeightSystemPtr ws);

  const WeightSystem& weights() const { return *ws_; }
  const WeightSystemPtr& weight_system() const { return ws_; }
  int rank() const { return ws_->rank(); }
  int num_generators() const { return ws_->num_generators(); }

  GroupElement identity() const { return {}; }
  GroupElement generator(int i) const { return gens_[i]; }
  GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& a) const;
  // p_lambda; throws std::invalid_argument when lambda is not in P.
  GroupElement translation(const Weight& lambda) const;
  GroupElement finite(int u) const { return {Weight{}, u}; }
  GroupElement w0() const { return finite(ws_->longest_element()); }
  bool in_group(const GroupElement& g) const { return ws_->in_P(g.lambda); }

  // k_alpha: the alcove A_0 g lies strictly between H_{alpha,k} and
  // H_{alpha,k+1}. r must be a positive root index.
  int alcove_floor(const GroupElement& g, int r) const;
  int length(const GroupElement& g) const;
  int weight_length(const GroupElement& g) const;
  bool descent(const GroupElement& g, int i, Side side) const;
  bool right_descent(const GroupElement& g, int i) const { return descent(g, i, Side::Right); }
  bool left_descent(const GroupElement& g, int i) const { return descent(g, i, Side::Left); }

  // Pi = length zero elements, cyclic with a fixed generator.
  int pi_order() const { return static_cast<int>(pi_elems_.size()); }
  GroupElement pi(int k) const;
  // Conjugation pi^k s_i pi^-k = s_{pi_permute(k, i)}.
  int pi_permute(int k, int i) const;
  int pi_index(const GroupElement& g) const;

  ReducedWord reduced_word(const GroupElement& g) const;
  GroupElement from_word(const ReducedWord& w) const;
  GroupElement from_letters(const std::vector<int>& letters) const { return from_word({0, letters}); }

  bool bruhat_leq(const GroupElement& x, const GroupElement& y) const;
  // All x <= y by the subword property on the reduced word of y.
  std::vector<GroupElement> lower_interval(const GroupElement& y) const;

  // All elements of length at most bound in (length, word, Pi-index) order.
  std::vector<GroupElement> enumerate(int bound) const;
  // Strict total order used for every deterministic listing.
  bool shortlex_less(const GroupElement& a, const GroupElement& b) const;
  void sort_shortlex(std::vector<GroupElement>& v) const;

  // Labelled alcove A_0 g computed from the affine map.
  LabeledAlcove alcove(const GroupElement& g) const;
  // Independent oracle: walk A_0 across faces of the given types, then
  // relabel by the Pi part.
  LabeledAlcove alcove_walk(const ReducedWord& w) const;
  // Hyperplanes (positive root index, level) strictly between A_0 a and A_0 b.
  std::set<std::pair<int, int>> separating_hyperplanes(const GroupElement& a,
                                                       const GroupElement& b) const;

  // Text form "pi^k*[i_1,...]" or "[i_1,...]" when k = 0.
  std::string to_string(const GroupElement& g) const;
  // Accepts the text form above or "{lambda:[..],u:[..]}" with u a W_0 word.
  GroupElement parse(const std::string& text) const;

private:
  void build_pi();

  WeightSystemPtr ws_;
  std::vector<GroupElement> gens_;
  std::vector<GroupElement> pi_elems_;     // pi_elems_[k] = pi^k
  std::map<GroupElement, int> pi_lookup_;  // length zero element -> k
  std::vector<std::vector<int>> pi_perm_;  // pi_perm_[k][i]
};

}  // namespace affcell
