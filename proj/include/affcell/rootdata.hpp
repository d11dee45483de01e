#pragma once

#include <array>
#include <compare>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace affcell {

inline constexpr int kMaxRank = 3;

// Integer vector of pairings with the simple coroots, i.e. coordinates in the
// basis of ordinary fundamental weights. Entries past the rank stay zero.
struct Weight {
  std::array<int, kMaxRank> c{};

  int& operator[](int i) { return c[i]; }
  int operator[](int i) const { return c[i]; }
  friend auto operator<=>(const Weight&, const Weight&) = default;

  Weight& operator+=(const Weight& o) {
    for (int i = 0; i < kMaxRank; ++i) c[i] += o.c[i];
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    for (int i = 0; i < kMaxRank; ++i) c[i] -= o.c[i];
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  Weight operator-() const {
    Weight w;
    for (int i = 0; i < kMaxRank; ++i) w.c[i] = -c[i];
    return w;
  }
  friend Weight operator*(int k, Weight a) {
    for (auto& x : a.c) x *= k;
    return a;
  }
  bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0; }
};

enum class CartanType { A, C };

struct WeightConfig {
  CartanType type = CartanType::A;
  int rank = 1;
  // L(s_0), ..., L(s_n) in the order the user lists them.
  std::vector<int> params;
};

// An alcove given by its n+1 vertices, vertex j carrying label j (the type of
// the opposite face). Coordinates are scaled by WeightSystem::denominator().
struct LabeledAlcove {
  std::array<Weight, kMaxRank + 1> vertex{};
  friend auto operator<=>(const LabeledAlcove&, const LabeledAlcove&) = default;
};

struct Root {
  std::array<int, kMaxRank> simple{};  // coefficients on the simple roots
  std::array<int, kMaxRank> coroot{};  // coefficients of the coroot on simple coroots
  Weight omega;                        // fundamental-weight coordinates
  int height = 0;
};

class WeightSystem {
public:
  // Throws std::invalid_argument on unsupported types or parameter vectors
  // that violate conjugacy constancy or the type C ordering.
  static std::shared_ptr<const WeightSystem> create(const WeightConfig& config);

  CartanType type() const { return type_; }
  int rank() const { return rank_; }
  int num_generators() const { return rank_ + 1; }
  const WeightConfig& config() const { return config_; }
  std::string name() const;

  // L(s_i) for the generator whose wall of A_0 has label i; label 0 is the
  // affine wall H_{alpha_0,1}.
  int generator_weight(int i) const { return gen_weight_[i]; }
  // Coxeter matrix entry m(s_i, s_j) on the affine diagram (0 encodes infinity).
  int coxeter_m(int i, int j) const { return coxeter_[i][j]; }

  // Roots. Indices 0..N-1 are the positive roots, N..2N-1 their negatives.
  int num_positive_roots() const { return static_cast<int>(roots_.size()) / 2; }
  const Root& root(int r) const { return roots_[r]; }
  int negate_root(int r) const;
  bool is_positive_root(int r) const { return r < num_positive_roots(); }
  int simple_root_index(int i) const { return simple_index_[i]; }  // i in 1..n
  int highest_coroot_root() const { return highest_; }              // alpha_0
  int find_root(const Weight& omega_coords) const;                  // -1 if none
  int cartan(int i, int j) const { return cartan_[i][j]; }          // <alpha_j, alpha_i^vee>, 1-based

  // <lambda, alpha^vee> for the root with index r.
  int pairing(const Weight& lambda, int r) const;
  Weight simple_root(int i) const { return roots_[simple_index_[i]].omega; }
  Weight fundamental_omega(int i) const;  // ordinary fundamental weight
  // Fundamental L-weight b_i * omega_i.
  Weight fundamental_weight(int i) const;

  // Finite Weyl group W_0, elements numbered from 0 (the identity).
  int w0_order() const { return static_cast<int>(finite_.size()); }
  int finite_mul(int u, int v) const { return mul_[u][v]; }  // u then v
  int finite_inverse(int u) const { return inv_[u]; }
  int finite_length(int u) const { return finite_[u].length; }
  const std::vector<int>& finite_word(int u) const { return finite_[u].word; }
  int simple_reflection(int i) const { return simple_refl_[i]; }  // i in 1..n
  int reflection(int r) const;
  int longest_element() const { return longest_; }
  int finite_from_word(const std::vector<int>& word) const;
  // Right action lambda . u.
  Weight act(const Weight& lambda, int u) const;
  // Index of the root alpha_r . u.
  int root_act(int r, int u) const { return root_act_[u][r]; }
  // Whether u(alpha_r) is negative for a positive root r.
  bool sends_negative(int u, int r) const { return left_negative_[u][r]; }
  // Matrix rows e_k . u.
  const std::array<Weight, kMaxRank>& finite_matrix(int u) const { return finite_[u].rows; }

  // Lattices and weights.
  int b(int i) const { return b_[i]; }  // i in 1..n
  bool in_P(const Weight& lambda) const;
  bool is_dominant(const Weight& lambda) const;
  bool is_antidominant(const Weight& lambda) const;
  // Coordinates on the fundamental L-weights (lambda must lie in P).
  std::array<int, kMaxRank> l_coordinates(const Weight& lambda) const;
  Weight from_l_coordinates(const std::array<int, kMaxRank>& a) const;
  Weight nu(const Weight& lambda) const;
  int nu_on_group(int u) const;
  std::vector<Weight> orbit(const Weight& lambda) const;
  int index_P_over_Q() const;

  // L_{H_{alpha,k}} for any root index r and level k.
  int hyperplane_weight(int r, int k) const;
  // Direct oracle: walk alcoves from A_0 until one has a face on H_{alpha,k}
  // and read the face label.
  int hyperplane_weight_search(int r, int k) const;
  // Sum of L_H over hyperplanes through the point X / denominator().
  int L_at_scaled(const Weight& scaled) const;
  int nu_L() const { return nu_L_; }
  std::vector<Weight> special_points(int bound) const;

  // Alcove geometry on the scaled lattice.
  int denominator() const { return denom_; }
  int scaled_pairing(const Weight& scaled, int r) const { return pairing(scaled, r); }
  LabeledAlcove fundamental_alcove() const;
  // Reflects the alcove across its face opposite the vertex with label i.
  LabeledAlcove reflect_face(const LabeledAlcove& a, int i) const;
  // Root index and level of the hyperplane containing the face of label i.
  std::pair<int, int> face_hyperplane(const LabeledAlcove& a, int i) const;

private:
  WeightSystem() = default;
  void build_roots();
  void build_finite_group();
  void build_weights();

  struct FiniteElt {
    std::array<Weight, kMaxRank> rows{};
    std::vector<int> word;
    int length = 0;
  };

  WeightConfig config_;
  CartanType type_ = CartanType::A;
  int rank_ = 0;
  std::array<std::array<int, kMaxRank + 1>, kMaxRank + 1> cartan_{};
  std::array<std::array<int, kMaxRank + 1>, kMaxRank + 1> coxeter_{};
  std::vector<int> gen_weight_;
  std::vector<Root> roots_;
  std::vector<int> simple_index_;
  std::map<Weight, int> root_lookup_;
  int highest_ = -1;
  std::vector<FiniteElt> finite_;
  std::vector<std::vector<int>> mul_;
  std::vector<int> inv_;
  std::vector<int> simple_refl_;
  std::vector<std::vector<int>> root_act_;
  std::vector<std::vector<bool>> left_negative_;
  int longest_ = 0;
  std::vector<int> b_;
  std::vector<int> level_period_;
  std::vector<std::array<int, 2>> hyperplane_table_;
  int denom_ = 1;
  int nu_L_ = 0;
};

using WeightSystemPtr = std::shared_ptr<const WeightSystem>;

std::string weight_to_string(const Weight& w, int rank);

}  // namespace affcell
