#include "affcell/rootdata.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace affcell {

namespace {

int positive_mod(int a, int m) { return ((a % m) + m) % m; }

// Simple roots in a Euclidean realization (epsilon coordinates), used only to
// validate the hardcoded Cartan matrices.
std::vector<std::vector<int>> realization(CartanType type, int rank) {
  std::vector<std::vector<int>> out;
  if (type == CartanType::A) {
    for (int i = 0; i < rank; ++i) {
      std::vector<int> v(rank + 1, 0);
      v[i] = 1;
      v[i + 1] = -1;
      out.push_back(v);
    }
  } else {
    // Roots of the finite system whose coroots form type C: alpha_1 long,
    // alpha_2 short.
    out.push_back({1, -1});
    out.push_back({0, 1});
  }
  return out;
}

int dot(const std::vector<int>& a, const std::vector<int>& b) {
  int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

int coxeter_from_product(int p) {
  switch (p) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: return 0;  // infinite
  }
}

}  // namespace

std::shared_ptr<const WeightSystem> WeightSystem::create(const WeightConfig& config) {
  std::shared_ptr<WeightSystem> ws(new WeightSystem());
  ws->config_ = config;
  ws->type_ = config.type;
  ws->rank_ = config.rank;
  const int n = config.rank;
  if (config.type == CartanType::A) {
    if (n < 1 || n > 3) throw std::invalid_argument("type A supports rank 1..3");
  } else if (n != 2) {
    throw std::invalid_argument("type C supports rank 2 only");
  }
  if (static_cast<int>(config.params.size()) != n + 1)
    throw std::invalid_argument("expected " + std::to_string(n + 1) + " parameters L(s_0..s_n)");
  for (int p : config.params)
    if (p <= 0) throw std::invalid_argument("generator weights must be positive");

  // Cartan matrix, 1-based: cartan_[i][j] = <alpha_j, alpha_i^vee>.
  for (int i = 1; i <= n; ++i) ws->cartan_[i][i] = 2;
  if (config.type == CartanType::A) {
    for (int i = 1; i < n; ++i) ws->cartan_[i][i + 1] = ws->cartan_[i + 1][i] = -1;
  } else {
    ws->cartan_[1][2] = -1;
    ws->cartan_[2][1] = -2;
  }
  auto real = realization(config.type, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      int num = 2 * dot(real[j - 1], real[i - 1]);
      int den = dot(real[i - 1], real[i - 1]);
      if (num % den != 0 || num / den != ws->cartan_[i][j])
        throw std::logic_error("Cartan matrix does not match the root realization");
    }

  ws->build_roots();

  // Affine Coxeter matrix from the linear parts of the affine simple roots.
  std::vector<int> lin(n + 1);
  lin[0] = ws->negate_root(ws->highest_);
  for (int i = 1; i <= n; ++i) lin[i] = ws->simple_index_[i];
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      if (i == j) {
        ws->coxeter_[i][j] = 1;
        continue;
      }
      int p = ws->pairing(ws->roots_[lin[i]].omega, lin[j]) *
              ws->pairing(ws->roots_[lin[j]].omega, lin[i]);
      ws->coxeter_[i][j] = coxeter_from_product(p);
    }

  // Generator weights. In type C the heavier end node a = params[0] is placed
  // on the walls through the origin so that 0 stays special.
  ws->gen_weight_.assign(n + 1, 0);
  if (config.type == CartanType::A) {
    for (int p : config.params)
      if (p != config.params[0])
        throw std::invalid_argument("type A requires equal parameters on all generators");
    ws->gen_weight_ = config.params;
  } else {
    if (config.params[0] < config.params[2])
      throw std::invalid_argument("type C convention requires L(s_0) >= L(s_2)");
    ws->gen_weight_ = {config.params[2], config.params[1], config.params[0]};
  }
  // Conjugacy constancy: generators joined by odd bonds must carry equal weight.
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      if (i != j && ws->coxeter_[i][j] == 3) parent[find(i)] = find(j);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      if (find(i) == find(j) && ws->gen_weight_[i] != ws->gen_weight_[j])
        throw std::invalid_argument("weights differ on conjugate generators");

  ws->build_finite_group();
  ws->build_weights();
  return ws;
}

std::string WeightSystem::name() const {
  std::ostringstream os;
  os << (type_ == CartanType::A ? "A" : "C") << rank_ << "(";
  for (std::size_t i = 0; i < config_.params.size(); ++i) os << (i ? "," : "") << config_.params[i];
  os << ")";
  return os.str();
}

void WeightSystem::build_roots() {
  const int n = rank_;
  struct Raw {
    std::array<int, kMaxRank> simple{}, coroot{};
  };
  std::vector<Raw> found;
  std::set<std::array<int, kMaxRank>> seen;
  std::queue<Raw> q;
  for (int i = 0; i < n; ++i) {
    Raw r;
    r.simple[i] = 1;
    r.coroot[i] = 1;
    q.push(r);
    seen.insert(r.simple);
  }
  while (!q.empty()) {
    Raw r = q.front();
    q.pop();
    found.push_back(r);
    for (int i = 1; i <= n; ++i) {
      // s_i(beta) = beta - <beta, alpha_i^vee> alpha_i
      int p = 0;
      for (int j = 1; j <= n; ++j) p += r.simple[j - 1] * cartan_[i][j];
      // s_i(beta^vee) = beta^vee - <alpha_i, beta^vee> alpha_i^vee
      int pc = 0;
      for (int j = 1; j <= n; ++j) pc += r.coroot[j - 1] * cartan_[j][i];
      Raw s = r;
      s.simple[i - 1] -= p;
      s.coroot[i - 1] -= pc;
      if (seen.insert(s.simple).second) q.push(s);
    }
  }
  std::vector<Root> pos;
  for (const Raw& r : found) {
    bool positive = true;
    for (int i = 0; i < n; ++i) positive = positive && r.simple[i] >= 0;
    if (!positive) continue;
    Root root;
    root.simple = r.simple;
    root.coroot = r.coroot;
    for (int i = 1; i <= n; ++i) {
      int s = 0;
      for (int j = 1; j <= n; ++j) s += r.simple[j - 1] * cartan_[i][j];
      root.omega[i - 1] = s;
      root.height += r.simple[i - 1];
    }
    pos.push_back(root);
  }
  std::sort(pos.begin(), pos.end(), [](const Root& a, const Root& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.simple > b.simple;
  });
  roots_ = pos;
  for (const Root& r : pos) {
    Root m;
    for (int i = 0; i < kMaxRank; ++i) {
      m.simple[i] = -r.simple[i];
      m.coroot[i] = -r.coroot[i];
    }
    m.omega = -r.omega;
    m.height = -r.height;
    roots_.push_back(m);
  }
  for (int r = 0; r < static_cast<int>(roots_.size()); ++r) root_lookup_[roots_[r].omega] = r;
  simple_index_.assign(n + 1, -1);
  for (int i = 1; i <= n; ++i) {
    std::array<int, kMaxRank> e{};
    e[i - 1] = 1;
    for (int r = 0; r < num_positive_roots(); ++r)
      if (roots_[r].simple == e) simple_index_[i] = r;
  }
  int best = -1;
  for (int r = 0; r < num_positive_roots(); ++r) {
    int h = 0;
    for (int i = 0; i < n; ++i) h += roots_[r].coroot[i];
    if (h > best) {
      best = h;
      highest_ = r;
    }
  }
}

int WeightSystem::negate_root(int r) const {
  const int N = num_positive_roots();
  return r < N ? r + N : r - N;
}

int WeightSystem::find_root(const Weight& omega_coords) const {
  auto it = root_lookup_.find(omega_coords);
  return it == root_lookup_.end() ? -1 : it->second;
}

int WeightSystem::pairing(const Weight& lambda, int r) const {
  int s = 0;
  for (int i = 0; i < rank_; ++i) s += lambda[i] * roots_[r].coroot[i];
  return s;
}

Weight WeightSystem::fundamental_omega(int i) const {
  Weight w;
  w[i - 1] = 1;
  return w;
}

Weight WeightSystem::fundamental_weight(int i) const {
  Weight w;
  w[i - 1] = b_[i];
  return w;
}

Weight WeightSystem::act(const Weight& lambda, int u) const {
  Weight out;
  const auto& rows = finite_[u].rows;
  for (int k = 0; k < rank_; ++k)
    if (lambda[k] != 0)
      for (int j = 0; j < rank_; ++j) out[j] += lambda[k] * rows[k][j];
  return out;
}

void WeightSystem::build_finite_group() {
  const int n = rank_;
  FiniteElt id;
  for (int k = 0; k < n; ++k) id.rows[k][k] = 1;
  std::map<std::array<Weight, kMaxRank>, int> index;
  finite_.push_back(id);
  index[id.rows] = 0;
  auto reflect = [&](const Weight& w, int i) {
    Weight a = roots_[simple_index_[i]].omega;
    return w - w[i - 1] * a;
  };
  for (std::size_t head = 0; head < finite_.size(); ++head) {
    for (int i = 1; i <= n; ++i) {
      FiniteElt e = finite_[head];
      for (int k = 0; k < n; ++k) e.rows[k] = reflect(e.rows[k], i);
      if (index.count(e.rows)) continue;
      e.word.push_back(i);
      e.length = static_cast<int>(e.word.size());
      index[e.rows] = static_cast<int>(finite_.size());
      finite_.push_back(e);
    }
  }
  const int m = static_cast<int>(finite_.size());
  mul_.assign(m, std::vector<int>(m, -1));
  for (int u = 0; u < m; ++u)
    for (int v = 0; v < m; ++v) {
      std::array<Weight, kMaxRank> rows{};
      for (int k = 0; k < n; ++k) rows[k] = act(finite_[u].rows[k], v);
      mul_[u][v] = index.at(rows);
    }
  inv_.assign(m, -1);
  for (int u = 0; u < m; ++u)
    for (int v = 0; v < m; ++v)
      if (mul_[u][v] == 0) inv_[u] = v;
  simple_refl_.assign(n + 1, -1);
  for (int u = 0; u < m; ++u)
    if (finite_[u].word.size() == 1) simple_refl_[finite_[u].word[0]] = u;
  const int R = static_cast<int>(roots_.size());
  root_act_.assign(m, std::vector<int>(R, -1));
  for (int u = 0; u < m; ++u)
    for (int r = 0; r < R; ++r) {
      int t = find_root(act(roots_[r].omega, u));
      if (t < 0) throw std::logic_error("W_0 does not permute the roots");
      root_act_[u][r] = t;
    }
  const int N = num_positive_roots();
  left_negative_.assign(m, std::vector<bool>(N, false));
  for (int u = 0; u < m; ++u) {
    int neg = 0;
    for (int r = 0; r < N; ++r) {
      left_negative_[u][r] = !is_positive_root(root_act_[inv_[u]][r]);
      if (left_negative_[u][r]) ++neg;
    }
    if (neg != finite_[u].length) throw std::logic_error("finite length mismatch");
    if (finite_[u].length > finite_[longest_].length) longest_ = u;
  }
}

int WeightSystem::reflection(int r) const {
  std::array<Weight, kMaxRank> rows{};
  for (int k = 0; k < rank_; ++k) {
    Weight e;
    e[k] = 1;
    rows[k] = e - roots_[r].coroot[k] * roots_[r].omega;
  }
  for (int u = 0; u < w0_order(); ++u)
    if (finite_[u].rows == rows) return u;
  throw std::logic_error("reflection not found in W_0");
}

int WeightSystem::finite_from_word(const std::vector<int>& word) const {
  int u = 0;
  for (int i : word) {
    if (i < 1 || i > rank_) throw std::invalid_argument("finite word letter out of range");
    u = mul_[u][simple_refl_[i]];
  }
  return u;
}

void WeightSystem::build_weights() {
  const int n = rank_;
  denom_ = 1;
  for (int i = 0; i < n; ++i) denom_ = std::lcm(denom_, roots_[highest_].coroot[i]);

  const int N = num_positive_roots();
  level_period_.assign(N, 0);
  hyperplane_table_.assign(N, {0, 0});
  for (int r = 0; r < N; ++r) {
    int g = 0;
    for (int i = 1; i <= n; ++i) g = std::gcd(g, std::abs(pairing(simple_root(i), r)));
    if (g < 1 || g > 2) throw std::logic_error("unexpected hyperplane period");
    level_period_[r] = g;
    for (int k = 0; k < g; ++k) hyperplane_table_[r][k] = hyperplane_weight_search(r, k);
  }
  b_.assign(n + 1, 1);
  for (int i = 1; i <= n; ++i) {
    int r = simple_index_[i];
    b_[i] = hyperplane_weight(r, 0) == hyperplane_weight(r, 1) ? 1 : 2;
  }
  nu_L_ = 0;
  const int box = 3 * denom_;
  Weight x;
  std::function<void(int)> scan = [&](int k) {
    if (k == n) {
      nu_L_ = std::max(nu_L_, L_at_scaled(x));
      return;
    }
    for (int v = -box; v <= box; ++v) {
      x[k] = v;
      scan(k + 1);
    }
    x[k] = 0;
  };
  scan(0);
  if (L_at_scaled(Weight{}) != nu_L_) throw std::logic_error("origin is not a special point");
}

int WeightSystem::hyperplane_weight(int r, int k) const {
  if (!is_positive_root(r)) {
    r = negate_root(r);
    k = -k;
  }
  return hyperplane_table_[r][positive_mod(k, level_period_[r])];
}

LabeledAlcove WeightSystem::fundamental_alcove() const {
  LabeledAlcove a;
  for (int i = 1; i <= rank_; ++i) a.vertex[i][i - 1] = denom_ / roots_[highest_].coroot[i - 1];
  return a;
}

std::pair<int, int> WeightSystem::face_hyperplane(const LabeledAlcove& a, int i) const {
  for (int r = 0; r < num_positive_roots(); ++r) {
    bool first = true, same = true;
    int value = 0;
    for (int j = 0; j <= rank_ && same; ++j) {
      if (j == i) continue;
      int p = pairing(a.vertex[j], r);
      if (first) {
        value = p;
        first = false;
      } else if (p != value) {
        same = false;
      }
    }
    if (same && pairing(a.vertex[i], r) != value) {
      if (value % denom_ != 0) throw std::logic_error("face hyperplane at non-integral level");
      return {r, value / denom_};
    }
  }
  throw std::logic_error("no hyperplane supports the face");
}

LabeledAlcove WeightSystem::reflect_face(const LabeledAlcove& a, int i) const {
  auto [r, k] = face_hyperplane(a, i);
  LabeledAlcove out = a;
  int shift = pairing(a.vertex[i], r) - k * denom_;
  out.vertex[i] = a.vertex[i] - shift * roots_[r].omega;
  return out;
}

int WeightSystem::hyperplane_weight_search(int r, int k) const {
  if (!is_positive_root(r)) {
    r = negate_root(r);
    k = -k;
  }
  std::set<LabeledAlcove> seen;
  std::queue<LabeledAlcove> q;
  q.push(fundamental_alcove());
  seen.insert(q.front());
  while (!q.empty()) {
    LabeledAlcove a = q.front();
    q.pop();
    int on = 0, off = -1;
    for (int j = 0; j <= rank_; ++j) {
      if (pairing(a.vertex[j], r) == k * denom_)
        ++on;
      else
        off = j;
    }
    if (on == rank_) return gen_weight_[off];
    for (int i = 0; i <= rank_; ++i) {
      LabeledAlcove b = reflect_face(a, i);
      if (seen.insert(b).second) q.push(b);
    }
    if (seen.size() > 500000) break;
  }
  throw std::runtime_error("hyperplane search did not terminate");
}

int WeightSystem::L_at_scaled(const Weight& scaled) const {
  int total = 0;
  for (int r = 0; r < num_positive_roots(); ++r) {
    int p = pairing(scaled, r);
    if (p % denom_ == 0) total += hyperplane_weight(r, p / denom_);
  }
  return total;
}

std::vector<Weight> WeightSystem::special_points(int bound) const {
  if (bound < 1) throw std::invalid_argument("special_points: bound must be >= 1");
  std::vector<Weight> out;
  Weight x;
  std::function<void(int)> scan = [&](int k) {
    if (k == rank_) {
      if (L_at_scaled(denom_ * x) == nu_L_) out.push_back(x);
      return;
    }
    for (int v = -bound; v <= bound; ++v) {
      x[k] = v;
      scan(k + 1);
    }
    x[k] = 0;
  };
  scan(0);
  return out;
}

bool WeightSystem::in_P(const Weight& lambda) const {
  for (int i = 1; i <= rank_; ++i)
    if (positive_mod(lambda[i - 1], b_[i]) != 0) return false;
  return true;
}

bool WeightSystem::is_dominant(const Weight& lambda) const {
  for (int i = 0; i < rank_; ++i)
    if (lambda[i] < 0) return false;
  return true;
}

bool WeightSystem::is_antidominant(const Weight& lambda) const {
  for (int i = 0; i < rank_; ++i)
    if (lambda[i] > 0) return false;
  return true;
}

std::array<int, kMaxRank> WeightSystem::l_coordinates(const Weight& lambda) const {
  if (!in_P(lambda)) throw std::invalid_argument("weight is not in the L-weight lattice");
  std::array<int, kMaxRank> a{};
  for (int i = 1; i <= rank_; ++i) a[i - 1] = lambda[i - 1] / b_[i];
  return a;
}

Weight WeightSystem::from_l_coordinates(const std::array<int, kMaxRank>& a) const {
  Weight w;
  for (int i = 1; i <= rank_; ++i) w[i - 1] = a[i - 1] * b_[i];
  return w;
}

Weight WeightSystem::nu(const Weight& lambda) const { return -act(lambda, longest_); }

int WeightSystem::nu_on_group(int u) const { return mul_[mul_[longest_][u]][longest_]; }

std::vector<Weight> WeightSystem::orbit(const Weight& lambda) const {
  std::set<Weight> s;
  for (int u = 0; u < w0_order(); ++u) s.insert(act(lambda, u));
  return {s.begin(), s.end()};
}

int WeightSystem::index_P_over_Q() const {
  // det(Cartan) = [P_ordinary : Q]; each b_i = 2 halves it.
  const int n = rank_;
  auto c = [&](int i, int j) { return cartan_[i][j]; };
  int det = 0;
  if (n == 1) det = c(1, 1);
  if (n == 2) det = c(1, 1) * c(2, 2) - c(1, 2) * c(2, 1);
  if (n == 3)
    det = c(1, 1) * (c(2, 2) * c(3, 3) - c(2, 3) * c(3, 2)) -
          c(1, 2) * (c(2, 1) * c(3, 3) - c(2, 3) * c(3, 1)) +
          c(1, 3) * (c(2, 1) * c(3, 2) - c(2, 2) * c(3, 1));
  for (int i = 1; i <= n; ++i) det /= b_[i];
  return std::abs(det);
}

std::string weight_to_string(const Weight& w, int rank) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rank; ++i) os << (i ? "," : "") << w[i];
  os << "]";
  return os.str();
}

}  // namespace affcell
