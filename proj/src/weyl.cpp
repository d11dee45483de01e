#include "affcell/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace affcell {

AffineWeylGroup::AffineWeylGroup(WeightSystemPtr ws) : ws_(std::move(ws)) {
  const int n = ws_->rank();
  gens_.resize(n + 1);
  int a0 = ws_->highest_coroot_root();
  gens_[0] = {ws_->root(a0).omega, ws_->reflection(a0)};
  for (int i = 1; i <= n; ++i) gens_[i] = finite(ws_->simple_reflection(i));
  build_pi();
}

GroupElement AffineWeylGroup::multiply(const GroupElement& a, const GroupElement& b) const {
  return {ws_->act(a.lambda, b.u) + b.lambda, ws_->finite_mul(a.u, b.u)};
}

GroupElement AffineWeylGroup::inverse(const GroupElement& a) const {
  int ui = ws_->finite_inverse(a.u);
  return {-ws_->act(a.lambda, ui), ui};
}

GroupElement AffineWeylGroup::translation(const Weight& lambda) const {
  if (!ws_->in_P(lambda))
    throw std::invalid_argument("translation: weight " + weight_to_string(lambda, rank()) +
                                " is not in P");
  return {lambda, 0};
}

int AffineWeylGroup::alcove_floor(const GroupElement& g, int r) const {
  return ws_->pairing(g.lambda, r) - (ws_->sends_negative(g.u, r) ? 1 : 0);
}

int AffineWeylGroup::length(const GroupElement& g) const {
  int total = 0;
  for (int r = 0; r < ws_->num_positive_roots(); ++r) total += std::abs(alcove_floor(g, r));
  return total;
}

int AffineWeylGroup::weight_length(const GroupElement& g) const {
  int total = 0;
  for (int r = 0; r < ws_->num_positive_roots(); ++r) {
    int k = alcove_floor(g, r);
    for (int m = 1; m <= k; ++m) total += ws_->hyperplane_weight(r, m);
    for (int m = k + 1; m <= 0; ++m) total += ws_->hyperplane_weight(r, m);
  }
  return total;
}

bool AffineWeylGroup::descent(const GroupElement& g, int i, Side side) const {
  GroupElement h = side == Side::Right ? multiply(g, gens_[i]) : multiply(gens_[i], g);
  return length(h) < length(g);
}

void AffineWeylGroup::build_pi() {
  const WeightSystem& ws = *ws_;
  const int n = ws.rank();
  std::vector<GroupElement> zero;
  for (int u = 0; u < ws.w0_order(); ++u) {
    GroupElement g;
    g.u = u;
    for (int i = 1; i <= n; ++i) g.lambda[i - 1] = ws.sends_negative(u, ws.simple_root_index(i)) ? 1 : 0;
    if (ws.in_P(g.lambda) && length(g) == 0) zero.push_back(g);
  }
  auto order = [&](const GroupElement& g) {
    int k = 1;
    for (GroupElement h = g; h != identity(); h = multiply(h, g)) ++k;
    return k;
  };
  GroupElement best = identity();
  int best_order = 1;
  for (const GroupElement& g : zero) {
    int k = order(g);
    if (k > best_order || (k == best_order && g.lambda > best.lambda)) {
      best = g;
      best_order = k;
    }
  }
  if (best_order != static_cast<int>(zero.size()))
    throw std::logic_error("length zero subgroup is not cyclic");
  pi_elems_.clear();
  GroupElement h = identity();
  for (int k = 0; k < best_order; ++k) {
    pi_lookup_[h] = k;
    pi_elems_.push_back(h);
    h = multiply(h, best);
  }
  pi_perm_.assign(best_order, std::vector<int>(n + 1, -1));
  for (int k = 0; k < best_order; ++k)
    for (int i = 0; i <= n; ++i) {
      GroupElement c = multiply(multiply(pi_elems_[k], gens_[i]), inverse(pi_elems_[k]));
      for (int j = 0; j <= n; ++j)
        if (gens_[j] == c) pi_perm_[k][i] = j;
      if (pi_perm_[k][i] < 0) throw std::logic_error("Pi does not permute the generators");
    }
}

GroupElement AffineWeylGroup::pi(int k) const {
  int m = pi_order();
  return pi_elems_[((k % m) + m) % m];
}

int AffineWeylGroup::pi_permute(int k, int i) const {
  int m = pi_order();
  return pi_perm_[((k % m) + m) % m][i];
}

int AffineWeylGroup::pi_index(const GroupElement& g) const { return reduced_word(g).pi; }

ReducedWord AffineWeylGroup::reduced_word(const GroupElement& g) const {
  ReducedWord w;
  GroupElement h = g;
  int len = length(h);
  while (len > 0) {
    bool found = false;
    for (int i = 0; i < num_generators() && !found; ++i) {
      GroupElement next = multiply(h, gens_[i]);
      int l = length(next);
      if (l < len) {
        w.letters.push_back(i);
        h = next;
        len = l;
        found = true;
      }
    }
    if (!found) throw std::logic_error("element of positive length without right descent");
  }
  std::reverse(w.letters.begin(), w.letters.end());
  auto it = pi_lookup_.find(h);
  if (it == pi_lookup_.end()) throw std::logic_error("length zero element outside Pi");
  w.pi = it->second;
  return w;
}

GroupElement AffineWeylGroup::from_word(const ReducedWord& w) const {
  GroupElement g = pi(w.pi);
  for (int i : w.letters) {
    if (i < 0 || i >= num_generators()) throw std::invalid_argument("generator index out of range");
    g = multiply(g, gens_[i]);
  }
  return g;
}

bool AffineWeylGroup::bruhat_leq(const GroupElement& x0, const GroupElement& y0) const {
  GroupElement x = x0, y = y0;
  int lx = length(x), ly = length(y);
  while (true) {
    if (lx > ly) return false;
    if (ly == 0) return x == y;
    // Lifting property along the smallest right descent s of y.
    for (int i = 0; i < num_generators(); ++i) {
      GroupElement ys = multiply(y, gens_[i]);
      if (length(ys) >= ly) continue;
      GroupElement xs = multiply(x, gens_[i]);
      int lxs = length(xs);
      if (lxs < lx) {
        x = xs;
        lx = lxs;
      }
      y = ys;
      --ly;
      break;
    }
  }
}

std::vector<GroupElement> AffineWeylGroup::lower_interval(const GroupElement& y) const {
  ReducedWord w = reduced_word(y);
  std::set<GroupElement> s{pi(w.pi)};
  for (int i : w.letters) {
    std::vector<GroupElement> add;
    add.reserve(s.size());
    for (const GroupElement& x : s) add.push_back(multiply(x, gens_[i]));
    s.insert(add.begin(), add.end());
  }
  std::vector<GroupElement> out(s.begin(), s.end());
  sort_shortlex(out);
  return out;
}

std::vector<GroupElement> AffineWeylGroup::enumerate(int bound) const {
  std::vector<GroupElement> out;
  if (bound < 0) return out;
  std::set<GroupElement> level(pi_elems_.begin(), pi_elems_.end());
  for (int len = 0; len <= bound; ++len) {
    out.insert(out.end(), level.begin(), level.end());
    if (len == bound) break;
    std::set<GroupElement> next;
    for (const GroupElement& g : level)
      for (int i = 0; i < num_generators(); ++i) {
        GroupElement h = multiply(g, gens_[i]);
        if (length(h) == len + 1) next.insert(h);
      }
    level = std::move(next);
  }
  sort_shortlex(out);
  return out;
}

namespace {

struct ShortlexKey {
  int length;
  std::vector<int> letters;
  int pi;
  friend auto operator<=>(const ShortlexKey&, const ShortlexKey&) = default;
};

}  // namespace

bool AffineWeylGroup::shortlex_less(const GroupElement& a, const GroupElement& b) const {
  ReducedWord wa = reduced_word(a), wb = reduced_word(b);
  ShortlexKey ka{static_cast<int>(wa.letters.size()), wa.letters, wa.pi};
  ShortlexKey kb{static_cast<int>(wb.letters.size()), wb.letters, wb.pi};
  return ka < kb;
}

void AffineWeylGroup::sort_shortlex(std::vector<GroupElement>& v) const {
  std::vector<std::pair<ShortlexKey, GroupElement>> keyed;
  keyed.reserve(v.size());
  for (const GroupElement& g : v) {
    ReducedWord w = reduced_word(g);
    int len = static_cast<int>(w.letters.size());
    keyed.push_back({ShortlexKey{len, std::move(w.letters), w.pi}, g});
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = keyed[i].second;
}

LabeledAlcove AffineWeylGroup::alcove(const GroupElement& g) const {
  LabeledAlcove a = ws_->fundamental_alcove();
  const int d = ws_->denominator();
  for (int j = 0; j <= rank(); ++j) a.vertex[j] = ws_->act(a.vertex[j], g.u) + d * g.lambda;
  return a;
}

LabeledAlcove AffineWeylGroup::alcove_walk(const ReducedWord& w) const {
  LabeledAlcove a = ws_->fundamental_alcove();
  // A_0 s_{i_1} ... s_{i_m} crosses the face of type i_m first.
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    if (*it < 0 || *it >= num_generators()) throw std::invalid_argument("generator index out of range");
    a = ws_->reflect_face(a, *it);
  }
  if (w.pi % pi_order() == 0) return a;
  // pi^k maps the vertex labelled j of A_0 onto the one labelled perm[j].
  LabeledAlcove a0 = ws_->fundamental_alcove();
  LabeledAlcove moved = alcove(pi(w.pi));
  LabeledAlcove out;
  for (int j = 0; j <= rank(); ++j)
    for (int k = 0; k <= rank(); ++k)
      if (moved.vertex[j] == a0.vertex[k]) out.vertex[j] = a.vertex[k];
  return out;
}

std::set<std::pair<int, int>> AffineWeylGroup::separating_hyperplanes(const GroupElement& a,
                                                                      const GroupElement& b) const {
  std::set<std::pair<int, int>> out;
  for (int r = 0; r < ws_->num_positive_roots(); ++r) {
    int ka = alcove_floor(a, r), kb = alcove_floor(b, r);
    for (int m = std::min(ka, kb) + 1; m <= std::max(ka, kb); ++m) out.insert({r, m});
  }
  return out;
}

std::string AffineWeylGroup::to_string(const GroupElement& g) const {
  ReducedWord w = reduced_word(g);
  std::ostringstream os;
  if (w.pi != 0) os << "pi^" << w.pi << "*";
  os << "[";
  for (std::size_t i = 0; i < w.letters.size(); ++i) os << (i ? "," : "") << w.letters[i];
  os << "]";
  return os.str();
}

namespace {

std::vector<int> parse_int_list(const std::string& s, std::size_t& pos) {
  if (pos >= s.size() || s[pos] != '[') throw std::invalid_argument("expected '[' in element");
  ++pos;
  std::vector<int> out;
  std::string tok;
  for (; pos < s.size() && s[pos] != ']'; ++pos) {
    if (s[pos] == ',') {
      if (tok.empty()) throw std::invalid_argument("empty entry in list");
      out.push_back(std::stoi(tok));
      tok.clear();
    } else if (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '-') {
      tok += s[pos];
    } else {
      throw std::invalid_argument(std::string("unexpected character '") + s[pos] + "' in list");
    }
  }
  if (pos >= s.size()) throw std::invalid_argument("unterminated list");
  ++pos;
  if (!tok.empty()) out.push_back(std::stoi(tok));
  return out;
}

}  // namespace

GroupElement AffineWeylGroup::parse(const std::string& text) const {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '"') s += c;
  std::size_t pos = 0;
  if (!s.empty() && s[0] == '{') {
    Weight lambda;
    std::vector<int> u;
    bool have_lambda = false;
    pos = 1;
    while (pos < s.size() && s[pos] != '}') {
      std::size_t colon = s.find(':', pos);
      if (colon == std::string::npos) throw std::invalid_argument("expected key:value in element");
      std::string key = s.substr(pos, colon - pos);
      pos = colon + 1;
      std::vector<int> vals = parse_int_list(s, pos);
      if (key == "lambda") {
        if (static_cast<int>(vals.size()) != rank()) throw std::invalid_argument("lambda has wrong rank");
        for (int i = 0; i < rank(); ++i) lambda[i] = vals[i];
        have_lambda = true;
      } else if (key == "u") {
        u = vals;
      } else {
        throw std::invalid_argument("unknown key '" + key + "' in element");
      }
      if (pos < s.size() && s[pos] == ',') ++pos;
    }
    if (pos >= s.size() || !have_lambda) throw std::invalid_argument("malformed normal form element");
    if (!ws_->in_P(lambda)) throw std::invalid_argument("lambda is not in P");
    return {lambda, ws_->finite_from_word(u)};
  }
  ReducedWord w;
  if (s.rfind("pi^", 0) == 0) {
    std::size_t star = s.find('*');
    if (star == std::string::npos) throw std::invalid_argument("expected '*' after pi exponent");
    std::string e = s.substr(3, star - 3);
    if (e.empty() || e.find_first_not_of("-0123456789") != std::string::npos)
      throw std::invalid_argument("bad pi exponent");
    w.pi = std::stoi(e);
    pos = star + 1;
  }
  w.letters = parse_int_list(s, pos);
  if (pos != s.size()) throw std::invalid_argument("trailing characters after element");
  return from_word(w);
}

}  // namespace affcell
