// Command line front end: kl, cell-factor, cellular-basis, verify, paths.
// Exit codes: 0 success, 1 verification failure, 2 usage, parse or bound error.
#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "affcell/serialize.hpp"

using namespace affcell;

namespace {

struct Options {
  std::string type = "A";
  int rank = 2;
  std::vector<int> params;
  int length_bound = 40;
  std::string output = "json";
  std::uint32_t seed = 1;
};

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

Context make_context(const Options& o) {
  WeightConfig c;
  if (o.type == "A" || o.type == "a")
    c.type = CartanType::A;
  else if (o.type == "C" || o.type == "c")
    c.type = CartanType::C;
  else
    throw UsageError("--type must be A or C");
  c.rank = o.rank;
  c.params = o.params.empty() ? std::vector<int>(o.rank + 1, 1) : o.params;
  return Context::create(c, o.length_bound);
}

void emit(const Options& o, const Json& j, const std::string& text) {
  if (o.output == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("cannot read integer list '" + s + "'");
    }
  }
  return out;
}

int cmd_kl(const Options& o, const std::string& wtext) {
  Context ctx = make_context(o);
  const auto& W = *ctx.group;
  GroupElement w = W.parse(wtext);
  const HeckeElt& c = ctx.hecke->C(w);
  Json j{{"w", W.to_string(w)}, {"length", W.length(w)}, {"C", hecke_json(W, c)}};
  emit(o, j, "C_" + W.to_string(w) + " =\n" + hecke_text(W, c));
  return 0;
}

int cmd_cell_factor(const Options& o, const std::string& wtext) {
  Context ctx = make_context(o);
  const auto& W = *ctx.group;
  GroupElement w = W.parse(wtext);
  if (!ctx.cell->c0_membership(w)) {
    emit(o, Json{{"w", W.to_string(w)}, {"in_c0", false}}, W.to_string(w) + " is not in c_0\n");
    return 0;
  }
  CellFactorization f = ctx.cell->factorize(w);
  Json j{{"w", W.to_string(w)}, {"in_c0", true}, {"factorization", factorization_json(W, f)}};
  emit(o, j,
       W.to_string(w) + " = z p_tau w_0 z'^-1 with z = " + W.to_string(f.z) + ", tau = " +
           weight_to_string(f.tau, W.rank()) + ", z' = " + W.to_string(f.zprime) + "\n");
  return 0;
}

int cmd_cellular_basis(const Options& o, int max_weight, const std::string& extra_tau) {
  Context ctx = make_context(o);
  const auto& W = *ctx.group;
  const auto& ws = W.weights();
  const auto& A = *ctx.cellular;
  const int n = W.rank();
  Json phi = Json::array();
  std::ostringstream text;
  text << "phi(v_z, v_z'):\n";
  for (const auto& z : ctx.cell->B0())
    for (const auto& zp : ctx.cell->B0()) {
      text << "  " << W.to_string(z) << ", " << W.to_string(zp) << ":";
      // phi(v_z, v_z') needs C_w up to l(w) = 2 l(w_0) + l(z) + l(z'), so a small
      // bound leaves some entries out instead of failing the whole table.
      const MonoidAlgebraElt* fp = nullptr;
      try {
        fp = &A.phi_form(z, zp);
      } catch (const BoundExceeded&) {
        phi.push_back({{"z", W.to_string(z)}, {"zprime", W.to_string(zp)}, {"form", nullptr},
                       {"note", "exceeds length bound"}});
        text << " exceeds length bound\n";
        continue;
      }
      const auto& f = *fp;
      phi.push_back({{"z", W.to_string(z)}, {"zprime", W.to_string(zp)}, {"form", monoid_json(n, f)}});
      for (const auto& [t, c] : f.terms()) text << " (" << c.to_string() << ") e^" << weight_to_string(t, n);
      text << "\n";
    }
  // Default weights are limited to those whose C_{p_tau w_0} fits under the bound.
  std::vector<Weight> taus;
  for (const auto& t : ctx.cell->dominant_weights(max_weight))
    if (W.length(W.multiply(W.translation(t), W.w0())) <= o.length_bound) taus.push_back(t);
  if (!extra_tau.empty()) {
    auto a = parse_int_list(extra_tau);
    if (static_cast<int>(a.size()) != n) throw UsageError("--tau needs one L-coordinate per simple root");
    std::array<int, kMaxRank> coords{};
    for (int i = 0; i < n; ++i) coords[i] = a[i];
    Weight t = ws.from_l_coordinates(coords);
    if (std::find(taus.begin(), taus.end(), t) == taus.end()) taus.push_back(t);
  }
  Json dec = Json::array();
  text << "P(tau) C_w0 = sum m_lambda C_{w0 p_lambda}:\n";
  for (const auto& t : taus) {
    auto d = A.decompose_P_tau(t);
    dec.push_back({{"tau", weight_json(t, n)}, {"terms", weight_coeffs_json(n, d)}});
    text << "  tau = " << weight_to_string(t, n) << ":";
    for (const auto& [l, c] : d) text << " " << c.to_string() << " @ " << weight_to_string(l, n);
    text << "\n";
  }
  emit(o, Json{{"setting", ctx.name()}, {"phi", phi}, {"decompositions", dec}}, text.str());
  return 0;
}

int cmd_verify(const Options& o, const std::string& suite) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end())
    throw UsageError("unknown suite '" + suite + "'");
  Context ctx = make_context(o);
  SuiteReport r = run_suite(suite, ctx, o.seed);
  emit(o, report_json(r), report_text(r));
  return r.passed() ? 0 : 1;
}

int cmd_paths(const Options& o, const std::string& mtext, bool witnesses) {
  Context ctx = make_context(o);
  const int n = ctx.group->rank();
  PathCounter pc(ctx.group->weight_system());
  PathType m = mtext.empty() ? PathType{} : parse_int_list(mtext);
  PathProfile p = pc.full_profile(m);
  Json j{{"m", m}, {"profile", path_profile_json(n, p)}};
  std::ostringstream text;
  for (const auto& [g, c] : p) text << weight_to_string(g, n) << ": " << c.str() << "\n";
  if (witnesses) {
    Json wj = Json::array();
    for (const auto& [g, c] : p) {
      Json paths = Json::array();
      for (const auto& path : pc.witnesses(m, g)) {
        Json seq = Json::array();
        text << "  ";
        for (const auto& x : path) {
          seq.push_back(weight_json(x, n));
          text << weight_to_string(x, n) << (&x == &path.back() ? "\n" : " -> ");
        }
        paths.push_back(seq);
      }
      wj.push_back({{"target", weight_json(g, n)}, {"paths", paths}});
    }
    j["witnesses"] = wj;
  }
  emit(o, j, text.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kazhdan-Lusztig computations for affine Hecke algebras with unequal parameters"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  Options o;
  std::string params;
  app.add_option("--type", o.type, "Cartan type, A or C")->capture_default_str();
  app.add_option("--rank", o.rank, "rank")->capture_default_str();
  app.add_option("--params", params, "generator weights L(s_0),...,L(s_n) (default all 1)");
  app.add_option("--length-bound", o.length_bound, "longest KL element computed")->capture_default_str();
  app.add_option("--output", o.output, "json or text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  app.add_option("--seed", o.seed, "seed for randomized sweeps")->capture_default_str();

  std::string w, suite, m, tau;
  int max_weight = 2;
  bool witnesses = false;
  auto* kl = app.add_subcommand("kl", "KL basis element C_w in the standard basis");
  kl->add_option("--w", w, "element, \"pi^k*[i,...]\" or \"{lambda:[..],u:[..]}\"")->required();
  auto* cf = app.add_subcommand("cell-factor", "factor w = z p_tau w_0 z'^-1 in the lowest cell");
  cf->add_option("--w", w, "element")->required();
  auto* cb = app.add_subcommand("cellular-basis", "bilinear form on B_0 and P(tau) C_w0 decompositions");
  cb->add_option("--max-weight", max_weight, "largest L-coordinate sum of tau")->capture_default_str();
  cb->add_option("--tau", tau, "extra tau as L-coordinates, e.g. 2,2");
  auto* vf = app.add_subcommand("verify", "run a verification suite");
  vf->add_option("--suite", suite, "kl-axioms, degree-bounds, lowest-cell, cellular or type-a-paths")->required();
  auto* pa = app.add_subcommand("paths", "type A lattice path profile");
  pa->add_option("--m", m, "step type, e.g. 1,1,2,2");
  pa->add_flag("--witnesses", witnesses, "list every path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (!params.empty()) o.params = parse_int_list(params);
    if (*kl) return cmd_kl(o, w);
    if (*cf) return cmd_cell_factor(o, w);
    if (*cb) return cmd_cellular_basis(o, max_weight, tau);
    if (*vf) return cmd_verify(o, suite);
    if (*pa) return cmd_paths(o, m, witnesses);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
