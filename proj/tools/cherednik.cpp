// Command-line front end.  Exit codes: 0 ok, 1 internal error or failed
// verification, 2 usage, 3 precondition violation, 4 resource cap.

#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cherednik/cherednik.hpp"
#include "cherednik/io.hpp"
#include "cherednik/verify.hpp"

namespace {

using namespace cherednik;
using nlohmann::json;

constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitCap = 4;

/// Raw flag values of one subcommand before validation.
struct Session {
  int l = 1;
  int n = 1;
  std::string kappa = "symbolic";
  std::vector<int> s;
  std::vector<std::string> m;
  std::string lambda;
  std::string config;
  std::string format = "text";
  long long cap = kDefaultEnumerationCap;

  std::map<std::string, CLI::Option*> opts;

  bool given(const std::string& key) const {
    auto it = opts.find(key);
    return it != opts.end() && it->second->count() > 0;
  }

  /// Fills every parameter not given on the command line from --config.
  void merge_config() {
    if (config.empty()) return;
    std::ifstream in(config);
    if (!in) throw PreconditionError("cannot open config file " + config);
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw PreconditionError(std::string("config file is not valid JSON: ") + e.what());
    }
    if (j.contains("l") && !given("l")) l = j["l"].get<int>();
    if (j.contains("n") && !given("n")) n = j["n"].get<int>();
    if (j.contains("kappa") && !given("kappa"))
      kappa = j["kappa"].is_string() ? j["kappa"].get<std::string>() : j["kappa"].dump();
    if (j.contains("s") && !given("s")) s = j["s"].get<std::vector<int>>();
    if (j.contains("m") && !given("m")) {
      m.clear();
      for (const auto& x : j["m"]) m.push_back(x.is_string() ? x.get<std::string>() : x.dump());
    }
    if (j.contains("lambda") && !given("lambda")) lambda = j["lambda"].get<std::string>();
    if (j.contains("format") && !given("format")) format = j["format"].get<std::string>();
  }

  std::vector<int> charge() const {
    if (s.empty()) return std::vector<int>(static_cast<std::size_t>(l), 0);
    if (static_cast<int>(s.size()) != l) throw PreconditionError("charge s must have length l");
    return s;
  }

  ParamKS param() const {
    ParamKS p = make_param(l, n, io::parse_kappa(kappa, l), charge());
    if (!m.empty()) {
      std::vector<Rational> mv;
      for (const auto& x : m) mv.push_back(parse_rational(x));
      p.m = mv;
    }
    p.validate();
    return p;
  }

  Multipartition multipartition() const {
    if (lambda.empty()) throw PreconditionError("--lambda is required");
    Multipartition lam = Multipartition::parse(lambda);
    if (lam.level() != l) throw PreconditionError("multipartition level differs from l");
    return lam;
  }

  bool json_out() const { return format == "json"; }
};

void add_common(CLI::App* app, Session& S, bool with_lambda) {
  S.opts["l"] = app->add_option("-l,--level", S.l, "level l")->check(CLI::PositiveNumber);
  S.opts["n"] = app->add_option("-n,--size", S.n, "degree n")->check(CLI::NonNegativeNumber);
  S.opts["kappa"] = app->add_option("--kappa", S.kappa, "symbolic or a scalar such as 1/2");
  S.opts["s"] = app->add_option("-s,--charge", S.s, "charge, comma separated")->delimiter(',');
  S.opts["m"] = app->add_option("--m", S.m, "kappa^{-1} offsets m, comma separated")->delimiter(',');
  if (with_lambda) S.opts["lambda"] = app->add_option("--lambda", S.lambda, "multipartition, e.g. [[2,1],[1]]");
  app->add_option("--config", S.config, "JSON parameter file; flags take precedence");
  S.opts["format"] = app->add_option("--format", S.format, "text, json or csv")
                         ->check(CLI::IsMember({"text", "json", "csv"}));
  app->add_option("--cap", S.cap, "enumeration size limit");
}

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

// ---------------------------------------------------------------------------

int cmd_enumerate(const Session& S) {
  const auto P = enumerate_multipartitions(S.n, S.l, S.cap);
  if (S.json_out()) {
    json out = json::array();
    for (const auto& x : P) out.push_back(x.to_string());
    print_json(out);
  } else {
    for (const auto& x : P) std::cout << x << '\n';
  }
  return 0;
}

int cmd_classify(const Session& S, const std::string& check, const Session& other) {
  const ParamKS p = S.param();
  if (check == "spherical") {
    std::cout << is_spherical(p).to_string() << '\n';
  } else if (check == "faithful") {
    std::cout << (is_faithful(p) ? "faithful" : "not faithful") << '\n';
  } else if (check == "integral-difference") {
    if (other.s.empty()) throw PreconditionError("integral-difference needs --s2");
    Session o = S;
    o.kappa = other.kappa;
    o.s = other.s;
    std::cout << (integral_difference(p, o.param()) ? "integral difference" : "no integral difference") << '\n';
  } else if (check == "classes") {
    if (!p.m) throw PreconditionError("classes need --m");
    const auto cls = param_classes(p.kappa, stilde_of(p.s, *p.m));
    for (const auto& c : cls.classes) {
      for (std::size_t k = 0; k < c.size(); ++k) std::cout << (k ? " " : "") << c[k];
      std::cout << '\n';
    }
  } else if (check == "hecke") {
    const auto d = hecke_params(p);
    std::cout << "q " << d.q << '\n';
    for (std::size_t i = 0; i < d.Q.size(); ++i) std::cout << "Q_" << i + 1 << ' ' << d.Q[i] << '\n';
    std::cout << "s*";
    for (const auto& x : d.s_star) std::cout << ' ' << x;
    std::cout << '\n';
  } else if (check == "star") {
    const auto ss = star_params(p.s);
    for (std::size_t k = 0; k < ss.size(); ++k) std::cout << (k ? "," : "") << ss[k];
    std::cout << '\n';
  } else if (check == "dominant") {
    if (!p.m) throw PreconditionError("dominant reduction needs --m");
    const auto [w, wm] = dominant_reduce(*p.m);
    std::cout << "w";
    for (int x : w) std::cout << ' ' << x + 1;
    std::cout << "\nw(m)";
    for (const auto& x : wm) std::cout << ' ' << x;
    std::cout << '\n';
  }
  return 0;
}

int cmd_cfun(const Session& S) {
  const ParamKS p = S.param();
  const auto lam = S.multipartition();
  if (S.json_out()) {
    print_json({{"c", c_function(lam, p).to_string()}, {"c_hat", c_hat(lam, p).to_string()}});
  } else {
    std::cout << "c " << c_function(lam, p) << "\nc_hat " << c_hat(lam, p) << '\n';
  }
  return 0;
}

int cmd_fakedeg(const Session& S) {
  const auto tau = S.multipartition();
  const QPoly f = fake_degree(tau);
  if (S.json_out())
    print_json({{"tau", tau.to_string()}, {"f_tau_star", f.to_string('q')}, {"fd", fd(tau)}});
  else
    std::cout << "f " << f.to_string('q') << "\nfd " << fd(tau) << '\n';
  return 0;
}

std::string character_text(const GradedCharacter& g) {
  std::ostringstream os;
  for (const auto& t : g.terms) {
    os << "q^(" << t.gamma << ") * (" << t.num.to_string('q') << ") /";
    if (t.den.empty()) os << " 1";
    for (int d : t.den) os << " (1-q^" << d << ")";
    os << '\n';
  }
  return os.str();
}

int cmd_char(const Session& S, const std::string& kind) {
  const ParamKS p = S.param();
  const auto lam = S.multipartition();
  const GradedCharacter g = kind == "sph" ? chsph_delta(lam, p) : chhat_delta(lam, p);
  if (S.json_out())
    print_json(io::to_json(g));
  else
    std::cout << character_text(g);
  return 0;
}

void print_matrix(const Session& S, const KMatrix& M) {
  if (S.format == "csv" || S.format == "text") {
    std::cout << M.to_csv();
    return;
  }
  json rows = json::array(), cols = json::array(), entries = json::array();
  for (const auto& r : M.rows) rows.push_back(r.to_string());
  for (const auto& c : M.cols) cols.push_back(c.to_string());
  for (const auto& r : M.entries) {
    json row = json::array();
    for (const auto& e : r) row.push_back(e.get_str());
    entries.push_back(row);
  }
  print_json({{"rows", rows}, {"cols", cols}, {"entries", entries}});
}

int cmd_kgroup(const Session& S, const std::string& op) {
  if (op == "res") {
    if (S.n < 1) throw PreconditionError("restriction needs n >= 1");
    print_matrix(S, res_matrix(S.n, S.l, S.cap));
  } else if (op == "ind") {
    print_matrix(S, ind_matrix(S.n, S.l, S.cap));
  } else if (op == "injectivity") {
    const ParamKS p = S.param();
    const auto rep = joint_injectivity(S.n, S.l, p, S.cap);
    std::cout << (rep.injective ? "injective" : "not injective") << " rank " << rep.rank << " of "
              << rep.dimension << '\n';
    if (rep.kernel_vector) {
      std::cout << "kernel";
      for (std::size_t k = 0; k < rep.basis.size(); ++k)
        if ((*rep.kernel_vector)[k] != 0) std::cout << ' ' << (*rep.kernel_vector)[k].get_str() << '*' << rep.basis[k];
      std::cout << '\n';
    }
  } else if (op == "recover") {
    const auto lam = S.multipartition();
    const auto rem = removals(lam);
    std::cout << recover_from_removals(std::set<Multipartition>(rem.begin(), rem.end())) << '\n';
  }
  return 0;
}

int cmd_crystal(const Session& S, const std::string& op, const std::optional<int>& i) {
  const auto s = S.charge();
  if (op == "operators") {
    const auto lam = S.multipartition();
    if (!i) throw PreconditionError("crystal operators need -i");
    const auto st = crystal(lam, s, *i);
    if (S.json_out()) {
      print_json({{"signature", signature_string(signature(lam, s, *i))},
                  {"reduced", signature_string(reduced_signature(lam, s, *i))},
                  {"eps", st.eps},
                  {"phi", st.phi},
                  {"e", st.e ? json(st.e->to_string()) : json(nullptr)},
                  {"f", st.f ? json(st.f->to_string()) : json(nullptr)}});
    } else {
      std::cout << "signature " << signature_string(signature(lam, s, *i)) << "\nreduced "
                << signature_string(reduced_signature(lam, s, *i)) << "\neps " << st.eps << "\nphi " << st.phi
                << "\ne " << (st.e ? st.e->to_string() : "none") << "\nf " << (st.f ? st.f->to_string() : "none")
                << '\n';
    }
  } else if (op == "graph") {
    const auto g = crystal_graph(S.n, s, S.cap);
    if (S.json_out()) {
      print_json(io::to_json(g));
    } else {
      for (const auto& e : g.edges) std::cout << e.from << " -" << e.i << "-> " << e.to << '\n';
    }
  } else if (op == "singular") {
    for (const auto& lam : singular_vertices(S.n, s, S.cap)) std::cout << lam << '\n';
  } else if (op == "support") {
    const auto lam = S.multipartition();
    const SupportLabel sup = support_of(lam, S.param());
    std::cout << "N " << sup.m << "\nsupport " << sup.to_string() << '\n';
  } else if (op == "finite-dim") {
    for (const auto& lam : finite_dim_labels(S.n, S.param(), S.cap)) std::cout << lam << '\n';
  }
  return 0;
}

int cmd_fock(const Session& S, const std::string& op, const std::string& gen, const std::optional<int>& i) {
  const FockSpace fs(S.l, S.charge());
  if (op == "apply") {
    if (!i) throw PreconditionError("fock apply needs -i");
    const FockVector x = basis_vector(S.multipartition());
    const FockVector y = gen == "E" ? fs.E(*i, x) : gen == "F" ? fs.F(*i, x) : fs.K(*i, x, gen == "Kinv" ? -1 : 1);
    if (S.json_out())
      print_json(io::to_json(y));
    else
      std::cout << to_string(y) << '\n';
  } else if (op == "matrix") {
    if (!i) throw PreconditionError("fock matrix needs -i");
    std::cout << io::to_triplets(operator_triplets(fs, gen.front(), *i, S.n));
  } else if (op == "relations") {
    const auto rep = verify_relations(fs, S.n, fs.residue_window(S.n));
    std::cout << (rep.ok ? "ok" : "FAIL " + rep.first_violation) << " (" << rep.checks << " checks)\n";
    return rep.ok ? 0 : kExitInternal;
  } else if (op == "singular-dim") {
    std::cout << singular_space_dim(fs, S.n, S.cap) << '\n';
  }
  return 0;
}

int cmd_dmatrix(const Session& S, bool nontrivial_only) {
  const DMatrix d = d_matrix(S.n, S.charge(), S.cap);
  if (S.json_out()) {
    json out = json::array();
    for (const auto& b : d.blocks)
      if (!nontrivial_only || b.block.size() > 1) out.push_back(io::to_json(b));
    print_json(out);
    return 0;
  }
  for (const auto& b : d.blocks) {
    if (nontrivial_only && b.block.size() == 1) continue;
    std::cout << "block";
    for (const auto& x : b.block) std::cout << ' ' << x;
    std::cout << '\n';
    for (const auto& lam : b.block)
      for (const auto& mu : b.block)
        if (const VPoly x = b.at(mu, lam); !x.is_zero())
          std::cout << "  d " << mu << ' ' << lam << ' ' << x.to_string('v') << '\n';
  }
  return 0;
}

int cmd_radical(const Session& S) {
  const auto table = radical_table(d_matrix(S.n, S.charge(), S.cap));
  if (S.json_out()) {
    json out = json::array();
    for (const auto& e : table)
      out.push_back({{"lambda_star", e.lambda_star.to_string()},
                     {"mu_star", e.mu_star.to_string()},
                     {"layer", e.layer},
                     {"multiplicity", e.multiplicity.get_str()}});
    print_json(out);
  } else {
    for (const auto& e : table)
      std::cout << e.lambda_star << ' ' << e.mu_star << ' ' << e.layer << ' ' << e.multiplicity << '\n';
  }
  return 0;
}

int cmd_gram(const Session& S, const std::string& q) {
  const auto g = gram_singular(S.n, S.charge(), parse_rational(q), S.cap);
  if (S.json_out()) {
    json labels = json::array(), gram = json::array();
    for (const auto& x : g.labels) labels.push_back(x.to_string());
    for (const auto& row : g.gram_v) {
      json r = json::array();
      for (const auto& x : row) r.push_back(x.to_string('v'));
      gram.push_back(r);
    }
    print_json({{"labels", labels}, {"gram", gram}, {"determinant", g.determinant.get_str()}});
  } else {
    std::cout << "labels";
    for (const auto& x : g.labels) std::cout << ' ' << x;
    std::cout << "\ndeterminant " << g.determinant << '\n';
  }
  return 0;
}

int cmd_tableau(const Session& S, const std::optional<int>& shape_m) {
  const auto s = S.charge();
  TauShape::require_strictly_decreasing_charge(s);
  const auto lam = S.multipartition();
  const Tableau A = tableau_of(lam, s, shape_m.value_or(minimal_shape_m(s, lam.size())));
  const auto w = weight_tau(A);
  if (S.json_out()) {
    json j = io::to_json(A);
    j["tau"] = w;
    print_json(j);
  } else {
    for (std::size_t j = 0; j < A.cols.size(); ++j) {
      std::cout << "col " << j + 1 << ':';
      for (int x : A.cols[j]) std::cout << ' ' << x;
      std::cout << '\n';
    }
    std::cout << "tau";
    for (int x : w) std::cout << ' ' << x;
    std::cout << '\n';
  }
  return 0;
}

int cmd_labels(const Session& S, const std::optional<int>& shape_m) {
  const auto lam = S.multipartition();
  ParamKS p = S.param();
  p.n = lam.size();
  const auto u = upsilon_labels(lam, p, shape_m);
  json m = json::array();
  for (const auto& x : u.m) m.push_back(x.get_str());
  const json out{{"cherednik", {{"kappa", u.kappa.to_string()}, {"s", u.s_star}, {"m", m}, {"label", u.lambda_star.to_string()}}},
                 {"parabolic", io::to_json(u.parabolic)},
                 {"functor_index", "i -> -i"}};
  if (S.json_out()) {
    print_json(out);
  } else {
    std::cout << "cherednik label " << u.lambda_star << " at s*";
    for (int x : u.s_star) std::cout << ' ' << x;
    std::cout << "\nparabolic columns";
    for (const auto& c : u.parabolic.cols) {
      std::cout << " [";
      for (std::size_t k = 0; k < c.size(); ++k) std::cout << (k ? "," : "") << c[k];
      std::cout << ']';
    }
    std::cout << "\nfunctor index i -> -i\n";
  }
  return 0;
}

int cmd_verify(const std::string& suite, int max_n, std::uint64_t seed) {
  VerifyOptions o;
  o.max_n = max_n;
  o.seed = seed;
  bool ok = true;
  for (const auto& r : run_suites(suite, o)) {
    std::cout << (r.ok ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
    ok = ok && r.ok;
  }
  return ok ? 0 : kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact combinatorics for cyclotomic Cherednik parameters, Fock spaces and d-matrices"};
  app.require_subcommand(1);

  // one Session per subcommand keeps option counts separate
  std::map<std::string, Session> sessions;
  auto sub = [&](const std::string& name, const std::string& help, bool with_lambda) {
    CLI::App* a = app.add_subcommand(name, help);
    add_common(a, sessions[name], with_lambda);
    return a;
  };

  CLI::App* enumerate = sub("enumerate", "list P_l(n) in canonical order", false);

  CLI::App* classify = sub("classify-params", "parameter predicates", false);
  std::string check = "spherical";
  Session other;
  classify->add_option("--check", check)
      ->check(CLI::IsMember({"spherical", "faithful", "integral-difference", "classes", "hecke", "star", "dominant"}));
  classify->add_option("--kappa2", other.kappa, "second kappa for integral-difference");
  classify->add_option("--s2", other.s, "second charge for integral-difference")->delimiter(',');

  CLI::App* cfun = sub("cfun", "c-function and c-hat", true);
  CLI::App* fakedeg = sub("fakedeg", "fake degree f_{tau*} and fd", true);
  CLI::App* chr = sub("char", "graded character of a standard module", true);
  std::string kind = "hat";
  chr->add_option("--kind", kind)->check(CLI::IsMember({"hat", "sph"}));

  CLI::App* kgroup = sub("kgroup", "Grothendieck group maps", true);
  std::string kop = "res";
  kgroup->add_option("--op", kop)->check(CLI::IsMember({"res", "ind", "injectivity", "recover"}));

  CLI::App* crys = sub("crystal", "crystal operators and singular vertices", true);
  std::string cop = "operators";
  std::optional<int> residue_i;
  crys->add_option("--op", cop)->check(CLI::IsMember({"operators", "graph", "singular", "support", "finite-dim"}));
  crys->add_option("-i", residue_i, "residue");

  CLI::App* fock = sub("fock", "quantum group action on the Fock space", true);
  std::string fop = "apply", gen = "F";
  std::optional<int> fock_i;
  fock->add_option("--op", fop)->check(CLI::IsMember({"apply", "matrix", "relations", "singular-dim"}));
  fock->add_option("--gen", gen)->check(CLI::IsMember({"E", "F", "K", "Kinv"}));
  fock->add_option("-i", fock_i, "residue");

  CLI::App* dm = sub("dmatrix", "graded decomposition numbers d_{mu,lambda}(v)", false);
  bool nontrivial = false;
  dm->add_flag("--nontrivial", nontrivial, "only blocks with more than one element");
  CLI::App* radical = sub("radical", "radical filtration multiplicities", false);
  CLI::App* gram = sub("gram", "Gram determinant on the singular subspace", false);
  std::string q = "2";
  gram->add_option("--q", q, "nonzero rational specialization of v");

  CLI::App* tableau = sub("tableau", "tau-tableau A_lambda and tau(A)", true);
  std::optional<int> shape_m;
  tableau->add_option("--shape-m", shape_m, "m in d_j = m + s_j - s_1");
  CLI::App* labels = sub("labels", "label transport to parabolic category O", true);
  labels->add_option("--shape-m", shape_m, "m in d_j = m + s_j - s_1");

  CLI::App* verify = app.add_subcommand("verify", "run invariant suites");
  std::string suite = "all";
  int max_n = 4;
  std::uint64_t seed = 0;
  verify->add_option("--suite", suite);
  verify->add_option("--max-n", max_n)->check(CLI::Range(0, 8));
  verify->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    for (auto& [name, S] : sessions) S.merge_config();
    if (enumerate->parsed()) return cmd_enumerate(sessions["enumerate"]);
    if (classify->parsed()) return cmd_classify(sessions["classify-params"], check, other);
    if (cfun->parsed()) return cmd_cfun(sessions["cfun"]);
    if (fakedeg->parsed()) return cmd_fakedeg(sessions["fakedeg"]);
    if (chr->parsed()) return cmd_char(sessions["char"], kind);
    if (kgroup->parsed()) return cmd_kgroup(sessions["kgroup"], kop);
    if (crys->parsed()) return cmd_crystal(sessions["crystal"], cop, residue_i);
    if (fock->parsed()) return cmd_fock(sessions["fock"], fop, gen, fock_i);
    if (dm->parsed()) return cmd_dmatrix(sessions["dmatrix"], nontrivial);
    if (radical->parsed()) return cmd_radical(sessions["radical"]);
    if (gram->parsed()) return cmd_gram(sessions["gram"], q);
    if (tableau->parsed()) return cmd_tableau(sessions["tableau"], shape_m);
    if (labels->parsed()) return cmd_labels(sessions["labels"], shape_m);
    if (verify->parsed()) return cmd_verify(suite, max_n, seed);
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceCapError& e) {
    std::cerr << "resource cap: " << e.what() << '\n';
    return kExitCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}
