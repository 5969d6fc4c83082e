#include "gia/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "gia/cocycles.hpp"
#include "gia/errors.hpp"
#include "gia/matinv.hpp"
#include "gia/oracle.hpp"
#include "gia/realization.hpp"
#include "gia/twisted.hpp"
#include "gia/utn.hpp"

#ifndef GIA_DATA_DIR
#define GIA_DATA_DIR "data"
#endif

namespace gia {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

struct Report {
  Json doc = Json{{"schema", 1}};
  std::vector<std::string> lines;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, 0, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string resolve(const std::string& path, const std::string& base_dir) {
  fs::path p(path);
  if (p.is_absolute() || base_dir.empty()) return path;
  return (fs::path(base_dir) / p).string();
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

Group load_group(const std::string& spec, const std::string& base_dir = "") {
  if (ends_with(spec, ".cayley")) return Group::load_cayley(resolve(spec, base_dir));
  return Group::parse_literal(spec);
}

void require_same_group(const Group& expected, const Cocycle& s, const std::string& source) {
  if (!(expected == s.group))
    throw ParseError(source, 1, "cocycle group " + s.group.name() + " does not match --group " + expected.name());
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) out.push_back(part);
  return out;
}

Json table_json(const std::vector<std::int64_t>& v) { return Json(v); }

std::string exponents_str(const std::vector<std::int64_t>& v) {
  std::vector<std::string> parts;
  for (auto x : v) parts.push_back(std::to_string(x));
  return join(parts, " ");
}

Json cyc_matrix_json(const CycMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

Json dmatrix_json(const DMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.k(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.k(); ++j) row.push_back(element_str(m.algebra(), m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Json ut_json(const UTMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.n(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.n(); ++j) row.push_back(m(i, j).get_str());
    rows.push_back(row);
  }
  return rows;
}

// ---- h2, cocycle, twisted, realize

int cmd_h2(Report& r, const std::string& group, std::int64_t mu) {
  if (mu < 1) throw DomainError("--mu must be positive");
  Group T = load_group(group);
  auto classes = cohomology_classes(T, mu);
  r.lines.push_back("classes=" + std::to_string(classes.size()));
  r.doc["group"] = T.name();
  r.doc["N"] = mu;
  r.doc["classes"] = classes.size();
  Json reps = Json::array();
  for (const auto& c : classes) reps.push_back(table_json(c.table));
  r.doc["representatives"] = reps;
  return 0;
}

int cmd_cocycle_verify(Report& r, const std::string& path) {
  Cocycle s = load_cocycle(path);
  r.doc["group"] = s.group.name();
  r.doc["N"] = s.N;
  if (auto v = cocycle_violation(s)) {
    const Group& T = s.group;
    std::string triple = T.element_name((*v)[0]) + "," + T.element_name((*v)[1]) + "," + T.element_name((*v)[2]);
    r.lines.push_back("cocycle=false violation=(" + triple + ")");
    r.doc["cocycle"] = false;
    r.doc["violation"] = Json{T.element_name((*v)[0]), T.element_name((*v)[1]), T.element_name((*v)[2])};
    return 0;
  }
  bool sq = has_square_trivial_class(s);
  r.lines.push_back(std::string("cocycle=true square_trivial=") + (sq ? "true" : "false"));
  r.doc["cocycle"] = true;
  r.doc["square_trivial"] = sq;
  return 0;
}

Cocycle load_checked_cocycle(const std::string& path, const std::string& group) {
  Cocycle s = load_cocycle(path);
  if (!group.empty()) require_same_group(load_group(group), s, path);
  if (auto v = cocycle_violation(s))
    throw DomainError(path + ": not a cocycle at (" + std::to_string((*v)[0]) + "," + std::to_string((*v)[1]) +
                      "," + std::to_string((*v)[2]) + ")");
  return s;
}

int cmd_twisted_involutions(Report& r, const std::string& group, const std::string& path, std::uint64_t guard) {
  TwistedAlgebra A(load_checked_cocycle(path, group));
  std::optional<Involution> rho;
  try {
    rho = make_involution(A);
  } catch (const NoInvolution&) {
  }
  int classes = 0;
  if (rho) {
    if (A.group().is_abelian_spec())
      classes = count_involution_classes(A);
    else
      classes = oracle::brute_equivalence_classes(A, oracle::brute_involutions(A, guard), guard);
  }
  r.lines.push_back(std::string("exists=") + (rho ? "true" : "false") + " classes=" + std::to_string(classes));
  r.doc["exists"] = rho.has_value();
  if (rho) {
    r.lines.push_back("mu=" + exponents_str(rho->mu.values) + " (mod " + std::to_string(rho->mu.N) + ")");
    r.doc["mu"] = table_json(rho->mu.values);
    r.doc["modulus"] = rho->mu.N;
  } else {
    r.doc["mu"] = Json::array();
  }
  r.doc["classes"] = classes;
  return 0;
}

int cmd_realize(Report& r, const std::string& group, const std::string& beta_path, const std::string& cocycle_path) {
  if (beta_path.empty() == cocycle_path.empty()) throw ParseError("realize needs exactly one of --beta or --cocycle");
  Bicharacter beta;
  if (!beta_path.empty()) {
    Cocycle table = load_cocycle(beta_path);
    if (!group.empty()) require_same_group(load_group(group), table, beta_path);
    beta = Bicharacter{table.group, table.N, table.table};
    if (!is_bicharacter(beta)) throw DomainError(beta_path + ": not an alternating bicharacter");
  } else {
    beta = bicharacter_of(load_checked_cocycle(cocycle_path, group));
  }
  GradedMatrixAlgebra alg = realize_division_algebra(beta);
  const Group& T = alg.group;
  r.lines.push_back("n=" + std::to_string(alg.n) + " order=" + std::to_string(alg.order));
  Json pairs = Json::array();
  std::vector<std::string> ptext;
  for (const auto& p : alg.decomposition.pairs) {
    pairs.push_back(Json{{"a", T.element_name(p.a)}, {"b", T.element_name(p.b)}, {"m", p.m}});
    ptext.push_back("(" + T.element_name(p.a) + "," + T.element_name(p.b) + "," + std::to_string(p.m) + ")");
  }
  r.lines.push_back("pairs=" + join(ptext, " "));
  Json basis = Json::array();
  for (Elem u = 0; u < T.order(); ++u) {
    r.lines.push_back("B[" + T.element_name(u) + "]=" + alg.basis[u].str());
    basis.push_back(Json{{"element", T.element_name(u)}, {"matrix", cyc_matrix_json(alg.basis[u])}});
  }
  r.doc["n"] = alg.n;
  r.doc["order"] = alg.order;
  r.doc["pairs"] = pairs;
  r.doc["basis"] = basis;
  return 0;
}

// ---- matrix

struct MatrixSpec {
  TwistedAlgebra D;
  DegreeGroup G;
  std::vector<Degree> gamma;
  int eps;
};

G0Model parse_g0(const Group& T, const std::string& s, const std::string& source) {
  if (s == "formal2") return G0Model::formal(2);
  if (s == "free") return G0Model::free();
  if (s.rfind("t:", 0) == 0) return G0Model::in_t(T.parse_element(s.substr(2)));
  throw ParseError(source, 0, "g0 must be \"t:<element>\", \"formal2\" or \"free\", got \"" + s + "\"");
}

MatrixSpec load_matrix_spec(const std::string& path) {
  Json j;
  try {
    j = Json::parse(read_file(path));
  } catch (const Json::parse_error& e) {
    throw ParseError(path, 0, std::string("invalid JSON: ") + e.what());
  }
  auto field = [&](const char* name) -> const Json& {
    if (!j.contains(name)) throw ParseError(path, 0, std::string("missing field \"") + name + "\"");
    return j.at(name);
  };
  try {
    const std::string dir = fs::path(path).parent_path().string();
    Group T = load_group(field("group").get<std::string>(), dir);
    Cocycle sigma;
    if (j.contains("sigma_file")) {
      std::string sp = resolve(j.at("sigma_file").get<std::string>(), dir);
      sigma = load_cocycle(sp);
      require_same_group(T, sigma, sp);
      if (j.contains("N") && j.at("N").get<std::int64_t>() != sigma.N)
        throw ParseError(path, 0, "N does not match the modulus of " + sp);
      if (auto v = cocycle_violation(sigma)) throw DomainError(sp + ": not a cocycle");
    } else {
      sigma = trivial_cocycle(T, j.value("N", std::int64_t{1}));
    }
    sigma = normalize(sigma).first;
    G0Model g0 = parse_g0(T, j.value("g0", std::string("formal2")), path);
    int eps = j.value("eps", 1);
    if (eps != 1 && eps != -1) throw ParseError(path, 0, "eps must be 1 or -1");
    DegreeGroup G(T, g0);
    std::vector<Degree> gamma;
    for (const auto& w : field("gamma")) gamma.push_back(G.parse(w.get<std::string>()));
    if (gamma.empty()) throw ParseError(path, 0, "gamma must be non-empty");
    return MatrixSpec{TwistedAlgebra(sigma), G, gamma, eps};
  } catch (const Json::type_error& e) {
    throw ParseError(path, 0, std::string("wrong field type: ") + e.what());
  }
}

std::vector<std::string> degree_names(const DegreeGroup& G, const std::vector<Degree>& gamma) {
  std::vector<std::string> out;
  for (const auto& d : gamma) out.push_back(G.str(d));
  return out;
}

int cmd_matrix_build(Report& r, const std::string& spec_path, const std::string& psi_out) {
  MatrixSpec ms = load_matrix_spec(spec_path);
  auto adm = check_admissible(ms.G, ms.gamma, ms.eps);
  r.doc["admissible"] = adm.has_value();
  if (!adm) {
    r.lines.push_back("admissible=false");
    return 0;
  }
  std::optional<Involution> psi0;
  try {
    psi0 = choose_psi0(ms.D, ms.G.g0_model(), adm->m > 0);
  } catch (const NoInvolution&) {
  }
  r.doc["exists"] = psi0.has_value();
  if (!psi0) {
    r.lines.push_back("admissible=true exists=false");
    return 0;
  }
  GradedMatrixSetting R(ms.D, ms.G, adm->gamma);
  DMatrix phi = build_phi(R, InvolutionSpec{*psi0, ms.eps, adm->m, adm->s, adm->gamma});
  MatrixInvolution psi = involution_from_phi(phi, *psi0);
  bool involutive = is_involutive(psi);
  auto witness = degree_inverting_witness(R, psi);

  auto names = degree_names(ms.G, adm->gamma);
  r.lines.push_back("admissible=true exists=true m=" + std::to_string(adm->m) + " s=" + std::to_string(adm->s) +
                    " eps=" + std::to_string(ms.eps) + " k=" + std::to_string(R.k()));
  r.lines.push_back("gamma=" + join(names, " "));
  r.lines.push_back("psi0=" + exponents_str(psi0->mu.values) + " (mod " + std::to_string(psi0->mu.N) + ")");
  r.lines.push_back("phi=" + phi.str());
  r.lines.push_back(std::string("involutive=") + (involutive ? "true" : "false") +
                    " degree_inverting=" + (witness ? "false" : "true"));
  if (witness) r.lines.push_back("witness=" + witness->detail);
  r.doc["m"] = adm->m;
  r.doc["s"] = adm->s;
  r.doc["eps"] = ms.eps;
  r.doc["gamma"] = names;
  r.doc["psi0"] = Json{{"mu", table_json(psi0->mu.values)}, {"modulus", psi0->mu.N}};
  r.doc["phi"] = dmatrix_json(phi);
  r.doc["involutive"] = involutive;
  r.doc["degree_inverting"] = !witness;
  if (witness) r.doc["witness"] = witness->detail;

  if (!psi_out.empty()) {
    std::ofstream out(psi_out, std::ios::binary);
    if (!out) throw DomainError("cannot write " + psi_out);
    out << write_unit_images(ms.D, unit_images(ms.D, R.k(), psi));
  }
  return 0;
}

std::string label_name(OrthogonalBasis::Label l) {
  switch (l) {
    case OrthogonalBasis::Label::Anisotropic:
      return "aniso";
    case OrthogonalBasis::Label::PairFirst:
      return "pair1";
    case OrthogonalBasis::Label::PairSecond:
      return "pair2";
  }
  return "";
}

int cmd_matrix_recover(Report& r, const std::string& spec_path, const std::string& psi_path) {
  MatrixSpec ms = load_matrix_spec(spec_path);
  auto adm = check_admissible(ms.G, ms.gamma, ms.eps);
  if (!adm) throw DomainError(spec_path + ": gamma is not admissible");
  Involution psi0 = choose_psi0(ms.D, ms.G.g0_model(), adm->m > 0);
  UnitImages images = parse_unit_images(ms.D, read_file(psi_path), psi_path);
  if (images.k != adm->gamma.size())
    throw ParseError(psi_path, 1, "k=" + std::to_string(images.k) + " but the spec has " +
                                      std::to_string(adm->gamma.size()) + " degrees");
  GradedMatrixSetting R(ms.D, ms.G, adm->gamma);
  DMatrix phi = form_from_involution(ms.D, images, psi0);
  int eps = epsilon_of_form(phi, psi0);
  OrthogonalBasis ob = orthogonalize(R, phi, psi0);

  std::vector<std::string> labels;
  for (auto l : ob.labels) labels.push_back(label_name(l));
  auto degrees = degree_names(ms.G, ob.degrees);
  r.lines.push_back("phi=" + phi.str());
  r.lines.push_back("eps=" + std::to_string(eps) + " m=" + std::to_string(ob.m) + " s=" + std::to_string(ob.s));
  r.lines.push_back("labels=" + join(labels, " "));
  r.lines.push_back("degrees=" + join(degrees, " "));
  r.lines.push_back("change=" + ob.change.str());
  r.doc["phi"] = dmatrix_json(phi);
  r.doc["eps"] = eps;
  r.doc["m"] = ob.m;
  r.doc["s"] = ob.s;
  r.doc["labels"] = labels;
  r.doc["degrees"] = degrees;
  r.doc["change"] = dmatrix_json(ob.change);
  r.doc["gram"] = dmatrix_json(ob.gram);
  return 0;
}

// ---- utn

UTBase parse_base(const std::string& s) {
  if (s == "tau") return UTBase::Tau;
  if (s == "s") return UTBase::S;
  throw ParseError("--base must be tau or s, got \"" + s + "\"");
}

std::vector<std::string> eta_names(const UTGrading& g) {
  std::vector<std::string> out;
  for (Elem e : g.eta) out.push_back(g.group.element_name(e));
  return out;
}

int cmd_utn_admits(Report& r, const std::string& group, const std::string& eta, int n) {
  Group G = load_group(group.empty() ? "Z1" : group);
  if (n <= 0) n = static_cast<int>(split_commas(eta).size()) + 1;
  UTGrading g = parse_ut_grading(G, n, eta);
  bool admits = admits_degree_inverting(g);
  r.lines.push_back(std::string("admits=") + (admits ? "true" : "false"));
  r.doc["n"] = n;
  r.doc["eta"] = eta_names(g);
  r.doc["admits"] = admits;
  return 0;
}

int cmd_utn_classify(Report& r, const std::string& group, const std::string& eta, const std::string& u_path,
                     const std::string& base) {
  Group G = load_group(group.empty() ? "Z1" : group);
  UTMatrix u = load_ut_matrix(u_path);
  UTGrading g = parse_ut_grading(G, u.n(), eta);
  UTClassification c = classify_involution(u, parse_base(base), g);
  r.lines.push_back("type=" + base_name(c.type));
  r.lines.push_back("u=" + c.u.str());
  r.lines.push_back("v=" + c.v.str());
  r.doc["type"] = base_name(c.type);
  r.doc["u"] = ut_json(c.u);
  r.doc["v"] = ut_json(c.v);
  return 0;
}

// ---- search

int cmd_search(Report& r, int max_order, const std::string& dir, std::uint64_t guard, bool json) {
  auto reports = oracle::search_question(max_order, dir, guard);
  Json all = Json::array();
  std::size_t hits = 0;
  bool all_verified = true;
  for (const auto& rep : reports) {
    Json hj = Json::array();
    if (!rep.simple_hits.empty()) {
      Group T = Group::load_cayley(rep.source);
      for (const auto& h : rep.simple_hits) {
        bool ok = oracle::verify_hit(T, h);
        all_verified = all_verified && ok;
        hj.push_back(Json{{"center_dimension", h.center_dimension},
                          {"verified", ok},
                          {"cocycle", write_cocycle(h.representative)}});
      }
    }
    hits += rep.simple_hits.size();
    Json j{{"group", rep.group},
           {"order", rep.order},
           {"N", rep.N},
           {"searched", rep.searched},
           {"skip_reason", rep.skip_reason},
           {"classes_examined", rep.classes_examined},
           {"order2_classes", rep.order2_classes},
           {"simple_hits", hj}};
    if (!json) r.lines.push_back(j.dump());
    all.push_back(j);
  }
  r.lines.push_back("hits=" + std::to_string(hits));
  r.doc["reports"] = all;
  r.doc["hits"] = hits;
  r.doc["verified"] = all_verified;
  return all_verified ? 0 : 1;
}

// ---- check

struct CheckTally {
  int run = 0, failed = 0;
  std::vector<std::string> failures;
  void record(bool ok, const std::string& what) {
    ++run;
    if (!ok) {
      ++failed;
      failures.push_back(what);
    }
  }
};

UTMatrix random_unitriangular_ish(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> entry(-3, 3), diag(1, 3);
  UTMatrix v(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) v.set(i, j, i == j ? mpq_class(diag(rng)) : mpq_class(entry(rng)));
  if (n % 2 == 1) v.set(n / 2, n / 2, 1);
  return v;
}

int cmd_check(Report& r, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  CheckTally t;

  const std::vector<Group> groups = {Group::parse_literal("Z2"), Group::parse_literal("Z4"),
                                     Group::parse_literal("Z2xZ2"), Group::parse_literal("Z2xZ4"),
                                     Group::parse_literal("Z3xZ3")};
  for (int it = 0; it < 40; ++it) {
    const Group& T = groups[rng() % groups.size()];
    std::int64_t N = 2 + static_cast<std::int64_t>(rng() % 3);
    ExponentMap lambda = zero_map(T, N);
    for (auto& v : lambda.values) v = static_cast<std::int64_t>(rng() % N);
    Cocycle cb = coboundary(lambda);
    t.record(is_cocycle(cb), "coboundary is a cocycle on " + T.name());

    auto classes = cohomology_classes(T, N);
    const Cocycle& rep = classes[rng() % classes.size()];
    Cocycle s = cocycle_combine(rep, cb, 1, 1);
    t.record(is_cocycle(s), "class representative times coboundary is a cocycle on " + T.name());
    t.record(are_cohomologous(s, rep).has_value(), "shifted representative is cohomologous on " + T.name());
    t.record(cocycle_combine(s, bar(s), 1, 1) == coboundary(bar_witness(s)), "bar witness on " + T.name());
  }

  for (int n = 2; n <= 4; ++n) {
    int k = 1 + static_cast<int>(rng() % (n - 1));
    while (std::gcd(k, n) != 1) ++k;
    auto [X, Y] = epsilon_generators(n, k);
    t.record(X.pow(n) == CycMatrix::identity(n) && Y.pow(n) == CycMatrix::identity(n),
             "epsilon generators have order n=" + std::to_string(n));
  }
  for (const char* lit : {"Z2xZ2", "Z3xZ3", "Z4xZ4"}) {
    Group T = Group::parse_literal(lit);
    for (const auto& c : h2_abelian(T, T.exponent())) {
      Bicharacter beta = bicharacter_of(c);
      if (!is_nondegenerate(beta)) continue;
      GradedMatrixAlgebra alg = realize_division_algebra(beta);
      t.record(same_bicharacter(bicharacter_of(alg.cocycle), beta), std::string("realization reproduces beta on ") + lit);
    }
  }

  for (int it = 0; it < 30; ++it) {
    int n = 2 + static_cast<int>(rng() % 5);
    UTBase base = (n % 2 == 0 && rng() % 2) ? UTBase::S : UTBase::Tau;
    UTMatrix v = random_unitriangular_ish(rng, n);
    UTMatrix u = v * apply_canonical(base, v);
    UTMatrix w = factor_u(u, base);
    t.record(w * apply_canonical(base, w) == u, "factor_u for n=" + std::to_string(n) + " base " + base_name(base));
  }

  {
    TwistedAlgebra D(trivial_cocycle(Group::parse_literal("Z2"), 2));
    DegreeGroup G(D.group(), G0Model::formal(2));
    for (int eps : {1, -1}) {
      std::vector<Degree> gamma = {G.one(), G.from_t(1), G.g0(), G.mul(G.from_t(1), G.g0())};
      auto adm = check_admissible(G, gamma, eps);
      if (!adm) {
        t.record(false, "formal g0 spec admissible");
        continue;
      }
      Involution psi0 = choose_psi0(D, G.g0_model(), false);
      GradedMatrixSetting R(D, G, adm->gamma);
      DMatrix phi = build_phi(R, InvolutionSpec{psi0, eps, adm->m, adm->s, adm->gamma});
      DMatrix P = random_homogeneous_congruence(R, rng());
      DMatrix moved = star(P, psi0) * phi * P;
      OrthogonalBasis ob = orthogonalize(R, moved, psi0);
      t.record(ob.eps == eps && ob.m == adm->m && ob.s == adm->s, "orthogonalize after congruence, eps=" + std::to_string(eps));
      MatrixInvolution psi = involution_from_phi(phi, psi0);
      t.record(is_involutive(psi) && is_degree_inverting(R, psi), "matrix involution, eps=" + std::to_string(eps));
    }
  }

  r.lines.push_back("seed=" + std::to_string(seed) + " checks=" + std::to_string(t.run) +
                    " failures=" + std::to_string(t.failed));
  for (const auto& f : t.failures) r.lines.push_back("failed: " + f);
  r.doc["seed"] = seed;
  r.doc["checks"] = t.run;
  r.doc["failures"] = t.failures;
  return t.failed == 0 ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graded involution toolkit: twisted group algebras, matrix and UT_n involutions", "gia"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  std::uint64_t guard = oracle::kDefaultGuard;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--guard", guard, "Cap on brute-force enumeration sizes");

  std::string group, cocycle_path, beta_path, spec_path, psi_path, psi_out, eta, u_path, base = "tau";
  std::string groups_dir = std::string(GIA_DATA_DIR) + "/groups16";
  std::int64_t mu = 0;
  int n = 0, max_order = 0;
  std::uint64_t seed = 1;

  auto* h2 = app.add_subcommand("h2", "Count classes in H^2(T, F^x) realized by mu_N-valued cocycles");
  h2->add_option("--group", group, "Group literal or .cayley file")->required();
  h2->add_option("--mu", mu, "Modulus N of the cocycle values")->required();

  auto* cocycle = app.add_subcommand("cocycle", "Cocycle files");
  cocycle->require_subcommand(1);
  auto* verify = cocycle->add_subcommand("verify", "Check the cocycle identity and whether [sigma]^2 = 1");
  verify->add_option("file", cocycle_path, "Cocycle file")->required();

  auto* twisted = app.add_subcommand("twisted", "Twisted group algebras");
  twisted->require_subcommand(1);
  auto* involutions = twisted->add_subcommand("involutions", "Degree-inverting involutions of F^sigma T");
  involutions->add_option("--group", group, "Group literal or .cayley file");
  involutions->add_option("--cocycle", cocycle_path, "Cocycle file")->required();

  auto* realize = app.add_subcommand("realize", "Matrix realization of a graded division algebra");
  realize->add_option("--group", group, "Group literal");
  realize->add_option("--beta", beta_path, "Bicharacter table (cocycle file grammar)");
  realize->add_option("--cocycle", cocycle_path, "Cocycle file; its bicharacter is realized");

  auto* matrix = app.add_subcommand("matrix", "Graded involutions on M_k(D)");
  matrix->require_subcommand(1);
  auto* build = matrix->add_subcommand("build", "Build Phi and the involution from a JSON spec");
  build->add_option("--spec", spec_path, "JSON spec file")->required();
  build->add_option("--psi-out", psi_out, "Write the unit images of psi here");
  auto* recover = matrix->add_subcommand("recover", "Recover Phi from unit images and orthogonalize");
  recover->add_option("--spec", spec_path, "JSON spec file")->required();
  recover->add_option("--psi", psi_path, "Unit image file")->required();

  auto* utn = app.add_subcommand("utn", "Graded involutions on UT_n");
  utn->require_subcommand(1);
  auto* admits = utn->add_subcommand("admits", "Does the elementary grading admit a degree-inverting involution");
  admits->add_option("--group", group, "Group literal or .cayley file (default Z1)");
  admits->add_option("--eta", eta, "Degrees of e_{i,i+1}, comma separated")->required();
  admits->add_option("--n", n, "Matrix size (default: entries of eta + 1)");
  auto* classify = utn->add_subcommand("classify", "Classify rho = Int(u) o base");
  classify->add_option("--group", group, "Group literal or .cayley file (default Z1)");
  classify->add_option("--eta", eta, "Degrees of e_{i,i+1}, comma separated")->required();
  classify->add_option("--u", u_path, "Upper triangular matrix file")->required();
  classify->add_option("--base", base, "tau or s (default tau)");

  auto* search = app.add_subcommand("search", "Search non-abelian groups of square order for simple F^sigma T");
  search->add_option("--max-order", max_order, "Largest group order to search")->required();
  search->add_option("--groups", groups_dir, "Directory of .cayley files");

  auto* check = app.add_subcommand("check", "Randomized property checks");
  check->add_option("--seed", seed, "Random seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Report r;
  const bool json = format == "json";
  int code = 0;
  try {
    if (*h2)
      code = cmd_h2(r, group, mu);
    else if (*verify)
      code = cmd_cocycle_verify(r, cocycle_path);
    else if (*involutions)
      code = cmd_twisted_involutions(r, group, cocycle_path, guard);
    else if (*realize)
      code = cmd_realize(r, group, beta_path, cocycle_path);
    else if (*build)
      code = cmd_matrix_build(r, spec_path, psi_out);
    else if (*recover)
      code = cmd_matrix_recover(r, spec_path, psi_path);
    else if (*admits)
      code = cmd_utn_admits(r, group, eta, n);
    else if (*classify)
      code = cmd_utn_classify(r, group, eta, u_path, base);
    else if (*search)
      code = cmd_search(r, max_order, groups_dir, guard, json);
    else if (*check)
      code = cmd_check(r, seed);
  } catch (const ParseError& e) {
    err << "gia: parse error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "gia: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "gia: internal error: " << e.what() << "\n";
    return 1;
  }

  if (json)
    out << r.doc.dump(2) << "\n";
  else
    for (const auto& line : r.lines) out << line << "\n";
  return code;
}

}  // namespace gia
