// Acceptance run: one PASS/FAIL line per criterion, exact arithmetic throughout.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gia/cli.hpp"
#include "gia/cocycles.hpp"
#include "gia/errors.hpp"
#include "gia/matinv.hpp"
#include "gia/oracle.hpp"
#include "gia/realization.hpp"
#include "gia/twisted.hpp"
#include "gia/utn.hpp"

using namespace gia;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string cayley(const char* rel) { return std::string(GIA_TEST_DATA) + "/groups/" + rel; }

Group lit(const char* s) { return Group::parse_literal(s); }

// Every group of order <= 8 up to isomorphism (the trivial group included).
std::vector<Group> groups_upto_8() {
  std::vector<Group> out;
  for (const char* s : {"Z1", "Z2", "Z3", "Z4", "Z2xZ2", "Z5", "Z6", "Z7", "Z8", "Z2xZ4", "Z2xZ2xZ2"})
    out.push_back(lit(s));
  for (const char* s : {"s3.cayley", "d8.cayley", "q8.cayley"}) out.push_back(Group::load_cayley(cayley(s)));
  return out;
}

// Invariant factor lists of all abelian groups of order <= 16.
std::vector<Group> abelian_upto_16() {
  std::vector<Group> out;
  for (const char* s : {"Z1",     "Z2",     "Z3",         "Z4",       "Z2xZ2",        "Z5",       "Z6",
                        "Z7",     "Z8",     "Z2xZ4",      "Z2xZ2xZ2", "Z9",           "Z3xZ3",    "Z10",
                        "Z11",    "Z12",    "Z2xZ6",      "Z13",      "Z14",          "Z15",      "Z16",
                        "Z2xZ8",  "Z4xZ4",  "Z2xZ2xZ4",   "Z2xZ2xZ2xZ2"})
    out.push_back(lit(s));
  return out;
}

// |T^ / S(T^)| from an explicit list of characters into mu_exp(T).
int squares_index_brute(const Group& T) {
  auto chars = oracle::brute_characters(T, T.exponent());
  std::set<std::vector<std::int64_t>> squares;
  for (const auto& c : chars) {
    std::vector<std::int64_t> sq(c.values.size());
    for (std::size_t i = 0; i < sq.size(); ++i) sq[i] = (2 * c.values[i]) % c.N;
    squares.insert(sq);
  }
  return static_cast<int>(chars.size() / squares.size());
}

// ---- 1

Outcome criterion1() {
  Outcome o;
  std::mt19937_64 rng(20240601);
  auto groups = groups_upto_8();
  int bad_random = 0;
  for (int it = 0; it < 200; ++it) {
    const Group& T = groups[it % groups.size()];
    std::int64_t N = 1 + static_cast<std::int64_t>(rng() % 4);
    ExponentMap l = zero_map(T, N);
    for (auto& v : l.values) v = static_cast<std::int64_t>(rng() % N);
    if (!is_cocycle(coboundary(l))) ++bad_random;
  }
  long total = 0, literal_bad = 0, normalized = 0, normalized_bad = 0, corrected_bad = 0;
  for (const char* s : {"Z2", "Z2xZ2", "Z4"})
    for (std::int64_t N : {2, 4}) {
      Group T = lit(s);
      oracle::enumerate_cocycles(T, N, [&](const Cocycle& c) {
        ++total;
        ExponentMap lambda = zero_map(T, N);
        for (Elem u = 0; u < T.order(); ++u) lambda.values[u] = c.at(u, T.inv(u));
        Cocycle lhs = cocycle_combine(c, bar(c), 1, 1);
        bool is_norm = true;
        for (Elem u = 0; u < T.order(); ++u)
          is_norm = is_norm && c.at(T.identity(), u) == 0 && c.at(u, T.identity()) == 0;
        bool literal = lhs == coboundary(lambda);
        if (!literal) ++literal_bad;
        if (is_norm) {
          ++normalized;
          if (!literal) ++normalized_bad;
        }
        if (!(lhs == coboundary(bar_witness(c)))) ++corrected_bad;
      });
    }
  o.pass = bad_random == 0 && literal_bad == 0;
  std::ostringstream d;
  d << "random coboundaries failing: " << bad_random << "/200; sigma*bar(sigma) = delta(sigma(u,u^-1)) fails on "
    << literal_bad << "/" << total << " enumerated cocycles (normalized: " << normalized_bad << "/" << normalized
    << "; with sigma(1,1) factor: " << corrected_bad << "/" << total << ")";
  o.detail = d.str();
  return o;
}

// ---- 2

Outcome criterion2() {
  Outcome o;
  std::ostringstream d;
  for (const char* s : {"Z2", "Z4", "Z2xZ2", "Z2xZ2xZ2", "Z4xZ2"}) {
    Group T = lit(s);
    const std::int64_t N = T.exponent();
    auto brute = oracle::brute_h2(T, N);
    std::size_t fast = h2_abelian(T, N).size(), module = cohomology_classes(T, N).size();
    bool ok = fast == brute.representatives.size() && fast == module;
    o.pass = o.pass && ok;
    d << s << "/N=" << N << ": " << fast << (ok ? "" : " MISMATCH brute " + std::to_string(brute.representatives.size()))
      << "; ";
  }
  auto z22 = oracle::brute_h2(lit("Z2xZ2"), 2).representatives.size();
  o.pass = o.pass && z22 == 2 && h2_abelian(lit("Z2xZ2"), 2).size() == 2;
  d << "Z2xZ2/N=2 classes " << z22;
  o.detail = d.str();
  return o;
}

// ---- 3 and 4 share the instances

struct InvolutionInstance {
  Cocycle sigma;
  std::vector<ExponentMap> brute;
};

std::vector<InvolutionInstance> involution_instances(int& disagreements, int& classes) {
  std::vector<InvolutionInstance> out;
  disagreements = 0;
  classes = 0;
  for (const Group& T : groups_upto_8()) {
    const std::int64_t N = T.exponent();
    for (const Cocycle& c : cohomology_classes(T, N)) {
      ++classes;
      TwistedAlgebra A(c);
      bool made = true;
      try {
        Involution rho = make_involution(A);
        made = is_involution(A, rho);
      } catch (const NoInvolution&) {
        made = false;
      }
      bool square = has_square_trivial_class(c);
      auto brute = oracle::brute_involutions(A);
      if (made != square || square != !brute.empty()) ++disagreements;
      if (!brute.empty()) out.push_back({c, std::move(brute)});
    }
  }
  return out;
}

Outcome criterion3(const std::vector<InvolutionInstance>& inst, int disagreements, int classes) {
  Outcome o;
  o.pass = disagreements == 0;
  o.detail = std::to_string(classes) + " classes over 14 groups, " + std::to_string(inst.size()) +
             " with involutions, disagreements " + std::to_string(disagreements);
  return o;
}

Outcome criterion4(const std::vector<InvolutionInstance>& inst) {
  Outcome o;
  int mismatches = 0;
  for (const auto& i : inst) {
    TwistedAlgebra A(i.sigma);
    int got = oracle::brute_equivalence_classes(A, i.brute);
    int want = squares_index_brute(i.sigma.group);
    if (i.sigma.group.is_abelian_spec() && want != squares_index(i.sigma.group)) ++mismatches;
    if (got != want) ++mismatches;
  }
  auto count = [](const char* s) {
    TwistedAlgebra A(trivial_cocycle(lit(s), 1));
    return oracle::brute_equivalence_classes(A, oracle::brute_involutions(A));
  };
  int z22 = count("Z2xZ2"), z3 = count("Z3"), z2 = count("Z2");
  o.pass = mismatches == 0 && z22 == 4 && z3 == 1 && z2 == 2;
  o.detail = std::to_string(inst.size()) + " instances, mismatches " + std::to_string(mismatches) +
             "; Z2xZ2 " + std::to_string(z22) + ", Z3 " + std::to_string(z3) + ", Z2 " + std::to_string(z2);
  return o;
}

// ---- 5

Outcome criterion5() {
  Outcome o;
  int central = 0, bad = 0;
  for (const Group& T : abelian_upto_16()) {
    const std::int64_t N = T.exponent();
    for (const Cocycle& c : h2_abelian(T, N)) {
      if (!is_nondegenerate(bicharacter_of(c))) continue;
      ++central;
      TwistedAlgebra A(c);
      auto cs = central_and_support_checks(A);
      bool made = true;
      try {
        make_involution(A);
      } catch (const NoInvolution&) {
        made = false;
      }
      bool elem2 = is_elementary_2_group(T);
      if (!cs.is_central || center_dimension(A) != 1 || cs.involution_exists != elem2 || made != elem2 ||
          cs.support_elementary_2 != elem2)
        ++bad;
    }
  }
  Cocycle s;
  for (const Cocycle& c : h2_abelian(lit("Z3xZ3"), 3))
    if (is_nondegenerate(bicharacter_of(c))) s = c;
  bool z33_none = false;
  try {
    make_involution(TwistedAlgebra(s));
  } catch (const NoInvolution&) {
    z33_none = true;
  }
  o.pass = bad == 0 && z33_none && is_nondegenerate(bicharacter_of(s));
  o.detail = std::to_string(central) + " central algebras, disagreements " + std::to_string(bad) +
             ", Z3xZ3 nondegenerate " + (z33_none ? "NoInvolution" : "has an involution");
  return o;
}

// ---- 6

Outcome criterion6() {
  Outcome o;
  std::ostringstream d;
  for (int n : {2, 3, 4}) {
    auto [X, Y] = epsilon_generators(n);
    auto eps = CycRational::root_of_unity(n, 1);
    bool rel = (X * Y).scaled(eps) == Y * X;
    bool ord = X.pow(n) == CycMatrix::identity(n) && Y.pow(n) == CycMatrix::identity(n);
    Echelon e(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        CycMatrix m = X.pow(i) * Y.pow(j);
        std::vector<CycRational> flat;
        for (int r = 0; r < n; ++r)
          for (int c = 0; c < n; ++c) flat.push_back(m(r, c));
        e.add(flat);
      }
    bool rank = e.rank() == static_cast<std::size_t>(n) * n;
    o.pass = o.pass && rel && ord && rank;
    d << "n=" << n << (rel && ord && rank ? " ok" : " FAILED") << "; ";
  }
  Cocycle pauli{lit("Z2xZ2"), 2, std::vector<std::int64_t>(16, 0)};
  // sigma(u,v) = u_2 v_1: the Pauli basis I, X, Y, XY
  for (Elem u = 0; u < 4; ++u)
    for (Elem v = 0; v < 4; ++v) pauli.at(u, v) = (u % 2) * (v / 2);
  for (const Bicharacter& beta : {bicharacter_of(pauli), bicharacter_of(h2_abelian(lit("Z3xZ3"), 3).back())}) {
    bool nondeg = is_nondegenerate(beta);
    GradedMatrixAlgebra alg = realize_division_algebra(beta);
    bool same = same_bicharacter(bicharacter_of(alg.cocycle), beta) &&
                induced_cocycle(alg.group, alg.basis, alg.order) == alg.cocycle;
    o.pass = o.pass && nondeg && same;
    d << beta.group.name() << (nondeg && same ? " reproduced" : " FAILED") << "; ";
  }
  o.detail = d.str();
  return o;
}

// ---- 7

struct MatrixTally {
  long specs = 0, involutive_bad = 0, anti_bad = 0, degree_bad = 0, roundtrip_bad = 0, eps_bad = 0;
  long signature_bad = 0, signature_bad_g0_in_t = 0, refused = 0, g0_in_t = 0;
};

// phi2 = c phi1 for a homogeneous central c.
bool equal_up_to_central(const TwistedAlgebra& D, const DMatrix& a, const DMatrix& b) {
  if (a == b) return true;
  for (Elem t = 0; t < D.dim(); ++t) {
    AlgebraElement x = basis_element(D, t);
    bool central = true;
    for (Elem u = 0; u < D.dim() && central; ++u)
      central = tga_multiply(D, x, basis_element(D, u)) == tga_multiply(D, basis_element(D, u), x);
    if (!central) continue;
    // a = x' b with x' = c X_t, c read from the first nonzero entry
    for (std::size_t i = 0; i < a.k() * a.k(); ++i) {
      const auto& bij = b(i / a.k(), i % a.k());
      if (bij.is_zero()) continue;
      AlgebraElement prod = tga_multiply(D, x, bij);
      const auto& aij = a(i / a.k(), i % a.k());
      Elem lead = 0;
      while (prod.coeffs[lead].is_zero()) ++lead;
      if (aij.coeffs[lead].is_zero()) break;
      CycRational c = aij.coeffs[lead] / prod.coeffs[lead];
      DMatrix scaled = b;
      for (std::size_t p = 0; p < a.k(); ++p)
        for (std::size_t q = 0; q < a.k(); ++q) scaled(p, q) = scale(tga_multiply(D, x, b(p, q)), c);
      if (scaled == a) return true;
      break;
    }
  }
  return false;
}

void run_spec(MatrixTally& t, const TwistedAlgebra& D, const DegreeGroup& G, const Admissible& adm, int eps,
              std::uint64_t seed) {
  Involution psi0 = choose_psi0(D, G.g0_model(), adm.m > 0);
  GradedMatrixSetting R(D, G, adm.gamma);
  DMatrix phi = build_phi(R, InvolutionSpec{psi0, eps, adm.m, adm.s, adm.gamma});
  ++t.specs;
  if (G.g0_model().kind == G0Model::Kind::InT) ++t.g0_in_t;
  MatrixInvolution psi = involution_from_phi(phi, psi0);
  if (!is_involutive(psi)) ++t.involutive_bad;
  auto units = unit_images(D, R.k(), psi);
  // psi(x y) = psi(y) psi(x) for x among the generators e_ij (x) 1, e_00 (x) X_u and y any unit;
  // x y is sigma(u,v) times a unit or zero, so psi(x y) is read off the unit images.
  const std::size_t k = R.k();
  const Elem one = D.group().identity();
  std::vector<std::array<std::size_t, 3>> gens;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) gens.push_back({i, j, static_cast<std::size_t>(one)});
  for (Elem u = 0; u < D.dim(); ++u) gens.push_back({0, 0, static_cast<std::size_t>(u)});
  DMatrix zero(D, k);
  bool anti = true;
  for (const auto& [i, j, ux] : gens) {
    const Elem u = static_cast<Elem>(ux);
    for (std::size_t p = 0; p < k && anti; ++p)
      for (std::size_t q = 0; q < k && anti; ++q)
        for (Elem v = 0; v < D.dim() && anti; ++v) {
          DMatrix rhs = units.at(p, q, v, D.dim()) * units.at(i, j, u, D.dim());
          if (j != p) {
            anti = rhs == zero;
          } else {
            Elem uv = D.group().mul(u, v);
            anti = rhs == units.at(i, q, uv, D.dim()).scaled(D.sigma_value(u, v));
          }
        }
  }
  if (!anti) ++t.anti_bad;
  if (!is_degree_inverting(R, psi)) ++t.degree_bad;
  DMatrix back = form_from_involution(D, units, psi0);
  if (!(back == phi) && !(center_dimension(D) > 1 && equal_up_to_central(D, back, phi))) ++t.roundtrip_bad;
  if (epsilon_of_form(back, psi0) != eps) ++t.eps_bad;
  DMatrix P = random_homogeneous_congruence(R, seed);
  bool recovered = false;
  try {
    OrthogonalBasis ob = orthogonalize(R, star(P, psi0) * phi * P, psi0);
    recovered = ob.m == adm.m && ob.s == adm.s && ob.eps == eps;
  } catch (const DomainError&) {
    ++t.refused;
  }
  if (!recovered) {
    ++t.signature_bad;
    if (G.g0_model().kind == G0Model::Kind::InT) ++t.signature_bad_g0_in_t;
  }
}

// Non-decreasing index sequences of length k over [0, n).
void multisets(int n, int k, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> idx(k, 0);
  while (true) {
    f(idx);
    int p = k - 1;
    while (p >= 0 && idx[p] == n - 1) --p;
    if (p < 0) return;
    ++idx[p];
    for (int q = p + 1; q < k; ++q) idx[q] = idx[p];
  }
}

Outcome criterion7() {
  Outcome o;
  MatrixTally t;
  std::uint64_t seed = 7;
  for (const char* s : {"Z1", "Z2", "Z3", "Z4", "Z2xZ2"}) {
    Group T = lit(s);
    for (const Cocycle& c : cohomology_classes(T, T.exponent())) {
      Cocycle sigma = normalize(c).first;
      TwistedAlgebra D(sigma);
      if (!has_square_trivial_class(sigma)) continue;
      std::vector<G0Model> models = {G0Model::formal(2)};
      for (Elem e = 0; e < T.order(); ++e) models.push_back(G0Model::in_t(e));
      for (const G0Model& g0 : models) {
        DegreeGroup G(T, g0);
        std::vector<Degree> pool;
        for (Elem e = 0; e < T.order(); ++e) pool.push_back(G.from_t(e));
        if (g0.kind == G0Model::Kind::Formal)
          for (Elem e = 0; e < T.order(); ++e) pool.push_back(G.mul(G.from_t(e), G.g0()));
        for (int eps : {1, -1})
          for (int k = 1; k <= 4; ++k)
            multisets(static_cast<int>(pool.size()), k, [&](const std::vector<int>& idx) {
              std::vector<Degree> gamma;
              for (int i : idx) gamma.push_back(pool[i]);
              auto adm = check_admissible(G, gamma, eps);
              if (!adm || adm->m > 1) return;
              if (adm->m > 0) {
                try {
                  choose_psi0(D, g0, true);
                } catch (const DomainError&) {
                  return;  // no psi0 fixing X_g0: build_phi refuses this spec
                }
              }
              run_spec(t, D, G, *adm, eps, seed++);
            });
      }
    }
  }

  // g'' != g' g0 and g0^2 != 1 are both caught with a witness
  bool witnessed = true;
  {
    TwistedAlgebra D(trivial_cocycle(lit("Z3"), 3));
    DegreeGroup G(D.group(), G0Model::formal(2));
    std::vector<Degree> gamma = {G.from_t(1), G.mul(G.from_t(1), G.g0())};
    auto adm = check_admissible(G, gamma, 1);
    Involution psi0 = choose_psi0(D, G.g0_model(), false);
    GradedMatrixSetting R(D, G, adm->gamma);
    auto psi = involution_from_phi(build_phi(R, InvolutionSpec{psi0, 1, adm->m, adm->s, adm->gamma}), psi0);
    GradedMatrixSetting wrong(D, G, {G.from_t(1), G.g0()});
    witnessed = witnessed && degree_inverting_witness(wrong, psi).has_value();
    DegreeGroup G4(D.group(), G0Model::formal(4));
    GradedMatrixSetting wrong4(D, G4, {G4.from_t(1), G4.mul(G4.from_t(1), G4.g0())});
    witnessed = witnessed && degree_inverting_witness(wrong4, psi).has_value() &&
                !check_admissible(G4, wrong4.gamma, 1).has_value();
  }

  o.pass = t.involutive_bad == 0 && t.anti_bad == 0 && t.degree_bad == 0 && t.roundtrip_bad == 0 && t.eps_bad == 0 &&
           t.signature_bad == 0 && witnessed && t.specs > 0;
  std::ostringstream d;
  d << t.specs << " specs; involutive " << t.involutive_bad << ", anti " << t.anti_bad << ", degree "
    << t.degree_bad << ", round trip " << t.roundtrip_bad << ", eps " << t.eps_bad
    << " failures; (m,s,eps) after congruence differs in " << t.signature_bad << " (" << t.signature_bad_g0_in_t
    << " of " << t.g0_in_t << " with g0 in T, " << t.refused << " refused); violations " << (witnessed ? "witnessed" : "MISSED");
  o.detail = d.str();
  return o;
}

// ---- 8

UTMatrix random_degree_one(std::mt19937_64& rng, const UTGrading& g, bool odd_middle_one) {
  std::uniform_int_distribution<int> d(-3, 3), nz(1, 3);
  const int n = g.n();
  UTMatrix v(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      if (i == j)
        v.set(i, i, (rng() % 2 ? 1 : -1) * nz(rng));
      else if (g.unit_degree(i, j) == g.group.identity())
        v.set(i, j, d(rng));
    }
  if (odd_middle_one && n % 2 == 1) v.set(n / 2, n / 2, 1);
  return v;
}

UTGrading random_eta(std::mt19937_64& rng, const Group& G, int n, bool admissible) {
  UTGrading g{G, std::vector<Elem>(n - 1)};
  for (auto& e : g.eta) e = static_cast<Elem>(rng() % G.order());
  if (admissible) {
    for (int i = 0; 2 * i < n - 2; ++i) g.eta[n - 2 - i] = G.inv(g.eta[i]);
    if (n % 2 == 0 && G.mul(g.eta[n / 2 - 1], g.eta[n / 2 - 1]) != G.identity()) g.eta[n / 2 - 1] = G.identity();
  }
  return g;
}

Outcome criterion8() {
  Outcome o;
  std::mt19937_64 rng(8);
  std::vector<Group> groups = {lit("Z2"), lit("Z4"), lit("Z2xZ2"), Group::load_cayley(cayley("s3.cayley"))};
  int criterion_bad = 0, tested = 0, admissible_seen = 0;
  for (int it = 0; it < 200; ++it) {
    const Group& G = groups[it % groups.size()];
    int n = 1 + static_cast<int>(rng() % 6);
    UTGrading g = random_eta(rng, G, n, it < 100);
    ++tested;
    bool adm = admits_degree_inverting(g);
    if (adm) ++admissible_seen;
    if (adm != canonical_is_degree_inverting(UTBase::Tau, g)) ++criterion_bad;
  }
  int factor_bad = 0, classify_bad = 0, factored = 0;
  for (int it = 0; factored < 100; ++it) {
    const Group& G = groups[it % groups.size()];
    int n = 1 + static_cast<int>(rng() % 6);
    UTGrading g = random_eta(rng, G, n, true);
    UTBase base = (n % 2 == 0 && rng() % 2) ? UTBase::S : UTBase::Tau;
    UTMatrix v = random_degree_one(rng, g, true);
    UTMatrix u = v * apply_canonical(base, v);
    ++factored;
    UTMatrix w = factor_u(u, base);
    if (!(w * apply_canonical(base, w) == u) || !is_homogeneous_degree_one(w, g)) ++factor_bad;

    // rho = Int(u0) o base for a random invertible degree-1 u0 with base(u0) = +-u0
    UTMatrix u0 = random_degree_one(rng, g, false);
    u0 = u0 + apply_canonical(base, u0);
    if (!u0.inverse()) continue;
    UTClassification c = classify_involution(u0, base, g);
    UTMatrix u0i = *u0.inverse(), vi = *c.v.inverse();
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        UTMatrix x = UTMatrix::unit(n, i, j);
        UTMatrix rho = u0 * apply_canonical(base, x) * u0i;
        UTMatrix conj = c.v * apply_canonical(c.type, vi * x * c.v) * vi;
        if (!(rho == conj)) {
          ++classify_bad;
          i = j = n;
        }
      }
  }
  int standard_bad = 0, standard_tested = 0;
  for (int it = 0; it < 150; ++it) {
    const Group& G = groups[it % 3];
    int n = 1 + static_cast<int>(rng() % 6);
    std::vector<Elem> h(n);
    for (auto& e : h) e = static_cast<Elem>(rng() % G.order());
    if (it % 2 == 0)
      for (int i = 0; i < n; ++i) h[n - 1 - i] = G.mul(G.inv(h[i]), G.mul(h[0], h[n - 1]));
    ++standard_tested;
    if (standard_condition(G, h) != admits_degree_inverting(standard_to_elementary(G, h))) ++standard_bad;
  }
  o.pass = criterion_bad == 0 && factor_bad == 0 && classify_bad == 0 && standard_bad == 0;
  std::ostringstream d;
  d << tested << " gradings (" << admissible_seen << " admissible), eta criterion mismatches " << criterion_bad
    << "; factor_u failures " << factor_bad << "/" << factored << "; classify witness failures " << classify_bad
    << "; standard gradings mismatches " << standard_bad << "/" << standard_tested;
  o.detail = d.str();
  return o;
}

// ---- 9

Outcome criterion9() {
  Outcome o;
  std::ostringstream out, err;
  int code = run_cli({"search", "--max-order", "16", "--format", "json"}, out, err);
  auto reports = oracle::search_question(16, GIA_DATA_DIR "/groups16");
  std::size_t hits = 0, verified = 0, searched = 0;
  for (const auto& r : reports) {
    if (r.searched) ++searched;
    Group T = Group::load_cayley(r.source);
    for (const auto& h : r.simple_hits) {
      ++hits;
      if (oracle::verify_hit(T, h)) ++verified;
    }
  }
  o.pass = code == 0 && searched == reports.size() && !reports.empty() && verified == hits &&
           out.str().find("\"schema\": 1") != std::string::npos;
  o.detail = std::to_string(searched) + "/" + std::to_string(reports.size()) +
             " groups searched under the default guard; simple hits " + std::to_string(hits) + ", re-verified " +
             std::to_string(verified) + "; cli exit " + std::to_string(code);
  return o;
}

}  // namespace

int main() {
  using Clock = std::chrono::steady_clock;
  int failed = 0;
  auto report = [&](int id, const char* name, double limit, const std::function<Outcome()>& f) {
    auto start = Clock::now();
    Outcome o;
    try {
      o = f();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (limit > 0 && secs > limit) {
      o.pass = false;
      o.detail += "; over the time limit";
    }
    if (!o.pass) ++failed;
    std::printf("%s %d %s [%.2fs] %s\n", o.pass ? "PASS" : "FAIL", id, name, secs, o.detail.c_str());
    std::fflush(stdout);
  };

  report(1, "cocycle algebra", 10, criterion1);
  report(2, "H^2 agreement", 30, criterion2);
  int disagreements = 0, classes = 0;
  std::vector<InvolutionInstance> inst;
  report(3, "involution existence", 0, [&] {
    inst = involution_instances(disagreements, classes);
    return criterion3(inst, disagreements, classes);
  });
  report(4, "involution class count", 0, [&] { return criterion4(inst); });
  report(5, "central abelian support", 0, criterion5);
  report(6, "realization", 0, criterion6);
  report(7, "matrix involutions", 60, criterion7);
  report(8, "UT_n involutions", 0, criterion8);
  report(9, "order-16 search", 0, criterion9);
  return failed == 0 ? 0 : 1;
}
