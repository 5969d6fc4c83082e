#include "gia/matinv.hpp"

#include <algorithm>
#include <cstdio>
#include <random>
#include <sstream>
#include <tuple>

#include "gia/errors.hpp"

namespace gia {

namespace {

AlgebraElement neg(const AlgebraElement& a) { return scale(a, CycRational(-1)); }

void require_same(const DMatrix& a, const DMatrix& b) {
  if (a.k() != b.k() || !(a.algebra() == b.algebra())) throw DomainError("matrices over different algebras or sizes");
}

}  // namespace

DMatrix::DMatrix(const TwistedAlgebra& D, std::size_t k) : D_(D), k_(k), e_(k * k, zero_element(D)) {}

DMatrix DMatrix::identity(const TwistedAlgebra& D, std::size_t k) {
  DMatrix m(D, k);
  for (std::size_t i = 0; i < k; ++i) m(i, i) = unit_element(D);
  return m;
}

DMatrix DMatrix::unit(const TwistedAlgebra& D, std::size_t k, std::size_t i, std::size_t j, const AlgebraElement& d) {
  if (i >= k || j >= k) throw DomainError("matrix unit index out of range");
  DMatrix m(D, k);
  m(i, j) = d;
  return m;
}

DMatrix DMatrix::operator*(const DMatrix& o) const {
  require_same(*this, o);
  DMatrix r(D_, k_);
  for (std::size_t i = 0; i < k_; ++i)
    for (std::size_t t = 0; t < k_; ++t) {
      const AlgebraElement& a = (*this)(i, t);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < k_; ++j) {
        const AlgebraElement& b = o(t, j);
        if (b.is_zero()) continue;
        r(i, j) = add(r(i, j), tga_multiply(D_, a, b));
      }
    }
  return r;
}

DMatrix DMatrix::operator+(const DMatrix& o) const {
  require_same(*this, o);
  DMatrix r = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = add(e_[i], o.e_[i]);
  return r;
}

DMatrix DMatrix::operator-(const DMatrix& o) const { return *this + o.scaled(CycRational(-1)); }

DMatrix DMatrix::scaled(const CycRational& c) const {
  DMatrix r = *this;
  for (auto& x : r.e_) x = scale(x, c);
  return r;
}

bool DMatrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

bool DMatrix::operator==(const DMatrix& o) const { return k_ == o.k_ && D_ == o.D_ && e_ == o.e_; }

std::optional<DMatrix> DMatrix::inverse() const {
  const std::size_t n = static_cast<std::size_t>(D_.dim());
  CycMatrix big(k_ * n, k_ * n);
  for (std::size_t i = 0; i < k_; ++i)
    for (std::size_t j = 0; j < k_; ++j) {
      if ((*this)(i, j).is_zero()) continue;
      CycMatrix L = left_regular(D_, (*this)(i, j));
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) big(i * n + r, j * n + c) = L(r, c);
    }
  auto inv = big.inverse();
  if (!inv) return std::nullopt;
  // Each block is left multiplication by an element of D; read it off on the unit.
  const AlgebraElement one = unit_element(D_);
  DMatrix out(D_, k_);
  for (std::size_t i = 0; i < k_; ++i)
    for (std::size_t j = 0; j < k_; ++j)
      for (std::size_t r = 0; r < n; ++r) {
        CycRational acc;
        for (std::size_t c = 0; c < n; ++c)
          if (!one.coeffs[c].is_zero()) acc += (*inv)(i * n + r, j * n + c) * one.coeffs[c];
        out(i, j).coeffs[r] = acc;
      }
  return out;
}

std::string DMatrix::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < k_; ++i) {
    s += i ? ", [" : "[";
    for (std::size_t j = 0; j < k_; ++j) {
      if (j) s += ", ";
      s += element_str(D_, (*this)(i, j));
    }
    s += "]";
  }
  return s + "]";
}

DMatrix star(const DMatrix& X, const Involution& psi0) {
  DMatrix r(X.algebra(), X.k());
  for (std::size_t i = 0; i < X.k(); ++i)
    for (std::size_t j = 0; j < X.k(); ++j) r(i, j) = apply_involution(X.algebra(), psi0, X(j, i));
  return r;
}

GradedMatrixSetting::GradedMatrixSetting(TwistedAlgebra D_, DegreeGroup G_, std::vector<Degree> gamma_)
    : D(std::move(D_)), G(std::move(G_)), gamma(std::move(gamma_)) {
  if (gamma.empty()) throw DomainError("the module needs rank at least 1");
  if (!(G.support() == D.group())) throw DomainError("degree group and division algebra have different supports");
  const Cocycle& s = D.sigma();
  const Elem one = D.group().identity();
  for (Elem u = 0; u < D.dim(); ++u)
    if (zmod::residue(s.at(one, u), s.N) != 0 || zmod::residue(s.at(u, one), s.N) != 0)
      throw DomainError("the cocycle of D must be normalized (sigma(1, u) = sigma(u, 1) = 1)");
}

Degree GradedMatrixSetting::unit_degree(std::size_t i, std::size_t j, Elem u) const {
  return G.mul(G.mul(gamma.at(i), G.from_t(u)), G.inv(gamma.at(j)));
}

std::vector<Degree> shift_degrees(const DegreeGroup& G, const std::vector<Degree>& gamma, const Degree& g) {
  std::vector<Degree> out;
  for (const auto& d : gamma) out.push_back(G.mul(d, g));
  return out;
}

std::vector<Degree> inverse_degrees(const DegreeGroup& G, const std::vector<Degree>& gamma) {
  std::vector<Degree> out;
  for (const auto& d : gamma) out.push_back(G.inv(d));
  return out;
}

std::optional<Admissible> check_admissible(const DegreeGroup& G, const std::vector<Degree>& gamma, int eps) {
  const G0Model& g0 = G.g0_model();
  const bool pairs_ok = g0.squares_to_one(G.support());
  const bool aniso_ok = g0.kind == G0Model::Kind::InT && eps == 1;
  const Degree g = G.g0();
  std::vector<bool> used(gamma.size(), false);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (pairs_ok)
    for (std::size_t i = 0; i < gamma.size(); ++i) {
      if (used[i]) continue;
      for (std::size_t j = i + 1; j < gamma.size(); ++j) {
        if (used[j]) continue;
        if (gamma[j] == G.mul(gamma[i], g)) {
          used[i] = used[j] = true;
          pairs.emplace_back(i, j);
          break;
        }
      }
    }
  Admissible a;
  for (std::size_t i = 0; i < gamma.size(); ++i)
    if (!used[i]) {
      if (!aniso_ok) return std::nullopt;
      a.order.push_back(i);
    }
  a.m = static_cast<int>(a.order.size());
  a.s = a.m + static_cast<int>(pairs.size());
  for (auto [i, j] : pairs) a.order.push_back(i);
  for (auto [i, j] : pairs) a.order.push_back(j);
  for (std::size_t i : a.order) a.gamma.push_back(gamma[i]);
  return a;
}

Involution choose_psi0(const TwistedAlgebra& D, const G0Model& g0, bool fix_g0) {
  Involution rho = make_involution(D);
  if (!fix_g0) return rho;
  const Group& T = D.group();
  if (g0.kind != G0Model::Kind::InT || !g0.squares_to_one(T))
    throw DomainError("anisotropic vectors need g0 in T with g0^2 = 1");
  const std::int64_t L = rho.mu.N;
  if (zmod::residue(rho.mu.values[g0.element], L) == 0) return rho;
  if (!T.is_abelian_spec())
    throw UnsupportedError("adjusting psi0 by characters needs an abelian group given by invariant factors");
  for (const auto& chi : all_characters(T)) {
    Involution c = compose_with_automorphism(D, rho, chi);
    if (zmod::residue(c.mu.values[g0.element], L) == 0) return c;
  }
  throw DomainError("no degree-inverting involution of D fixes X_g0");
}

DMatrix build_phi(const GradedMatrixSetting& R, const InvolutionSpec& spec) {
  const DegreeGroup& G = R.G;
  const G0Model& g0 = G.g0_model();
  const int k = static_cast<int>(R.k());
  const int m = spec.m, h = spec.s - spec.m;
  if (m < 0 || h < 0 || k != m + 2 * h) throw DomainError("rank must equal m + 2(s - m)");
  if (spec.eps != 1 && spec.eps != -1) throw DomainError("eps must be +1 or -1");
  if (spec.eps == -1 && m != 0) throw DomainError("a symplectic form has no anisotropic vectors (m = 0)");
  if (spec.gamma != R.gamma) throw DomainError("spec degrees differ from the module degrees");
  for (int j = 0; j < h; ++j)
    if (!(spec.gamma[m + h + j] == G.mul(spec.gamma[m + j], G.g0())))
      throw DomainError("paired degree " + G.str(spec.gamma[m + h + j]) + " is not " +
                        G.str(spec.gamma[m + j]) + "*g0");
  if (m > 0 && g0.kind != G0Model::Kind::InT) throw DomainError("m > 0 needs g0 in T");
  if (h > 0 && !g0.squares_to_one(G.support())) throw DomainError("pairs need g0^2 = 1");
  if (!is_involution(R.D, spec.psi0)) throw DomainError("psi0 is not a degree-inverting involution of D");
  const Elem one = R.D.group().identity();
  DMatrix phi(R.D, R.k());
  if (m > 0) {
    const Elem e = g0.element;
    if (!g0.squares_to_one(G.support()) || zmod::residue(spec.psi0.mu.values[e], spec.psi0.mu.N) != 0)
      throw DomainError("I_m (x) X_g0 is psi0-symmetric only when g0^2 = 1 and psi0 fixes X_g0");
    for (int i = 0; i < m; ++i) phi(i, i) = basis_element(R.D, e);
  }
  const AlgebraElement x1 = basis_element(R.D, one);
  for (int j = 0; j < h; ++j) {
    phi(m + j, m + h + j) = x1;
    phi(m + h + j, m + j) = spec.eps == 1 ? x1 : neg(x1);
  }
  return phi;
}

DMatrix MatrixInvolution::operator()(const DMatrix& X) const { return phi_inv * star(X, psi0) * phi; }

MatrixInvolution involution_from_phi(const DMatrix& phi, const Involution& psi0) {
  auto inv = phi.inverse();
  if (!inv) throw DomainError("Phi is not invertible");
  return MatrixInvolution{psi0, phi, *inv};
}

namespace {

template <class F>
void for_each_unit(const TwistedAlgebra& D, std::size_t k, F f) {
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (Elem u = 0; u < D.dim(); ++u) f(i, j, u, DMatrix::unit(D, k, i, j, basis_element(D, u)));
}

}  // namespace

bool is_involutive(const MatrixInvolution& psi) {
  bool ok = true;
  for_each_unit(psi.phi.algebra(), psi.phi.k(), [&](std::size_t, std::size_t, Elem, const DMatrix& E) {
    if (ok && !(psi(psi(E)) == E)) ok = false;
  });
  return ok;
}

std::optional<DegreeWitness> degree_inverting_witness(const GradedMatrixSetting& R, const MatrixInvolution& psi) {
  if (psi.phi.k() != R.k() || !(psi.phi.algebra() == R.D)) throw DomainError("involution and grading do not match");
  std::optional<DegreeWitness> w;
  const Group& T = R.D.group();
  for_each_unit(R.D, R.k(), [&](std::size_t i, std::size_t j, Elem u, const DMatrix& E) {
    if (w) return;
    const Degree target = R.G.inv(R.unit_degree(i, j, u));
    const DMatrix img = psi(E);
    if (img.is_zero()) {
      w = DegreeWitness{i, j, u, "image is zero"};
      return;
    }
    for (std::size_t p = 0; p < R.k() && !w; ++p)
      for (std::size_t q = 0; q < R.k() && !w; ++q)
        for (Elem t = 0; t < T.order() && !w; ++t) {
          if (img(p, q).coeffs[t].is_zero()) continue;
          const Degree d = R.unit_degree(p, q, t);
          if (!(d == target))
            w = DegreeWitness{i, j, u,
                              "image has a component e_" + std::to_string(p) + std::to_string(q) + " (x) X_" +
                                  T.element_name(t) + " of degree " + R.G.str(d) + ", expected " +
                                  R.G.str(target)};
        }
  });
  return w;
}

bool is_degree_inverting(const GradedMatrixSetting& R, const MatrixInvolution& psi) {
  return !degree_inverting_witness(R, psi).has_value();
}

UnitImages unit_images(const TwistedAlgebra& D, std::size_t k, const MatrixInvolution& psi) {
  UnitImages u{k, {}};
  for_each_unit(D, k, [&](std::size_t, std::size_t, Elem, const DMatrix& E) { u.images.push_back(psi(E)); });
  return u;
}

DMatrix form_from_involution(const TwistedAlgebra& D, const UnitImages& psi, const Involution& psi0) {
  const Group& T = D.group();
  const std::size_t k = psi.k;
  const std::size_t n = static_cast<std::size_t>(T.order());
  if (psi.images.size() != k * k * n) throw DomainError("unit image table has the wrong size");
  const std::size_t unknowns = k * k * n;
  auto var = [&](std::size_t a, std::size_t b, Elem v) { return (a * k + b) * n + v; };
  const Elem one = T.identity();
  // e_ij (x) 1 and e_00 (x) X_u generate M_k(D).
  std::vector<std::tuple<std::size_t, std::size_t, Elem>> gens;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) gens.emplace_back(i, j, one);
  for (Elem u = 0; u < T.order(); ++u)
    if (u != one) gens.emplace_back(0, 0, u);
  CycMatrix sys(gens.size() * k * k * n, unknowns);
  std::size_t row0 = 0;
  for (auto [i, j, u] : gens) {
    const DMatrix& M = psi.at(i, j, u, T.order());
    const CycRational c = CycRational::root_of_unity(static_cast<int>(psi0.mu.N), psi0.mu.values[u]);
    const Elem ui = T.inv(u);
    auto row = [&](std::size_t p, std::size_t q, Elem w) { return row0 + (p * k + q) * n + w; };
    // (R* Phi)[j][q] = c X_{u^-1} Phi[i][q]
    for (std::size_t q = 0; q < k; ++q)
      for (Elem v = 0; v < T.order(); ++v) sys(row(j, q, T.mul(ui, v)), var(i, q, v)) += c * D.sigma_value(ui, v);
    // (Phi M)[p][q] = sum_b Phi[p][b] M[b][q]
    for (std::size_t p = 0; p < k; ++p)
      for (std::size_t b = 0; b < k; ++b)
        for (std::size_t q = 0; q < k; ++q)
          for (Elem y = 0; y < T.order(); ++y) {
            const CycRational& my = M(b, q).coeffs[y];
            if (my.is_zero()) continue;
            for (Elem v = 0; v < T.order(); ++v)
              sys(row(p, q, T.mul(v, y)), var(p, b, v)) -= my * D.sigma_value(v, y);
          }
    row0 += k * k * n;
  }
  auto null = sys.nullspace();
  if (null.empty()) throw NotOfFormError("no sesquilinear form induces this map");
  std::vector<CycRational> sol = null[0];
  if (null.size() > 1) {
    // Non-central D: the solutions are Z(D) Phi. Take the homogeneous one whose
    // first nonzero entry is supported on the earliest possible X_t.
    std::size_t first = unknowns;
    for (const auto& v : null)
      for (std::size_t x = 0; x < unknowns; ++x)
        if (!v[x].is_zero()) {
          first = std::min(first, x - x % n);
          break;
        }
    const std::size_t d = null.size();
    bool found = false;
    for (std::size_t t = 0; t < n && !found; ++t) {
      CycMatrix aug(n, d + 1);
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t l = 0; l < d; ++l) aug(r, l) = null[l][first + r];
        if (r == t) aug(r, d) = -1;
      }
      auto ker = aug.nullspace();
      if (ker.size() != 1 || ker[0][d].is_zero()) continue;
      const CycRational w = ker[0][d].inverse();
      sol.assign(unknowns, CycRational());
      for (std::size_t l = 0; l < d; ++l)
        for (std::size_t x = 0; x < unknowns; ++x) sol[x] += ker[0][l] * w * null[l][x];
      found = true;
    }
    if (!found)
      throw std::logic_error("form_from_involution: no homogeneous solution in a space of dimension " +
                             std::to_string(d));
  }
  DMatrix phi(D, k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      for (Elem v = 0; v < T.order(); ++v) phi(a, b).coeffs[v] = sol[var(a, b, v)];
  CycRational lead;
  for (std::size_t x = 0; x < unknowns && lead.is_zero(); ++x) lead = sol[x];
  phi = phi.scaled(lead.inverse());
  // The generators only pin Phi down; the full table must agree.
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (Elem u = 0; u < T.order(); ++u) {
        DMatrix E = DMatrix::unit(D, k, i, j, basis_element(D, u));
        if (!(star(E, psi0) * phi == phi * psi.at(i, j, u, T.order())))
          throw NotOfFormError("the map is not induced by a form: unit e_" + std::to_string(i) + std::to_string(j) +
                               " (x) X_" + T.element_name(u) + " breaks psi0(R^t) Phi = Phi psi(R)");
      }
  if (!phi.inverse()) throw NotOfFormError("the only solution Phi is singular");
  return phi;
}

int epsilon_of_form(const DMatrix& phi, const Involution& psi0) {
  const DMatrix s = star(phi, psi0);
  if (s == phi) return 1;
  if (s == phi.scaled(CycRational(-1))) return -1;
  throw NotInvolutive("psi0(Phi^t) is neither Phi nor -Phi");
}

namespace {

struct Vec {
  std::vector<AlgebraElement> x;
  Degree deg;
};

AlgebraElement form_value(const TwistedAlgebra& D, const DMatrix& phi, const Involution& psi0, const Vec& v,
                          const Vec& w) {
  AlgebraElement r = zero_element(D);
  for (std::size_t i = 0; i < phi.k(); ++i) {
    if (v.x[i].is_zero()) continue;
    AlgebraElement left = apply_involution(D, psi0, v.x[i]);
    for (std::size_t j = 0; j < phi.k(); ++j) {
      if (phi(i, j).is_zero() || w.x[j].is_zero()) continue;
      r = add(r, tga_multiply(D, tga_multiply(D, left, phi(i, j)), w.x[j]));
    }
  }
  return r;
}

Vec times(const TwistedAlgebra& D, const Vec& v, const AlgebraElement& d) {
  Vec r = v;
  for (auto& e : r.x) e = tga_multiply(D, e, d);
  return r;
}

Vec minus(const Vec& a, const Vec& b) {
  Vec r = a;
  for (std::size_t i = 0; i < r.x.size(); ++i) r.x[i] = add(a.x[i], neg(b.x[i]));
  return r;
}

AlgebraElement inverse_of(const TwistedAlgebra& D, const AlgebraElement& d) {
  DMatrix m(D, 1);
  m(0, 0) = d;
  auto inv = m.inverse();
  if (!inv) throw DomainError("form value " + element_str(D, d) + " is not invertible");
  return (*inv)(0, 0);
}

}  // namespace

OrthogonalBasis orthogonalize(const GradedMatrixSetting& R, const DMatrix& phi, const Involution& psi0) {
  const TwistedAlgebra& D = R.D;
  const std::size_t k = R.k();
  if (phi.k() != k || !(phi.algebra() == D)) throw DomainError("Gram matrix does not match the module");
  if (!phi.inverse()) throw DomainError("the form is degenerate");
  const int eps = epsilon_of_form(phi, psi0);
  std::vector<Vec> rest;
  for (std::size_t i = 0; i < k; ++i) {
    Vec v{std::vector<AlgebraElement>(k, zero_element(D)), R.gamma[i]};
    v.x[i] = unit_element(D);
    rest.push_back(std::move(v));
  }
  auto B = [&](const Vec& v, const Vec& w) { return form_value(D, phi, psi0, v, w); };
  std::vector<Vec> aniso, first, second;
  while (!rest.empty()) {
    std::optional<std::size_t> pick;
    if (eps == 1)
      for (std::size_t i = 0; i < rest.size() && !pick; ++i)
        if (!B(rest[i], rest[i]).is_zero()) pick = i;
    if (pick) {
      Vec v = rest[*pick];
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(*pick));
      const AlgebraElement vv_inv = inverse_of(D, B(v, v));
      for (auto& w : rest) w = minus(w, times(D, v, tga_multiply(D, vv_inv, B(v, w))));
      aniso.push_back(std::move(v));
      continue;
    }
    Vec v = rest.front();
    rest.erase(rest.begin());
    if (!B(v, v).is_zero()) throw DomainError("skew form with a non-isotropic homogeneous vector");
    std::optional<std::size_t> partner;
    for (std::size_t i = 0; i < rest.size() && !partner; ++i)
      if (!B(v, rest[i]).is_zero()) partner = i;
    if (!partner) throw DomainError("the form is degenerate");
    Vec w = rest[*partner];
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(*partner));
    w = times(D, w, inverse_of(D, B(v, w)));
    w.deg = R.G.mul(v.deg, R.G.g0());
    const AlgebraElement ww = B(w, w);
    if (!ww.is_zero()) w = minus(w, times(D, v, scale(ww, CycRational(mpq_class(eps, 2)))));
    for (auto& u : rest) {
      const AlgebraElement beta = B(v, u);
      const AlgebraElement alpha = scale(B(w, u), CycRational(eps));
      u = minus(minus(u, times(D, v, alpha)), times(D, w, beta));
    }
    first.push_back(std::move(v));
    second.push_back(std::move(w));
  }
  OrthogonalBasis out{DMatrix(D, k), {}, {}, DMatrix(D, k), 0, 0, eps};
  std::vector<const Vec*> cols;
  for (const auto& v : aniso) {
    cols.push_back(&v);
    out.labels.push_back(OrthogonalBasis::Label::Anisotropic);
  }
  for (const auto& v : first) {
    cols.push_back(&v);
    out.labels.push_back(OrthogonalBasis::Label::PairFirst);
  }
  for (const auto& v : second) {
    cols.push_back(&v);
    out.labels.push_back(OrthogonalBasis::Label::PairSecond);
  }
  for (std::size_t c = 0; c < k; ++c) {
    out.degrees.push_back(cols[c]->deg);
    for (std::size_t r = 0; r < k; ++r) out.change(r, c) = cols[c]->x[r];
  }
  out.gram = star(out.change, psi0) * phi * out.change;
  out.m = static_cast<int>(aniso.size());
  out.s = out.m + static_cast<int>(first.size());
  return out;
}

DMatrix random_homogeneous_congruence(const GradedMatrixSetting& R, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-2, 2);
  const std::size_t k = R.k();
  for (int attempt = 0; attempt < 1000; ++attempt) {
    DMatrix P(R.D, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        const Degree d = R.G.mul(R.G.inv(R.gamma[i]), R.gamma[j]);
        if (!R.G.in_t(d)) continue;
        int c = coef(rng);
        if (i == j && c == 0) c = 1;
        P(i, j) = basis_element(R.D, d.t, CycRational(c));
      }
    if (P.inverse()) return P;
  }
  throw DomainError("no invertible homogeneous congruence found");
}

std::string write_unit_images(const TwistedAlgebra& D, const UnitImages& psi) {
  const Group& T = D.group();
  std::ostringstream o;
  o << "k=" << psi.k << " T=" << T.order() << "\n";
  for (std::size_t i = 0; i < psi.k; ++i)
    for (std::size_t j = 0; j < psi.k; ++j)
      for (Elem u = 0; u < T.order(); ++u) {
        const DMatrix& M = psi.at(i, j, u, T.order());
        o << i << " " << j << " " << T.element_name(u) << " |";
        for (std::size_t p = 0; p < psi.k; ++p)
          for (std::size_t q = 0; q < psi.k; ++q) {
            o << ((p || q) ? " ; " : " ");
            bool any = false;
            for (Elem t = 0; t < T.order(); ++t) {
              const CycRational& c = M(p, q).coeffs[t];
              if (c.is_zero()) continue;
              o << (any ? ", " : "") << c.str() << "@" << T.element_name(t);
              any = true;
            }
            if (!any) o << "0";
          }
        o << "\n";
      }
  return o.str();
}

namespace {

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(trim(cur));
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

}  // namespace

UnitImages parse_unit_images(const TwistedAlgebra& D, std::string_view text, const std::string& source) {
  const Group& T = D.group();
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  std::optional<std::size_t> k;
  UnitImages out;
  std::vector<bool> seen;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    if (!k) {
      long long kk = 0, order = 0;
      if (std::sscanf(line.c_str(), "k=%lld T=%lld", &kk, &order) != 2 || kk < 1)
        throw ParseError(source, lineno, "expected header 'k=<k> T=<order>'");
      if (order != T.order())
        throw ParseError(source, lineno, "T=" + std::to_string(order) + " but D has dimension " +
                                             std::to_string(T.order()));
      k = static_cast<std::size_t>(kk);
      out.k = *k;
      out.images.assign(*k * *k * T.order(), DMatrix(D, *k));
      seen.assign(out.images.size(), false);
      continue;
    }
    const auto bar = line.find('|');
    if (bar == std::string::npos) throw ParseError(source, lineno, "expected 'i j u | entries'");
    std::istringstream head(line.substr(0, bar));
    long long i = -1, j = -1;
    std::string uname, extra;
    if (!(head >> i >> j >> uname) || (head >> extra) || i < 0 || j < 0 || static_cast<std::size_t>(i) >= *k ||
        static_cast<std::size_t>(j) >= *k)
      throw ParseError(source, lineno, "bad unit index");
    Elem u = 0;
    try {
      u = T.parse_element(uname);
    } catch (const Error& e) {
      throw ParseError(source, lineno, e.what());
    }
    const auto entries = split(line.substr(bar + 1), ';');
    if (entries.size() != *k * *k)
      throw ParseError(source, lineno, "expected " + std::to_string(*k * *k) + " entries");
    DMatrix M(D, *k);
    for (std::size_t e = 0; e < entries.size(); ++e) {
      if (entries[e] == "0") continue;
      for (const auto& term : split(entries[e], ',')) {
        const auto at = term.rfind('@');
        if (at == std::string::npos) throw ParseError(source, lineno, "term '" + term + "' lacks '@element'");
        try {
          const Elem t = T.parse_element(trim(term.substr(at + 1)));
          M(e / *k, e % *k).coeffs[t] += CycRational::parse(trim(term.substr(0, at)));
        } catch (const Error& ex) {
          throw ParseError(source, lineno, ex.what());
        }
      }
    }
    const std::size_t idx = (static_cast<std::size_t>(i) * *k + j) * T.order() + u;
    if (seen[idx]) throw ParseError(source, lineno, "unit listed twice");
    seen[idx] = true;
    out.images[idx] = std::move(M);
  }
  if (!k) throw ParseError(source, lineno, "empty unit image file");
  for (bool s : seen)
    if (!s) throw ParseError(source, lineno, "unit image table is incomplete");
  return out;
}

}  // namespace gia
