#include "gia/twisted.hpp"

#include <sstream>

#include "gia/errors.hpp"

namespace gia {

using zmod::residue;

TwistedAlgebra::TwistedAlgebra(Cocycle sigma) : sigma_(std::move(sigma)) {
  if (auto w = cocycle_violation(sigma_))
    throw DomainError("not a 2-cocycle: identity fails at (u,v,w) = (" + std::to_string((*w)[0]) + "," +
                      std::to_string((*w)[1]) + "," + std::to_string((*w)[2]) + ")");
}

CycRational TwistedAlgebra::sigma_value(Elem u, Elem v) const {
  return CycRational::root_of_unity(static_cast<int>(sigma_.N), sigma_.at(u, v));
}

bool AlgebraElement::is_zero() const {
  for (const auto& c : coeffs)
    if (!c.is_zero()) return false;
  return true;
}

AlgebraElement zero_element(const TwistedAlgebra& A) {
  return AlgebraElement{std::vector<CycRational>(A.dim())};
}

AlgebraElement basis_element(const TwistedAlgebra& A, Elem u, const CycRational& c) {
  if (!A.group().contains(u)) throw DomainError("basis index out of range");
  AlgebraElement a = zero_element(A);
  a.coeffs[u] = c;
  return a;
}

AlgebraElement unit_element(const TwistedAlgebra& A) {
  const Elem one = A.group().identity();
  return basis_element(A, one, A.sigma_value(one, one).inverse());
}

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.coeffs.size() != b.coeffs.size()) throw DomainError("elements of different algebras");
  AlgebraElement r = a;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
  return r;
}

AlgebraElement scale(const AlgebraElement& a, const CycRational& c) {
  AlgebraElement r = a;
  for (auto& x : r.coeffs) x *= c;
  return r;
}

AlgebraElement tga_multiply(const TwistedAlgebra& A, const AlgebraElement& a, const AlgebraElement& b) {
  const int n = A.dim();
  if (a.coeffs.size() != static_cast<std::size_t>(n) || b.coeffs.size() != static_cast<std::size_t>(n))
    throw DomainError("tga_multiply: operands do not belong to this algebra");
  const Group& T = A.group();
  AlgebraElement r = zero_element(A);
  for (Elem u = 0; u < n; ++u) {
    if (a.coeffs[u].is_zero()) continue;
    for (Elem v = 0; v < n; ++v) {
      if (b.coeffs[v].is_zero()) continue;
      r.coeffs[T.mul(u, v)] += a.coeffs[u] * b.coeffs[v] * A.sigma_value(u, v);
    }
  }
  return r;
}

std::optional<Elem> homogeneous_degree(const AlgebraElement& a) {
  std::optional<Elem> d;
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i].is_zero()) continue;
    if (d) return std::nullopt;
    d = static_cast<Elem>(i);
  }
  return d;
}

std::string element_str(const TwistedAlgebra& A, const AlgebraElement& a) {
  std::string out;
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i].is_zero()) continue;
    std::string c = a.coeffs[i].str();
    std::string x = "X[" + A.group().element_name(static_cast<Elem>(i)) + "]";
    std::string term = c == "1" ? x : "(" + c + ")*" + x;
    out += out.empty() ? term : " + " + term;
  }
  return out.empty() ? "0" : out;
}

CycMatrix left_regular(const TwistedAlgebra& A, const AlgebraElement& a) {
  const int n = A.dim();
  CycMatrix m(n, n);
  for (Elem v = 0; v < n; ++v) {
    AlgebraElement col = tga_multiply(A, a, basis_element(A, v));
    for (Elem t = 0; t < n; ++t) m(t, v) = col.coeffs[t];
  }
  return m;
}

Involution involution_from_mu(const TwistedAlgebra& A, const ExponentMap& mu) {
  const std::int64_t L = effective_modulus(A.group(), A.N());
  if (!(mu.group == A.group()) || mu.values.size() != static_cast<std::size_t>(A.dim()))
    throw DomainError("mu is defined on a different group");
  if (mu.N < 1 || L % mu.N != 0)
    throw DomainError("mu values in mu_" + std::to_string(mu.N) + " do not embed in mu_" + std::to_string(L));
  ExponentMap m{A.group(), L, mu.values};
  for (auto& x : m.values) x = residue(x * (L / mu.N), L);
  return Involution{m};
}

bool is_involution(const TwistedAlgebra& A, const Involution& rho) {
  const Group& T = A.group();
  const std::int64_t L = rho.mu.N;
  if (L % A.N() != 0) return false;
  const std::int64_t s = L / A.N();
  const auto& mu = rho.mu.values;
  for (Elem u = 0; u < T.order(); ++u) {
    if (residue(mu[u] + mu[T.inv(u)], L) != 0) return false;
    for (Elem v = 0; v < T.order(); ++v) {
      // rho(X_u X_v) = rho(X_v) rho(X_u)
      std::int64_t lhs = s * A.sigma().at(u, v) + mu[T.mul(u, v)];
      std::int64_t rhs = mu[u] + mu[v] + s * A.sigma().at(T.inv(v), T.inv(u));
      if (residue(lhs - rhs, L) != 0) return false;
    }
  }
  return true;
}

Involution make_involution(const TwistedAlgebra& A) {
  const Cocycle& s = A.sigma();
  const Cocycle sb = bar(s);
  // sigma = delta(mu) * bar(sigma)  <=>  delta(mu) = sigma * bar(sigma)^-1.
  auto w = are_cohomologous(s, sb);
  if (!w)
    throw NoInvolution("[sigma]^2 != 1 for this cocycle on " + A.group().name() +
                       ": no degree-inverting involution exists");
  return Involution{*w};
}

AlgebraElement apply_involution(const TwistedAlgebra& A, const Involution& rho, const AlgebraElement& a) {
  const Group& T = A.group();
  if (a.coeffs.size() != static_cast<std::size_t>(A.dim())) throw DomainError("element of another algebra");
  AlgebraElement r = zero_element(A);
  const int L = static_cast<int>(rho.mu.N);
  for (Elem u = 0; u < T.order(); ++u) {
    if (a.coeffs[u].is_zero()) continue;
    r.coeffs[T.inv(u)] += a.coeffs[u] * CycRational::root_of_unity(L, rho.mu.values[u]);
  }
  return r;
}

namespace {

void require_characters(const TwistedAlgebra& A) {
  if (!A.group().is_abelian_spec())
    throw UnsupportedError("character machinery needs a group given by invariant factors; " + A.group().name() +
                           " is a Cayley table");
}

}  // namespace

Involution compose_with_automorphism(const TwistedAlgebra& A, const Involution& rho, const Character& chi) {
  require_characters(A);
  const Group& T = A.group();
  const std::int64_t L = rho.mu.N;
  const std::int64_t M = T.exponent();
  if (L % M != 0) throw DomainError("involution modulus does not contain the character values");
  Involution out = rho;
  for (Elem u = 0; u < T.order(); ++u)
    out.mu.values[u] = residue(rho.mu.values[u] + (L / M) * character_value(T, chi, u), L);
  return out;
}

Character relating_character(const TwistedAlgebra& A, const Involution& rho1, const Involution& rho2) {
  require_characters(A);
  if (rho1.mu.N != rho2.mu.N || !(rho1.mu.group == rho2.mu.group))
    throw DomainError("involutions are written with different moduli");
  const Group& T = A.group();
  const std::int64_t L = rho1.mu.N;
  std::vector<std::int64_t> chi(T.order());
  for (Elem u = 0; u < T.order(); ++u) chi[u] = residue(rho2.mu.values[u] - rho1.mu.values[u], L);
  for (Elem u = 0; u < T.order(); ++u)
    for (Elem v = 0; v < T.order(); ++v)
      if (residue(chi[u] + chi[v] - chi[T.mul(u, v)], L) != 0)
        throw DomainError("the two maps do not differ by a character; not involutions of the same algebra");
  const auto& f = T.factors();
  Character c;
  for (std::size_t i = 0; i < f.size(); ++i) {
    std::int64_t step = L / f[i];
    std::int64_t x = chi[T.generator(static_cast<int>(i))];
    if (x % step != 0) throw DomainError("relating map is not a character of finite order");
    c.exponents.push_back(static_cast<int>(x / step));
  }
  return c;
}

bool are_equivalent(const TwistedAlgebra& A, const Involution& rho1, const Involution& rho2) {
  return is_square_character(A.group(), relating_character(A, rho1, rho2));
}

int count_involution_classes(const TwistedAlgebra& A) {
  require_characters(A);
  if (!has_square_trivial_class(A.sigma())) return 0;
  return squares_index(A.group());
}

CentralSupport central_and_support_checks(const TwistedAlgebra& A) {
  require_characters(A);
  return CentralSupport{is_nondegenerate(bicharacter_of(A.sigma())), is_elementary_2_group(A.group()),
                        has_square_trivial_class(A.sigma())};
}

int center_dimension(const TwistedAlgebra& A) {
  const Group& T = A.group();
  const int n = T.order();
  // Unknowns c_w; row (u, t) is the X_t coefficient of z X_u - X_u z.
  CycMatrix sys(static_cast<std::size_t>(n) * n, n);
  for (Elem u = 0; u < n; ++u)
    for (Elem w = 0; w < n; ++w) {
      sys(static_cast<std::size_t>(u) * n + T.mul(w, u), w) += A.sigma_value(w, u);
      sys(static_cast<std::size_t>(u) * n + T.mul(u, w), w) -= A.sigma_value(u, w);
    }
  return n - static_cast<int>(sys.rank());
}

}  // namespace gia
