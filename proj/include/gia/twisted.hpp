#pragma once

#include <string>
#include <vector>

#include "gia/cocycles.hpp"
#include "gia/cycmatrix.hpp"
#include "gia/cyclotomic.hpp"
#include "gia/groups.hpp"

namespace gia {

// F^sigma T with basis X_u and X_u X_v = sigma(u,v) X_{uv}.
class TwistedAlgebra {
 public:
  explicit TwistedAlgebra(Cocycle sigma);

  const Group& group() const { return sigma_.group; }
  const Cocycle& sigma() const { return sigma_; }
  std::int64_t N() const { return sigma_.N; }
  int dim() const { return sigma_.group.order(); }

  CycRational sigma_value(Elem u, Elem v) const;
  bool operator==(const TwistedAlgebra& o) const { return sigma_ == o.sigma_; }

 private:
  Cocycle sigma_;
};

// Dense coefficient vector over the basis X_u, u in index order.
struct AlgebraElement {
  std::vector<CycRational> coeffs;

  bool operator==(const AlgebraElement& o) const { return coeffs == o.coeffs; }
  bool is_zero() const;
};

AlgebraElement zero_element(const TwistedAlgebra& A);
AlgebraElement basis_element(const TwistedAlgebra& A, Elem u, const CycRational& c = 1);
AlgebraElement unit_element(const TwistedAlgebra& A);
AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement scale(const AlgebraElement& a, const CycRational& c);
AlgebraElement tga_multiply(const TwistedAlgebra& A, const AlgebraElement& a, const AlgebraElement& b);
// The degree if a is nonzero and homogeneous.
std::optional<Elem> homogeneous_degree(const AlgebraElement& a);
std::string element_str(const TwistedAlgebra& A, const AlgebraElement& a);
// Matrix of left multiplication by a on the basis X_u.
CycMatrix left_regular(const TwistedAlgebra& A, const AlgebraElement& a);

// rho(X_u) = zeta_L^mu(u) X_{u^-1}; mu is stored with modulus L = effective_modulus(T, N).
struct Involution {
  ExponentMap mu;
};

// Rewrites mu with modulus L; mu's own modulus must divide L.
Involution involution_from_mu(const TwistedAlgebra& A, const ExponentMap& mu);
// rho is a degree-inverting involution (anti-multiplicative, rho^2 = id) on A.
bool is_involution(const TwistedAlgebra& A, const Involution& rho);

// Throws NoInvolution when [sigma]^2 != 1.
Involution make_involution(const TwistedAlgebra& A);
AlgebraElement apply_involution(const TwistedAlgebra& A, const Involution& rho, const AlgebraElement& a);
Involution compose_with_automorphism(const TwistedAlgebra& A, const Involution& rho, const Character& chi);
// The character chi with rho2 = rho1 o psi_chi.
Character relating_character(const TwistedAlgebra& A, const Involution& rho1, const Involution& rho2);
bool are_equivalent(const TwistedAlgebra& A, const Involution& rho1, const Involution& rho2);
int count_involution_classes(const TwistedAlgebra& A);

struct CentralSupport {
  bool is_central;
  bool support_elementary_2;
  bool involution_exists;
};
CentralSupport central_and_support_checks(const TwistedAlgebra& A);

int center_dimension(const TwistedAlgebra& A);

}  // namespace gia
