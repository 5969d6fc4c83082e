#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gia/degrees.hpp"
#include "gia/twisted.hpp"

namespace gia {

// k x k matrix over a twisted group algebra D.
class DMatrix {
 public:
  DMatrix(const TwistedAlgebra& D, std::size_t k);

  static DMatrix identity(const TwistedAlgebra& D, std::size_t k);
  // e_ij (x) d
  static DMatrix unit(const TwistedAlgebra& D, std::size_t k, std::size_t i, std::size_t j, const AlgebraElement& d);

  const TwistedAlgebra& algebra() const { return D_; }
  std::size_t k() const { return k_; }
  AlgebraElement& operator()(std::size_t i, std::size_t j) { return e_[i * k_ + j]; }
  const AlgebraElement& operator()(std::size_t i, std::size_t j) const { return e_[i * k_ + j]; }

  DMatrix operator*(const DMatrix& o) const;
  DMatrix operator+(const DMatrix& o) const;
  DMatrix operator-(const DMatrix& o) const;
  DMatrix scaled(const CycRational& c) const;
  bool is_zero() const;
  bool operator==(const DMatrix& o) const;

  // Through the left regular representation M_k(D) -> M_{k|T|}(F).
  std::optional<DMatrix> inverse() const;
  std::string str() const;

 private:
  TwistedAlgebra D_;
  std::size_t k_;
  std::vector<AlgebraElement> e_;
};

// psi0 applied entry-wise to the transpose.
DMatrix star(const DMatrix& X, const Involution& psi0);

// M_k(D) graded by deg(e_ij (x) X_u) = gamma_i u gamma_j^-1.
struct GradedMatrixSetting {
  TwistedAlgebra D;
  DegreeGroup G;
  std::vector<Degree> gamma;

  GradedMatrixSetting(TwistedAlgebra D, DegreeGroup G, std::vector<Degree> gamma);
  std::size_t k() const { return gamma.size(); }
  Degree unit_degree(std::size_t i, std::size_t j, Elem u) const;
};

// Degree lists of the shifted module V^[g] and of the dual module.
std::vector<Degree> shift_degrees(const DegreeGroup& G, const std::vector<Degree>& gamma, const Degree& g);
std::vector<Degree> inverse_degrees(const DegreeGroup& G, const std::vector<Degree>& gamma);

struct Admissible {
  int m = 0, s = 0;
  std::vector<std::size_t> order;  // positions of the input listed as g_1..g_m, g'.., g''..
  std::vector<Degree> gamma;       // the input reordered
};

// Greedy pairing of gamma into (g', g' g0) pairs in input order; the rest become
// anisotropic, which needs g0 in T and eps = +1. Pairs need g0^2 = 1.
std::optional<Admissible> check_admissible(const DegreeGroup& G, const std::vector<Degree>& gamma, int eps = 1);

struct InvolutionSpec {
  Involution psi0;
  int eps = 1;
  int m = 0, s = 0;
  std::vector<Degree> gamma;  // ordered g_1..g_m, g'_{m+1}..g'_s, g''_{m+1}..g''_s
};

// A degree-inverting involution of D usable with g0: for m > 0 it also fixes X_g0.
Involution choose_psi0(const TwistedAlgebra& D, const G0Model& g0, bool fix_g0);

// Checks the spec invariants and returns the Gram matrix of the canonical form.
DMatrix build_phi(const GradedMatrixSetting& R, const InvolutionSpec& spec);

// psi(X) = Phi^-1 psi0(X^t) Phi.
struct MatrixInvolution {
  Involution psi0;
  DMatrix phi;
  DMatrix phi_inv;

  DMatrix operator()(const DMatrix& X) const;
};

MatrixInvolution involution_from_phi(const DMatrix& phi, const Involution& psi0);
// psi^2 = id on every homogeneous unit.
bool is_involutive(const MatrixInvolution& psi);

struct DegreeWitness {
  std::size_t i, j;
  Elem u;
  std::string detail;
};

// Empty when every homogeneous unit e_ij (x) X_u of degree g is sent into degree g^-1.
std::optional<DegreeWitness> degree_inverting_witness(const GradedMatrixSetting& R, const MatrixInvolution& psi);
bool is_degree_inverting(const GradedMatrixSetting& R, const MatrixInvolution& psi);

// Images of the homogeneous units, indexed ((i * k) + j) * |T| + u.
struct UnitImages {
  std::size_t k = 0;
  std::vector<DMatrix> images;

  const DMatrix& at(std::size_t i, std::size_t j, Elem u, int n) const {
    return images[(i * k + j) * static_cast<std::size_t>(n) + u];
  }
};

UnitImages unit_images(const TwistedAlgebra& D, std::size_t k, const MatrixInvolution& psi);

// Solves psi0(R^t) Phi = Phi psi(R). Throws NotOfFormError without a solution.
// The first nonzero entry (row-major) gets coefficient 1 on its first basis element.
// For non-central D the solutions are Z(D) Phi; the homogeneous one whose first
// nonzero entry sits on the earliest X_t is returned.
DMatrix form_from_involution(const TwistedAlgebra& D, const UnitImages& psi, const Involution& psi0);

// psi0(Phi^t) = eps Phi; throws NotInvolutive otherwise.
int epsilon_of_form(const DMatrix& phi, const Involution& psi0);

struct OrthogonalBasis {
  enum class Label { Anisotropic, PairFirst, PairSecond };
  DMatrix change;  // columns are the new basis vectors
  std::vector<Label> labels;
  std::vector<Degree> degrees;
  DMatrix gram;    // psi0(P^t) Phi P
  int m = 0, s = 0, eps = 1;
};

OrthogonalBasis orthogonalize(const GradedMatrixSetting& R, const DMatrix& phi, const Involution& psi0);

// Random invertible P that is homogeneous of degree 1 (entries of degree gamma_i^-1 gamma_j).
DMatrix random_homogeneous_congruence(const GradedMatrixSetting& R, std::uint64_t seed);

// Text format: "k=<k> T=<order>", then one line per unit "i j u | d_00 ; d_01 ; ..."
// (0-based, entries row-major). An entry is "0" or terms "coefficient@element" joined by ",".
std::string write_unit_images(const TwistedAlgebra& D, const UnitImages& psi);
UnitImages parse_unit_images(const TwistedAlgebra& D, std::string_view text, const std::string& source);

}  // namespace gia
