#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gia/groups.hpp"

namespace gia {

// Upper triangular n x n matrix over Q (0-based indices).
class UTMatrix {
 public:
  UTMatrix() = default;
  explicit UTMatrix(int n);

  static UTMatrix identity(int n);
  static UTMatrix unit(int n, int i, int j);

  int n() const { return n_; }
  const mpq_class& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  // Writing below the diagonal throws.
  void set(int i, int j, const mpq_class& v);

  UTMatrix operator*(const UTMatrix& o) const;
  UTMatrix operator+(const UTMatrix& o) const;
  UTMatrix operator-(const UTMatrix& o) const;
  UTMatrix scaled(const mpq_class& c) const;
  bool operator==(const UTMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }
  bool is_zero() const;

  std::optional<UTMatrix> inverse() const;
  std::string str() const;

 private:
  int n_ = 0;
  std::vector<mpq_class> a_;
};

// "n=<k>", then the upper triangle row-major (k(k+1)/2 scalars, whitespace separated).
UTMatrix parse_ut_matrix(std::string_view text, const std::string& source);
UTMatrix load_ut_matrix(const std::string& path);
std::string write_ut_matrix(const UTMatrix& u);

// deg e_{i,i+1} = eta[i]; deg e_ij = eta[i] ... eta[j-1].
struct UTGrading {
  Group group;
  std::vector<Elem> eta;

  int n() const { return static_cast<int>(eta.size()) + 1; }
  Elem unit_degree(int i, int j) const;
};

// eta given as comma separated element words; must have n - 1 entries.
UTGrading parse_ut_grading(const Group& G, int n, std::string_view eta);

enum class UTBase { Tau, S };
std::string base_name(UTBase b);

// eta[i] = eta[n-2-i]^-1 for all i.
bool admits_degree_inverting(const UTGrading& g);

// tau(x)_ij = x_{n-1-j, n-1-i}; s(x) = D tau(x) D with D = diag(1,..,1,-1,..,-1), n even.
UTMatrix apply_canonical(UTBase base, const UTMatrix& x);
UTMatrix symplectic_diagonal(int n);

// Every matrix unit is sent into the inverse degree.
bool canonical_is_degree_inverting(UTBase base, const UTGrading& g);

bool is_homogeneous_degree_one(const UTMatrix& u, const UTGrading& g);

// v with u = v base(v), from the block recipe. Requires base(u) = u, u invertible and,
// for odd n, the middle diagonal entry equal to 1.
UTMatrix factor_u(const UTMatrix& u, UTBase base);

struct UTClassification {
  UTBase type;
  UTMatrix u;  // normalized: rho = Int(u) o type, type(u) = u
  UTMatrix v;  // u = v type(v), and Int(v) conjugates type into rho
};

// rho = Int(u) o base.
UTClassification classify_involution(const UTMatrix& u, UTBase base, const UTGrading& g);

// Images of the units e_ij, i <= j, row-major.
struct UTAction {
  int n = 0;
  std::vector<UTMatrix> images;

  const UTMatrix& at(int i, int j) const;
};

UTAction action_of(const UTMatrix& u, UTBase base);
// u with rho = Int(u) o tau, solving rho(x) u = u tau(x) on units.
UTMatrix inner_part(const UTAction& rho);
UTClassification classify_involution(const UTAction& rho, const UTGrading& g);

// eta_i = h_i h_{i+1}^-1 for the grading deg e_ij = h_i h_j^-1.
UTGrading standard_to_elementary(const Group& G, const std::vector<Elem>& h);
// h_1 h_n^-1 = h_2 h_{n-1}^-1 = ... = h_n h_1^-1; needs a commutative group.
bool standard_condition(const Group& G, const std::vector<Elem>& h);

}  // namespace gia
