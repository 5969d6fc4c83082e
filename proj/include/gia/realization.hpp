#pragma once

#include <utility>
#include <vector>

#include "gia/cocycles.hpp"
#include "gia/cycmatrix.hpp"
#include "gia/degrees.hpp"

namespace gia {

// X the cyclic shift, Y = diag(eps^(n-1), ..., eps, 1) with eps = zeta_n^k (k a unit mod n).
std::pair<CycMatrix, CycMatrix> epsilon_generators(int n, int k = 1);

struct HyperbolicPair {
  Elem a, b;
  int m;  // beta(a, b) is a primitive m-th root of unity
};

struct HyperbolicDecomposition {
  std::vector<HyperbolicPair> pairs;
};

// Greedy: a of maximal order, first b with beta(a, b) of that order, then the
// beta-orthogonal complement. Throws NotCentral for degenerate beta.
HyperbolicDecomposition hyperbolic_decompose(const Bicharacter& beta);

struct GradedMatrixAlgebra {
  Group group;
  int n = 1;                     // matrix size
  int order = 1;                 // roots of unity used by the entries
  HyperbolicDecomposition decomposition;
  std::vector<CycMatrix> basis;  // indexed by T
  Cocycle cocycle;               // B_u B_v = sigma(u, v) B_uv, values in mu_order
};

GradedMatrixAlgebra realize_division_algebra(const Bicharacter& beta);

// Reads sigma from B_u B_v = sigma(u, v) B_uv; throws if the basis is not multiplicative.
Cocycle induced_cocycle(const Group& T, const std::vector<CycMatrix>& basis, int order);

// beta1 and beta2 agree as mu-valued functions (moduli may differ).
bool same_bicharacter(const Bicharacter& b1, const Bicharacter& b2);

// deg(e_ij (x) d) = gamma_i * deg(d) * gamma_j^-1 (0-based i, j).
Degree elementary_degree(const DegreeGroup& G, const std::vector<Degree>& gamma, std::size_t i, std::size_t j,
                         Elem d_degree);

}  // namespace gia
