#include "gia/realization.hpp"

#include <map>
#include <numeric>

#include "gia/errors.hpp"

namespace gia {

using zmod::residue;

std::pair<CycMatrix, CycMatrix> epsilon_generators(int n, int k) {
  if (n < 1) throw DomainError("epsilon_generators requires n >= 1");
  if (std::gcd(k, n) != 1) throw DomainError("eps = zeta_n^k must be primitive");
  CycMatrix X(n, n), Y(n, n);
  for (int i = 0; i < n; ++i) {
    X(i, (i + 1) % n) = 1;
    Y(i, i) = CycRational::root_of_unity(n, static_cast<long long>(k) * (n - 1 - i));
  }
  return {X, Y};
}

namespace {

std::int64_t root_order(std::int64_t x, std::int64_t N) { return N / std::gcd(residue(x, N), N); }

}  // namespace

HyperbolicDecomposition hyperbolic_decompose(const Bicharacter& beta) {
  if (!is_bicharacter(beta)) throw DomainError("input is not an alternating bicharacter");
  if (!is_nondegenerate(beta)) throw NotCentral("beta is degenerate: the graded division algebra is not central");
  const Group& T = beta.group;
  std::vector<Elem> S;
  for (Elem u = 0; u < T.order(); ++u) S.push_back(u);
  HyperbolicDecomposition out;
  while (S.size() > 1) {
    Elem a = S[0];
    for (Elem u : S)
      if (T.element_order(u) > T.element_order(a)) a = u;
    const int m = T.element_order(a);
    std::optional<Elem> b;
    for (Elem u : S)
      if (root_order(beta.at(a, u), beta.N) == m) {
        b = u;
        break;
      }
    if (!b) throw DomainError("internal: no hyperbolic partner although beta is nondegenerate");
    out.pairs.push_back(HyperbolicPair{a, *b, m});
    std::vector<Elem> rest;
    for (Elem u : S)
      if (residue(beta.at(a, u), beta.N) == 0 && residue(beta.at(*b, u), beta.N) == 0) rest.push_back(u);
    if (rest.size() * static_cast<std::size_t>(m) * m != S.size())
      throw DomainError("internal: orthogonal complement has the wrong size");
    S = std::move(rest);
  }
  return out;
}

Cocycle induced_cocycle(const Group& T, const std::vector<CycMatrix>& basis, int order) {
  Cocycle s = trivial_cocycle(T, order);
  for (Elem u = 0; u < T.order(); ++u)
    for (Elem v = 0; v < T.order(); ++v) {
      CycMatrix p = basis[u] * basis[v];
      const CycMatrix& q = basis[T.mul(u, v)];
      std::size_t r = 0, c = 0;
      bool found = false;
      for (r = 0; r < q.rows() && !found; ++r)
        for (c = 0; c < q.cols() && !found; ++c) found = !q(r, c).is_zero();
      if (!found) throw DomainError("basis matrix is zero");
      CycRational ratio = p(r - 1, c - 1) / q(r - 1, c - 1);
      if (!(p == q.scaled(ratio))) throw DomainError("basis is not multiplicative up to scalars");
      int e = 0;
      if (!root_of_unity_exponent(ratio, order, e))
        throw DomainError("structure constant " + ratio.str() + " is not a root of unity of order " +
                          std::to_string(order));
      s.at(u, v) = e;
    }
  return s;
}

GradedMatrixAlgebra realize_division_algebra(const Bicharacter& beta) {
  GradedMatrixAlgebra A;
  A.group = beta.group;
  A.decomposition = hyperbolic_decompose(beta);
  const Group& T = beta.group;
  for (const auto& p : A.decomposition.pairs) {
    A.n *= p.m;
    A.order = std::lcm(A.order, p.m);
  }
  // Generators per pair, eps = beta(a, b)^-1 so that the realized bicharacter is beta.
  std::vector<std::pair<CycMatrix, CycMatrix>> gens;
  for (const auto& p : A.decomposition.pairs) {
    std::int64_t e = residue(beta.at(p.a, p.b), beta.N);  // beta(a,b) = zeta_N^e, order m
    std::int64_t k = residue(-e / (beta.N / p.m), p.m);
    gens.push_back(epsilon_generators(p.m, static_cast<int>(k)));
  }
  A.basis.assign(T.order(), CycMatrix());
  std::vector<int> pq(2 * A.decomposition.pairs.size(), 0);
  std::size_t filled = 0;
  while (true) {
    Elem t = T.identity();
    CycMatrix B = CycMatrix::identity(1);
    for (std::size_t i = 0; i < A.decomposition.pairs.size(); ++i) {
      const auto& p = A.decomposition.pairs[i];
      t = T.mul(t, T.mul(T.pow(p.a, pq[2 * i]), T.pow(p.b, pq[2 * i + 1])));
      B = B.kron(gens[i].first.pow(pq[2 * i]) * gens[i].second.pow(pq[2 * i + 1]));
    }
    if (A.basis[t].rows() != 0) throw DomainError("internal: hyperbolic pairs do not generate T freely");
    A.basis[t] = std::move(B);
    ++filled;
    std::size_t i = pq.size();
    bool done = true;
    while (i > 0) {
      --i;
      if (++pq[i] < A.decomposition.pairs[i / 2].m) {
        done = false;
        break;
      }
      pq[i] = 0;
    }
    if (done) break;
  }
  if (filled != static_cast<std::size_t>(T.order())) throw DomainError("internal: realization misses elements");
  A.cocycle = induced_cocycle(T, A.basis, A.order);
  return A;
}

bool same_bicharacter(const Bicharacter& b1, const Bicharacter& b2) {
  if (!(b1.group == b2.group)) return false;
  const std::int64_t L = std::lcm(b1.N, b2.N);
  for (std::size_t i = 0; i < b1.table.size(); ++i)
    if (residue(b1.table[i] * (L / b1.N) - b2.table[i] * (L / b2.N), L) != 0) return false;
  return true;
}

Degree elementary_degree(const DegreeGroup& G, const std::vector<Degree>& gamma, std::size_t i, std::size_t j,
                         Elem d_degree) {
  if (i >= gamma.size() || j >= gamma.size())
    throw DomainError("matrix unit index out of range for a module of rank " + std::to_string(gamma.size()));
  return G.mul(G.mul(gamma[i], G.from_t(d_degree)), G.inv(gamma[j]));
}

}  // namespace gia
