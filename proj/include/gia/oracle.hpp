#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "gia/cocycles.hpp"
#include "gia/twisted.hpp"
#include "gia/utn.hpp"

// Brute-force verifiers for the classification results, and the search for a
// non-abelian group of square order carrying an order-2 class with F^sigma T simple.
namespace gia::oracle {

inline constexpr std::uint64_t kDefaultGuard = 10'000'000;

// Calls f on every mu_N-valued cocycle (enumerated through the solution module of
// the cocycle equations). Returns the count. Throws ResourceError above the guard.
std::uint64_t enumerate_cocycles(const Group& T, std::int64_t N, const std::function<void(const Cocycle&)>& f,
                                 std::uint64_t guard = kDefaultGuard);

struct BruteH2 {
  std::uint64_t cocycles = 0;
  std::uint64_t coboundaries = 0;
  std::vector<Cocycle> representatives;  // first cocycle met in each class
};
// Explicit coset partition of all cocycles by the explicit coboundary set.
BruteH2 brute_h2(const Group& T, std::int64_t N, std::uint64_t guard = kDefaultGuard);

// Every mu (values in mu_L, L = N * exp T) making rho(X_u) = mu(u) X_{u^-1} an
// involutive anti-automorphism, checked directly on basis pairs.
std::vector<ExponentMap> brute_involutions(const TwistedAlgebra& A, std::uint64_t guard = kDefaultGuard);

// Every homomorphism T -> mu_L, found by search over maps.
std::vector<ExponentMap> brute_characters(const Group& T, std::int64_t L, std::uint64_t guard = kDefaultGuard);

// Classes of the given involutions under rho -> phi^-1 rho phi, phi ranging over
// all graded automorphisms X_u -> chi(u) X_u.
int brute_equivalence_classes(const TwistedAlgebra& A, const std::vector<ExponentMap>& involutions,
                              std::uint64_t guard = kDefaultGuard);

struct SimpleHit {
  Cocycle representative;
  int center_dimension;
};

struct SearchReport {
  std::string group;   // file stem
  std::string source;  // file path
  int order = 0;
  std::int64_t N = 0;
  bool searched = false;
  std::string skip_reason;  // "abelian", "order not a perfect square", "order exceeds max-order", or a guard message
  std::uint64_t classes_examined = 0;
  std::uint64_t order2_classes = 0;
  std::vector<SimpleHit> simple_hits;
};

// One report per *.cayley file in dir, in file-name order.
std::vector<SearchReport> search_question(int max_order, const std::string& dir,
                                          std::uint64_t guard = kDefaultGuard);
// The report for a single group.
SearchReport search_group(const Group& T, std::uint64_t guard = kDefaultGuard);
// Re-checks a hit: |T| = n^2, cocycle valid, [sigma]^2 = 1, center dimension 1.
bool verify_hit(const Group& T, const SimpleHit& hit);

// Searches invertible w in UT_n with entries in [-bound, bound] (trivial grading) such
// that Int(w) conjugates tau into s on every unit. Only a finite test set is covered.
std::optional<UTMatrix> tau_s_conjugator(int n, int bound);

}  // namespace gia::oracle
