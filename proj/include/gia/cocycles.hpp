#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gia/groups.hpp"
#include "gia/zmod.hpp"

namespace gia {

// sigma(u, v) = zeta_N^table[u*|T| + v].
struct Cocycle {
  Group group;
  std::int64_t N = 1;
  std::vector<std::int64_t> table;

  std::int64_t at(Elem u, Elem v) const { return table[static_cast<std::size_t>(u) * group.order() + v]; }
  std::int64_t& at(Elem u, Elem v) { return table[static_cast<std::size_t>(u) * group.order() + v]; }
  bool operator==(const Cocycle& o) const { return group == o.group && N == o.N && table == o.table; }
};

// lambda(u) = zeta_N^values[u].
struct ExponentMap {
  Group group;
  std::int64_t N = 1;
  std::vector<std::int64_t> values;

  bool operator==(const ExponentMap& o) const { return group == o.group && N == o.N && values == o.values; }
};

// beta(u, v) = zeta_N^table[u*|T| + v].
struct Bicharacter {
  Group group;
  std::int64_t N = 1;
  std::vector<std::int64_t> table;

  std::int64_t at(Elem u, Elem v) const { return table[static_cast<std::size_t>(u) * group.order() + v]; }
  bool operator==(const Bicharacter& o) const { return group == o.group && N == o.N && table == o.table; }
};

Cocycle trivial_cocycle(const Group& T, std::int64_t N);
ExponentMap zero_map(const Group& T, std::int64_t N);

bool is_cocycle(const Cocycle& s);
// First triple (row-major) where the cocycle identity fails.
std::optional<std::array<Elem, 3>> cocycle_violation(const Cocycle& s);

Cocycle coboundary(const ExponentMap& lambda);
// bar(sigma)(u, v) = sigma(v^-1, u^-1).
Cocycle bar(const Cocycle& s);
// lambda(u) = sigma(u, u^-1) sigma(1, 1); sigma * bar(sigma) = coboundary of this map.
// For normalized sigma the second factor is 1.
ExponentMap bar_witness(const Cocycle& s);
Cocycle cocycle_combine(const Cocycle& a, const Cocycle& b, std::int64_t ea, std::int64_t eb);
// The same values written with exponents modulo M (a multiple of N).
Cocycle with_modulus(const Cocycle& s, std::int64_t M);

// Cohomologous cocycle with trivial border, and lambda with result = coboundary(lambda) * sigma.
std::pair<Cocycle, ExponentMap> normalize(const Cocycle& s);

// Roots of unity needed to write every F^x-valued lambda whose coboundary lies
// in mu_N: N * exponent(T).
std::int64_t effective_modulus(const Group& T, std::int64_t N);

// lambda with a = coboundary(lambda) * b, where lambda takes values in mu_L,
// L = effective_modulus; lexicographically smallest exponent vector.
std::optional<ExponentMap> are_cohomologous(const Cocycle& a, const Cocycle& b);

Bicharacter bicharacter_of(const Cocycle& s);
bool is_bicharacter(const Bicharacter& b);
bool is_nondegenerate(const Bicharacter& b);
bool has_square_trivial_class(const Cocycle& s);

// Standard-form representatives sigma_beta(u, v) = sum_{i<j} b_ij u_i v_j, one per
// alternating bicharacter with values in mu_N.
std::vector<Cocycle> h2_abelian(const Group& T, std::int64_t N);
// The standard-form cocycle whose bicharacter is beta.
Cocycle standard_cocycle(const Bicharacter& beta);

// Z^2(T, mu_N) as a submodule of Z_N^(|T|^2).
zmod::Howell cocycle_space(const Group& T, std::int64_t N);
// Coboundaries of F^x-valued maps that land in mu_N.
zmod::Howell effective_coboundaries(const Group& T, std::int64_t N);
// One canonical representative per class of Z^2(T, mu_N) / effective coboundaries.
std::vector<Cocycle> cohomology_classes(const Group& T, std::int64_t N);

// File grammar: "group=<literal> N=<int>", then lines "<u> <v> <exponent>".
// A literal ending in ".cayley" is loaded relative to base_dir.
Cocycle parse_cocycle(std::string_view text, const std::string& source, const std::string& base_dir = ".");
Cocycle load_cocycle(const std::string& path);
std::string write_cocycle(const Cocycle& s);

}  // namespace gia
