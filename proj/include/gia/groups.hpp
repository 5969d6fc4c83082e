#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gia {

// Elements are indices into the Cayley table. For groups given by invariant
// factors the index is the mixed-radix encoding of the exponent tuple with the
// first factor most significant, so index order is lexicographic order.
using Elem = int;

class Group {
 public:
  Group();  // trivial group

  static Group abelian(std::vector<int> factors);
  static Group from_table(std::vector<std::vector<int>> table, int identity,
                          std::string name = "table");

  // "Z2xZ2", "Z4xZ3", "Z1" (trivial).
  static Group parse_literal(std::string_view literal);
  // Cayley-table file contents: "order=<n> identity=<i>" then n rows.
  static Group parse_cayley(std::string_view text, const std::string& source,
                            std::string name);
  static Group load_cayley(const std::string& path);
  std::string to_cayley() const;

  int order() const { return n_; }
  Elem identity() const { return identity_; }
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem pow(Elem a, long long k) const;
  bool contains(Elem a) const { return a >= 0 && a < n_; }

  // True when the group was given by invariant factors.
  bool is_abelian_spec() const { return !table_given_; }
  // True when the multiplication is commutative (any representation).
  bool is_commutative() const { return commutative_; }

  const std::vector<int>& factors() const;
  std::vector<int> exponents(Elem a) const;
  Elem from_exponents(std::span<const int> e) const;
  Elem generator(int i) const;

  int element_order(Elem a) const;
  // lcm of element orders.
  int exponent() const { return exponent_; }

  const std::string& name() const { return name_; }
  std::string element_name(Elem a) const;
  // Words such as "a^2*b", "b^-1", "g", "1", "(1,0)", or a bare index for table groups.
  Elem parse_element(std::string_view word) const;

  bool operator==(const Group& other) const;

 private:
  void finish();
  void check(Elem a) const;

  int n_ = 1;
  Elem identity_ = 0;
  bool table_given_ = false;
  bool commutative_ = true;
  int exponent_ = 1;
  std::vector<int> factors_;
  std::shared_ptr<const std::vector<int>> table_;
  std::shared_ptr<const std::vector<int>> inverse_;
  std::string name_ = "Z1";
};

// A character of an abelian group given by invariant factors:
// chi(u) = zeta_M^(sum_i e_i * u_i * (M / f_i)), M = lcm of the factors.
struct Character {
  std::vector<int> exponents;
  bool operator==(const Character&) const = default;
};

// Exponent of chi(u) in Z_M, M = T.exponent().
int character_value(const Group& T, const Character& chi, Elem u);
std::vector<Character> all_characters(const Group& T);
// chi = phi^2 for some character phi.
bool is_square_character(const Group& T, const Character& chi);
// |T^/S(T^)|; equals 2^(number of even invariant factors).
int squares_index(const Group& T);
bool is_elementary_2_group(const Group& T);

}  // namespace gia
