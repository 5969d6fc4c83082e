#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "gia/groups.hpp"

namespace gia {

// How the extra ambient symbol g0 relates to the support T.
struct G0Model {
  enum class Kind { InT, Formal, Free };
  Kind kind = Kind::Formal;
  Elem element = 0;   // Kind::InT: g0 = element of T
  int order = 2;      // Kind::Formal: g0 central of this order

  static G0Model in_t(Elem e) { return G0Model{Kind::InT, e, 1}; }
  static G0Model formal(int order = 2) { return G0Model{Kind::Formal, 0, order}; }
  static G0Model free() { return G0Model{Kind::Free, 0, 0}; }

  bool squares_to_one(const Group& T) const;
};

// Element t * g0^k of the ambient group T x <g0>. With g0 in T, k is always 0.
struct Degree {
  Elem t = 0;
  std::int64_t k = 0;
  bool operator==(const Degree&) const = default;
  auto operator<=>(const Degree&) const = default;
};

class DegreeGroup {
 public:
  DegreeGroup(Group T, G0Model g0);

  const Group& support() const { return T_; }
  const G0Model& g0_model() const { return g0_; }

  Degree one() const { return Degree{T_.identity(), 0}; }
  Degree from_t(Elem t) const { return Degree{t, 0}; }
  Degree g0() const;
  Degree mul(const Degree& a, const Degree& b) const;
  Degree inv(const Degree& a) const;
  bool in_t(const Degree& a) const { return a.k == 0; }

  // Words such as "a*g0", "g0^-1*b^2", "1", "e3*g0".
  Degree parse(std::string_view word) const;
  std::string str(const Degree& d) const;

 private:
  Degree normal(Elem t, std::int64_t k) const;

  Group T_;
  G0Model g0_;
};

}  // namespace gia
