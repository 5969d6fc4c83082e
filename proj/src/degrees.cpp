#include "gia/degrees.hpp"

#include <cctype>

#include "gia/errors.hpp"

namespace gia {

bool G0Model::squares_to_one(const Group& T) const {
  switch (kind) {
    case Kind::InT:
      return T.mul(element, element) == T.identity();
    case Kind::Formal:
      return order == 1 || order == 2;
    case Kind::Free:
      return false;
  }
  return false;
}

DegreeGroup::DegreeGroup(Group T, G0Model g0) : T_(std::move(T)), g0_(g0) {
  if (g0_.kind == G0Model::Kind::InT && !T_.contains(g0_.element))
    throw DomainError("g0 is not an element of " + T_.name());
  if (g0_.kind == G0Model::Kind::Formal && g0_.order < 1)
    throw DomainError("formal g0 must have positive order");
}

Degree DegreeGroup::normal(Elem t, std::int64_t k) const {
  if (g0_.kind == G0Model::Kind::Formal) k = ((k % g0_.order) + g0_.order) % g0_.order;
  return Degree{t, k};
}

Degree DegreeGroup::g0() const {
  if (g0_.kind == G0Model::Kind::InT) return Degree{g0_.element, 0};
  return normal(T_.identity(), 1);
}

Degree DegreeGroup::mul(const Degree& a, const Degree& b) const { return normal(T_.mul(a.t, b.t), a.k + b.k); }

Degree DegreeGroup::inv(const Degree& a) const { return normal(T_.inv(a.t), -a.k); }

Degree DegreeGroup::parse(std::string_view word) const {
  Degree d = one();
  std::string w(word);
  std::size_t p = 0;
  while (p <= w.size()) {
    std::size_t q = w.find('*', p);
    if (q == std::string::npos) q = w.size();
    std::string tok = w.substr(p, q - p);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.erase(tok.begin());
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.pop_back();
    if (tok.empty()) throw ParseError("empty factor in degree '" + w + "'");
    if (tok.rfind("g0", 0) == 0) {
      long long k = 1;
      if (tok.size() > 2) {
        if (tok[2] != '^') throw ParseError("bad g0 power in degree '" + w + "'");
        try {
          std::size_t used = 0;
          k = std::stoll(tok.substr(3), &used);
          if (used != tok.size() - 3) throw std::invalid_argument(tok);
        } catch (const std::logic_error&) {
          throw ParseError("bad g0 exponent in degree '" + w + "'");
        }
      }
      Degree g = g0();
      Degree pw = one();
      for (long long i = 0; i < (k < 0 ? -k : k); ++i) pw = mul(pw, g);
      d = mul(d, k < 0 ? inv(pw) : pw);
    } else {
      d = mul(d, from_t(T_.parse_element(tok)));
    }
    p = q + 1;
  }
  return d;
}

std::string DegreeGroup::str(const Degree& d) const {
  std::string t = T_.element_name(d.t);
  if (d.k == 0) return t;
  std::string g = d.k == 1 ? "g0" : "g0^" + std::to_string(d.k);
  return t == "1" ? g : t + "*" + g;
}

}  // namespace gia
