#include "gia/groups.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>

#include "gia/errors.hpp"

namespace gia {

namespace {

std::string trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

Group::Group() { finish(); }

Group Group::abelian(std::vector<int> factors) {
  Group g;
  long long n = 1;
  for (int f : factors) {
    if (f < 2) throw DomainError("invariant factor must be >= 2, got " + std::to_string(f));
    n *= f;
    if (n > (1 << 20)) throw DomainError("group order too large");
  }
  g.factors_ = std::move(factors);
  g.n_ = static_cast<int>(n);
  g.identity_ = 0;
  g.table_given_ = false;
  std::vector<int> table(static_cast<size_t>(n) * n);
  std::vector<int> ea, eb, ec(g.factors_.size());
  for (int a = 0; a < g.n_; ++a) {
    ea = g.exponents(a);
    for (int b = 0; b < g.n_; ++b) {
      eb = g.exponents(b);
      for (size_t i = 0; i < ec.size(); ++i) ec[i] = (ea[i] + eb[i]) % g.factors_[i];
      table[static_cast<size_t>(a) * n + b] = g.from_exponents(ec);
    }
  }
  g.table_ = std::make_shared<const std::vector<int>>(std::move(table));
  if (g.factors_.empty()) {
    g.name_ = "Z1";
  } else {
    std::string name;
    for (size_t i = 0; i < g.factors_.size(); ++i) {
      if (i) name += "x";
      name += "Z" + std::to_string(g.factors_[i]);
    }
    g.name_ = name;
  }
  g.finish();
  return g;
}

Group Group::from_table(std::vector<std::vector<int>> rows, int identity, std::string name) {
  const int n = static_cast<int>(rows.size());
  if (n < 1) throw DomainError("Cayley table must be non-empty");
  if (identity < 0 || identity >= n) throw DomainError("identity index out of range");
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(rows[a].size()) != n)
      throw DomainError("Cayley row " + std::to_string(a) + " has wrong length");
    std::vector<char> seen(n, 0);
    for (int b = 0; b < n; ++b) {
      int c = rows[a][b];
      if (c < 0 || c >= n) throw DomainError("Cayley entry out of range");
      if (seen[c]) throw DomainError("Cayley row " + std::to_string(a) + " is not a permutation");
      seen[c] = 1;
      table[static_cast<size_t>(a) * n + b] = c;
    }
  }
  for (int b = 0; b < n; ++b) {
    std::vector<char> seen(n, 0);
    for (int a = 0; a < n; ++a) {
      int c = table[static_cast<size_t>(a) * n + b];
      if (seen[c]) throw DomainError("Cayley column " + std::to_string(b) + " is not a permutation");
      seen[c] = 1;
    }
  }
  auto at = [&](int a, int b) { return table[static_cast<size_t>(a) * n + b]; };
  for (int a = 0; a < n; ++a)
    if (at(identity, a) != a || at(a, identity) != a)
      throw DomainError("identity index is not a two-sided identity");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (at(at(a, b), c) != at(a, at(b, c)))
          throw DomainError("Cayley table is not associative at (" + std::to_string(a) + "," +
                            std::to_string(b) + "," + std::to_string(c) + ")");
  Group g;
  g.n_ = n;
  g.identity_ = identity;
  g.table_given_ = true;
  g.factors_.clear();
  g.table_ = std::make_shared<const std::vector<int>>(std::move(table));
  g.name_ = std::move(name);
  g.finish();
  return g;
}

void Group::finish() {
  if (!table_) {
    table_ = std::make_shared<const std::vector<int>>(std::vector<int>{0});
  }
  std::vector<int> inverse(n_, -1);
  const auto& t = *table_;
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (t[static_cast<size_t>(a) * n_ + b] == identity_) {
        inverse[a] = b;
        break;
      }
  for (int a = 0; a < n_; ++a)
    if (inverse[a] < 0 || t[static_cast<size_t>(inverse[a]) * n_ + a] != identity_)
      throw DomainError("element " + std::to_string(a) + " has no two-sided inverse");
  inverse_ = std::make_shared<const std::vector<int>>(std::move(inverse));
  commutative_ = true;
  for (int a = 0; a < n_ && commutative_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (t[static_cast<size_t>(a) * n_ + b] != t[static_cast<size_t>(b) * n_ + a]) {
        commutative_ = false;
        break;
      }
  exponent_ = 1;
  for (int a = 0; a < n_; ++a) exponent_ = std::lcm(exponent_, element_order(a));
}

void Group::check(Elem a) const {
  if (!contains(a))
    throw DomainError("element " + std::to_string(a) + " not in group " + name_ + " of order " +
                      std::to_string(n_));
}

Elem Group::mul(Elem a, Elem b) const {
  check(a);
  check(b);
  return (*table_)[static_cast<size_t>(a) * n_ + b];
}

Elem Group::inv(Elem a) const {
  check(a);
  return (*inverse_)[a];
}

Elem Group::pow(Elem a, long long k) const {
  check(a);
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  Elem r = identity_;
  for (long long i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

const std::vector<int>& Group::factors() const {
  if (table_given_) throw UnsupportedError("group " + name_ + " is given by a Cayley table");
  return factors_;
}

std::vector<int> Group::exponents(Elem a) const {
  const auto& f = factors();
  check(a);
  std::vector<int> e(f.size());
  for (size_t i = f.size(); i-- > 0;) {
    e[i] = a % f[i];
    a /= f[i];
  }
  return e;
}

Elem Group::from_exponents(std::span<const int> e) const {
  const auto& f = factors();
  if (e.size() != f.size()) throw DomainError("exponent tuple has wrong length");
  Elem a = 0;
  for (size_t i = 0; i < f.size(); ++i) {
    if (e[i] < 0 || e[i] >= f[i]) throw DomainError("exponent out of range");
    a = a * f[i] + e[i];
  }
  return a;
}

Elem Group::generator(int i) const {
  const auto& f = factors();
  if (i < 0 || i >= static_cast<int>(f.size())) throw DomainError("generator index out of range");
  std::vector<int> e(f.size(), 0);
  e[i] = 1;
  return from_exponents(e);
}

int Group::element_order(Elem a) const {
  check(a);
  int k = 1;
  Elem x = a;
  while (x != identity_) {
    x = (*table_)[static_cast<size_t>(x) * n_ + a];
    ++k;
  }
  return k;
}

std::string Group::element_name(Elem a) const {
  check(a);
  if (a == identity_) return "1";
  if (table_given_) return "e" + std::to_string(a);
  auto e = exponents(a);
  std::string out;
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += static_cast<char>('a' + i);
    if (e[i] != 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

Elem Group::parse_element(std::string_view word_in) const {
  std::string word = trim(word_in);
  if (word.empty()) throw ParseError("empty group element");
  if (word.front() == '(') {
    if (word.back() != ')') throw ParseError("unterminated exponent tuple '" + word + "'");
    std::vector<int> e;
    std::stringstream ss(word.substr(1, word.size() - 2));
    std::string item;
    while (std::getline(ss, item, ',')) {
      std::string t = trim(item);
      try {
        size_t used = 0;
        e.push_back(std::stoi(t, &used));
        if (used != t.size()) throw std::invalid_argument(t);
      } catch (const std::logic_error&) {
        throw ParseError("bad exponent '" + t + "' in '" + word + "'");
      }
    }
    const auto& f = factors();
    if (e.size() != f.size()) throw ParseError("exponent tuple '" + word + "' has wrong length");
    for (size_t i = 0; i < e.size(); ++i) e[i] = ((e[i] % f[i]) + f[i]) % f[i];
    return from_exponents(e);
  }
  Elem result = identity_;
  size_t p = 0;
  while (p < word.size()) {
    char c = word[p];
    if (c == '*' || std::isspace(static_cast<unsigned char>(c))) {
      ++p;
      continue;
    }
    Elem base;
    if (c == '1' && (p + 1 == word.size() || !std::isdigit(static_cast<unsigned char>(word[p + 1])))) {
      base = identity_;
      ++p;
    } else if (table_given_ && c == 'e') {
      size_t q = p + 1;
      while (q < word.size() && std::isdigit(static_cast<unsigned char>(word[q]))) ++q;
      if (q == p + 1) {
        base = identity_;
      } else {
        base = std::stoi(word.substr(p + 1, q - p - 1));
        if (!contains(base)) throw ParseError("element index out of range in '" + word + "'");
      }
      p = q;
    } else if (!table_given_ && std::isalpha(static_cast<unsigned char>(c))) {
      int gi;
      if (c == 'g' && factors_.size() == 1) {
        gi = 0;
      } else {
        gi = c - 'a';
      }
      if (gi < 0 || gi >= static_cast<int>(factors_.size()))
        throw ParseError("unknown generator '" + std::string(1, c) + "' for group " + name_);
      base = generator(gi);
      ++p;
    } else {
      throw ParseError("unexpected character '" + std::string(1, c) + "' in element '" + word + "'");
    }
    long long k = 1;
    if (p < word.size() && word[p] == '^') {
      size_t q = p + 1;
      if (q < word.size() && (word[q] == '-' || word[q] == '+')) ++q;
      size_t digits = q;
      while (q < word.size() && std::isdigit(static_cast<unsigned char>(word[q]))) ++q;
      if (q == digits) throw ParseError("missing exponent in '" + word + "'");
      k = std::stoll(word.substr(p + 1, q - p - 1));
      p = q;
    }
    result = mul(result, pow(base, k));
  }
  return result;
}

bool Group::operator==(const Group& other) const {
  if (this == &other) return true;
  return n_ == other.n_ && identity_ == other.identity_ && table_given_ == other.table_given_ &&
         factors_ == other.factors_ && *table_ == *other.table_;
}

Group Group::parse_literal(std::string_view literal_in) {
  std::string literal = trim(literal_in);
  if (literal.empty()) throw ParseError("empty group literal; expected Z<n>(xZ<n>)*");
  std::vector<int> factors;
  std::stringstream ss(literal);
  std::string part;
  while (std::getline(ss, part, 'x')) {
    if (part.size() < 2 || part[0] != 'Z')
      throw ParseError("bad group literal '" + literal + "'; expected Z<n>(xZ<n>)*");
    int f;
    try {
      size_t used = 0;
      f = std::stoi(part.substr(1), &used);
      if (used != part.size() - 1) throw std::invalid_argument(part);
    } catch (const std::logic_error&) {
      throw ParseError("bad factor '" + part + "' in group literal '" + literal + "'");
    }
    if (f < 1) throw ParseError("factor must be positive in '" + literal + "'");
    if (f > 1) factors.push_back(f);
  }
  return abelian(std::move(factors));
}

Group Group::parse_cayley(std::string_view text, const std::string& source, std::string name) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  int order = -1, identity = -1;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::istringstream hs(t);
    std::string tok;
    while (hs >> tok) {
      auto eq = tok.find('=');
      if (eq == std::string::npos)
        throw ParseError(source, lineno, "expected header 'order=<n> identity=<i>'");
      std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
      try {
        if (key == "order")
          order = std::stoi(val);
        else if (key == "identity")
          identity = std::stoi(val);
        else
          throw ParseError(source, lineno, "unknown header key '" + key + "'");
      } catch (const std::logic_error&) {
        throw ParseError(source, lineno, "bad integer in header: '" + tok + "'");
      }
    }
    break;
  }
  if (order < 1 || identity < 0)
    throw ParseError(source, lineno, "expected header 'order=<n> identity=<i>'");
  std::vector<std::vector<int>> rows;
  while (static_cast<int>(rows.size()) < order && std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::istringstream rs(t);
    std::vector<int> row;
    std::string tok;
    while (rs >> tok) {
      try {
        size_t used = 0;
        row.push_back(std::stoi(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::logic_error&) {
        throw ParseError(source, lineno, "expected integer index, got '" + tok + "'");
      }
    }
    if (static_cast<int>(row.size()) != order)
      throw ParseError(source, lineno,
                       "expected " + std::to_string(order) + " indices, got " + std::to_string(row.size()));
    rows.push_back(std::move(row));
  }
  if (static_cast<int>(rows.size()) != order)
    throw ParseError(source, lineno, "expected " + std::to_string(order) + " table rows");
  try {
    return from_table(std::move(rows), identity, std::move(name));
  } catch (const DomainError& e) {
    throw ParseError(source, lineno, e.what());
  }
}

Group Group::load_cayley(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError(path, 0, "cannot open file");
  std::stringstream ss;
  ss << f.rdbuf();
  std::string stem = path;
  if (auto slash = stem.find_last_of('/'); slash != std::string::npos) stem = stem.substr(slash + 1);
  if (auto dot = stem.find_last_of('.'); dot != std::string::npos) stem = stem.substr(0, dot);
  return parse_cayley(ss.str(), path, stem);
}

std::string Group::to_cayley() const {
  std::string out = "order=" + std::to_string(n_) + " identity=" + std::to_string(identity_) + "\n";
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      if (b) out += " ";
      out += std::to_string((*table_)[static_cast<size_t>(a) * n_ + b]);
    }
    out += "\n";
  }
  return out;
}

int character_value(const Group& T, const Character& chi, Elem u) {
  const auto& f = T.factors();
  if (chi.exponents.size() != f.size()) throw DomainError("character has wrong arity");
  const int M = T.exponent();
  auto e = T.exponents(u);
  long long s = 0;
  for (size_t i = 0; i < f.size(); ++i) s += static_cast<long long>(chi.exponents[i]) * e[i] * (M / f[i]);
  return static_cast<int>(s % M);
}

std::vector<Character> all_characters(const Group& T) {
  const auto& f = T.factors();
  std::vector<Character> out;
  std::vector<int> e(f.size(), 0);
  while (true) {
    out.push_back(Character{e});
    size_t i = f.size();
    while (i > 0) {
      --i;
      if (++e[i] < f[i]) break;
      e[i] = 0;
      if (i == 0) return out;
    }
    if (f.empty()) return out;
  }
}

bool is_square_character(const Group& T, const Character& chi) {
  const auto& f = T.factors();
  if (chi.exponents.size() != f.size()) throw DomainError("character has wrong arity");
  for (size_t i = 0; i < f.size(); ++i)
    if (f[i] % 2 == 0 && chi.exponents[i] % 2 != 0) return false;
  return true;
}

int squares_index(const Group& T) {
  if (!T.is_abelian_spec())
    throw UnsupportedError("squares_index requires a group given by invariant factors");
  int r = 1;
  for (int f : T.factors())
    if (f % 2 == 0) r *= 2;
  return r;
}

bool is_elementary_2_group(const Group& T) {
  for (Elem a = 0; a < T.order(); ++a)
    if (T.mul(a, a) != T.identity()) return false;
  return true;
}

}  // namespace gia
