#include "gia/cocycles.hpp"

#include <algorithm>
#include <deque>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "gia/errors.hpp"

namespace gia {

using zmod::residue;

namespace {

void require_same(const Cocycle& a, const Cocycle& b, const char* op) {
  if (!(a.group == b.group) || a.N != b.N)
    throw DomainError(std::string(op) + ": cocycles live on different groups or moduli (N=" +
                      std::to_string(a.N) + " vs " + std::to_string(b.N) + ")");
}

void require_shape(const Cocycle& s) {
  const auto n = static_cast<std::size_t>(s.group.order());
  if (s.table.size() != n * n)
    throw DomainError("cocycle table has " + std::to_string(s.table.size()) + " entries, expected " +
                      std::to_string(n * n));
  if (s.N < 1) throw DomainError("cocycle modulus must be positive");
}

std::size_t idx(const Group& T, Elem u, Elem v) { return static_cast<std::size_t>(u) * T.order() + v; }

Cocycle from_vec(const Group& T, std::int64_t N, zmod::Vec v) { return Cocycle{T, N, std::move(v)}; }

}  // namespace

Cocycle trivial_cocycle(const Group& T, std::int64_t N) {
  if (N < 1) throw DomainError("N must be positive");
  return Cocycle{T, N, std::vector<std::int64_t>(static_cast<std::size_t>(T.order()) * T.order(), 0)};
}

ExponentMap zero_map(const Group& T, std::int64_t N) {
  return ExponentMap{T, N, std::vector<std::int64_t>(T.order(), 0)};
}

std::optional<std::array<Elem, 3>> cocycle_violation(const Cocycle& s) {
  require_shape(s);
  const Group& T = s.group;
  const int n = T.order();
  for (Elem u = 0; u < n; ++u)
    for (Elem v = 0; v < n; ++v) {
      const Elem uv = T.mul(u, v);
      for (Elem w = 0; w < n; ++w) {
        std::int64_t lhs = s.at(u, v) + s.at(uv, w);
        std::int64_t rhs = s.at(u, T.mul(v, w)) + s.at(v, w);
        if (residue(lhs - rhs, s.N) != 0) return std::array<Elem, 3>{u, v, w};
      }
    }
  return std::nullopt;
}

bool is_cocycle(const Cocycle& s) { return !cocycle_violation(s).has_value(); }

Cocycle coboundary(const ExponentMap& lambda) {
  const Group& T = lambda.group;
  if (lambda.values.size() != static_cast<std::size_t>(T.order()))
    throw DomainError("exponent map has wrong length");
  Cocycle out = trivial_cocycle(T, lambda.N);
  for (Elem u = 0; u < T.order(); ++u)
    for (Elem v = 0; v < T.order(); ++v)
      out.at(u, v) = residue(lambda.values[u] + lambda.values[v] - lambda.values[T.mul(u, v)], lambda.N);
  return out;
}

Cocycle bar(const Cocycle& s) {
  require_shape(s);
  const Group& T = s.group;
  Cocycle out = trivial_cocycle(T, s.N);
  for (Elem u = 0; u < T.order(); ++u)
    for (Elem v = 0; v < T.order(); ++v) out.at(u, v) = s.at(T.inv(v), T.inv(u));
  return out;
}

ExponentMap bar_witness(const Cocycle& s) {
  require_shape(s);
  ExponentMap l = zero_map(s.group, s.N);
  const Elem one = s.group.identity();
  for (Elem u = 0; u < s.group.order(); ++u) l.values[u] = residue(s.at(u, s.group.inv(u)) + s.at(one, one), s.N);
  return l;
}

Cocycle cocycle_combine(const Cocycle& a, const Cocycle& b, std::int64_t ea, std::int64_t eb) {
  require_same(a, b, "cocycle_combine");
  Cocycle out = a;
  for (std::size_t i = 0; i < out.table.size(); ++i)
    out.table[i] = residue(residue(ea, a.N) * a.table[i] + residue(eb, a.N) * b.table[i], a.N);
  return out;
}

Cocycle with_modulus(const Cocycle& s, std::int64_t M) {
  if (M < 1 || M % s.N != 0)
    throw DomainError("cannot rewrite mu_" + std::to_string(s.N) + " values with modulus " + std::to_string(M));
  Cocycle out = s;
  out.N = M;
  for (auto& x : out.table) x = x * (M / s.N);
  return out;
}

std::pair<Cocycle, ExponentMap> normalize(const Cocycle& s) {
  require_shape(s);
  const Group& T = s.group;
  const Elem one = T.identity();
  // sigma(u,1) = sigma(1,1) for any cocycle, so a constant map clears the border.
  ExponentMap l = zero_map(T, s.N);
  for (Elem u = 0; u < T.order(); ++u) l.values[u] = residue(-s.at(u, one), s.N);
  Cocycle d = coboundary(l);
  return {cocycle_combine(s, d, 1, 1), l};
}

std::int64_t effective_modulus(const Group& T, std::int64_t N) { return N * T.exponent(); }

std::optional<ExponentMap> are_cohomologous(const Cocycle& a, const Cocycle& b) {
  require_same(a, b, "are_cohomologous");
  require_shape(a);
  const Group& T = a.group;
  const int n = T.order();
  const std::int64_t M = T.exponent();
  const std::int64_t L = a.N * M;
  zmod::Matrix A(static_cast<std::size_t>(n) * n, n, L);
  zmod::Vec rhs(static_cast<std::size_t>(n) * n);
  for (Elem u = 0; u < n; ++u)
    for (Elem v = 0; v < n; ++v) {
      std::size_t r = idx(T, u, v);
      A.add(r, u, 1);
      A.add(r, v, 1);
      A.add(r, T.mul(u, v), -1);
      rhs[r] = residue(M * (a.at(u, v) - b.at(u, v)), L);
    }
  auto sol = zmod::solve(A, rhs);
  if (!sol) return std::nullopt;
  return ExponentMap{T, L, sol->particular};
}

Bicharacter bicharacter_of(const Cocycle& s) {
  require_shape(s);
  if (!s.group.is_commutative())
    throw UnsupportedError("bicharacter_of requires an abelian group; " + s.group.name() + " is not");
  const Group& T = s.group;
  Bicharacter b{T, s.N, std::vector<std::int64_t>(s.table.size(), 0)};
  for (Elem u = 0; u < T.order(); ++u)
    for (Elem v = 0; v < T.order(); ++v) b.table[idx(T, u, v)] = residue(s.at(u, v) - s.at(v, u), s.N);
  return b;
}

bool is_bicharacter(const Bicharacter& b) {
  const Group& T = b.group;
  const int n = T.order();
  if (b.table.size() != static_cast<std::size_t>(n) * n || !T.is_commutative()) return false;
  for (Elem u = 0; u < n; ++u) {
    if (residue(b.at(u, u), b.N) != 0) return false;
    for (Elem v = 0; v < n; ++v)
      for (Elem w = 0; w < n; ++w) {
        if (residue(b.at(T.mul(u, v), w) - b.at(u, w) - b.at(v, w), b.N) != 0) return false;
        if (residue(b.at(u, T.mul(v, w)) - b.at(u, v) - b.at(u, w), b.N) != 0) return false;
      }
  }
  return true;
}

bool is_nondegenerate(const Bicharacter& b) {
  const Group& T = b.group;
  for (Elem u = 0; u < T.order(); ++u) {
    if (u == T.identity()) continue;
    bool radical = true;
    for (Elem v = 0; v < T.order() && radical; ++v) radical = residue(b.at(u, v), b.N) == 0;
    if (radical) return false;
  }
  return true;
}

bool has_square_trivial_class(const Cocycle& s) {
  return are_cohomologous(cocycle_combine(s, s, 1, 1), trivial_cocycle(s.group, s.N)).has_value();
}

Cocycle standard_cocycle(const Bicharacter& beta) {
  const Group& T = beta.group;
  const auto& f = T.factors();
  Cocycle out = trivial_cocycle(T, beta.N);
  for (Elem u = 0; u < T.order(); ++u) {
    auto eu = T.exponents(u);
    for (Elem v = 0; v < T.order(); ++v) {
      auto ev = T.exponents(v);
      std::int64_t acc = 0;
      for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = i + 1; j < f.size(); ++j)
          acc += beta.at(T.generator(i), T.generator(j)) * eu[i] * ev[j];
      out.at(u, v) = residue(acc, beta.N);
    }
  }
  return out;
}

std::vector<Cocycle> h2_abelian(const Group& T, std::int64_t N) {
  if (!T.is_abelian_spec())
    throw UnsupportedError("h2_abelian requires a group given by invariant factors");
  if (N < 1 || N % T.exponent() != 0)
    throw DomainError("N=" + std::to_string(N) + " is not a multiple of the exponent " +
                      std::to_string(T.exponent()) + " of " + T.name() + "; classes would be missed");
  const auto& f = T.factors();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::int64_t> step, count;
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      std::int64_t g = std::gcd(f[i], f[j]);
      pairs.emplace_back(i, j);
      step.push_back(N / g);
      count.push_back(g);
    }
  std::vector<Cocycle> out;
  std::vector<std::int64_t> c(pairs.size(), 0);
  while (true) {
    Cocycle s = trivial_cocycle(T, N);
    for (Elem u = 0; u < T.order(); ++u) {
      auto eu = T.exponents(u);
      for (Elem v = 0; v < T.order(); ++v) {
        auto ev = T.exponents(v);
        std::int64_t acc = 0;
        for (std::size_t p = 0; p < pairs.size(); ++p)
          acc += c[p] * step[p] * eu[pairs[p].first] * ev[pairs[p].second];
        s.at(u, v) = residue(acc, N);
      }
    }
    out.push_back(std::move(s));
    std::size_t p = pairs.size();
    while (p > 0) {
      --p;
      if (++c[p] < count[p]) break;
      c[p] = 0;
      if (p == 0) return out;
    }
    if (pairs.empty()) return out;
  }
}

zmod::Howell cocycle_space(const Group& T, std::int64_t N) {
  const int n = T.order();
  const std::size_t n2 = static_cast<std::size_t>(n) * n;
  zmod::Matrix A(n2 * n, n2, N);
  std::size_t r = 0;
  for (Elem u = 0; u < n; ++u)
    for (Elem v = 0; v < n; ++v) {
      const Elem uv = T.mul(u, v);
      for (Elem w = 0; w < n; ++w, ++r) {
        A.add(r, idx(T, u, v), 1);
        A.add(r, idx(T, uv, w), 1);
        A.add(r, idx(T, u, T.mul(v, w)), -1);
        A.add(r, idx(T, v, w), -1);
      }
    }
  return zmod::Howell(n2, N, zmod::kernel(A));
}

zmod::Howell effective_coboundaries(const Group& T, std::int64_t N) {
  const int n = T.order();
  const std::size_t n2 = static_cast<std::size_t>(n) * n;
  zmod::Howell h(n2, N);
  for (Elem w = 0; w < n; ++w) {
    ExponentMap e = zero_map(T, N);
    e.values[w] = 1;
    h.add(coboundary(e).table);
  }
  // Homomorphisms chi: T -> Z_M lift to maps whose coboundary is M times a mu_N-valued cocycle.
  const std::int64_t M = T.exponent();
  zmod::Matrix hom(n2, n, M);
  for (Elem u = 0; u < n; ++u)
    for (Elem v = 0; v < n; ++v) {
      std::size_t r = idx(T, u, v);
      hom.add(r, u, 1);
      hom.add(r, v, 1);
      hom.add(r, T.mul(u, v), -1);
    }
  for (const auto& chi : zmod::kernel(hom)) {
    zmod::Vec d(n2);
    for (Elem u = 0; u < n; ++u)
      for (Elem v = 0; v < n; ++v) {
        std::int64_t c = chi[u] + chi[v] - chi[T.mul(u, v)];
        d[idx(T, u, v)] = residue(c / M, N);
      }
    h.add(std::move(d));
  }
  return h;
}

std::vector<Cocycle> cohomology_classes(const Group& T, std::int64_t N) {
  const zmod::Howell z2 = cocycle_space(T, N);
  const zmod::Howell b2 = effective_coboundaries(T, N);
  const auto gens = z2.rows();
  std::set<zmod::Vec> seen;
  std::deque<zmod::Vec> queue;
  zmod::Vec zero = b2.reduce(zmod::Vec(z2.dim(), 0));
  seen.insert(zero);
  queue.push_back(zero);
  while (!queue.empty()) {
    zmod::Vec cur = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      zmod::Vec next(cur.size());
      for (std::size_t i = 0; i < cur.size(); ++i) next[i] = residue(cur[i] + g[i], N);
      next = b2.reduce(std::move(next));
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  std::vector<Cocycle> out;
  for (const auto& v : seen) out.push_back(from_vec(T, N, v));
  return out;
}

Cocycle parse_cocycle(std::string_view text, const std::string& source, const std::string& base_dir) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  std::optional<Group> group;
  std::int64_t N = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      auto eq = tok.find('=');
      if (eq == std::string::npos)
        throw ParseError(source, lineno, "expected header 'group=<literal> N=<int>'");
      std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
      if (key == "group") {
        try {
          if (val.size() > 7 && val.substr(val.size() - 7) == ".cayley") {
            std::filesystem::path p(val);
            if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
            group = Group::load_cayley(p.string());
          } else {
            group = Group::parse_literal(val);
          }
        } catch (const ParseError& e) {
          throw ParseError(source, lineno, e.what());
        }
      } else if (key == "N") {
        try {
          N = std::stoll(val);
        } catch (const std::logic_error&) {
          throw ParseError(source, lineno, "N must be an integer, got '" + val + "'");
        }
      } else {
        throw ParseError(source, lineno, "unknown header key '" + key + "' (expected group= and N=)");
      }
    }
    break;
  }
  if (!group || N < 1) throw ParseError(source, lineno, "expected header 'group=<literal> N=<positive int>'");
  Cocycle s = trivial_cocycle(*group, N);
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    long long u, v, e;
    std::string extra;
    if (!(ls >> u >> v >> e) || (ls >> extra))
      throw ParseError(source, lineno, "expected '<u-index> <v-index> <exponent>'");
    if (!group->contains(static_cast<Elem>(u)) || !group->contains(static_cast<Elem>(v)))
      throw ParseError(source, lineno, "element index out of range for group of order " +
                                           std::to_string(group->order()));
    s.at(static_cast<Elem>(u), static_cast<Elem>(v)) = residue(e, N);
  }
  return s;
}

Cocycle load_cocycle(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError(path, 0, "cannot open file");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_cocycle(ss.str(), path, std::filesystem::path(path).parent_path().string());
}

std::string write_cocycle(const Cocycle& s) {
  std::ostringstream out;
  std::string g = s.group.is_abelian_spec() ? s.group.name() : s.group.name() + ".cayley";
  out << "group=" << g << " N=" << s.N << "\n";
  for (Elem u = 0; u < s.group.order(); ++u)
    for (Elem v = 0; v < s.group.order(); ++v) out << u << " " << v << " " << s.at(u, v) << "\n";
  return out.str();
}

}  // namespace gia
