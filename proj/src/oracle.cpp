#include "gia/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <map>
#include <numeric>
#include <set>

#include "gia/errors.hpp"

namespace gia::oracle {

using zmod::residue;

namespace {

void guard_check(std::uint64_t needed, std::uint64_t guard, const std::string& what) {
  if (needed > guard)
    throw ResourceError(what + " needs " + std::to_string(needed) + " candidate evaluations, above the guard " +
                        std::to_string(guard));
}

// Depth-first search over maps T -> Z_L, index by index. accept(values, k) checks
// every constraint whose elements all have index <= k.
template <class Accept>
std::vector<ExponentMap> search_maps(const Group& T, std::int64_t L, std::uint64_t guard, const std::string& what,
                                     Accept accept) {
  const int n = T.order();
  std::vector<ExponentMap> out;
  std::vector<std::int64_t> vals(n, 0);
  std::uint64_t evaluations = 0;
  int k = 0;
  vals[0] = -1;
  while (k >= 0) {
    if (++vals[k] >= L) {
      --k;
      continue;
    }
    guard_check(++evaluations, guard, what);
    if (!accept(vals, k)) continue;
    if (k + 1 == n) {
      out.push_back(ExponentMap{T, L, vals});
      continue;
    }
    ++k;
    vals[k] = -1;
  }
  return out;
}

// Pairs (u, v) grouped by max(u, v, uv), so a constraint is checked once its last element is set.
std::vector<std::vector<std::pair<Elem, Elem>>> pairs_by_last(const Group& T) {
  std::vector<std::vector<std::pair<Elem, Elem>>> by(T.order());
  for (Elem u = 0; u < T.order(); ++u)
    for (Elem v = 0; v < T.order(); ++v) {
      Elem last = std::max({u, v, T.mul(u, v)});
      by[last].emplace_back(u, v);
    }
  return by;
}

}  // namespace

std::uint64_t enumerate_cocycles(const Group& T, std::int64_t N, const std::function<void(const Cocycle&)>& f,
                                 std::uint64_t guard) {
  const zmod::Howell z2 = cocycle_space(T, N);
  const std::uint64_t count = z2.size();
  guard_check(count, guard, "enumerating Z^2(" + T.name() + ", mu_" + std::to_string(N) + ")");
  z2.for_each([&](const zmod::Vec& v) {
    f(Cocycle{T, N, v});
    return true;
  });
  return count;
}

BruteH2 brute_h2(const Group& T, std::int64_t N, std::uint64_t guard) {
  BruteH2 out;
  std::vector<zmod::Vec> cocycles;
  out.cocycles = enumerate_cocycles(T, N, [&](const Cocycle& c) { cocycles.push_back(c.table); }, guard);
  const zmod::Howell b2 = effective_coboundaries(T, N);
  out.coboundaries = b2.size();
  guard_check(out.cocycles + out.coboundaries, guard, "coset partition for " + T.name());
  std::vector<zmod::Vec> boundaries;
  b2.for_each([&](const zmod::Vec& v) {
    boundaries.push_back(v);
    return true;
  });
  std::set<zmod::Vec> assigned;
  for (const auto& z : cocycles) {
    if (assigned.count(z)) continue;
    out.representatives.push_back(Cocycle{T, N, z});
    for (const auto& b : boundaries) {
      zmod::Vec s(z.size());
      for (std::size_t i = 0; i < z.size(); ++i) s[i] = residue(z[i] + b[i], N);
      assigned.insert(std::move(s));
    }
  }
  return out;
}

std::vector<ExponentMap> brute_involutions(const TwistedAlgebra& A, std::uint64_t guard) {
  const Group& T = A.group();
  const std::int64_t L = effective_modulus(T, A.N());
  const std::int64_t s = L / A.N();
  const Cocycle& sig = A.sigma();
  const auto by = pairs_by_last(T);
  return search_maps(T, L, guard, "involution search on " + T.name(),
                     [&](const std::vector<std::int64_t>& mu, int k) {
                       const Elem ik = T.inv(k);
                       if (ik <= k && residue(mu[k] + mu[ik], L) != 0) return false;
                       for (auto [u, v] : by[k]) {
                         // rho(X_u X_v) = sigma(u,v) mu(uv) X_{(uv)^-1}
                         // rho(X_v) rho(X_u) = mu(u) mu(v) sigma(v^-1,u^-1) X_{v^-1 u^-1}
                         std::int64_t lhs = s * sig.at(u, v) + mu[T.mul(u, v)];
                         std::int64_t rhs = mu[u] + mu[v] + s * sig.at(T.inv(v), T.inv(u));
                         if (residue(lhs - rhs, L) != 0) return false;
                       }
                       return true;
                     });
}

std::vector<ExponentMap> brute_characters(const Group& T, std::int64_t L, std::uint64_t guard) {
  std::vector<std::vector<std::pair<Elem, Elem>>> by(T.order());
  for (Elem u = 0; u < T.order(); ++u)
    for (Elem v = 0; v < T.order(); ++v) by[std::max({u, v, T.mul(u, v)})].emplace_back(u, v);
  return search_maps(T, L, guard, "character search on " + T.name(),
                     [&](const std::vector<std::int64_t>& chi, int k) {
                       for (auto [u, v] : by[k])
                         if (residue(chi[u] + chi[v] - chi[T.mul(u, v)], L) != 0) return false;
                       return true;
                     });
}

int brute_equivalence_classes(const TwistedAlgebra& A, const std::vector<ExponentMap>& involutions,
                              std::uint64_t guard) {
  if (involutions.empty()) throw DomainError("no involutions to partition");
  const Group& T = A.group();
  const std::int64_t L = involutions.front().N;
  const auto chars = brute_characters(T, L, guard);
  guard_check(static_cast<std::uint64_t>(chars.size()) * involutions.size(), guard, "conjugation search");
  std::map<std::vector<std::int64_t>, std::size_t> index;
  for (std::size_t i = 0; i < involutions.size(); ++i) index[involutions[i].values] = i;
  std::vector<std::size_t> parent(involutions.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < involutions.size(); ++i) {
    for (const auto& chi : chars) {
      // phi^-1 rho phi (X_u) = chi(u) chi(u^-1)^-1 mu(u) X_{u^-1}
      std::vector<std::int64_t> mu(T.order());
      for (Elem u = 0; u < T.order(); ++u)
        mu[u] = residue(involutions[i].values[u] + chi.values[u] - chi.values[T.inv(u)], L);
      auto it = index.find(mu);
      if (it == index.end()) throw DomainError("conjugate of an involution is missing from the list");
      parent[find(i)] = find(it->second);
    }
  }
  std::set<std::size_t> roots;
  for (std::size_t i = 0; i < involutions.size(); ++i) roots.insert(find(i));
  return static_cast<int>(roots.size());
}

namespace {

bool perfect_square(int n) {
  int r = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
  return r * r == n;
}

}  // namespace

bool verify_hit(const Group& T, const SimpleHit& hit) {
  return perfect_square(T.order()) && hit.center_dimension == 1 && hit.representative.group == T &&
         is_cocycle(hit.representative) && has_square_trivial_class(hit.representative) &&
         center_dimension(TwistedAlgebra(hit.representative)) == 1;
}

SearchReport search_group(const Group& T, std::uint64_t guard) {
  SearchReport r;
  r.group = T.name();
  r.order = T.order();
  r.N = T.order();
  if (T.is_commutative()) {
    r.skip_reason = "abelian";
    return r;
  }
  if (!perfect_square(T.order())) {
    r.skip_reason = "order not a perfect square";
    return r;
  }
  const std::uint64_t n = static_cast<std::uint64_t>(T.order());
  try {
    guard_check(n * n * n * n * n, guard, "cocycle system for " + T.name());
    auto classes = cohomology_classes(T, r.N);
    guard_check(classes.size() * n * n, guard, "class reduction for " + T.name());
    r.searched = true;
    for (const auto& c : classes) {
      ++r.classes_examined;
      if (!has_square_trivial_class(c)) continue;
      ++r.order2_classes;
      int dim = center_dimension(TwistedAlgebra(c));
      if (dim != 1) continue;
      SimpleHit hit{c, dim};
      if (!verify_hit(T, hit)) throw DomainError("search hit failed re-verification for " + T.name());
      r.simple_hits.push_back(std::move(hit));
    }
  } catch (const ResourceError& e) {
    r.searched = false;
    r.skip_reason = e.what();
    r.classes_examined = r.order2_classes = 0;
    r.simple_hits.clear();
  }
  return r;
}

std::vector<SearchReport> search_question(int max_order, const std::string& dir, std::uint64_t guard) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw DomainError("group library '" + dir + "' is not a directory");
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".cayley") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<SearchReport> out;
  for (const auto& p : files) {
    Group T = Group::load_cayley(p.string());
    if (T.order() > max_order) continue;
    SearchReport r = search_group(T, guard);
    r.source = p.string();
    out.push_back(std::move(r));
  }
  return out;
}

std::optional<UTMatrix> tau_s_conjugator(int n, int bound) {
  if (n % 2 != 0) throw DomainError("s exists only for even n");
  const int slots = n * (n + 1) / 2;
  std::vector<int> digits(slots, -bound);
  while (true) {
    UTMatrix w(n);
    int x = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) w.set(i, j, digits[x++]);
    if (auto wi = w.inverse()) {
      bool all = true;
      for (int i = 0; i < n && all; ++i)
        for (int j = i; j < n && all; ++j) {
          const UTMatrix e = UTMatrix::unit(n, i, j);
          // phi(tau(x)) = s(phi(x)) with phi = Int(w)
          all = w * apply_canonical(UTBase::Tau, e) * *wi == apply_canonical(UTBase::S, w * e * *wi);
        }
      if (all) return w;
    }
    int p = 0;
    while (p < slots && digits[p] == bound) digits[p++] = -bound;
    if (p == slots) break;
    ++digits[p];
  }
  return std::nullopt;
}

}  // namespace gia::oracle
