#include "gia/utn.hpp"

#include <fstream>
#include <sstream>

#include "gia/cycmatrix.hpp"
#include "gia/errors.hpp"

namespace gia {

UTMatrix::UTMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {
  if (n < 1) throw DomainError("UT_n needs n >= 1");
}

UTMatrix UTMatrix::identity(int n) {
  UTMatrix m(n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

UTMatrix UTMatrix::unit(int n, int i, int j) {
  UTMatrix m(n);
  m.set(i, j, 1);
  return m;
}

void UTMatrix::set(int i, int j, const mpq_class& v) {
  if (i < 0 || j < 0 || i >= n_ || j >= n_) throw DomainError("index out of range");
  if (i > j) throw DomainError("entry below the diagonal");
  a_[static_cast<std::size_t>(i) * n_ + j] = v;
}

UTMatrix UTMatrix::operator*(const UTMatrix& o) const {
  if (n_ != o.n_) throw DomainError("size mismatch");
  UTMatrix r(n_);
  for (int i = 0; i < n_; ++i)
    for (int t = i; t < n_; ++t) {
      if ((*this)(i, t) == 0) continue;
      for (int j = t; j < n_; ++j) r.a_[static_cast<std::size_t>(i) * n_ + j] += (*this)(i, t) * o(t, j);
    }
  return r;
}

UTMatrix UTMatrix::operator+(const UTMatrix& o) const {
  if (n_ != o.n_) throw DomainError("size mismatch");
  UTMatrix r = *this;
  for (std::size_t x = 0; x < a_.size(); ++x) r.a_[x] += o.a_[x];
  return r;
}

UTMatrix UTMatrix::operator-(const UTMatrix& o) const { return *this + o.scaled(-1); }

UTMatrix UTMatrix::scaled(const mpq_class& c) const {
  UTMatrix r = *this;
  for (auto& x : r.a_) x *= c;
  return r;
}

bool UTMatrix::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

std::optional<UTMatrix> UTMatrix::inverse() const {
  for (int i = 0; i < n_; ++i)
    if ((*this)(i, i) == 0) return std::nullopt;
  UTMatrix r(n_);
  // Column by column back substitution of A r = I.
  for (int j = 0; j < n_; ++j)
    for (int i = j; i >= 0; --i) {
      mpq_class acc = i == j ? 1 : 0;
      for (int t = i + 1; t <= j; ++t) acc -= (*this)(i, t) * r(t, j);
      r.set(i, j, acc / (*this)(i, i));
    }
  return r;
}

std::string UTMatrix::str() const {
  std::string s = "[";
  for (int i = 0; i < n_; ++i) {
    s += i ? ", [" : "[";
    for (int j = 0; j < n_; ++j) s += (j ? ", " : "") + (*this)(i, j).get_str();
    s += "]";
  }
  return s + "]";
}

UTMatrix parse_ut_matrix(std::string_view text, const std::string& source) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  std::optional<UTMatrix> m;
  std::vector<mpq_class> vals;
  while (std::getline(in, line)) {
    ++lineno;
    line = line.substr(0, line.find('#'));
    std::istringstream words(line);
    std::string w;
    while (words >> w) {
      if (!m) {
        if (w.rfind("n=", 0) != 0) throw ParseError(source, lineno, "expected 'n=<k>'");
        try {
          std::size_t used = 0;
          int n = std::stoi(w.substr(2), &used);
          if (used != w.size() - 2 || n < 1) throw std::invalid_argument(w);
          m = UTMatrix(n);
        } catch (const std::logic_error&) {
          throw ParseError(source, lineno, "bad size '" + w + "'");
        }
        continue;
      }
      try {
        CycRational c = CycRational::parse(w);
        if (!c.is_rational()) throw ParseError(source, lineno, "entry '" + w + "' is not rational");
        vals.push_back(c.rational_value());
      } catch (const ParseError&) {
        throw;
      } catch (const Error& e) {
        throw ParseError(source, lineno, e.what());
      }
    }
  }
  if (!m) throw ParseError(source, lineno, "missing 'n=<k>' header");
  const int n = m->n();
  if (vals.size() != static_cast<std::size_t>(n) * (n + 1) / 2)
    throw ParseError(source, lineno,
                     "expected " + std::to_string(n * (n + 1) / 2) + " entries, got " + std::to_string(vals.size()));
  std::size_t x = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) m->set(i, j, vals[x++]);
  return *m;
}

UTMatrix load_ut_matrix(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError(path, 0, "cannot open file");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_ut_matrix(ss.str(), path);
}

std::string write_ut_matrix(const UTMatrix& u) {
  std::ostringstream o;
  o << "n=" << u.n() << "\n";
  for (int i = 0; i < u.n(); ++i) {
    for (int j = i; j < u.n(); ++j) o << (j > i ? " " : "") << u(i, j).get_str();
    o << "\n";
  }
  return o.str();
}

Elem UTGrading::unit_degree(int i, int j) const {
  if (i > j || i < 0 || j >= n()) throw DomainError("not an upper triangular unit");
  Elem d = group.identity();
  for (int t = i; t < j; ++t) d = group.mul(d, eta[t]);
  return d;
}

UTGrading parse_ut_grading(const Group& G, int n, std::string_view eta) {
  if (n < 1) throw DomainError("UT_n needs n >= 1");
  UTGrading g{G, {}};
  std::string s(eta);
  std::size_t p = 0;
  while (!s.empty() && p <= s.size()) {
    std::size_t q = s.find(',', p);
    if (q == std::string::npos) q = s.size();
    std::string w = s.substr(p, q - p);
    const auto b = w.find_first_not_of(" \t");
    if (b == std::string::npos) throw ParseError("empty entry in eta '" + s + "'");
    w = w.substr(b, w.find_last_not_of(" \t") - b + 1);
    g.eta.push_back(G.parse_element(w));
    p = q + 1;
  }
  if (static_cast<int>(g.eta.size()) != n - 1)
    throw ParseError("eta has " + std::to_string(g.eta.size()) + " entries; UT_" + std::to_string(n) + " needs " +
                     std::to_string(n - 1));
  return g;
}

std::string base_name(UTBase b) { return b == UTBase::Tau ? "tau" : "s"; }

bool admits_degree_inverting(const UTGrading& g) {
  const int k = static_cast<int>(g.eta.size());
  for (int i = 0; i < k; ++i)
    if (g.eta[i] != g.group.inv(g.eta[k - 1 - i])) return false;
  return true;
}

UTMatrix symplectic_diagonal(int n) {
  if (n % 2 != 0) throw DomainError("the symplectic involution exists only for even n");
  UTMatrix D(n);
  for (int i = 0; i < n; ++i) D.set(i, i, i < n / 2 ? 1 : -1);
  return D;
}

UTMatrix apply_canonical(UTBase base, const UTMatrix& x) {
  const int n = x.n();
  if (base == UTBase::S && n % 2 != 0) throw DomainError("the symplectic involution exists only for even n");
  UTMatrix r(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      mpq_class v = x(n - 1 - j, n - 1 - i);
      // D tau(x) D multiplies entry (i, j) by d_i d_j
      if (base == UTBase::S && ((i < n / 2) != (j < n / 2))) v = -v;
      r.set(i, j, v);
    }
  return r;
}

bool canonical_is_degree_inverting(UTBase base, const UTGrading& g) {
  const int n = g.n();
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      UTMatrix img = apply_canonical(base, UTMatrix::unit(n, i, j));
      const Elem target = g.group.inv(g.unit_degree(i, j));
      for (int p = 0; p < n; ++p)
        for (int q = p; q < n; ++q)
          if (img(p, q) != 0 && g.unit_degree(p, q) != target) return false;
    }
  return true;
}

bool is_homogeneous_degree_one(const UTMatrix& u, const UTGrading& g) {
  if (u.n() != g.n()) throw DomainError("matrix size does not match the grading");
  for (int i = 0; i < u.n(); ++i)
    for (int j = i; j < u.n(); ++j)
      if (u(i, j) != 0 && g.unit_degree(i, j) != g.group.identity()) return false;
  return true;
}

UTMatrix factor_u(const UTMatrix& u, UTBase base) {
  const int n = u.n();
  if (base == UTBase::S && n % 2 != 0) throw DomainError("factor_u: base s needs even n");
  if (!(apply_canonical(base, u) == u)) throw DomainError("factor_u: " + base_name(base) + "(u) != u");
  if (!u.inverse()) throw DomainError("factor_u: u is not invertible");
  UTMatrix v = UTMatrix::identity(n);
  if (n % 2 == 0) {
    const int m = n / 2;
    for (int i = 0; i < m; ++i)
      for (int j = m; j < n; ++j) v.set(i, j, u(i, j) / 2);
    for (int i = m; i < n; ++i)
      for (int j = i; j < n; ++j) v.set(i, j, u(i, j));
  } else {
    const int m = n / 2;  // middle index
    if (u(m, m) != 1) throw DomainError("factor_u: the middle diagonal entry of u must be 1 (normalize first)");
    for (int i = 0; i < m; ++i) v.set(i, m, u(i, m) / 2);
    for (int j = m + 1; j < n; ++j) v.set(m, j, u(m, j) / 2);
    for (int i = 0; i < m; ++i)
      for (int j = m + 1; j < n; ++j) v.set(i, j, (u(i, j) - u(i, m) * u(m, j) / 4) / 2);
    for (int i = m + 1; i < n; ++i)
      for (int j = i; j < n; ++j) v.set(i, j, u(i, j));
  }
  if (!(v * apply_canonical(base, v) == u)) throw std::logic_error("factor_u: block recipe failed");
  return v;
}

namespace {

UTMatrix rho_apply(const UTMatrix& u, const UTMatrix& u_inv, UTBase base, const UTMatrix& x) {
  return u * apply_canonical(base, x) * u_inv;
}

}  // namespace

UTClassification classify_involution(const UTMatrix& u_in, UTBase base_in, const UTGrading& g) {
  const int n = u_in.n();
  if (n != g.n()) throw DomainError("matrix size does not match the grading");
  if (!admits_degree_inverting(g)) throw DomainError("the grading admits no degree-inverting involution");
  auto u_in_inv = u_in.inverse();
  if (!u_in_inv) throw DomainError("u is not invertible");
  if (!is_homogeneous_degree_one(u_in, g)) throw DomainError("u is not homogeneous of degree 1");
  // rho = Int(u) o s = Int(u D) o tau
  UTMatrix u = base_in == UTBase::S ? u_in * symplectic_diagonal(n) : u_in;
  UTBase type = UTBase::Tau;
  const UTMatrix t = apply_canonical(UTBase::Tau, u);
  if (t == u) {
    if (n % 2 == 1) u = u.scaled(1 / mpq_class(u(n / 2, n / 2)));
  } else if (t == u.scaled(-1)) {
    if (n % 2 == 1) throw DomainError("tau(u) = -u is impossible for odd n");
    u = u * symplectic_diagonal(n);
    type = UTBase::S;
  } else {
    throw NotInvolutive("tau(u) is neither u nor -u, so rho^2 != id");
  }
  UTMatrix v = factor_u(u, type);
  const UTMatrix v_inv = *v.inverse();
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const UTMatrix x = UTMatrix::unit(n, i, j);
      const UTMatrix lhs = rho_apply(u_in, *u_in_inv, base_in, v * x * v_inv);
      const UTMatrix rhs = v * apply_canonical(type, x) * v_inv;
      if (!(lhs == rhs)) throw std::logic_error("classify_involution: conjugation check failed");
    }
  return UTClassification{type, u, v};
}

const UTMatrix& UTAction::at(int i, int j) const {
  if (i > j || i < 0 || j >= n) throw DomainError("not an upper triangular unit");
  // row-major over i <= j: row i starts after sum_{r<i} (n - r) entries
  return images.at(static_cast<std::size_t>(i * n - i * (i - 1) / 2 + (j - i)));
}

UTAction action_of(const UTMatrix& u, UTBase base) {
  auto ui = u.inverse();
  if (!ui) throw DomainError("u is not invertible");
  UTAction a{u.n(), {}};
  for (int i = 0; i < u.n(); ++i)
    for (int j = i; j < u.n(); ++j) a.images.push_back(rho_apply(u, *ui, base, UTMatrix::unit(u.n(), i, j)));
  return a;
}

UTMatrix inner_part(const UTAction& rho) {
  const int n = rho.n;
  if (rho.images.size() != static_cast<std::size_t>(n) * (n + 1) / 2) throw DomainError("incomplete action table");
  std::vector<int> idx(static_cast<std::size_t>(n) * n, -1);
  int vars = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) idx[static_cast<std::size_t>(i) * n + j] = vars++;
  const int eqs = vars;
  CycMatrix sys(static_cast<std::size_t>(vars) * eqs, vars);
  std::size_t block = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j, block += eqs) {
      const UTMatrix& r = rho.at(i, j);
      const int c = n - 1 - j, d = n - 1 - i;  // tau(e_ij) = e_cd
      // (rho(x) u)_pq - (u e_cd)_pq
      for (int p = 0; p < n; ++p)
        for (int q = p; q < n; ++q) {
          const std::size_t row = block + idx[static_cast<std::size_t>(p) * n + q];
          for (int t = p; t <= q; ++t)
            if (r(p, t) != 0) sys(row, idx[static_cast<std::size_t>(t) * n + q]) += CycRational(r(p, t));
          if (q == d && p <= c) sys(row, idx[static_cast<std::size_t>(p) * n + c]) -= CycRational(1);
        }
    }
  auto null = sys.nullspace();
  if (null.size() != 1)
    throw NotOfFormError("the action is not of the form Int(u) o tau (solution space of dimension " +
                         std::to_string(null.size()) + ")");
  UTMatrix u(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) u.set(i, j, null[0][idx[static_cast<std::size_t>(i) * n + j]].rational_value());
  auto ui = u.inverse();
  if (!ui) throw NotOfFormError("the solution u is singular");
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      if (!(rho_apply(u, *ui, UTBase::Tau, UTMatrix::unit(n, i, j)) == rho.at(i, j)))
        throw NotOfFormError("the action is not an anti-automorphism of the form Int(u) o tau");
  return u;
}

UTClassification classify_involution(const UTAction& rho, const UTGrading& g) {
  return classify_involution(inner_part(rho), UTBase::Tau, g);
}

UTGrading standard_to_elementary(const Group& G, const std::vector<Elem>& h) {
  if (h.empty()) throw DomainError("the standard grading needs n >= 1 degrees");
  UTGrading g{G, {}};
  for (std::size_t i = 0; i + 1 < h.size(); ++i) g.eta.push_back(G.mul(h[i], G.inv(h[i + 1])));
  return g;
}

bool standard_condition(const Group& G, const std::vector<Elem>& h) {
  if (!G.is_commutative()) throw UnsupportedError("the standard-form criterion needs a commutative group");
  if (h.empty()) throw DomainError("the standard grading needs n >= 1 degrees");
  const std::size_t n = h.size();
  const Elem first = G.mul(h[0], G.inv(h[n - 1]));
  for (std::size_t i = 1; i < n; ++i)
    if (G.mul(h[i], G.inv(h[n - 1 - i])) != first) return false;
  return true;
}

}  // namespace gia
