#include "gradedlc/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gradedlc {

namespace {

struct Rewrite {
  std::uint32_t k;  // number of contracted (derivation, variable) pairs
  mpz_class coeff;  // C(n, k) * m (m-1) ... (m-k+1)
};

// D^n X^m = sum_k C(n,k) m!/(m-k)! X^{m-k} D^{n-k}
std::vector<Rewrite> commute(std::uint32_t n, std::uint32_t m) {
  std::vector<Rewrite> out;
  mpz_class binom = 1, falling = 1;
  for (std::uint32_t k = 0; k <= std::min(n, m); ++k) {
    if (k > 0) {
      binom = binom * (n - k + 1) / k;
      falling *= (m - k + 1);
    }
    out.push_back({k, binom * falling});
  }
  return out;
}

}  // namespace

std::uint32_t WeylMonomial::order() const { return dy + std::accumulate(dx.begin(), dx.end(), std::uint32_t{0}); }

std::vector<std::int64_t> WeylMonomial::degree() const {
  std::vector<std::int64_t> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = static_cast<std::int64_t>(x[i]) - static_cast<std::int64_t>(dx[i]);
  return out;
}

WeylElement WeylElement::constant(WeylAlgebra algebra, const Rational& c) {
  return monomial(algebra, WeylMonomial(algebra.d), c);
}

WeylElement WeylElement::monomial(WeylAlgebra algebra, WeylMonomial m, const Rational& c) {
  if (m.x.size() != algebra.d || m.dx.size() != algebra.d) throw std::invalid_argument("monomial arity mismatch");
  if (!algebra.with_base && (m.y != 0 || m.dy != 0)) throw std::invalid_argument("Y and dY need with_base");
  WeylElement e(algebra);
  e.add_term(m, c);
  return e;
}

WeylElement WeylElement::x(WeylAlgebra algebra, std::size_t i) {
  if (i < 1 || i > algebra.d) throw std::out_of_range("X index out of range");
  WeylMonomial m(algebra.d);
  m.x[i - 1] = 1;
  return monomial(algebra, m);
}

WeylElement WeylElement::partial(WeylAlgebra algebra, std::size_t i) {
  if (i < 1 || i > algebra.d) throw std::out_of_range("D index out of range");
  WeylMonomial m(algebra.d);
  m.dx[i - 1] = 1;
  return monomial(algebra, m);
}

WeylElement WeylElement::y(WeylAlgebra algebra) {
  WeylMonomial m(algebra.d);
  m.y = 1;
  return monomial(algebra, m);
}

WeylElement WeylElement::dy(WeylAlgebra algebra) {
  WeylMonomial m(algebra.d);
  m.dy = 1;
  return monomial(algebra, m);
}

std::size_t WeylElement::order() const {
  std::size_t best = 0;
  for (const auto& [m, c] : terms_) best = std::max<std::size_t>(best, m.order());
  return best;
}

std::optional<std::vector<std::int64_t>> WeylElement::degree() const {
  if (terms_.empty()) return std::nullopt;
  auto deg = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != deg) return std::nullopt;
  return deg;
}

WeylElement WeylElement::pow(unsigned n) const {
  WeylElement out = constant(algebra_, 1);
  for (unsigned k = 0; k < n; ++k) out = out * *this;
  return out;
}

void WeylElement::add_term(const WeylMonomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void WeylElement::require_same(const WeylElement& other) const {
  if (!(algebra_ == other.algebra_)) throw std::invalid_argument("Weyl elements from different algebras");
}

WeylElement& WeylElement::operator+=(const WeylElement& other) {
  require_same(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& other) {
  require_same(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

WeylElement& WeylElement::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  a.require_same(b);
  const std::size_t d = a.algebra_.d;
  WeylElement out(a.algebra_);
  // Per-axis rewrites of (derivation^n)(variable^m), slot d for (dY, Y).
  std::vector<std::vector<Rewrite>> axes(d + 1);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < d; ++i) axes[i] = commute(ma.dx[i], mb.x[i]);
      axes[d] = commute(ma.dy, mb.y);
      std::vector<std::size_t> pick(d + 1, 0);
      const Rational base = ca * cb;
      while (true) {
        WeylMonomial m(d);
        mpz_class c = 1;
        for (std::size_t i = 0; i < d; ++i) {
          const Rewrite& r = axes[i][pick[i]];
          m.x[i] = ma.x[i] + mb.x[i] - r.k;
          m.dx[i] = ma.dx[i] + mb.dx[i] - r.k;
          c *= r.coeff;
        }
        const Rewrite& r = axes[d][pick[d]];
        m.y = ma.y + mb.y - r.k;
        m.dy = ma.dy + mb.dy - r.k;
        c *= r.coeff;
        out.add_term(m, base * Rational(c));

        std::size_t k = 0;
        while (k <= d && ++pick[k] == axes[k].size()) pick[k++] = 0;
        if (k > d) break;
      }
    }
  }
  return out;
}

WeylElement multiply(const WeylElement& p, const WeylElement& q) { return p * q; }

WeylElement euler(WeylAlgebra algebra, std::size_t i) {
  return WeylElement::x(algebra, i) * WeylElement::partial(algebra, i);
}

void CommutativePolynomial::add_term(const std::vector<std::uint32_t>& e, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

CommutativePolynomial operator*(const CommutativePolynomial& a, const CommutativePolynomial& b) {
  CommutativePolynomial out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      if (ea.size() != eb.size()) throw std::invalid_argument("commutative polynomials of different arity");
      std::vector<std::uint32_t> e(ea.size());
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      out.add_term(e, ca * cb);
    }
  return out;
}

CommutativePolynomial operator-(const CommutativePolynomial& a, const CommutativePolynomial& b) {
  CommutativePolynomial out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, -c);
  return out;
}

CommutativePolynomial principal_symbol(const WeylElement& p) {
  CommutativePolynomial out;
  const std::size_t top = p.order();
  for (const auto& [m, c] : p.terms()) {
    if (m.order() != top) continue;
    std::vector<std::uint32_t> e;
    e.reserve(2 + 2 * m.x.size());
    e.push_back(m.y);
    e.push_back(m.dy);
    e.insert(e.end(), m.x.begin(), m.x.end());
    e.insert(e.end(), m.dx.begin(), m.dx.end());
    out.add_term(e, c);
  }
  return out;
}

WeylElement EulerPolynomial::evaluate(WeylAlgebra algebra, const std::vector<std::int64_t>& shift) const {
  if (algebra.d != d || shift.size() != d) throw std::invalid_argument("Euler polynomial arity mismatch");
  std::vector<WeylElement> shifted;
  for (std::size_t i = 0; i < d; ++i)
    shifted.push_back(euler(algebra, i + 1) - WeylElement::constant(algebra, Rational(shift[i])));
  WeylElement out(algebra);
  for (const auto& [e, c] : coeffs) {
    if (e.size() != d) throw std::invalid_argument("Euler polynomial exponent arity mismatch");
    WeylElement term = WeylElement::constant(algebra, c);
    for (std::size_t i = 0; i < d; ++i) term = term * shifted[i].pow(e[i]);
    out += term;
  }
  return out;
}

namespace {

WeylElement x_a_part(WeylAlgebra algebra, const std::vector<std::int64_t>& a, bool positive, bool negative) {
  if (a.size() != algebra.d) throw std::invalid_argument("x_a: degree arity mismatch");
  WeylMonomial m(algebra.d);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > 0 && positive) m.x[i] = static_cast<std::uint32_t>(a[i]);
    if (a[i] < 0 && negative) m.dx[i] = static_cast<std::uint32_t>(-a[i]);
  }
  return WeylElement::monomial(algebra, m);
}

}  // namespace

WeylElement x_a(WeylAlgebra algebra, const std::vector<std::int64_t>& a) { return x_a_part(algebra, a, true, true); }
WeylElement x_a_plus(WeylAlgebra algebra, const std::vector<std::int64_t>& a) {
  return x_a_part(algebra, a, true, false);
}
WeylElement x_a_minus(WeylAlgebra algebra, const std::vector<std::int64_t>& a) {
  return x_a_part(algebra, a, false, true);
}

bool verify_X_e(WeylAlgebra algebra, std::size_t i, unsigned j) {
  const WeylElement xj = WeylElement::x(algebra, i).pow(j);
  const WeylElement e = euler(algebra, i);
  return xj * e == (e - WeylElement::constant(algebra, j)) * xj;
}

bool verify_partial_e(WeylAlgebra algebra, std::size_t i, unsigned j) {
  const WeylElement dj = WeylElement::partial(algebra, i).pow(j);
  const WeylElement e = euler(algebra, i);
  return e * dj == dj * (e - WeylElement::constant(algebra, j));
}

bool verify_e_shift_multi(WeylAlgebra algebra, const std::vector<std::uint32_t>& w, std::size_t i, unsigned u,
                          ShiftKind kind) {
  if (w.size() != algebra.d) throw std::invalid_argument("exponent vector arity mismatch");
  const bool mult = kind == ShiftKind::Multiply;
  const WeylElement g = (mult ? WeylElement::x(algebra, i) : WeylElement::partial(algebra, i)).pow(u);
  WeylElement lhs = WeylElement::constant(algebra, 1);
  WeylElement shifted = WeylElement::constant(algebra, 1);
  for (std::size_t k = 1; k <= algebra.d; ++k) {
    const WeylElement e = euler(algebra, k);
    lhs = lhs * e.pow(w[k - 1]);
    const std::int64_t s = k == i ? (mult ? static_cast<std::int64_t>(u) : -static_cast<std::int64_t>(u)) : 0;
    shifted = shifted * (e + WeylElement::constant(algebra, Rational(s))).pow(w[k - 1]);
  }
  return lhs * g == g * shifted;
}

FactorizationCheck verify_D0_factorization(WeylAlgebra algebra, const std::vector<std::int64_t>& a,
                                           const EulerPolynomial& f) {
  std::vector<std::int64_t> left_shift(a.size(), 0), right_shift(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > 0) left_shift[i] = a[i];
    if (a[i] < 0) right_shift[i] = -a[i];
  }
  const WeylElement middle = x_a_plus(algebra, a) * f.evaluate(algebra, std::vector<std::int64_t>(a.size(), 0)) *
                             x_a_minus(algebra, a);
  const WeylElement xa = x_a(algebra, a);
  FactorizationCheck out;
  out.left = middle == f.evaluate(algebra, left_shift) * xa;
  out.right = middle == xa * f.evaluate(algebra, right_shift);
  return out;
}

bool verify_filtration_inclusion(const WeylElement& p, const WeylElement& q) {
  if (!p.is_homogeneous() || !q.is_homogeneous()) throw std::invalid_argument("filtration check needs homogeneous operands");
  const WeylElement pq = p * q;
  if (pq.order() > p.order() + q.order()) return false;
  if (pq.is_zero()) return true;
  const auto dp = p.degree(), dq = q.degree(), dpq = pq.degree();
  if (!dp || !dq || !dpq) return false;
  for (std::size_t i = 0; i < dp->size(); ++i)
    if ((*dpq)[i] != (*dp)[i] + (*dq)[i]) return false;
  return true;
}

bool verify_gr_commutativity(const WeylElement& p, const WeylElement& q) {
  const CommutativePolynomial sp = principal_symbol(p), sq = principal_symbol(q);
  const CommutativePolynomial product = sp * sq;
  if (!(product - sq * sp).is_zero()) return false;
  if (p.is_zero() || q.is_zero()) return true;
  return principal_symbol(p * q) == product && principal_symbol(q * p) == product;
}

}  // namespace gradedlc
