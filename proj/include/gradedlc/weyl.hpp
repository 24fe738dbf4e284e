#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gradedlc/matrix.hpp"

namespace gradedlc {

/// Shape of a Weyl algebra: d pairs (X_i, d_i), optionally with the base pair (Y, dY).
struct WeylAlgebra {
  std::size_t d = 1;
  bool with_base = false;

  bool operator==(const WeylAlgebra&) const = default;
};

/// Ordered monomial Y^y dY^dy X^x D^dx.
struct WeylMonomial {
  std::uint32_t y = 0;
  std::uint32_t dy = 0;
  std::vector<std::uint32_t> x;
  std::vector<std::uint32_t> dx;

  explicit WeylMonomial(std::size_t d = 0) : x(d, 0), dx(d, 0) {}

  /// Total order in the derivations dY and d_i.
  std::uint32_t order() const;
  std::vector<std::int64_t> degree() const;

  auto operator<=>(const WeylMonomial&) const = default;
};

/// Element of the Weyl algebra in normal form: a finite sum of ordered
/// monomials with nonzero rational coefficients. Equal elements have equal term maps.
class WeylElement {
 public:
  using Terms = std::map<WeylMonomial, Rational>;

  explicit WeylElement(WeylAlgebra algebra) : algebra_(algebra) {}

  static WeylElement constant(WeylAlgebra algebra, const Rational& c);
  static WeylElement x(WeylAlgebra algebra, std::size_t i);        // 1-based
  static WeylElement partial(WeylAlgebra algebra, std::size_t i);  // 1-based
  static WeylElement y(WeylAlgebra algebra);
  static WeylElement dy(WeylAlgebra algebra);
  static WeylElement monomial(WeylAlgebra algebra, WeylMonomial m, const Rational& c = 1);

  const WeylAlgebra& algebra() const { return algebra_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Minimal nu with this element in F_nu; 0 for the zero element.
  std::size_t order() const;
  /// Common X-degree of all terms; empty for zero or inhomogeneous elements.
  std::optional<std::vector<std::int64_t>> degree() const;
  bool is_homogeneous() const { return is_zero() || degree().has_value(); }

  WeylElement pow(unsigned n) const;

  void add_term(const WeylMonomial& m, const Rational& c);

  WeylElement& operator+=(const WeylElement& other);
  WeylElement& operator-=(const WeylElement& other);
  WeylElement& operator*=(const Rational& c);

  friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
  friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }
  friend WeylElement operator-(WeylElement a) { return a *= Rational(-1); }
  friend WeylElement operator*(WeylElement a, const Rational& c) { return a *= c; }
  friend WeylElement operator*(const Rational& c, WeylElement a) { return a *= c; }
  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
  friend bool operator==(const WeylElement& a, const WeylElement& b) = default;

 private:
  void require_same(const WeylElement& other) const;

  WeylAlgebra algebra_;
  Terms terms_;
};

/// Normal-form product, using d_i X_i = X_i d_i + 1 and dY Y = Y dY + 1.
WeylElement multiply(const WeylElement& p, const WeylElement& q);

/// The Euler operator X_i d_i.
WeylElement euler(WeylAlgebra algebra, std::size_t i);

/// Commutative polynomial in (Y, dY-bar, X_1..X_d, D_1-bar..D_d-bar); the
/// exponent vector is laid out as [y, dy, x_1..x_d, dx_1..dx_d].
class CommutativePolynomial {
 public:
  using Terms = std::map<std::vector<std::uint32_t>, Rational>;

  CommutativePolynomial() = default;
  void add_term(const std::vector<std::uint32_t>& e, const Rational& c);
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  friend CommutativePolynomial operator*(const CommutativePolynomial& a, const CommutativePolynomial& b);
  friend CommutativePolynomial operator-(const CommutativePolynomial& a, const CommutativePolynomial& b);
  friend bool operator==(const CommutativePolynomial&, const CommutativePolynomial&) = default;

 private:
  Terms terms_;
};

/// Image in the associated graded ring of the order filtration: the
/// top-order terms with derivations turned into commuting symbols.
CommutativePolynomial principal_symbol(const WeylElement& p);

/// Polynomial f(E_1..E_d) with rational coefficients, keyed by exponent vectors.
struct EulerPolynomial {
  std::size_t d = 1;
  std::map<std::vector<std::uint32_t>, Rational> coeffs;

  /// f(E_1 - shift_1, ..., E_d - shift_d) as a Weyl element.
  WeylElement evaluate(WeylAlgebra algebra, const std::vector<std::int64_t>& shift) const;
};

/// x_a = b_1 ... b_d with b_i = X_i^{a_i} (a_i > 0), d_i^{-a_i} (a_i < 0), 1 otherwise.
WeylElement x_a(WeylAlgebra algebra, const std::vector<std::int64_t>& a);
WeylElement x_a_plus(WeylAlgebra algebra, const std::vector<std::int64_t>& a);
WeylElement x_a_minus(WeylAlgebra algebra, const std::vector<std::int64_t>& a);

/// X_i^j E_i = (E_i - j) X_i^j.
bool verify_X_e(WeylAlgebra algebra, std::size_t i, unsigned j);
/// E_i d_i^j = d_i^j (E_i - j).
bool verify_partial_e(WeylAlgebra algebra, std::size_t i, unsigned j);

enum class ShiftKind { Multiply, Differentiate };

/// E^w X_i^u = X_i^u (... (E_i + u)^{w_i} ...)   (Multiply), or
/// E^w d_i^u = d_i^u (... (E_i - u)^{w_i} ...)   (Differentiate).
bool verify_e_shift_multi(WeylAlgebra algebra, const std::vector<std::uint32_t>& w, std::size_t i, unsigned u,
                          ShiftKind kind);

struct FactorizationCheck {
  bool left = false;   // x_a+ f(E) x_a- = f(E') x_a
  bool right = false;  // x_a+ f(E) x_a- = x_a f(E'')
  bool ok() const { return left && right; }
};

/// Both factorizations of x_a+ f(E) x_a-, with E'_i = E_i - a_i for a_i > 0 and
/// E''_i = E_i + a_i for a_i < 0 (other coordinates unshifted).
FactorizationCheck verify_D0_factorization(WeylAlgebra algebra, const std::vector<std::int64_t>& a,
                                           const EulerPolynomial& f);

/// For homogeneous p, q: order(pq) <= order(p) + order(q), and pq = 0 or deg(pq) = deg p + deg q.
bool verify_filtration_inclusion(const WeylElement& p, const WeylElement& q);

/// sigma(pq) = sigma(p) sigma(q) = sigma(qp) for nonzero p, q.
bool verify_gr_commutativity(const WeylElement& p, const WeylElement& q);

}  // namespace gradedlc
