#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gradedlc {

/// Thrown when a degree, axis or generator does not fit the ambient ring.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A point of the degree lattice. For ideals over the graded PID the first
/// coordinate is the Y-degree and the remaining ones are the X-degrees.
class MultiDegree {
 public:
  MultiDegree() = default;
  explicit MultiDegree(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}
  MultiDegree(std::initializer_list<std::int64_t> coords) : coords_(coords) {}

  std::size_t size() const { return coords_.size(); }
  std::int64_t operator[](std::size_t k) const { return coords_[k]; }
  std::int64_t& operator[](std::size_t k) { return coords_[k]; }
  std::span<const std::int64_t> coords() const { return coords_; }

  MultiDegree shifted(std::size_t axis, std::int64_t delta) const;
  /// Coordinates [first, size()).
  MultiDegree tail(std::size_t first) const;
  MultiDegree with_prefix(std::int64_t head) const;

  std::string to_string() const;

  auto operator<=>(const MultiDegree&) const = default;

 private:
  std::vector<std::int64_t> coords_;
};

/// The block B(a^U) = { u : u_i >= 0 for i in U, u_i <= -1 otherwise }.
struct SignPattern {
  std::vector<bool> members;  // members[i] <=> i in U
  MultiDegree corner;         // a^U: 0 on U, -1 off U

  std::size_t size() const { return members.size(); }
  bool contains(const MultiDegree& u) const;
  std::string membership_string() const;  // e.g. "10" for U = {1}
  bool operator==(const SignPattern&) const = default;
};

SignPattern block_of(const MultiDegree& u);
/// Same, but rejects degrees whose length differs from `d`.
SignPattern block_of(const MultiDegree& u, std::size_t d);

/// All 2^d sign patterns, lexicographic on the membership vector (false < true).
std::vector<SignPattern> enumerate_blocks(std::size_t d);

/// Every u with max |u_k| <= radius, in lexicographic order.
std::vector<MultiDegree> box(std::size_t dim, std::int64_t radius);

enum class BaseRing { Field, GradedPID };

std::string to_string(BaseRing base);

/// A generator Y^c X^w.
struct CMonomial {
  std::uint32_t y_pow = 0;
  std::vector<std::uint32_t> x_exps;

  bool operator==(const CMonomial&) const = default;
  auto operator<=>(const CMonomial&) const = default;
  std::string to_string() const;
};

/// Ideal of K[X_1..X_d] (base Field) or K[Y][X_1..X_d] (base GradedPID)
/// generated by c-monomials. Later duplicates are dropped on construction.
class CMonomialIdeal {
 public:
  CMonomialIdeal(std::size_t d, BaseRing base, std::vector<CMonomial> gens);

  std::size_t d() const { return d_; }
  BaseRing base() const { return base_; }
  const std::vector<CMonomial>& generators() const { return gens_; }
  std::size_t num_generators() const { return gens_.size(); }

  bool has_y() const { return base_ == BaseRing::GradedPID; }
  /// Number of lattice coordinates: d, plus one for Y over the graded PID.
  std::size_t num_vars() const { return d_ + (has_y() ? 1 : 0); }
  /// Coordinate position of X_i for 1 <= i <= d.
  std::size_t x_var(std::size_t i) const;
  /// Coordinate position of Y; throws for base Field.
  std::size_t y_var() const;
  bool is_y_var(std::size_t var) const { return has_y() && var == 0; }

  /// Exponent of coordinate `var` in generator `g`.
  std::uint32_t exponent(std::size_t g, std::size_t var) const;
  /// Bit `var` is set iff the generator's exponent there is positive.
  std::uint32_t support_mask(std::size_t g) const { return support_[g]; }

  bool usual_monomial() const;
  /// Replace every Y^c by 1 and view the result over the field.
  CMonomialIdeal y_inverted() const;
  /// Same generators, viewed over the graded PID.
  CMonomialIdeal over_graded_pid() const;

  void check_degree(const MultiDegree& u) const;
  std::string to_string() const;

 private:
  std::size_t d_;
  BaseRing base_;
  std::vector<CMonomial> gens_;
  std::vector<std::uint32_t> support_;
};

}  // namespace gradedlc
