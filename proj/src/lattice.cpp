#include "gradedlc/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace gradedlc {

MultiDegree MultiDegree::shifted(std::size_t axis, std::int64_t delta) const {
  if (axis >= coords_.size()) throw DimensionError("axis out of range");
  MultiDegree out = *this;
  out.coords_[axis] += delta;
  return out;
}

MultiDegree MultiDegree::tail(std::size_t first) const {
  if (first > coords_.size()) throw DimensionError("tail start out of range");
  return MultiDegree(std::vector<std::int64_t>(coords_.begin() + static_cast<std::ptrdiff_t>(first), coords_.end()));
}

MultiDegree MultiDegree::with_prefix(std::int64_t head) const {
  std::vector<std::int64_t> c;
  c.reserve(coords_.size() + 1);
  c.push_back(head);
  c.insert(c.end(), coords_.begin(), coords_.end());
  return MultiDegree(std::move(c));
}

std::string MultiDegree::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < coords_.size(); ++k) os << (k ? "," : "") << coords_[k];
  os << ')';
  return os.str();
}

bool SignPattern::contains(const MultiDegree& u) const {
  if (u.size() != members.size()) return false;
  for (std::size_t i = 0; i < members.size(); ++i)
    if ((u[i] >= 0) != members[i]) return false;
  return true;
}

std::string SignPattern::membership_string() const {
  std::string s;
  for (bool b : members) s.push_back(b ? '1' : '0');
  return s;
}

SignPattern block_of(const MultiDegree& u) {
  SignPattern p;
  p.members.resize(u.size());
  std::vector<std::int64_t> corner(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    p.members[i] = u[i] >= 0;
    corner[i] = p.members[i] ? 0 : -1;
  }
  p.corner = MultiDegree(std::move(corner));
  return p;
}

SignPattern block_of(const MultiDegree& u, std::size_t d) {
  if (u.size() != d) throw DimensionError("degree has " + std::to_string(u.size()) + " coordinates, expected " + std::to_string(d));
  return block_of(u);
}

std::vector<SignPattern> enumerate_blocks(std::size_t d) {
  std::vector<SignPattern> out;
  out.reserve(std::size_t{1} << d);
  for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
    // Coordinate 0 is the most significant bit so that the order is lexicographic.
    std::vector<std::int64_t> corner(d);
    for (std::size_t i = 0; i < d; ++i) corner[i] = ((mask >> (d - 1 - i)) & 1U) ? 0 : -1;
    out.push_back(block_of(MultiDegree(std::move(corner))));
  }
  return out;
}

std::vector<MultiDegree> box(std::size_t dim, std::int64_t radius) {
  std::vector<MultiDegree> out;
  std::vector<std::int64_t> cur(dim, -radius);
  if (dim == 0) return {MultiDegree{}};
  while (true) {
    out.emplace_back(cur);
    std::size_t k = dim;
    while (k > 0) {
      --k;
      if (cur[k] < radius) {
        ++cur[k];
        break;
      }
      cur[k] = -radius;
      if (k == 0) return out;
    }
  }
}

std::string to_string(BaseRing base) { return base == BaseRing::Field ? "field" : "graded_pid"; }

std::string CMonomial::to_string() const {
  std::ostringstream os;
  bool any = false;
  if (y_pow > 0) {
    os << 'Y';
    if (y_pow > 1) os << '^' << y_pow;
    any = true;
  }
  for (std::size_t i = 0; i < x_exps.size(); ++i) {
    if (x_exps[i] == 0) continue;
    if (any) os << '*';
    os << 'X' << (i + 1);
    if (x_exps[i] > 1) os << '^' << x_exps[i];
    any = true;
  }
  if (!any) os << '1';
  return os.str();
}

CMonomialIdeal::CMonomialIdeal(std::size_t d, BaseRing base, std::vector<CMonomial> gens) : d_(d), base_(base) {
  if (d == 0) throw DimensionError("ideal needs at least one X-variable");
  if (d > 30) throw DimensionError("at most 30 X-variables are supported");
  if (gens.empty()) throw std::invalid_argument("ideal needs at least one generator");
  if (gens.size() > 31) throw std::invalid_argument("at most 31 generators are supported");
  for (auto& g : gens) {
    if (g.x_exps.size() != d) throw DimensionError("generator " + g.to_string() + " has wrong number of X-exponents");
    if (base == BaseRing::Field && g.y_pow != 0) throw std::invalid_argument("base field forbids Y in generator " + g.to_string());
    if (std::find(gens_.begin(), gens_.end(), g) == gens_.end()) gens_.push_back(g);
  }
  for (std::size_t g = 0; g < gens_.size(); ++g) {
    std::uint32_t mask = 0;
    for (std::size_t v = 0; v < num_vars(); ++v)
      if (exponent(g, v) > 0) mask |= 1U << v;
    support_.push_back(mask);
  }
}

std::size_t CMonomialIdeal::x_var(std::size_t i) const {
  if (i < 1 || i > d_) throw DimensionError("X-index out of range");
  return i - 1 + (has_y() ? 1 : 0);
}

std::size_t CMonomialIdeal::y_var() const {
  if (!has_y()) throw DimensionError("base field has no Y-coordinate");
  return 0;
}

std::uint32_t CMonomialIdeal::exponent(std::size_t g, std::size_t var) const {
  const CMonomial& m = gens_.at(g);
  if (has_y()) return var == 0 ? m.y_pow : m.x_exps.at(var - 1);
  return m.x_exps.at(var);
}

bool CMonomialIdeal::usual_monomial() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const CMonomial& g) { return g.y_pow == 0; });
}

CMonomialIdeal CMonomialIdeal::y_inverted() const {
  std::vector<CMonomial> gens;
  for (const auto& g : gens_) gens.push_back(CMonomial{0, g.x_exps});
  return CMonomialIdeal(d_, BaseRing::Field, std::move(gens));
}

CMonomialIdeal CMonomialIdeal::over_graded_pid() const { return CMonomialIdeal(d_, BaseRing::GradedPID, gens_); }

void CMonomialIdeal::check_degree(const MultiDegree& u) const {
  if (u.size() != num_vars())
    throw DimensionError("degree " + u.to_string() + " has " + std::to_string(u.size()) + " coordinates, ideal expects " +
                         std::to_string(num_vars()));
}

std::string CMonomialIdeal::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t g = 0; g < gens_.size(); ++g) os << (g ? ", " : "") << gens_[g].to_string();
  os << ") over " << (has_y() ? "K[Y]" : "K");
  return os.str();
}

}  // namespace gradedlc
