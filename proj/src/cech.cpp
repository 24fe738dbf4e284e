#include "gradedlc/cech.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace gradedlc {

namespace {

// Lexicographic order on the sorted index lists of equal-size subsets: the
// subset owning the lowest differing index comes first.
bool lex_less(std::uint32_t a, std::uint32_t b) {
  const std::uint32_t diff = a ^ b;
  if (diff == 0) return false;
  return (a & (diff & (~diff + 1))) != 0;
}

std::uint32_t negative_mask(const MultiDegree& u) {
  std::uint32_t mask = 0;
  for (std::size_t k = 0; k < u.size(); ++k)
    if (u[k] < 0) mask |= 1U << k;
  return mask;
}

}  // namespace

std::size_t LocalizationCell::size() const { return static_cast<std::size_t>(std::popcount(sigma)); }

std::vector<std::size_t> LocalizationCell::generators() const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < 32; ++j)
    if ((sigma >> j) & 1U) out.push_back(j);
  return out;
}

bool LocalizationCell::active_at(const MultiDegree& u) const { return (negative_mask(u) & ~support) == 0; }

std::optional<std::size_t> DegreeSlice::position(std::size_t k, std::uint32_t sigma) const {
  if (k >= levels.size()) return std::nullopt;
  const auto& level = levels[k];
  auto it = std::lower_bound(level.begin(), level.end(), sigma,
                             [](const LocalizationCell& c, std::uint32_t s) { return lex_less(c.sigma, s); });
  if (it == level.end() || it->sigma != sigma) return std::nullopt;
  return static_cast<std::size_t>(it - level.begin());
}

CechComplex::CechComplex(const CMonomialIdeal& ideal) : ideal_(ideal) {
  const std::size_t t = ideal_.num_generators();
  if (t > 20) throw std::invalid_argument("Cech complexes on more than 20 generators are not supported");
  cells_.resize(t + 1);
  for (std::uint32_t sigma = 0; sigma < (1U << t); ++sigma) {
    std::uint32_t support = 0;
    for (std::size_t j = 0; j < t; ++j)
      if ((sigma >> j) & 1U) support |= ideal_.support_mask(j);
    cells_[static_cast<std::size_t>(std::popcount(sigma))].push_back({sigma, support});
  }
  for (auto& level : cells_)
    std::sort(level.begin(), level.end(),
              [](const LocalizationCell& a, const LocalizationCell& b) { return lex_less(a.sigma, b.sigma); });
}

DegreeSlice CechComplex::slice(const MultiDegree& u) const {
  ideal_.check_degree(u);
  const std::size_t t = length();
  const std::uint32_t neg = negative_mask(u);
  DegreeSlice s;
  s.u = u;
  s.levels.resize(t + 1);
  for (std::size_t k = 0; k <= t; ++k)
    for (const auto& cell : cells_[k])
      if ((neg & ~cell.support) == 0) s.levels[k].push_back(cell);

  s.differentials.reserve(t);
  for (std::size_t k = 0; k < t; ++k) {
    RationalMatrix d(s.levels[k + 1].size(), s.levels[k].size());
    for (std::size_t col = 0; col < s.levels[k].size(); ++col) {
      const std::uint32_t sigma = s.levels[k][col].sigma;
      for (std::size_t j = 0; j < t; ++j) {
        if ((sigma >> j) & 1U) continue;
        const std::uint32_t tau = sigma | (1U << j);
        // Enlarging sigma only grows the support, so tau is active too.
        const std::size_t row = *s.position(k + 1, tau);
        const int below = std::popcount(sigma & ((1U << j) - 1U));
        d(row, col) = (below % 2 == 0) ? 1 : -1;
      }
    }
    s.differentials.push_back(std::move(d));
  }
  return s;
}

DegreeSlice build_slice(const CMonomialIdeal& ideal, const MultiDegree& u) { return CechComplex(ideal).slice(u); }

SliceCohomology::SliceCohomology(DegreeSlice slice) : slice_(std::move(slice)) {
  ranks_.reserve(slice_.differentials.size());
  for (const auto& d : slice_.differentials) ranks_.push_back(rank(d));
  reports_.resize(slice_.levels.size());
}

std::size_t SliceCohomology::dim(std::size_t i) const {
  if (i > slice_.length()) return 0;
  const std::size_t out_rank = i < ranks_.size() ? ranks_[i] : 0;
  const std::size_t in_rank = i > 0 ? ranks_[i - 1] : 0;
  return slice_.dim(i) - out_rank - in_rank;
}

const CohomologyReport& SliceCohomology::report(std::size_t i) const {
  if (i > slice_.length()) throw std::out_of_range("cohomological index exceeds the Cech complex length");
  if (!reports_[i]) {
    auto r = std::make_unique<CohomologyReport>();
    r->i = i;
    r->u = slice_.u;
    const std::size_t n = slice_.dim(i);
    r->kernel = i < slice_.differentials.size() ? kernel_basis(slice_.differentials[i]) : RationalMatrix::identity(n);
    r->image = i > 0 ? column_space_basis(slice_.differentials[i - 1]) : RationalMatrix(n, 0);
    EchelonForm e = rref(RationalMatrix::hstack(r->image, r->kernel));
    std::vector<std::vector<Rational>> reps;
    for (std::size_t p : e.pivots)
      if (p >= r->image.cols()) reps.push_back(r->kernel.column_vector(p - r->image.cols()));
    r->representatives = RationalMatrix::from_columns(n, reps);
    r->dim = reps.size();
    if (r->dim != dim(i)) throw std::logic_error("cohomology basis disagrees with the rank count");
    reports_[i] = std::move(r);
  }
  return *reports_[i];
}

CohomologyReport cohomology(const CMonomialIdeal& ideal, std::size_t i, const MultiDegree& u) {
  ideal.check_degree(u);
  if (i > ideal.num_generators()) return CohomologyReport{i, u, 0, {}, {}, {}};
  SliceCohomology sc(build_slice(ideal, u));
  return sc.report(i);
}

std::vector<std::size_t> cohomology_dims(const CMonomialIdeal& ideal, const MultiDegree& u) {
  SliceCohomology sc(build_slice(ideal, u));
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i <= ideal.num_generators(); ++i) out.push_back(sc.dim(i));
  return out;
}

RationalMatrix cell_map(const DegreeSlice& source, const DegreeSlice& target, std::size_t k, CellOperator op,
                        std::size_t var) {
  const std::int64_t step = op == CellOperator::Multiply ? 1 : -1;
  if (var >= source.u.size() || target.u != source.u.shifted(var, step))
    throw DimensionError("cell_map: target degree is not adjacent to the source along the axis");
  RationalMatrix f(target.dim(k), source.dim(k));
  const Rational scale = op == CellOperator::Multiply ? Rational(1) : Rational(source.u[var]);
  for (std::size_t col = 0; col < source.dim(k); ++col) {
    const auto row = target.position(k, source.levels[k][col].sigma);
    if (row) {
      f(*row, col) = scale;
    } else if (sgn(scale) != 0) {
      throw std::logic_error("cell_map: nonzero image in an inactive cell");
    }
  }
  return f;
}

RationalMatrix induced_map(const RationalMatrix& cochain_map, const CohomologyReport& source,
                           const CohomologyReport& target) {
  if (source.dim == 0 || target.dim == 0) return RationalMatrix(target.dim, source.dim);
  const RationalMatrix images = cochain_map * source.representatives;
  const RationalMatrix coords =
      solve_in_span(RationalMatrix::hstack(target.image, target.representatives), images);
  RationalMatrix out(target.dim, source.dim);
  const std::size_t offset = target.image.cols();
  for (std::size_t r = 0; r < target.dim; ++r)
    for (std::size_t c = 0; c < source.dim; ++c) out(r, c) = coords(offset + r, c);
  return out;
}

const SliceCohomology& DegreeCache::at(const MultiDegree& u) {
  auto it = memo_.find(u);
  if (it == memo_.end()) it = memo_.emplace(u, std::make_unique<SliceCohomology>(complex_.slice(u))).first;
  return *it->second;
}

std::size_t DegreeCache::dim(std::size_t i, const MultiDegree& u) { return at(u).dim(i); }

RationalMatrix DegreeCache::chain_map(std::size_t i, const MultiDegree& u, CellOperator op, std::size_t var) {
  ideal().check_degree(u);
  if (var >= u.size()) throw std::out_of_range("axis out of range");
  const MultiDegree v = u.shifted(var, op == CellOperator::Multiply ? 1 : -1);
  if (i > complex_.length()) return RationalMatrix(0, 0);
  const SliceCohomology& src = at(u);
  const SliceCohomology& tgt = at(v);
  if (src.dim(i) == 0 || tgt.dim(i) == 0) return RationalMatrix(tgt.dim(i), src.dim(i));
  return induced_map(cell_map(src.slice(), tgt.slice(), i, op, var), src.report(i), tgt.report(i));
}

RationalMatrix x_chain_map(const CMonomialIdeal& ideal, std::size_t i, const MultiDegree& u, std::size_t var) {
  DegreeCache cache(ideal);
  return cache.chain_map(i, u, CellOperator::Multiply, var);
}

RationalMatrix partial_chain_map(const CMonomialIdeal& ideal, std::size_t i, const MultiDegree& u, std::size_t var) {
  DegreeCache cache(ideal);
  return cache.chain_map(i, u, CellOperator::Differentiate, var);
}

bool euler_action_check(DegreeCache& cache, std::size_t i, const MultiDegree& u) {
  cache.ideal().check_degree(u);
  if (i > cache.complex().length()) return true;
  const DegreeSlice& here = cache.at(u).slice();
  for (std::size_t var = 0; var < u.size(); ++var) {
    const DegreeSlice& below = cache.at(u.shifted(var, -1)).slice();
    const RationalMatrix euler = cell_map(below, here, i, CellOperator::Multiply, var) *
                                 cell_map(here, below, i, CellOperator::Differentiate, var);
    RationalMatrix expected(here.dim(i), here.dim(i));
    for (std::size_t k = 0; k < here.dim(i); ++k) expected(k, k) = u[var];
    if (!(euler - expected).is_zero()) return false;
  }
  return true;
}

bool euler_action_check(const CMonomialIdeal& ideal, std::size_t i, const MultiDegree& u) {
  DegreeCache cache(ideal);
  return euler_action_check(cache, i, u);
}

}  // namespace gradedlc
