#include "fractalscape/operator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace fractalscape {

LandscapeOperator::LandscapeOperator(std::vector<double> head, std::size_t block, double ratio)
    : head_(std::move(head)), block_(block), ratio_(ratio) {
  if (head_.empty()) throw std::invalid_argument("operator head must hold at least one level");
  if (block_ == 0) throw std::invalid_argument("operator block size must be positive");
  if (!(ratio_ > 0.0 && ratio_ < 1.0)) throw std::invalid_argument("operator ratio must lie in (0,1)");
  for (std::size_t i = 0; i < head_.size(); ++i) {
    if (!(head_[i] >= 0.0) || !std::isfinite(head_[i])) throw std::invalid_argument("head deaths must be finite and >= 0");
    if (i > 0 && head_[i] > head_[i - 1]) throw std::invalid_argument("head deaths must be nonincreasing");
  }
}

std::size_t LandscapeOperator::source_level(std::size_t j) const {
  if (j <= head_.size()) throw std::out_of_range("level " + std::to_string(j) + " belongs to the head");
  const std::size_t k = (j - head_.size() - 1) / block_ + 1;
  return k + 1;
}

LandscapeOperator wsi_operator(std::size_t n, double c, const DeltaProfile& deltas) {
  if (deltas.deltas.size() != n) {
    throw std::invalid_argument("delta profile has " + std::to_string(deltas.deltas.size()) +
                                " entries, expected " + std::to_string(n));
  }
  return LandscapeOperator(deltas.deltas, n, c);
}

Landscape apply_operator(const LandscapeOperator& op, const Landscape& g, std::size_t levels) {
  std::vector<PiecewiseLinearFn> out;
  out.reserve(levels);
  const std::size_t m = op.head().size();
  for (std::size_t j = 1; j <= levels; ++j) {
    if (j <= m) {
      out.push_back(PiecewiseLinearFn::from_hat({0.0, op.head()[j - 1]}));
    } else {
      const auto& source = g.level(op.source_level(j));
      out.push_back(source.is_zero() ? PiecewiseLinearFn{} : source.scaled(op.ratio()));
    }
  }
  return Landscape(std::move(out));
}

LipschitzBound lipschitz_bound(const LandscapeOperator& op, const Landscape& g1, const Landscape& g2) {
  // Enough output levels to consume every stored source level.
  const std::size_t depth = std::max(g1.size(), g2.size());
  const std::size_t levels = op.head().size() + op.block() * std::max<std::size_t>(depth, 1);
  return {sup_distance(apply_operator(op, g1, levels), apply_operator(op, g2, levels)),
          op.ratio() * sup_distance(g1, g2)};
}

std::vector<double> fixed_point_deaths(const LandscapeOperator& op, std::size_t levels) {
  const std::size_t m = op.head().size();
  if (m < 2) {
    // Level M + 1 would read itself; solve by iteration instead.
    const double tol = 1e-15 * std::max(1.0, op.head().front());
    const Landscape fp = iterate_operator(op, Landscape{}, tol, levels).landscape;
    std::vector<double> deaths;
    for (std::size_t k = 1; k <= levels; ++k) {
      const auto& bp = fp.level(k).breakpoints();
      deaths.push_back(bp.empty() ? 0.0 : bp.back().t);
    }
    return deaths;
  }
  std::vector<double> deaths(levels);
  for (std::size_t j = 1; j <= levels; ++j) {
    deaths[j - 1] = j <= m ? op.head()[j - 1] : op.ratio() * deaths[op.source_level(j) - 1];
  }
  return deaths;
}

Landscape fixed_point(const LandscapeOperator& op, std::size_t levels) {
  return Landscape::from_deaths(fixed_point_deaths(op, levels));
}

OperatorIteration iterate_operator(const LandscapeOperator& op, const Landscape& start, double tol,
                                   std::size_t levels) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  // Successive gaps shrink by at least c, so this many steps always suffice.
  const double first_gap = std::max(sup_norm(start), op.head().front()) * 2.0 + 1.0;
  const double steps = std::ceil(std::log(tol / first_gap) / std::log(op.ratio()));
  const std::size_t budget = static_cast<std::size_t>(std::max(0.0, steps)) + 2;

  Landscape current = start.truncated(levels);
  for (std::size_t iteration = 1;; ++iteration) {
    Landscape next = apply_operator(op, current, levels);
    const double gap = sup_distance(next, current);
    if (gap < tol || iteration >= budget) return {std::move(next), iteration};
    current = std::move(next);
  }
}

Hat closed_form_wsi(std::size_t n, double c, const DeltaProfile& deltas, std::size_t j) {
  if (n < 2) throw std::invalid_argument("closed form needs at least two maps");
  if (deltas.deltas.size() != n) throw std::invalid_argument("delta profile length must equal the map count");
  if (j == 0) throw std::out_of_range("landscape levels are 1-based");
  if (j <= n) return {0.0, deltas.deltas[j - 1]};

  // Unique k >= 1 with N^k < j <= N^(k+1); then l = ceil(j / N^k).
  std::size_t k = 1;
  std::size_t power = n;
  while (j > power * n) {
    power *= n;
    ++k;
  }
  const std::size_t l = (j + power - 1) / power;
  double death = deltas.deltas[l - 1];
  for (std::size_t i = 0; i < k; ++i) death = c * death;
  return {0.0, death};
}

}  // namespace fractalscape
