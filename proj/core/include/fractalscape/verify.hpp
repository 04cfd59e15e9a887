#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fractalscape/ifs.hpp"
#include "fractalscape/landscape.hpp"
#include "fractalscape/operator.hpp"

namespace fractalscape {

/// Absolute slack applied to every distance-versus-bound comparison.
inline constexpr double kBoundSlack = 1e-9;

struct ReportRow {
  std::size_t n;
  std::size_t points;
  double distance;
  double bound;
  bool pass;
};

struct VerificationReport {
  std::string title;
  std::vector<ReportRow> rows;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> failures;  ///< checks that span rows (e.g. decay rate)

  bool passed() const;
};

/// Aligned plain-text table.
std::string render_text(const VerificationReport& report);
/// `n,points,distance,bound,pass` rows.
std::string render_csv(const VerificationReport& report);

/// H0 landscape of a finite cloud.
Landscape cloud_landscape(const PointCloud& cloud, std::size_t levels = kAllLevels);

/// Compares op(f_n) with f_{n+1} for n = 1..n_max-1, where f_n is the
/// landscape of S_n = Psi^n(seed_points). `levels == kAllLevels` compares
/// every nonzero level.
VerificationReport commutation_report(const AffineIfs& ifs, const LandscapeOperator& op, std::size_t n_max,
                                      std::size_t levels = kAllLevels, std::size_t cap = kDefaultPointCap);

/// Compares f_n with the fixed point of `op` for n = 0..n_max against the
/// bound c^n delta_1, and checks that distances shrink by at least c per
/// step from n = 2 on.
VerificationReport convergence_report(const AffineIfs& ifs, const LandscapeOperator& op, std::size_t n_max,
                                      std::size_t levels = kAllLevels, std::size_t cap = kDefaultPointCap);

/// Random clouds Y in the unit square and perturbations Z of them; each row
/// checks sup_distance(landscape(Y), landscape(Z)) <= 2 hausdorff(Y, Z). The
/// factor 2 is needed because deaths are measured as merge distances rather
/// than ball radii.
VerificationReport stability_fuzz(std::size_t trials, std::size_t points_per_cloud, double perturbation,
                                  std::uint64_t seed = 0x5eed'f4ac'7a15'0001ULL);

}  // namespace fractalscape
