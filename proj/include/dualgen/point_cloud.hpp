#ifndef DUALGEN_POINT_CLOUD_HPP
#define DUALGEN_POINT_CLOUD_HPP

#include <Eigen/Core>
#include <stdexcept>
#include <string>

namespace dualgen {

/// Raised when a computation produces non-finite values. Carries enough
/// context to name the offending stage in diagnostics (maps to CLI exit 3).
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

/// Ordered set of N 3D points, optionally with per-point feature rows.
/// The universal currency between modules: partial inputs, completions,
/// ground truths all travel as PointCloud.
struct PointCloud {
  Eigen::MatrixX3d points;    // N x 3
  Eigen::MatrixXd features;   // N x D, or 0 x 0 when absent

  PointCloud() = default;
  explicit PointCloud(Eigen::MatrixX3d pts) : points(std::move(pts)) {}

  Eigen::Index size() const { return points.rows(); }
  bool has_features() const { return features.size() > 0; }
  Eigen::RowVector3d point(Eigen::Index i) const { return points.row(i); }
  Eigen::RowVector3d centroid() const { return points.colwise().mean(); }

  /// Throws std::domain_error on violated invariants (empty cloud,
  /// non-finite coordinates, feature row-count mismatch).
  void validate() const;
};

/// Rotation + translation. Rotation must be orthonormal with det +1.
struct RigidTransform {
  Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();
  Eigen::Vector3d translation = Eigen::Vector3d::Zero();

  static RigidTransform identity() { return {}; }
  void validate(double tol = 1e-6) const;
};

/// Per-pair evaluation summary. Raw (unscaled) values; reports apply the
/// conventional 1e4 / 1e2 multipliers when printing.
struct MetricReport {
  double cd_l2 = 0.0;
  double emd = 0.0;
  double f1 = 0.0;
  void validate() const;
};

/// Maps points through R * p + t. Pairwise distances are preserved.
PointCloud apply_transform(const PointCloud& cloud, const RigidTransform& t);

/// Rescales and recenters so the cloud fits the unit cube centered at the
/// origin (isotropic scale by the largest extent). Idempotent: applying it
/// twice gives bitwise the same coordinates as applying it once.
PointCloud normalize_unit_cube(const PointCloud& cloud);

/// Resamples to exactly n points: truncation keeps the lowest indices,
/// growth duplicates points cyclically. Deterministic.
PointCloud resample_to(const PointCloud& cloud, Eigen::Index n);

}  // namespace dualgen

#endif  // DUALGEN_POINT_CLOUD_HPP
