#include "dualgen/point_cloud.hpp"

#include <cmath>

namespace dualgen {

void PointCloud::validate() const {
  if (points.rows() < 1) throw std::domain_error("PointCloud: N must be >= 1");
  if (!points.allFinite())
    throw std::domain_error("PointCloud: non-finite coordinates");
  if (has_features() && features.rows() != points.rows())
    throw std::domain_error("PointCloud: feature rows must equal point count");
  if (has_features() && !features.allFinite())
    throw std::domain_error("PointCloud: non-finite features");
}

void RigidTransform::validate(double tol) const {
  Eigen::Matrix3d rtr = rotation.transpose() * rotation;
  if ((rtr - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() > tol)
    throw std::domain_error("RigidTransform: rotation is not orthonormal");
  if (std::abs(rotation.determinant() - 1.0) > tol)
    throw std::domain_error("RigidTransform: determinant must be +1");
  if (!translation.allFinite())
    throw std::domain_error("RigidTransform: non-finite translation");
}

void MetricReport::validate() const {
  if (cd_l2 < 0 || emd < 0 || f1 < 0)
    throw std::domain_error("MetricReport: negative metric value");
  if (f1 > 1.0) throw std::domain_error("MetricReport: f1 must be <= 1");
}

PointCloud apply_transform(const PointCloud& cloud, const RigidTransform& t) {
  t.validate();
  PointCloud out = cloud;
  out.points = (cloud.points * t.rotation.transpose()).rowwise() +
               t.translation.transpose();
  return out;
}

PointCloud normalize_unit_cube(const PointCloud& cloud) {
  cloud.validate();
  Eigen::RowVector3d lo = cloud.points.colwise().minCoeff();
  Eigen::RowVector3d hi = cloud.points.colwise().maxCoeff();
  Eigen::RowVector3d center = 0.5 * (lo + hi);
  double extent = (hi - lo).maxCoeff();
  if (extent <= 0.0) extent = 1.0;  // degenerate single-location cloud
  PointCloud out = cloud;
  out.points = (cloud.points.rowwise() - center) / extent;
  return out;
}

PointCloud resample_to(const PointCloud& cloud, Eigen::Index n) {
  cloud.validate();
  if (n < 1) throw std::domain_error("resample_to: n must be >= 1");
  PointCloud out;
  out.points.resize(n, 3);
  const Eigen::Index m = cloud.size();
  for (Eigen::Index i = 0; i < n; ++i) out.points.row(i) = cloud.points.row(i % m);
  if (cloud.has_features()) {
    out.features.resize(n, cloud.features.cols());
    for (Eigen::Index i = 0; i < n; ++i)
      out.features.row(i) = cloud.features.row(i % m);
  }
  return out;
}

}  // namespace dualgen
