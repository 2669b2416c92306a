#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>
#include <vector>

namespace flexcone {

using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;

enum class Model { euclidean, klein, hyperboloid, desitter, halfspace };

std::string model_name(Model m);
Model model_from_name(const std::string& s);

// <x,y> = -x0*y0 + x1*y1 + x2*y2 + x3*y3
double minkowski_dot(const Vec4& x, const Vec4& y);

// A point in one of the supported models. 3-coordinate models (euclidean,
// klein, halfspace) use x[0..2] and keep x[3] = 0; the Minkowski models use
// all four coordinates.
struct ModelPoint {
  Model model = Model::euclidean;
  Vec4 x = Vec4::Zero();

  static ModelPoint make3(Model m, const Vec3& p);
  static ModelPoint make4(Model m, const Vec4& p);
  Vec3 v3() const { return x.head<3>(); }
};

// Lifts along the central projection. Throw std::domain_error when the
// point is on the wrong side of the unit sphere.
Vec4 klein_to_hyperboloid(const Vec3& p);  // |p| < 1
Vec4 klein_to_desitter(const Vec3& p);     // |p| > 1
Vec3 hyperboloid_to_klein(const Vec4& x);
Vec3 desitter_to_klein(const Vec4& x);  // requires x0 != 0
Vec4 halfspace_to_hyperboloid(const Vec3& u);
Vec3 hyperboloid_to_halfspace(const Vec4& x);

ModelPoint convert_model(const ModelPoint& p, Model target);

// arccosh(-<p,q>) after converting both points to the hyperboloid.
double hyp_distance(const ModelPoint& p, const ModelPoint& q);
double hyp_distance(const Vec4& p, const Vec4& q);  // hyperboloid points

// Plane a.x = b in klein/euclidean coordinates, |a| = 1.
struct Plane {
  Vec3 n = Vec3::UnitZ();
  double b = 0.0;
};

// Polar plane of a de Sitter point (klein coordinates of the dual plane).
Plane polar_dual(const ModelPoint& p);
// arccosh(-<pi,pj>) for de Sitter points with <pi,pj> <= -1.
double dual_plane_distance(const ModelPoint& pi, const ModelPoint& pj);

// exp_p(t v) on the hyperboloid; v must satisfy <p,v> = 0.
ModelPoint geodesic_point(const ModelPoint& p, const Vec4& v, double t);

// Distance between complete geodesics through {a1,b1} and {a2,b2}
// (hyperboloid points). Returns 0 for intersecting or asymptotic lines.
double line_line_distance(const Vec4& a1, const Vec4& b1, const Vec4& a2,
                          const Vec4& b2);
// Distance between the geodesic segments [a1,b1] and [a2,b2].
double segment_segment_distance(const Vec4& a1, const Vec4& b1,
                                const Vec4& a2, const Vec4& b2);

// Rows form a Euclidean-orthonormal basis of {v : <p,v> = 0}.
Eigen::Matrix<double, 3, 4> tangent_basis(const Vec4& p);

// x / sqrt(-<x,x>), throws if x is not timelike.
Vec4 normalize_timelike(const Vec4& x);

// Six fields spanning the trivial-motion space, evaluated at the points.
std::vector<std::vector<Vec3>> killing_basis_euclidean(
    const std::vector<Vec3>& pts);
std::vector<std::vector<Vec4>> killing_basis_minkowski(
    const std::vector<Vec4>& pts);

}  // namespace flexcone
