#include "flexcone/rigidity.hpp"

#include <cmath>

namespace flexcone {

Eigen::MatrixXd rigidity_matrix_euclidean(const std::vector<Vec3>& V,
                                          const std::vector<Edge>& edges) {
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(edges.size(), 3 * V.size());
  for (size_t r = 0; r < edges.size(); ++r) {
    int i = edges[r].a, j = edges[r].b;
    Vec3 d = V[i] - V[j];
    M.block<1, 3>(r, 3 * i) = d.transpose();
    M.block<1, 3>(r, 3 * j) = -d.transpose();
  }
  return M;
}

Eigen::MatrixXd rigidity_matrix_minkowski(
    const std::vector<Vec4>& P, const std::vector<Edge>& edges,
    const std::vector<Eigen::Matrix<double, 3, 4>>& tb) {
  Eigen::Matrix4d J = Eigen::Matrix4d::Identity();
  J(0, 0) = -1.0;
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(edges.size(), 3 * P.size());
  for (size_t r = 0; r < edges.size(); ++r) {
    int i = edges[r].a, j = edges[r].b;
    Eigen::RowVector4d d = ((P[i] - P[j]).transpose() * J);
    M.block<1, 3>(r, 3 * i) = d * tb[i].transpose();
    M.block<1, 3>(r, 3 * j) = -d * tb[j].transpose();
  }
  return M;
}

std::vector<Vec4> minkowski_points(const TriangulatedPolyhedron& P) {
  std::vector<Vec4> pts(P.V.size());
  for (size_t i = 0; i < P.V.size(); ++i) {
    if (P.model == Model::hyperboloid || P.model == Model::desitter) {
      pts[i] = P.V[i];
    } else if (P.model == Model::klein) {
      Vec3 p = P.v3(int(i));
      pts[i] = p.squaredNorm() < 1.0 ? klein_to_hyperboloid(p)
                                     : klein_to_desitter(p);
    } else {
      throw std::invalid_argument(
          "Minkowski ambient needs klein or quadric coordinates");
    }
  }
  return pts;
}

namespace {

int svd_rank(const Eigen::MatrixXd& M, double tol) {
  if (M.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s[0] <= 0.0) return 0;
  int r = 0;
  for (int k = 0; k < s.size(); ++k)
    if (s[k] > tol * s[0]) ++r;
  return r;
}

FlexReport analyze(const Eigen::MatrixXd& R, const Eigen::MatrixXd& K,
                   double tol) {
  FlexReport rep;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(R, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  for (int k = 0; k < s.size(); ++k) rep.sigma.push_back(s[k]);
  double smax = s.size() ? s[0] : 0.0;
  int rank = 0;
  for (int k = 0; k < s.size(); ++k)
    if (s[k] > tol * smax) ++rank;
  int ncols = int(R.cols());
  rep.kernel_dim = ncols - rank;
  rep.trivial_dim = svd_rank(K, 1e-9);
  if (rep.trivial_dim < 6)
    throw std::domain_error("degenerate configuration: trivial dim < 6");
  rep.flexible = rep.kernel_dim > rep.trivial_dim;
  // Kernel basis, Killing part projected out.
  Eigen::MatrixXd ker(ncols, rep.kernel_dim);
  for (int k = 0; k < rep.kernel_dim; ++k)
    ker.col(k) = svd.matrixV().col(rank + k);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(K);
  Eigen::MatrixXd Q =
      qr.householderQ() * Eigen::MatrixXd::Identity(ncols, rep.trivial_dim);
  Eigen::MatrixXd proj = ker - Q * (Q.transpose() * ker);
  // Orthonormalize the leftover and keep significant directions.
  std::vector<Eigen::VectorXd> kept;
  for (int k = 0; k < proj.cols(); ++k) {
    Eigen::VectorXd v = proj.col(k);
    for (const auto& u : kept) v -= u.dot(v) * u;
    if (v.norm() > 1e-6) kept.push_back(v.normalized());
  }
  for (auto& v : kept) {
    // Normalize so the largest per-vertex speed is 1.
    double vmax = 0.0;
    for (int i = 0; i < ncols / 3; ++i)
      vmax = std::max(vmax, v.segment<3>(3 * i).norm());
    v /= vmax;
    FlexField f;
    f.ambient = Ambient::euclidean;  // caller re-tags for Minkowski
    for (int i = 0; i < ncols / 3; ++i) f.q3.push_back(v.segment<3>(3 * i));
    rep.nontrivial.push_back(std::move(f));
  }
  return rep;
}

}  // namespace

FlexReport flex_analysis_minkowski(const std::vector<Vec4>& pts,
                                   const std::vector<Edge>& edges,
                                   double tol) {
  std::vector<Eigen::Matrix<double, 3, 4>> tb(pts.size());
  for (size_t i = 0; i < pts.size(); ++i) tb[i] = tangent_basis(pts[i]);
  Eigen::MatrixXd R = rigidity_matrix_minkowski(pts, edges, tb);
  auto killing = killing_basis_minkowski(pts);
  Eigen::MatrixXd K(3 * pts.size(), 6);
  for (int c = 0; c < 6; ++c)
    for (size_t i = 0; i < pts.size(); ++i)
      K.block<3, 1>(3 * i, c) = tb[i] * killing[c][i];
  FlexReport rep = analyze(R, K, tol);
  for (auto& f : rep.nontrivial) {
    f.ambient = Ambient::minkowski;
    f.q4.resize(pts.size());
    for (size_t i = 0; i < pts.size(); ++i)
      f.q4[i] = tb[i].transpose() * f.q3[i];
    f.q3.clear();
  }
  return rep;
}

FlexReport flex_analysis(const TriangulatedPolyhedron& P, Ambient ambient,
                         double tol) {
  if (ambient == Ambient::euclidean) {
    if (P.model != Model::euclidean && P.model != Model::klein)
      throw std::invalid_argument("euclidean ambient needs 3-coordinates");
    std::vector<Vec3> V(P.V.size());
    for (size_t i = 0; i < V.size(); ++i) V[i] = P.v3(int(i));
    Eigen::MatrixXd R = rigidity_matrix_euclidean(V, P.edges);
    auto killing = killing_basis_euclidean(V);
    Eigen::MatrixXd K(3 * V.size(), 6);
    for (int c = 0; c < 6; ++c)
      for (size_t i = 0; i < V.size(); ++i)
        K.block<3, 1>(3 * i, c) = killing[c][i];
    return analyze(R, K, tol);
  }
  return flex_analysis_minkowski(minkowski_points(P), P.edges, tol);
}

double rigidity_residual(const TriangulatedPolyhedron& P, const FlexField& q) {
  double res = 0.0;
  if (q.ambient == Ambient::euclidean) {
    for (const auto& e : P.edges) {
      Vec3 d = P.v3(e.a) - P.v3(e.b);
      res = std::max(res, std::abs(d.dot(q.q3[e.a] - q.q3[e.b])));
    }
  } else {
    auto pts = minkowski_points(P);
    for (const auto& e : P.edges) {
      Vec4 d = pts[e.a] - pts[e.b];
      res = std::max(
          res, std::abs(minkowski_dot(d, q.q4[e.a] - q.q4[e.b])));
    }
  }
  return res;
}

Vec3 pogorelov_velocity(const Vec3& p, const Vec3& q) {
  double n2 = p.squaredNorm();
  if (std::abs(n2 - 1.0) < 1e-12)
    throw std::domain_error("Pogorelov transfer undefined on the sphere");
  return q - p.dot(q) * p;
}

Vec4 lift_velocity_hyperboloid(const Vec3& p, const Vec3& v) {
  double n = std::sqrt(1.0 - p.squaredNorm());
  Vec4 e0;
  e0 << 0.0, v[0], v[1], v[2];
  Vec4 up;
  up << 1.0, p[0], p[1], p[2];
  return e0 / n + (p.dot(v) / (n * n * n)) * up;
}

Vec4 lift_velocity_desitter(const Vec3& p, const Vec3& v) {
  double n = std::sqrt(p.squaredNorm() - 1.0);
  Vec4 e0;
  e0 << 0.0, v[0], v[1], v[2];
  Vec4 up;
  up << 1.0, p[0], p[1], p[2];
  return e0 / n - (p.dot(v) / (n * n * n)) * up;
}

std::vector<double> angle_variation(const TriangulatedPolyhedron& P,
                                    const FlexField& q, double h) {
  if (rigidity_residual(P, q) > 1e-6)
    throw std::invalid_argument("flex is not near-isometric");
  auto angles_at = [&](double t) {
    TriangulatedPolyhedron Pt = P;
    if (q.ambient == Ambient::euclidean) {
      for (size_t i = 0; i < P.V.size(); ++i)
        Pt.V[i].head<3>() = P.v3(int(i)) + t * q.q3[i];
    } else {
      Pt.model = Model::hyperboloid;
      auto pts = minkowski_points(P);
      for (size_t i = 0; i < P.V.size(); ++i)
        Pt.V[i] = normalize_timelike(pts[i] + t * q.q4[i]);
    }
    std::vector<double> th(P.edges.size());
    for (size_t e = 0; e < P.edges.size(); ++e)
      th[e] = dihedral_angle(Pt, int(e));
    return th;
  };
  auto plus = angles_at(h), minus = angles_at(-h);
  std::vector<double> out(P.edges.size());
  for (size_t e = 0; e < P.edges.size(); ++e)
    out[e] = (plus[e] - minus[e]) / (2.0 * h);
  return out;
}

BlaschkeResult blaschke_liebmann(const TriangulatedPolyhedron& P, double tol) {
  if (P.V.size() != 6 || P.F.size() != 8 || P.edges.size() != 12)
    throw std::invalid_argument("Blaschke-Liebmann needs an octahedron");
  if (!P.coloring || P.coloring->black.size() != 4 ||
      P.coloring->white.size() != 4)
    throw std::invalid_argument("octahedron needs a 4+4 face coloring");
  auto det_of = [&](const std::vector<int>& faces) {
    Eigen::Matrix4d M;
    for (int r = 0; r < 4; ++r) {
      Plane pl = face_plane(P, faces[r]);
      M.row(r) << pl.n[0], pl.n[1], pl.n[2], -pl.b;
    }
    return M.determinant();
  };
  BlaschkeResult res;
  res.det_black = det_of(P.coloring->black);
  res.det_white = det_of(P.coloring->white);
  res.flexible = std::abs(res.det_black) < tol;
  return res;
}

}  // namespace flexcone
