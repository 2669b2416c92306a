#include "flexcone/geom.hpp"

#include <cmath>
#include <functional>

namespace flexcone {

namespace {
const Eigen::Matrix4d& minkowski_form() {
  static const Eigen::Matrix4d J = [] {
    Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
    m(0, 0) = -1.0;
    return m;
  }();
  return J;
}
}  // namespace

std::string model_name(Model m) {
  switch (m) {
    case Model::euclidean: return "euclidean";
    case Model::klein: return "klein";
    case Model::hyperboloid: return "hyperboloid";
    case Model::desitter: return "desitter";
    case Model::halfspace: return "halfspace";
  }
  return "?";
}

Model model_from_name(const std::string& s) {
  if (s == "euclidean") return Model::euclidean;
  if (s == "klein") return Model::klein;
  if (s == "hyperboloid") return Model::hyperboloid;
  if (s == "desitter") return Model::desitter;
  if (s == "halfspace") return Model::halfspace;
  throw std::invalid_argument("unknown model: " + s);
}

double minkowski_dot(const Vec4& x, const Vec4& y) {
  return -x[0] * y[0] + x[1] * y[1] + x[2] * y[2] + x[3] * y[3];
}

ModelPoint ModelPoint::make3(Model m, const Vec3& p) {
  if (m == Model::hyperboloid || m == Model::desitter)
    throw std::invalid_argument("4 coordinates required for Minkowski models");
  ModelPoint mp;
  mp.model = m;
  mp.x << p[0], p[1], p[2], 0.0;
  return mp;
}

ModelPoint ModelPoint::make4(Model m, const Vec4& p) {
  if (m != Model::hyperboloid && m != Model::desitter)
    throw std::invalid_argument("4-coordinate point needs a Minkowski model");
  ModelPoint mp;
  mp.model = m;
  mp.x = p;
  return mp;
}

Vec4 klein_to_hyperboloid(const Vec3& p) {
  double n2 = 1.0 - p.squaredNorm();
  if (n2 <= 1e-12)
    throw std::domain_error("klein point not strictly inside the unit ball");
  Vec4 x;
  x << 1.0, p[0], p[1], p[2];
  return x / std::sqrt(n2);
}

Vec4 klein_to_desitter(const Vec3& p) {
  double n2 = p.squaredNorm() - 1.0;
  if (n2 <= 1e-12)
    throw std::domain_error("klein point not strictly outside the unit ball");
  Vec4 x;
  x << 1.0, p[0], p[1], p[2];
  return x / std::sqrt(n2);
}

Vec3 hyperboloid_to_klein(const Vec4& x) {
  if (x[0] <= 0.0) throw std::domain_error("hyperboloid point must have x0 > 0");
  return x.tail<3>() / x[0];
}

Vec3 desitter_to_klein(const Vec4& x) {
  if (std::abs(x[0]) < 1e-12)
    throw std::domain_error("de Sitter point with x0 = 0 has no klein image");
  return x.tail<3>() / x[0];
}

Vec4 halfspace_to_hyperboloid(const Vec3& u) {
  double h = u[2];
  if (h <= 0.0) throw std::domain_error("halfspace point needs height > 0");
  double n = u[0] * u[0] + u[1] * u[1] + h * h;
  Vec4 x;
  x << (1.0 + n) / (2.0 * h), u[0] / h, u[1] / h, (1.0 - n) / (2.0 * h);
  return x;
}

Vec3 hyperboloid_to_halfspace(const Vec4& x) {
  double s = x[0] + x[3];
  if (s <= 0.0) throw std::domain_error("point maps to the boundary at infinity");
  return Vec3(x[1] / s, x[2] / s, 1.0 / s);
}

ModelPoint convert_model(const ModelPoint& p, Model target) {
  if (p.model == target) return p;
  switch (p.model) {
    case Model::klein:
      if (target == Model::hyperboloid)
        return ModelPoint::make4(target, klein_to_hyperboloid(p.v3()));
      if (target == Model::desitter)
        return ModelPoint::make4(target, klein_to_desitter(p.v3()));
      if (target == Model::halfspace)
        return ModelPoint::make3(
            target, hyperboloid_to_halfspace(klein_to_hyperboloid(p.v3())));
      break;
    case Model::hyperboloid:
      if (target == Model::klein)
        return ModelPoint::make3(target, hyperboloid_to_klein(p.x));
      if (target == Model::halfspace)
        return ModelPoint::make3(target, hyperboloid_to_halfspace(p.x));
      break;
    case Model::desitter:
      if (target == Model::klein)
        return ModelPoint::make3(target, desitter_to_klein(p.x));
      break;
    case Model::halfspace:
      if (target == Model::hyperboloid)
        return ModelPoint::make4(target, halfspace_to_hyperboloid(p.v3()));
      if (target == Model::klein)
        return ModelPoint::make3(
            target, hyperboloid_to_klein(halfspace_to_hyperboloid(p.v3())));
      break;
    default:
      break;
  }
  throw std::invalid_argument("unsupported model conversion " +
                              model_name(p.model) + " -> " + model_name(target));
}

double hyp_distance(const Vec4& p, const Vec4& q) {
  double c = -minkowski_dot(p, q);
  if (c < 1.0 - 1e-9)
    throw std::domain_error("points are not both on the hyperboloid");
  return std::acosh(std::max(c, 1.0));
}

double hyp_distance(const ModelPoint& p, const ModelPoint& q) {
  Vec4 a = convert_model(p, Model::hyperboloid).x;
  Vec4 b = convert_model(q, Model::hyperboloid).x;
  return hyp_distance(a, b);
}

Plane polar_dual(const ModelPoint& p) {
  Vec4 d = p.model == Model::desitter ? p.x : klein_to_desitter(p.v3());
  // Klein point (1,y): <(1,y)/n, d> = 0  <=>  y . d_spatial = d0.
  Vec3 a = d.tail<3>();
  double na = a.norm();
  if (na < 1e-14) throw std::domain_error("degenerate de Sitter point");
  return Plane{a / na, d[0] / na};
}

double dual_plane_distance(const ModelPoint& pi, const ModelPoint& pj) {
  Vec4 a = pi.model == Model::desitter ? pi.x : klein_to_desitter(pi.v3());
  Vec4 b = pj.model == Model::desitter ? pj.x : klein_to_desitter(pj.v3());
  double ip = minkowski_dot(a, b);
  if (ip > -1.0 + 1e-12)
    throw std::domain_error("polar planes intersect or are tangent");
  return std::acosh(-ip);
}

ModelPoint geodesic_point(const ModelPoint& p, const Vec4& v, double t) {
  Vec4 x = convert_model(p, Model::hyperboloid).x;
  double tang = minkowski_dot(x, v);
  double scale = std::max(1.0, v.norm());
  if (std::abs(tang) > 1e-10 * scale)
    throw std::invalid_argument("velocity is not tangent to the hyperboloid");
  double n2 = minkowski_dot(v, v);
  if (n2 <= 0.0) {
    if (v.norm() < 1e-15) return ModelPoint::make4(Model::hyperboloid, x);
    throw std::invalid_argument("tangent vector must be spacelike");
  }
  double n = std::sqrt(n2);
  Vec4 out = std::cosh(t * n) * x + std::sinh(t * n) * (v / n);
  return ModelPoint::make4(Model::hyperboloid, out);
}

Vec4 normalize_timelike(const Vec4& x) {
  double q = -minkowski_dot(x, x);
  if (q <= 0.0) throw std::domain_error("vector is not timelike");
  Vec4 y = x / std::sqrt(q);
  if (y[0] < 0) y = -y;
  return y;
}

Eigen::Matrix<double, 3, 4> tangent_basis(const Vec4& p) {
  Eigen::Matrix<double, 1, 4> row = (minkowski_form() * p).transpose();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(row, Eigen::ComputeFullV);
  Eigen::Matrix<double, 3, 4> tb;
  for (int k = 0; k < 3; ++k) tb.row(k) = svd.matrixV().col(k + 1).transpose();
  return tb;
}

namespace {

// Unit tangent at p pointing toward q (both hyperboloid points).
Vec4 log_dir(const Vec4& p, const Vec4& q) {
  Vec4 w = q + minkowski_dot(p, q) * p;
  double n2 = minkowski_dot(w, w);
  if (n2 <= 1e-28) throw std::domain_error("coincident points define no line");
  return w / std::sqrt(n2);
}

double golden_min(const std::function<double(double)>& f, double lo, double hi,
                  double tol) {
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - gr * (b - a), d = a + gr * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = f(d);
    }
  }
  double m = 0.5 * (a + b);
  return std::min({f(m), f(a), f(b)});
}

}  // namespace

double line_line_distance(const Vec4& a1, const Vec4& b1, const Vec4& a2,
                          const Vec4& b2) {
  Vec4 p1 = normalize_timelike(a1), p2 = normalize_timelike(a2);
  Vec4 w1 = log_dir(p1, normalize_timelike(b1));
  Vec4 w2 = log_dir(p2, normalize_timelike(b2));
  // Minimize f(s,t) = -<g1(s), g2(t)>, g(s) = cosh(s) p + sinh(s) w.
  double s = 0.0, t = 0.0;
  for (int it = 0; it < 100; ++it) {
    double cs = std::cosh(s), ss = std::sinh(s);
    double ct = std::cosh(t), st = std::sinh(t);
    Vec4 g1 = cs * p1 + ss * w1, d1 = ss * p1 + cs * w1;
    Vec4 g2 = ct * p2 + st * w2, d2 = st * p2 + ct * w2;
    double f = -minkowski_dot(g1, g2);
    double fs = -minkowski_dot(d1, g2);
    double ft = -minkowski_dot(g1, d2);
    double fss = -minkowski_dot(g1, g2);
    double ftt = fss;
    double fst = -minkowski_dot(d1, d2);
    double det = fss * ftt - fst * fst;
    if (std::abs(det) < 1e-15) break;
    double ds = (ftt * fs - fst * ft) / det;
    double dt = (fss * ft - fst * fs) / det;
    s -= ds;
    t -= dt;
    if (std::abs(s) > 30 || std::abs(t) > 30) return 0.0;
    if (std::abs(ds) < 1e-14 && std::abs(dt) < 1e-14) break;
    (void)f;
  }
  double cs = std::cosh(s), ss = std::sinh(s);
  double ct = std::cosh(t), st = std::sinh(t);
  double f = -minkowski_dot(Vec4(cs * p1 + ss * w1), Vec4(ct * p2 + st * w2));
  if (f <= 1.0 + 1e-9) return 0.0;
  return std::acosh(f);
}

double segment_segment_distance(const Vec4& a1, const Vec4& b1, const Vec4& a2,
                                const Vec4& b2) {
  Vec4 A1 = normalize_timelike(a1), B1 = normalize_timelike(b1);
  Vec4 A2 = normalize_timelike(a2), B2 = normalize_timelike(b2);
  auto at = [](const Vec4& a, const Vec4& b, double s) {
    return normalize_timelike((1.0 - s) * a + s * b);
  };
  auto outer = [&](double s) {
    Vec4 x = at(A1, B1, s);
    auto inner = [&](double t) { return -minkowski_dot(x, at(A2, B2, t)); };
    return golden_min(inner, 0.0, 1.0, 1e-10);
  };
  double f = golden_min(outer, 0.0, 1.0, 1e-10);
  if (f <= 1.0) return 0.0;
  return std::acosh(f);
}

std::vector<std::vector<Vec3>> killing_basis_euclidean(
    const std::vector<Vec3>& pts) {
  size_t n = pts.size();
  if (n < 3) throw std::invalid_argument("need at least 3 points");
  Vec3 c = Vec3::Zero();
  for (const auto& p : pts) c += p;
  c /= double(n);
  Eigen::MatrixXd M(n, 3);
  for (size_t i = 0; i < n; ++i) M.row(i) = (pts[i] - c).transpose();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
  const auto& sv = svd.singularValues();
  if (sv.size() < 2 || sv[1] < 1e-12 * std::max(1.0, sv[0]))
    throw std::invalid_argument("collinear points: trivial space degenerates");
  std::vector<std::vector<Vec3>> basis;
  for (int k = 0; k < 3; ++k) {
    std::vector<Vec3> f(n, Vec3::Unit(k));
    basis.push_back(std::move(f));
  }
  for (int k = 0; k < 3; ++k) {
    std::vector<Vec3> f(n);
    for (size_t i = 0; i < n; ++i) f[i] = Vec3::Unit(k).cross(pts[i]);
    basis.push_back(std::move(f));
  }
  return basis;
}

std::vector<std::vector<Vec4>> killing_basis_minkowski(
    const std::vector<Vec4>& pts) {
  size_t n = pts.size();
  if (n < 3) throw std::invalid_argument("need at least 3 points");
  Eigen::MatrixXd M(n, 4);
  for (size_t i = 0; i < n; ++i) M.row(i) = pts[i].transpose();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
  const auto& sv = svd.singularValues();
  if (sv[2] < 1e-12 * std::max(1.0, sv[0]))
    throw std::invalid_argument("degenerate Minkowski configuration");
  std::vector<std::vector<Vec4>> basis;
  const Eigen::Matrix4d& J = minkowski_form();
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      Eigen::Matrix4d S = Eigen::Matrix4d::Zero();
      S(i, j) = 1.0;
      S(j, i) = -1.0;
      Eigen::Matrix4d A = J * S;
      std::vector<Vec4> f(n);
      for (size_t k = 0; k < n; ++k) f[k] = A * pts[k];
      basis.push_back(std::move(f));
    }
  return basis;
}

}  // namespace flexcone
