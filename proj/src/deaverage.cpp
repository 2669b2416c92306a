#include "flexcone/deaverage.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "flexcone/generators.hpp"

namespace flexcone {

namespace {

const int kSwapMap[6] = {3, 5, 4, 0, 2, 1};

Eigen::Matrix3d rot_z(double t) {
  Eigen::Matrix3d R;
  R << std::cos(t), -std::sin(t), 0, std::sin(t), std::cos(t), 0, 0, 0, 1;
  return R;
}

}  // namespace

SymmetricFlex schonhardt_symmetric_flex(double a, double b, double twist) {
  SymmetricFlex sf;
  sf.poly = hyperbolic_schonhardt(a, b, twist);
  const TriangulatedPolyhedron& P = sf.poly;

  // Explicit flex: bases at rest, top vertices move along the normals of
  // the side faces through them.
  Vec3 n = (P.v3(1) - P.v3(0)).cross(P.v3(5) - P.v3(0)).normalized();
  std::vector<Vec3> q(6, Vec3::Zero());
  q[5] = n;
  q[3] = rot_z(2 * M_PI / 3) * n;
  q[4] = rot_z(4 * M_PI / 3) * n;

  // Symmetrize with the pi-rotation s swapping the two bases.
  Vec3 u(std::cos(M_PI / 4), std::sin(M_PI / 4), 0.0);
  Eigen::Matrix3d S = 2.0 * u * u.transpose() - Eigen::Matrix3d::Identity();
  std::vector<Vec3> qs(6);
  for (int i = 0; i < 6; ++i) qs[i] = 0.5 * (q[i] + S * q[kSwapMap[i]]);

  double res = 0.0;
  for (const auto& e : P.edges)
    res = std::max(res, std::abs((P.v3(e.a) - P.v3(e.b))
                                     .dot(qs[e.a] - qs[e.b])));
  if (res > 1e-10)
    throw std::domain_error("symmetrized field is not a flex");
  double mx = 0.0;
  for (const auto& v : qs) mx = std::max(mx, v.norm());
  for (auto& v : qs) v /= mx;

  for (int i = 0; i < 6; ++i) {
    sf.P.push_back(klein_to_hyperboloid(P.v3(i)));
    Vec3 vg = pogorelov_velocity(P.v3(i), qs[i]);
    sf.Q.push_back(lift_velocity_hyperboloid(P.v3(i), vg));
  }
  return sf;
}

std::vector<Vec4> flex_path(const std::vector<Vec4>& P,
                            const std::vector<Vec4>& Q, double t) {
  std::vector<Vec4> out;
  for (size_t i = 0; i < P.size(); ++i)
    out.push_back(normalize_timelike(P[i] + t * Q[i]));
  return out;
}

std::vector<double> edge_spectrum(const std::vector<Vec4>& pts,
                                  const std::vector<Edge>& edges) {
  std::vector<double> s;
  for (const auto& e : edges) s.push_back(hyp_distance(pts[e.a], pts[e.b]));
  std::sort(s.begin(), s.end());
  return s;
}

bool congruent(const std::vector<Vec4>& A, const std::vector<Vec4>& B,
               const std::vector<std::array<int, 3>>& faces, double tol) {
  int n = int(A.size());
  if (B.size() != A.size()) throw std::invalid_argument("size mismatch");
  std::set<std::array<int, 3>> fs;
  for (auto f : faces) {
    std::sort(f.begin(), f.end());
    fs.insert(f);
  }
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (const auto& f : faces) {
      std::array<int, 3> g{perm[f[0]], perm[f[1]], perm[f[2]]};
      std::sort(g.begin(), g.end());
      if (!fs.count(g)) {
        ok = false;
        break;
      }
    }
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n && ok; ++j)
        if (std::abs(hyp_distance(A[i], A[j]) -
                     hyp_distance(B[perm[i]], B[perm[j]])) > tol)
          ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

DeaverageResult deaverage(const TriangulatedPolyhedron& poly,
                          const std::vector<Vec4>& P,
                          const std::vector<Vec4>& Q, double t) {
  DeaverageResult r;
  r.plus = flex_path(P, Q, t);
  r.minus = flex_path(P, Q, -t);
  auto sp = edge_spectrum(r.plus, poly.edges);
  auto sm = edge_spectrum(r.minus, poly.edges);
  for (size_t i = 0; i < sp.size(); ++i)
    r.spectrum_gap = std::max(r.spectrum_gap, std::abs(sp[i] - sm[i]));
  r.congruent = congruent(r.plus, r.minus, poly.F);
  return r;
}

const std::array<std::vector<std::pair<int, int>>, 3>&
schonhardt_edge_classes() {
  static const std::array<std::vector<std::pair<int, int>>, 3> cl = {
      std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2},
                                       {3, 4}, {3, 5}, {4, 5}},
      std::vector<std::pair<int, int>>{{0, 5}, {1, 3}, {2, 4}},
      std::vector<std::pair<int, int>>{{0, 4}, {1, 5}, {2, 3}}};
  return cl;
}

Vec3 cone_angle_triple(int family, double t, double a, double b) {
  SymmetricFlex sf = schonhardt_symmetric_flex(a, b);
  double t1, t2;
  switch (family) {
    case 1: t1 = t; t2 = t; break;
    case 2: t1 = t; t2 = -t; break;
    case 3: t1 = -t; t2 = -t; break;
    default: throw std::invalid_argument("family must be 1, 2 or 3");
  }
  TriangulatedPolyhedron A = build_polyhedron(
      Model::hyperboloid, flex_path(sf.P, sf.Q, t1), sf.poly.F);
  TriangulatedPolyhedron B = build_polyhedron(
      Model::hyperboloid, flex_path(sf.P, sf.Q, t2), sf.poly.F);
  Vec3 out;
  int c = 0;
  for (const auto& cl : schonhardt_edge_classes()) {
    double lo = 1e300, hi = -1e300, sum = 0.0;
    for (auto [i, j] : cl) {
      double v = dihedral_angle(A, A.edge_index(i, j)) +
                 dihedral_angle(B, B.edge_index(i, j));
      lo = std::min(lo, v);
      hi = std::max(hi, v);
      sum += v;
    }
    if (hi - lo > 1e-8)
      throw std::domain_error("cone angles spread within an edge class");
    out[c++] = sum / double(cl.size());
  }
  return out;
}

CollisionResult collision_search(double eps, double lo, double hi) {
  CollisionResult res;
  res.t1 = 0.8 * eps;
  res.a1 = res.b1 = 0.5 * (lo + hi);
  const Vec3 target = cone_angle_triple(2, res.t1, res.a1, res.b1);
  res.triple1 = target;

  auto resid = [&](const Vec3& x) -> Vec3 {
    return cone_angle_triple(1, x[0], x[1], x[2]) - target;
  };
  double mid = 0.5 * (lo + hi), w = 0.25 * (hi - lo);
  std::vector<Vec3> starts = {{0.4 * eps, mid, mid},
                              {0.2 * eps, mid - w, mid + w},
                              {0.8 * eps, mid + w, mid - w}};
  const double h = 1e-6;
  for (const Vec3& x0 : starts) {
    Vec3 x = x0;
    bool ok = false;
    int it = 0;
    for (; it < 200; ++it) {
      Vec3 r = resid(x);
      if (r.cwiseAbs().maxCoeff() < 1e-11) {
        ok = true;
        break;
      }
      Eigen::Matrix3d Jm;
      for (int k = 0; k < 3; ++k) {
        Vec3 xp = x, xm = x;
        xp[k] += h;
        xm[k] -= h;
        Jm.col(k) = (resid(xp) - resid(xm)) / (2 * h);
      }
      x -= 0.5 * Jm.partialPivLu().solve(r);
    }
    if (!ok || x[0] <= 1e-6 || x[1] < lo || x[1] > hi || x[2] < lo ||
        x[2] > hi)
      continue;
    res.t2 = x[0];
    res.a2 = x[1];
    res.b2 = x[2];
    res.iterations = it;
    res.triple2 = cone_angle_triple(1, x[0], x[1], x[2]);
    res.residual = (res.triple2 - target).cwiseAbs().maxCoeff();

    // Witness that the gluing pieces themselves differ: the family-1
    // piece is not isometric to either family-2 piece.
    SymmetricFlex s1 = schonhardt_symmetric_flex(res.a1, res.b1);
    SymmetricFlex s2 = schonhardt_symmetric_flex(res.a2, res.b2);
    auto spec = [&](const std::vector<Vec4>& pts) {
      return edge_spectrum(pts, s1.poly.edges);
    };
    auto gap = [](const std::vector<double>& u, const std::vector<double>& v) {
      double g = 0.0;
      for (size_t i = 0; i < u.size(); ++i)
        g = std::max(g, std::abs(u[i] - v[i]));
      return g;
    };
    auto w2 = spec(flex_path(s2.P, s2.Q, res.t2));
    res.spectrum_witness =
        std::min(gap(w2, spec(flex_path(s1.P, s1.Q, res.t1))),
                 gap(w2, spec(flex_path(s1.P, s1.Q, -res.t1))));
    return res;
  }
  throw std::runtime_error("collision search did not converge");
}

}  // namespace flexcone
