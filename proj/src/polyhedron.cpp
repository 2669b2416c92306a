#include "flexcone/polyhedron.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace flexcone {

int TriangulatedPolyhedron::edge_index(int a, int b) const {
  if (a > b) std::swap(a, b);
  for (size_t e = 0; e < edges.size(); ++e)
    if (edges[e].a == a && edges[e].b == b) return int(e);
  return -1;
}

Vec4 TriangulatedPolyhedron::lift(int i) const {
  if (model == Model::hyperboloid) return V[i];
  if (model == Model::klein) return klein_to_hyperboloid(v3(i));
  throw std::invalid_argument("lift needs klein or hyperboloid coordinates");
}

double TriangulatedPolyhedron::edge_length(int e) const {
  int i = edges[e].a, j = edges[e].b;
  if (model == Model::euclidean) return (v3(i) - v3(j)).norm();
  return hyp_distance(lift(i), lift(j));
}

TriangulatedPolyhedron build_polyhedron(Model model, std::vector<Vec4> vertices,
                                        std::vector<std::array<int, 3>> faces,
                                        std::optional<Coloring> coloring) {
  TriangulatedPolyhedron P;
  P.model = model;
  P.V = std::move(vertices);
  P.F = std::move(faces);
  int n = int(P.V.size());
  std::map<std::pair<int, int>, int> dir;  // directed edge -> face
  for (size_t f = 0; f < P.F.size(); ++f) {
    const auto& t = P.F[f];
    for (int k = 0; k < 3; ++k) {
      int a = t[k], b = t[(k + 1) % 3];
      if (a < 0 || a >= n || b < 0 || b >= n || a == b)
        throw std::invalid_argument("face " + std::to_string(f) +
                                    " has invalid vertex indices");
      auto key = std::make_pair(a, b);
      if (dir.count(key))
        throw std::invalid_argument(
            "inconsistent orientation or non-manifold edge at face " +
            std::to_string(f));
      dir[key] = int(f);
    }
  }
  // Degenerate faces (only for models with linear 3-coordinates).
  if (model != Model::hyperboloid && model != Model::desitter) {
    double diam2 = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        diam2 = std::max(diam2, (P.v3(i) - P.v3(j)).squaredNorm());
    for (size_t f = 0; f < P.F.size(); ++f) {
      Vec3 a = P.v3(P.F[f][0]), b = P.v3(P.F[f][1]), c = P.v3(P.F[f][2]);
      double area = 0.5 * (b - a).cross(c - a).norm();
      if (area < 1e-14 * diam2)
        throw std::invalid_argument("degenerate face " + std::to_string(f));
    }
  }
  std::map<std::pair<int, int>, Edge> em;
  for (const auto& [key, f] : dir) {
    auto [a, b] = key;
    if (!dir.count({b, a}))
      throw std::invalid_argument("boundary or non-manifold edge (" +
                                  std::to_string(a) + "," + std::to_string(b) +
                                  ")");
    int lo = std::min(a, b), hi = std::max(a, b);
    Edge& e = em[{lo, hi}];
    e.a = lo;
    e.b = hi;
    if (a == lo)
      e.f_ab = f;
    else
      e.f_ba = f;
  }
  for (const auto& [key, e] : em) P.edges.push_back(e);
  if (coloring) {
    std::set<int> bl(coloring->black.begin(), coloring->black.end());
    std::set<int> wh(coloring->white.begin(), coloring->white.end());
    if (bl.size() + wh.size() != P.F.size())
      throw std::invalid_argument("coloring does not cover the faces");
    for (const auto& e : P.edges) {
      bool c1 = bl.count(e.f_ab) > 0, c2 = bl.count(e.f_ba) > 0;
      if (c1 == c2)
        throw std::invalid_argument("adjacent faces share a color");
    }
    P.coloring = std::move(coloring);
  }
  return P;
}

TriangulatedPolyhedron build_polyhedron3(Model model,
                                         const std::vector<Vec3>& vertices,
                                         std::vector<std::array<int, 3>> faces,
                                         std::optional<Coloring> coloring) {
  std::vector<Vec4> v4(vertices.size());
  for (size_t i = 0; i < vertices.size(); ++i)
    v4[i] << vertices[i][0], vertices[i][1], vertices[i][2], 0.0;
  return build_polyhedron(model, std::move(v4), std::move(faces),
                          std::move(coloring));
}

namespace {

double wrap_angle(double s, double c) {
  double th = std::atan2(s, c);
  if (th <= 0.0) th += 2.0 * M_PI;
  return th;
}

int third_vertex(const std::array<int, 3>& f, int i, int j) {
  for (int v : f)
    if (v != i && v != j) return v;
  throw std::logic_error("face does not contain the edge");
}

}  // namespace

double hyp_dihedral(const Vec4& x_a, const Vec4& x_b, const Vec4& y1,
                    const Vec4& y2) {
  Vec4 x = normalize_timelike(x_a + x_b);
  Vec4 d = x_b + minkowski_dot(x, x_b) * x;
  d /= std::sqrt(minkowski_dot(d, d));
  auto perp = [&](const Vec4& y) {
    Vec4 w = y + minkowski_dot(x, y) * x;
    w -= minkowski_dot(w, d) * d;
    return Vec4(w / std::sqrt(minkowski_dot(w, w)));
  };
  Vec4 u1 = perp(y1), u2 = perp(y2);
  double c = minkowski_dot(u1, u2);
  Eigen::Matrix4d M;
  M.row(0) = x.transpose();
  M.row(1) = d.transpose();
  M.row(2) = u2.transpose();
  M.row(3) = u1.transpose();
  return wrap_angle(M.determinant(), c);
}

double hyp_corner_angle(const Vec4& x_in, const Vec4& y1, const Vec4& y2) {
  Vec4 x = normalize_timelike(x_in);
  auto dir = [&](const Vec4& y) {
    Vec4 w = y + minkowski_dot(x, y) * x;
    return Vec4(w / std::sqrt(minkowski_dot(w, w)));
  };
  double c = minkowski_dot(dir(y1), dir(y2));
  return std::acos(std::clamp(c, -1.0, 1.0));
}

double dihedral_angle(const TriangulatedPolyhedron& P, int e) {
  const Edge& ed = P.edges[e];
  int i = ed.a, j = ed.b;
  int k1 = third_vertex(P.F[ed.f_ab], i, j);
  int k2 = third_vertex(P.F[ed.f_ba], i, j);
  if (P.model == Model::euclidean) {
    Vec3 pi = P.v3(i), pj = P.v3(j);
    Vec3 d = (pj - pi).normalized();
    auto perp = [&](int k) {
      Vec3 w = P.v3(k) - pi;
      w -= w.dot(d) * d;
      return Vec3(w.normalized());
    };
    Vec3 u1 = perp(k1), u2 = perp(k2);
    return wrap_angle(d.dot(u2.cross(u1)), u1.dot(u2));
  }
  return hyp_dihedral(P.lift(i), P.lift(j), P.lift(k1), P.lift(k2));
}

Plane face_plane(const TriangulatedPolyhedron& P, int face) {
  Vec3 a = P.v3(P.F[face][0]), b = P.v3(P.F[face][1]), c = P.v3(P.F[face][2]);
  Vec3 n = (b - a).cross(c - a);
  double nn = n.norm();
  if (nn < 1e-14) throw std::invalid_argument("collinear face vertices");
  n /= nn;
  return Plane{n, n.dot(a)};
}

}  // namespace flexcone
