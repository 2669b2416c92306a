#include "flexcone/generators.hpp"

#include <cmath>
#include <map>

namespace flexcone {

namespace {

const std::vector<std::array<int, 3>>& octa_faces() {
  static const std::vector<std::array<int, 3>> F = {
      {0, 2, 1}, {3, 4, 5}, {0, 1, 5}, {1, 2, 3},
      {2, 0, 4}, {4, 3, 2}, {5, 4, 0}, {3, 5, 1}};
  return F;
}

Coloring canonical_coloring() {
  // black = ABC', A'BC, AB'C, A'B'C'
  return Coloring{{2, 3, 4, 1}, {0, 5, 6, 7}};
}

Eigen::Matrix3d rot_z(double t) {
  return Eigen::AngleAxisd(t, Vec3::UnitZ()).toRotationMatrix();
}

std::vector<Vec3> schonhardt_vertices(double a, double b, double twist) {
  double R = a / std::sqrt(3.0);
  std::vector<Vec3> V;
  for (int k = 0; k < 3; ++k) {
    double t = 2.0 * M_PI * k / 3.0;
    V.emplace_back(R * std::cos(t), R * std::sin(t), -b / 2.0);
  }
  for (int k = 0; k < 3; ++k) {
    double t = 2.0 * M_PI * k / 3.0 + twist;
    V.emplace_back(R * std::cos(t), R * std::sin(t), b / 2.0);
  }
  return V;
}

}  // namespace

TriangulatedPolyhedron schonhardt(const SchonhardtParams& p) {
  if (p.a <= 0 || p.b <= 0 || p.twist <= 0 || p.twist >= M_PI)
    throw std::invalid_argument("invalid Schonhardt parameters");
  return build_polyhedron3(Model::euclidean,
                           schonhardt_vertices(p.a, p.b, p.twist),
                           octa_faces(), canonical_coloring());
}

FlexField schonhardt_flex(const TriangulatedPolyhedron& P) {
  if (P.V.size() != 6 || P.F.size() != 8)
    throw std::invalid_argument("not a Schonhardt octahedron");
  FlexField q;
  q.ambient = Ambient::euclidean;
  q.q3.assign(6, Vec3::Zero());
  Vec3 n = (P.v3(1) - P.v3(0)).cross(P.v3(5) - P.v3(0)).normalized();
  q.q3[5] = n;
  q.q3[3] = rot_z(2.0 * M_PI / 3.0) * n;
  q.q3[4] = rot_z(4.0 * M_PI / 3.0) * n;
  if (rigidity_residual(P, q) > 1e-8)
    throw std::invalid_argument("explicit flex needs twist pi/2");
  return q;
}

TriangulatedPolyhedron gluck_octahedron(double perturb) {
  Vec3 A(0.0, 0.0, 0.0), B(2.0, 0.0, 0.0), C(2.6, 1.7, 0.0), D(0.4, 2.1, 0.0);
  Vec3 E(0.9, 0.8, 1.6);
  // F = intersection of AC and BD inside the base plane.
  Eigen::Matrix2d M;
  M.col(0) = (C - A).head<2>();
  M.col(1) = -(D - B).head<2>();
  Eigen::Vector2d st = M.inverse() * (B - A).head<2>();
  Vec3 F = A + st[0] * (C - A);
  D[2] += perturb;
  std::vector<Vec3> V = {A, B, C, D, E, F};
  std::vector<std::array<int, 3>> faces = {{0, 1, 4}, {1, 2, 4}, {2, 3, 4},
                                           {3, 0, 4}, {1, 0, 5}, {2, 1, 5},
                                           {3, 2, 5}, {0, 3, 5}};
  return build_polyhedron3(Model::euclidean, V, faces,
                           Coloring{{0, 2, 5, 7}, {1, 3, 4, 6}});
}

TriangulatedPolyhedron twisted_antiprism(int n, double a, double b,
                                         bool twisted) {
  if (n < 3) throw std::invalid_argument("antiprism needs n >= 3");
  double R = a / (2.0 * std::sin(M_PI / n));
  std::vector<Vec3> V;
  for (int k = 0; k < n; ++k) {
    double t = 2.0 * M_PI * k / n;
    V.emplace_back(R * std::cos(t), R * std::sin(t), -b / 2.0);
  }
  double extra = M_PI / n + (twisted ? M_PI / 2.0 : 0.0);
  for (int k = 0; k < n; ++k) {
    double t = 2.0 * M_PI * k / n + extra;
    V.emplace_back(R * std::cos(t), R * std::sin(t), b / 2.0);
  }
  std::vector<std::array<int, 3>> F;
  for (int k = 1; k < n - 1; ++k) F.push_back({0, k + 1, k});
  for (int k = 1; k < n - 1; ++k) F.push_back({n, n + k, n + k + 1});
  for (int i = 0; i < n; ++i) {
    F.push_back({i, (i + 1) % n, n + i});
    F.push_back({n + (i + 1) % n, n + i, (i + 1) % n});
  }
  return build_polyhedron3(Model::euclidean, V, F);
}

std::array<double, 4> ideal_twisted_octahedron_angles(
    const IdealOctahedronParams& p) {
  if (p.ratio <= 1.0) throw std::invalid_argument("ratio must exceed 1");
  using Vec2 = Eigen::Vector2d;
  std::vector<Vec2> V;
  for (int k = 0; k < 3; ++k) {
    double t = 2.0 * M_PI * k / 3.0;
    V.emplace_back(p.ratio * std::cos(t), p.ratio * std::sin(t));
  }
  for (int k = 0; k < 3; ++k) {
    double t = 2.0 * M_PI * k / 3.0 + M_PI / 2.0;
    V.emplace_back(std::cos(t), std::sin(t));
  }
  const auto& F = octa_faces();
  // Unsigned angle between the two face circles through the edge (v,w),
  // measured at w after an inversion that sends v to infinity.
  auto alpha = [&](int v, int w) {
    std::vector<int> thirds;
    for (const auto& f : F)
      if ((f[0] == v || f[1] == v || f[2] == v) &&
          (f[0] == w || f[1] == w || f[2] == w))
        for (int x : f)
          if (x != v && x != w) thirds.push_back(x);
    auto inv = [&](const Vec2& z) {
      Vec2 d = z - V[v];
      return Vec2(d / d.squaredNorm());
    };
    Vec2 ws = inv(V[w]);
    Vec2 d1 = inv(V[thirds[0]]) - ws, d2 = inv(V[thirds[1]]) - ws;
    double c = d1.dot(d2) / (d1.norm() * d2.norm());
    return std::acos(std::clamp(c, -1.0, 1.0));
  };
  // At each ideal vertex the four dihedral angles form the corners of a
  // Euclidean quadrilateral link, so they sum to 2pi; that fixes which of
  // each pair {alpha, 2pi - alpha} is the interior angle.
  std::map<std::pair<int, int>, double> theta;
  for (int v = 0; v < 6; ++v) {
    std::vector<std::pair<int, int>> es;
    std::vector<double> al;
    for (int w = 0; w < 6; ++w) {
      if (w == v) continue;
      bool adjacent = false;
      for (const auto& f : F) {
        bool hv = f[0] == v || f[1] == v || f[2] == v;
        bool hw = f[0] == w || f[1] == w || f[2] == w;
        if (hv && hw) adjacent = true;
      }
      if (!adjacent) continue;
      es.push_back({std::min(v, w), std::max(v, w)});
      al.push_back(alpha(v, w));
    }
    int best = -1;
    for (int mask = 0; mask < 16; ++mask) {
      double s = 0.0;
      for (int k = 0; k < 4; ++k)
        s += (mask >> k) & 1 ? 2.0 * M_PI - al[k] : al[k];
      if (std::abs(s - 2.0 * M_PI) < 1e-6) best = mask;
    }
    if (best < 0)
      throw std::runtime_error("vertex link angles do not close up");
    for (int k = 0; k < 4; ++k) {
      double val = (best >> k) & 1 ? 2.0 * M_PI - al[k] : al[k];
      auto it = theta.find(es[k]);
      if (it == theta.end())
        theta[es[k]] = val;
      else if (std::abs(it->second - val) > 1e-8)
        throw std::runtime_error("inconsistent ideal dihedral angle");
    }
  }
  // The four classes are the four angles meeting at vertex 0.
  std::array<double, 4> out;
  int k = 0;
  for (const auto& [e, val] : theta)
    if (e.first == 0) out[k++] = val;
  std::sort(out.begin(), out.end());
  return out;
}

TriangulatedPolyhedron hyperideal_scale(const TriangulatedPolyhedron& P,
                                        double shrink) {
  if (shrink <= 0.0 || shrink >= 1.0)
    throw std::invalid_argument("shrink must be in (0,1)");
  double r0 = 0.0;
  for (size_t i = 0; i < P.V.size(); ++i)
    r0 = std::max(r0, P.v3(int(i)).norm());
  TriangulatedPolyhedron Q = P;
  Q.model = Model::klein;
  for (auto& v : Q.V) v.head<3>() /= r0 * shrink;
  for (size_t i = 0; i < Q.V.size(); ++i)
    if (Q.v3(int(i)).norm() <= 1.0 + 1e-9)
      throw std::domain_error("vertex " + std::to_string(i) +
                              " is not outside the unit ball");
  for (const auto& e : Q.edges) {
    Vec3 a = Q.v3(e.a), d = Q.v3(e.b) - Q.v3(e.a);
    double t = std::clamp(-a.dot(d) / d.squaredNorm(), 0.0, 1.0);
    if ((a + t * d).norm() >= 1.0)
      throw std::domain_error("edge (" + std::to_string(e.a) + "," +
                              std::to_string(e.b) +
                              ") misses the unit ball");
  }
  return Q;
}

TriangulatedPolyhedron hyperideal_schonhardt(const SchonhardtParams& p,
                                             double shrink) {
  return hyperideal_scale(schonhardt(p), shrink);
}

TriangulatedPolyhedron hyperbolic_schonhardt(double a, double b, double twist) {
  if (a <= 0 || b <= 0) throw std::invalid_argument("need a, b > 0");
  double z0 = std::tanh(b / 2.0);
  double zmax = std::sqrt(1.0 - z0 * z0);
  auto base_edge = [&](double rho) {
    Vec3 p(rho, 0.0, -z0);
    Vec3 q(rho * std::cos(2.0 * M_PI / 3.0), rho * std::sin(2.0 * M_PI / 3.0),
           -z0);
    return hyp_distance(klein_to_hyperboloid(p), klein_to_hyperboloid(q));
  };
  double lo = 1e-12, hi = zmax - 1e-12;
  if (base_edge(hi) < a)
    throw std::invalid_argument("base edge length unreachable at this height");
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    (base_edge(mid) < a ? lo : hi) = mid;
  }
  double rho = 0.5 * (lo + hi);
  std::vector<Vec3> V;
  for (int k = 0; k < 3; ++k) {
    double t = 2.0 * M_PI * k / 3.0;
    V.emplace_back(rho * std::cos(t), rho * std::sin(t), -z0);
  }
  for (int k = 0; k < 3; ++k) {
    double t = 2.0 * M_PI * k / 3.0 + twist;
    V.emplace_back(rho * std::cos(t), rho * std::sin(t), z0);
  }
  return build_polyhedron3(Model::klein, V, octa_faces(),
                           canonical_coloring());
}

TriangulatedPolyhedron random_concurrent_octahedron(std::mt19937& rng) {
  std::normal_distribution<double> N(0.0, 1.0);
  auto rv = [&] { return Vec3(N(rng), N(rng), N(rng)); };
  // Common point x and four planes through it; vertex v_ij on the
  // intersection line of planes i and j. Relabeled to the octahedron
  // combinatorics: v01,v02,v03,v23,v13,v12 -> 0..5. The four faces with a
  // common plane index are {0,2,1},{5,4,0},{3,5,1},{4,3,2}: coloring white
  // in the canonical scheme, so here the concurrent set is the white one;
  // both determinants vanish together (Thm: black concurrent iff white).
  Vec3 x = rv();
  std::array<Vec3, 4> nrm;
  for (auto& v : nrm) v = rv().normalized();
  std::uniform_real_distribution<double> U(0.5, 2.0);
  std::map<std::pair<int, int>, Vec3> vert;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      Vec3 d = nrm[i].cross(nrm[j]).normalized();
      vert[{i, j}] = x + U(rng) * d;
    }
  std::vector<Vec3> V = {vert[{0, 1}], vert[{0, 2}], vert[{0, 3}],
                         vert[{2, 3}], vert[{1, 3}], vert[{1, 2}]};
  return build_polyhedron3(Model::euclidean, V, octa_faces(),
                           canonical_coloring());
}

TriangulatedPolyhedron random_octahedron(std::mt19937& rng) {
  std::normal_distribution<double> N(0.0, 1.0);
  std::vector<Vec3> V(6);
  for (auto& v : V) v = Vec3(N(rng), N(rng), N(rng));
  return build_polyhedron3(Model::euclidean, V, octa_faces(),
                           canonical_coloring());
}

TriangulatedPolyhedron regular_octahedron() {
  std::vector<Vec3> V = {{1, 0, 0},  {-1, 0, 0}, {0, 1, 0},
                         {0, -1, 0}, {0, 0, 1},  {0, 0, -1}};
  std::vector<std::array<int, 3>> F = {{0, 2, 4}, {2, 1, 4}, {1, 3, 4},
                                       {3, 0, 4}, {2, 0, 5}, {1, 2, 5},
                                       {3, 1, 5}, {0, 3, 5}};
  return build_polyhedron3(Model::euclidean, V, F);
}

}  // namespace flexcone
