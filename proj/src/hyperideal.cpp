#include "flexcone/hyperideal.hpp"

#include <cmath>
#include <limits>

namespace flexcone {

namespace {

int third_vertex(const std::array<int, 3>& f, int i, int j) {
  for (int v : f)
    if (v != i && v != j) return v;
  throw std::logic_error("face does not contain the edge");
}

}  // namespace

double TruncatedHyperidealPolyhedron::old_edge_length(int e) const {
  int i = source.edges[e].a, j = source.edges[e].b;
  return hyp_distance(tv[tv_id.at({i, j})], tv[tv_id.at({j, i})]);
}

double TruncatedHyperidealPolyhedron::old_edge_dihedral(int e) const {
  const Edge& ed = source.edges[e];
  int i = ed.a, j = ed.b;
  int k1 = third_vertex(source.F[ed.f_ab], i, j);
  int k2 = third_vertex(source.F[ed.f_ba], i, j);
  return hyp_dihedral(tv[tv_id.at({i, j})], tv[tv_id.at({j, i})],
                      tv[tv_id.at({k1, i})], tv[tv_id.at({k2, i})]);
}

TruncatedHyperidealPolyhedron truncate(const TriangulatedPolyhedron& P) {
  if (P.model != Model::klein)
    throw std::invalid_argument("truncation needs klein coordinates");
  TruncatedHyperidealPolyhedron T;
  T.source = P;
  T.ds.resize(P.V.size());
  for (size_t i = 0; i < P.V.size(); ++i) {
    if (P.v3(int(i)).norm() <= 1.0 + 1e-12)
      throw std::domain_error("vertex " + std::to_string(i) +
                              " is not outside the unit ball");
    T.ds[i] = klein_to_desitter(P.v3(int(i)));
  }
  for (const auto& e : P.edges) {
    for (auto [u, v] : {std::pair{e.a, e.b}, std::pair{e.b, e.a}}) {
      Vec3 pu = P.v3(u), pv = P.v3(v);
      double t = (pu.dot(pu) - 1.0) / (pu.dot(pu) - pu.dot(pv));
      Vec3 k = pu + t * (pv - pu);
      if (k.squaredNorm() >= 1.0)
        throw std::domain_error("edge (" + std::to_string(e.a) + "," +
                                std::to_string(e.b) +
                                ") does not cross the unit ball");
      T.tv_id[{u, v}] = int(T.tv.size());
      T.tv_pair.push_back({u, v});
      T.tv.push_back(klein_to_hyperboloid(k));
    }
  }
  for (const auto& f : P.F) {
    int i = f[0], j = f[1], k = f[2];
    T.hexes.push_back({T.tv_id.at({i, j}), T.tv_id.at({j, i}),
                       T.tv_id.at({j, k}), T.tv_id.at({k, j}),
                       T.tv_id.at({k, i}), T.tv_id.at({i, k})});
  }
  for (size_t u = 0; u < P.V.size(); ++u) {
    // Fan order around u from the oriented faces.
    std::map<int, int> succ;
    for (const auto& f : P.F)
      for (int t = 0; t < 3; ++t)
        if (f[t] == int(u)) succ[f[(t + 1) % 3]] = f[(t + 2) % 3];
    std::vector<int> cyc;
    int start = succ.begin()->first, x = start;
    do {
      cyc.push_back(T.tv_id.at({int(u), x}));
      x = succ.at(x);
    } while (x != start);
    if (cyc.size() != succ.size())
      throw std::domain_error("vertex link is not a single cycle");
    T.quads.push_back(std::move(cyc));
  }
  return T;
}

TruncatedMetrics truncated_metrics(const TruncatedHyperidealPolyhedron& T) {
  TruncatedMetrics m;
  const auto& P = T.source;
  for (size_t e = 0; e < P.edges.size(); ++e) {
    int i = P.edges[e].a, j = P.edges[e].b;
    m.old_length_direct.push_back(T.old_edge_length(int(e)));
    m.old_length_dual.push_back(
        std::acosh(-minkowski_dot(T.ds[i], T.ds[j])));
    m.old_dihedral.push_back(T.old_edge_dihedral(int(e)));
    m.max_length_mismatch =
        std::max(m.max_length_mismatch,
                 std::abs(m.old_length_direct.back() - m.old_length_dual.back()));
  }
  for (const auto& q : T.quads)
    for (size_t k = 0; k < q.size(); ++k)
      m.new_edge_lengths.push_back(
          hyp_distance(T.tv[q[k]], T.tv[q[(k + 1) % q.size()]]));
  for (const auto& hx : T.hexes)
    for (size_t k = 0; k < hx.size(); ++k) {
      int prev = hx[(k + hx.size() - 1) % hx.size()];
      int next = hx[(k + 1) % hx.size()];
      double ang = hyp_corner_angle(T.tv[hx[k]], T.tv[prev], T.tv[next]);
      m.max_hexagon_angle_dev =
          std::max(m.max_hexagon_angle_dev, std::abs(ang - M_PI / 2.0));
    }
  // Dihedral angles along new edges (hexagon against polar quad).
  for (size_t u = 0; u < T.quads.size(); ++u) {
    const auto& q = T.quads[u];
    for (size_t k = 0; k < q.size(); ++k) {
      int a = q[k], b = q[(k + 1) % q.size()];
      int X = T.tv_pair[a].second, Y = T.tv_pair[b].second;
      int Z = T.tv_pair[q[(k + 2) % q.size()]].second;
      double ang = hyp_dihedral(T.tv[a], T.tv[b], T.tv[T.tv_id.at({X, int(u)})],
                                T.tv[T.tv_id.at({int(u), Z})]);
      ang = std::min(ang, 2.0 * M_PI - ang);  // unsigned dihedral
      m.max_new_edge_dihedral_dev =
          std::max(m.max_new_edge_dihedral_dev, std::abs(ang - M_PI / 2.0));
    }
  }
  return m;
}

FlexReport truncated_flex_analysis(const TruncatedHyperidealPolyhedron& T,
                                   double tol) {
  return flex_analysis_minkowski(T.ds, T.source.edges, tol);
}

TubeResult min_tube_distance(const TruncatedHyperidealPolyhedron& T) {
  const auto& E = T.source.edges;
  TubeResult best;
  best.distance = std::numeric_limits<double>::infinity();
  for (size_t e1 = 0; e1 < E.size(); ++e1)
    for (size_t e2 = e1 + 1; e2 < E.size(); ++e2) {
      const Vec4& a1 = T.tv[T.tv_id.at({E[e1].a, E[e1].b})];
      const Vec4& b1 = T.tv[T.tv_id.at({E[e1].b, E[e1].a})];
      const Vec4& a2 = T.tv[T.tv_id.at({E[e2].a, E[e2].b})];
      const Vec4& b2 = T.tv[T.tv_id.at({E[e2].b, E[e2].a})];
      double d = segment_segment_distance(a1, b1, a2, b2);
      if (d < best.distance) {
        best.distance = d;
        best.edge1 = {E[e1].a, E[e1].b};
        best.edge2 = {E[e2].a, E[e2].b};
      }
    }
  return best;
}

double hexagon_new_length(double la, double lb, double lc) {
  return std::acosh((std::cosh(la) + std::cosh(lb) * std::cosh(lc)) /
                    (std::sinh(lb) * std::sinh(lc)));
}

double hexagon_jacobian_min_sv(const TruncatedHyperidealPolyhedron& T,
                               int face, double h) {
  const auto& f = T.source.F[face];
  Vec3 l;
  int idx[3] = {T.source.edge_index(f[0], f[1]), T.source.edge_index(f[1], f[2]),
                T.source.edge_index(f[2], f[0])};
  for (int k = 0; k < 3; ++k) l[k] = T.old_edge_length(idx[k]);
  auto news = [](const Vec3& x) {
    return Vec3(hexagon_new_length(x[0], x[1], x[2]),
                hexagon_new_length(x[1], x[2], x[0]),
                hexagon_new_length(x[2], x[0], x[1]));
  };
  Eigen::Matrix3d Jm;
  for (int k = 0; k < 3; ++k) {
    Vec3 lp = l, lm = l;
    lp[k] += h;
    lm[k] -= h;
    Jm.col(k) = (news(lp) - news(lm)) / (2.0 * h);
  }
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(Jm);
  return svd.singularValues()[2];
}

}  // namespace flexcone
