#include "flexcone/conemanifold.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace flexcone {

namespace {

struct DSU {
  std::vector<int> p;
  explicit DSU(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

std::vector<int> face_cycle(const GluingSchema& s, const FaceRef& f) {
  switch (f.kind) {
    case FaceKind::tri: {
      const auto& t = s.poly->F[f.index];
      return {t[0], t[1], t[2]};
    }
    case FaceKind::hex:
      return s.trunc->hexes[f.index];
    case FaceKind::quad:
      return s.trunc->quads[f.index];
  }
  throw std::logic_error("bad face kind");
}

int face_count(const GluingSchema& s) {
  if (s.trunc) return s.trunc->n_faces();
  return int(s.poly->F.size());
}

int face_id(const GluingSchema& s, const FaceRef& f) {
  if (f.kind == FaceKind::tri) return f.index;
  int base = f.kind == FaceKind::hex ? 0 : int(s.trunc->hexes.size());
  return base + f.index;
}

// Position of a local vertex id on the hyperboloid (or raw euclidean
// coordinates for euclidean pieces).
Vec4 local_pos(const GluingSchema& s, int vid) {
  if (s.trunc) return s.trunc->tv[vid];
  if (s.poly->model == Model::euclidean) return s.poly->V[vid];
  return s.poly->lift(vid);
}

double local_dist(const GluingSchema& s, int u, int v) {
  if (!s.trunc && s.poly->model == Model::euclidean)
    return (local_pos(s, u) - local_pos(s, v)).norm();
  return hyp_distance(local_pos(s, u), local_pos(s, v));
}

int lookup(const std::vector<std::pair<int, int>>& vmap, int u) {
  for (auto [a, b] : vmap)
    if (a == u) return b;
  throw std::invalid_argument("pairing vertex map misses a face vertex");
}

// Vertex permutations of the source that are orientation-preserving
// isometries (preserve oriented faces and the de Sitter Gram matrix),
// are involutions, and map vertex u to vertex v.
std::vector<int> find_swap_isometry(const TruncatedHyperidealPolyhedron& T,
                                    int u, int v) {
  int n = int(T.source.V.size());
  std::set<std::array<int, 3>> faces;
  for (const auto& f : T.source.F)
    for (int r = 0; r < 3; ++r)
      faces.insert({f[r % 3], f[(r + 1) % 3], f[(r + 2) % 3]});
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (perm[u] != v) continue;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      if (perm[perm[i]] != i) ok = false;
    for (const auto& f : T.source.F)
      if (ok && !faces.count({perm[f[0]], perm[f[1]], perm[f[2]]})) ok = false;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i; j < n && ok; ++j)
        if (std::abs(minkowski_dot(T.ds[perm[i]], T.ds[perm[j]]) -
                     minkowski_dot(T.ds[i], T.ds[j])) > 1e-8)
          ok = false;
    if (ok) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  throw std::domain_error("no involutive isometry swapping the two vertices");
}

// The vertex with no edge to u.
int opposite_vertex(const TriangulatedPolyhedron& P, int u) {
  std::set<int> adj;
  for (const auto& e : P.edges) {
    if (e.a == u) adj.insert(e.b);
    if (e.b == u) adj.insert(e.a);
  }
  for (int v = 0; v < int(P.V.size()); ++v)
    if (v != u && !adj.count(v)) return v;
  throw std::domain_error("vertex has no combinatorial antipode");
}

Pairing identity_pairing(const GluingSchema& s, FaceKind kind, int index,
                         int pa, int pb) {
  Pairing pr;
  pr.a = {pa, kind, index};
  pr.b = {pb, kind, index};
  for (int v : face_cycle(s, pr.a)) pr.vmap.push_back({v, v});
  return pr;
}

}  // namespace

GluingSchema builtin_schema(
    const std::string& name,
    std::shared_ptr<const TriangulatedPolyhedron> poly,
    std::shared_ptr<const TruncatedHyperidealPolyhedron> trunc) {
  GluingSchema s;
  s.name = name;
  s.poly = std::move(poly);
  s.trunc = std::move(trunc);
  if (!s.poly && !s.trunc) throw std::invalid_argument("schema needs a piece");

  auto quad_pairing = [&](int pa, int ua, int pb, const std::vector<int>& perm) {
    Pairing pr;
    pr.a = {pa, FaceKind::quad, ua};
    pr.b = {pb, FaceKind::quad, perm[ua]};
    for (int t : s.trunc->quads[ua]) {
      auto [i, j] = s.trunc->tv_pair[t];
      pr.vmap.push_back({t, s.trunc->tv_id.at({perm[i], perm[j]})});
    }
    return pr;
  };

  if (name == "double") {
    s.npieces = 2;
    s.flex_sign = {+1, -1};
    if (s.trunc) {
      for (size_t f = 0; f < s.trunc->hexes.size(); ++f)
        s.pairings.push_back(identity_pairing(s, FaceKind::hex, int(f), 0, 1));
    } else {
      for (size_t f = 0; f < s.poly->F.size(); ++f)
        s.pairings.push_back(identity_pairing(s, FaceKind::tri, int(f), 0, 1));
    }
    return s;
  }

  if (!s.trunc)
    throw std::invalid_argument(name + " needs a truncated piece");
  int nv = int(s.trunc->source.V.size());

  if (name == "double_of_double") {
    s.npieces = 4;
    s.flex_sign = {+1, -1, +1, -1};
    for (size_t f = 0; f < s.trunc->hexes.size(); ++f) {
      s.pairings.push_back(identity_pairing(s, FaceKind::hex, int(f), 0, 1));
      s.pairings.push_back(identity_pairing(s, FaceKind::hex, int(f), 2, 3));
    }
    for (int u = 0; u < nv; ++u) {
      s.pairings.push_back(identity_pairing(s, FaceKind::quad, u, 0, 2));
      s.pairings.push_back(identity_pairing(s, FaceKind::quad, u, 1, 3));
    }
    return s;
  }

  if (name == "three_comp" || name == "four_comp") {
    std::vector<std::vector<int>> swap(nv);
    for (int u = 0; u < nv; ++u)
      swap[u] = find_swap_isometry(*s.trunc, u,
                                   opposite_vertex(s.trunc->source, u));
    if (name == "three_comp") {
      s.npieces = 2;
      s.flex_sign = {+1, -1};
      for (size_t f = 0; f < s.trunc->hexes.size(); ++f)
        s.pairings.push_back(identity_pairing(s, FaceKind::hex, int(f), 0, 1));
      for (int u = 0; u < nv; ++u) {
        if (swap[u][u] < u) continue;  // one pairing per antipodal pair
        for (int p : {0, 1})
          s.pairings.push_back(quad_pairing(p, u, p, swap[u]));
      }
    } else {
      s.npieces = 4;
      s.flex_sign = {+1, -1, +1, -1};
      for (size_t f = 0; f < s.trunc->hexes.size(); ++f) {
        s.pairings.push_back(identity_pairing(s, FaceKind::hex, int(f), 0, 1));
        s.pairings.push_back(identity_pairing(s, FaceKind::hex, int(f), 2, 3));
      }
      for (int u = 0; u < nv; ++u) {
        s.pairings.push_back(quad_pairing(0, u, 2, swap[u]));
        s.pairings.push_back(quad_pairing(1, u, 3, swap[u]));
      }
    }
    return s;
  }
  throw std::invalid_argument("unknown schema " + name);
}

ConeManifold assemble(const GluingSchema& s) {
  if (s.npieces < 1 || int(s.flex_sign.size()) != s.npieces)
    throw std::invalid_argument("schema has inconsistent piece data");
  int nlocal = s.trunc ? s.trunc->n_vertices() : int(s.poly->V.size());
  DSU vert(s.npieces * nlocal);
  auto vkey = [&](int piece, int vid) { return piece * nlocal + vid; };

  // Edge classes keyed by (piece, min vid, max vid). All face-boundary
  // edges get united; the singular arcs are read off the old-edge classes
  // (the new edges are right-angled on both sides and close up to 2pi).
  std::map<std::array<int, 3>, int> edge_ids;
  auto ekey = [&](int piece, int u, int v) {
    std::array<int, 3> k{piece, std::min(u, v), std::max(u, v)};
    auto it = edge_ids.find(k);
    if (it != edge_ids.end()) return it->second;
    int id = int(edge_ids.size());
    edge_ids.emplace(k, id);
    return id;
  };
  // Pre-register every face boundary edge of every piece.
  std::vector<std::vector<int>> all_cycles;
  if (s.trunc) {
    for (const auto& c : s.trunc->hexes) all_cycles.push_back(c);
    for (const auto& c : s.trunc->quads) all_cycles.push_back(c);
  } else {
    for (const auto& f : s.poly->F) all_cycles.push_back({f[0], f[1], f[2]});
  }
  for (int p = 0; p < s.npieces; ++p)
    for (const auto& c : all_cycles)
      for (size_t k = 0; k < c.size(); ++k)
        ekey(p, c[k], c[(k + 1) % c.size()]);
  DSU earc(int(edge_ids.size()));

  std::vector<int> face_pair_count(s.npieces * face_count(s), 0);
  for (const auto& pr : s.pairings) {
    auto ca = face_cycle(s, pr.a), cb = face_cycle(s, pr.b);
    if (ca.size() != cb.size() || pr.vmap.size() != ca.size())
      throw std::invalid_argument("pairing joins faces of different size");
    face_pair_count[pr.a.piece * face_count(s) + face_id(s, pr.a)]++;
    face_pair_count[pr.b.piece * face_count(s) + face_id(s, pr.b)]++;
    for (size_t k = 0; k < ca.size(); ++k) {
      int u = ca[k], v = ca[(k + 1) % ca.size()];
      int mu = lookup(pr.vmap, u), mv = lookup(pr.vmap, v);
      if (std::abs(local_dist(s, u, v) - local_dist(s, mu, mv)) > 1e-8)
        throw std::invalid_argument("pairing is not an isometry of faces");
      vert.unite(vkey(pr.a.piece, u), vkey(pr.b.piece, mu));
      earc.unite(ekey(pr.a.piece, u, v), ekey(pr.b.piece, mu, mv));
    }
  }
  bool boundary = false;
  for (int c : face_pair_count) {
    if (c == 0) boundary = true;
    if (c > 1) throw std::invalid_argument("a face is paired more than once");
  }

  // Orientability: a pairing whose vertex map preserves the boundary cycle
  // order joins pieces of opposite orientation.
  std::vector<int> orient(s.npieces, 0);
  bool orientable = true;
  orient[0] = 1;
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& pr : s.pairings) {
      auto ca = face_cycle(s, pr.a), cb = face_cycle(s, pr.b);
      int m0 = lookup(pr.vmap, ca[0]), m1 = lookup(pr.vmap, ca[1]);
      int pos = int(std::find(cb.begin(), cb.end(), m0) - cb.begin());
      if (pos == int(cb.size()))
        throw std::invalid_argument("pairing image is not on the target face");
      bool preserving;
      if (cb[(pos + 1) % cb.size()] == m1)
        preserving = true;
      else if (cb[(pos + cb.size() - 1) % cb.size()] == m1)
        preserving = false;
      else
        throw std::invalid_argument("pairing vertex map is not cyclic");
      int want = preserving ? -1 : 1;
      int oa = orient[pr.a.piece], ob = orient[pr.b.piece];
      if (oa != 0 && ob == 0) {
        orient[pr.b.piece] = want * oa;
        changed = true;
      } else if (oa == 0 && ob != 0) {
        orient[pr.a.piece] = want * ob;
        changed = true;
      } else if (oa != 0 && ob != 0 && ob != want * oa) {
        orientable = false;
      }
    }
  }

  // Wedge data per edge class: the singular arcs are the old edges.
  struct ArcInfo {
    std::vector<std::pair<int, int>> members;  // (piece, source edge)
    double angle_sum = 0.0;
    double length = 0.0;
    int vc[2] = {-1, -1};  // endpoint vertex classes
  };
  int nedges = s.trunc ? int(s.trunc->source.edges.size())
                       : int(s.poly->edges.size());
  std::map<int, ArcInfo> arcs;  // keyed by edge-class root
  for (int p = 0; p < s.npieces; ++p)
    for (int e = 0; e < nedges; ++e) {
      int u, v;
      double ang, len;
      if (s.trunc) {
        const Edge& ed = s.trunc->source.edges[e];
        u = s.trunc->tv_id.at({ed.a, ed.b});
        v = s.trunc->tv_id.at({ed.b, ed.a});
        ang = s.trunc->old_edge_dihedral(e);
        len = s.trunc->old_edge_length(e);
      } else {
        u = s.poly->edges[e].a;
        v = s.poly->edges[e].b;
        ang = dihedral_angle(*s.poly, e);
        len = s.poly->edge_length(e);
      }
      int root = earc.find(ekey(p, u, v));
      ArcInfo& a = arcs[root];
      if (a.members.empty()) {
        a.length = len;
        a.vc[0] = vert.find(vkey(p, u));
        a.vc[1] = vert.find(vkey(p, v));
      } else if (std::abs(a.length - len) > 1e-8) {
        throw std::domain_error("glued arcs have mismatched lengths");
      }
      a.members.push_back({p, e});
      a.angle_sum += ang;
    }

  // Merge arc classes into components through valence-two vertex classes.
  std::vector<int> roots;
  for (auto& [r, a] : arcs) roots.push_back(r);
  std::map<int, int> arc_slot;
  for (size_t i = 0; i < roots.size(); ++i) arc_slot[roots[i]] = int(i);
  std::map<int, std::vector<int>> at_vertex;  // vclass -> incident arc slots
  for (auto& [r, a] : arcs)
    for (int end = 0; end < 2; ++end)
      at_vertex[a.vc[end]].push_back(arc_slot[r]);
  DSU comp(int(roots.size()));
  std::set<int> open_vertices;  // valence != 2 -> component endpoints
  for (auto& [vc, inc] : at_vertex) {
    if (inc.size() == 2)
      comp.unite(inc[0], inc[1]);
    else
      open_vertices.insert(vc);
  }

  ConeManifold M;
  M.orientable = orientable;
  M.has_boundary = boundary;
  std::map<int, SingularComponent> by_comp;
  std::map<int, bool> circle;
  for (auto& [r, a] : arcs) {
    int c = comp.find(arc_slot[r]);
    auto [it, fresh] = by_comp.try_emplace(c);
    SingularComponent& sc = it->second;
    if (fresh) {
      sc.cone_angle = a.angle_sum;
      circle[c] = true;
    } else if (std::abs(sc.cone_angle - a.angle_sum) > 1e-8) {
      throw std::domain_error("cone angle varies along a component");
    }
    sc.length += a.length;
    for (auto& m : a.members) sc.arcs.push_back(m);
    if (open_vertices.count(a.vc[0]) || open_vertices.count(a.vc[1]))
      circle[c] = false;
  }
  for (auto& [c, sc] : by_comp) {
    sc.is_circle = circle[c];
    if (std::abs(sc.cone_angle - 2.0 * M_PI) < 1e-8) continue;  // nonsingular
    M.components.push_back(std::move(sc));
  }
  std::sort(M.components.begin(), M.components.end(),
            [](const SingularComponent& x, const SingularComponent& y) {
              return x.cone_angle < y.cone_angle;
            });
  return M;
}

ManifoldFlexReport manifold_flex_check(const GluingSchema& s,
                                       const std::vector<Vec3>& velocity,
                                       double h) {
  const TriangulatedPolyhedron& src = s.trunc ? s.trunc->source : *s.poly;
  if (velocity.size() != src.V.size())
    throw std::invalid_argument("velocity field has wrong size");
  if (src.model != Model::klein)
    throw std::invalid_argument("flex check needs a klein piece");

  // Dihedral angles, edge lengths and (for truncated pieces) new-face
  // corner angles of the piece deformed along t -> p + t v.
  auto measure = [&](double t, std::vector<double>& ang,
                     std::vector<double>& len, std::vector<double>& corner) {
    std::vector<Vec3> Vt;
    for (size_t i = 0; i < src.V.size(); ++i)
      Vt.push_back(src.v3(int(i)) + t * velocity[i]);
    TriangulatedPolyhedron P = build_polyhedron3(Model::klein, Vt, src.F,
                                                 src.coloring);
    if (s.trunc) {
      TruncatedHyperidealPolyhedron T = truncate(P);
      for (size_t e = 0; e < P.edges.size(); ++e) {
        ang.push_back(T.old_edge_dihedral(int(e)));
        len.push_back(T.old_edge_length(int(e)));
      }
      for (const auto& q : T.quads)
        for (size_t k = 0; k < q.size(); ++k)
          corner.push_back(hyp_corner_angle(
              T.tv[q[k]], T.tv[q[(k + q.size() - 1) % q.size()]],
              T.tv[q[(k + 1) % q.size()]]));
    } else {
      for (size_t e = 0; e < P.edges.size(); ++e) {
        ang.push_back(dihedral_angle(P, int(e)));
        len.push_back(P.edge_length(int(e)));
      }
    }
  };
  std::vector<double> ap, lp, cp, am, lm, cm;
  measure(+h, ap, lp, cp);
  measure(-h, am, lm, cm);
  std::vector<double> dang(ap.size()), dlen(lp.size());
  for (size_t i = 0; i < ap.size(); ++i) dang[i] = (ap[i] - am[i]) / (2 * h);
  for (size_t i = 0; i < lp.size(); ++i) dlen[i] = (lp[i] - lm[i]) / (2 * h);

  ManifoldFlexReport rep;
  for (double d : dlen)
    rep.max_length_variation = std::max(rep.max_length_variation, std::abs(d));
  if (s.trunc) {
    for (size_t i = 0; i < cp.size(); ++i)
      rep.witness = std::max(rep.witness, std::abs(cp[i] - cm[i]) / (2 * h));
  } else {
    for (double d : dang) rep.witness = std::max(rep.witness, std::abs(d));
  }
  ConeManifold M = assemble(s);
  for (const auto& sc : M.components) {
    double sum = 0.0;
    for (auto [p, e] : sc.arcs) sum += s.flex_sign[p] * dang[e];
    rep.component_variation.push_back(sum);
    rep.max_component_variation =
        std::max(rep.max_component_variation, std::abs(sum));
  }
  return rep;
}

MeridianSystem prism_meridian_system() {
  MeridianSystem sys;
  sys.generators = {"a1", "a2", "a3", "a4"};
  auto W = [&](const std::string& name,
               std::vector<std::pair<int, int>> w) {
    sys.word_names.push_back(name);
    sys.words.push_back(std::move(w));
  };
  W("a1", {{0, 1}});
  W("a2", {{1, 1}});
  W("a3", {{2, 1}});
  W("a4", {{3, 1}});
  W("a2*a3", {{1, 1}, {2, 1}});
  W("a4*a3", {{3, 1}, {2, 1}});
  W("a2*a1", {{1, 1}, {0, 1}});
  W("a4*a1", {{3, 1}, {0, 1}});
  W("a1^-1*a3", {{0, -1}, {2, 1}});
  return sys;
}

std::vector<std::vector<int>> meridian_cover_search(const MeridianSystem& sys,
                                                    int n) {
  if (n < 2) throw std::invalid_argument("cover order must be >= 2");
  int g = int(sys.generators.size());
  std::vector<std::vector<int>> found;
  std::vector<int> x(g, 0);
  while (true) {
    bool ok = true;
    for (const auto& w : sys.words) {
      int v = 0;
      for (auto [gen, exp] : w) v += exp * x[gen];
      if (((v % n) + n) % n == 0) {
        ok = false;
        break;
      }
    }
    if (ok) found.push_back(x);
    int k = g - 1;
    while (k >= 0 && x[k] == n - 1) x[k--] = 0;
    if (k < 0) break;
    ++x[k];
  }
  return found;
}

LiftResult lift_cone_angles(const ConeManifold& M,
                            const std::vector<int>& branched, int k) {
  if (k < 2) throw std::invalid_argument("cover degree must be >= 2");
  std::set<int> br(branched.begin(), branched.end());
  for (int i : br)
    if (i < 0 || i >= int(M.components.size()))
      throw std::out_of_range("branched component index out of range");
  LiftResult res;
  res.k = k;
  for (size_t i = 0; i < M.components.size(); ++i) {
    LiftedComponent lc;
    if (br.count(int(i))) {
      lc.cone_angle = k * M.components[i].cone_angle;
      lc.multiplicity = 1;
      lc.branched = true;
    } else {
      lc.cone_angle = M.components[i].cone_angle;
      lc.multiplicity = k;
      lc.branched = false;
    }
    res.components.push_back(lc);
  }
  res.flexibility_inherited = true;
  return res;
}

}  // namespace flexcone
