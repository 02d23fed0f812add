#include "absfact/geometry.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "absfact/errors.hpp"

namespace absfact {

LatticePolytope convex_hull(std::vector<Vec2> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.empty()) throw std::invalid_argument("convex_hull: empty point set");
  if (points.size() == 1) return LatticePolytope{{points[0]}};

  auto build = [&](bool lower) {
    std::vector<Vec2> chain;
    for (std::size_t idx = 0; idx < points.size(); ++idx) {
      Vec2 p = lower ? points[idx] : points[points.size() - 1 - idx];
      while (chain.size() >= 2 &&
             det(sub(chain.back(), chain[chain.size() - 2]),
                 sub(p, chain[chain.size() - 2])) <= 0) {
        chain.pop_back();
      }
      chain.push_back(p);
    }
    return chain;
  };

  std::vector<Vec2> lower = build(true);
  std::vector<Vec2> upper = build(false);
  if (lower.size() == 2 && upper.size() == 2) {
    // All points collinear: segment from lex-min to lex-max.
    return LatticePolytope{{lower[0], lower[1]}};
  }
  // The cycle starts at the lex-min point; position is preserved.
  std::vector<Vec2> verts(lower.begin(), lower.end() - 1);
  verts.insert(verts.end(), upper.begin(), upper.end() - 1);
  return LatticePolytope{std::move(verts)};
}

LatticePolytope canonicalize(const LatticePolytope& P) {
  if (P.vertices.empty()) throw std::invalid_argument("canonicalize: no vertices");
  auto it = std::min_element(P.vertices.begin(), P.vertices.end());
  Vec2 anchor = *it;
  std::size_t offset = static_cast<std::size_t>(it - P.vertices.begin());
  std::vector<Vec2> out;
  out.reserve(P.vertices.size());
  for (std::size_t j = 0; j < P.vertices.size(); ++j) {
    out.push_back(sub(P.vertices[(offset + j) % P.vertices.size()], anchor));
  }
  return LatticePolytope{std::move(out)};
}

std::vector<std::pair<Vec2, std::int64_t>> edge_multiset(const LatticePolytope& P) {
  std::vector<std::pair<Vec2, std::int64_t>> edges;
  if (P.is_point()) return edges;
  if (P.is_segment()) {
    Vec2 e = sub(P.vertices[1], P.vertices[0]);
    std::int64_t len = gcd2(e);
    edges.push_back({primitive(e), len});
    edges.push_back({neg(primitive(e)), len});
    return edges;
  }
  for (std::size_t j = 0; j < P.vertices.size(); ++j) {
    Vec2 e = sub(P.vertices[(j + 1) % P.vertices.size()], P.vertices[j]);
    edges.push_back({primitive(e), gcd2(e)});
  }
  return edges;
}

LatticePolytope polytope_from_edges(std::vector<std::pair<Vec2, std::int64_t>> edges) {
  // Merge parallel directions, drop zero multiplicities, sort by full-circle
  // counterclockwise angle; the walk of a sorted direction multiset closes
  // into a convex polygon.
  std::map<Vec2, std::int64_t> merged;
  for (auto& [dir, mult] : edges) {
    if (mult > 0) merged[dir] += mult;
  }
  std::vector<std::pair<Vec2, std::int64_t>> dirs(merged.begin(), merged.end());
  if (dirs.empty()) return LatticePolytope{{Vec2{0, 0}}};

  auto angle_less = [](const std::pair<Vec2, std::int64_t>& a,
                       const std::pair<Vec2, std::int64_t>& b) {
    auto half = [](Vec2 v) { return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1; };
    int ha = half(a.first), hb = half(b.first);
    if (ha != hb) return ha < hb;
    return det(a.first, b.first) > 0;
  };
  std::sort(dirs.begin(), dirs.end(), angle_less);

  Vec2 total{0, 0};
  for (auto& [dir, mult] : dirs) total = add(total, scale(mult, dir));
  if (total != Vec2{0, 0}) {
    throw std::invalid_argument("polytope_from_edges: edge multiset does not close");
  }

  if (dirs.size() == 2) {
    // Antipodal pair: a segment.
    return canonicalize(
        LatticePolytope{{Vec2{0, 0}, scale(dirs[0].second, dirs[0].first)}});
  }
  std::vector<Vec2> verts;
  Vec2 cur{0, 0};
  for (auto& [dir, mult] : dirs) {
    verts.push_back(cur);
    cur = add(cur, scale(mult, dir));
  }
  return canonicalize(LatticePolytope{std::move(verts)});
}

bool contains_point(const LatticePolytope& P, Vec2 m) {
  if (P.is_point()) return P.vertices[0] == m;
  if (P.is_segment()) {
    Vec2 a = P.vertices[0], b = P.vertices[1];
    if (det(sub(b, a), sub(m, a)) != 0) return false;
    return dot(sub(m, a), sub(b, a)) >= 0 && dot(sub(m, b), sub(a, b)) >= 0;
  }
  for (std::size_t j = 0; j < P.vertices.size(); ++j) {
    Vec2 a = P.vertices[j];
    Vec2 b = P.vertices[(j + 1) % P.vertices.size()];
    if (det(sub(b, a), sub(m, a)) < 0) return false;
  }
  return true;
}

std::vector<Facet> all_facets(const LatticePolytope& P) {
  std::vector<Facet> facets;
  if (P.is_point()) return facets;
  auto make = [](Vec2 a, Vec2 b) {
    Vec2 e = sub(b, a);
    Vec2 eta = primitive(rot90(e));
    return Facet{a, b, eta, gcd2(e), eta[0] < 0 || eta[1] < 0};
  };
  if (P.is_segment()) {
    facets.push_back(make(P.vertices[0], P.vertices[1]));
    facets.push_back(make(P.vertices[1], P.vertices[0]));
    return facets;
  }
  for (std::size_t j = 0; j < P.vertices.size(); ++j) {
    facets.push_back(make(P.vertices[j], P.vertices[(j + 1) % P.vertices.size()]));
  }
  return facets;
}

std::vector<Facet> exterior_facets(const LatticePolytope& P) {
  std::vector<Facet> out;
  for (auto& f : all_facets(P)) {
    if (f.exterior) out.push_back(f);
  }
  return out;
}

std::int64_t support_min(const LatticePolytope& P, Vec2 eta) {
  std::int64_t best = dot(P.vertices[0], eta);
  for (auto& v : P.vertices) best = std::min(best, dot(v, eta));
  return best;
}

Fan build_fan(const LatticePolytope& P) {
  if (!contains_point(P, Vec2{0, 0})) {
    throw H2Violation("build_fan: polytope does not contain the origin");
  }
  std::vector<Vec2> rays = {Vec2{0, 1}, Vec2{1, 0}};
  for (auto& f : exterior_facets(P)) rays.push_back(f.eta);
  std::sort(rays.begin(), rays.end(), ccw_ray_less);
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  Fan fan;
  fan.rays = rays;
  for (auto& eta : rays) {
    fan.exterior_mask.push_back(eta[0] < 0 || eta[1] < 0);
  }
  return fan;
}

namespace {

// Extended gcd: returns (g, x, y) with a*x + b*y = g.
std::array<std::int64_t, 3> ext_gcd(std::int64_t a, std::int64_t b) {
  if (b == 0) return {a, 1, 0};
  auto [g, x, y] = ext_gcd(b, a % b);
  return {g, y, x - (a / b) * y};
}

// Rays to insert strictly between primitive u and v (det(u,v) >= 0 required;
// det 0 means antipodal). Walks the lattice hull: each step picks the
// primitive w with det(u, w) = 1 closest to the v side, which is the next
// Hilbert basis element.
void insert_between(Vec2 u, Vec2 v, std::vector<Vec2>& out) {
  std::int64_t d = det(u, v);
  if (d < 0) throw std::invalid_argument("regularize: rays not in ccw order");
  if (d == 0) {
    if (u == v) return;
    // Antipodal rays span a halfplane; split at the perpendicular.
    Vec2 mid = rot90(u);
    insert_between(u, mid, out);
    out.push_back(mid);
    insert_between(mid, v, out);
    return;
  }
  while (det(u, v) > 1) {
    auto [g, x, y] = ext_gcd(u[0], u[1]);
    if (g < 0) {  // u primitive, so |g| == 1; force the +1 side
      x = -x;
      y = -y;
    }
    // w0 with det(u, w0) = u0*x + u1*y = 1.
    Vec2 w0{-y, x};
    // det(w0 + k*u, v) = det(w0, v) + k*det(u, v); smallest k making it >= 0.
    std::int64_t dw = det(w0, v), duv = det(u, v);
    std::int64_t k = dw >= 0 ? -(dw / duv) : (-dw + duv - 1) / duv;
    Vec2 w = add(w0, scale(k, u));
    if (det(w, v) == 0) break;  // reached v
    out.push_back(w);
    u = w;
  }
}

}  // namespace

Fan regularize(const Fan& fan) {
  Fan out;
  for (std::size_t j = 0; j < fan.size(); ++j) {
    out.rays.push_back(fan.rays[j]);
    out.exterior_mask.push_back(fan.exterior_mask[j]);
    if (j + 1 < fan.size()) {
      std::vector<Vec2> inserted;
      insert_between(fan.rays[j], fan.rays[j + 1], inserted);
      for (auto& w : inserted) {
        out.rays.push_back(w);
        out.exterior_mask.push_back(false);
      }
    }
  }
  return out;
}

DivisorData divisor_multiplicities(const LatticePolytope& P, const Fan& fan) {
  DivisorData data;
  for (auto& eta : fan.rays) data.k.push_back(-support_min(P, eta));
  return data;
}

std::vector<Vec2> interior_lattice_points(const LatticePolytope& P) {
  std::int64_t xmax = 0, ymax = 0;
  for (auto& v : P.vertices) {
    xmax = std::max(xmax, v[0]);
    ymax = std::max(ymax, v[1]);
  }
  std::vector<Vec2> out;
  for (std::int64_t x = 1; x <= xmax; ++x) {
    for (std::int64_t y = 1; y <= ymax; ++y) {
      if (contains_point(P, Vec2{x, y})) out.push_back(Vec2{x, y});
    }
  }
  return out;
}

std::vector<LatticePolytope> minkowski_summands(const LatticePolytope& P,
                                                std::int64_t multiplicity_cap) {
  auto edges = edge_multiset(P);
  std::int64_t total = 0;
  double combinations = 1.0;
  for (auto& [dir, mult] : edges) {
    total += mult;
    combinations *= static_cast<double>(mult + 1);
  }
  if (total > multiplicity_cap || combinations > 4e6) {
    throw SummandCapExceeded("minkowski_summands: total edge multiplicity " +
                             std::to_string(total) + " exceeds cap " +
                             std::to_string(multiplicity_cap));
  }

  std::vector<LatticePolytope> out;
  std::vector<std::int64_t> choice(edges.size(), 0);
  // Enumerate all sub-multiplicity vectors; keep the closed ones.
  while (true) {
    Vec2 sum{0, 0};
    for (std::size_t j = 0; j < edges.size(); ++j) {
      sum = add(sum, scale(choice[j], edges[j].first));
    }
    if (sum == Vec2{0, 0}) {
      std::vector<std::pair<Vec2, std::int64_t>> sub;
      for (std::size_t j = 0; j < edges.size(); ++j) {
        sub.push_back({edges[j].first, choice[j]});
      }
      out.push_back(polytope_from_edges(std::move(sub)));
    }
    std::size_t j = 0;
    while (j < edges.size() && choice[j] == edges[j].second) {
      choice[j] = 0;
      ++j;
    }
    if (j == edges.size()) break;
    ++choice[j];
  }

  auto key = [](const LatticePolytope& Q) {
    return std::make_pair(volume2(Q), Q.vertices);
  };
  std::sort(out.begin(), out.end(),
            [&](const LatticePolytope& a, const LatticePolytope& b) {
              return key(a) < key(b);
            });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

LatticePolytope minkowski_diff(const LatticePolytope& P, const LatticePolytope& Q) {
  std::map<Vec2, std::int64_t> remaining;
  for (auto& [dir, mult] : edge_multiset(P)) remaining[dir] += mult;
  for (auto& [dir, mult] : edge_multiset(Q)) {
    auto it = remaining.find(dir);
    if (it == remaining.end() || it->second < mult) {
      throw std::invalid_argument("minkowski_diff: Q is not a summand of P");
    }
    it->second -= mult;
  }
  std::vector<std::pair<Vec2, std::int64_t>> edges(remaining.begin(), remaining.end());
  return polytope_from_edges(std::move(edges));
}

std::int64_t min_face_count(const LatticePolytope& Q, Vec2 eta) {
  std::int64_t m = support_min(Q, eta);
  std::vector<Vec2> face;
  for (auto& v : Q.vertices) {
    if (dot(v, eta) == m) face.push_back(v);
  }
  if (face.size() <= 1) return 0;
  return gcd2(sub(face[1], face[0]));
}

std::int64_t volume2(const LatticePolytope& Q) {
  if (Q.vertices.size() < 3) return 0;
  std::int64_t s = 0;
  for (std::size_t j = 0; j < Q.vertices.size(); ++j) {
    s += det(Q.vertices[j], Q.vertices[(j + 1) % Q.vertices.size()]);
  }
  return std::abs(s);
}

}  // namespace absfact
