#pragma once

#include <cstdint>
#include <vector>

#include "absfact/vec2.hpp"

namespace absfact {

// Convex lattice polytope in the plane, stored as its counterclockwise
// vertex cycle with no three consecutive collinear vertices. Degenerate
// cases are legal: a segment stores its two endpoints, a point stores one
// vertex. The canonical form anchors the lexicographically smallest vertex
// first (see canonicalize()).
struct LatticePolytope {
  std::vector<Vec2> vertices;

  bool is_point() const { return vertices.size() == 1; }
  bool is_segment() const { return vertices.size() == 2; }

  bool operator==(const LatticePolytope& other) const = default;
};

// One-dimensional face together with its primitive inward normal. For a
// segment polytope both orientations appear, one per supporting halfplane.
struct Facet {
  Vec2 start;
  Vec2 end;
  Vec2 eta;                     // primitive inward normal
  std::int64_t lattice_length;  // number of lattice points on the facet - 1
  bool exterior;                // eta has a negative coordinate
};

// Complete fan of the toric completion: primitive rays ordered
// counterclockwise from eta_0 = (0,1) through the non-first-quadrant
// directions to eta_{r+1} = (1,0). After regularize() every adjacent pair
// has determinant 1.
struct Fan {
  std::vector<Vec2> rays;
  std::vector<bool> exterior_mask;  // per ray: exterior ray of N_f

  std::size_t size() const { return rays.size(); }
};

// Multiplicities k_i = -min_{m in P} <m, eta_i>, one per fan ray.
struct DivisorData {
  std::vector<std::int64_t> k;
};

// Convex hull of a point set; counterclockwise, collinear interior points
// dropped. Collinear input yields a segment, a single point a point.
LatticePolytope convex_hull(std::vector<Vec2> points);

// Translate so the lexicographically smallest vertex sits at the origin and
// rotate the vertex cycle to start there.
LatticePolytope canonicalize(const LatticePolytope& P);

// Edge walk of the polytope: (primitive direction, multiplicity) pairs in
// counterclockwise order. A segment contributes both orientations.
std::vector<std::pair<Vec2, std::int64_t>> edge_multiset(const LatticePolytope& P);

// Rebuild a polytope from an edge multiset (directions need not be sorted);
// the result is canonical. An empty multiset gives the origin point.
LatticePolytope polytope_from_edges(std::vector<std::pair<Vec2, std::int64_t>> edges);

bool contains_point(const LatticePolytope& P, Vec2 m);

std::vector<Facet> all_facets(const LatticePolytope& P);
std::vector<Facet> exterior_facets(const LatticePolytope& P);

std::int64_t support_min(const LatticePolytope& P, Vec2 eta);

// Requires origin in P (hypothesis on the constant term).
Fan build_fan(const LatticePolytope& P);

// Hirzebruch-Jung regularization: insert the minimal primitive rays so every
// adjacent determinant becomes 1. Inserted rays are marked non-exterior.
Fan regularize(const Fan& fan);

DivisorData divisor_multiplicities(const LatticePolytope& P, const Fan& fan);

// P intersected with (N*)^2: lattice points with both coordinates >= 1.
std::vector<Vec2> interior_lattice_points(const LatticePolytope& P);

// All lattice Minkowski summands of P up to translation, canonical and
// deduplicated, ordered by (2*area, vertex list). Includes the point and P.
// Throws SummandCapExceeded when the total edge multiplicity exceeds the cap.
std::vector<LatticePolytope> minkowski_summands(const LatticePolytope& P,
                                                std::int64_t multiplicity_cap = 64);

// P' with P' + Q = P, by edge-multiset subtraction. Throws if Q is not a
// summand of P.
LatticePolytope minkowski_diff(const LatticePolytope& P, const LatticePolytope& Q);

// Card(Q^{(eta)} cap Z^2) - 1: lattice length of the face minimizing
// <m, eta> (0 for a vertex).
std::int64_t min_face_count(const LatticePolytope& Q, Vec2 eta);

// Twice the Euclidean area (shoelace); 0 for points and segments.
std::int64_t volume2(const LatticePolytope& Q);

}  // namespace absfact
