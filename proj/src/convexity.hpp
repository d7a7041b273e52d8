#pragma once

#include <span>
#include <utility>
#include <vector>

#include "geometry.hpp"

namespace crofton::convexity {

// Convex hull of a point set, stored as indices into the originating array.
// `extremal` is the counterclockwise circular order of hull vertices,
// starting at the lexicographically smallest one. Degenerate inputs collapse
// to a two-point (segment) or one-point hull.
struct Hull {
    std::vector<int> extremal;

    bool degenerate() const { return extremal.size() <= 2; }
    // Boundary edges as index pairs in circular order (k edges for k >= 3
    // vertices, one edge for a segment, none for a point).
    std::vector<std::pair<int, int>> edges() const;
};

Hull convex_hull(std::span<const geom::Point> pts);

// Hull of a subset of pts given by indices; resulting Hull indexes into pts.
Hull convex_hull_of(std::span<const geom::Point> pts, std::span<const int> subset);

// l touches the hull and leaves every hull point in one closed halfplane.
bool is_tangent(const geom::OrientedLine& l, const Hull& h, std::span<const geom::Point> pts);

// z lies in the cone C(x,y) = { z : x in [y,z] }, decided exactly; when true,
// the metric identity d(y,x) + d(x,z) = d(y,z) is asserted within tol.
bool in_cone(const geom::GeometryModel& g, const geom::Point& x, const geom::Point& y,
             const geom::Point& z, double tol);

// Closed triangle region membership, exact, degenerate triangles allowed.
bool triangle_region_contains(const geom::Point& a, const geom::Point& b, const geom::Point& c,
                              const geom::Point& p);

}  // namespace crofton::convexity
