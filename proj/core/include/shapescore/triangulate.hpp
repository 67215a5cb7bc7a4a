#pragma once

#include <array>
#include <unordered_map>
#include <vector>

#include "shapescore/geometry.hpp"

namespace shapescore {

/// One undirected triangulation edge together with its incident triangles.
struct EdgeUse {
    Edge edge;
    std::array<int, 2> tris;  // triangle ids, tris[1] == -1 on the hull
    int count;                // 1 (hull) or 2 (interior)
};

/// A 2D Delaunay triangulation. Triangles are counter-clockwise, stored with
/// their smallest vertex first and sorted, so equal inputs produce equal
/// structures. Every edge is incident to one or two triangles and the
/// count-1 edges trace the convex hull.
class Triangulation {
public:
    Triangulation(std::vector<Point> vertices, std::vector<Triangle> triangles);

    const std::vector<Point>& vertices() const { return vertices_; }
    const std::vector<Triangle>& triangles() const { return triangles_; }
    const std::vector<EdgeUse>& edges() const { return edges_; }

    /// Edge id for the undirected pair (u,v), or -1 if not an edge.
    int edge_id(int u, int v) const;

private:
    std::vector<Point> vertices_;
    std::vector<Triangle> triangles_;
    std::vector<EdgeUse> edges_;
    std::unordered_map<long long, int> edge_lookup_;
};

/// Delaunay triangulation of the (deduplicated) cloud via incremental
/// Bowyer-Watson insertion in input order. Exactly-cocircular ties are
/// normalized so the kept diagonal has the lexicographically smallest
/// (min,max) vertex pair. Throws on fewer than 3 distinct points or fully
/// collinear input.
Triangulation triangulate(const PointCloud& cloud);

/// All edges with incident-triangle counts (1 = hull, 2 = interior).
inline const std::vector<EdgeUse>& edges_of(const Triangulation& tri) { return tri.edges(); }

}  // namespace shapescore
