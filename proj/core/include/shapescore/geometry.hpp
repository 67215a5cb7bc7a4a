#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

#include "shapescore/errors.hpp"

namespace shapescore {

/// Coordinate triple used for vector arithmetic; 2D data keeps z = 0.
struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    Vec3& operator+=(const Vec3& o) {
        x += o.x; y += o.y; z += o.z;
        return *this;
    }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }
inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

/// A d-dimensional point (d in {2,3}) carrying its original row index in the
/// input cloud. Coordinates must be finite.
class Point {
public:
    Point() = default;

    Point(double x, double y, int index = -1) : c_{x, y, 0.0}, dim_(2), index_(index) {
        validate();
    }

    Point(double x, double y, double z, int index = -1)
        : c_{x, y, z}, dim_(3), index_(index) {
        validate();
    }

    int dim() const { return dim_; }
    double x() const { return c_.x; }
    double y() const { return c_.y; }
    double z() const { return c_.z; }
    const Vec3& vec() const { return c_; }
    int index() const { return index_; }

    bool same_coords(const Point& o) const {
        return dim_ == o.dim_ && c_.x == o.c_.x && c_.y == o.c_.y && c_.z == o.c_.z;
    }

private:
    void validate() const {
        if (!std::isfinite(c_.x) || !std::isfinite(c_.y) || !std::isfinite(c_.z))
            fail_input("point has non-finite coordinate");
    }

    Vec3 c_{};
    int dim_ = 2;
    int index_ = -1;
};

inline double distance(const Point& a, const Point& b) { return norm(a.vec() - b.vec()); }

/// Undirected edge between two distinct vertices, with its Euclidean length.
/// Endpoints are stored in increasing index order.
class Edge {
public:
    Edge(int a, int b, double length) : a_(a < b ? a : b), b_(a < b ? b : a), length_(length) {
        if (a == b) fail_degenerate("edge endpoints must be distinct");
        if (!(length > 0.0)) fail_degenerate("edge length must be positive");
    }

    int a() const { return a_; }  // a() < b()
    int b() const { return b_; }
    double length() const { return length_; }

    bool operator==(const Edge& o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator<(const Edge& o) const {
        return a_ != o.a_ ? a_ < o.a_ : b_ < o.b_;
    }

private:
    int a_, b_;
    double length_;
};

inline Edge edge_between(const std::vector<Point>& pts, int i, int j) {
    return Edge(i, j, distance(pts[static_cast<std::size_t>(i)], pts[static_cast<std::size_t>(j)]));
}

/// Triangle as a triple of distinct vertex indices.
struct Triangle {
    std::array<int, 3> v{};

    std::array<int, 3> sorted() const {
        std::array<int, 3> s = v;
        if (s[0] > s[1]) std::swap(s[0], s[1]);
        if (s[1] > s[2]) std::swap(s[1], s[2]);
        if (s[0] > s[1]) std::swap(s[0], s[1]);
        return s;
    }
    bool operator==(const Triangle& o) const { return v == o.v; }
};

/// Deduplicated point cloud. Exactly-equal coordinate rows collapse to one
/// vertex; each vertex keeps the first original row as its index and
/// `row_to_vertex` maps every original row to its vertex.
class PointCloud {
public:
    PointCloud() = default;
    explicit PointCloud(const std::vector<Point>& raw_rows);

    int dim() const { return dim_; }
    std::size_t size() const { return points_.size(); }
    const std::vector<Point>& points() const { return points_; }
    const std::vector<int>& row_to_vertex() const { return row_to_vertex_; }
    std::size_t original_row_count() const { return row_to_vertex_.size(); }

private:
    int dim_ = 2;
    std::vector<Point> points_;
    std::vector<int> row_to_vertex_;
};

/// Sign of the doubled signed area of triangle abc: +1 counter-clockwise,
/// -1 clockwise, 0 collinear. Exact for all representable inputs.
int orient2d(const Point& a, const Point& b, const Point& c);

/// +1 if p lies strictly inside the circumcircle of abc (abc counter-clockwise),
/// -1 strictly outside, 0 cocircular. Flipping the orientation of abc flips the
/// sign. Exact for all representable inputs.
int in_circumcircle(const Point& a, const Point& b, const Point& c, const Point& p);

}  // namespace shapescore
