#include "shapescore/geometry.hpp"

#include <unordered_map>

namespace shapescore {
namespace {

struct CoordKey {
    double x, y, z;
    bool operator==(const CoordKey& o) const { return x == o.x && y == o.y && z == o.z; }
};

struct CoordKeyHash {
    std::size_t operator()(const CoordKey& k) const {
        auto h = std::hash<double>{};
        std::size_t s = h(k.x);
        s ^= h(k.y) + 0x9e3779b97f4a7c15ULL + (s << 6) + (s >> 2);
        s ^= h(k.z) + 0x9e3779b97f4a7c15ULL + (s << 6) + (s >> 2);
        return s;
    }
};

}  // namespace

PointCloud::PointCloud(const std::vector<Point>& raw_rows) {
    if (raw_rows.empty()) fail_input("empty point cloud");
    dim_ = raw_rows.front().dim();
    row_to_vertex_.reserve(raw_rows.size());
    std::unordered_map<CoordKey, int, CoordKeyHash> seen;
    seen.reserve(raw_rows.size());
    for (std::size_t row = 0; row < raw_rows.size(); ++row) {
        const Point& p = raw_rows[row];
        if (p.dim() != dim_) fail_input("point cloud mixes 2D and 3D rows");
        CoordKey key{p.x(), p.y(), p.z()};
        auto it = seen.find(key);
        if (it == seen.end()) {
            int id = static_cast<int>(points_.size());
            seen.emplace(key, id);
            if (dim_ == 2)
                points_.emplace_back(p.x(), p.y(), static_cast<int>(row));
            else
                points_.emplace_back(p.x(), p.y(), p.z(), static_cast<int>(row));
            row_to_vertex_.push_back(id);
        } else {
            row_to_vertex_.push_back(it->second);
        }
    }
}

}  // namespace shapescore
