#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "geometry.hpp"

namespace crofton::embedding {

// A finite labeled point set in a chosen geometry model. Construction
// validates model membership and pairwise distinctness (exactly) and caches
// the general-position status together with a witness collinear triple.
class PointConfig {
public:
    PointConfig(geom::GeometryModel model, std::vector<geom::Point> points,
                std::vector<std::string> labels = {});

    const geom::GeometryModel& model() const { return model_; }
    const std::vector<geom::Point>& points() const { return points_; }
    const geom::Point& point(int i) const { return points_[i]; }
    const std::vector<std::string>& labels() const { return labels_; }
    int size() const { return static_cast<int>(points_.size()); }

    bool general_position() const { return !collinear_witness_.has_value(); }
    // First collinear triple in index order, when one exists.
    const std::optional<std::array<int, 3>>& collinear_witness() const {
        return collinear_witness_;
    }

    double distance(int i, int j) const { return geom::distance(model_, points_[i], points_[j]); }
    // Largest pairwise distance (0 for a single point).
    double diameter() const;

    // Same model and labels, new coordinates.
    PointConfig with_points(std::vector<geom::Point> points) const;

private:
    geom::GeometryModel model_;
    std::vector<geom::Point> points_;
    std::vector<std::string> labels_;
    std::optional<std::array<int, 3>> collinear_witness_;
};

// Exact count of unordered collinear triples, N(Q).
long long count_collinear_triples(const PointConfig& cfg);

}  // namespace crofton::embedding
