#pragma once

#include <string>
#include <string_view>

#include "rational.hpp"

namespace crofton::geom {

enum class ModelKind { Euclidean, Minkowski, KleinHyperbolic };

// Supported Minkowski exponents. Outside this range the unit ball is either
// not strictly convex (p <= 1) or numerically treacherous (huge p).
inline constexpr double kMinkowskiMinExponent = 1.1;
inline constexpr double kMinkowskiMaxExponent = 16.0;

// One of the three concrete planar geometries. All three share the property
// that geodesic lines are Euclidean straight lines (chords of the unit disk
// in the Klein model), so the combinatorial machinery reduces to straight
// line predicates in every model.
struct GeometryModel {
    ModelKind kind = ModelKind::Euclidean;
    double p = 2.0;  // Minkowski exponent, ignored otherwise

    static GeometryModel euclidean() { return {ModelKind::Euclidean, 2.0}; }
    static GeometryModel minkowski(double p);  // throws DomainError outside [1.1, 16]
    static GeometryModel klein() { return {ModelKind::KleinHyperbolic, 2.0}; }

    std::string name() const;
    // Relative tolerance the pipeline is expected to meet in this model.
    double recommended_rel_tol() const;
};

// A point with exact rational coordinates and cached double images. The
// rationals drive every predicate; the doubles drive distance evaluation.
class Point {
public:
    Point() : Point(Rat(0), Rat(0)) {}
    Point(Rat x, Rat y);
    static Point from_doubles(double x, double y);
    // Exact decimal reads, e.g. ("0.1", "-3e-2").
    static Point from_decimals(std::string_view x, std::string_view y);

    const Rat& x() const { return x_; }
    const Rat& y() const { return y_; }
    double xd() const { return xd_; }
    double yd() const { return yd_; }
    // True when both rationals are exactly their double images; enables the
    // floating-point filter in predicates.
    bool double_exact() const { return double_exact_; }

    bool operator==(const Point& o) const { return x_ == o.x_ && y_ == o.y_; }
    bool operator!=(const Point& o) const { return !(*this == o); }

private:
    Rat x_, y_;
    double xd_, yd_;
    bool double_exact_;
};

enum class Side { Left, On, Right };

std::string to_string(Side s);

// A directed straight line. The public direction is unit length (within
// 1e-12); predicates use an exact rational direction that may be scaled
// differently but is always parallel and equally oriented.
class OrientedLine {
public:
    OrientedLine(Point anchor, double dir_x, double dir_y);
    // Line through two distinct points, direction b - a held exactly.
    static OrientedLine through(const Point& a, const Point& b);

    const Point& anchor() const { return anchor_; }
    double dir_x() const { return dx_d_; }
    double dir_y() const { return dy_d_; }
    const Rat& exact_dx() const { return dx_; }
    const Rat& exact_dy() const { return dy_; }
    OrientedLine reversed() const;

private:
    OrientedLine(Point anchor, Rat dx, Rat dy, double dxd, double dyd);
    Point anchor_;
    Rat dx_, dy_;
    double dx_d_, dy_d_;
};

// Exact sign of the orientation determinant of (b - a, c - a):
// +1 when a,b,c make a left turn, 0 when collinear, -1 otherwise.
// Semi-static floating filter with exact rational fallback.
int orientation(const Point& a, const Point& b, const Point& c);

bool collinear(const Point& a, const Point& b, const Point& c);

Side side_of(const OrientedLine& l, const Point& p);

// Closed segments [a,b] and [c,d] share at least one point. Exact.
bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d);

// p lies on the closed segment [a,b]. Exact.
bool on_segment(const Point& a, const Point& b, const Point& p);

// Throws DomainError when p is invalid in g (Klein: outside the open disk).
void validate_point(const GeometryModel& g, const Point& p);

double distance(const GeometryModel& g, const Point& a, const Point& b);

// Point at arc-length fraction t in [0,1] along the geodesic [a,b].
Point geodesic_point(const GeometryModel& g, const Point& a, const Point& b, double t);

// Alternative Klein distance via acosh; cross-checked against the
// cross-ratio form in tests.
double klein_distance_acosh(const Point& a, const Point& b);

}  // namespace crofton::geom
