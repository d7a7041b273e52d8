#include "geometry.hpp"

#include <cmath>

#include "errors.hpp"

namespace crofton::geom {

GeometryModel GeometryModel::minkowski(double p) {
    if (!std::isfinite(p) || p < kMinkowskiMinExponent || p > kMinkowskiMaxExponent) {
        throw DomainError("Minkowski exponent must lie in [" +
                          std::to_string(kMinkowskiMinExponent) + ", " +
                          std::to_string(kMinkowskiMaxExponent) + "], got " + std::to_string(p));
    }
    return {ModelKind::Minkowski, p};
}

std::string GeometryModel::name() const {
    switch (kind) {
        case ModelKind::Euclidean: return "euclidean";
        case ModelKind::Minkowski: return "minkowski";
        case ModelKind::KleinHyperbolic: return "klein";
    }
    return "?";
}

double GeometryModel::recommended_rel_tol() const {
    return kind == ModelKind::KleinHyperbolic ? 1e-7 : 1e-9;
}

Point::Point(Rat x, Rat y) : x_(std::move(x)), y_(std::move(y)) {
    x_.canonicalize();
    y_.canonicalize();
    xd_ = rat_to_double(x_);
    yd_ = rat_to_double(y_);
    double_exact_ = (Rat(xd_) == x_) && (Rat(yd_) == y_);
}

Point Point::from_doubles(double x, double y) {
    return Point(rat_from_double(x), rat_from_double(y));
}

Point Point::from_decimals(std::string_view x, std::string_view y) {
    return Point(rat_from_decimal(x), rat_from_decimal(y));
}

std::string to_string(Side s) {
    switch (s) {
        case Side::Left: return "left";
        case Side::On: return "on";
        case Side::Right: return "right";
    }
    return "?";
}

OrientedLine::OrientedLine(Point anchor, Rat dx, Rat dy, double dxd, double dyd)
    : anchor_(std::move(anchor)), dx_(std::move(dx)), dy_(std::move(dy)), dx_d_(dxd), dy_d_(dyd) {}

OrientedLine::OrientedLine(Point anchor, double dir_x, double dir_y) : anchor_(std::move(anchor)) {
    const double norm = std::hypot(dir_x, dir_y);
    if (!std::isfinite(norm) || norm == 0.0) {
        throw DomainError("line direction must be finite and nonzero");
    }
    dx_d_ = dir_x / norm;
    dy_d_ = dir_y / norm;
    dx_ = rat_from_double(dx_d_);
    dy_ = rat_from_double(dy_d_);
}

OrientedLine OrientedLine::through(const Point& a, const Point& b) {
    if (a == b) throw DomainError("cannot form a line through two equal points");
    Rat dx = b.x() - a.x();
    Rat dy = b.y() - a.y();
    const double dxd = rat_to_double(dx);
    const double dyd = rat_to_double(dy);
    const double n = std::hypot(dxd, dyd);
    return OrientedLine(a, std::move(dx), std::move(dy), dxd / n, dyd / n);
}

OrientedLine OrientedLine::reversed() const {
    return OrientedLine(anchor_, -dx_, -dy_, -dx_d_, -dy_d_);
}

namespace {

// Shewchuk's orient2d A-bound for the semi-static filter.
constexpr double kOrientErrBound = (3.0 + 16.0 * 1.1102230246251565e-16) * 1.1102230246251565e-16;

int exact_orientation(const Point& a, const Point& b, const Point& c) {
    Rat det = (b.x() - a.x()) * (c.y() - a.y()) - (b.y() - a.y()) * (c.x() - a.x());
    return rat_sign(det);
}

}  // namespace

int orientation(const Point& a, const Point& b, const Point& c) {
    if (a.double_exact() && b.double_exact() && c.double_exact()) {
        const double detleft = (b.xd() - a.xd()) * (c.yd() - a.yd());
        const double detright = (b.yd() - a.yd()) * (c.xd() - a.xd());
        const double det = detleft - detright;
        const double detsum = std::fabs(detleft) + std::fabs(detright);
        if (std::fabs(det) > kOrientErrBound * detsum) {
            return det > 0 ? 1 : -1;
        }
    }
    return exact_orientation(a, b, c);
}

bool collinear(const Point& a, const Point& b, const Point& c) {
    return orientation(a, b, c) == 0;
}

Side side_of(const OrientedLine& l, const Point& p) {
    Rat cross = l.exact_dx() * (p.y() - l.anchor().y()) - l.exact_dy() * (p.x() - l.anchor().x());
    const int s = rat_sign(cross);
    if (s > 0) return Side::Left;
    if (s < 0) return Side::Right;
    return Side::On;
}

bool on_segment(const Point& a, const Point& b, const Point& p) {
    if (orientation(a, b, p) != 0) return false;
    const Rat& lox = a.x() <= b.x() ? a.x() : b.x();
    const Rat& hix = a.x() <= b.x() ? b.x() : a.x();
    const Rat& loy = a.y() <= b.y() ? a.y() : b.y();
    const Rat& hiy = a.y() <= b.y() ? b.y() : a.y();
    return lox <= p.x() && p.x() <= hix && loy <= p.y() && p.y() <= hiy;
}

bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
    const int o1 = orientation(a, b, c);
    const int o2 = orientation(a, b, d);
    const int o3 = orientation(c, d, a);
    const int o4 = orientation(c, d, b);
    if (o1 != o2 && o3 != o4) return true;
    if (o1 == 0 && on_segment(a, b, c)) return true;
    if (o2 == 0 && on_segment(a, b, d)) return true;
    if (o3 == 0 && on_segment(c, d, a)) return true;
    if (o4 == 0 && on_segment(c, d, b)) return true;
    return false;
}

void validate_point(const GeometryModel& g, const Point& p) {
    if (g.kind == ModelKind::KleinHyperbolic) {
        Rat n2 = p.x() * p.x() + p.y() * p.y();
        if (n2 >= 1) {
            throw DomainError("Klein point (" + std::to_string(p.xd()) + ", " +
                              std::to_string(p.yd()) + ") is not strictly inside the unit disk");
        }
    }
}

namespace {

double minkowski_norm(double dx, double dy, double p) {
    dx = std::fabs(dx);
    dy = std::fabs(dy);
    const double m = std::max(dx, dy);
    if (m == 0.0) return 0.0;
    return m * std::pow(std::pow(dx / m, p) + std::pow(dy / m, p), 1.0 / p);
}

// Chord parameters of the unit-circle crossings of the line a + t*(b-a):
// tA < 0 <= 1 < tB for interior a, b.
struct ChordRoots {
    double tA, tB;
};

ChordRoots klein_chord_roots(const Point& a, const Point& b) {
    const double ux = b.xd() - a.xd();
    const double uy = b.yd() - a.yd();
    const double A = ux * ux + uy * uy;
    const double B = a.xd() * ux + a.yd() * uy;
    const double C = a.xd() * a.xd() + a.yd() * a.yd() - 1.0;  // < 0 inside the disk
    const double disc = B * B - A * C;
    const double s = std::sqrt(disc);
    return {(-B - s) / A, (-B + s) / A};
}

double klein_distance(const Point& a, const Point& b) {
    validate_point(GeometryModel::klein(), a);
    validate_point(GeometryModel::klein(), b);
    if (a == b) return 0.0;
    const auto [tA, tB] = klein_chord_roots(a, b);
    const double cross_ratio = ((1.0 - tA) * tB) / ((-tA) * (tB - 1.0));
    return 0.5 * std::log(cross_ratio);
}

}  // namespace

double klein_distance_acosh(const Point& a, const Point& b) {
    const double na = 1.0 - (a.xd() * a.xd() + a.yd() * a.yd());
    const double nb = 1.0 - (b.xd() * b.xd() + b.yd() * b.yd());
    const double dot = 1.0 - (a.xd() * b.xd() + a.yd() * b.yd());
    const double ch = dot / std::sqrt(na * nb);
    return std::acosh(std::max(1.0, ch));
}

double distance(const GeometryModel& g, const Point& a, const Point& b) {
    switch (g.kind) {
        case ModelKind::Euclidean:
            return std::hypot(b.xd() - a.xd(), b.yd() - a.yd());
        case ModelKind::Minkowski:
            return minkowski_norm(b.xd() - a.xd(), b.yd() - a.yd(), g.p);
        case ModelKind::KleinHyperbolic:
            return klein_distance(a, b);
    }
    return 0.0;
}

Point geodesic_point(const GeometryModel& g, const Point& a, const Point& b, double t) {
    if (!(t >= 0.0 && t <= 1.0)) {
        throw DomainError("geodesic parameter must lie in [0,1], got " + std::to_string(t));
    }
    if (a == b) return a;
    if (g.kind != ModelKind::KleinHyperbolic) {
        // Norm-induced metrics are constant speed along straight chords.
        return Point::from_doubles(a.xd() + t * (b.xd() - a.xd()), a.yd() + t * (b.yd() - a.yd()));
    }
    validate_point(g, a);
    validate_point(g, b);
    const auto [tA, tB] = klein_chord_roots(a, b);
    const double d = distance(g, a, b);
    // Solve d(a, x(s)) = t*d for the chord parameter s.
    const double kappa = ((-tA) / tB) * std::exp(2.0 * t * d);
    const double s = (kappa * tB + tA) / (1.0 + kappa);
    return Point::from_doubles(a.xd() + s * (b.xd() - a.xd()), a.yd() + s * (b.yd() - a.yd()));
}

}  // namespace crofton::geom
