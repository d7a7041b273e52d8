#include "separations.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "convexity.hpp"
#include "errors.hpp"

namespace crofton::separations {

using embedding::PointConfig;
using geom::Point;

bool SeparationClass::separates(int i, int j) const {
    const bool il = std::binary_search(left.begin(), left.end(), i);
    const bool jl = std::binary_search(left.begin(), left.end(), j);
    return il != jl;
}

namespace {

std::vector<int> sorted_complement(int n, const std::vector<int>& side) {
    std::vector<int> out;
    out.reserve(n - side.size());
    size_t k = 0;
    for (int i = 0; i < n; ++i) {
        if (k < side.size() && side[k] == i) {
            ++k;
        } else {
            out.push_back(i);
        }
    }
    return out;
}

// Rotates the chord [a,b] by a small angle about its midpoint so that a and
// b leave the line toward opposite sides, then verifies exactly that the
// resulting line realizes the bipartition. Shrinks the angle on failure.
geom::OrientedLine witness_from_bitangent(const PointConfig& cfg, const std::vector<int>& left,
                                          const std::vector<int>& right,
                                          const BitangentPair& bt) {
    const Point& a = cfg.point(bt.left1);
    const Point& b = cfg.point(bt.right1);
    const double mx = 0.5 * (a.xd() + b.xd());
    const double my = 0.5 * (a.yd() + b.yd());
    const double ux = b.xd() - a.xd();
    const double uy = b.yd() - a.yd();
    const double chord_len = std::hypot(ux, uy);

    // Angle budget: keep every off-chord point on its side.
    double clearance = chord_len;
    double reach = chord_len;
    for (int i = 0; i < cfg.size(); ++i) {
        if (i == bt.left1 || i == bt.right1) continue;
        const Point& p = cfg.point(i);
        const double dist_to_line =
            std::fabs(ux * (p.yd() - a.yd()) - uy * (p.xd() - a.xd())) / chord_len;
        clearance = std::min(clearance, dist_to_line);
        reach = std::max(reach, std::hypot(p.xd() - mx, p.yd() - my));
    }
    double theta = std::min(0.5, clearance / (4.0 * reach));

    for (int attempt = 0; attempt < 64; ++attempt, theta /= 16.0) {
        for (int dir_sign : {+1, -1}) {
            const double c = std::cos(dir_sign * theta);
            const double s = std::sin(dir_sign * theta);
            geom::OrientedLine cand(Point::from_doubles(mx, my), c * ux - s * uy,
                                    s * ux + c * uy);
            bool left_is_left = true, ok = true;
            bool first = true;
            for (int i : left) {
                const geom::Side side = geom::side_of(cand, cfg.point(i));
                if (side == geom::Side::On) { ok = false; break; }
                if (first) {
                    left_is_left = (side == geom::Side::Left);
                    first = false;
                } else if ((side == geom::Side::Left) != left_is_left) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                for (int i : right) {
                    const geom::Side side = geom::side_of(cand, cfg.point(i));
                    if (side == geom::Side::On ||
                        (side == geom::Side::Left) == left_is_left) {
                        ok = false;
                        break;
                    }
                }
            }
            if (ok) return left_is_left ? cand : cand.reversed();
        }
    }
    throw InvariantError("failed to construct a witness line for a separable bipartition");
}

}  // namespace

BitangentPair inner_bitangents(const PointConfig& cfg, std::span<const int> left,
                               std::span<const int> right) {
    const int total = static_cast<int>(left.size() + right.size());
    int best1 = -1, best2 = -1;
    BitangentPair bt{};
    for (int x : left) {
        for (int y : right) {
            const Point& px = cfg.point(x);
            const Point& py = cfg.point(y);
            int n1 = 2, n2 = 2;  // x and y lie on the line, in both closed halfplanes
            for (int k : left) {
                if (k == x) continue;
                const int o = geom::orientation(px, py, cfg.point(k));
                if (o >= 0) ++n1;
                if (o <= 0) ++n2;
            }
            for (int k : right) {
                if (k == y) continue;
                const int o = geom::orientation(px, py, cfg.point(k));
                if (o <= 0) ++n1;
                if (o >= 0) ++n2;
            }
            if (n1 > best1) {
                best1 = n1;
                bt.left1 = x;
                bt.right1 = y;
            }
            if (n2 > best2) {
                best2 = n2;
                bt.left2 = x;
                bt.right2 = y;
            }
        }
    }
    if (best1 != total || best2 != total) {
        throw DomainError("bipartition is not line-separable (hulls intersect)");
    }
    return bt;
}

namespace {

// Does the line through hull edge [e1,e2] of side `own` weakly separate the
// two sides? Decides negative extremal segments directly by definition.
bool edge_weakly_separates(const PointConfig& cfg, int e1, int e2, std::span<const int> own,
                           std::span<const int> other) {
    const Point& a = cfg.point(e1);
    const Point& b = cfg.point(e2);
    int own_side = 0;
    for (int k : own) {
        if (k == e1 || k == e2) continue;
        const int o = geom::orientation(a, b, cfg.point(k));
        if (o == 0) return false;  // excluded by general position
        if (own_side == 0) {
            own_side = o;
        } else if (o != own_side) {
            return false;  // not a hull edge; defensive
        }
    }
    int other_side = 0;
    for (int k : other) {
        const int o = geom::orientation(a, b, cfg.point(k));
        if (o == 0) return false;
        if (other_side == 0) {
            other_side = o;
        } else if (o != other_side) {
            return false;  // other hull straddles the line
        }
    }
    // own_side == 0 means a two-point side lying on the line itself.
    return own_side == 0 || own_side != other_side;
}

// Exact intersection point of the chords [a,b] and [c,d] (assumed to cross
// in exactly one point).
Point chord_crossing(const Point& a, const Point& b, const Point& c, const Point& d) {
    const Rat ex = b.x() - a.x();
    const Rat ey = b.y() - a.y();
    const Rat fx = d.x() - c.x();
    const Rat fy = d.y() - c.y();
    const Rat den = ex * fy - ey * fx;
    if (den == 0) {
        throw InvariantError("inner bitangent chords are parallel; general position violated");
    }
    const Rat t = ((c.x() - a.x()) * fy - (c.y() - a.y()) * fx) / den;
    return Point(a.x() + t * ex, a.y() + t * ey);
}

}  // namespace

ExtremalSegments extremal_segments(const PointConfig& cfg, std::span<const int> left,
                                   std::span<const int> right) {
    ExtremalSegments out;
    out.bitangents = inner_bitangents(cfg, left, right);
    const BitangentPair& bt = out.bitangents;
    out.positive = {bt.chord1(), bt.chord2()};

    const Point& p1 = cfg.point(bt.left1);
    const Point& p2 = cfg.point(bt.right1);
    const Point& q1 = cfg.point(bt.left2);
    const Point& q2 = cfg.point(bt.right2);
    if (bt.chord1() == bt.chord2()) {
        out.crossing = Point((p1.x() + p2.x()) / 2, (p1.y() + p2.y()) / 2);
    } else if (bt.left1 == bt.left2) {
        out.crossing = p1;
    } else if (bt.right1 == bt.right2) {
        out.crossing = p2;
    } else {
        out.crossing = chord_crossing(p1, p2, q1, q2);
    }

    for (auto [own, other] : {std::pair{left, right}, std::pair{right, left}}) {
        const convexity::Hull h = convexity::convex_hull_of(cfg.points(), own);
        for (auto [e1, e2] : h.edges()) {
            if (edge_weakly_separates(cfg, e1, e2, own, other)) {
                out.negative.push_back(make_chord(e1, e2));
            }
        }
    }
    std::sort(out.negative.begin(), out.negative.end());
    return out;
}

double sigma(const PointConfig& cfg, const ExtremalSegments& segs, double sigma_floor) {
    long double acc = 0.0L;
    for (const Chord& c : segs.positive) {
        acc += cfg.distance(c.first, c.second);
    }
    for (const Chord& c : segs.negative) {
        acc -= cfg.distance(c.first, c.second);
    }
    const double value = static_cast<double>(acc);
    if (value < -sigma_floor) {
        throw InvariantError("sigma = " + std::to_string(value) + " below floor -" +
                             std::to_string(sigma_floor) +
                             "; separation machinery produced an invalid class");
    }
    return value;
}

std::pair<double, double> sigma_split(const PointConfig& cfg, const ExtremalSegments& segs,
                                      std::span<const int> left) {
    const geom::GeometryModel& g = cfg.model();
    const Point& x = segs.crossing;
    const BitangentPair& bt = segs.bitangents;
    long double sl = geom::distance(g, x, cfg.point(bt.left1)) +
                     geom::distance(g, x, cfg.point(bt.left2));
    long double sr = geom::distance(g, x, cfg.point(bt.right1)) +
                     geom::distance(g, x, cfg.point(bt.right2));
    for (const Chord& c : segs.negative) {
        // A negative chord is a hull edge, so both endpoints share a side.
        const bool in_left = std::find(left.begin(), left.end(), c.first) != left.end();
        (in_left ? sl : sr) -= cfg.distance(c.first, c.second);
    }
    return {static_cast<double>(sl), static_cast<double>(sr)};
}

namespace {

SeparationClass build_class(const PointConfig& cfg, std::vector<int> left,
                            std::vector<int> right, double sigma_floor) {
    ExtremalSegments segs = extremal_segments(cfg, left, right);
    SeparationClass cls{
        {},
        {},
        witness_from_bitangent(cfg, left, right, segs.bitangents),
        segs.bitangents,
        segs.positive,
        std::move(segs.negative),
        0.0,
        segs.crossing,
    };
    cls.left = std::move(left);
    cls.right = std::move(right);
    ExtremalSegments view{cls.bitangents, cls.positive, cls.negative, cls.crossing};
    cls.sigma = sigma(cfg, view, sigma_floor);
    return cls;
}

}  // namespace

std::vector<SeparationClass> enumerate_classes(const PointConfig& cfg, double sigma_floor) {
    if (!cfg.general_position()) {
        const auto& w = *cfg.collinear_witness();
        throw NotGeneralPosition("configuration is not in general position: points " +
                                     std::to_string(w[0]) + ", " + std::to_string(w[1]) + ", " +
                                     std::to_string(w[2]) + " are collinear",
                                 w);
    }
    const int n = cfg.size();
    if (n < 2) throw DomainError("need at least two points to enumerate separations");

    // Pair-anchored enumeration: for every chord, classify the remaining
    // points by exact side and emit the up-to-four case bipartitions.
    std::set<std::vector<int>> seen;  // canonical side (contains index 0)
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            std::vector<int> a_side, b_side;
            for (int k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                const int o = geom::orientation(cfg.point(i), cfg.point(j), cfg.point(k));
                (o > 0 ? a_side : b_side).push_back(k);
            }
            auto emit = [&](std::vector<int> x, std::vector<int> y) {
                if (x.empty() || y.empty()) return;
                std::sort(x.begin(), x.end());
                std::sort(y.begin(), y.end());
                seen.insert(x[0] == 0 ? std::move(x) : std::move(y));
            };
            auto with = [](std::vector<int> base, std::initializer_list<int> extra) {
                base.insert(base.end(), extra);
                return base;
            };
            emit(with(a_side, {j}), with(b_side, {i}));
            emit(with(a_side, {i}), with(b_side, {j}));
            emit(a_side, with(b_side, {i, j}));
            emit(with(a_side, {i, j}), b_side);
        }
    }

    std::vector<SeparationClass> classes;
    classes.reserve(seen.size());
    for (const std::vector<int>& side : seen) {
        classes.push_back(build_class(cfg, side, sorted_complement(n, side), sigma_floor));
    }
    return classes;
}

}  // namespace crofton::separations
