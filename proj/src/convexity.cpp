#include "convexity.hpp"

#include <algorithm>
#include <cmath>

#include "errors.hpp"

namespace crofton::convexity {

using geom::Point;

std::vector<std::pair<int, int>> Hull::edges() const {
    std::vector<std::pair<int, int>> out;
    const size_t k = extremal.size();
    if (k == 2) {
        out.emplace_back(extremal[0], extremal[1]);
    } else if (k >= 3) {
        for (size_t i = 0; i < k; ++i) {
            out.emplace_back(extremal[i], extremal[(i + 1) % k]);
        }
    }
    return out;
}

namespace {

bool lex_less(const Point& a, const Point& b) {
    const int cx = cmp(a.x(), b.x());
    if (cx != 0) return cx < 0;
    return a.y() < b.y();
}

}  // namespace

Hull convex_hull_of(std::span<const geom::Point> pts, std::span<const int> subset) {
    if (subset.empty()) throw DomainError("convex hull of an empty set");
    std::vector<int> order(subset.begin(), subset.end());
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        if (pts[i] == pts[j]) return i < j;
        return lex_less(pts[i], pts[j]);
    });
    // drop exact duplicates, keeping the smallest index
    order.erase(std::unique(order.begin(), order.end(),
                            [&](int i, int j) { return pts[i] == pts[j]; }),
                order.end());

    Hull h;
    if (order.size() == 1) {
        h.extremal = order;
        return h;
    }
    auto chain = [&](auto begin, auto end) {
        std::vector<int> out;
        for (auto it = begin; it != end; ++it) {
            while (out.size() >= 2 &&
                   geom::orientation(pts[out[out.size() - 2]], pts[out.back()], pts[*it]) <= 0) {
                out.pop_back();
            }
            out.push_back(*it);
        }
        return out;
    };
    std::vector<int> lower = chain(order.begin(), order.end());
    std::vector<int> upper = chain(order.rbegin(), order.rend());
    lower.pop_back();
    upper.pop_back();
    h.extremal = std::move(lower);
    h.extremal.insert(h.extremal.end(), upper.begin(), upper.end());
    if (h.extremal.empty()) h.extremal.push_back(order.front());
    return h;
}

Hull convex_hull(std::span<const geom::Point> pts) {
    std::vector<int> all(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) all[i] = static_cast<int>(i);
    return convex_hull_of(pts, all);
}

bool is_tangent(const geom::OrientedLine& l, const Hull& h, std::span<const geom::Point> pts) {
    if (h.extremal.empty()) throw DomainError("tangency test against an empty hull");
    bool any_on = false, any_left = false, any_right = false;
    for (int i : h.extremal) {
        switch (geom::side_of(l, pts[i])) {
            case geom::Side::On: any_on = true; break;
            case geom::Side::Left: any_left = true; break;
            case geom::Side::Right: any_right = true; break;
        }
    }
    return any_on && !(any_left && any_right);
}

bool in_cone(const geom::GeometryModel& g, const Point& x, const Point& y, const Point& z,
             double tol) {
    if (x == y) throw DomainError("cone apex and through-point coincide");
    const bool member = geom::on_segment(y, z, x);
    if (member) {
        const double lhs = geom::distance(g, y, x) + geom::distance(g, x, z);
        const double rhs = geom::distance(g, y, z);
        if (std::fabs(lhs - rhs) > tol) {
            throw InvariantError("cone membership holds but d(y,x)+d(x,z) != d(y,z): " +
                                 std::to_string(lhs) + " vs " + std::to_string(rhs));
        }
    }
    return member;
}

bool triangle_region_contains(const Point& a, const Point& b, const Point& c, const Point& p) {
    const int o = geom::orientation(a, b, c);
    if (o == 0) {
        // Degenerate triangle: the region is the segment spanned by the
        // extreme pair of {a, b, c}.
        const Point* lo = &a;
        const Point* hi = &a;
        for (const Point* q : {&b, &c}) {
            if (lex_less(*q, *lo)) lo = q;
            if (lex_less(*hi, *q)) hi = q;
        }
        if (*lo == *hi) return p == *lo;
        return geom::on_segment(*lo, *hi, p);
    }
    int s1 = geom::orientation(a, b, p);
    int s2 = geom::orientation(b, c, p);
    int s3 = geom::orientation(c, a, p);
    if (o < 0) {
        s1 = -s1;
        s2 = -s2;
        s3 = -s3;
    }
    return s1 >= 0 && s2 >= 0 && s3 >= 0;
}

}  // namespace crofton::convexity
