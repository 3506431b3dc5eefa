#include "berger/geometry.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace berger {

namespace {

using Rational = boost::multiprecision::cpp_rational;

// Error bound of the double-precision 2x2 determinant (Shewchuk's A bound).
constexpr double kEpsilon = std::numeric_limits<double>::epsilon() / 2.0;
constexpr double kOrientBound = (3.0 + 16.0 * kEpsilon) * kEpsilon;

Orientation fromSign(int sign)
{
    if (sign > 0)
        return Orientation::Counterclockwise;
    if (sign < 0)
        return Orientation::Clockwise;
    return Orientation::Collinear;
}

Orientation exactOrientation(const Point& a, const Point& b, const Point& c)
{
    const Rational ax(a.x), ay(a.y), bx(b.x), by(b.y), cx(c.x), cy(c.y);
    const Rational det = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
    return fromSign(det.sign());
}

int sign(double v) { return (v > 0.0) - (v < 0.0); }

// a, b, c collinear: is b within the closed bounding box of segment a-c?
bool onSegment(const Point& a, const Point& b, const Point& c)
{
    return std::min(a.x, c.x) <= b.x && b.x <= std::max(a.x, c.x)
        && std::min(a.y, c.y) <= b.y && b.y <= std::max(a.y, c.y);
}

bool closedSegmentsIntersect(const Point& p1, const Point& p2, const Point& q1, const Point& q2)
{
    const Orientation o1 = orientation(p1, p2, q1);
    const Orientation o2 = orientation(p1, p2, q2);
    const Orientation o3 = orientation(q1, q2, p1);
    const Orientation o4 = orientation(q1, q2, p2);

    if (o1 != o2 && o3 != o4)
        return true;

    return (o1 == Orientation::Collinear && onSegment(p1, q1, p2))
        || (o2 == Orientation::Collinear && onSegment(p1, q2, p2))
        || (o3 == Orientation::Collinear && onSegment(q1, p1, q2))
        || (o4 == Orientation::Collinear && onSegment(q1, p2, q2));
}

// Collinear a, b with `center`: do they point the same way from center?
bool sameRay(const Point& center, const Point& a, const Point& b)
{
    return sign(a.x - center.x) == sign(b.x - center.x) && sign(a.y - center.y) == sign(b.y - center.y);
}

// Position of `p` relative to the ray center->ref, counter-clockwise:
// 0 on the ray, 1 strictly left of it, 2 on the opposite ray, 3 strictly right.
int sector(const Point& center, const Point& ref, const Point& p)
{
    switch (orientation(center, ref, p)) {
    case Orientation::Counterclockwise:
        return 1;
    case Orientation::Clockwise:
        return 3;
    case Orientation::Collinear:
        break;
    }
    return sameRay(center, ref, p) ? 0 : 2;
}

}  // namespace

std::string toString(const Point& p)
{
    char buf[64];
    const int n = std::snprintf(buf, sizeof buf, "(%.17g,%.17g)", p.x, p.y);
    return std::string(buf, static_cast<std::size_t>(n));
}

bool isFinite(const Point& p) { return std::isfinite(p.x) && std::isfinite(p.y); }

Orientation orientation(const Point& a, const Point& b, const Point& c)
{
    // Common in the sweep: the sender is also the reference point.
    if (a == b || b == c || a == c)
        return Orientation::Collinear;
    const double left = (b.x - a.x) * (c.y - a.y);
    const double right = (b.y - a.y) * (c.x - a.x);
    const double det = left - right;
    const double magnitude = std::fabs(left) + std::fabs(right);

    if (std::isfinite(det) && std::isfinite(magnitude) && magnitude >= std::numeric_limits<double>::min()) {
        if (std::fabs(det) > kOrientBound * magnitude)
            return fromSign(sign(det));
    }
    return exactOrientation(a, b, c);
}

bool segmentsIntersect(const Point& p1, const Point& p2, const Point& q1, const Point& q2)
{
    if (!closedSegmentsIntersect(p1, p2, q1, q2))
        return false;

    // Locate a coincident endpoint pair, if any.
    const Point* shared = nullptr;
    const Point* pOther = nullptr;
    const Point* qOther = nullptr;
    if (p1 == q1) {
        shared = &p1; pOther = &p2; qOther = &q2;
    } else if (p1 == q2) {
        shared = &p1; pOther = &p2; qOther = &q1;
    } else if (p2 == q1) {
        shared = &p2; pOther = &p1; qOther = &q2;
    } else if (p2 == q2) {
        shared = &p2; pOther = &p1; qOther = &q1;
    }
    if (shared == nullptr)
        return true;

    // Degenerate segments collapse onto the shared endpoint.
    if (*pOther == *shared || *qOther == *shared)
        return false;
    // Anything beyond the shared endpoint requires a collinear overlap.
    if (orientation(*shared, *pOther, *qOther) != Orientation::Collinear)
        return false;
    return sameRay(*shared, *pOther, *qOther);
}

bool onThisSide(const Point& s, const Point& t, const Point& n, const Point& i)
{
    return !segmentsIntersect(n, i, s, t);
}

bool angularLess(const Point& center, const Point& a, const Point& b)
{
    auto upper = [&](const Point& p) {
        return p.y > center.y || (p.y == center.y && p.x > center.x);
    };
    const bool ua = upper(a);
    const bool ub = upper(b);
    if (ua != ub)
        return ua;
    return orientation(center, a, b) == Orientation::Counterclockwise;
}

namespace {

template <typename Accept>
std::optional<Point> sweep(std::span<const Point> candidates, const Point& self, const Point& ref, Direction c,
                           Accept accept)
{
    std::optional<Point> best;
    int bestRank = 0;

    // Sweep order of the sectors: the reference ray itself always comes last.
    auto rank = [c](int sec) {
        if (c == Direction::L)
            return sec == 0 ? 4 : sec;
        return sec == 0 ? 4 : 4 - sec;
    };
    const Orientation ahead = c == Direction::L ? Orientation::Counterclockwise : Orientation::Clockwise;

    for (const Point& i : candidates) {
        if (i == self || !accept(i))
            continue;
        const int r = rank(sector(self, ref, i));
        if (!best || r < bestRank) {
            best = i;
            bestRank = r;
            continue;
        }
        // Within an open half-plane the sweep meets `i` first iff `best` lies
        // ahead of it in sweep direction.
        if (r == bestRank && (r == 1 || r == 3) && orientation(self, i, *best) == ahead)
            best = i;
    }
    return best;
}

}  // namespace

std::optional<Point> firstInSweep(std::span<const Point> candidates, const Point& self, const Point& ref, Direction c)
{
    return sweep(candidates, self, ref, c, [](const Point&) { return true; });
}

std::optional<Point> nextNode(std::span<const Point> neighbors,
                              const Point& self,
                              const Point& ref,
                              const Point& s,
                              const Point& t,
                              Direction c,
                              const std::optional<Point>& skip)
{
    return sweep(neighbors, self, ref, c, [&](const Point& i) {
        return !(skip && i == *skip) && onThisSide(s, t, self, i);
    });
}

std::size_t PointHash::operator()(const Point& p) const noexcept
{
    // Normalise -0.0 so that equal points hash equally.
    const double x = p.x == 0.0 ? 0.0 : p.x;
    const double y = p.y == 0.0 ? 0.0 : p.y;
    const auto hx = std::bit_cast<std::uint64_t>(x);
    const auto hy = std::bit_cast<std::uint64_t>(y);
    return static_cast<std::size_t>(hx * 0x9E3779B97F4A7C15ULL ^ (hy + 0x7F4A7C159E3779B9ULL + (hx << 6) + (hx >> 2)));
}

}  // namespace berger
