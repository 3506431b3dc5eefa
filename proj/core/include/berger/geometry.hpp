#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>

namespace berger {

// Nodes are identified by their coordinates, so Point doubles as a node id.
struct Point
{
    double x = 0.0;
    double y = 0.0;

    friend auto operator<=>(const Point&, const Point&) = default;
};

std::string toString(const Point& p);

bool isFinite(const Point& p);

enum class Orientation { Clockwise, Counterclockwise, Collinear };

// R selects neighbors clockwise, L counter-clockwise.
enum class Direction { L, R };

constexpr Direction opposite(Direction d) { return d == Direction::L ? Direction::R : Direction::L; }
constexpr char toChar(Direction d) { return d == Direction::L ? 'L' : 'R'; }

// Sign of (b - a) x (c - a). Exact for every pair of finite doubles: a
// floating-point filter decides the easy cases and a rational evaluation
// settles the rest.
Orientation orientation(const Point& a, const Point& b, const Point& c);

// True iff the closed segments share a point, except that an intersection made
// of nothing but one coincident endpoint pair does not count.
bool segmentsIntersect(const Point& p1, const Point& p2, const Point& q1, const Point& q2);

// True iff the segment n-i stays clear of segment s-t.
bool onThisSide(const Point& s, const Point& t, const Point& n, const Point& i);

// Orders points counter-clockwise around `center` starting from the positive
// x axis. Used to build cyclic adjacency lists.
bool angularLess(const Point& center, const Point& a, const Point& b);

// First of `candidates` met when sweeping from the ray self->ref in direction
// c; a candidate on the ray itself is met last.
std::optional<Point> firstInSweep(std::span<const Point> candidates, const Point& self, const Point& ref, Direction c);

/// Angular neighbor selection used by every forwarding decision.
///
/// Candidates are the neighbors other than `skip` whose edge from `self` does
/// not cross segment s-t. Sweeping from the ray self->ref (clockwise for R,
/// counter-clockwise for L), the first candidate met is returned. A candidate
/// lying exactly on the reference ray is met last, after a full turn, so the
/// sender itself is chosen only when it is the sole candidate.
std::optional<Point> nextNode(std::span<const Point> neighbors,
                              const Point& self,
                              const Point& ref,
                              const Point& s,
                              const Point& t,
                              Direction c,
                              const std::optional<Point>& skip);

struct PointHash
{
    std::size_t operator()(const Point& p) const noexcept;
};

}  // namespace berger
