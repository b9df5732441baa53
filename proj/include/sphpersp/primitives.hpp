#pragma once

// Drawing primitives of the perspective disc: circle arcs and straight segments, in disc
// units (radians), with the handful of incidence queries the constructions need.

#include "error.hpp"
#include "flattening.hpp"
#include "vector.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <variant>
#include <vector>

namespace sphpersp
{

inline constexpr double kCollinearityTolerance = 1e-9;

struct Arc
{
	Vec2 center;
	double radius = 1;
	double start_angle = 0;
	double end_angle = 0;
	bool ccw = true;

	// Signed angular span: positive when ccw, in (-2pi, 2pi).
	double sweep() const
	{
		double s = std::fmod(end_angle - start_angle, 2 * kPi);
		if (ccw)
			return s < 0 ? s + 2 * kPi : s;
		return s > 0 ? s - 2 * kPi : s;
	}

	Vec2 at_angle(double a) const { return center + radius * Vec2{std::cos(a), std::sin(a)}; }

	// t in [0, 1] from start to end.
	Vec2 point_at(double t) const { return at_angle(start_angle + t * sweep()); }
	Vec2 start() const { return at_angle(start_angle); }
	Vec2 end() const { return at_angle(end_angle); }

	double angle_of(const Vec2& q) const { return std::atan2(q.w - center.w, q.u - center.u); }

	// Arc parameter in [0, 1] of the direction of q, or a value outside [0, 1] when the
	// direction misses the arc.
	double parameter_of(const Vec2& q) const
	{
		double s = sweep();
		double d = std::fmod(angle_of(q) - start_angle, 2 * kPi);
		if (s >= 0) {
			if (d < 0)
				d += 2 * kPi;
		} else if (d > 0) {
			d -= 2 * kPi;
		}
		return d / s;
	}

	double distance_to(const Vec2& q) const
	{
		double t = parameter_of(q);
		if (t >= 0 && t <= 1)
			return std::abs(distance(q, center) - radius);
		return std::min(distance(q, start()), distance(q, end()));
	}

	// Same circle, from the direction of a to the direction of b, keeping the orientation.
	Arc sub_arc(const Vec2& a, const Vec2& b) const
	{
		Arc out = *this;
		out.start_angle = angle_of(a);
		out.end_angle = angle_of(b);
		return out;
	}

	Arc reversed() const { return {center, radius, end_angle, start_angle, !ccw}; }
};

struct StraightSegment
{
	Vec2 a;
	Vec2 b;

	Vec2 point_at(double t) const { return a + t * (b - a); }
	Vec2 start() const { return a; }
	Vec2 end() const { return b; }

	double parameter_of(const Vec2& q) const
	{
		Vec2 d = b - a;
		double len2 = dot(d, d);
		return len2 == 0 ? 0.0 : dot(q - a, d) / len2;
	}

	double distance_to(const Vec2& q) const
	{
		double t = std::clamp(parameter_of(q), 0.0, 1.0);
		return distance(q, point_at(t));
	}

	StraightSegment reversed() const { return {b, a}; }
};

using PathPiece = std::variant<Arc, StraightSegment>;

inline Vec2 piece_start(const PathPiece& p)
{
	return std::visit([](const auto& x) { return x.start(); }, p);
}

inline Vec2 piece_end(const PathPiece& p)
{
	return std::visit([](const auto& x) { return x.end(); }, p);
}

inline Vec2 piece_point(const PathPiece& p, double t)
{
	return std::visit([t](const auto& x) { return x.point_at(t); }, p);
}

inline double piece_distance(const PathPiece& p, const Vec2& q)
{
	return std::visit([&q](const auto& x) { return x.distance_to(q); }, p);
}

inline double path_distance(const std::vector<PathPiece>& pieces, const Vec2& q)
{
	double best = std::numeric_limits<double>::infinity();
	for (const auto& p : pieces)
		best = std::min(best, piece_distance(p, q));
	return best;
}

inline PathPiece reversed(const PathPiece& p)
{
	return std::visit([](const auto& x) -> PathPiece { return x.reversed(); }, p);
}

// n >= 2 evenly spaced points along the piece, endpoints included.
inline std::vector<Vec2> sample_piece(const PathPiece& p, std::size_t n)
{
	std::vector<Vec2> out;
	out.reserve(n);
	for (std::size_t i = 0; i < n; ++i)
		out.push_back(piece_point(p, n == 1 ? 0.0 : double(i) / double(n - 1)));
	return out;
}

// Circle arc through three points in order, found from the perpendicular bisectors. Nearly
// collinear triples (triangle area below collinearity_tol) give the segment p1 -> p3.
inline PathPiece arc_through(const Vec2& p1, const Vec2& p2, const Vec2& p3,
                             double collinearity_tol = kCollinearityTolerance)
{
	if (distance(p1, p2) <= 1e-12 || distance(p2, p3) <= 1e-12 || distance(p1, p3) <= 1e-12)
		throw GeometryError(ErrorKind::DuplicatePoints, "arc needs three distinct points");

	double orient = cross(p2 - p1, p3 - p1);
	if (std::abs(orient) / 2 < collinearity_tol)
		return StraightSegment{p1, p3};

	// Intersect the bisectors of p1p2 and p1p3, relative to p1.
	Vec2 b = p2 - p1;
	Vec2 c = p3 - p1;
	double d = 2 * orient;
	double bb = dot(b, b);
	double cc = dot(c, c);
	Vec2 rel{(c.w * bb - b.w * cc) / d, (b.u * cc - c.u * bb) / d};
	Vec2 center = p1 + rel;

	Arc arc;
	arc.center = center;
	arc.radius = norm(rel);
	arc.start_angle = arc.angle_of(p1);
	arc.end_angle = arc.angle_of(p3);
	arc.ccw = orient > 0;
	return arc;
}

// Points where the ray from the disc centre at azimuth phi meets the piece (ray parameter
// t >= 0), nearest first.
inline std::vector<Vec2> ray_hits(const PathPiece& piece, double phi, double tolerance = 1e-9)
{
	const Vec2 dir{std::cos(phi), std::sin(phi)};
	std::vector<Vec2> hits;
	if (const auto* arc = std::get_if<Arc>(&piece)) {
		double b = dot(dir, arc->center);
		double disc = b * b - (dot(arc->center, arc->center) - arc->radius * arc->radius);
		if (disc < 0)
			return hits;
		double root = std::sqrt(disc);
		for (double t : {b - root, b + root}) {
			if (t < -tolerance)
				continue;
			Vec2 q = std::max(t, 0.0) * dir;
			double s = arc->parameter_of(q);
			double slack = tolerance / std::max(arc->radius * std::abs(arc->sweep()), 1e-300);
			if (s >= -slack && s <= 1 + slack)
				hits.push_back(q);
		}
	} else {
		const auto& seg = std::get<StraightSegment>(piece);
		Vec2 e = seg.b - seg.a;
		double den = cross(dir, e);
		if (std::abs(den) < 1e-15)
			return hits;
		// t*dir = a + s*e
		double t = cross(seg.a, e) / den;
		double s = cross(seg.a, dir) / den;
		if (t >= -tolerance && s >= -tolerance && s <= 1 + tolerance)
			hits.push_back(std::max(t, 0.0) * dir);
	}
	std::sort(hits.begin(), hits.end(), [](const Vec2& a, const Vec2& b) { return norm(a) < norm(b); });
	return hits;
}

namespace detail
{

inline bool on_piece(const PathPiece& p, const Vec2& q, double tolerance)
{
	return piece_distance(p, q) <= tolerance;
}

inline std::vector<Vec2> circle_circle(Vec2 c0, double r0, Vec2 c1, double r1)
{
	std::vector<Vec2> out;
	double d = distance(c0, c1);
	if (d == 0 || d > r0 + r1 || d < std::abs(r0 - r1))
		return out;
	double a = (r0 * r0 - r1 * r1 + d * d) / (2 * d);
	double h2 = r0 * r0 - a * a;
	double h = h2 > 0 ? std::sqrt(h2) : 0.0;
	Vec2 e = (c1 - c0) / d;
	Vec2 m = c0 + a * e;
	Vec2 perp{-e.w, e.u};
	out.push_back(m + h * perp);
	if (h > 0)
		out.push_back(m - h * perp);
	return out;
}

inline std::vector<Vec2> line_circle(Vec2 a, Vec2 b, Vec2 c, double r)
{
	std::vector<Vec2> out;
	Vec2 e = b - a;
	double ee = dot(e, e);
	if (ee == 0)
		return out;
	Vec2 f = a - c;
	double bq = dot(f, e);
	double disc = bq * bq - ee * (dot(f, f) - r * r);
	if (disc < 0)
		return out;
	double root = std::sqrt(disc);
	out.push_back(a + ((-bq - root) / ee) * e);
	if (root > 0)
		out.push_back(a + ((-bq + root) / ee) * e);
	return out;
}

} // namespace detail

// Intersection points of two pieces.
inline std::vector<Vec2> intersect(const PathPiece& p, const PathPiece& q, double tolerance = 1e-9)
{
	std::vector<Vec2> candidates;
	const auto* pa = std::get_if<Arc>(&p);
	const auto* qa = std::get_if<Arc>(&q);
	if (pa && qa) {
		candidates = detail::circle_circle(pa->center, pa->radius, qa->center, qa->radius);
	} else if (pa || qa) {
		const Arc& arc = pa ? *pa : *qa;
		const auto& seg = std::get<StraightSegment>(pa ? q : p);
		candidates = detail::line_circle(seg.a, seg.b, arc.center, arc.radius);
	} else {
		const auto& s = std::get<StraightSegment>(p);
		const auto& t = std::get<StraightSegment>(q);
		Vec2 e = s.b - s.a;
		Vec2 f = t.b - t.a;
		double den = cross(e, f);
		if (std::abs(den) > 1e-15)
			candidates.push_back(s.a + (cross(t.a - s.a, f) / den) * e);
	}
	std::vector<Vec2> out;
	for (const auto& c : candidates)
		if (detail::on_piece(p, c, tolerance) && detail::on_piece(q, c, tolerance))
			out.push_back(c);
	return out;
}

} // namespace sphpersp
