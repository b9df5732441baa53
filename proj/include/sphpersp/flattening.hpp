#pragma once

// Azimuthal-equidistant flattening of the sphere punctured at B onto the perspective disc of
// radius pi, its continuous inverse on the closed disc, and the angle conventions around it.
//
// Disc coordinates are polar (lambda, theta): lambda is the angle at O between the ray and F,
// theta the azimuth measured from the F-R measuring line counterclockwise toward F-U. The
// boundary circle lambda = pi is the blowup of B.

#include "error.hpp"
#include "sphere.hpp"
#include "vector.hpp"

#include <cmath>

namespace sphpersp
{

inline constexpr double kBlowupEpsilon = 1e-9;

// Wraps an angle into (-pi, pi].
inline double wrap_angle(double a)
{
	a = std::remainder(a, 2 * kPi);
	return a <= -kPi ? a + 2 * kPi : a;
}

// Smallest absolute difference between two azimuths.
inline double azimuth_gap(double a, double b) { return std::abs(wrap_angle(a - b)); }

class DiscPoint
{
public:
	constexpr DiscPoint() = default;

	static DiscPoint polar(double lambda, double theta)
	{
		DiscPoint p;
		p.lambda_ = lambda < 0 ? 0 : (lambda > kPi ? kPi : lambda);
		p.theta_ = p.lambda_ == 0 ? 0.0 : wrap_angle(theta);
		p.blowup_ = p.lambda_ >= kPi - kBlowupEpsilon;
		return p;
	}

	static DiscPoint from_cartesian(const Vec2& q)
	{
		double r = norm(q);
		return polar(r, r == 0 ? 0.0 : std::atan2(q.w, q.u));
	}

	// The point of the blowup circle reached along azimuth theta.
	static DiscPoint blowup(double theta) { return polar(kPi, theta); }

	constexpr double lambda() const { return lambda_; }
	constexpr double theta() const { return theta_; }
	constexpr bool is_blowup() const { return blowup_; }
	bool is_anterior() const { return lambda_ <= kPi / 2; }

	Vec2 cartesian() const { return {lambda_ * std::cos(theta_), lambda_ * std::sin(theta_)}; }

private:
	double lambda_ = 0;
	double theta_ = 0;
	bool blowup_ = false;
};

inline double disc_distance(const DiscPoint& a, const DiscPoint& b)
{
	return distance(a.cartesian(), b.cartesian());
}

// The perspective map restricted to the sphere minus B.
inline DiscPoint flatten(const UnitDirection& d, double blowup_epsilon = kBlowupEpsilon)
{
	double planar = std::hypot(d.x(), d.z());
	double lambda = std::atan2(planar, d.y());
	if (lambda >= kPi - blowup_epsilon)
		throw GeometryError(ErrorKind::AtBlowup, "the back direction has no single disc image");
	if (planar == 0)
		return DiscPoint{};
	return DiscPoint::polar(lambda, std::atan2(d.z(), d.x()));
}

// Continuous inverse on the closed disc; the whole blowup circle maps to B.
inline UnitDirection unflatten(const DiscPoint& p)
{
	if (p.is_blowup())
		return ref::B;
	double s = std::sin(p.lambda());
	return UnitDirection::unchecked(s * std::cos(p.theta()), std::cos(p.lambda()), s * std::sin(p.theta()));
}

struct NaturalCoords
{
	double rho = 0;
	double lambda = 0;
	double theta = 0;
};

inline NaturalCoords to_natural(const Vec3& point, double tolerance = kDegeneracyTolerance)
{
	double rho = norm(point);
	if (!(rho > tolerance))
		throw GeometryError(ErrorKind::AtObserver, "natural coordinates of the observer");
	double planar = std::hypot(point.x, point.z);
	double theta = planar == 0 ? 0.0 : wrap_angle(std::atan2(point.z, point.x));
	return {rho, std::atan2(planar, point.y), theta};
}

// Horizontal angle xi from F (positive toward R) and elevation zeta above the horizon plane.
struct TheodoliteAngles
{
	double xi = 0;
	double zeta = 0;
};

inline UnitDirection from_theodolite(const TheodoliteAngles& a)
{
	double c = std::cos(a.zeta);
	return UnitDirection::unchecked(c * std::sin(a.xi), c * std::cos(a.xi), std::sin(a.zeta));
}

inline TheodoliteAngles to_theodolite(const UnitDirection& d)
{
	return {std::atan2(d.x(), d.y()), std::atan2(d.z(), std::hypot(d.x(), d.y()))};
}

// A diameter of the disc. Along it the signed coordinate s in [-pi, pi] is the angle at O
// from F, positive on the theta side; disc distance equals angular distance.
struct MeasuringLine
{
	double theta = 0;

	DiscPoint point_at(double s) const
	{
		return s >= 0 ? DiscPoint::polar(s, theta) : DiscPoint::polar(-s, theta + kPi);
	}

	// Signed coordinate of a point on this line (its projection onto the diameter).
	double coordinate_of(const DiscPoint& p) const
	{
		return dot(p.cartesian(), Vec2{std::cos(theta), std::sin(theta)});
	}

	DiscPoint positive_end() const { return DiscPoint::blowup(theta); }
	DiscPoint negative_end() const { return DiscPoint::blowup(theta + kPi); }
};

inline MeasuringLine measuring_line(double theta) { return {wrap_angle(theta)}; }

} // namespace sphpersp
