#pragma once

// Observer-centred geometry: rays of sight from the origin O, their anamorphosis onto the
// unit sphere, great circles, and the vanishing sets of lines and planes.

#include "error.hpp"
#include "vector.hpp"

#include <cmath>
#include <optional>
#include <utility>

namespace sphpersp
{

// Distance below which a line or plane is considered to pass through O (world units).
inline constexpr double kDegeneracyTolerance = 1e-9;

// A ray of sight from O, stored as a unit vector.
class UnitDirection
{
public:
	// Caller guarantees unit norm.
	static constexpr UnitDirection unchecked(double x, double y, double z) { return UnitDirection(x, y, z); }

	static UnitDirection normalized(const Vec3& v, double tolerance = kDegeneracyTolerance)
	{
		double n = norm(v);
		if (!(n > tolerance))
			throw GeometryError(ErrorKind::AtObserver, "direction of a point at the observer");
		return UnitDirection(v.x / n, v.y / n, v.z / n);
	}

	constexpr double x() const { return x_; }
	constexpr double y() const { return y_; }
	constexpr double z() const { return z_; }
	constexpr Vec3 vec() const { return {x_, y_, z_}; }

	constexpr UnitDirection operator-() const { return UnitDirection(-x_, -y_, -z_); }
	constexpr bool operator==(const UnitDirection&) const = default;

private:
	constexpr UnitDirection(double x, double y, double z) : x_(x), y_(y), z_(z) {}

	double x_, y_, z_;
};

namespace ref
{
inline constexpr UnitDirection F = UnitDirection::unchecked(0, 1, 0);
inline constexpr UnitDirection B = UnitDirection::unchecked(0, -1, 0);
inline constexpr UnitDirection R = UnitDirection::unchecked(1, 0, 0);
inline constexpr UnitDirection L = UnitDirection::unchecked(-1, 0, 0);
inline constexpr UnitDirection U = UnitDirection::unchecked(0, 0, 1);
inline constexpr UnitDirection D = UnitDirection::unchecked(0, 0, -1);
} // namespace ref

inline UnitDirection direction_of(const Vec3& point, double tolerance = kDegeneracyTolerance)
{
	return UnitDirection::normalized(point, tolerance);
}

inline UnitDirection antipode(const UnitDirection& d) { return -d; }

// Flips d into the anterior hemisphere. On the observer's plane the tie goes to +x, then +z.
inline UnitDirection orient_anterior(const UnitDirection& d, double tolerance = 1e-12)
{
	if (std::abs(d.y()) > tolerance)
		return d.y() > 0 ? d : -d;
	if (std::abs(d.x()) > tolerance)
		return d.x() > 0 ? d : -d;
	return d.z() >= 0 ? d : -d;
}

struct SpaceLine
{
	Vec3 point;
	UnitDirection dir = ref::F;

	static SpaceLine through(const Vec3& point, const Vec3& direction)
	{
		return {point, UnitDirection::normalized(direction, 0.0)};
	}

	Vec3 at(double t) const { return point + t * dir.vec(); }

	// Point of the line nearest to O.
	Vec3 foot() const { return point - dot(point, dir.vec()) * dir.vec(); }
};

struct SpacePlane
{
	Vec3 point;
	UnitDirection normal = ref::U;

	static SpacePlane through(const Vec3& point, const Vec3& normal)
	{
		return {point, UnitDirection::normalized(normal, 0.0)};
	}
};

// Intersection of the unit sphere with a plane through O. normal and -normal give the same
// circle; the sign only fixes the counterclockwise sense used when sampling it.
struct GreatCircle
{
	UnitDirection normal = ref::U;

	bool contains(const UnitDirection& d, double tolerance = 1e-9) const
	{
		return std::abs(dot(d.vec(), normal.vec())) <= tolerance;
	}

	bool same_as(const GreatCircle& other, double tolerance = 1e-12) const
	{
		return norm(cross(normal.vec(), other.normal.vec())) <= tolerance;
	}

	// Orthonormal pair (e1, e2) spanning the circle's plane with e1 x e2 = normal.
	std::pair<UnitDirection, UnitDirection> basis() const
	{
		Vec3 n = normal.vec();
		// Prefer the equator crossing as e1; fall back to F when the circle is the equator.
		Vec3 seed = cross(n, ref::F.vec());
		if (norm(seed) < 1e-12)
			seed = cross(n, ref::R.vec());
		UnitDirection e1 = UnitDirection::normalized(seed, 0.0);
		UnitDirection e2 = UnitDirection::normalized(cross(n, e1.vec()), 0.0);
		return {e1, e2};
	}

	// Point at signed angle phi counterclockwise about normal from `from`.
	UnitDirection rotate(const UnitDirection& from, double phi) const
	{
		Vec3 a = from.vec();
		Vec3 b = cross(normal.vec(), a);
		return UnitDirection::normalized(std::cos(phi) * a + std::sin(phi) * b, 0.0);
	}

	// Counterclockwise angle about normal from a to b, in [0, 2*pi).
	double sweep(const UnitDirection& a, const UnitDirection& b) const
	{
		double s = std::atan2(dot(cross(a.vec(), b.vec()), normal.vec()), dot(a.vec(), b.vec()));
		return s < 0 ? s + 2 * kPi : s;
	}
};

// Sphere image of a line: the meridian between its two antipodal vanishing points.
struct SphereLineImage
{
	std::optional<GreatCircle> circle; // unset when the line passes through O
	UnitDirection v_plus = ref::F;
	UnitDirection v_minus = ref::B;
	bool degenerate = false;
};

inline SphereLineImage vanishing_points_of_line(const SpaceLine& l, double tolerance = kDegeneracyTolerance)
{
	SphereLineImage image;
	image.v_plus = l.dir;
	image.v_minus = -l.dir;
	// |point x dir| is the distance from O to the line.
	Vec3 n = cross(l.point, l.dir.vec());
	if (norm(n) <= tolerance) {
		image.degenerate = true;
		return image;
	}
	image.circle = GreatCircle{UnitDirection::normalized(n, 0.0)};
	return image;
}

struct PlaneImage
{
	GreatCircle circle;
	bool degenerate = false; // the plane contains O: a great circle with no vanishing points
};

inline PlaneImage vanishing_line_of_plane(const SpacePlane& h, double tolerance = kDegeneracyTolerance)
{
	return {GreatCircle{h.normal}, std::abs(dot(h.point, h.normal.vec())) < tolerance};
}

} // namespace sphpersp
