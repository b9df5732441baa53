#pragma once

#include <cmath>
#include <numbers>

namespace sphpersp
{

inline constexpr double kPi = std::numbers::pi;

// World-space vector. x points to R, y to F, z to U.
struct Vec3
{
	double x = 0, y = 0, z = 0;

	constexpr Vec3 operator-() const { return {-x, -y, -z}; }
	constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
	constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
	constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
	constexpr Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
	constexpr bool operator==(const Vec3&) const = default;
};

constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }

constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

constexpr Vec3 cross(const Vec3& a, const Vec3& b)
{
	return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

// Angle between two nonzero vectors, accurate at 0 and pi.
inline double angle_between(const Vec3& a, const Vec3& b)
{
	return std::atan2(norm(cross(a, b)), dot(a, b));
}

// Point of the perspective disc plane; u along the F-R measuring line, w along F-U.
struct Vec2
{
	double u = 0, w = 0;

	constexpr Vec2 operator-() const { return {-u, -w}; }
	constexpr Vec2 operator+(const Vec2& o) const { return {u + o.u, w + o.w}; }
	constexpr Vec2 operator-(const Vec2& o) const { return {u - o.u, w - o.w}; }
	constexpr Vec2 operator*(double s) const { return {u * s, w * s}; }
	constexpr Vec2 operator/(double s) const { return {u / s, w / s}; }
	constexpr bool operator==(const Vec2&) const = default;
};

constexpr Vec2 operator*(double s, const Vec2& v) { return v * s; }

constexpr double dot(const Vec2& a, const Vec2& b) { return a.u * b.u + a.w * b.w; }
constexpr double cross(const Vec2& a, const Vec2& b) { return a.u * b.w - a.w * b.u; }
inline double norm(const Vec2& v) { return std::hypot(v.u, v.w); }
inline double distance(const Vec2& a, const Vec2& b) { return norm(a - b); }

} // namespace sphpersp
