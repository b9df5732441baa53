#pragma once

// Exact-curve oracle and error measurement for constructed paths, plus the limit map of a
// reflection on a distant sphere for comparison with the equidistant flattening.

#include "constructions.hpp"
#include "error.hpp"
#include "flattening.hpp"
#include "primitives.hpp"
#include "sphere.hpp"
#include "vector.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <functional>
#include <limits>
#include <string>
#include <vector>

namespace sphpersp
{

inline constexpr std::size_t kDefaultOracleSamples = 1024;

inline double to_degrees(double radians) { return radians / kPi * 180.0; }
inline double to_radians(double degrees) { return degrees / 180.0 * kPi; }

enum class CurveSource
{
	Meridian,
	Parallel,
	Custom,
};

struct CurveSample
{
	DiscPoint point;
	double parameter = 0;
};

// Flattened curve. The flattening is discontinuous only at B, so a curve through B comes as
// several branches, each ending on the blowup at its approach azimuth.
struct SampledCurve
{
	CurveSource source = CurveSource::Custom;
	std::vector<std::vector<CurveSample>> branches;

	std::size_t size() const
	{
		std::size_t n = 0;
		for (const auto& b : branches)
			n += b.size();
		return n;
	}

	std::vector<CurveSample> samples() const
	{
		std::vector<CurveSample> out;
		for (const auto& b : branches)
			out.insert(out.end(), b.begin(), b.end());
		return out;
	}
};

namespace detail
{

// Samples d(t) uniformly for t in [t0, t1]. blowup_at lists parameters where the curve
// passes through B; `approach` gives the azimuth of the curve just before (-1) or after (+1).
inline SampledCurve sample_directions(const std::function<UnitDirection(double)>& curve, double t0, double t1,
                                      std::size_t n, const std::vector<double>& blowup_at,
                                      const std::function<double(double, int)>& approach, CurveSource source)
{
	SampledCurve out;
	out.source = source;
	out.branches.emplace_back();
	std::vector<double> pending = blowup_at;
	std::sort(pending.begin(), pending.end());
	std::size_t next_blowup = 0;
	double step = (t1 - t0) / double(n - 1);
	for (std::size_t i = 0; i < n; ++i) {
		double t = i + 1 == n ? t1 : t0 + step * double(i);
		while (next_blowup < pending.size() && pending[next_blowup] <= t + 1e-12) {
			double tb = pending[next_blowup++];
			if (tb < t0 - 1e-12 || tb > t1 + 1e-12)
				continue;
			if (tb > t0 + 1e-12)
				out.branches.back().push_back({DiscPoint::blowup(approach(tb, -1)), tb});
			if (!out.branches.back().empty())
				out.branches.emplace_back();
			if (tb < t1 - 1e-12)
				out.branches.back().push_back({DiscPoint::blowup(approach(tb, +1)), tb});
		}
		UnitDirection d = curve(t);
		if (angle_between(d.vec(), ref::B.vec()) <= kBlowupEpsilon)
			continue;
		out.branches.back().push_back({flatten(d), t});
	}
	std::erase_if(out.branches, [](const auto& b) { return b.empty(); });
	return out;
}

} // namespace detail

// n points of the flattened circle c, uniformly spaced in arc angle, going counterclockwise
// about c.normal from from_dir to to_dir (the full circle when they coincide).
inline SampledCurve sample_meridian(const GreatCircle& c, const UnitDirection& from_dir, const UnitDirection& to_dir,
                                    std::size_t n = kDefaultOracleSamples)
{
	if (!c.contains(from_dir) || !c.contains(to_dir))
		throw GeometryError(ErrorKind::OffCircle, "meridian ends must lie on the circle");
	if (n < 2)
		throw GeometryError(ErrorKind::InvalidParams, "at least two samples");
	double sweep = c.sweep(from_dir, to_dir);
	if (sweep <= 1e-15)
		sweep = 2 * kPi;

	std::vector<double> blowups;
	if (c.contains(ref::B, 1e-12)) {
		double tb = c.sweep(from_dir, ref::B);
		if (tb <= sweep + 1e-12)
			blowups.push_back(tb);
		if (tb + 2 * kPi <= sweep + 1e-12)
			blowups.push_back(tb + 2 * kPi);
		if (tb < 1e-12 && sweep >= 2 * kPi - 1e-12)
			blowups.push_back(2 * kPi);
	}
	auto curve = [&](double t) { return c.rotate(from_dir, t); };
	// On a circle through B the azimuth is constant on each side of B.
	auto approach = [&](double tb, int side) { return flatten(c.rotate(from_dir, tb + side * kPi / 2)).theta(); };
	return detail::sample_directions(curve, 0.0, sweep, n, blowups, approach, CurveSource::Meridian);
}

// Curve of constant elevation zeta for horizontal angles xi in [xi_from, xi_to].
inline SampledCurve sample_parallel(double zeta, double xi_from, double xi_to, std::size_t n = kDefaultOracleSamples)
{
	if (!(std::abs(zeta) < kPi / 2))
		throw GeometryError(ErrorKind::PoleElevation, "elevation of +-90 degrees is a single pole");
	if (n < 2)
		throw GeometryError(ErrorKind::InvalidParams, "at least two samples");
	std::vector<double> blowups;
	if (std::abs(zeta) <= 1e-12) {
		for (double tb = -3 * kPi; tb <= 3 * kPi; tb += 2 * kPi)
			if (tb >= xi_from - 1e-12 && tb <= xi_to + 1e-12)
				blowups.push_back(tb);
	}
	auto curve = [zeta](double xi) { return from_theodolite({xi, zeta}); };
	auto approach = [zeta](double tb, int side) { return flatten(from_theodolite({tb + side * kPi / 2, zeta})).theta(); };
	return detail::sample_directions(curve, xi_from, xi_to, n, blowups, approach, CurveSource::Parallel);
}

// Exact image, through the perspective map, of a drawn piece under the antipodal map or the
// mirror across the observer's plane. This is the curve a fat line interpolates.
inline SampledCurve sample_mapped_piece(const PathPiece& piece, KnotMap map, std::size_t n = kDefaultOracleSamples)
{
	if (n < 2)
		throw GeometryError(ErrorKind::InvalidParams, "at least two samples");
	SampledCurve out;
	out.source = CurveSource::Custom;
	out.branches.emplace_back();
	for (std::size_t i = 0; i < n; ++i) {
		double t = double(i) / double(n - 1);
		UnitDirection d = unflatten(DiscPoint::from_cartesian(piece_point(piece, t)));
		UnitDirection image = map == KnotMap::Antipode ? -d : UnitDirection::unchecked(d.x(), -d.y(), d.z());
		out.branches.back().push_back({flatten(image), t});
	}
	return out;
}

struct ErrorReport
{
	double max_error = 0;  // disc radians
	double mean_error = 0; // disc radians
	double argmax_parameter = 0;
	std::size_t samples = 0;

	double max_degrees() const { return to_degrees(max_error); }
	double mean_degrees() const { return to_degrees(mean_error); }

	std::string to_row() const
	{
		char buf[160];
		std::snprintf(buf, sizeof buf, "max_deg=%.6f mean_deg=%.6f at_param=%.6f samples=%zu", max_degrees(),
		              mean_degrees(), argmax_parameter, samples);
		return buf;
	}
};

namespace detail
{

inline double polyline_distance(const SampledCurve& curve, const Vec2& q)
{
	double best = std::numeric_limits<double>::infinity();
	for (const auto& branch : curve.branches) {
		for (std::size_t i = 0; i < branch.size(); ++i) {
			Vec2 a = branch[i].point.cartesian();
			if (i + 1 == branch.size()) {
				best = std::min(best, distance(a, q));
				continue;
			}
			best = std::min(best, StraightSegment{a, branch[i + 1].point.cartesian()}.distance_to(q));
		}
	}
	return best;
}

} // namespace detail

// For every exact sample, the disc distance to the nearest point of the constructed path.
// Both curves must cover the same span: their ends may differ by at most span_tolerance.
inline ErrorReport angular_error(const std::vector<PathPiece>& constructed, const SampledCurve& exact,
                                 double span_tolerance = 0.1)
{
	if (constructed.empty() || exact.size() == 0)
		throw GeometryError(ErrorKind::EmptyInput, "nothing to compare");

	for (const auto& branch : exact.branches)
		for (const auto* s : {&branch.front(), &branch.back()})
			if (path_distance(constructed, s->point.cartesian()) > span_tolerance)
				throw GeometryError(ErrorKind::SpanMismatch, "exact curve reaches past the constructed path");
	for (Vec2 end : {piece_start(constructed.front()), piece_end(constructed.back())})
		if (detail::polyline_distance(exact, end) > span_tolerance)
			throw GeometryError(ErrorKind::SpanMismatch, "constructed path reaches past the exact curve");

	ErrorReport report;
	double total = 0;
	for (const auto& branch : exact.branches) {
		for (const auto& s : branch) {
			double e = path_distance(constructed, s.point.cartesian());
			total += e;
			if (e > report.max_error || report.samples == 0) {
				report.max_error = e;
				report.argmax_parameter = s.parameter;
			}
			++report.samples;
		}
	}
	report.mean_error = total / double(report.samples);
	return report;
}

// Limit r/d -> 0 of the view of a reflecting sphere: halve the angle from the axis, then
// project orthogonally. Radius sin(lambda / 2) on the unit disc.
inline Vec2 reflection_limit_map(double lambda, double theta)
{
	if (!(lambda >= 0 && lambda <= kPi))
		throw GeometryError(ErrorKind::InvalidParams, "lambda must lie in [0, pi]");
	double r = std::sin(lambda / 2);
	return {r * std::cos(theta), r * std::sin(theta)};
}

// Field of view, in degrees, seen in a sphere of radius r from distance d to its centre.
inline double reflection_fov(double r, double d)
{
	if (!(r > 0 && d > 0))
		throw GeometryError(ErrorKind::InvalidParams, "radius and distance must be positive");
	if (r > d)
		throw GeometryError(ErrorKind::ObserverInsideSphere, "observer inside the reflecting sphere");
	double shadow = 2 * std::asin(r / d);
	return 360.0 - to_degrees(shadow);
}

struct RadialProfileRow
{
	double lambda = 0;
	double equidistant = 0; // lambda / pi, rim-normalized
	double reflection = 0;  // sin(lambda / 2), rim is already 1
};

struct RadialProfileTable
{
	std::vector<RadialProfileRow> rows;
	bool ordered = true;  // sin(l/2) <= l/2 <= l on every row
	bool monotone = true; // both profiles strictly increasing

	std::string to_text() const
	{
		std::string out = "lambda equidistant reflection\n";
		char buf[96];
		for (const auto& r : rows) {
			std::snprintf(buf, sizeof buf, "%.6f %.6f %.6f\n", r.lambda, r.equidistant, r.reflection);
			out += buf;
		}
		return out;
	}
};

inline RadialProfileTable compare_radial_profiles(std::size_t n)
{
	if (n < 2)
		throw GeometryError(ErrorKind::InvalidParams, "at least two rows");
	RadialProfileTable table;
	for (std::size_t i = 0; i < n; ++i) {
		double lambda = i + 1 == n ? kPi : kPi * double(i) / double(n - 1);
		RadialProfileRow row{lambda, lambda / kPi, std::sin(lambda / 2)};
		if (!(row.reflection <= lambda / 2 && lambda / 2 <= lambda))
			table.ordered = false;
		if (!table.rows.empty()) {
			const auto& prev = table.rows.back();
			if (!(row.equidistant > prev.equidistant && row.reflection > prev.reflection))
				table.monotone = false;
		}
		table.rows.push_back(row);
	}
	return table;
}

} // namespace sphpersp
