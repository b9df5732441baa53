#pragma once

// Ruler, compass and nail constructions on the perspective disc.
//
// Everything here works in the plane of the disc: points on the observer's plane are placed on
// the equator from a back orthogonal view, antipodes are found by walking a measuring line for
// the length of the disc radius, and posterior meridians are interpolated by "fat lines" of
// overlapping arcs through antipodal knots. The exact perspective map is only evaluated where
// a draughtsman would measure an angle (sagittal and horizon crossings, vanishing directions).

#include "error.hpp"
#include "flattening.hpp"
#include "primitives.hpp"
#include "sphere.hpp"
#include "vector.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace sphpersp
{

inline constexpr int kDefaultMeasuringLines = 8;

// Angle below which a direction counts as F itself.
inline constexpr double kCenterEpsilon = 1e-9;

// Image of a point of the observer's plane given by its back-view coordinates (x, z): the
// ray from F toward (x, z) cut by the disc's equator.
inline DiscPoint equator_point(double x, double z, double tolerance = kDegeneracyTolerance)
{
	Vec2 back{x, z};
	double r = norm(back);
	if (!(r > tolerance))
		throw GeometryError(ErrorKind::AtObserver, "point of the observer's plane at O");
	return DiscPoint::from_cartesian((kPi / 2 / r) * back);
}

namespace detail
{

inline void check_antipode_domain(const DiscPoint& p)
{
	if (p.lambda() <= kCenterEpsilon)
		throw GeometryError(ErrorKind::CenterHasNoUniqueAntipode, "the antipode of F is the whole blowup");
	if (p.is_blowup())
		throw GeometryError(ErrorKind::BlowupInput, "blowup points have F as antipode");
}

} // namespace detail

// Antipode by the ruler rule: from p, through F, a disc distance equal to the radius.
inline DiscPoint antipode_in_disc(const DiscPoint& p)
{
	detail::check_antipode_domain(p);
	MeasuringLine line = measuring_line(p.theta());
	return line.point_at(line.coordinate_of(p) - kPi);
}

// The antipode of F: every point of the blowup circle.
struct BlowupToken
{
};

inline BlowupToken antipode_of_center() { return {}; }

struct FreehandAntipode
{
	DiscPoint point;
	DiscPoint blowup_point;       // P_B, where ray P->F meets the blowup
	double center_to_p = 0;       // |F P|
	double point_to_blowup = 0;   // |P~ P_B|, equal to |F P|
	double point_to_center = 0;   // |P~ F|
	double p_to_far_blowup = 0;   // |P (-P_B)|, equal to |P~ F|
};

// Antipode by the freehand rule, worked in disc cartesian coordinates: locate P_B on the
// blowup beyond F, then step back toward F by |F P|.
inline FreehandAntipode antipode_in_disc_freehand_measured(const DiscPoint& p)
{
	detail::check_antipode_domain(p);
	Vec2 pc = p.cartesian();
	double fp = norm(pc);
	Vec2 toward_p = pc / fp;
	Vec2 pb = -kPi * toward_p;
	Vec2 result = pb + fp * (-pb / norm(pb));

	FreehandAntipode out;
	out.point = DiscPoint::from_cartesian(result);
	out.blowup_point = DiscPoint::from_cartesian(pb);
	out.center_to_p = fp;
	out.point_to_blowup = distance(result, pb);
	out.point_to_center = norm(result);
	out.p_to_far_blowup = distance(pc, -pb);
	return out;
}

inline DiscPoint antipode_in_disc_freehand(const DiscPoint& p)
{
	return antipode_in_disc_freehand_measured(p).point;
}

// Mirror image across the observer's plane: M is where ray F->p meets the equator, and the
// result q makes M the midpoint of pq.
inline DiscPoint mirror_in_disc(const DiscPoint& p)
{
	if (p.lambda() <= kCenterEpsilon)
		throw GeometryError(ErrorKind::CenterHasNoUniqueAntipode, "F mirrors to B");
	Vec2 pc = p.cartesian();
	Vec2 m = (kPi / 2 / norm(pc)) * pc;
	return DiscPoint::from_cartesian(2.0 * m - pc);
}

enum class KnotMap
{
	Antipode,       // great circles
	ObserverMirror, // parallels
};

inline DiscPoint map_knot(const DiscPoint& p, KnotMap map)
{
	return map == KnotMap::Antipode ? antipode_in_disc(p) : mirror_in_disc(p);
}

struct FatLine
{
	// pieces[i] passes through knots[i], knots[i+1], knots[i+2].
	std::vector<PathPiece> pieces;
	std::vector<DiscPoint> knots;
	// anterior_knots[i] maps to knots[i].
	std::vector<DiscPoint> anterior_knots;
	double fatness = 0;

	// The chain restricted to the knot interval [first, last]; each piece is trimmed to the
	// intervals it covers, so consecutive output pieces still overlap.
	std::vector<PathPiece> between(std::size_t first, std::size_t last) const
	{
		std::vector<PathPiece> out;
		for (std::size_t j = 0; j < pieces.size(); ++j) {
			std::size_t lo = std::max(j, first);
			std::size_t hi = std::min(j + 2, last);
			if (lo >= hi)
				continue;
			out.push_back(trim(j, lo, hi));
		}
		return out;
	}

	PathPiece trim(std::size_t piece, std::size_t from_knot, std::size_t to_knot) const
	{
		Vec2 a = knots[from_knot].cartesian();
		Vec2 b = knots[to_knot].cartesian();
		if (const auto* arc = std::get_if<Arc>(&pieces[piece]))
			return arc->sub_arc(a, b);
		return StraightSegment{a, b};
	}
};

namespace detail
{

inline void check_meridian_ends(const PathPiece& anterior)
{
	for (Vec2 end : {piece_start(anterior), piece_end(anterior)})
		if (std::abs(norm(end) - kPi / 2) > 1e-6)
			throw GeometryError(ErrorKind::AnteriorNotMeridian, "anterior path must end on the equator");
}

// Signed azimuth span of the anterior path seen from F, start to end.
inline double azimuth_span(const PathPiece& anterior)
{
	Vec2 s = piece_start(anterior);
	Vec2 m = piece_point(anterior, 0.5);
	Vec2 e = piece_end(anterior);
	if (norm(m) <= kCenterEpsilon)
		throw GeometryError(ErrorKind::AnteriorNotMeridian, "anterior path crosses F; its great circle is a measuring line");
	double a = wrap_angle(std::atan2(m.w, m.u) - std::atan2(s.w, s.u));
	double b = wrap_angle(std::atan2(e.w, e.u) - std::atan2(m.w, m.u));
	return a + b;
}

// Spread between overlapping consecutive pieces, on the knot interval they share.
inline double fatness_of(const FatLine& fat)
{
	constexpr std::size_t kSamples = 33;
	double spread = 0;
	for (std::size_t j = 0; j + 1 < fat.pieces.size(); ++j) {
		PathPiece first = fat.trim(j, j + 1, j + 2);
		PathPiece second = fat.trim(j + 1, j + 1, j + 2);
		for (const auto& q : sample_piece(first, kSamples))
			spread = std::max(spread, piece_distance(second, q));
		for (const auto& q : sample_piece(second, kSamples))
			spread = std::max(spread, piece_distance(first, q));
	}
	return spread;
}

} // namespace detail

// Fat line through the images of knots cut on `anterior` by measuring lines at the given
// azimuths; the anterior path's endpoints are always knots. Azimuths outside the path's span
// are ignored, and ones within 1e-9 of each other are merged.
inline FatLine fat_line_at(const PathPiece& anterior, std::span<const double> azimuths, KnotMap map = KnotMap::Antipode)
{
	detail::check_meridian_ends(anterior);
	if (std::holds_alternative<StraightSegment>(anterior))
		throw GeometryError(ErrorKind::AnteriorNotMeridian, "straight anterior path: the posterior image is straight too");

	Vec2 start = piece_start(anterior);
	double start_azimuth = std::atan2(start.w, start.u);
	double span = detail::azimuth_span(anterior);

	std::vector<double> offsets;
	for (double phi : azimuths) {
		double o = wrap_angle(phi - start_azimuth);
		if (span < 0)
			o = -o;
		if (o < 0)
			o += 2 * kPi;
		if (o > 1e-9 && o < std::abs(span) - 1e-9)
			offsets.push_back(o);
	}
	std::sort(offsets.begin(), offsets.end());
	offsets.erase(std::unique(offsets.begin(), offsets.end(), [](double a, double b) { return b - a < 1e-9; }),
	              offsets.end());
	if (offsets.empty())
		throw GeometryError(ErrorKind::TooFewKnots, "a fat line needs at least one interior measuring line");

	FatLine fat;
	fat.anterior_knots.push_back(DiscPoint::from_cartesian(start));
	for (double o : offsets) {
		double phi = start_azimuth + (span < 0 ? -o : o);
		auto hits = ray_hits(anterior, phi);
		if (hits.empty())
			throw GeometryError(ErrorKind::AnteriorNotMeridian, "measuring line misses the anterior path");
		fat.anterior_knots.push_back(DiscPoint::from_cartesian(hits.front()));
	}
	fat.anterior_knots.push_back(DiscPoint::from_cartesian(piece_end(anterior)));

	for (const auto& y : fat.anterior_knots)
		fat.knots.push_back(map_knot(y, map));
	for (std::size_t i = 0; i + 2 < fat.knots.size(); ++i)
		fat.pieces.push_back(arc_through(fat.knots[i].cartesian(), fat.knots[i + 1].cartesian(),
		                                 fat.knots[i + 2].cartesian()));
	fat.fatness = detail::fatness_of(fat);
	return fat;
}

// Interior measuring-line azimuths spread uniformly over the anterior path's span.
inline std::vector<double> uniform_azimuths(const PathPiece& anterior, int count)
{
	Vec2 start = piece_start(anterior);
	double start_azimuth = std::atan2(start.w, start.u);
	double span = detail::azimuth_span(anterior);
	std::vector<double> out;
	for (int i = 1; i <= count; ++i)
		out.push_back(start_azimuth + span * double(i) / double(count + 1));
	return out;
}

// Fat line with `measuring_lines` interior knots placed uniformly in azimuth.
inline FatLine fat_line(const PathPiece& anterior, int measuring_lines = kDefaultMeasuringLines,
                        KnotMap map = KnotMap::Antipode)
{
	if (measuring_lines < 3)
		throw GeometryError(ErrorKind::TooFewKnots, "at least three measuring lines");
	detail::check_meridian_ends(anterior);
	if (std::holds_alternative<StraightSegment>(anterior))
		throw GeometryError(ErrorKind::AnteriorNotMeridian, "straight anterior path: the posterior image is straight too");
	auto azimuths = uniform_azimuths(anterior, measuring_lines);
	return fat_line_at(anterior, azimuths, map);
}

// Image of a line (or of the great circle of a plane) as drawable pieces.
struct LineImagePath
{
	std::vector<PathPiece> anterior;   // the line's image in the inner disc
	std::vector<PathPiece> posterior;  // the line's image in the outer ring
	std::vector<PathPiece> completion; // the rest of its great circle
	std::optional<PathPiece> anterior_arc; // construction arc of the great circle's anterior half
	std::optional<FatLine> fat;            // fat line of the great circle's posterior half
	std::array<DiscPoint, 2> endpoints{};  // vanishing points delimiting the meridian
	bool joined_at_blowup = false;         // the image is split by the blowup circle

	std::vector<PathPiece> image() const
	{
		std::vector<PathPiece> out = anterior;
		out.insert(out.end(), posterior.begin(), posterior.end());
		return out;
	}
};

namespace detail
{

inline bool is_frontal(const SpaceLine& l) { return std::abs(l.dir.y()) <= 1e-9; }

inline void check_not_through_observer(const SpaceLine& l, double tolerance)
{
	if (norm(cross(l.point, l.dir.vec())) <= tolerance)
		throw GeometryError(ErrorKind::ThroughObserver, "the line passes through O");
}

// Stretch [from, from + length] of signed coordinates along a measuring line, split where it
// passes through the blowup. Returns true when it was split.
inline bool diameter_run(double theta, double from, double length, std::vector<PathPiece>& out)
{
	MeasuringLine line = measuring_line(theta);
	bool split = false;
	if (from > kPi)
		from -= 2 * kPi;
	while (length > 1e-12) {
		if (from >= kPi - 1e-12) {
			from = -kPi;
			split = true;
			continue;
		}
		double to = std::min(from + length, kPi);
		if (to - from > 1e-12)
			out.push_back(StraightSegment{line.point_at(from).cartesian(), line.point_at(to).cartesian()});
		length -= to - from;
		from = to;
	}
	return split;
}

// Sagittal-plane crossing of a non-vertical frontal line, or horizon crossing of a vertical
// one, as measured on the corresponding measuring line.
inline std::optional<DiscPoint> measured_crossing(const SpaceLine& l, double tolerance)
{
	if (std::abs(l.dir.x()) > 1e-9) {
		Vec3 s = l.at(-l.point.x / l.dir.x());
		if (std::abs(s.z) <= tolerance && s.y < 0)
			return std::nullopt; // on the ray toward B
		return DiscPoint::polar(std::atan2(std::abs(s.z), s.y), s.z >= 0 ? kPi / 2 : -kPi / 2);
	}
	Vec3 h = l.at(-l.point.z / l.dir.z());
	if (std::abs(h.x) <= tolerance && h.y < 0)
		return std::nullopt;
	return DiscPoint::polar(std::atan2(std::abs(h.x), h.y), h.x >= 0 ? 0.0 : kPi);
}

} // namespace detail

// Anterior image of a frontal line: the arc through its two equatorial vanishing points and
// a measured third point.
inline PathPiece frontal_line_anterior(const SpaceLine& l, double tolerance = kDegeneracyTolerance)
{
	if (!detail::is_frontal(l))
		throw GeometryError(ErrorKind::NotFrontal, "line is not parallel to the observer's plane");
	detail::check_not_through_observer(l, tolerance);
	if (l.point.y < -tolerance)
		throw GeometryError(ErrorKind::NotAnterior, "frontal line lies behind the observer");

	Vec2 v = equator_point(l.dir.x(), l.dir.z()).cartesian();
	Vec2 vbar = equator_point(-l.dir.x(), -l.dir.z()).cartesian();

	if (std::abs(l.point.y) <= tolerance) {
		Vec3 f = l.foot();
		return arc_through(v, equator_point(f.x, f.z).cartesian(), vbar);
	}

	DiscPoint p = *detail::measured_crossing(l, tolerance);
	if (p.lambda() <= kCenterEpsilon)
		return StraightSegment{v, vbar};
	return arc_through(v, p.cartesian(), vbar);
}

// Image of a line crossing the observer's plane once.
inline LineImagePath receding_line_image(const SpaceLine& l, int measuring_lines = kDefaultMeasuringLines,
                                         double tolerance = kDegeneracyTolerance)
{
	if (detail::is_frontal(l))
		throw GeometryError(ErrorKind::FrontalLine, "frontal lines have their own construction");
	detail::check_not_through_observer(l, tolerance);
	if (measuring_lines < 3)
		throw GeometryError(ErrorKind::TooFewKnots, "at least three measuring lines");

	Vec3 crossing = l.at(-l.point.y / l.dir.y());
	DiscPoint p = equator_point(crossing.x, crossing.z);
	UnitDirection vdir = orient_anterior(l.dir);
	DiscPoint v = flatten(vdir);

	LineImagePath out;
	DiscPoint pbar = antipode_in_disc(p);
	PathPiece arc = (v.lambda() <= kCenterEpsilon) ? PathPiece{StraightSegment{p.cartesian(), pbar.cartesian()}}
	                                               : arc_through(p.cartesian(), v.cartesian(), pbar.cartesian());

	if (std::holds_alternative<StraightSegment>(arc)) {
		// The line's plane contains F: its image runs along the measuring line through P.
		MeasuringLine line = measuring_line(p.theta());
		double sv = line.coordinate_of(v);
		out.anterior_arc = arc;
		detail::diameter_run(line.theta, sv, kPi / 2 - sv, out.anterior);
		out.joined_at_blowup = detail::diameter_run(line.theta, kPi / 2, kPi / 2 + sv, out.posterior);
		detail::diameter_run(line.theta, sv + kPi, kPi, out.completion);
		out.endpoints = {v, line.point_at(sv > 0 ? sv - kPi : sv + kPi)};
		if (v.lambda() <= kCenterEpsilon)
			out.endpoints[1] = DiscPoint::blowup(p.theta());
		return out;
	}

	std::vector<double> azimuths = uniform_azimuths(arc, measuring_lines);
	azimuths.push_back(v.theta());
	FatLine fat = fat_line_at(arc, azimuths, KnotMap::Antipode);

	std::size_t vk = 0;
	for (std::size_t i = 0; i < fat.anterior_knots.size(); ++i)
		if (disc_distance(fat.anterior_knots[i], v) < disc_distance(fat.anterior_knots[vk], v))
			vk = i;

	const Arc& a = std::get<Arc>(arc);
	out.anterior.push_back(a.sub_arc(p.cartesian(), v.cartesian()).reversed());
	out.posterior = fat.between(vk, fat.knots.size() - 1);
	out.completion.push_back(a.sub_arc(v.cartesian(), pbar.cartesian()));
	auto rest = fat.between(0, vk);
	out.completion.insert(out.completion.end(), rest.begin(), rest.end());
	out.endpoints = {v, fat.knots[vk]};
	out.anterior_arc = arc;
	out.fat = std::move(fat);
	return out;
}

// Image of a frontal line behind the observer: fat line of the anterior auxiliary arc through
// the in-disc antipode of its measured crossing.
inline LineImagePath frontal_posterior_line_image(const SpaceLine& l, int measuring_lines = kDefaultMeasuringLines,
                                                  double tolerance = kDegeneracyTolerance)
{
	if (!detail::is_frontal(l))
		throw GeometryError(ErrorKind::NotFrontal, "line is not parallel to the observer's plane");
	detail::check_not_through_observer(l, tolerance);
	if (!(l.point.y < -tolerance))
		throw GeometryError(ErrorKind::NotPosterior, "frontal line is not behind the observer");

	DiscPoint v = equator_point(l.dir.x(), l.dir.z());
	DiscPoint vbar = equator_point(-l.dir.x(), -l.dir.z());

	LineImagePath out;
	out.endpoints = {v, vbar};
	auto crossing = detail::measured_crossing(l, tolerance);
	if (!crossing) {
		// Crossing on the ray toward B: two outer halves of a diameter, joined through B.
		out.posterior.push_back(StraightSegment{DiscPoint::blowup(v.theta()).cartesian(), v.cartesian()});
		out.posterior.push_back(StraightSegment{DiscPoint::blowup(vbar.theta()).cartesian(), vbar.cartesian()});
		out.completion.push_back(StraightSegment{v.cartesian(), vbar.cartesian()});
		out.anterior_arc = out.completion.front();
		out.joined_at_blowup = true;
		return out;
	}

	DiscPoint pbar = antipode_in_disc(*crossing);
	PathPiece arc = arc_through(v.cartesian(), pbar.cartesian(), vbar.cartesian());
	if (std::holds_alternative<StraightSegment>(arc)) {
		// Unreachable for a proper crossing, kept for tiny elevations that round to F.
		out.posterior.push_back(StraightSegment{DiscPoint::blowup(v.theta()).cartesian(), v.cartesian()});
		out.posterior.push_back(StraightSegment{DiscPoint::blowup(vbar.theta()).cartesian(), vbar.cartesian()});
		out.completion.push_back(arc);
		out.anterior_arc = arc;
		out.joined_at_blowup = true;
		return out;
	}
	FatLine fat = fat_line(arc, measuring_lines, KnotMap::Antipode);
	out.posterior = fat.pieces;
	out.completion.push_back(arc);
	out.anterior_arc = arc;
	out.fat = std::move(fat);
	return out;
}

// Dispatches on the line's class. Lines through O have no meridian and are rejected.
inline LineImagePath line_image(const SpaceLine& l, int measuring_lines = kDefaultMeasuringLines,
                                double tolerance = kDegeneracyTolerance)
{
	if (!detail::is_frontal(l))
		return receding_line_image(l, measuring_lines, tolerance);
	if (l.point.y < -tolerance)
		return frontal_posterior_line_image(l, measuring_lines, tolerance);

	detail::check_not_through_observer(l, tolerance);
	PathPiece arc = frontal_line_anterior(l, tolerance);
	LineImagePath out;
	out.anterior.push_back(arc);
	out.anterior_arc = arc;
	out.endpoints = {DiscPoint::from_cartesian(piece_start(arc)), DiscPoint::from_cartesian(piece_end(arc))};
	if (std::holds_alternative<StraightSegment>(arc)) {
		double theta = out.endpoints[0].theta();
		detail::diameter_run(theta, kPi / 2, kPi / 2, out.completion);
		detail::diameter_run(theta + kPi, kPi / 2, kPi / 2, out.completion);
		return out;
	}
	FatLine fat = fat_line(arc, measuring_lines, KnotMap::Antipode);
	out.completion = fat.pieces;
	out.fat = std::move(fat);
	return out;
}

// Image of a whole great circle (vanishing line of a plane). The line-specific fields are
// filled as for a frontal anterior line lying in the circle's plane.
inline LineImagePath great_circle_image(const GreatCircle& c, int measuring_lines = kDefaultMeasuringLines)
{
	Vec3 n = c.normal.vec();
	LineImagePath out;
	if (std::abs(n.x) <= 1e-12 && std::abs(n.z) <= 1e-12) {
		// The equator is its own antipodal image.
		Arc upper{{0, 0}, kPi / 2, 0, kPi, true};
		Arc lower{{0, 0}, kPi / 2, kPi, 0, true};
		out.anterior = {upper, lower};
		out.posterior = {upper, lower};
		out.endpoints = {DiscPoint::polar(kPi / 2, 0), DiscPoint::polar(kPi / 2, kPi)};
		return out;
	}
	if (std::abs(n.y) <= 1e-12) {
		DiscPoint e = equator_point(n.z, -n.x);
		detail::diameter_run(e.theta(), -kPi / 2, kPi, out.anterior);
		detail::diameter_run(e.theta(), kPi / 2, kPi / 2, out.posterior);
		detail::diameter_run(e.theta() + kPi, kPi / 2, kPi / 2, out.posterior);
		out.anterior_arc = out.anterior.front();
		out.endpoints = {e, DiscPoint::polar(kPi / 2, e.theta() + kPi)};
		out.joined_at_blowup = true;
		return out;
	}
	// A frontal line of the plane, one unit in front of O.
	double h2 = n.x * n.x + n.z * n.z;
	Vec3 point{-n.y * n.x / h2, 1.0, -n.y * n.z / h2};
	SpaceLine frontal = SpaceLine::through(point, cross(n, ref::F.vec()));
	PathPiece arc = frontal_line_anterior(frontal);
	FatLine fat = fat_line(arc, measuring_lines, KnotMap::Antipode);
	out.anterior.push_back(arc);
	out.posterior = fat.pieces;
	out.anterior_arc = arc;
	out.endpoints = {DiscPoint::from_cartesian(piece_start(arc)), DiscPoint::from_cartesian(piece_end(arc))};
	out.fat = std::move(fat);
	return out;
}

// Curve of constant angular elevation zeta: anterior arc through its equator crossings and
// its sagittal point, posterior half by mirrored knots.
inline LineImagePath parallel_image(double zeta, int measuring_lines = kDefaultMeasuringLines)
{
	if (!(std::abs(zeta) < kPi / 2 - 1e-12))
		throw GeometryError(ErrorKind::PoleElevation, "elevation of +-90 degrees is a single pole");
	if (measuring_lines < 3)
		throw GeometryError(ErrorKind::TooFewKnots, "at least three measuring lines");

	LineImagePath out;
	if (std::abs(zeta) <= 1e-12) {
		// The horizon: the L-R measuring line, exactly.
		detail::diameter_run(0.0, -kPi / 2, kPi, out.anterior);
		detail::diameter_run(0.0, kPi / 2, kPi / 2, out.posterior);
		detail::diameter_run(kPi, kPi / 2, kPi / 2, out.posterior);
		out.anterior_arc = out.anterior.front();
		out.endpoints = {DiscPoint::polar(kPi / 2, 0), DiscPoint::polar(kPi / 2, kPi)};
		out.joined_at_blowup = true;
		return out;
	}
	DiscPoint right = DiscPoint::polar(kPi / 2, zeta);
	DiscPoint left = DiscPoint::polar(kPi / 2, kPi - zeta);
	DiscPoint top = DiscPoint::polar(std::abs(zeta), zeta > 0 ? kPi / 2 : -kPi / 2);
	PathPiece arc = arc_through(right.cartesian(), top.cartesian(), left.cartesian());
	FatLine fat = fat_line(arc, measuring_lines, KnotMap::ObserverMirror);
	out.anterior.push_back(arc);
	out.posterior = fat.pieces;
	out.anterior_arc = arc;
	out.endpoints = {right, left};
	out.fat = std::move(fat);
	return out;
}

// Construction of an arbitrary anterior point: intersect the images of the vertical and the
// horizontal frontal lines through it. Returns nullopt when the two images do not meet.
inline std::optional<DiscPoint> construct_anterior_point(const Vec3& point, double tolerance = kDegeneracyTolerance)
{
	if (!(point.y > tolerance))
		throw GeometryError(ErrorKind::NotAnterior, "point is not in front of the observer");
	PathPiece vertical = frontal_line_anterior(SpaceLine{point, ref::U}, tolerance);
	PathPiece horizontal = frontal_line_anterior(SpaceLine{point, ref::R}, tolerance);
	auto hits = intersect(vertical, horizontal, 1e-6);
	if (hits.empty())
		return std::nullopt;
	Vec2 best = hits.front();
	for (const auto& h : hits)
		if (norm(h) < norm(best))
			best = h;
	return DiscPoint::from_cartesian(best);
}

namespace detail
{

// Position of the direction of q along the meridian of l: the signed angle from the foot of l.
inline double meridian_parameter(const SpaceLine& l, const Vec3& foot_dir, const Vec2& q)
{
	Vec3 x = unflatten(DiscPoint::from_cartesian(q)).vec();
	return std::atan2(dot(x, l.dir.vec()), dot(x, foot_dir));
}

// Part of the piece whose meridian parameter lies in [lo, hi], assuming the parameter is
// monotone along the piece.
inline std::optional<PathPiece> clip_piece(const PathPiece& piece, const SpaceLine& l, const Vec3& foot_dir, double lo,
                                           double hi)
{
	auto phi = [&](double s) { return meridian_parameter(l, foot_dir, piece_point(piece, s)); };
	double f0 = phi(0);
	double f1 = phi(1);
	if (std::max(f0, f1) < lo || std::min(f0, f1) > hi)
		return std::nullopt;
	bool rising = f1 >= f0;
	auto solve = [&](double target) {
		if (rising ? target <= f0 : target >= f0)
			return 0.0;
		if (rising ? target >= f1 : target <= f1)
			return 1.0;
		double a = 0, b = 1;
		for (int i = 0; i < 80; ++i) {
			double m = (a + b) / 2;
			((phi(m) < target) == rising ? a : b) = m;
		}
		return (a + b) / 2;
	};
	double s0 = solve(rising ? lo : hi);
	double s1 = solve(rising ? hi : lo);
	if (s1 - s0 <= 1e-12)
		return std::nullopt;
	Vec2 a = piece_point(piece, s0);
	Vec2 b = piece_point(piece, s1);
	if (const auto* arc = std::get_if<Arc>(&piece))
		return arc->sub_arc(a, b);
	return StraightSegment{a, b};
}

} // namespace detail

// Image of the segment ab: the image of its line, cut where the meridian parameter reaches
// the segment's ends.
inline LineImagePath segment_image(const Vec3& a, const Vec3& b, int measuring_lines = kDefaultMeasuringLines,
                                   double tolerance = kDegeneracyTolerance)
{
	if (norm(b - a) <= tolerance)
		throw GeometryError(ErrorKind::InvalidParams, "segment has zero length");
	SpaceLine l = SpaceLine::through(a, b - a);
	detail::check_not_through_observer(l, tolerance);
	LineImagePath full = line_image(l, measuring_lines, tolerance);
	Vec3 foot_dir = direction_of(l.foot(), 0.0).vec();
	double lo = std::atan2(dot(a, l.dir.vec()), dot(a, foot_dir));
	double hi = std::atan2(dot(b, l.dir.vec()), dot(b, foot_dir));

	LineImagePath out;
	for (const auto& piece : full.anterior)
		if (auto c = detail::clip_piece(piece, l, foot_dir, lo, hi))
			out.anterior.push_back(*c);
	for (const auto& piece : full.posterior)
		if (auto c = detail::clip_piece(piece, l, foot_dir, lo, hi))
			out.posterior.push_back(*c);
	out.anterior_arc = full.anterior_arc;
	out.fat = full.fat;
	for (const auto& piece : out.image())
		for (Vec2 end : {piece_start(piece), piece_end(piece)})
			if (norm(end) >= kPi - kBlowupEpsilon)
				out.joined_at_blowup = true;
	auto end_of = [](const Vec3& p) {
		UnitDirection d = direction_of(p);
		return angle_between(d.vec(), ref::B.vec()) <= kBlowupEpsilon ? DiscPoint::blowup(0) : flatten(d);
	};
	out.endpoints = {end_of(a), end_of(b)};
	return out;
}

} // namespace sphpersp
