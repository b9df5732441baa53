#pragma once

// Ready-made scenes: a uniform ground grid seen from above it, a tiled cubical room seen from
// its centre, and a horizontal square turned about the vertical.

#include "constructions.hpp"
#include "error.hpp"
#include "flattening.hpp"
#include "primitives.hpp"
#include "sphere.hpp"
#include "vector.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace sphpersp
{

enum class PresetKind
{
	CentralGrid,
	CubicRoom,
	RotatedSquare,
};

struct CentralGridParams
{
	int n = 3;
	double spacing = 1;
	double height = 1;
};

struct CubicRoomParams
{
	double edge = 2;
	int div = 4;
};

struct RotatedSquareParams
{
	Vec3 center{0, 3, -1};
	double yaw_deg = 60;
	double side = 2;
};

// One stroke of a preset: the space geometry it draws and its constructed image.
struct PresetStroke
{
	SpaceLine line;
	std::optional<std::array<Vec3, 2>> segment; // unset for a whole line
	LineImagePath image;
	bool auxiliary = false; // a helper line of the construction, not part of the scene
};

struct VanishingMarker
{
	std::string label;
	DiscPoint point;
	// Signed coordinate along the horizontal measuring line, when the point lies on it.
	std::optional<double> horizontal_coordinate;
};

struct Preset
{
	PresetKind kind = PresetKind::CentralGrid;
	std::vector<PresetStroke> strokes;
	std::vector<VanishingMarker> markers;
};

namespace detail
{

inline VanishingMarker marker_for(const std::string& label, const UnitDirection& d)
{
	VanishingMarker m;
	m.label = label;
	if (angle_between(d.vec(), ref::B.vec()) <= kBlowupEpsilon) {
		m.point = DiscPoint::blowup(0);
		return m;
	}
	m.point = flatten(d);
	if (std::abs(d.z()) <= 1e-12)
		m.horizontal_coordinate = measuring_line(0).coordinate_of(m.point);
	return m;
}

// Frontal ground line at depth y, drawn through the point where the radius of the receding
// line x = y meets the image of the diagonal through D.
inline LineImagePath grid_frontal_image(const PathPiece& diagonal, double y, double height, int measuring_lines)
{
	double theta = equator_point(y, -height).theta();
	auto hits = ray_hits(diagonal, theta, 1e-9);
	if (hits.empty())
		throw GeometryError(ErrorKind::InvalidParams, "diagonal misses the grid radius");
	DiscPoint right = DiscPoint::polar(kPi / 2, 0);
	DiscPoint left = DiscPoint::polar(kPi / 2, kPi);
	PathPiece arc = arc_through(right.cartesian(), hits.front(), left.cartesian());
	LineImagePath out;
	out.anterior.push_back(arc);
	out.anterior_arc = arc;
	out.endpoints = {right, left};
	FatLine fat = fat_line(arc, measuring_lines, KnotMap::Antipode);
	out.completion = fat.pieces;
	out.fat = std::move(fat);
	return out;
}

} // namespace detail

inline Preset central_grid(const CentralGridParams& p, int measuring_lines = kDefaultMeasuringLines)
{
	if (p.n < 1 || !(p.spacing > 0) || !(p.height > 0))
		throw GeometryError(ErrorKind::InvalidParams, "central_grid needs n >= 1, spacing > 0, height > 0");
	Preset out;
	out.kind = PresetKind::CentralGrid;
	for (int i = -(p.n - 1); i <= p.n - 1; ++i) {
		SpaceLine l{{i * p.spacing, 0, -p.height}, ref::F};
		out.strokes.push_back({l, std::nullopt, receding_line_image(l, measuring_lines), false});
	}

	SpaceLine diagonal = SpaceLine::through({0, 0, -p.height}, {1, 1, 0});
	LineImagePath diag_image = receding_line_image(diagonal, measuring_lines);
	for (int j = -p.n; j <= p.n; ++j) {
		SpaceLine l{{0, j * p.spacing, -p.height}, ref::R};
		LineImagePath image = j > 0 ? detail::grid_frontal_image(diag_image.anterior.front(), j * p.spacing, p.height,
		                                                          measuring_lines)
		                            : line_image(l, measuring_lines);
		out.strokes.push_back({l, std::nullopt, std::move(image), false});
	}
	out.strokes.push_back({diagonal, std::nullopt, std::move(diag_image), true});

	out.markers = {detail::marker_for("L", ref::L), detail::marker_for("R", ref::R), detail::marker_for("F", ref::F),
	               detail::marker_for("B", ref::B)};
	return out;
}

inline Preset cubic_room(const CubicRoomParams& p, int measuring_lines = kDefaultMeasuringLines)
{
	if (!(p.edge > 0) || p.div < 1)
		throw GeometryError(ErrorKind::InvalidParams, "cubic_room needs edge > 0 and div >= 1");
	Preset out;
	out.kind = PresetKind::CubicRoom;
	double a = p.edge / 2;
	double step = p.edge / p.div;
	// Each tile line lies on a face (axis k at +-a) and runs along axis `run` at a fixed
	// offset on the remaining axis. Lines on cube edges are shared by two faces.
	std::map<std::tuple<int, long, long>, bool> seen;
	for (int k = 0; k < 3; ++k) {
		for (int sign : {-1, 1}) {
			for (int run = 0; run < 3; ++run) {
				if (run == k)
					continue;
				int other = 3 - k - run;
				for (int m = 0; m <= p.div; ++m) {
					double offset = m == p.div ? a : -a + m * step;
					double coords[3];
					coords[k] = sign * a;
					coords[other] = offset;
					// Key: running axis plus the two fixed coordinates in axis order.
					long first = std::lround(coords[std::min(k, other)] / step * 2);
					long second = std::lround(coords[std::max(k, other)] / step * 2);
					if (!seen.emplace(std::tuple{run, first, second}, true).second)
						continue;
					Vec3 ends[2];
					for (int e = 0; e < 2; ++e) {
						double c[3];
						c[k] = coords[k];
						c[other] = coords[other];
						c[run] = e == 0 ? -a : a;
						ends[e] = {c[0], c[1], c[2]};
					}
					PresetStroke s;
					s.line = SpaceLine::through(ends[0], ends[1] - ends[0]);
					s.segment = std::array<Vec3, 2>{ends[0], ends[1]};
					s.image = segment_image(ends[0], ends[1], measuring_lines);
					out.strokes.push_back(std::move(s));
				}
			}
		}
	}
	out.markers = {detail::marker_for("F", ref::F), detail::marker_for("B", ref::B), detail::marker_for("L", ref::L),
	               detail::marker_for("R", ref::R), detail::marker_for("U", ref::U), detail::marker_for("D", ref::D)};
	return out;
}

inline Preset rotated_square(const RotatedSquareParams& p, int measuring_lines = kDefaultMeasuringLines)
{
	if (!(p.side > 0))
		throw GeometryError(ErrorKind::InvalidParams, "rotated_square needs side > 0");
	double yaw = p.yaw_deg / 180.0 * kPi;
	Vec3 d1{std::sin(yaw), std::cos(yaw), 0};
	Vec3 d2{std::cos(yaw), -std::sin(yaw), 0};
	double h = p.side / 2;
	Vec3 corners[4] = {p.center - h * d1 - h * d2, p.center + h * d1 - h * d2, p.center + h * d1 + h * d2,
	                   p.center - h * d1 + h * d2};

	Preset out;
	out.kind = PresetKind::RotatedSquare;
	for (int i = 0; i < 4; ++i) {
		Vec3 a = corners[i];
		Vec3 b = corners[(i + 1) % 4];
		PresetStroke s;
		s.line = SpaceLine::through(a, b - a);
		s.segment = std::array<Vec3, 2>{a, b};
		s.image = segment_image(a, b, measuring_lines);
		out.strokes.push_back(std::move(s));
	}
	out.markers = {detail::marker_for("V1", UnitDirection::normalized(d1)),
	               detail::marker_for("V1'", UnitDirection::normalized(-1.0 * d1)),
	               detail::marker_for("V2", UnitDirection::normalized(-1.0 * d2)),
	               detail::marker_for("V2'", UnitDirection::normalized(d2))};
	return out;
}

} // namespace sphpersp
