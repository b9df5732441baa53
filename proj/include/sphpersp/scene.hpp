#pragma once

// Line-oriented scene files. One entity per line:
//
//	point x y z
//	segment x1 y1 z1 x2 y2 z2
//	line px py pz dx dy dz
//	plane px py pz nx ny nz
//	parallel zeta_deg
//	preset central_grid n=<int> spacing=<real> height=<real>
//	preset cubic_room edge=<real> div=<int>
//	preset rotated_square cx=<real> cy=<real> cz=<real> yaw_deg=<real> side=<real>
//
// Any line may end with style=black|gray|accent|dashed. '#' starts a comment.

#include "error.hpp"
#include "presets.hpp"
#include "vector.hpp"

#include <charconv>
#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <variant>
#include <vector>

namespace sphpersp
{

enum class StyleToken
{
	Black,
	Gray,
	Accent,
	Dashed,
};

inline const char* to_string(StyleToken s)
{
	switch (s) {
	case StyleToken::Black: return "black";
	case StyleToken::Gray: return "gray";
	case StyleToken::Accent: return "accent";
	case StyleToken::Dashed: return "dashed";
	}
	return "black";
}

struct PointEntity
{
	Vec3 p;
};

struct SegmentEntity
{
	Vec3 a;
	Vec3 b;
};

struct LineEntity
{
	SpaceLine line;
};

struct PlaneEntity
{
	SpacePlane plane;
};

struct ParallelEntity
{
	double zeta_deg = 0;
};

struct PresetEntity
{
	PresetKind kind = PresetKind::CentralGrid;
	CentralGridParams grid;
	CubicRoomParams room;
	RotatedSquareParams square;
};

using EntityShape = std::variant<PointEntity, SegmentEntity, LineEntity, PlaneEntity, ParallelEntity, PresetEntity>;

struct Entity
{
	EntityShape shape;
	std::optional<StyleToken> style;
	int line = 0; // 1-based source line
};

struct Scene
{
	std::vector<Entity> entities;
};

inline const char* keyword_of(const EntityShape& shape)
{
	static constexpr const char* names[] = {"point", "segment", "line", "plane", "parallel", "preset"};
	return names[shape.index()];
}

namespace detail
{

inline std::vector<std::string_view> split_fields(std::string_view text)
{
	std::vector<std::string_view> out;
	std::size_t i = 0;
	while (i < text.size()) {
		while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\r'))
			++i;
		std::size_t j = i;
		while (j < text.size() && text[j] != ' ' && text[j] != '\t' && text[j] != '\r')
			++j;
		if (j > i)
			out.push_back(text.substr(i, j - i));
		i = j;
	}
	return out;
}

inline double parse_real(std::string_view field, int line)
{
	if (!field.empty() && field.front() == '+')
		field.remove_prefix(1);
	double v = 0;
	auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
	if (ec != std::errc{} || end != field.data() + field.size() || !std::isfinite(v))
		throw ParseError(line, "not a number: '" + std::string(field) + "'");
	return v;
}

inline int parse_int(std::string_view field, int line)
{
	int v = 0;
	auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
	if (ec != std::errc{} || end != field.data() + field.size())
		throw ParseError(line, "not an integer: '" + std::string(field) + "'");
	return v;
}

inline Vec3 parse_vec(const std::vector<std::string_view>& f, std::size_t at, int line)
{
	return {parse_real(f[at], line), parse_real(f[at + 1], line), parse_real(f[at + 2], line)};
}

inline void expect_arity(const std::vector<std::string_view>& f, std::size_t n, int line)
{
	if (f.size() != n + 1)
		throw ParseError(line, std::string(f[0]) + " takes " + std::to_string(n) + " numbers, got " +
		                           std::to_string(f.size() - 1));
}

inline Vec3 nonzero(const Vec3& v, const char* what, int line)
{
	if (!(norm(v) > 0))
		throw ParseError(line, std::string("zero ") + what);
	return v;
}

inline PresetEntity parse_preset(const std::vector<std::string_view>& f, int line)
{
	if (f.size() < 2)
		throw ParseError(line, "preset needs a kind");
	PresetEntity p;
	std::map<std::string, std::string_view> params;
	for (std::size_t i = 2; i < f.size(); ++i) {
		auto eq = f[i].find('=');
		if (eq == std::string_view::npos || eq == 0)
			throw ParseError(line, "expected key=value, got '" + std::string(f[i]) + "'");
		params[std::string(f[i].substr(0, eq))] = f[i].substr(eq + 1);
	}
	auto take_real = [&](const char* key, double& out) {
		if (auto it = params.find(key); it != params.end()) {
			out = parse_real(it->second, line);
			params.erase(it);
		}
	};
	auto take_int = [&](const char* key, int& out) {
		if (auto it = params.find(key); it != params.end()) {
			out = parse_int(it->second, line);
			params.erase(it);
		}
	};

	std::string_view kind = f[1];
	if (kind == "central_grid") {
		p.kind = PresetKind::CentralGrid;
		take_int("n", p.grid.n);
		take_real("spacing", p.grid.spacing);
		take_real("height", p.grid.height);
		if (p.grid.n < 1 || !(p.grid.spacing > 0) || !(p.grid.height > 0))
			throw ParseError(line, "central_grid needs n >= 1, spacing > 0, height > 0");
	} else if (kind == "cubic_room") {
		p.kind = PresetKind::CubicRoom;
		take_real("edge", p.room.edge);
		take_int("div", p.room.div);
		if (!(p.room.edge > 0) || p.room.div < 1)
			throw ParseError(line, "cubic_room needs edge > 0 and div >= 1");
	} else if (kind == "rotated_square") {
		p.kind = PresetKind::RotatedSquare;
		take_real("cx", p.square.center.x);
		take_real("cy", p.square.center.y);
		take_real("cz", p.square.center.z);
		take_real("yaw_deg", p.square.yaw_deg);
		take_real("side", p.square.side);
		if (!(p.square.side > 0))
			throw ParseError(line, "rotated_square needs side > 0");
	} else {
		throw ParseError(line, "unknown preset '" + std::string(kind) + "'");
	}
	if (!params.empty())
		throw ParseError(line, "unknown preset parameter '" + params.begin()->first + "'");
	return p;
}

inline std::optional<StyleToken> parse_style(std::string_view v, int line)
{
	if (v == "black")
		return StyleToken::Black;
	if (v == "gray")
		return StyleToken::Gray;
	if (v == "accent")
		return StyleToken::Accent;
	if (v == "dashed")
		return StyleToken::Dashed;
	throw ParseError(line, "unknown style '" + std::string(v) + "'");
}

} // namespace detail

inline Entity parse_entity(std::string_view text, int line)
{
	auto f = detail::split_fields(text);
	Entity e;
	e.line = line;
	if (!f.empty() && f.back().starts_with("style=")) {
		e.style = detail::parse_style(f.back().substr(6), line);
		f.pop_back();
	}
	if (f.empty())
		throw ParseError(line, "style without an entity");

	std::string_view kw = f[0];
	if (kw == "point") {
		detail::expect_arity(f, 3, line);
		e.shape = PointEntity{detail::parse_vec(f, 1, line)};
	} else if (kw == "segment") {
		detail::expect_arity(f, 6, line);
		Vec3 a = detail::parse_vec(f, 1, line);
		Vec3 b = detail::parse_vec(f, 4, line);
		detail::nonzero(b - a, "length segment", line);
		e.shape = SegmentEntity{a, b};
	} else if (kw == "line") {
		detail::expect_arity(f, 6, line);
		Vec3 p = detail::parse_vec(f, 1, line);
		Vec3 d = detail::nonzero(detail::parse_vec(f, 4, line), "direction", line);
		e.shape = LineEntity{SpaceLine::through(p, d)};
	} else if (kw == "plane") {
		detail::expect_arity(f, 6, line);
		Vec3 p = detail::parse_vec(f, 1, line);
		Vec3 n = detail::nonzero(detail::parse_vec(f, 4, line), "normal", line);
		e.shape = PlaneEntity{SpacePlane::through(p, n)};
	} else if (kw == "parallel") {
		detail::expect_arity(f, 1, line);
		double zeta = detail::parse_real(f[1], line);
		if (!(std::abs(zeta) < 90))
			throw ParseError(line, "parallel elevation must lie strictly between -90 and 90 degrees");
		e.shape = ParallelEntity{zeta};
	} else if (kw == "preset") {
		e.shape = detail::parse_preset(f, line);
	} else {
		throw ParseError(line, "unknown keyword '" + std::string(kw) + "'");
	}
	return e;
}

inline Scene parse_scene(std::string_view text)
{
	Scene scene;
	int line = 0;
	std::size_t pos = 0;
	while (pos <= text.size()) {
		std::size_t nl = text.find('\n', pos);
		std::string_view row = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
		++line;
		if (auto hash = row.find('#'); hash != std::string_view::npos)
			row = row.substr(0, hash);
		if (!detail::split_fields(row).empty())
			scene.entities.push_back(parse_entity(row, line));
		if (nl == std::string_view::npos)
			break;
		pos = nl + 1;
	}
	return scene;
}

inline Preset generate_preset(const PresetEntity& p, int measuring_lines = kDefaultMeasuringLines)
{
	switch (p.kind) {
	case PresetKind::CentralGrid: return central_grid(p.grid, measuring_lines);
	case PresetKind::CubicRoom: return cubic_room(p.room, measuring_lines);
	case PresetKind::RotatedSquare: return rotated_square(p.square, measuring_lines);
	}
	throw GeometryError(ErrorKind::InvalidParams, "unknown preset");
}

} // namespace sphpersp
