#pragma once

// Standalone SVG output of a render plan. Disc coordinates (radians, w up) are scaled by
// disc_radius_px / pi with the vertical axis flipped. All numbers use six decimals so equal
// plans give byte-identical documents.

#include "flattening.hpp"
#include "primitives.hpp"
#include "render.hpp"
#include "scene.hpp"
#include "vector.hpp"

#include <cmath>
#include <cstdio>
#include <string>
#include <variant>
#include <vector>

namespace sphpersp
{

namespace detail
{

inline std::string num(double v)
{
	char buf[64];
	std::snprintf(buf, sizeof buf, "%.6f", v);
	std::string s = buf;
	if (s == "-0.000000")
		s = "0.000000";
	return s;
}

inline std::string escape_xml(const std::string& s)
{
	std::string out;
	for (char c : s) {
		switch (c) {
		case '&': out += "&amp;"; break;
		case '<': out += "&lt;"; break;
		case '>': out += "&gt;"; break;
		case '"': out += "&quot;"; break;
		case '-':
			// Keeps "--" out of comments.
			out += (!out.empty() && out.back() == '-') ? " -" : "-";
			break;
		default: out += c;
		}
	}
	return out;
}

inline const char* color_of(StyleToken s)
{
	switch (s) {
	case StyleToken::Gray: return "#808080";
	case StyleToken::Accent: return "#c0392b";
	case StyleToken::Black:
	case StyleToken::Dashed: return "#000000";
	}
	return "#000000";
}

class SvgCanvas
{
public:
	explicit SvgCanvas(double radius_px) : r_(radius_px), scale_(radius_px / kPi), center_(radius_px * 1.125) {}

	double size() const { return 2 * center_; }
	double center() const { return center_; }
	double radius() const { return r_; }
	double px(double disc_length) const { return disc_length * scale_; }

	std::string xy(const Vec2& q) const { return num(center_ + q.u * scale_) + " " + num(center_ - q.w * scale_); }

	std::string path_of(const PathPiece& piece) const
	{
		std::string d = "M " + xy(piece_start(piece));
		if (const auto* arc = std::get_if<Arc>(&piece)) {
			double sweep = arc->sweep();
			// A single elliptical-arc command cannot close a full turn.
			int parts = std::abs(sweep) > 1.5 * kPi ? 2 : 1;
			for (int i = 1; i <= parts; ++i) {
				double t = double(i) / parts;
				bool large = std::abs(sweep) / parts > kPi;
				d += " A " + num(px(arc->radius)) + " " + num(px(arc->radius)) + " 0 " + (large ? "1" : "0") + " " +
				     (sweep > 0 ? "0" : "1") + " " + xy(arc->point_at(t));
			}
		} else {
			d += " L " + xy(piece_end(piece));
		}
		return d;
	}

	std::string path_of(const std::vector<Vec2>& poly) const
	{
		std::string d;
		for (std::size_t i = 0; i < poly.size(); ++i)
			d += (i == 0 ? "M " : " L ") + xy(poly[i]);
		return d;
	}

private:
	double r_;
	double scale_;
	double center_;
};

inline std::string stroke_attrs(const SvgCanvas& c, const char* color, double width_px, bool dashed)
{
	std::string s = "fill=\"none\" stroke=\"" + std::string(color) + "\" stroke-width=\"" + num(width_px) + "\"";
	if (dashed)
		s += " stroke-dasharray=\"" + num(c.radius() / 50) + " " + num(c.radius() / 100) + "\"";
	return s;
}

inline const char* role_name(DrawRole r)
{
	switch (r) {
	case DrawRole::Image: return "image";
	case DrawRole::Completion: return "completion";
	case DrawRole::Auxiliary: return "auxiliary";
	}
	return "image";
}

} // namespace detail

inline std::string emit_svg(const RenderPlan& plan, const RenderOptions& opts)
{
	opts.validate();
	detail::SvgCanvas c(opts.disc_radius_px);
	using detail::num;
	const double unit = c.radius() / 250;
	std::string out;
	out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
	out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(c.size()) + "\" height=\"" + num(c.size()) +
	       "\" viewBox=\"0 0 " + num(c.size()) + " " + num(c.size()) + "\">\n";
	out += "<rect x=\"0\" y=\"0\" width=\"" + num(c.size()) + "\" height=\"" + num(c.size()) + "\" fill=\"#ffffff\"/>\n";

	for (const auto& d : plan.diagnostics)
		out += "<!-- " + detail::escape_xml(d.to_string()) + " -->\n";

	out += "<g id=\"frame\" " + detail::stroke_attrs(c, "#b0b0b0", unit / 2, false) + ">\n";
	if (opts.frame.grid_step_deg > 0) {
		for (int a = 0; a < 180; a += opts.frame.grid_step_deg) {
			double t = a / 180.0 * kPi;
			Vec2 e{kPi * std::cos(t), kPi * std::sin(t)};
			out += "<path d=\"" + c.path_of(PathPiece{StraightSegment{-1.0 * e, e}}) + "\"/>\n";
		}
	}
	if (opts.frame.equator)
		out += "<circle cx=\"" + num(c.center()) + "\" cy=\"" + num(c.center()) + "\" r=\"" + num(c.px(kPi / 2)) +
		       "\" stroke=\"#606060\"/>\n";
	if (opts.frame.blowup)
		out += "<circle cx=\"" + num(c.center()) + "\" cy=\"" + num(c.center()) + "\" r=\"" + num(c.radius()) +
		       "\" stroke=\"#000000\" stroke-width=\"" + num(unit) + "\"/>\n";
	out += "</g>\n";

	auto layer = [&](DrawLayer which, const char* id) {
		out += "<g id=\"" + std::string(id) + "\">\n";
		for (const auto& d : plan.drawables) {
			if (d.layer != which)
				continue;
			bool overlay = which == DrawLayer::Exact && opts.mode == RenderMode::Both;
			const char* color = overlay ? "#1f77b4" : detail::color_of(d.style);
			double width = overlay ? unit / 2 : (d.role == DrawRole::Image ? unit : unit / 2);
			bool dashed = d.role != DrawRole::Image || d.style == StyleToken::Dashed;
			std::string attrs = detail::stroke_attrs(c, color, width, dashed);
			std::string tag = " data-entity=\"" + std::to_string(d.entity) + "\" data-role=\"" +
			                  detail::role_name(d.role) + "\"";
			for (const auto& piece : d.pieces)
				out += "<path" + tag + " d=\"" + c.path_of(piece) + "\" " + attrs + "/>\n";
			for (const auto& poly : d.polylines)
				out += "<path" + tag + " d=\"" + c.path_of(poly) + "\" " + attrs + "/>\n";
		}
		out += "</g>\n";
	};
	layer(DrawLayer::Construction, "construction");
	layer(DrawLayer::Exact, "exact");

	const std::string font = num(c.radius() / 25);
	auto text = [&](const Vec2& at, const std::string& label, const char* color) {
		out += "<text x=\"" + num(at.u) + "\" y=\"" + num(at.w) + "\" font-family=\"sans-serif\" font-size=\"" +
		       font + "\" fill=\"" + color + "\">" + detail::escape_xml(label) + "</text>\n";
	};
	auto screen = [&](const Vec2& q) { return Vec2{c.center() + c.px(q.u), c.center() - c.px(q.w)}; };

	out += "<g id=\"markers\">\n";
	for (const auto& m : plan.markers) {
		if (m.undefined_azimuth) {
			out += "<circle cx=\"" + num(c.center()) + "\" cy=\"" + num(c.center()) + "\" r=\"" + num(c.radius()) +
			       "\" " + detail::stroke_attrs(c, "#c0392b", unit, true) + "/>\n";
			text(Vec2{c.center() + c.radius() * 0.72, c.size() - c.radius() / 50}, m.label + " (any azimuth)", "#c0392b");
			continue;
		}
		Vec2 s = screen(m.point.cartesian());
		out += "<circle cx=\"" + num(s.u) + "\" cy=\"" + num(s.w) + "\" r=\"" + num(unit * 2) + "\" fill=\"#c0392b\"/>\n";
		if (!m.label.empty())
			text(Vec2{s.u + unit * 3, s.w - unit * 3}, m.label, "#c0392b");
	}
	out += "</g>\n";

	if (opts.frame.labels) {
		out += "<g id=\"labels\">\n";
		const std::pair<const char*, Vec2> refs[] = {
			{"F", {0, 0}}, {"R", {kPi / 2, 0}}, {"U", {0, kPi / 2}}, {"L", {-kPi / 2, 0}}, {"D", {0, -kPi / 2}}};
		for (const auto& [label, q] : refs) {
			Vec2 s = screen(q);
			text(Vec2{s.u + unit * 2, s.w - unit * 2}, label, "#404040");
		}
		text(Vec2{c.center() + c.radius() * 0.72, c.radius() / 10}, "B", "#404040");
		out += "</g>\n";
	}
	out += "</svg>\n";
	return out;
}

} // namespace sphpersp
