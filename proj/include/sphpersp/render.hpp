#pragma once

// Turns a scene into drawable disc paths. Construction mode draws what the ruler-and-compass
// procedures produce; exact mode samples the perspective map directly.

#include "analysis.hpp"
#include "constructions.hpp"
#include "error.hpp"
#include "flattening.hpp"
#include "presets.hpp"
#include "primitives.hpp"
#include "scene.hpp"
#include "sphere.hpp"
#include "vector.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace sphpersp
{

enum class RenderMode
{
	Exact,
	Construction,
	Both,
};

struct FrameOptions
{
	bool equator = false;
	bool blowup = true;
	bool labels = false;
	int grid_step_deg = 0; // measuring lines every this many degrees; 0 draws none
};

struct RenderOptions
{
	RenderMode mode = RenderMode::Both;
	int disc_radius_px = 500;
	int samples_per_curve = 256;
	int measuring_lines = kDefaultMeasuringLines;
	FrameOptions frame;

	void validate() const
	{
		if (disc_radius_px < 1)
			throw GeometryError(ErrorKind::InvalidParams, "disc radius must be a positive number of pixels");
		if (samples_per_curve < 16)
			throw GeometryError(ErrorKind::InvalidParams, "at least 16 samples per curve");
		if (measuring_lines < 3)
			throw GeometryError(ErrorKind::InvalidParams, "at least 3 measuring lines");
		if (frame.grid_step_deg < 0 || frame.grid_step_deg > 180)
			throw GeometryError(ErrorKind::InvalidParams, "grid step must lie in [0, 180] degrees");
	}

	bool construction() const { return mode != RenderMode::Exact; }
	bool exact() const { return mode != RenderMode::Construction; }
};

enum class DrawLayer
{
	Construction,
	Exact,
};

enum class DrawRole
{
	Image,      // the entity itself
	Completion, // the rest of its great circle
	Auxiliary,  // helper lines of a construction
};

struct Drawable
{
	std::size_t entity = 0;
	DrawLayer layer = DrawLayer::Construction;
	DrawRole role = DrawRole::Image;
	StyleToken style = StyleToken::Black;
	std::vector<PathPiece> pieces;
	std::vector<std::vector<Vec2>> polylines;
};

struct Marker
{
	std::size_t entity = 0;
	std::string label;
	DiscPoint point;
	bool undefined_azimuth = false; // B itself: the whole blowup circle
};

struct Diagnostic
{
	std::size_t entity = 0;
	int line = 0;
	std::string keyword;
	ErrorKind kind = ErrorKind::InvalidParams;
	std::string message;

	std::string to_string() const { return "line " + std::to_string(line) + ": " + keyword + ": " + message; }
};

struct RenderPlan
{
	std::size_t entity_count = 0;
	std::vector<Drawable> drawables;
	std::vector<Marker> markers;
	std::vector<Diagnostic> diagnostics;

	// Entities that produced no drawable and no marker.
	std::size_t failed_entities() const
	{
		std::size_t failed = 0;
		for (std::size_t e = 0; e < entity_count; ++e) {
			bool drawn = false;
			for (const auto& d : drawables)
				drawn = drawn || d.entity == e;
			for (const auto& m : markers)
				drawn = drawn || m.entity == e;
			failed += drawn ? 0 : 1;
		}
		return failed;
	}
};

namespace detail
{

inline std::vector<std::vector<Vec2>> polylines_of(const SampledCurve& c)
{
	std::vector<std::vector<Vec2>> out;
	for (const auto& branch : c.branches) {
		std::vector<Vec2> poly;
		poly.reserve(branch.size());
		for (const auto& s : branch)
			poly.push_back(s.point.cartesian());
		if (poly.size() >= 2)
			out.push_back(std::move(poly));
	}
	return out;
}

inline Marker direction_marker(std::size_t entity, const std::string& label, const UnitDirection& d)
{
	if (angle_between(d.vec(), ref::B.vec()) <= kBlowupEpsilon)
		return {entity, label.empty() ? "B" : label, DiscPoint::blowup(0), true};
	return {entity, label, flatten(d), false};
}

class Planner
{
public:
	Planner(const RenderOptions& opts, RenderPlan& plan) : opts_(opts), plan_(plan) {}

	void entity(std::size_t index, const Entity& e)
	{
		index_ = index;
		style_ = e.style.value_or(StyleToken::Black);
		std::vector<Drawable> drawables;
		std::vector<Marker> markers;
		drawables_ = &drawables;
		markers_ = &markers;
		try {
			std::visit([this](const auto& shape) { add(shape); }, e.shape);
		} catch (const GeometryError& err) {
			plan_.diagnostics.push_back({index, e.line, keyword_of(e.shape), err.kind(), err.what()});
			return;
		}
		plan_.drawables.insert(plan_.drawables.end(), drawables.begin(), drawables.end());
		plan_.markers.insert(plan_.markers.end(), markers.begin(), markers.end());
	}

private:
	void push(DrawLayer layer, DrawRole role, std::vector<PathPiece> pieces, std::vector<std::vector<Vec2>> polylines = {})
	{
		if (pieces.empty() && polylines.empty())
			return;
		StyleToken style = role == DrawRole::Auxiliary ? StyleToken::Gray : style_;
		drawables_->push_back({index_, layer, role, style, std::move(pieces), std::move(polylines)});
	}

	void push_exact(DrawRole role, const SampledCurve& c) { push(DrawLayer::Exact, role, {}, polylines_of(c)); }

	void push_construction(const LineImagePath& image, DrawRole role = DrawRole::Image)
	{
		push(DrawLayer::Construction, role, image.image());
		if (role != DrawRole::Auxiliary)
			push(DrawLayer::Construction, DrawRole::Completion, image.completion);
	}

	std::size_t samples() const { return std::size_t(opts_.samples_per_curve); }

	void add(const PointEntity& p)
	{
		UnitDirection d = direction_of(p.p);
		if (opts_.construction() && std::abs(p.p.y) <= kDegeneracyTolerance) {
			markers_->push_back({index_, "", equator_point(p.p.x, p.p.z), false});
			return;
		}
		markers_->push_back(direction_marker(index_, "", d));
	}

	// A line or segment through O images to its vanishing points only.
	void add_degenerate(const SphereLineImage& image)
	{
		markers_->push_back(direction_marker(index_, "", image.v_plus));
		markers_->push_back(direction_marker(index_, "", image.v_minus));
	}

	void add_line(const SpaceLine& l, const LineImagePath* construction, DrawRole role = DrawRole::Image)
	{
		SphereLineImage image = vanishing_points_of_line(l);
		if (image.degenerate) {
			add_degenerate(image);
			return;
		}
		if (opts_.construction())
			push_construction(construction ? *construction : line_image(l, opts_.measuring_lines), role);
		if (opts_.exact()) {
			push_exact(role, sample_meridian(*image.circle, image.v_minus, image.v_plus, samples()));
			if (role != DrawRole::Auxiliary)
				push_exact(DrawRole::Completion, sample_meridian(*image.circle, image.v_plus, image.v_minus, samples()));
		}
	}

	void add_segment(const Vec3& a, const Vec3& b, const LineImagePath* construction)
	{
		SpaceLine l = SpaceLine::through(a, b - a);
		SphereLineImage image = vanishing_points_of_line(l);
		if (image.degenerate) {
			if (dot(a, b) <= 0)
				throw GeometryError(ErrorKind::ThroughObserver, "segment passes through the observer");
			markers_->push_back(direction_marker(index_, "", direction_of(a)));
			return;
		}
		if (opts_.construction())
			push(DrawLayer::Construction, DrawRole::Image,
			     construction ? construction->image() : segment_image(a, b, opts_.measuring_lines).image());
		if (opts_.exact())
			push_exact(DrawRole::Image, sample_meridian(*image.circle, direction_of(a), direction_of(b), samples()));
	}

	void add(const SegmentEntity& s) { add_segment(s.a, s.b, nullptr); }
	void add(const LineEntity& l) { add_line(l.line, nullptr); }

	void add(const PlaneEntity& p)
	{
		PlaneImage image = vanishing_line_of_plane(p.plane);
		if (opts_.construction())
			push(DrawLayer::Construction, DrawRole::Image, great_circle_image(image.circle, opts_.measuring_lines).image());
		if (opts_.exact()) {
			UnitDirection start = image.circle.basis().first;
			push_exact(DrawRole::Image, sample_meridian(image.circle, start, start, samples()));
		}
	}

	void add(const ParallelEntity& p)
	{
		double zeta = to_radians(p.zeta_deg);
		if (opts_.construction())
			push(DrawLayer::Construction, DrawRole::Image, parallel_image(zeta, opts_.measuring_lines).image());
		if (opts_.exact())
			push_exact(DrawRole::Image, sample_parallel(zeta, -kPi, kPi, samples()));
	}

	void add(const PresetEntity& p)
	{
		Preset preset = generate_preset(p, opts_.measuring_lines);
		for (const auto& stroke : preset.strokes) {
			if (stroke.segment)
				add_segment((*stroke.segment)[0], (*stroke.segment)[1], &stroke.image);
			else
				add_line(stroke.line, &stroke.image, stroke.auxiliary ? DrawRole::Auxiliary : DrawRole::Image);
		}
		for (const auto& m : preset.markers)
			markers_->push_back({index_, m.label, m.point, m.point.is_blowup() && m.label == "B"});
	}

	const RenderOptions& opts_;
	RenderPlan& plan_;
	std::size_t index_ = 0;
	StyleToken style_ = StyleToken::Black;
	std::vector<Drawable>* drawables_ = nullptr;
	std::vector<Marker>* markers_ = nullptr;
};

} // namespace detail

inline RenderPlan plan(const Scene& scene, const RenderOptions& opts)
{
	opts.validate();
	RenderPlan out;
	out.entity_count = scene.entities.size();
	detail::Planner planner(opts, out);
	for (std::size_t i = 0; i < scene.entities.size(); ++i)
		planner.entity(i, scene.entities[i]);
	return out;
}

} // namespace sphpersp
