#pragma once

// Command-line front end: render a scene to SVG, report construction errors, or print the
// radial profile table.

#include "analysis.hpp"
#include "constructions.hpp"
#include "error.hpp"
#include "render.hpp"
#include "scene.hpp"
#include "svg.hpp"

#include <CLI11.hpp>

#include <cstddef>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace sphpersp
{

enum ExitCode
{
	kExitOk = 0,
	kExitInput = 1,
	kExitAllFailed = 2,
};

struct ErrorRow
{
	std::size_t entity = 0;
	int line = 0;
	std::string label;
	ErrorReport report;
};

struct SceneErrorReport
{
	std::vector<ErrorRow> rows;
	std::vector<Diagnostic> diagnostics;
	std::size_t failed_entities = 0;
};

namespace detail
{

class ErrorCollector
{
public:
	ErrorCollector(int measuring_lines, std::size_t samples, SceneErrorReport& out)
		: k_(measuring_lines), n_(samples), out_(out)
	{
	}

	void entity(std::size_t index, const Entity& e)
	{
		index_ = index;
		line_ = e.line;
		prefix_ = keyword_of(e.shape);
		std::size_t before = out_.rows.size();
		try {
			std::visit([this](const auto& shape) { add(shape); }, e.shape);
		} catch (const GeometryError& err) {
			out_.rows.resize(before);
			out_.diagnostics.push_back({index, e.line, keyword_of(e.shape), err.kind(), err.what()});
			++out_.failed_entities;
		}
	}

private:
	void row(const std::string& label, const std::vector<PathPiece>& constructed, const SampledCurve& exact)
	{
		std::string full = prefix_;
		if (!label.empty())
			full += " " + label;
		out_.rows.push_back({index_, line_, full, angular_error(constructed, exact)});
	}

	void fat_row(const std::string& label, const LineImagePath& image, KnotMap map)
	{
		if (image.fat && image.anterior_arc)
			row(label.empty() ? "fat_line" : label + " fat_line", image.fat->pieces, sample_mapped_piece(*image.anterior_arc, map, n_));
	}

	void line(const std::string& label, const SpaceLine& l, const LineImagePath& image)
	{
		SphereLineImage s = vanishing_points_of_line(l);
		if (s.degenerate)
			throw GeometryError(ErrorKind::ThroughObserver, "line through the observer has no meridian");
		row(label.empty() ? "image" : label + " image", image.image(), sample_meridian(*s.circle, s.v_minus, s.v_plus, n_));
		fat_row(label, image, KnotMap::Antipode);
	}

	void segment(const std::string& label, const Vec3& a, const Vec3& b, const LineImagePath& image)
	{
		SphereLineImage s = vanishing_points_of_line(SpaceLine::through(a, b - a));
		if (s.degenerate)
			throw GeometryError(ErrorKind::ThroughObserver, "segment on a line through the observer");
		row(label.empty() ? "image" : label + " image", image.image(), sample_meridian(*s.circle, direction_of(a), direction_of(b), n_));
	}

	void add(const PointEntity&) {}
	void add(const SegmentEntity& s) { segment("", s.a, s.b, segment_image(s.a, s.b, k_)); }
	void add(const LineEntity& l) { line("", l.line, line_image(l.line, k_)); }

	void add(const PlaneEntity& p)
	{
		GreatCircle c = vanishing_line_of_plane(p.plane).circle;
		LineImagePath image = great_circle_image(c, k_);
		UnitDirection start = c.basis().first;
		row("image", image.image(), sample_meridian(c, start, start, n_));
		fat_row("", image, KnotMap::Antipode);
	}

	void add(const ParallelEntity& p)
	{
		double zeta = to_radians(p.zeta_deg);
		LineImagePath image = parallel_image(zeta, k_);
		row("image", image.image(), sample_parallel(zeta, -kPi, kPi, n_));
		fat_row("", image, KnotMap::ObserverMirror);
	}

	void add(const PresetEntity& p)
	{
		Preset preset = generate_preset(p, k_);
		for (std::size_t i = 0; i < preset.strokes.size(); ++i) {
			const auto& s = preset.strokes[i];
			std::string label = "stroke " + std::to_string(i);
			if (s.segment)
				segment(label, (*s.segment)[0], (*s.segment)[1], s.image);
			else
				line(label, s.line, s.image);
		}
	}

	int k_;
	std::size_t n_;
	SceneErrorReport& out_;
	std::size_t index_ = 0;
	int line_ = 0;
	std::string prefix_;
};

inline std::optional<std::string> read_file(const std::string& path)
{
	std::ifstream in(path, std::ios::binary);
	if (!in)
		return std::nullopt;
	std::ostringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

} // namespace detail

// Angular error of every constructed curve in the scene against its exact image.
inline SceneErrorReport scene_error_report(const Scene& scene, int measuring_lines = kDefaultMeasuringLines,
                                           std::size_t samples = kDefaultOracleSamples)
{
	if (measuring_lines < 3)
		throw GeometryError(ErrorKind::TooFewKnots, "at least three measuring lines");
	SceneErrorReport out;
	detail::ErrorCollector collector(measuring_lines, samples, out);
	for (std::size_t i = 0; i < scene.entities.size(); ++i)
		collector.entity(i, scene.entities[i]);
	return out;
}

inline int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
	CLI::App app{"Total spherical perspective: construct and render scenes on the perspective disc"};
	app.require_subcommand(1);

	std::string scene_path;
	std::string out_path;
	std::string mode = "both";
	RenderOptions ropts;
	bool frame = false;

	auto* render = app.add_subcommand("render", "Render a scene to SVG");
	render->add_option("--scene", scene_path, "Scene file")->required();
	render->add_option("--out", out_path, "Output SVG path")->required();
	render->add_option("--mode", mode, "exact, construction or both")
		->check(CLI::IsMember({"exact", "construction", "both"}));
	render->add_option("--radius-px", ropts.disc_radius_px, "Disc radius in pixels")->check(CLI::PositiveNumber);
	render->add_option("--samples", ropts.samples_per_curve, "Samples per exact curve")->check(CLI::Range(16, 1 << 20));
	render->add_option("--knots", ropts.measuring_lines, "Measuring lines per fat line")->check(CLI::Range(3, 4096));
	render->add_flag("--frame", frame, "Draw the equator and reference labels");
	render->add_option("--grid-step-deg", ropts.frame.grid_step_deg, "Measuring lines every this many degrees")
		->check(CLI::Range(0, 180));

	std::string error_scene;
	int error_knots = kDefaultMeasuringLines;
	int error_samples = int(kDefaultOracleSamples);
	auto* error = app.add_subcommand("error", "Report construction error against the exact images");
	error->add_option("--scene", error_scene, "Scene file")->required();
	error->add_option("--knots", error_knots, "Measuring lines per fat line")->check(CLI::Range(3, 4096));
	error->add_option("--samples", error_samples, "Oracle samples per curve")->check(CLI::Range(2, 1 << 22));

	int profiles = 0;
	auto* table = app.add_subcommand("table", "Print equidistant and reflection radial profiles");
	table->add_option("--profiles", profiles, "Number of rows")->required()->check(CLI::Range(2, 1 << 20));

	try {
		app.parse(argc, argv);
	} catch (const CLI::CallForHelp&) {
		out << app.help();
		return kExitOk;
	} catch (const CLI::ParseError& e) {
		err << e.what() << "\n";
		return kExitInput;
	}

	auto load = [&](const std::string& path) -> std::optional<Scene> {
		auto text = detail::read_file(path);
		if (!text) {
			err << "cannot read scene file: " << path << "\n";
			return std::nullopt;
		}
		try {
			return parse_scene(*text);
		} catch (const ParseError& e) {
			err << path << ": " << e.what() << "\n";
			return std::nullopt;
		}
	};

	if (render->parsed()) {
		auto scene = load(scene_path);
		if (!scene)
			return kExitInput;
		ropts.mode = mode == "exact" ? RenderMode::Exact : mode == "construction" ? RenderMode::Construction : RenderMode::Both;
		ropts.frame.equator = frame;
		ropts.frame.labels = frame;
		RenderPlan p = plan(*scene, ropts);
		for (const auto& d : p.diagnostics)
			err << "warning: " << d.to_string() << "\n";
		std::ofstream file(out_path, std::ios::binary);
		if (!file) {
			err << "cannot write " << out_path << "\n";
			return kExitInput;
		}
		file << emit_svg(p, ropts);
		if (p.entity_count > 0 && p.failed_entities() == p.entity_count)
			return kExitAllFailed;
		return kExitOk;
	}

	if (error->parsed()) {
		auto scene = load(error_scene);
		if (!scene)
			return kExitInput;
		SceneErrorReport report = scene_error_report(*scene, error_knots, std::size_t(error_samples));
		for (const auto& d : report.diagnostics)
			err << "warning: " << d.to_string() << "\n";
		for (const auto& r : report.rows)
			out << "# line " << r.line << ": " << r.label << "\n" << r.report.to_row() << "\n";
		if (!scene->entities.empty() && report.failed_entities == scene->entities.size())
			return kExitAllFailed;
		return kExitOk;
	}

	out << compare_radial_profiles(std::size_t(profiles)).to_text();
	return kExitOk;
}

} // namespace sphpersp
