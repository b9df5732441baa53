#include <sphpersp/analysis.hpp>

#include <gtest/gtest.h>

#include <cmath>

using namespace sphpersp;

TEST(SampleMeridian, FrontCircleIsVerticalDiameter)
{
	GreatCircle ud{ref::L};
	auto c = sample_meridian(ud, ref::U, ref::D, 3);
	ASSERT_EQ(c.size(), 3u);
	for (const auto& s : c.samples())
		EXPECT_NEAR(s.point.cartesian().u, 0, 1e-15);
	// Counterclockwise about R the same circle runs through B instead, and splits there.
	auto through_b = sample_meridian(GreatCircle{ref::R}, ref::U, ref::D, 9);
	EXPECT_EQ(through_b.branches.size(), 2u);
	EXPECT_TRUE(through_b.branches[0].back().point.is_blowup());
	EXPECT_NEAR(through_b.branches[0].back().point.theta(), kPi / 2, 1e-12);
	EXPECT_NEAR(through_b.branches[1].front().point.theta(), -kPi / 2, 1e-12);
}

TEST(SampleMeridian, EquatorFrontHalf)
{
	auto c = sample_meridian(GreatCircle{ref::F}, ref::L, ref::R, 5);
	ASSERT_EQ(c.size(), 5u);
	for (const auto& s : c.samples())
		EXPECT_NEAR(s.point.lambda(), kPi / 2, 1e-15);
	EXPECT_NEAR(c.samples()[2].point.theta(), kPi / 2, 1e-12);
}

TEST(SampleMeridian, UniformInArcAngleAndSelfConsistent)
{
	GreatCircle c{UnitDirection::normalized({1, -1, 0})};
	auto curve = sample_meridian(c, ref::U, ref::U, 256);
	EXPECT_EQ(curve.source, CurveSource::Meridian);
	for (const auto& s : curve.samples()) {
		if (s.point.is_blowup())
			continue;
		UnitDirection d = unflatten(s.point);
		EXPECT_TRUE(c.contains(d, 1e-12));
		EXPECT_LE(disc_distance(flatten(d), s.point), 1e-12);
	}
}

TEST(SampleMeridian, Errors)
{
	try {
		sample_meridian(GreatCircle{ref::U}, ref::U, ref::R, 8);
		FAIL();
	} catch (const GeometryError& e) {
		EXPECT_EQ(e.kind(), ErrorKind::OffCircle);
	}
	EXPECT_THROW(sample_meridian(GreatCircle{ref::U}, ref::R, ref::L, 1), GeometryError);
}

TEST(SampleParallel, ConstantElevation)
{
	auto c = sample_parallel(0.5, -kPi, kPi, 64);
	for (const auto& s : c.samples())
		EXPECT_NEAR(to_theodolite(unflatten(s.point)).zeta, 0.5, 1e-12);
	EXPECT_THROW(sample_parallel(kPi / 2, 0, 1), GeometryError);
}

TEST(AngularError, SelfIsZero)
{
	auto exact = sample_meridian(GreatCircle{ref::U}, ref::R, ref::L, 65);
	std::vector<PathPiece> poly;
	auto pts = exact.samples();
	for (std::size_t i = 0; i + 1 < pts.size(); ++i)
		poly.push_back(StraightSegment{pts[i].point.cartesian(), pts[i + 1].point.cartesian()});
	ErrorReport r = angular_error(poly, exact);
	EXPECT_LE(r.max_error, 1e-12);
	EXPECT_EQ(r.samples, 65u);
	EXPECT_LE(r.mean_error, r.max_error);
}

TEST(AngularError, SymmetricUnderReversal)
{
	PathPiece arc = Arc{{0, 0}, kPi / 2 + 0.01, 0, kPi, true};
	auto exact = sample_meridian(GreatCircle{ref::F}, ref::L, ref::R, 128);
	double forward = angular_error({arc}, exact).max_error;
	double backward = angular_error({reversed(arc)}, exact).max_error;
	EXPECT_NEAR(forward, backward, 1e-15);
	EXPECT_NEAR(forward, 0.01, 1e-12);
}

TEST(AngularError, Errors)
{
	auto exact = sample_meridian(GreatCircle{ref::U}, ref::R, ref::L, 16);
	try {
		angular_error({}, exact);
		FAIL();
	} catch (const GeometryError& e) {
		EXPECT_EQ(e.kind(), ErrorKind::EmptyInput);
	}
	try {
		angular_error({StraightSegment{{0, 0}, {0.1, 0}}}, exact);
		FAIL();
	} catch (const GeometryError& e) {
		EXPECT_EQ(e.kind(), ErrorKind::SpanMismatch);
	}
}

TEST(AngularError, ConvergesWithOracleDensity)
{
	// Anterior arc of the tilted vertical circle; doubling the oracle density barely moves the max.
	GreatCircle c{UnitDirection::normalized({1, -1, 0})};
	auto exact1 = sample_meridian(c, ref::D, ref::U, 1024);
	auto exact2 = sample_meridian(c, ref::D, ref::U, 2048);
	std::vector<PathPiece> chord{arc_through(DiscPoint::polar(kPi / 2, -kPi / 2).cartesian(),
	                                         DiscPoint::polar(kPi / 4, 0).cartesian(),
	                                         DiscPoint::polar(kPi / 2, kPi / 2).cartesian())};
	double a = angular_error(chord, exact1).max_error;
	double b = angular_error(chord, exact2).max_error;
	EXPECT_LT(std::abs(a - b) / a, 0.01);
}

TEST(ErrorReport, RowFormat)
{
	ErrorReport r{to_radians(1.25), to_radians(0.5), 0.75, 1024};
	EXPECT_EQ(r.to_row(), "max_deg=1.250000 mean_deg=0.500000 at_param=0.750000 samples=1024");
}

TEST(Reflection, LimitMap)
{
	Vec2 c = reflection_limit_map(0, 1.3);
	EXPECT_EQ(c.u, 0);
	EXPECT_EQ(c.w, 0);
	Vec2 rim = reflection_limit_map(kPi, 0);
	EXPECT_NEAR(rim.u, 1, 1e-15);
	EXPECT_NEAR(reflection_limit_map(kPi / 2, 0).u, 0.70711, 1e-5);
	EXPECT_THROW(reflection_limit_map(4, 0), GeometryError);
	double prev = -1;
	for (int i = 0; i <= 1000; ++i) {
		double r = norm(reflection_limit_map(kPi * i / 1000, 0.4));
		EXPECT_GT(r, prev);
		EXPECT_LE(r, 1 + 1e-15);
		prev = r;
	}
}

TEST(Reflection, FieldOfView)
{
	EXPECT_EQ(reflection_fov(1, 1), 180.0);
	EXPECT_NEAR(reflection_fov(1, 2), 300.0, 1e-9);
	EXPECT_GT(reflection_fov(1, 1e9), 360.0 - 1e-6);
	try {
		reflection_fov(2, 1);
		FAIL();
	} catch (const GeometryError& e) {
		EXPECT_EQ(e.kind(), ErrorKind::ObserverInsideSphere);
	}
	EXPECT_THROW(reflection_fov(0, 1), GeometryError);
}

TEST(Reflection, RadialProfiles)
{
	RadialProfileTable t = compare_radial_profiles(1024);
	ASSERT_EQ(t.rows.size(), 1024u);
	EXPECT_TRUE(t.ordered);
	EXPECT_TRUE(t.monotone);
	EXPECT_EQ(t.rows.front().lambda, 0);
	EXPECT_EQ(t.rows.front().reflection, 0);
	EXPECT_EQ(t.rows.back().lambda, kPi);
	EXPECT_EQ(t.rows.back().equidistant, 1);
	EXPECT_EQ(t.rows.back().reflection, 1);
	// The reflection profile sits above the rim-normalized equidistant one inside the disc:
	// it is concave, so outer angles are squashed relative to inner ones.
	for (std::size_t i = 1; i + 1 < t.rows.size(); ++i)
		EXPECT_GT(t.rows[i].reflection, t.rows[i].equidistant);
	EXPECT_THROW(compare_radial_profiles(1), GeometryError);
	EXPECT_EQ(compare_radial_profiles(2).to_text(), "lambda equidistant reflection\n0.000000 0.000000 0.000000\n"
	                                                 "3.141593 1.000000 1.000000\n");
}
