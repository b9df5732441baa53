#include <sphpersp/flattening.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace sphpersp;

TEST(Flattening, ReferenceDirections)
{
	DiscPoint f = flatten(ref::F);
	EXPECT_EQ(f.lambda(), 0);
	DiscPoint r = flatten(ref::R);
	EXPECT_NEAR(r.lambda(), kPi / 2, 1e-15);
	EXPECT_NEAR(r.theta(), 0, 1e-15);
	DiscPoint u = flatten(ref::U);
	EXPECT_NEAR(u.theta(), kPi / 2, 1e-15);
	DiscPoint l = flatten(ref::L);
	EXPECT_NEAR(l.theta(), kPi, 1e-15);
	DiscPoint d = flatten(ref::D);
	EXPECT_NEAR(d.theta(), -kPi / 2, 1e-15);
}

TEST(Flattening, DiagonalDirection)
{
	DiscPoint p = flatten(direction_of({1, 1, 0}));
	EXPECT_NEAR(p.lambda(), kPi / 4, 1e-15);
	EXPECT_NEAR(p.theta(), 0, 1e-15);
}

TEST(Flattening, BackThrows)
{
	try {
		flatten(ref::B);
		FAIL();
	} catch (const GeometryError& e) {
		EXPECT_EQ(e.kind(), ErrorKind::AtBlowup);
	}
}

TEST(Flattening, BlowupCircleUnflattensToBack)
{
	for (double theta : {-3.0, -1.0, 0.0, 0.5, 3.1})
		EXPECT_EQ(unflatten(DiscPoint::blowup(theta)), ref::B);
}

TEST(Flattening, UnflattenCenterIsFront)
{
	UnitDirection d = unflatten(DiscPoint::polar(0, 0));
	EXPECT_NEAR(d.y(), 1, 0);
}

TEST(Flattening, RoundTripOnRandomDirections)
{
	std::mt19937_64 rng(11);
	std::normal_distribution<double> g;
	for (int i = 0; i < 20000; ++i) {
		UnitDirection d = direction_of({g(rng), g(rng), g(rng)});
		if (angle_between(d.vec(), ref::B.vec()) < 1e-6)
			continue;
		UnitDirection back = unflatten(flatten(d));
		EXPECT_LE(norm(back.vec() - d.vec()), 1e-12);
	}
}

TEST(Flattening, NaturalCoordinatesIgnoreDistance)
{
	NaturalCoords a = to_natural({1, 2, 3});
	NaturalCoords b = to_natural({10, 20, 30});
	EXPECT_NEAR(a.lambda, b.lambda, 1e-15);
	EXPECT_NEAR(a.theta, b.theta, 1e-15);
	EXPECT_NEAR(b.rho / a.rho, 10, 1e-12);
	EXPECT_THROW(to_natural({0, 0, 0}), GeometryError);
}

TEST(Flattening, TheodoliteRoundTrip)
{
	for (double xi : {-2.5, -0.3, 0.0, 1.0, 3.0})
		for (double zeta : {-1.2, 0.0, 0.7}) {
			TheodoliteAngles a = to_theodolite(from_theodolite({xi, zeta}));
			EXPECT_NEAR(a.xi, xi, 1e-12);
			EXPECT_NEAR(a.zeta, zeta, 1e-12);
		}
	DiscPoint right45 = flatten(from_theodolite({kPi / 4, 0}));
	EXPECT_NEAR(right45.lambda(), kPi / 4, 1e-15);
}

TEST(Flattening, EquatorMapsToHalfRadius)
{
	for (int i = 0; i < 360; ++i) {
		double a = i * kPi / 180;
		DiscPoint p = flatten(UnitDirection::unchecked(std::cos(a), 0, std::sin(a)));
		EXPECT_NEAR(p.lambda(), kPi / 2, 1e-15);
	}
}

TEST(Flattening, MeasuringLineIsometry)
{
	std::mt19937_64 rng(3);
	std::uniform_real_distribution<double> th(-kPi, kPi);
	std::uniform_real_distribution<double> s(-kPi + 1e-6, kPi - 1e-6);
	for (int i = 0; i < 2000; ++i) {
		MeasuringLine m = measuring_line(th(rng));
		double s1 = s(rng);
		double s2 = s(rng);
		DiscPoint a = m.point_at(s1);
		DiscPoint b = m.point_at(s2);
		EXPECT_NEAR(disc_distance(a, b), std::abs(s1 - s2), 1e-12);
		double gap = std::abs(s1 - s2);
		EXPECT_NEAR(angle_between(unflatten(a).vec(), unflatten(b).vec()), std::min(gap, 2 * kPi - gap), 1e-12);
		EXPECT_NEAR(m.coordinate_of(a), s1, 1e-12);
	}
}

TEST(Flattening, WrapAngle)
{
	EXPECT_NEAR(wrap_angle(3 * kPi), kPi, 1e-15);
	EXPECT_NEAR(wrap_angle(-kPi), kPi, 1e-15);
	EXPECT_NEAR(wrap_angle(0.5 - 4 * kPi), 0.5, 1e-14);
	EXPECT_NEAR(azimuth_gap(kPi - 0.1, -kPi + 0.1), 0.2, 1e-14);
}

TEST(Flattening, DiscPointClampsAndNormalizes)
{
	DiscPoint p = DiscPoint::polar(4, 7);
	EXPECT_EQ(p.lambda(), kPi);
	EXPECT_TRUE(p.is_blowup());
	EXPECT_EQ(DiscPoint::polar(0, 2).theta(), 0);
	EXPECT_TRUE(DiscPoint::polar(1, 0).is_anterior());
	EXPECT_FALSE(DiscPoint::polar(2, 0).is_anterior());
	DiscPoint c = DiscPoint::from_cartesian({0, -1});
	EXPECT_NEAR(c.theta(), -kPi / 2, 1e-15);
}
