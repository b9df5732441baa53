#include <sphpersp/analysis.hpp>
#include <sphpersp/presets.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <set>

using namespace sphpersp;

TEST(CentralGrid, RecedingLinesAreRadiiThroughCenter)
{
	Preset g = central_grid({4, 1, 1.5});
	int receding = 0;
	for (const auto& s : g.strokes) {
		if (s.auxiliary || std::abs(s.line.dir.y()) < 0.5)
			continue;
		++receding;
		EXPECT_LE(path_distance(s.image.image(), {0, 0}), 1e-9);
		for (const auto& p : s.image.image())
			EXPECT_NEAR(cross(piece_start(p), piece_end(p)), 0, 1e-9);
	}
	EXPECT_EQ(receding, 7);
}

TEST(CentralGrid, SingleLineUnderObserver)
{
	Preset g = central_grid({1, 1, 1});
	const auto& s = g.strokes.front();
	EXPECT_LE(path_distance(s.image.image(), DiscPoint::polar(kPi / 2, -kPi / 2).cartesian()), 1e-12);
	EXPECT_LE(path_distance(s.image.image(), {0, 0}), 1e-12);
	EXPECT_LE(path_distance(s.image.image(), DiscPoint::polar(kPi - 1e-3, -kPi / 2).cartesian()), 1e-12);
}

TEST(CentralGrid, FrontalLinesMeetTheirRadii)
{
	Preset g = central_grid({3, 1, 1});
	for (const auto& s : g.strokes) {
		if (s.auxiliary || std::abs(s.line.dir.x()) < 0.5 || s.line.point.y <= 0)
			continue;
		// The frontal line y = j meets the receding line x = j on the diagonal.
		Vec3 corner{s.line.point.y, s.line.point.y, s.line.point.z};
		EXPECT_LE(path_distance(s.image.anterior, flatten(direction_of(corner)).cartesian()), to_radians(1.5));
		Vec3 ahead{0, s.line.point.y, s.line.point.z};
		EXPECT_LE(path_distance(s.image.anterior, flatten(direction_of(ahead)).cartesian()), to_radians(1.5));
	}
}

TEST(CentralGrid, FourVanishingPoints)
{
	Preset g = central_grid({2, 1, 1});
	std::set<std::string> labels;
	for (const auto& m : g.markers)
		labels.insert(m.label);
	EXPECT_EQ(labels, (std::set<std::string>{"B", "F", "L", "R"}));
	EXPECT_THROW(central_grid({0, 1, 1}), GeometryError);
	EXPECT_THROW(central_grid({1, 1, -1}), GeometryError);
}

TEST(CubicRoom, EdgeCountAndSixPoints)
{
	for (int div : {1, 2, 4}) {
		Preset room = cubic_room({2, div});
		EXPECT_EQ(room.strokes.size(), std::size_t(12 * div));
		EXPECT_EQ(room.markers.size(), 6u);
	}
	EXPECT_THROW(cubic_room({0, 1}), GeometryError);
	EXPECT_THROW(cubic_room({1, 0}), GeometryError);
}

TEST(CubicRoom, ImagesFollowExactSegments)
{
	Preset room = cubic_room({2, 4});
	double worst = 0;
	for (const auto& s : room.strokes) {
		ASSERT_TRUE(s.segment);
		auto [a, b] = *s.segment;
		auto vp = vanishing_points_of_line(s.line);
		auto exact = sample_meridian(*vp.circle, direction_of(a), direction_of(b), 256);
		worst = std::max(worst, angular_error(s.image.image(), exact).max_degrees());
	}
	EXPECT_LE(worst, 1.5);
}

TEST(RotatedSquare, VanishingAzimuths)
{
	Preset sq = rotated_square({{0, 3, -1}, 60, 2});
	std::set<long> got;
	for (const auto& m : sq.markers) {
		ASSERT_TRUE(m.horizontal_coordinate);
		double deg = *m.horizontal_coordinate / kPi * 180;
		EXPECT_NEAR(deg, std::round(deg), 1e-9);
		got.insert(std::lround(deg));
	}
	EXPECT_EQ(got, (std::set<long>{60, -120, -30, 150}));
	EXPECT_EQ(sq.strokes.size(), 4u);
	EXPECT_THROW(rotated_square({{0, 3, -1}, 60, 0}), GeometryError);
}
