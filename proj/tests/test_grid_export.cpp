#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "asymel/export.hpp"
#include "asymel/grid.hpp"
#include "oracles.hpp"

using namespace asymel;

namespace {

const PlaneMaterial kRef(2.0, 0.5, 1.0);

TorsionSolution torsion() {
  return solve_torsion({1.0, 1.0, 2.0}, invert_to_D(build_C(MaterialParams3D(oracle::m1()))));
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::vector<double> numbers_of(const std::string& row) {
  std::vector<double> out;
  std::istringstream in(row);
  for (std::string cell; std::getline(in, cell, ',');) out.push_back(std::strtod(cell.c_str(), nullptr));
  return out;
}

}  // namespace

TEST(GridParse, CartesianAndCylindrical) {
  const GridSpec c = parse_grid_spec("x=-1:1:3,y=0:2:5");
  EXPECT_EQ(c.kind, GridKind::Cartesian);
  EXPECT_FALSE(c.has_third);
  EXPECT_EQ(c.first.count, 3);
  EXPECT_EQ(c.second.hi, 2.0);
  EXPECT_EQ(c.points().size(), 15u);

  const GridSpec y = parse_grid_spec(" r = 1:4:4 , theta=0:3.14:8, z=-1:1:2, exclude=1.5");
  EXPECT_EQ(y.kind, GridKind::Cylindrical);
  EXPECT_TRUE(y.has_third);
  EXPECT_EQ(y.exclusion_radius, 1.5);
  EXPECT_EQ(y.points().size(), 3u * 8u * 2u);
  EXPECT_EQ(parse_grid_spec("x=+1:2:2,y=0:1:2").first.lo, 1.0);
}

TEST(GridParse, Rejections) {
  for (const char* bad : {"", "x=0:1:2", "y=0:1:2,x=0:1:2", "x=0:1,y=0:1:2", "x=0:1:0,y=0:1:2", "x=1:0:2,y=0:1:2",
                          "x=1:1:3,y=0:1:2", "x=0:1:2,y=0:1:2,w=0:1:2", "r=-1:1:2,theta=0:1:2", "x=a:1:2,y=0:1:2",
                          "x=0:1:2.5,y=0:1:2", "x=0:1:2,y=0:1:2,exclude=-1", "x=0:1:2,exclude=1,y=0:1:2",
                          "x=0:1:2,y", "x=0:inf:2,y=0:1:2", "x=0:1:2,y=0:1:2,z=0:1:2,z=0:1:2"}) {
    EXPECT_THROW(parse_grid_spec(bad), UsageError) << bad;
  }
}

TEST(GridPoints, RowMajorFirstAxisOutermost) {
  const auto pts = GridSpec::cartesian({0.0, 1.0, 2}, {0.0, 2.0, 3}, {5.0, 6.0, 2}).points();
  ASSERT_EQ(pts.size(), 12u);
  EXPECT_EQ(pts[0].x, 0.0);
  EXPECT_EQ(pts[0].z, 5.0);
  EXPECT_EQ(pts[1].z, 6.0);
  EXPECT_EQ(pts[2].y, 1.0);
  EXPECT_EQ(pts[6].x, 1.0);
  EXPECT_EQ(pts[11].y, 2.0);
  EXPECT_EQ(pts[11].z, 6.0);
}

TEST(GridPoints, CylindricalCoordinatesAndExclusion) {
  GridSpec g = GridSpec::cylindrical({0.5, 3.0, 6}, {0.0, 1.5 * std::numbers::pi, 7});
  g.exclusion_radius = 1.0;
  const auto pts = g.points();
  for (const GridPoint& p : pts) {
    EXPECT_GE(p.r, 1.0 * (1.0 - 1e-12));
    EXPECT_NEAR(std::hypot(p.x, p.y), p.r, 1e-14);
  }
  EXPECT_EQ(pts.size(), 5u * 7u);  // r = 0.5 dropped, r = 1.0 kept
}

TEST(Export, RowCountAndHeader) {
  const TorsionSolution sol = torsion();
  std::ostringstream os;
  const auto n = write_csv(os, sol.field(), GridSpec::cartesian({-0.5, 0.5, 3}, {-0.5, 0.5, 3}).points());
  EXPECT_EQ(n, 9u);
  const auto lines = lines_of(os.str());
  ASSERT_EQ(lines.size(), 10u);
  EXPECT_EQ(lines[0], "x,y,z,r,theta,w1,w2,w3,e1,e2,e3,e4,e5,e6,s1,s2,s3,s4,s5,s6");
  for (std::size_t i = 1; i < lines.size(); ++i) EXPECT_EQ(numbers_of(lines[i]).size(), 20u);

  std::ostringstream conv;
  write_csv(conv, sol.field(), GridSpec::cartesian({0.0, 0.0, 1}, {0.0, 0.0, 1}).points(), true);
  EXPECT_EQ(lines_of(conv.str())[0],
            "x,y,z,r,theta,w1,w2,w3,eps11,eps22,eps33,gam23,gam31,gam12,sig11,sig22,sig33,sig23,sig31,sig12");
}

TEST(Export, ConventionalOrderPermutesSlots) {
  const TorsionSolution sol = torsion();
  const auto pts = GridSpec::cartesian({0.3, 0.3, 1}, {-0.2, -0.2, 1}, {0.4, 0.4, 1}).points();
  std::ostringstream a, b;
  write_csv(a, sol.field(), pts);
  write_csv(b, sol.field(), pts, true);
  const auto s = numbers_of(lines_of(a.str())[1]);
  const auto c = numbers_of(lines_of(b.str())[1]);
  // slot (11,22,12,31,32,33) -> conventional (11,22,33,23,31,12)
  const int map[6] = {0, 1, 5, 4, 3, 2};
  for (int k = 0; k < 6; ++k) {
    EXPECT_EQ(c[8 + k], s[8 + map[k]]);
    EXPECT_EQ(c[14 + k], s[14 + map[k]]);
  }
}

TEST(Export, TorsionWarpingColumn) {
  const TorsionSolution sol = torsion();
  std::ostringstream os;
  write_csv(os, sol.field(), GridSpec::cylindrical({0.0, 1.0, 5}, {0.0, std::numbers::pi / 2, 4}, {0.0, 0.0, 1}).points());
  const auto lines = lines_of(os.str());
  const double d45 = -2.0 / 17.0, a5 = 1.0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto v = numbers_of(lines[i]);
    EXPECT_NEAR(v[7], 0.5 * d45 * a5 * v[3] * v[3], 1e-14);
  }
}

TEST(Export, PlaneColumnsAndExclusion) {
  const PlaneProblem pr = solve_hole_uniaxial(1.0, 1.0, kRef);
  GridSpec g = GridSpec::cylindrical({0.0, 3.0, 7}, {0.0, std::numbers::pi, 5});
  g.exclusion_radius = 1.0;
  std::ostringstream os;
  const auto n = write_csv(os, pr, g.points());
  const auto lines = lines_of(os.str());
  EXPECT_EQ(lines[0], "x,y,r,theta,u,v,u_r,u_theta,eps11,eps22,gam12,sig11,sig22,sig12,sig_rr,sig_tt,sig_rt");
  EXPECT_EQ(lines.size(), n + 1);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto v = numbers_of(lines[i]);
    ASSERT_EQ(v.size(), 17u);
    EXPECT_GE(v[2], 1.0 - 1e-12);
    const PolarDisplacement d = pr.displacement_polar(v[2], v[3]);
    EXPECT_NEAR(v[6], d.u_r, 1e-14);
    EXPECT_NEAR(v[7], d.u_theta, 1e-14);
  }
}

TEST(Export, RoundTripsSeventeenDigitsAndUsesLf) {
  const PlaneProblem pr = solve_hole_biaxial(1.0 / 3.0, 1.0, kRef);
  const auto pts = GridSpec::cylindrical({1.0, 2.0, 3}, {0.1, 0.7, 3}).points();
  std::ostringstream a, b;
  write_csv(a, pr, pts);
  write_csv(b, pr, pts);
  EXPECT_EQ(a.str(), b.str());
  EXPECT_EQ(a.str().find('\r'), std::string::npos);
  EXPECT_EQ(a.str().back(), '\n');
  const auto row = numbers_of(lines_of(a.str())[1]);
  const CartesianDisplacement d = pr.displacement(pts[0].x, pts[0].y);
  EXPECT_EQ(row[4], d.u);  // exact round trip
  EXPECT_EQ(row[5], d.v);
}

TEST(Export, Errors) {
  const PlaneProblem pr = solve_hole_biaxial(1.0, 1.0, kRef);
  std::ostringstream os;
  EXPECT_THROW(write_csv(os, pr, GridSpec::cartesian({0.0, 1.0, 2}, {0.0, 0.0, 1}).points()), DomainViolation);
  const TorsionSolution sol = torsion();
  EXPECT_THROW(write_csv(os, sol.field(), GridSpec::cartesian({0.0, 2.0, 2}, {0.0, 0.0, 1}).points()),
               DomainViolation);
  EXPECT_THROW(sample_and_export("/nonexistent-dir/out.csv", pr, GridSpec::cylindrical({1.0, 2.0, 2}, {0.0, 1.0, 2}).points()),
               IoFailure);
  std::ostringstream failed;
  failed.setstate(std::ios::badbit);
  EXPECT_THROW(write_csv(failed, pr, GridSpec::cylindrical({1.0, 2.0, 2}, {0.0, 1.0, 2}).points()), IoFailure);
}

TEST(Export, FileMatchesStream) {
  const PlaneProblem pr = solve_washer(1.0, kRef);
  const auto pts = GridSpec::cartesian({-0.5, 0.5, 4}, {-0.5, 0.5, 4}).points();
  const auto path = std::filesystem::temp_directory_path() / "asymel_export_test.csv";
  EXPECT_EQ(sample_and_export(path.string(), pr, pts), 16u);
  std::ifstream in(path, std::ios::binary);
  std::ostringstream file, mem;
  file << in.rdbuf();
  write_csv(mem, pr, pts);
  EXPECT_EQ(file.str(), mem.str());
  std::filesystem::remove(path);
}
