#pragma once

// Central-difference checks of closed-form fields: equilibrium, constitutive
// closure (displacement -> strain -> stress), kinematics, 2D compatibility and
// boundary tractions. Every stencil point must lie in the field's domain.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "asymel/errors.hpp"
#include "asymel/grid.hpp"
#include "asymel/material.hpp"
#include "asymel/solutions2d.hpp"
#include "asymel/solutions3d.hpp"

namespace asymel {

struct ResidualStat {
  double max = 0.0;
  double mean = 0.0;
  std::size_t count = 0;

  void add(double value) {
    max = std::max(max, value);
    mean += (value - mean) / static_cast<double>(++count);
  }
};

namespace detail {

inline void require_step(double h) {
  if (!(h > 0.0) || !std::isfinite(h)) throw InvalidParameter("finite-difference step must be positive");
}

template <class Contains>
void require_stencil(const Contains& contains, double x, double y, double z, double h, bool with_z) {
  for (int dx = -1; dx <= 1; ++dx) {
    for (int dy = -1; dy <= 1; ++dy) {
      for (int dz = with_z ? -1 : 0; dz <= (with_z ? 1 : 0); ++dz) {
        if (!contains(x + dx * h, y + dy * h, z + dz * h)) {
          char buf[160];
          std::snprintf(buf, sizeof buf, "stencil at (%.6g, %.6g, %.6g) with h = %.3g leaves the domain", x, y, z, h);
          throw DomainViolation(buf);
        }
      }
    }
  }
}

inline void require_stencil_2d(const PlaneField& f, double x, double y, double h) {
  require_stencil([&f](double px, double py, double) { return f.contains(px, py); }, x, y, 0.0, h, false);
}

/// Central first derivative of a Vector6-valued sample along axis 0/1/2.
template <class Fn>
Vector6 d_axis(const Fn& f, double x, double y, double z, int axis, double h) {
  const double e[3] = {axis == 0 ? h : 0.0, axis == 1 ? h : 0.0, axis == 2 ? h : 0.0};
  return (f(x + e[0], y + e[1], z + e[2]) - f(x - e[0], y - e[1], z - e[2])) / (2.0 * h);
}

inline Matrix3 fd_gradient(const Field3D& f, double x, double y, double z, double h) {
  Matrix3 g;
  for (int axis = 0; axis < 3; ++axis) {
    const double e[3] = {axis == 0 ? h : 0.0, axis == 1 ? h : 0.0, axis == 2 ? h : 0.0};
    g.col(axis) = (f.displacement(x + e[0], y + e[1], z + e[2]) - f.displacement(x - e[0], y - e[1], z - e[2])) /
                  (2.0 * h);
  }
  return g;
}

inline DisplacementGradient2 fd_gradient(const PlaneField& f, double x, double y, double h) {
  const CartesianDisplacement xp = f.displacement(x + h, y);
  const CartesianDisplacement xm = f.displacement(x - h, y);
  const CartesianDisplacement yp = f.displacement(x, y + h);
  const CartesianDisplacement ym = f.displacement(x, y - h);
  const double s = 1.0 / (2.0 * h);
  return {(xp.u - xm.u) * s, (yp.u - ym.u) * s, (xp.v - xm.v) * s, (yp.v - ym.v) * s};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// 3D checks
// ---------------------------------------------------------------------------

/// |div s + F|_inf at each grid point.
inline ResidualStat fd_equilibrium_residual(const Field3D& f, const BodyForce& force,
                                            const std::vector<GridPoint>& pts, double h) {
  detail::require_step(h);
  const auto s = [&f](double x, double y, double z) { return f.stress(x, y, z).values; };
  ResidualStat stat;
  for (const GridPoint& p : pts) {
    detail::require_stencil(f.contains, p.x, p.y, p.z, h, true);
    const Vector6 dx = detail::d_axis(s, p.x, p.y, p.z, 0, h);
    const Vector6 dy = detail::d_axis(s, p.x, p.y, p.z, 1, h);
    const Vector6 dz = detail::d_axis(s, p.x, p.y, p.z, 2, h);
    const Vector3 div{dx(0) + dy(2) + dz(3) + force.f1, dx(2) + dy(1) + dz(4) + force.f2,
                      dx(3) + dy(4) + dz(5) + force.f3};
    stat.add(div.cwiseAbs().maxCoeff());
  }
  return stat;
}

/// |C e_fd - s|_inf, with e_fd the kinematic strain of the FD displacement gradient.
inline ResidualStat fd_constitutive_closure(const Field3D& f, const ElasticityMatrix6& c,
                                            const std::vector<GridPoint>& pts, double h) {
  detail::require_step(h);
  ResidualStat stat;
  for (const GridPoint& p : pts) {
    detail::require_stencil(f.contains, p.x, p.y, p.z, h, true);
    const StrainVec6 e = kinematic_strain(detail::fd_gradient(f, p.x, p.y, p.z, h));
    stat.add((c.matrix() * e.values - f.stress(p.x, p.y, p.z).values).cwiseAbs().maxCoeff());
  }
  return stat;
}

/// |e_fd - e|_inf: FD strain of the displacement against the analytic strain.
inline ResidualStat fd_kinematic_residual(const Field3D& f, const std::vector<GridPoint>& pts, double h) {
  detail::require_step(h);
  ResidualStat stat;
  for (const GridPoint& p : pts) {
    detail::require_stencil(f.contains, p.x, p.y, p.z, h, true);
    const StrainVec6 e = kinematic_strain(detail::fd_gradient(f, p.x, p.y, p.z, h));
    stat.add((e.values - f.strain(p.x, p.y, p.z).values).cwiseAbs().maxCoeff());
  }
  return stat;
}

/// max |s n| on the lateral surface r = R, sampled at `samples` angles per z.
inline double boundary_traction_cylinder(const Field3D& f, double radius, const std::vector<double>& z_levels,
                                         int samples) {
  if (!(radius > 0.0)) throw InvalidParameter("contour radius must be positive");
  if (samples < 8) throw InvalidParameter("at least 8 contour samples are required");
  double worst = 0.0;
  for (double z : z_levels) {
    for (int k = 0; k < samples; ++k) {
      const double phi = 2.0 * std::numbers::pi * k / samples;
      const double c = std::cos(phi);
      const double s = std::sin(phi);
      const StressVec6 t = f.stress(radius * c, radius * s, z);
      const Vector3 tr{t[0] * c + t[2] * s, t[2] * c + t[1] * s, t[3] * c + t[4] * s};
      worst = std::max(worst, tr.norm());
    }
  }
  return worst;
}

/// max |s n| on the faces z = +-h over an n x n sample of |x| <= a, |y| <= b.
inline double boundary_traction_plate_faces(const Field3D& f, double a, double b, double h, int samples) {
  if (samples < 2) throw InvalidParameter("at least 2 samples per direction are required");
  double worst = 0.0;
  for (double z : {-h, h}) {
    for (int i = 0; i < samples; ++i) {
      for (int j = 0; j < samples; ++j) {
        const double x = -a + 2.0 * a * i / (samples - 1);
        const double y = -b + 2.0 * b * j / (samples - 1);
        const StressVec6 t = f.stress(x, y, z);
        worst = std::max(worst, Vector3(t[3], t[4], t[5]).norm());
      }
    }
  }
  return worst;
}

// ---------------------------------------------------------------------------
// 2D checks
// ---------------------------------------------------------------------------

inline ResidualStat fd_equilibrium_residual(const PlaneField& f, const std::vector<GridPoint>& pts, double h) {
  detail::require_step(h);
  ResidualStat stat;
  for (const GridPoint& p : pts) {
    detail::require_stencil_2d(f, p.x, p.y, h);
    const PlaneStress xp = f.stress(p.x + h, p.y);
    const PlaneStress xm = f.stress(p.x - h, p.y);
    const PlaneStress yp = f.stress(p.x, p.y + h);
    const PlaneStress ym = f.stress(p.x, p.y - h);
    const double r1 = ((xp.s11 - xm.s11) + (yp.s12 - ym.s12)) / (2.0 * h);
    const double r2 = ((xp.s12 - xm.s12) + (yp.s22 - ym.s22)) / (2.0 * h);
    stat.add(std::max(std::abs(r1), std::abs(r2)));
  }
  return stat;
}

/// Stress reference used by the closure check; defaults to the field's own stress.
using PlaneStressFn = std::function<PlaneStress(double, double)>;

/// |T(grad_fd w) - s|_inf with T the plane constitutive law.
inline ResidualStat fd_constitutive_closure(const PlaneField& f, const PlaneMaterial& m,
                                            const std::vector<GridPoint>& pts, double h,
                                            const PlaneStressFn& reference = {}) {
  detail::require_step(h);
  const PlaneStressFn& ref = reference ? reference : f.stress;
  ResidualStat stat;
  for (const GridPoint& p : pts) {
    detail::require_stencil_2d(f, p.x, p.y, h);
    const PlaneStress got = stress_from_strain_2d(m, detail::fd_gradient(f, p.x, p.y, h));
    const PlaneStress want = ref(p.x, p.y);
    stat.add(std::max({std::abs(got.s11 - want.s11), std::abs(got.s22 - want.s22), std::abs(got.s12 - want.s12)}));
  }
  return stat;
}

/// |e1,yy + e2,xx - e3,xy| with e3 the engineering shear.
inline ResidualStat fd_compatibility_residual(const std::function<PlaneStrain(double, double)>& strain,
                                              const std::function<bool(double, double)>& contains,
                                              const std::vector<GridPoint>& pts, double h) {
  detail::require_step(h);
  ResidualStat stat;
  const auto inside = [&contains](double x, double y, double) { return contains(x, y); };
  for (const GridPoint& p : pts) {
    detail::require_stencil(inside, p.x, p.y, 0.0, h, false);
    const double x = p.x;
    const double y = p.y;
    const PlaneStrain c = strain(x, y);
    const double e1_yy = (strain(x, y + h).e1 - 2.0 * c.e1 + strain(x, y - h).e1) / (h * h);
    const double e2_xx = (strain(x + h, y).e2 - 2.0 * c.e2 + strain(x - h, y).e2) / (h * h);
    const double e3_xy = (strain(x + h, y + h).e3 - strain(x + h, y - h).e3 - strain(x - h, y + h).e3 +
                          strain(x - h, y - h).e3) /
                         (4.0 * h * h);
    stat.add(std::abs(e1_yy + e2_xx - e3_xy));
  }
  return stat;
}

inline ResidualStat fd_compatibility_residual(const PlaneField& f, const std::vector<GridPoint>& pts, double h) {
  return fd_compatibility_residual(f.strain, f.contains, pts, h);
}

/// max |s n + p n| on the circle r = R (p = 0 for a free contour, p > 0 for
/// pressure acting against the outward normal).
inline double boundary_traction_circle(const PlaneField& f, double radius, int samples, double pressure = 0.0) {
  if (!(radius > 0.0)) throw InvalidParameter("contour radius must be positive");
  if (samples < 8) throw InvalidParameter("at least 8 contour samples are required");
  double worst = 0.0;
  for (int k = 0; k < samples; ++k) {
    const double th = 2.0 * std::numbers::pi * k / samples;
    const double c = std::cos(th);
    const double s = std::sin(th);
    const PlaneStress t = f.stress(radius * c, radius * s);
    worst = std::max(worst, std::hypot(t.s11 * c + t.s12 * s + pressure * c, t.s12 * c + t.s22 * s + pressure * s));
  }
  return worst;
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

struct CheckResult {
  std::string name;
  ResidualStat stat;
  double scale = 1.0;      // residuals are compared against tolerance * scale
  double tolerance = 0.0;  // relative
  bool passed() const { return stat.max <= tolerance * scale; }
};

struct ResidualReport {
  std::string problem;
  std::string grid;
  double h = 0.0;
  std::vector<CheckResult> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
  }

  std::string to_text() const {
    std::string out = "problem " + problem + "\ngrid " + grid + "\n";
    char buf[256];
    std::snprintf(buf, sizeof buf, "h %.6e\n", h);
    out += buf;
    for (const CheckResult& c : checks) {
      std::snprintf(buf, sizeof buf, "%-24s max %.6e  mean %.6e  n %zu  limit %.6e  %s\n", c.name.c_str(),
                    c.stat.max, c.stat.mean, c.stat.count, c.tolerance * c.scale, c.passed() ? "PASS" : "FAIL");
      out += buf;
    }
    out += passed() ? "result PASS\n" : "result FAIL\n";
    return out;
  }
};

struct VerifyOptions {
  std::optional<GridSpec> grid;
  std::optional<double> h;
  std::optional<double> tol;  // replaces every relative tolerance
};

namespace detail {

inline std::string describe(const GridSpec& g) {
  char buf[256];
  const char* a = g.kind == GridKind::Cartesian ? "x" : "r";
  const char* b = g.kind == GridKind::Cartesian ? "y" : "theta";
  std::snprintf(buf, sizeof buf, "%s=%.6g:%.6g:%d,%s=%.6g:%.6g:%d", a, g.first.lo, g.first.hi, g.first.count, b,
                g.second.lo, g.second.hi, g.second.count);
  std::string s = buf;
  if (g.has_third) {
    std::snprintf(buf, sizeof buf, ",z=%.6g:%.6g:%d", g.third.lo, g.third.hi, g.third.count);
    s += buf;
  }
  if (g.exclusion_radius > 0.0) {
    std::snprintf(buf, sizeof buf, ",exclude=%.6g", g.exclusion_radius);
    s += buf;
  }
  return s;
}

/// Default step is 1e-4 of the domain diameter (hole diameter for unbounded domains).
inline ResidualReport start_report(std::string problem, const GridSpec& grid, const VerifyOptions& opt,
                                   double diameter) {
  ResidualReport rep;
  rep.problem = std::move(problem);
  rep.grid = describe(grid);
  rep.h = opt.h ? *opt.h : 1e-4 * diameter;
  require_step(rep.h);
  return rep;
}

inline void add_check(ResidualReport& rep, const VerifyOptions& opt, std::string name, ResidualStat stat,
                      double scale, double tol) {
  rep.checks.push_back({std::move(name), stat, scale, opt.tol ? *opt.tol : tol});
}

inline ResidualStat single(double value) {
  ResidualStat s;
  s.add(value);
  return s;
}

}  // namespace detail

inline GridSpec default_grid(const TorsionSolution& sol) {
  const double r = sol.problem.radius;
  const double l = sol.problem.length;
  return GridSpec::cartesian({-0.6 * r, 0.6 * r, 7}, {-0.6 * r, 0.6 * r, 7}, {-0.4 * l, 0.4 * l, 5});
}

inline GridSpec default_grid(const PlateBendingSolution& sol) {
  const PlateBendProblem& p = sol.problem;
  return GridSpec::cartesian({-0.9 * p.a, 0.9 * p.a, 7}, {-0.9 * p.b, 0.9 * p.b, 7}, {-0.9 * p.h, 0.9 * p.h, 5});
}

inline GridSpec default_grid(const PlaneProblem& pr) {
  const double r = pr.radius;
  if (pr.kind == PlaneProblemKind::Washer) return GridSpec::cartesian({-0.6 * r, 0.6 * r, 9}, {-0.6 * r, 0.6 * r, 9});
  GridSpec g = GridSpec::cylindrical({1.5 * r, 4.0 * r, 11}, {0.0, 2.0 * std::numbers::pi * 23.0 / 24.0, 24});
  g.exclusion_radius = r;
  return g;
}

inline ResidualReport verify(const TorsionSolution& sol, const ElasticityMatrix6& c, const VerifyOptions& opt = {}) {
  const GridSpec grid = opt.grid ? *opt.grid : default_grid(sol);
  ResidualReport rep =
      detail::start_report("torsion", grid, opt, std::hypot(2.0 * sol.problem.radius, sol.problem.length));
  const Field3D f = sol.field();
  const auto pts = grid.points();
  const double tau = f.stress_scale;
  const double r = sol.problem.radius;
  detail::add_check(rep, opt, "equilibrium", fd_equilibrium_residual(f, {}, pts, rep.h), tau / r, 1e-9);
  detail::add_check(rep, opt, "constitutive-closure", fd_constitutive_closure(f, c, pts, rep.h), tau, 1e-9);
  const double l = sol.problem.length;
  detail::add_check(rep, opt, "lateral-traction",
                    detail::single(boundary_traction_cylinder(f, r, {-0.5 * l, 0.0, 0.5 * l}, 64)), tau, 1e-12);
  return rep;
}

inline ResidualReport verify(const PlateBendingSolution& sol, const ElasticityMatrix6& c,
                             const VerifyOptions& opt = {}) {
  const GridSpec grid = opt.grid ? *opt.grid : default_grid(sol);
  const PlateBendProblem& pb = sol.problem;
  ResidualReport rep = detail::start_report("plate-bend", grid, opt, 2.0 * std::sqrt(pb.a * pb.a + pb.b * pb.b + pb.h * pb.h));
  const Field3D f = sol.field();
  const auto pts = grid.points();
  const double s = f.stress_scale;
  const PlateBendProblem& p = sol.problem;
  detail::add_check(rep, opt, "equilibrium", fd_equilibrium_residual(f, {}, pts, rep.h), s / p.h, 1e-9);
  detail::add_check(rep, opt, "constitutive-closure", fd_constitutive_closure(f, c, pts, rep.h), s, 1e-9);
  detail::add_check(rep, opt, "face-traction", detail::single(boundary_traction_plate_faces(f, p.a, p.b, p.h, 9)), s,
                    1e-12);
  return rep;
}

inline ResidualReport verify(const PlaneProblem& pr, const VerifyOptions& opt = {}) {
  const GridSpec grid = opt.grid ? *opt.grid : default_grid(pr);
  ResidualReport rep = detail::start_report(to_string(pr.kind), grid, opt, 2.0 * pr.radius);
  const PlaneField f = pr.field();
  const auto pts = grid.points();
  const double p = f.stress_scale;
  const double r = pr.radius;
  const bool washer = pr.kind == PlaneProblemKind::Washer;
  detail::add_check(rep, opt, "equilibrium", fd_equilibrium_residual(f, pts, rep.h), p / r, washer ? 1e-9 : 1e-6);
  detail::add_check(rep, opt, "constitutive-closure", fd_constitutive_closure(f, pr.material, pts, rep.h), p,
                    washer ? 1e-9 : 1e-5);
  detail::add_check(rep, opt, "compatibility", fd_compatibility_residual(f, pts, rep.h), p / (r * r),
                    washer ? 1e-9 : 1e-4);
  detail::add_check(rep, opt, washer ? "rim-traction" : "hole-traction",
                    detail::single(boundary_traction_circle(f, r, 64, washer ? pr.load : 0.0)), p, 1e-12);
  return rep;
}

}  // namespace asymel
