#pragma once

// Plane deformation through complex potentials phi(z), psi(z).
//
// Displacement (asymmetric extension of the Kolosov formula):
//   2 k0^2 (u + i v) = (2 k0^2 / lambda0 + conj(k)) phi - k z conj(phi') - k conj(psi)
//   k = mu + i mu0,  k0^2 = mu^2 + mu0^2
// Stress (material independent):
//   s11 + s22 = 4 Re phi'
//   s22 - s11 + 2 i s12 = 2 (conj(z) phi'' + psi')

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <string>

#include "asymel/errors.hpp"
#include "asymel/laurent.hpp"
#include "asymel/material.hpp"

namespace asymel {

struct PotentialPair {
  LaurentPotential phi;
  LaurentPotential psi;

  bool singular_at_origin() const { return phi.singular_at_origin() || psi.singular_at_origin(); }
};

struct CartesianDisplacement {
  double u = 0.0;
  double v = 0.0;
};

struct PolarDisplacement {
  double u_r = 0.0;
  double u_theta = 0.0;
};

struct PolarStress {
  double s_rr = 0.0;
  double s_tt = 0.0;
  double s_rt = 0.0;
};

/// Optional rigid motion added to displayed displacements: u + iv += translation + i rotation z.
struct RigidMotion {
  Complex translation{};
  double rotation = 0.0;
};

inline Complex complex_displacement(const PotentialPair& pp, const PlaneMaterial& m, Complex z) {
  if (z == Complex{} && pp.singular_at_origin())
    throw DomainViolation("displacement requested at the pole z = 0");
  const Complex kappa = m.kappa();
  const double k0sq = m.kappa0_sq();
  const Complex lead = 2.0 * k0sq / m.lambda0() + std::conj(kappa);
  const Complex rhs = lead * pp.phi(z) - kappa * z * std::conj(pp.phi.derivative()(z)) - kappa * std::conj(pp.psi(z));
  return rhs / (2.0 * k0sq);
}

inline CartesianDisplacement displacement_cartesian(const PotentialPair& pp, const PlaneMaterial& m, Complex z) {
  const Complex w = complex_displacement(pp, m, z);
  return {w.real(), w.imag()};
}

/// e^{-i theta} (u + i v), evaluated term by term in polar form so that
/// components that vanish analytically come out as exact zeros.
inline PolarDisplacement displacement_polar(const PotentialPair& pp, const PlaneMaterial& m, double r, double theta) {
  if (!(r > 0.0) && pp.singular_at_origin()) throw DomainViolation("polar displacement requires r > 0");
  const Complex kappa = m.kappa();
  const double k0sq = m.kappa0_sq();
  const Complex lead = 2.0 * k0sq / m.lambda0() + std::conj(kappa);
  const Complex rhs = lead * pp.phi.polar(r, theta, -1) - kappa * r * std::conj(pp.phi.derivative().polar(r, theta)) -
                      kappa * std::conj(pp.psi.polar(r, theta, 1));
  const Complex w = rhs / (2.0 * k0sq);
  return {w.real(), w.imag()};
}

inline PlaneStress stress_cartesian(const PotentialPair& pp, Complex z) {
  if (z == Complex{} && pp.singular_at_origin()) throw DomainViolation("stress requested at the pole z = 0");
  const LaurentPotential dphi = pp.phi.derivative();
  const Complex dev = 2.0 * (std::conj(z) * dphi.derivative()(z) + pp.psi.derivative()(z));
  const double sum = 4.0 * dphi(z).real();
  return {0.5 * (sum - dev.real()), 0.5 * (sum + dev.real()), 0.5 * dev.imag()};
}

/// Tensor rotation of Cartesian components into the (r, theta) frame.
inline PolarStress to_polar(const PlaneStress& s, double theta) {
  const double c = std::cos(theta);
  const double n = std::sin(theta);
  return {s.s11 * c * c + s.s22 * n * n + 2.0 * s.s12 * c * n, s.s11 * n * n + s.s22 * c * c - 2.0 * s.s12 * c * n,
          (s.s22 - s.s11) * c * n + s.s12 * (c * c - n * n)};
}

/// Q = s11 + s22 = 4 Re phi', harmonic for every potential.
inline double stress_trace(const PotentialPair& pp, Complex z) { return 4.0 * pp.phi.derivative()(z).real(); }

/// Closures over a plane solution, consumed by the verifier and the exporter.
struct PlaneField {
  std::function<CartesianDisplacement(double, double)> displacement;
  std::function<PlaneStrain(double, double)> strain;
  std::function<PlaneStress(double, double)> stress;
  std::function<bool(double, double)> contains;
  double stress_scale = 1.0;
  double length_scale = 1.0;
};

enum class PlaneProblemKind { Washer, HoleBiaxial, HoleUniaxial };

inline std::string to_string(PlaneProblemKind k) {
  switch (k) {
    case PlaneProblemKind::Washer:
      return "washer";
    case PlaneProblemKind::HoleBiaxial:
      return "hole-biaxial";
    case PlaneProblemKind::HoleUniaxial:
      return "hole-uniaxial";
  }
  return "unknown";
}

/// A plane benchmark: potentials, material and the geometry they live on.
/// Washer: disk r <= radius. Hole problems: exterior r >= radius.
struct PlaneProblem {
  PlaneProblemKind kind = PlaneProblemKind::Washer;
  PotentialPair potentials;
  PlaneMaterial material{1.0, 0.0, 1.0};
  double load = 0.0;
  double radius = 1.0;
  RigidMotion rigid;

  bool contains(double x, double y) const {
    constexpr double kSlack = 1e-12;
    const double r2 = x * x + y * y;
    const double big = radius * radius;
    if (kind == PlaneProblemKind::Washer) return r2 <= big * (1.0 + kSlack);
    return r2 >= big * (1.0 - kSlack);
  }

  void require_inside(double x, double y) const {
    if (!contains(x, y)) throw DomainViolation(to_string(kind) + ": point outside the problem domain");
  }

  CartesianDisplacement displacement(double x, double y) const {
    require_inside(x, y);
    const Complex z{x, y};
    const Complex w = complex_displacement(potentials, material, z) + rigid.translation +
                      Complex{0.0, rigid.rotation} * z;
    return {w.real(), w.imag()};
  }

  PolarDisplacement displacement_polar(double r, double theta) const {
    require_inside(r * std::cos(theta), r * std::sin(theta));
    const PolarDisplacement d = asymel::displacement_polar(potentials, material, r, theta);
    const Complex rigid_part = std::polar(1.0, -theta) * rigid.translation + Complex{0.0, rigid.rotation * r};
    return {d.u_r + rigid_part.real(), d.u_theta + rigid_part.imag()};
  }

  PlaneStress stress(double x, double y) const {
    require_inside(x, y);
    return stress_cartesian(potentials, {x, y});
  }

  PolarStress stress_polar(double r, double theta) const {
    return to_polar(stress(r * std::cos(theta), r * std::sin(theta)), theta);
  }

  PlaneStrain strain(double x, double y) const { return strain_from_stress_2d(material, stress(x, y)); }

  PlaneField field() const {
    const PlaneProblem self = *this;
    const double scale = std::abs(load) > 0.0 ? std::abs(load) : 1.0;
    return {[self](double x, double y) { return self.displacement(x, y); },
            [self](double x, double y) { return self.strain(x, y); },
            [self](double x, double y) { return self.stress(x, y); },
            [self](double x, double y) { return self.contains(x, y); },
            scale,
            radius};
  }
};

// ---------------------------------------------------------------------------
// Benchmarks
// ---------------------------------------------------------------------------

/// Disk of radius `outer_radius` under uniform pressure p on its rim.
inline PlaneProblem solve_washer(double p, const PlaneMaterial& m, double outer_radius = 1.0) {
  if (!(outer_radius > 0.0)) throw InvalidParameter("washer radius must be positive");
  PlaneProblem pr;
  pr.kind = PlaneProblemKind::Washer;
  pr.potentials.phi = {{1, Complex{-0.5 * p, 0.0}}};
  pr.material = m;
  pr.load = p;
  pr.radius = outer_radius;
  return pr;
}

/// Infinite plate with a traction-free hole of radius R under biaxial tension p.
inline PlaneProblem solve_hole_biaxial(double p, double hole_radius, const PlaneMaterial& m) {
  if (!(hole_radius > 0.0)) throw InvalidParameter("hole radius must be positive");
  PlaneProblem pr;
  pr.kind = PlaneProblemKind::HoleBiaxial;
  pr.potentials.phi = {{1, Complex{0.5 * p, 0.0}}};
  pr.potentials.psi = {{-1, Complex{-p * hole_radius * hole_radius, 0.0}}};
  pr.material = m;
  pr.load = p;
  pr.radius = hole_radius;
  return pr;
}

/// Infinite plate with a traction-free hole of radius R under tension p along x.
inline PlaneProblem solve_hole_uniaxial(double p, double hole_radius, const PlaneMaterial& m) {
  if (!(hole_radius > 0.0)) throw InvalidParameter("hole radius must be positive");
  const double r = hole_radius;
  PlaneProblem pr;
  pr.kind = PlaneProblemKind::HoleUniaxial;
  // phi = pR/4 (z/R + 2R/z), psi = -pR/2 (z/R + R/z - R^3/z^3)
  pr.potentials.phi = {{1, Complex{0.25 * p, 0.0}}, {-1, Complex{0.5 * p * r * r, 0.0}}};
  pr.potentials.psi = {{1, Complex{-0.5 * p, 0.0}},
                       {-1, Complex{-0.5 * p * r * r, 0.0}},
                       {-3, Complex{0.5 * p * r * r * r * r, 0.0}}};
  pr.material = m;
  pr.load = p;
  pr.radius = r;
  return pr;
}

// ---------------------------------------------------------------------------
// Closed forms, written out independently of the potential machinery
// ---------------------------------------------------------------------------

namespace closed_form {

inline PolarDisplacement washer_displacement(double p, const PlaneMaterial& m, double r) {
  return {-0.5 * p * r / m.lambda0(), 0.5 * m.mu0() * p * r / m.kappa0_sq()};
}

inline PolarStress washer_stress(double p) { return {-p, -p, 0.0}; }

inline PolarDisplacement hole_biaxial_displacement(double p, double R, const PlaneMaterial& m, double r) {
  const double mk = m.mu() / m.kappa0_sq();
  const double m0k = m.mu0() / m.kappa0_sq();
  return {0.5 * p * R * (r / (R * m.lambda0()) + mk * R / r), 0.5 * p * R * m0k * (R / r - r / R)};
}

/// Boundary values at r = R.
inline PolarDisplacement hole_biaxial_boundary(double p, double R, const PlaneMaterial& m) {
  return {0.5 * p * R * (1.0 / m.lambda0() + m.mu() / m.kappa0_sq()), 0.0};
}

inline PolarStress hole_biaxial_stress(double p, double R, double r) {
  const double q = R * R / (r * r);
  return {p * (1.0 - q), p * (1.0 + q), 0.0};
}

/// Classical (mu0 = 0) displacement; defined only for mu > 0.
inline PolarDisplacement hole_biaxial_classical(double p, double R, double lambda0, double mu, double r) {
  return {0.5 * p * R * (r / (R * lambda0) + R / (mu * r)), 0.0};
}

/// mu -> 0 limit with lambda0 = lambda + mu held as lambda fixed.
inline PolarDisplacement hole_biaxial_mu_limit(double p, double R, double lambda, double mu0, double r) {
  return {p * r / (2.0 * lambda), p * R / (2.0 * mu0) * (R / r - r / R)};
}

inline PolarDisplacement hole_biaxial_boundary_mu_limit(double p, double R, double lambda) {
  return {p * R / (2.0 * lambda), 0.0};
}

inline PolarDisplacement hole_uniaxial_displacement(double p, double R, const PlaneMaterial& m, double r,
                                                    double theta) {
  const double il = 1.0 / m.lambda0();
  const double mk = m.mu() / m.kappa0_sq();
  const double m0k = m.mu0() / m.kappa0_sq();
  const double a = r / R;
  const double b = R / r;
  const double b3 = b * b * b;
  const double s2 = std::sin(2.0 * theta);
  const double c2 = std::cos(2.0 * theta);
  const double ur = 0.25 * p * R * (il * a + mk * b) + 0.25 * m0k * p * R * (a - 2.0 * b + b3) * s2 +
                    0.25 * p * R * (2.0 * il * b + mk * (a + 2.0 * b - b3)) * c2;
  const double ut = 0.25 * m0k * p * R * (b - a) + 0.25 * m0k * p * R * (a - b3) * c2 -
                    0.25 * p * R * (2.0 * il * b + mk * (a + b3)) * s2;
  return {ur, ut};
}

/// Boundary values at r = R in terms of lambda = lambda0 - mu.
inline PolarDisplacement hole_uniaxial_boundary(double p, double R, const PlaneMaterial& m, double theta) {
  const double mu = m.mu();
  const double mu0 = m.mu0();
  const double lambda = m.lambda0() - mu;
  const double coef = p * R * (mu0 * mu0 + 2.0 * mu * mu + lambda * mu) / (4.0 * (lambda + mu) * (mu0 * mu0 + mu * mu));
  return {coef * (1.0 + 2.0 * std::cos(2.0 * theta)), -2.0 * coef * std::sin(2.0 * theta)};
}

inline PolarDisplacement hole_uniaxial_boundary_mu_limit(double p, double R, double lambda, double theta) {
  return {p * R / (4.0 * lambda) * (1.0 + 2.0 * std::cos(2.0 * theta)),
          -p * R / (2.0 * lambda) * std::sin(2.0 * theta)};
}

inline PolarDisplacement hole_uniaxial_classical(double p, double R, double lambda0, double mu, double r,
                                                 double theta) {
  const double a = r / R;
  const double b = R / r;
  const double b3 = b * b * b;
  return {0.25 * p * R * (a / lambda0 + b / mu) +
              0.25 * p * R * (2.0 * b / lambda0 + (a + 2.0 * b - b3) / mu) * std::cos(2.0 * theta),
          -0.25 * p * R * (2.0 * b / lambda0 + (a + b3) / mu) * std::sin(2.0 * theta)};
}

/// Classical boundary values in terms of lambda and mu.
inline PolarDisplacement hole_uniaxial_classical_boundary(double p, double R, double lambda, double mu,
                                                          double theta) {
  const double coef = p * R * (lambda + 2.0 * mu) / (4.0 * mu * (lambda + mu));
  return {coef * (1.0 + 2.0 * std::cos(2.0 * theta)), -2.0 * coef * std::sin(2.0 * theta)};
}

inline PolarStress hole_uniaxial_stress(double p, double R, double r, double theta) {
  const double q2 = R * R / (r * r);
  const double q4 = q2 * q2;
  const double c2 = std::cos(2.0 * theta);
  const double s2 = std::sin(2.0 * theta);
  return {0.5 * p * (1.0 - q2 + (1.0 - 4.0 * q2 + 3.0 * q4) * c2), 0.5 * p * (1.0 + q2 - (1.0 + 3.0 * q4) * c2),
          -0.5 * p * (1.0 + 2.0 * q2 - 3.0 * q4) * s2};
}

}  // namespace closed_form

/// Largest deviation between the potential-based displacement of `problem`
/// and the classical closed form, relative to the largest classical magnitude
/// on the sample grid. Requires mu0 = 0.
inline double classical_limit_compare(const PlaneProblem& problem, int radial_samples = 9, int angular_samples = 16) {
  const PlaneMaterial& m = problem.material;
  if (m.mu0() != 0.0) throw RequiresClassical("classical comparison requires mu0 = 0");
  const double R = problem.radius;
  const double p = problem.load;
  const bool washer = problem.kind == PlaneProblemKind::Washer;
  const double r_lo = washer ? 0.1 * R : R;
  const double r_hi = washer ? R : 5.0 * R;

  double max_diff = 0.0;
  double max_ref = 0.0;
  for (int i = 0; i < radial_samples; ++i) {
    const double r = r_lo + (r_hi - r_lo) * i / std::max(1, radial_samples - 1);
    for (int j = 0; j < angular_samples; ++j) {
      const double theta = 2.0 * std::numbers::pi * j / angular_samples;
      PolarDisplacement ref;
      switch (problem.kind) {
        case PlaneProblemKind::Washer:
          // Classical washer: u_r = -p r / (2 lambda0), no angular component.
          ref = {-0.5 * p * r / m.lambda0(), 0.0};
          break;
        case PlaneProblemKind::HoleBiaxial:
          ref = closed_form::hole_biaxial_classical(p, R, m.lambda0(), m.mu(), r);
          break;
        case PlaneProblemKind::HoleUniaxial:
          ref = closed_form::hole_uniaxial_classical(p, R, m.lambda0(), m.mu(), r, theta);
          break;
      }
      const PolarDisplacement got = problem.displacement_polar(r, theta);
      max_diff = std::max({max_diff, std::abs(got.u_r - ref.u_r), std::abs(got.u_theta - ref.u_theta)});
      max_ref = std::max({max_ref, std::abs(ref.u_r), std::abs(ref.u_theta)});
    }
  }
  return max_ref > 0.0 ? max_diff / max_ref : max_diff;
}

}  // namespace asymel
