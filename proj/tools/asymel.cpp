// asymel: command-line front end for the asymmetric elasticity library.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 usage or input error.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "asymel/asymel.hpp"

namespace {

using namespace asymel;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void print_matrix(std::ostream& os, const char* title, const Matrix6& m) {
  os << title << '\n';
  for (int r = 0; r < 6; ++r) {
    for (int c = 0; c < 6; ++c) {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%16.9g", m(r, c));
      os << buf;
    }
    os << '\n';
  }
}

std::string entry_name(int r, int c) { return "C" + std::to_string(r + 1) + std::to_string(c + 1); }

struct ProblemArgs {
  std::string problem;
  std::string material;
  std::string grid;
  std::string out;
  bool conventional = false;
  double tau = 0.0, radius = 0.0, length = 0.0;
  double c1 = 0.0, c2 = 0.0, half_thickness = 0.0, a = 1.0, b = 1.0;
  double p = 0.0, hole_radius = 1.0;
  double step = 0.0, tol = 0.0;
  CLI::Option* tau_opt = nullptr;
  CLI::Option* radius_opt = nullptr;
  CLI::Option* length_opt = nullptr;
  CLI::Option* c1_opt = nullptr;
  CLI::Option* c2_opt = nullptr;
  CLI::Option* thick_opt = nullptr;
  CLI::Option* p_opt = nullptr;
  CLI::Option* grid_opt = nullptr;
  CLI::Option* step_opt = nullptr;
  CLI::Option* tol_opt = nullptr;
};

const std::vector<std::string> kProblems = {"torsion", "plate-bend", "washer", "hole-biaxial", "hole-uniaxial"};

void add_problem_options(CLI::App* cmd, ProblemArgs& args, bool verify) {
  cmd->add_option("problem", args.problem, "torsion | plate-bend | washer | hole-biaxial | hole-uniaxial")
      ->required()
      ->check(CLI::IsMember(kProblems));
  cmd->add_option("-m,--material", args.material, "material file")->required();
  args.tau_opt = cmd->add_option("--tau", args.tau, "torsion: end shear stress at r = R");
  args.radius_opt = cmd->add_option("--radius", args.radius, "torsion: shaft radius");
  args.length_opt = cmd->add_option("--length", args.length, "torsion: shaft length");
  args.c1_opt = cmd->add_option("--c1", args.c1, "plate-bend: s1 = c1 z");
  args.c2_opt = cmd->add_option("--c2", args.c2, "plate-bend: s2 = c2 z");
  if (verify) {
    args.thick_opt = cmd->add_option("--half-thickness", args.half_thickness, "plate-bend: half-thickness h");
    args.step_opt = cmd->add_option("--h", args.step, "finite-difference step");
    args.tol_opt = cmd->add_option("--tol", args.tol, "relative tolerance applied to every check");
  } else {
    args.thick_opt = cmd->add_option("--h,--half-thickness", args.half_thickness, "plate-bend: half-thickness h");
    cmd->add_option("--out", args.out, "CSV output file");
    cmd->add_flag("--conventional-voigt", args.conventional, "3D CSV in (11,22,33,23,31,12) order");
  }
  cmd->add_option("--a", args.a, "plate-bend: half-extent along x")->capture_default_str();
  cmd->add_option("--b", args.b, "plate-bend: half-extent along y")->capture_default_str();
  args.p_opt = cmd->add_option("--p", args.p, "plane problems: load p");
  cmd->add_option("--hole-radius", args.hole_radius, "plane problems: hole (or washer) radius")
      ->capture_default_str();
  args.grid_opt = cmd->add_option("--grid", args.grid, "x=LO:HI:N,y=LO:HI:N[,z=..] or r=LO:HI:N,theta=LO:HI:N[,z=..]");
}

void require(const CLI::Option* opt, const std::string& problem) {
  if (opt->count() == 0) throw UsageError(problem + " requires " + opt->get_name());
}

ElasticityMatrix6 load_3d(const std::string& path) {
  const MaterialDefinition def = parse_material_file(path);
  if (!std::holds_alternative<MaterialParams3D>(def))
    throw UsageError("problem needs a 3D material file (C11 ... C66)");
  return build_C(std::get<MaterialParams3D>(def));
}

PlaneMaterial load_plane(const std::string& path) {
  const MaterialDefinition def = parse_material_file(path);
  if (const auto* pm = std::get_if<PlaneMaterial>(&def)) return *pm;
  return plane_reduce(build_C(std::get<MaterialParams3D>(def))).material;
}

TorsionSolution make_torsion(const ProblemArgs& a, const ElasticityMatrix6& c) {
  require(a.tau_opt, a.problem);
  require(a.radius_opt, a.problem);
  require(a.length_opt, a.problem);
  return solve_torsion({a.tau, a.radius, a.length}, invert_to_D(c));
}

PlateBendingSolution make_plate(const ProblemArgs& a, const ElasticityMatrix6& c) {
  require(a.c1_opt, a.problem);
  require(a.c2_opt, a.problem);
  require(a.thick_opt, a.problem);
  return solve_plate_bending({a.c1, a.c2, a.half_thickness, a.a, a.b}, invert_to_D(c));
}

PlaneProblem make_plane(const ProblemArgs& a) {
  require(a.p_opt, a.problem);
  const PlaneMaterial m = load_plane(a.material);
  if (a.problem == "washer") return solve_washer(a.p, m, a.hole_radius);
  if (a.problem == "hole-biaxial") return solve_hole_biaxial(a.p, a.hole_radius, m);
  return solve_hole_uniaxial(a.p, a.hole_radius, m);
}

// ---------------------------------------------------------------------------

int run_check_material(const std::string& path) {
  const MaterialDefinition def = parse_material_file(path);
  std::ostream& os = std::cout;
  if (const auto* pm = std::get_if<PlaneMaterial>(&def)) {
    os << "kind plane\n"
       << "lambda0 " << fmt(pm->lambda0()) << "\nmu0 " << fmt(pm->mu0()) << "\nmu " << fmt(pm->mu()) << '\n'
       << "kappa0^2 " << fmt(pm->kappa0_sq()) << '\n'
       << "result PASS\n";
    return kExitOk;
  }
  const ElasticityMatrix6 c = build_C(std::get<MaterialParams3D>(def));
  os << "kind 3d\n";
  const auto coeffs = c.coefficients().as_array();
  for (std::size_t i = 0; i < coeffs.size(); ++i) os << kFamilyParameterNames[i] << ' ' << fmt(coeffs[i]) << '\n';
  os << "C12 " << fmt(c.slot(1, 2)) << '\n';
  print_matrix(os, "stiffness", c.matrix());

  const double invariance = check_rotational_invariance(c.matrix(), uniform_angles(32));
  const bool invariant = invariance <= 1e-12;
  os << "invariance-deviation " << fmt(invariance) << (invariant ? " PASS" : " FAIL") << '\n';

  const SylvesterResult syl = sylvester_check(c.matrix());
  os << "sylvester-minors";
  for (double m : syl.minors) os << ' ' << fmt(m);
  os << '\n' << "positive-definite " << (syl.positive_definite ? "yes PASS" : "no FAIL") << '\n';

  const ComplianceMatrix6 d = invert_to_D(c);
  print_matrix(os, "compliance", d.matrix());
  const double inv_err = (d.matrix() * c.matrix() - Matrix6::Identity()).cwiseAbs().maxCoeff();
  const bool inverse_ok = inv_err <= 1e-12;
  os << "inverse-residual " << fmt(inv_err) << (inverse_ok ? " PASS" : " FAIL") << '\n';

  try {
    const PlaneMaterial pm = plane_reduce(c).material;
    os << "plane lambda0 " << fmt(pm.lambda0()) << " mu0 " << fmt(pm.mu0()) << " mu " << fmt(pm.mu()) << '\n';
  } catch (const InvalidPlaneMaterial& e) {
    os << "plane unavailable: " << e.what() << '\n';
  }
  const bool ok = invariant && syl.positive_definite && inverse_ok;
  os << (ok ? "result PASS\n" : "result FAIL\n");
  return ok ? kExitOk : kExitCheckFailed;
}

int run_derive_invariance(const std::vector<double>& angles, double tol) {
  const ConstraintSystem sys = build_constraint_system(angles);
  std::ostream& os = std::cout;
  int code = kExitOk;
  FamilyBasis basis;
  try {
    basis = nullspace_basis(sys, tol);
  } catch (const DegenerateSampling& e) {
    std::cerr << "warning: " << e.what() << '\n';
    basis = nullspace_basis(sys, tol, false);
    code = kExitCheckFailed;
  }
  os << "angles";
  for (double a : angles) os << ' ' << fmt(a);
  os << "\ndimension " << basis.dimension() << '\n';
  if (basis.dimension() == 0) return code;

  const FamilyStructure fs = describe_family(basis);
  std::vector<std::string> cell(36);
  for (const auto& [r, c] : fs.zero_entries) cell[static_cast<std::size_t>(entry_index(r, c))] = "0";
  for (const auto& [r, c] : fs.free_entries) cell[static_cast<std::size_t>(entry_index(r, c))] = entry_name(r, c);
  for (const EntryRelation& e : fs.equalities) {
    const std::string ref = cell[static_cast<std::size_t>(entry_index(e.ref_row, e.ref_col))];
    cell[static_cast<std::size_t>(entry_index(e.row, e.col))] = (e.sign < 0 ? "-" : "") + ref;
  }
  os << "pattern\n";
  for (int r = 0; r < 6; ++r) {
    for (int c = 0; c < 6; ++c) {
      char buf[16];
      std::snprintf(buf, sizeof buf, "%6s", cell[static_cast<std::size_t>(entry_index(r, c))].c_str());
      os << buf;
    }
    os << '\n';
  }
  os << "equalities\n";
  for (const EntryRelation& e : fs.equalities)
    os << "  " << entry_name(e.row, e.col) << " = " << (e.sign < 0 ? "-" : "") << entry_name(e.ref_row, e.ref_col)
       << '\n';
  os << "relations\n";
  for (const LinearRelation& lr : fs.linear_relations) {
    os << ' ';
    for (std::size_t k = 0; k < lr.entries.size(); ++k) {
      const double cf = lr.coefficients[k];
      os << ' ' << (cf < 0 ? "- " : (k == 0 ? "" : "+ ")) << fmt(std::abs(cf)) << ' '
         << entry_name(lr.entries[k].first, lr.entries[k].second);
    }
    os << " = 0\n";
  }
  return code;
}

GridSpec default_export_grid(const TorsionSolution& s) {
  const double r = s.problem.radius;
  const double l = s.problem.length;
  return GridSpec::cylindrical({0.0, r, 5}, {0.0, 0.5 * std::numbers::pi, 5}, {-0.5 * l, 0.5 * l, 3});
}

GridSpec default_export_grid(const PlateBendingSolution& s) {
  const PlateBendProblem& p = s.problem;
  return GridSpec::cartesian({-p.a, p.a, 5}, {-p.b, p.b, 5}, {-p.h, p.h, 3});
}

GridSpec default_export_grid(const PlaneProblem& pr) {
  const double r = pr.radius;
  const AxisRange theta{0.0, 2.0 * std::numbers::pi * 11.0 / 12.0, 12};
  if (pr.kind == PlaneProblemKind::Washer) return GridSpec::cylindrical({0.0, r, 6}, theta);
  GridSpec g = GridSpec::cylindrical({r, 4.0 * r, 7}, theta);
  g.exclusion_radius = r;
  return g;
}

/// User grid if given, else `fallback`; hole problems get their hole as exclusion radius.
GridSpec export_grid(const ProblemArgs& a, const GridSpec& fallback, double exclusion) {
  if (a.grid_opt->count() == 0) return fallback;
  GridSpec g = parse_grid_spec(a.grid);
  if (g.exclusion_radius == 0.0) g.exclusion_radius = exclusion;
  return g;
}

int run_solve(const ProblemArgs& a) {
  std::ostream& os = std::cout;
  os << "problem " << a.problem << '\n';
  if (a.problem == "torsion") {
    const ElasticityMatrix6 c = load_3d(a.material);
    const TorsionSolution s = make_torsion(a, c);
    os << "a5 " << fmt(s.a5) << "\nD44 " << fmt(s.d44) << "\nD45 " << fmt(s.d45) << '\n'
       << "twist-rate " << fmt(s.twist_rate()) << '\n'
       << "w3 = " << fmt(0.5 * s.d45 * s.a5) << " r^2\n"
       << "section-shear(R) " << fmt(s.section_shear(s.problem.radius, 0.0)) << '\n';
    if (!a.out.empty()) {
      const auto rows =
          sample_and_export(a.out, s.field(), export_grid(a, default_export_grid(s), 0.0).points(), a.conventional);
      os << "rows " << rows << '\n';
    }
    return kExitOk;
  }
  if (a.problem == "plate-bend") {
    const ElasticityMatrix6 c = load_3d(a.material);
    const PlateBendingSolution s = make_plate(a, c);
    os << "alpha\n";
    for (int i = 1; i <= 3; ++i) {
      for (int j = 1; j <= 6; ++j) {
        if (s.alpha(i, j) != 0.0) os << "  alpha" << i << j << ' ' << fmt(s.alpha(i, j)) << '\n';
      }
    }
    os << "2 w3(z=0) = " << fmt(s.alpha(3, 1)) << " x^2 + " << fmt(s.alpha(3, 2)) << " y^2 + "
       << fmt(2.0 * s.alpha(3, 4)) << " xy\n";
    if (!a.out.empty()) {
      const auto rows =
          sample_and_export(a.out, s.field(), export_grid(a, default_export_grid(s), 0.0).points(), a.conventional);
      os << "rows " << rows << '\n';
    }
    return kExitOk;
  }

  const PlaneProblem pr = make_plane(a);
  const PlaneMaterial& m = pr.material;
  const double R = pr.radius;
  os << "lambda0 " << fmt(m.lambda0()) << "\nmu0 " << fmt(m.mu0()) << "\nmu " << fmt(m.mu()) << '\n';
  if (pr.kind == PlaneProblemKind::Washer) {
    const PolarDisplacement d = pr.displacement_polar(R, 0.0);
    os << "u_r(R) " << fmt(d.u_r) << "\nu_theta(R) " << fmt(d.u_theta) << "\nsig_rr " << fmt(-pr.load)
       << "\nsig_tt " << fmt(-pr.load) << '\n';
  } else if (pr.kind == PlaneProblemKind::HoleBiaxial) {
    const PolarDisplacement d = pr.displacement_polar(R, 0.0);
    os << "u_r(R) " << fmt(d.u_r) << "\nu_theta(R) " << fmt(d.u_theta) << "\nsig_tt(R) "
       << fmt(pr.stress_polar(R, 0.0).s_tt) << '\n';
  } else {
    const PolarDisplacement d0 = pr.displacement_polar(R, 0.0);
    os << "u_r(R,0) " << fmt(d0.u_r) << "\nu_theta(R,pi/4) " << fmt(pr.displacement_polar(R, 0.25 * std::numbers::pi).u_theta)
       << "\nsig_tt(R,pi/2) " << fmt(pr.stress_polar(R, 0.5 * std::numbers::pi).s_tt) << '\n';
  }
  if (!a.out.empty()) {
    const double excl = pr.kind == PlaneProblemKind::Washer ? 0.0 : R;
    const auto rows = sample_and_export(a.out, pr, export_grid(a, default_export_grid(pr), excl).points());
    os << "rows " << rows << '\n';
  }
  return kExitOk;
}

int run_verify(const ProblemArgs& a) {
  VerifyOptions opt;
  if (a.step_opt->count()) opt.h = a.step;
  if (a.tol_opt->count()) {
    if (!(a.tol > 0.0)) throw UsageError("--tol must be positive");
    opt.tol = a.tol;
  }
  if (a.grid_opt->count()) opt.grid = parse_grid_spec(a.grid);

  ResidualReport rep;
  if (a.problem == "torsion") {
    const ElasticityMatrix6 c = load_3d(a.material);
    rep = verify(make_torsion(a, c), c, opt);
  } else if (a.problem == "plate-bend") {
    const ElasticityMatrix6 c = load_3d(a.material);
    rep = verify(make_plate(a, c), c, opt);
  } else {
    const PlaneProblem pr = make_plane(a);
    if (opt.grid && pr.kind != PlaneProblemKind::Washer && opt.grid->exclusion_radius == 0.0)
      opt.grid->exclusion_radius = pr.radius;
    rep = verify(pr, opt);
  }
  std::cout << rep.to_text();
  return rep.passed() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"asymel: rotationally invariant asymmetric elasticity"};
  // "-h" is left free: `--h` is the finite-difference step of `verify`.
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1);

  std::string material;
  auto* check = app.add_subcommand("check-material", "invariance, Sylvester and inversion report for a material");
  check->add_option("-m,--material", material, "material file")->required();

  std::vector<double> angles = kDefaultSampleAngles;
  double tol = kDefaultNullspaceTolerance;
  auto* derive = app.add_subcommand("derive-invariance", "derive the invariant stiffness family numerically");
  derive->add_option("--angles", angles, "comma-separated sample angles (rad)")->delimiter(',');
  derive->add_option("--tol", tol, "relative singular-value cutoff")->capture_default_str();

  ProblemArgs solve_args;
  auto* solve = app.add_subcommand("solve", "evaluate a closed-form solution, optionally export CSV");
  add_problem_options(solve, solve_args, false);

  ProblemArgs verify_args;
  auto* ver = app.add_subcommand("verify", "finite-difference residual checks of a solution");
  add_problem_options(ver, verify_args, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*check) return run_check_material(material);
    if (*derive) return run_derive_invariance(angles, tol);
    if (*solve) return run_solve(solve_args);
    if (*ver) return run_verify(verify_args);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
