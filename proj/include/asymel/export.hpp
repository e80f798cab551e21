#pragma once

// CSV export of sampled fields. Numbers use 17 significant digits, rows
// follow GridSpec::points() order, lines end in LF.

#include <cstdio>
#include <fstream>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "asymel/errors.hpp"
#include "asymel/grid.hpp"
#include "asymel/solutions2d.hpp"
#include "asymel/solutions3d.hpp"
#include "asymel/voigt.hpp"

namespace asymel {

namespace detail {

inline void put_number(std::string& line, double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  if (!line.empty()) line += ',';
  line += buf;
}

inline void put_row(std::ostream& os, std::string& line) {
  line += '\n';
  os << line;
  line.clear();
}

}  // namespace detail

/// Columns: x,y,z,r,theta,w1,w2,w3, six strains, six stresses. Strain and
/// stress follow slot order, or (11,22,33,23,31,12) when `conventional`.
inline std::size_t write_csv(std::ostream& os, const Field3D& f, const std::vector<GridPoint>& pts,
                             bool conventional = false) {
  static const char* kSlotHeader = "e1,e2,e3,e4,e5,e6,s1,s2,s3,s4,s5,s6";
  static const char* kConvHeader = "eps11,eps22,eps33,gam23,gam31,gam12,sig11,sig22,sig33,sig23,sig31,sig12";
  os << "x,y,z,r,theta,w1,w2,w3," << (conventional ? kConvHeader : kSlotHeader) << '\n';
  std::string line;
  for (const GridPoint& p : pts) {
    if (!f.contains(p.x, p.y, p.z)) throw DomainViolation("grid point lies outside the problem domain");
    const Vector3 w = f.displacement(p.x, p.y, p.z);
    Vector6 e = f.strain(p.x, p.y, p.z).values;
    Vector6 s = f.stress(p.x, p.y, p.z).values;
    if (conventional) {
      e = to_conventional_order(e);
      s = to_conventional_order(s);
    }
    for (double v : {p.x, p.y, p.z, p.r, p.theta, w(0), w(1), w(2)}) detail::put_number(line, v);
    for (int i = 0; i < 6; ++i) detail::put_number(line, e(i));
    for (int i = 0; i < 6; ++i) detail::put_number(line, s(i));
    detail::put_row(os, line);
  }
  if (!os) throw IoFailure("CSV stream write failed");
  return pts.size();
}

/// Columns: x,y,r,theta,u,v,u_r,u_theta,eps11,eps22,gam12,sig11,sig22,sig12,sig_rr,sig_tt,sig_rt.
inline std::size_t write_csv(std::ostream& os, const PlaneProblem& pr, const std::vector<GridPoint>& pts) {
  os << "x,y,r,theta,u,v,u_r,u_theta,eps11,eps22,gam12,sig11,sig22,sig12,sig_rr,sig_tt,sig_rt\n";
  std::string line;
  for (const GridPoint& p : pts) {
    if (!pr.contains(p.x, p.y)) throw DomainViolation("grid point lies outside the problem domain");
    const CartesianDisplacement d = pr.displacement(p.x, p.y);
    const PolarDisplacement polar = pr.displacement_polar(p.r, p.theta);
    const PlaneStress s = pr.stress(p.x, p.y);
    const PlaneStrain e = strain_from_stress_2d(pr.material, s);
    const PolarStress sp = to_polar(s, p.theta);
    for (double v : {p.x, p.y, p.r, p.theta, d.u, d.v, polar.u_r, polar.u_theta, e.e1, e.e2, e.e3, s.s11, s.s22,
                     s.s12, sp.s_rr, sp.s_tt, sp.s_rt})
      detail::put_number(line, v);
    detail::put_row(os, line);
  }
  if (!os) throw IoFailure("CSV stream write failed");
  return pts.size();
}

/// Writes the CSV to `path`; returns the number of data rows.
template <class... Args>
std::size_t sample_and_export(const std::string& path, Args&&... args) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoFailure("cannot open '" + path + "' for writing");
  const std::size_t rows = write_csv(out, std::forward<Args>(args)...);
  out.flush();
  if (!out) throw IoFailure("write to '" + path + "' failed");
  return rows;
}

}  // namespace asymel
