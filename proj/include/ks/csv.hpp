#pragma once

#include <string>
#include <vector>

#include "ks/interface.hpp"
#include "ks/pme.hpp"
#include "ks/trajectory.hpp"
#include "ks/verify.hpp"

namespace ks::csv {

/// One fields_####.csv per frame with columns t, x, u, v, dxv, w
/// (w = (m/(m-1)) (u+eps)^{m-1}). Returns the file names written.
std::vector<std::string> write_fields(const std::string& dir, const Trajectory& traj);

/// diagnostics.csv with columns t, mass, max_u, lip_w, sup_dxv, linf_ok
/// (linf_ok: 1 pass, 0 fail, -1 outside window).
std::string write_diagnostics(const std::string& dir, const Trajectory& traj);

/// interfaces.csv with columns t, xi, Xi, cone_mass, interior_max_u.
std::string write_interfaces(const std::string& dir, const Trajectory& traj,
                             const interface::InterfacePair& pair,
                             const interface::VacuumReport& vac);

/// pme_error.csv with columns t, l1_error, support_edge_numeric,
/// support_edge_exact.
std::string write_error_curve(const std::string& dir, const pme::ErrorCurve& curve);

/// Minimal gnuplot script referencing the CSVs above.
std::string write_gnuplot_stub(const std::string& dir, int n_frames);

/// verdicts.json (array of claim objects) plus one flat text line per claim
/// on the returned string for terminal output.
std::string write_verdicts(const std::string& dir,
                           const std::vector<verify::ClaimResult>& results,
                           const verify::Tolerances& tol);

void ensure_dir(const std::string& dir);

} // namespace ks::csv
