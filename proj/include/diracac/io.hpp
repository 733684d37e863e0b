#pragma once

#include <ostream>
#include <span>
#include <string>

#include "diracac/currents.hpp"
#include "diracac/oracle.hpp"
#include "diracac/spectrum.hpp"
#include "diracac/spinor.hpp"

namespace diracac {

/// Locale-independent decimal rendering with 17 significant digits
/// (round-trips every double exactly).
std::string format_double(double v);

std::string background_kind_name(BackgroundKind kind);

// Level tables: CSV columns n,l,s,k,eta,chi,mu_lambda,zeta,beta,energy and a
// JSON document carrying the same fields per level.
void write_level_table_csv(std::ostream& os, const LevelTable& table);
void write_level_table_json(std::ostream& os, const LevelTable& table);

void write_validation_report_json(std::ostream& os,
                                  std::span<const ValidationPoint> points);

void write_current_report_json(std::ostream& os, const Background& bg,
                               const PhysicalParams& params,
                               const CurrentReport& report);

// Sampled spinor: CSV of rho and Re/Im of the four components (gauge and
// angular phases applied), plus a one-object JSON header.
void write_spinor_csv(std::ostream& os, const SpinorField& field);
std::string spinor_header_json(const SpinorField& field, double residual);

}  // namespace diracac
