#include "diracac/io.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace diracac {

std::string format_double(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof buf, v,
                                   std::chars_format::general, 17);
    if (res.ec != std::errc{})
        throw std::runtime_error("format_double: conversion failed");
    return std::string(buf, res.ptr);
}

std::string background_kind_name(BackgroundKind kind) {
    switch (kind) {
        case BackgroundKind::Minkowski: return "minkowski";
        case BackgroundKind::CosmicString: return "string";
        case BackgroundKind::CosmicDislocation: return "dislocation";
    }
    return "unknown";
}

namespace {

void write_level_fields_json(std::ostream& os, const LevelTable& table,
                             const EnergyLevel& lvl) {
    os << "{\"n\": " << lvl.qn.n << ", \"l\": " << lvl.qn.l
       << ", \"s\": " << lvl.qn.s
       << ", \"k\": " << format_double(table.params.k)
       << ", \"eta\": " << format_double(table.bg.eta)
       << ", \"chi\": " << format_double(table.bg.chi)
       << ", \"mu_lambda\": " << format_double(table.params.mu_lambda)
       << ", \"zeta\": " << format_double(lvl.zeta)
       << ", \"beta\": " << format_double(lvl.beta)
       << ", \"energy\": " << format_double(lvl.energy) << "}";
}

void write_background_json(std::ostream& os, const Background& bg) {
    os << "{\"kind\": \"" << background_kind_name(bg.kind)
       << "\", \"eta\": " << format_double(bg.eta)
       << ", \"chi\": " << format_double(bg.chi) << "}";
}

void write_params_json(std::ostream& os, const PhysicalParams& p) {
    os << "{\"mass\": " << format_double(p.mass)
       << ", \"omega\": " << format_double(p.omega)
       << ", \"mu_lambda\": " << format_double(p.mu_lambda)
       << ", \"k\": " << format_double(p.k) << "}";
}

}  // namespace

void write_level_table_csv(std::ostream& os, const LevelTable& table) {
    os << "n,l,s,k,eta,chi,mu_lambda,zeta,beta,energy\n";
    for (const EnergyLevel& lvl : table.levels) {
        os << lvl.qn.n << ',' << lvl.qn.l << ',' << lvl.qn.s << ','
           << format_double(table.params.k) << ','
           << format_double(table.bg.eta) << ','
           << format_double(table.bg.chi) << ','
           << format_double(table.params.mu_lambda) << ','
           << format_double(lvl.zeta) << ',' << format_double(lvl.beta) << ','
           << format_double(lvl.energy) << '\n';
    }
}

void write_level_table_json(std::ostream& os, const LevelTable& table) {
    os << "{\n  \"background\": ";
    write_background_json(os, table.bg);
    os << ",\n  \"params\": ";
    write_params_json(os, table.params);
    os << ",\n  \"levels\": [";
    for (std::size_t i = 0; i < table.levels.size(); ++i) {
        os << (i ? ",\n    " : "\n    ");
        write_level_fields_json(os, table, table.levels[i]);
    }
    os << (table.levels.empty() ? "]" : "\n  ]") << "\n}\n";
}

void write_validation_report_json(std::ostream& os,
                                  std::span<const ValidationPoint> points) {
    double max_rel = 0.0;
    bool all_pass = true;
    for (const ValidationPoint& p : points) {
        max_rel = std::max(max_rel, p.rel_err);
        all_pass = all_pass && p.pass;
    }
    os << "{\n  \"all_pass\": " << (all_pass ? "true" : "false")
       << ",\n  \"max_rel_err\": " << format_double(max_rel)
       << ",\n  \"points\": [";
    for (std::size_t i = 0; i < points.size(); ++i) {
        const ValidationPoint& p = points[i];
        os << (i ? ",\n    " : "\n    ") << "{\"zeta_over_eta\": "
           << format_double(p.zeta_over_eta)
           << ", \"m_omega\": " << format_double(p.m_omega)
           << ", \"j\": " << p.j
           << ", \"beta_analytic\": " << format_double(p.beta_analytic)
           << ", \"beta_oracle\": " << format_double(p.beta_oracle)
           << ", \"rel_err\": " << format_double(p.rel_err)
           << ", \"tol\": " << format_double(p.tol)
           << ", \"pass\": " << (p.pass ? "true" : "false")
           << ", \"grids\": [" << p.coarse_points << ", " << p.fine_points
           << "]}";
    }
    os << (points.empty() ? "]" : "\n  ]") << "\n}\n";
}

void write_current_report_json(std::ostream& os, const Background& bg,
                               const PhysicalParams& params,
                               const CurrentReport& report) {
    os << "{\n  \"mu_lambda\": " << format_double(report.mu_lambda)
       << ",\n  \"background\": ";
    write_background_json(os, bg);
    os << ",\n  \"params\": ";
    write_params_json(os, params);
    os << ",\n  \"levels\": [";
    for (std::size_t i = 0; i < report.contributions.size(); ++i) {
        const LevelCurrent& row = report.contributions[i];
        os << (i ? ",\n    " : "\n    ") << "{\"n\": " << row.qn.n
           << ", \"l\": " << row.qn.l << ", \"s\": " << row.qn.s
           << ", \"zeta\": " << format_double(row.zeta)
           << ", \"energy\": " << format_double(row.energy)
           << ", \"contribution\": " << format_double(row.contribution) << "}";
    }
    os << (report.contributions.empty() ? "]" : "\n  ]")
       << ",\n  \"excluded\": [";
    for (std::size_t i = 0; i < report.excluded.size(); ++i) {
        const QuantumNumbers& qn = report.excluded[i];
        os << (i ? ", " : "") << "{\"n\": " << qn.n << ", \"l\": " << qn.l
           << ", \"s\": " << qn.s << "}";
    }
    os << "],\n  \"total\": " << format_double(report.total) << "\n}\n";
}

void write_spinor_csv(std::ostream& os, const SpinorField& field) {
    os << "rho,re1,im1,re2,im2,re3,im3,re4,im4\n";
    const double h = field.grid.rho_max / (field.grid.points + 1);
    for (int i = 0; i < field.grid.points; ++i) {
        os << format_double((i + 1) * h);
        for (int c = 0; c < 4; ++c) {
            const std::complex<double> v =
                field.comps[c][i] * component_phase(field, c);
            os << ',' << format_double(v.real()) << ','
               << format_double(v.imag());
        }
        os << '\n';
    }
}

std::string spinor_header_json(const SpinorField& field, double residual) {
    std::ostringstream os;
    os << "{\"n\": " << field.qn.n << ", \"l\": " << field.qn.l
       << ", \"s\": " << field.qn.s << ", \"background\": ";
    write_background_json(os, field.bg);
    os << ", \"params\": ";
    write_params_json(os, field.params);
    os << ", \"zeta\": " << format_double(field.zeta)
       << ", \"energy\": " << format_double(field.energy)
       << ", \"norm_constant\": " << format_double(field.norm_constant)
       << ", \"residual\": " << format_double(residual)
       << ", \"grid\": {\"rho_max\": " << format_double(field.grid.rho_max)
       << ", \"points\": " << field.grid.points << "}"
       << ", \"at\": {\"t\": " << format_double(field.at.t)
       << ", \"phi\": " << format_double(field.at.phi)
       << ", \"z\": " << format_double(field.at.z) << "}}";
    return os.str();
}

}  // namespace diracac
