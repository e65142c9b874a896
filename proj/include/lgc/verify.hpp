#ifndef LGC_VERIFY_HPP
#define LGC_VERIFY_HPP

#include "lgc/analysis.hpp"

#include <string>
#include <vector>

namespace lgc {

// Property-lattice verification. Group names: specfun, norms, limits,
// rotation, displacement, waist, vortex, bgring, fourframe, pipeline.
struct VerifyOptions {
    std::vector<std::string> only; // empty = all groups
    double inject_r0_error = 0.0;  // test hook: perturbs the displacement reference
    int norm_grid_n = 1024;
    int pipeline_grid_n = 512;
};

std::vector<ReportRow> run_verification(const VerifyOptions& options);

// Lattice helpers shared with the acceptance suite.
std::vector<ReportRow> verify_specfun();
std::vector<ReportRow> verify_norms(int grid_n);
std::vector<ReportRow> verify_limits();
std::vector<ReportRow> verify_rotation();
std::vector<ReportRow> verify_displacement(double inject_error = 0.0);
std::vector<ReportRow> verify_waist();
std::vector<ReportRow> verify_vortex();
std::vector<ReportRow> verify_bg_ring();
std::vector<ReportRow> verify_four_frame();
std::vector<ReportRow> verify_pipeline(int grid_n);

// Midpoint-rule metrics of a state sampled on the fly (no field retained).
FieldMetrics state_metrics(const StateSpec& spec, const GridSpec& grid);

} // namespace lgc

#endif
