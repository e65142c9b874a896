#ifndef LGC_ANALYSIS_HPP
#define LGC_ANALYSIS_HPP

#include "lgc/field.hpp"
#include "lgc/states.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace lgc {

// Midpoint-rule moments of |psi|^2.
struct FieldMetrics {
    double norm = 0.0;              // integral of |psi|^2
    double centroid_x = 0.0;
    double centroid_y = 0.0;
    double radial_centroid = 0.0;   // <r>
    double second_radial_moment = 0.0; // <r^2>
};

FieldMetrics metrics(const ComplexField& f); // throws on a zero-norm field

// Grid-weighted l2 distance ||a - b||_2 * spacing.
double l2_distance(const ComplexField& a, const ComplexField& b);

// |<a,b>| / (||a|| ||b||) in [0, 1]; invariant under global phases.
double correlation(const ComplexField& a, const ComplexField& b);

// Topological charge: wrapped phase differences summed around a circle of
// the given radius (bilinear interpolation of the complex field), over 2 pi.
// The loop must stay clear of zero-amplitude pixels.
int winding_number(const ComplexField& f, double radius);

// max over a probe grid of | |psi_{theta+delta}|^2(r,phi) -
// |psi_theta|^2(r, phi - rate*delta) |, both sides evaluated analytically.
double rotation_residual(const StateSpec& spec, double delta, double rate);

// One row of the verification report.
struct ReportRow {
    std::string family;
    std::string parameters;
    std::string metric;
    double value = 0.0;
    double reference = 0.0;
    double abs_error = 0.0;
    bool pass = false;
};

void write_csv_header(std::ostream& os);
void write_csv_row(std::ostream& os, const ReportRow& row);

} // namespace lgc

#endif
