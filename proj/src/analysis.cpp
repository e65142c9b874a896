#include "lgc/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace lgc {

FieldMetrics metrics(const ComplexField& f) {
    f.spec.validate();
    const int n = f.spec.n;
    const double cell = f.spec.spacing() * f.spec.spacing();
    double norm = 0.0, cx = 0.0, cy = 0.0, r1 = 0.0, r2 = 0.0;
    for (int iy = 0; iy < n; ++iy) {
        const double qy = f.spec.coord(iy);
        for (int ix = 0; ix < n; ++ix) {
            const double qx = f.spec.coord(ix);
            const double w = std::norm(f.at(ix, iy));
            const double rsq = qx * qx + qy * qy;
            norm += w;
            cx += qx * w;
            cy += qy * w;
            r1 += std::sqrt(rsq) * w;
            r2 += rsq * w;
        }
    }
    if (norm == 0.0)
        throw std::domain_error("metrics: zero-norm field");
    FieldMetrics out;
    out.norm = norm * cell;
    out.centroid_x = cx / norm;
    out.centroid_y = cy / norm;
    out.radial_centroid = r1 / norm;
    out.second_radial_moment = r2 / norm;
    return out;
}

namespace {

void require_same_spec(const ComplexField& a, const ComplexField& b, const char* who) {
    if (!(a.spec == b.spec))
        throw std::invalid_argument(std::string(who) + ": mismatched grid specs");
}

Complex bilinear(const ComplexField& f, double qx, double qy) {
    const int n = f.spec.n;
    const double d = f.spec.spacing();
    // fractional index of the cell-centered sample lattice
    const double fx = (qx + f.spec.half_width) / d - 0.5;
    const double fy = (qy + f.spec.half_width) / d - 0.5;
    const int ix = static_cast<int>(std::floor(fx));
    const int iy = static_cast<int>(std::floor(fy));
    if (ix < 0 || iy < 0 || ix + 1 >= n || iy + 1 >= n)
        throw std::domain_error("winding_number: loop leaves the grid");
    const double tx = fx - ix;
    const double ty = fy - iy;
    const Complex c00 = f.at(ix, iy), c10 = f.at(ix + 1, iy);
    const Complex c01 = f.at(ix, iy + 1), c11 = f.at(ix + 1, iy + 1);
    for (const Complex& c : {c00, c10, c01, c11})
        if (c == 0.0)
            throw std::domain_error("winding_number: loop crosses a zero-amplitude pixel");
    return c00 * ((1 - tx) * (1 - ty)) + c10 * (tx * (1 - ty)) + c01 * ((1 - tx) * ty)
           + c11 * (tx * ty);
}

} // namespace

double l2_distance(const ComplexField& a, const ComplexField& b) {
    require_same_spec(a, b, "l2_distance");
    double acc = 0.0;
    for (size_t i = 0; i < a.data.size(); ++i)
        acc += std::norm(a.data[i] - b.data[i]);
    return std::sqrt(acc) * a.spec.spacing();
}

double correlation(const ComplexField& a, const ComplexField& b) {
    require_same_spec(a, b, "correlation");
    Complex inner = 0.0;
    double na = 0.0, nb = 0.0;
    for (size_t i = 0; i < a.data.size(); ++i) {
        inner += std::conj(a.data[i]) * b.data[i];
        na += std::norm(a.data[i]);
        nb += std::norm(b.data[i]);
    }
    if (na == 0.0 || nb == 0.0)
        throw std::domain_error("correlation: zero field");
    return std::min(1.0, std::abs(inner) / std::sqrt(na * nb));
}

int winding_number(const ComplexField& f, double radius) {
    f.spec.validate();
    const double d = f.spec.spacing();
    if (!(radius >= 3.0 * d))
        throw std::invalid_argument("winding_number: radius must be at least 3 grid spacings");
    const int samples = std::max(64, static_cast<int>(std::ceil(2.0 * M_PI * radius / d)));
    double acc = 0.0;
    double prev = std::arg(bilinear(f, radius, 0.0));
    for (int i = 1; i <= samples; ++i) {
        const double ang = 2.0 * M_PI * i / samples;
        const Complex z = bilinear(f, radius * std::cos(ang), radius * std::sin(ang));
        if (z == 0.0)
            throw std::domain_error("winding_number: zero amplitude on the loop");
        const double cur = std::arg(z);
        acc += std::remainder(cur - prev, 2.0 * M_PI);
        prev = cur;
    }
    return static_cast<int>(std::lround(acc / (2.0 * M_PI)));
}

double rotation_residual(const StateSpec& spec, double delta, double rate) {
    validate(spec);
    const PointEvaluator before = make_evaluator(spec);
    const PointEvaluator after = make_evaluator(evolve(spec, delta));
    // probe lattice dense enough to catch angular structure, light enough
    // to stay cheap for the series families
    const int nr = 24, nphi = 48;
    double worst = 0.0;
    for (int ir = 0; ir < nr; ++ir) {
        const double r = 0.15 + 0.25 * ir;
        for (int ip = 0; ip < nphi; ++ip) {
            const double phi = -M_PI + 2.0 * M_PI * ip / nphi;
            const double a = std::norm(after(r, phi));
            const double b = std::norm(before(r, phi - rate * delta));
            worst = std::max(worst, std::abs(a - b));
        }
    }
    return worst;
}

void write_csv_header(std::ostream& os) {
    os << "family,parameters,metric,value,reference,abs_error,pass\n";
}

void write_csv_row(std::ostream& os, const ReportRow& row) {
    os << row.family << ',' << row.parameters << ',' << row.metric << ',' << row.value << ','
       << row.reference << ',' << row.abs_error << ',' << (row.pass ? "pass" : "fail") << '\n';
}

} // namespace lgc
