#ifndef LGC_FIELD_HPP
#define LGC_FIELD_HPP

#include <complex>
#include <functional>
#include <vector>

namespace lgc {

using Complex = std::complex<double>;

// Centered square sampling window. The grid spans [-L, L)^2 with cell-centered
// coordinates q_i = -L + (i + 0.5) * spacing, so r = 0 is never sampled
// exactly (several states carry a vortex there).
struct GridSpec {
    int n = 0;             // samples per axis, even, >= 16
    double half_width = 0; // L

    double spacing() const { return 2.0 * half_width / n; }
    double coord(int i) const { return -half_width + (i + 0.5) * spacing(); }
    void validate() const;
    bool operator==(const GridSpec&) const = default;
};

// Row-major complex samples, data[iy * n + ix] at (q_x(ix), q_y(iy)).
struct ComplexField {
    GridSpec spec;
    std::vector<Complex> data;

    Complex& at(int ix, int iy) { return data[static_cast<size_t>(iy) * spec.n + ix]; }
    const Complex& at(int ix, int iy) const { return data[static_cast<size_t>(iy) * spec.n + ix]; }
};

struct ScalarField {
    GridSpec spec;
    std::vector<double> data;

    double& at(int ix, int iy) { return data[static_cast<size_t>(iy) * spec.n + ix]; }
    const double& at(int ix, int iy) const { return data[static_cast<size_t>(iy) * spec.n + ix]; }
};

ComplexField make_field(const GridSpec& spec, Complex fill = {});
ScalarField make_scalar_field(const GridSpec& spec, double fill = 0.0);

// Samples evaluator(r, phi) at every cell center, parallel by row. The result
// is deterministic for a given evaluator regardless of worker count.
// Evaluator failures are reported with the pixel index attached.
ComplexField sample(const std::function<Complex(double r, double phi)>& evaluator,
                    const GridSpec& spec);

// |psi|^2 pointwise.
ScalarField intensity(const ComplexField& f);

// arg(psi) in (-pi, pi]; exactly-zero samples map to phase 0.
ScalarField phase(const ComplexField& f);

} // namespace lgc

#endif
