#include "lgc/field.hpp"
#include "lgc/parallel.hpp"

#include <atomic>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <string>

namespace lgc {

void GridSpec::validate() const {
    if (n < 16 || n % 2 != 0)
        throw std::invalid_argument("GridSpec: n must be even and >= 16");
    if (!(half_width > 0.0))
        throw std::invalid_argument("GridSpec: half_width must be > 0");
}

ComplexField make_field(const GridSpec& spec, Complex fill) {
    spec.validate();
    return {spec, std::vector<Complex>(static_cast<size_t>(spec.n) * spec.n, fill)};
}

ScalarField make_scalar_field(const GridSpec& spec, double fill) {
    spec.validate();
    return {spec, std::vector<double>(static_cast<size_t>(spec.n) * spec.n, fill)};
}

ComplexField sample(const std::function<Complex(double, double)>& evaluator,
                    const GridSpec& spec) {
    ComplexField out = make_field(spec);
    const int n = spec.n;
    std::mutex error_mutex;
    std::string first_error;
    std::atomic<bool> failed{false};
    parallel_for(0, n, [&](int iy) {
        const double qy = spec.coord(iy);
        for (int ix = 0; ix < n; ++ix) {
            const double qx = spec.coord(ix);
            const double r = std::hypot(qx, qy);
            const double phi = std::atan2(qy, qx);
            try {
                out.at(ix, iy) = evaluator(r, phi);
            } catch (const std::exception& e) {
                std::scoped_lock lock(error_mutex);
                if (!failed.exchange(true))
                    first_error = "sample: evaluator failed at pixel (" + std::to_string(ix)
                                  + ", " + std::to_string(iy) + "): " + e.what();
                return;
            }
        }
    });
    if (failed)
        throw std::runtime_error(first_error);
    return out;
}

ScalarField intensity(const ComplexField& f) {
    ScalarField out{f.spec, std::vector<double>(f.data.size())};
    for (size_t i = 0; i < f.data.size(); ++i)
        out.data[i] = std::norm(f.data[i]);
    return out;
}

ScalarField phase(const ComplexField& f) {
    ScalarField out{f.spec, std::vector<double>(f.data.size())};
    for (size_t i = 0; i < f.data.size(); ++i) {
        const Complex& z = f.data[i];
        double a = (z == 0.0) ? 0.0 : std::atan2(z.imag(), z.real());
        if (a == -M_PI)
            a = M_PI; // range is (-pi, pi]
        out.data[i] = a;
    }
    return out;
}

} // namespace lgc
