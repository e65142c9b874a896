#include "lgc/holography.hpp"
#include "lgc/dft.hpp"
#include "lgc/parallel.hpp"

#include <cmath>
#include <stdexcept>

namespace lgc {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

double wrap_two_pi(double x) {
    double v = std::fmod(x, kTwoPi);
    if (v < 0.0)
        v += kTwoPi;
    return v == kTwoPi ? 0.0 : v;
}

double max_abs(const ComplexField& f) {
    double m = 0.0;
    for (const Complex& z : f.data)
        m = std::max(m, std::abs(z));
    return m;
}

} // namespace

void HologramSpec::validate() const {
    if (carrier1_x == carrier2_x && carrier1_y == carrier2_y)
        throw std::invalid_argument("HologramSpec: carriers must differ");
    if (!(filter_radius > 0.0))
        throw std::invalid_argument("HologramSpec: filter_radius must be > 0");
    if (std::hypot(filter_center_x, filter_center_y) <= filter_radius)
        throw std::invalid_argument("HologramSpec: filter disc must exclude the zero order");
    if (!(reference_amplitude > 0.0))
        throw std::invalid_argument("HologramSpec: reference_amplitude must be > 0");
}

HologramSpec default_hologram_spec(const GridSpec& grid) {
    grid.validate();
    const double bin = 1.0 / (2.0 * grid.half_width);
    HologramSpec h;
    h.carrier1_x = grid.n / 8 * bin;
    h.carrier2_x = -(grid.n / 8) * bin;
    h.filter_center_x = h.carrier1_x;
    h.filter_radius = grid.n / 16 * bin;
    return h;
}

PhaseMask encode(const ComplexField& target, const HologramSpec& h, double reference_shift) {
    target.spec.validate();
    h.validate();
    const double peak = max_abs(target);
    if (peak == 0.0)
        throw std::domain_error("encode: all-zero target");
    const int n = target.spec.n;
    PhaseMask mask{target.spec, std::vector<double>(target.data.size())};
    parallel_for(0, n, [&](int iy) {
        const double qy = target.spec.coord(iy);
        for (int ix = 0; ix < n; ++ix) {
            const double qx = target.spec.coord(ix);
            const Complex psi = target.at(ix, iy) / peak;
            const double carrier1 = kTwoPi * (h.carrier1_x * qx + h.carrier1_y * qy);
            double value;
            if (h.encoding == Encoding::PhaseOfSum) {
                const double carrier2 = kTwoPi * (h.carrier2_x * qx + h.carrier2_y * qy);
                const Complex s = psi * std::polar(1.0, carrier1)
                                  + h.reference_amplitude
                                        * std::polar(1.0, carrier2 - reference_shift);
                value = wrap_two_pi(s == 0.0 ? 0.0 : std::arg(s));
            } else {
                // depth modulation of the blazed carrier; the wrapped phase is
                // taken in (-pi, pi] so the first-order coefficient stays real
                const double wrapped = std::remainder(std::arg(psi) + carrier1, kTwoPi);
                value = wrap_two_pi(std::abs(psi) * wrapped);
            }
            mask.values[static_cast<size_t>(iy) * n + ix] = value;
        }
    });
    return mask;
}

ComplexField propagate_first_order(const PhaseMask& mask, const HologramSpec& h) {
    mask.spec.validate();
    h.validate();
    const int n = mask.spec.n;
    ComplexField field = make_field(mask.spec);
    for (size_t i = 0; i < mask.values.size(); ++i)
        field.data[i] = std::polar(1.0, mask.values[i]);

    ComplexField spectrum = dft2(field, DftDirection::Forward);

    const double per_bin = 1.0 / (2.0 * mask.spec.half_width);
    const double cx = h.filter_center_x / per_bin; // disc center in bins
    const double cy = h.filter_center_y / per_bin;
    const double rad = h.filter_radius / per_bin;
    const int half = n / 2;
    size_t kept = 0;
    for (int iy = 0; iy < n; ++iy) {
        const double by = iy - half;
        for (int ix = 0; ix < n; ++ix) {
            const double bx = ix - half;
            if ((bx - cx) * (bx - cx) + (by - cy) * (by - cy) <= rad * rad)
                ++kept;
            else
                spectrum.at(ix, iy) = 0.0;
        }
    }
    if (kept == 0)
        throw std::domain_error("propagate_first_order: filter disc is empty on this grid");

    // roll the selected order to the spectral center (carrier removal)
    const int sx = static_cast<int>(std::lround(cx));
    const int sy = static_cast<int>(std::lround(cy));
    ComplexField rolled = make_field(mask.spec);
    for (int iy = 0; iy < n; ++iy)
        for (int ix = 0; ix < n; ++ix)
            rolled.at(ix, iy) = spectrum.at(((ix + sx) % n + n) % n, ((iy + sy) % n + n) % n);

    return dft2(rolled, DftDirection::Inverse);
}

ScalarField interferogram(const ComplexField& obj, const ComplexField& ref, double shift) {
    if (!(obj.spec == ref.spec))
        throw std::invalid_argument("interferogram: mismatched grid specs");
    ScalarField out{obj.spec, std::vector<double>(obj.data.size())};
    const Complex rot = std::polar(1.0, -shift);
    for (size_t i = 0; i < obj.data.size(); ++i)
        out.data[i] = std::norm(obj.data[i] + ref.data[i] * rot);
    return out;
}

ScalarField four_frame(const ScalarField& i1, const ScalarField& i2, const ScalarField& i3,
                       const ScalarField& i4, ScalarField* validity) {
    if (!(i1.spec == i2.spec) || !(i1.spec == i3.spec) || !(i1.spec == i4.spec))
        throw std::invalid_argument("four_frame: mismatched grid specs");
    ScalarField out{i1.spec, std::vector<double>(i1.data.size())};
    if (validity)
        *validity = ScalarField{i1.spec, std::vector<double>(i1.data.size(), 1.0)};
    for (size_t i = 0; i < out.data.size(); ++i) {
        const double num = i4.data[i] - i2.data[i];
        const double den = i1.data[i] - i3.data[i];
        if (num == 0.0 && den == 0.0) {
            out.data[i] = 0.0;
            if (validity)
                validity->data[i] = 0.0;
        } else {
            double a = std::atan2(num, den);
            if (a == -M_PI)
                a = M_PI;
            out.data[i] = a;
        }
    }
    return out;
}

PipelineResult run_pipeline(const ComplexField& target, const HologramSpec& h) {
    target.spec.validate();
    h.validate();
    const double peak = max_abs(target);
    if (peak == 0.0)
        throw std::domain_error("run_pipeline: all-zero target");

    PipelineResult out;
    const std::array<double, 4> shifts = {0.0, 0.5 * M_PI, M_PI, 1.5 * M_PI};

    // analytic reference in the demodulated frame: a constant wave whose
    // amplitude matches the recovered beam's rms level
    if (h.encoding == Encoding::PhaseOfSum) {
        // the frame shifts live inside the hologram, one mask per frame
        for (int f = 0; f < 4; ++f)
            out.masks[f] = encode(target, h, shifts[f]);
    } else {
        PhaseMask m = encode(target, h);
        for (int f = 0; f < 4; ++f)
            out.masks[f] = m;
    }

    std::array<ComplexField, 4> orders;
    for (int f = 0; f < 4; ++f)
        orders[f] = propagate_first_order(out.masks[f], h);
    out.recovered = orders[0];

    double rms = 0.0;
    size_t count = 0;
    for (const Complex& z : out.recovered.data) {
        rms += std::norm(z);
        ++count;
    }
    const double ref_level = std::sqrt(rms / count) * 4.0;
    ComplexField ref = make_field(target.spec, Complex(ref_level, 0.0));

    for (int f = 0; f < 4; ++f)
        out.frames[f] = interferogram(orders[f], ref, shifts[f]);
    out.retrieved_phase = four_frame(out.frames[0], out.frames[1], out.frames[2], out.frames[3],
                                     &out.validity);

    // scores against the normalized target
    ComplexField normalized = target;
    for (Complex& z : normalized.data)
        z /= peak;
    Complex inner = 0.0;
    double na = 0.0, nb = 0.0;
    for (size_t i = 0; i < normalized.data.size(); ++i) {
        inner += std::conj(normalized.data[i]) * out.recovered.data[i];
        na += std::norm(normalized.data[i]);
        nb += std::norm(out.recovered.data[i]);
    }
    out.correlation = std::abs(inner) / std::sqrt(na * nb);
    const double global = std::arg(inner); // phase offset of the recovered beam
    double sq = 0.0;
    size_t support = 0;
    for (size_t i = 0; i < normalized.data.size(); ++i) {
        if (std::abs(normalized.data[i]) <= 0.1)
            continue;
        const double diff = std::remainder(
            out.retrieved_phase.data[i] - std::arg(normalized.data[i]) - global, kTwoPi);
        sq += diff * diff;
        ++support;
    }
    out.rms_phase_error = support ? std::sqrt(sq / support) : 0.0;
    return out;
}

} // namespace lgc
