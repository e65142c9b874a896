#include "lgc/dft.hpp"
#include "lgc/parallel.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace lgc {

namespace {

bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }

// In-place iterative radix-2 transform; sign = -1 forward, +1 inverse.
// No scaling here.
void fft_inplace(Complex* a, int n, int sign) {
    for (int i = 1, j = 0; i < n; ++i) {
        int bit = n >> 1;
        for (; j & bit; bit >>= 1)
            j ^= bit;
        j ^= bit;
        if (i < j)
            std::swap(a[i], a[j]);
    }
    for (int len = 2; len <= n; len <<= 1) {
        const double ang = sign * 2.0 * M_PI / len;
        const Complex wl(std::cos(ang), std::sin(ang));
        for (int i = 0; i < n; i += len) {
            Complex w(1.0, 0.0);
            for (int k = 0; k < len / 2; ++k) {
                const Complex u = a[i + k];
                const Complex v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

// Swap quadrants so the DC bin moves between index 0 and index n/2.
// For even n the shift is its own inverse.
void shift_center(ComplexField& f) {
    const int n = f.spec.n;
    const int h = n / 2;
    for (int iy = 0; iy < h; ++iy)
        for (int ix = 0; ix < n; ++ix)
            std::swap(f.at(ix, iy), f.at((ix + h) % n, iy + h));
}

} // namespace

ComplexField dft2(const ComplexField& f, DftDirection direction) {
    const int n = f.spec.n;
    if (!is_pow2(n))
        throw std::invalid_argument("dft2: grid size must be a power of two");
    if (f.data.size() != static_cast<size_t>(n) * n)
        throw std::invalid_argument("dft2: data length does not match spec");

    ComplexField out = f;
    shift_center(out); // move the centered origin to index 0
    const int sign = direction == DftDirection::Forward ? -1 : +1;

    parallel_for(0, n, [&](int iy) { fft_inplace(&out.data[static_cast<size_t>(iy) * n], n, sign); });

    // columns via transpose, transform, transpose back
    ComplexField t = make_field(f.spec);
    for (int iy = 0; iy < n; ++iy)
        for (int ix = 0; ix < n; ++ix)
            t.at(iy, ix) = out.at(ix, iy);
    parallel_for(0, n, [&](int iy) { fft_inplace(&t.data[static_cast<size_t>(iy) * n], n, sign); });
    for (int iy = 0; iy < n; ++iy)
        for (int ix = 0; ix < n; ++ix)
            out.at(ix, iy) = t.at(iy, ix);

    shift_center(out);
    const double scale = 1.0 / n;
    for (auto& z : out.data)
        z *= scale;
    return out;
}

} // namespace lgc
