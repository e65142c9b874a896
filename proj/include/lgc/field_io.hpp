#ifndef LGC_FIELD_IO_HPP
#define LGC_FIELD_IO_HPP

#include "lgc/field.hpp"

#include <filesystem>
#include <stdexcept>

namespace lgc {

// Raised when a file does not match the expected container layout.
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// 16-bit binary PGM (P5, maxval 65535, big-endian samples, rows written
// top to bottom starting at iy = 0).
//
// Fixed-range mapping: [lo, hi] -> [0, 65535], clamped. Phase fields always
// use the fixed range (-pi, pi]. Min-max mapping uses the field's own range;
// a constant field maps to all-zero pixels.
void write_pgm(const ScalarField& s, const std::filesystem::path& path, double lo, double hi);
void write_pgm_minmax(const ScalarField& s, const std::filesystem::path& path);
void write_pgm_phase(const ScalarField& s, const std::filesystem::path& path);

// Reads a 16-bit P5 file back as raw counts in [0, 65535]. half_width is not
// stored by PGM, so the caller supplies it (it only scales coordinates).
ScalarField read_pgm(const std::filesystem::path& path, double half_width = 1.0);

// Raw complex-field container "CFLD1": magic bytes, n as u32 LE, half-width
// as f64 LE, then n^2 interleaved (re, im) f64 LE values, row-major.
// write/read round trips are bit-identical.
void write_field(const ComplexField& f, const std::filesystem::path& path);
ComplexField read_field(const std::filesystem::path& path);

} // namespace lgc

#endif
