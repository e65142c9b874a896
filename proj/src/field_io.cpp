#include "lgc/field_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <limits>
#include <vector>

namespace lgc {

namespace {

constexpr char kFieldMagic[5] = {'C', 'F', 'L', 'D', '1'};

void put_u16_be(std::vector<unsigned char>& buf, uint16_t v) {
    buf.push_back(static_cast<unsigned char>(v >> 8));
    buf.push_back(static_cast<unsigned char>(v & 0xff));
}

void put_u32_le(std::ostream& os, uint32_t v) {
    unsigned char b[4] = {static_cast<unsigned char>(v & 0xff),
                          static_cast<unsigned char>((v >> 8) & 0xff),
                          static_cast<unsigned char>((v >> 16) & 0xff),
                          static_cast<unsigned char>((v >> 24) & 0xff)};
    os.write(reinterpret_cast<const char*>(b), 4);
}

void put_f64_le(std::ostream& os, double v) {
    uint64_t bits;
    std::memcpy(&bits, &v, 8);
    unsigned char b[8];
    for (int i = 0; i < 8; ++i)
        b[i] = static_cast<unsigned char>((bits >> (8 * i)) & 0xff);
    os.write(reinterpret_cast<const char*>(b), 8);
}

uint32_t get_u32_le(std::istream& is) {
    unsigned char b[4];
    if (!is.read(reinterpret_cast<char*>(b), 4))
        throw FormatError("CFLD1: truncated header");
    return static_cast<uint32_t>(b[0]) | (static_cast<uint32_t>(b[1]) << 8)
           | (static_cast<uint32_t>(b[2]) << 16) | (static_cast<uint32_t>(b[3]) << 24);
}

double get_f64_le(std::istream& is) {
    unsigned char b[8];
    if (!is.read(reinterpret_cast<char*>(b), 8))
        throw FormatError("CFLD1: truncated data");
    uint64_t bits = 0;
    for (int i = 0; i < 8; ++i)
        bits |= static_cast<uint64_t>(b[i]) << (8 * i);
    double v;
    std::memcpy(&v, &bits, 8);
    return v;
}

void write_pgm_mapped(const ScalarField& s, const std::filesystem::path& path,
                      double lo, double hi) {
    const int n = s.spec.n;
    std::ofstream os(path, std::ios::binary);
    if (!os)
        throw std::ios_base::failure("write_pgm: cannot open " + path.string());
    os << "P5\n" << n << " " << n << "\n65535\n";
    std::vector<unsigned char> row;
    row.reserve(static_cast<size_t>(n) * 2);
    const double span = hi - lo;
    for (int iy = 0; iy < n; ++iy) {
        row.clear();
        for (int ix = 0; ix < n; ++ix) {
            double t = span > 0.0 ? (s.at(ix, iy) - lo) / span : 0.0;
            t = std::clamp(t, 0.0, 1.0);
            put_u16_be(row, static_cast<uint16_t>(std::lround(t * 65535.0)));
        }
        os.write(reinterpret_cast<const char*>(row.data()), static_cast<std::streamsize>(row.size()));
    }
    if (!os)
        throw std::ios_base::failure("write_pgm: write failed for " + path.string());
}

} // namespace

void write_pgm(const ScalarField& s, const std::filesystem::path& path, double lo, double hi) {
    if (!(hi > lo))
        throw std::invalid_argument("write_pgm: fixed range must have hi > lo");
    write_pgm_mapped(s, path, lo, hi);
}

void write_pgm_minmax(const ScalarField& s, const std::filesystem::path& path) {
    const auto [mn, mx] = std::minmax_element(s.data.begin(), s.data.end());
    write_pgm_mapped(s, path, *mn, *mx);
}

void write_pgm_phase(const ScalarField& s, const std::filesystem::path& path) {
    write_pgm_mapped(s, path, -M_PI, M_PI);
}

ScalarField read_pgm(const std::filesystem::path& path, double half_width) {
    std::ifstream is(path, std::ios::binary);
    if (!is)
        throw std::ios_base::failure("read_pgm: cannot open " + path.string());
    std::string magic;
    is >> magic;
    if (magic != "P5")
        throw FormatError("read_pgm: not a binary PGM: " + path.string());
    int w = 0, h = 0, maxval = 0;
    is >> w >> h >> maxval;
    if (!is || w <= 0 || h <= 0 || w != h || maxval != 65535)
        throw FormatError("read_pgm: expected square 16-bit PGM: " + path.string());
    is.get(); // single whitespace after maxval
    ScalarField out = make_scalar_field({w, half_width});
    std::vector<unsigned char> row(static_cast<size_t>(w) * 2);
    for (int iy = 0; iy < h; ++iy) {
        if (!is.read(reinterpret_cast<char*>(row.data()), static_cast<std::streamsize>(row.size())))
            throw FormatError("read_pgm: truncated pixel data: " + path.string());
        for (int ix = 0; ix < w; ++ix)
            out.at(ix, iy) = static_cast<double>((row[2 * ix] << 8) | row[2 * ix + 1]);
    }
    return out;
}

void write_field(const ComplexField& f, const std::filesystem::path& path) {
    f.spec.validate();
    if (f.data.size() != static_cast<size_t>(f.spec.n) * f.spec.n)
        throw std::invalid_argument("write_field: data length does not match spec");
    std::ofstream os(path, std::ios::binary);
    if (!os)
        throw std::ios_base::failure("write_field: cannot open " + path.string());
    os.write(kFieldMagic, sizeof kFieldMagic);
    put_u32_le(os, static_cast<uint32_t>(f.spec.n));
    put_f64_le(os, f.spec.half_width);
    for (const Complex& z : f.data) {
        put_f64_le(os, z.real());
        put_f64_le(os, z.imag());
    }
    if (!os)
        throw std::ios_base::failure("write_field: write failed for " + path.string());
}

ComplexField read_field(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is)
        throw std::ios_base::failure("read_field: cannot open " + path.string());
    char magic[5];
    if (!is.read(magic, 5) || std::memcmp(magic, kFieldMagic, 5) != 0)
        throw FormatError("CFLD1: bad magic in " + path.string());
    const uint32_t n = get_u32_le(is);
    const double half_width = get_f64_le(is);
    if (n > 65536)
        throw FormatError("CFLD1: implausible grid size in " + path.string());
    GridSpec spec{static_cast<int>(n), half_width};
    spec.validate();
    ComplexField out = make_field(spec);
    for (Complex& z : out.data) {
        const double re = get_f64_le(is);
        const double im = get_f64_le(is);
        z = {re, im};
    }
    char extra;
    if (is.read(&extra, 1))
        throw FormatError("CFLD1: trailing bytes in " + path.string());
    return out;
}

} // namespace lgc
