#include "lgc/dft.hpp"
#include "lgc/field.hpp"
#include "lgc/field_io.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <random>

using namespace lgc;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const std::string& name) {
    return fs::temp_directory_path() / ("lgc_test_" + name);
}

ComplexField random_field(int n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    ComplexField f = make_field({n, 4.0});
    for (Complex& z : f.data)
        z = {dist(rng), dist(rng)};
    return f;
}

double l2(const ComplexField& f) {
    double acc = 0.0;
    for (const Complex& z : f.data)
        acc += std::norm(z);
    return std::sqrt(acc);
}

// quadratic-time reference transform, index convention matching dft2
ComplexField dft2_reference(const ComplexField& f, int sign) {
    const int n = f.spec.n;
    const int h = n / 2;
    ComplexField out = make_field(f.spec);
    for (int ky = 0; ky < n; ++ky)
        for (int kx = 0; kx < n; ++kx) {
            Complex acc = 0.0;
            for (int iy = 0; iy < n; ++iy)
                for (int ix = 0; ix < n; ++ix) {
                    const double ang = sign * 2.0 * M_PI
                                       * ((kx - h) * double(ix - h) + (ky - h) * double(iy - h))
                                       / n;
                    acc += f.at(ix, iy) * Complex(std::cos(ang), std::sin(ang));
                }
            out.at(kx, ky) = acc / double(n);
        }
    return out;
}

} // namespace

TEST_CASE("grid validation") {
    CHECK_THROWS_AS((GridSpec{10, 4.0}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((GridSpec{17, 4.0}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((GridSpec{64, 0.0}.validate()), std::invalid_argument);
    CHECK_NOTHROW((GridSpec{64, 2.0}.validate()));
}

TEST_CASE("sample places cell-centered coordinates") {
    const GridSpec g{16, 2.0};
    ComplexField ones = sample([](double, double) { return Complex(1.0, 0.0); }, g);
    for (const Complex& z : ones.data)
        CHECK(z == Complex(1.0, 0.0));

    // e^{i phi} evaluated exactly at q = (1, 0) is 1
    CHECK(std::polar(1.0, std::atan2(0.0, 1.0)) == Complex(1.0, 0.0));
    // row-major placement: data[iy*n+ix] carries the cell-center coordinates
    ComplexField swirl = sample([](double, double phi) { return std::polar(1.0, phi); }, g);
    for (auto [ix, iy] : {std::pair{0, 0}, {15, 3}, {7, 12}}) {
        const double want = std::atan2(g.coord(iy), g.coord(ix));
        CHECK(swirl.data[iy * g.n + ix] == std::polar(1.0, want));
    }
}

TEST_CASE("sample of the vacuum Gaussian integrates to one") {
    const GridSpec g{512, 8.0};
    ComplexField f = sample(
        [](double r, double) { return Complex(std::exp(-0.5 * r * r) / std::sqrt(M_PI), 0.0); },
        g);
    double norm = 0.0;
    for (const Complex& z : f.data)
        norm += std::norm(z);
    norm *= g.spacing() * g.spacing();
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("sample is deterministic and thread-count independent") {
    const GridSpec g{64, 3.0};
    auto eval = [](double r, double phi) { return std::polar(std::exp(-r), 3.0 * phi); };
    const ComplexField a = sample(eval, g);
    const ComplexField b = sample(eval, g);
    CHECK(a.data == b.data);
}

TEST_CASE("sample attaches the pixel index to evaluator failures") {
    const GridSpec g{16, 1.0};
    CHECK_THROWS_WITH_AS(
        sample([](double, double) -> Complex { throw std::runtime_error("boom"); }, g),
        doctest::Contains("at pixel"), std::runtime_error);
}

TEST_CASE("intensity and phase basics") {
    const GridSpec g{16, 1.0};
    ComplexField f = make_field(g, Complex(0.0, 1.0));
    f.at(3, 4) = 0.0;
    const ScalarField inten = intensity(f);
    const ScalarField ph = phase(f);
    CHECK(inten.at(0, 0) == 1.0);
    CHECK(ph.at(0, 0) == doctest::Approx(M_PI / 2));
    CHECK(inten.at(3, 4) == 0.0);
    CHECK(ph.at(3, 4) == 0.0); // zero-amplitude convention
    // real positive field has flat zero phase
    ComplexField g2 = make_field(g, Complex(0.3, 0.0));
    for (double v : phase(g2).data)
        CHECK(v == 0.0);
}

TEST_CASE("dft2 round trip is the identity") {
    const ComplexField f = random_field(64, 17);
    const ComplexField back = dft2(dft2(f, DftDirection::Forward), DftDirection::Inverse);
    double worst = 0.0;
    for (size_t i = 0; i < f.data.size(); ++i)
        worst = std::max(worst, std::abs(f.data[i] - back.data[i]));
    CHECK(worst < 1e-12);
}

TEST_CASE("dft2 unitarity across sizes") {
    for (int n : {16, 64, 256}) {
        const ComplexField f = random_field(n, 100u + n);
        const ComplexField s = dft2(f, DftDirection::Forward);
        CHECK(l2(s) == doctest::Approx(l2(f)).epsilon(1e-12));
    }
}

TEST_CASE("dft2 of a constant is a centered peak") {
    ComplexField f = make_field({32, 2.0}, Complex(1.0, 0.0));
    const ComplexField s = dft2(f, DftDirection::Forward);
    const int h = 16;
    CHECK(std::abs(s.at(h, h)) == doctest::Approx(32.0).epsilon(1e-12));
    CHECK(std::abs(s.at(h + 3, h)) < 1e-12);
    CHECK(std::abs(s.at(0, 5)) < 1e-12);
}

TEST_CASE("dft2 matches the direct quadratic transform at n=16") {
    ComplexField f = random_field(16, 5);
    SUBCASE("random field") {}
    SUBCASE("shifted impulse gives a linear phase ramp") {
        for (Complex& z : f.data)
            z = 0.0;
        f.at(11, 8) = 1.0;
    }
    const ComplexField fast = dft2(f, DftDirection::Forward);
    const ComplexField slow = dft2_reference(f, -1);
    double worst = 0.0;
    for (size_t i = 0; i < f.data.size(); ++i)
        worst = std::max(worst, std::abs(fast.data[i] - slow.data[i]));
    CHECK(worst < 1e-11);
}

TEST_CASE("dft2 rejects non-power-of-two sizes") {
    CHECK_THROWS_AS(dft2(make_field({24, 1.0}), DftDirection::Forward), std::invalid_argument);
}

TEST_CASE("pgm fixed-range phase mapping") {
    const GridSpec g{16, 1.0};
    ScalarField s = make_scalar_field(g);
    s.data[0] = M_PI;
    s.data[1] = -M_PI + 1e-9;
    s.data[2] = 0.0;
    const fs::path path = temp_file("phase.pgm");
    write_pgm_phase(s, path);
    std::ifstream is(path, std::ios::binary);
    std::string magic;
    int w, h, maxval;
    is >> magic >> w >> h >> maxval;
    CHECK(magic == "P5");
    CHECK(w == 16);
    CHECK(maxval == 65535);
    is.get();
    unsigned char bytes[6];
    is.read(reinterpret_cast<char*>(bytes), 6);
    CHECK((bytes[0] << 8 | bytes[1]) == 65535); // phase pi
    CHECK((bytes[2] << 8 | bytes[3]) <= 1);     // phase just above -pi
    CHECK((bytes[4] << 8 | bytes[5]) == 32768); // phase 0 maps mid-scale
    fs::remove(path);
}

TEST_CASE("pgm of an all-zero field is all-zero pixels") {
    const GridSpec g{16, 1.0};
    const fs::path path = temp_file("zero.pgm");
    write_pgm_minmax(make_scalar_field(g), path);
    const ScalarField back = read_pgm(path, 1.0);
    for (double v : back.data)
        CHECK(v == 0.0);
    fs::remove(path);
}

TEST_CASE("pgm round trip preserves counts") {
    const GridSpec g{32, 1.0};
    ScalarField s = make_scalar_field(g);
    for (size_t i = 0; i < s.data.size(); ++i)
        s.data[i] = static_cast<double>((i * 37) % 65536);
    const fs::path path = temp_file("counts.pgm");
    write_pgm(s, path, 0.0, 65535.0);
    const ScalarField back = read_pgm(path, 1.0);
    for (size_t i = 0; i < s.data.size(); ++i)
        CHECK(back.data[i] == doctest::Approx(s.data[i]).epsilon(1e-12));
    fs::remove(path);
}

TEST_CASE("cfld container round trip is bit exact") {
    ComplexField f = random_field(32, 9);
    f.spec.half_width = 6.25;
    f.data[5] = {0.0, -0.0};
    f.data[6] = {1e-308, 1e308};
    const fs::path path = temp_file("field.cfld");
    write_field(f, path);
    const ComplexField back = read_field(path);
    CHECK(back.spec.n == f.spec.n);
    CHECK(back.spec.half_width == f.spec.half_width);
    REQUIRE(back.data.size() == f.data.size());
    for (size_t i = 0; i < f.data.size(); ++i) {
        CHECK(std::memcmp(&back.data[i], &f.data[i], sizeof(Complex)) == 0);
    }
    fs::remove(path);
}

TEST_CASE("cfld rejects bad files") {
    const fs::path path = temp_file("bad.cfld");
    {
        std::ofstream os(path, std::ios::binary);
        os << "NOPE!";
    }
    CHECK_THROWS_AS(read_field(path), FormatError);
    {
        ComplexField f = random_field(16, 2);
        write_field(f, path);
        fs::resize_file(path, fs::file_size(path) - 10); // truncate
    }
    CHECK_THROWS_AS(read_field(path), FormatError);
    fs::remove(path);
}
