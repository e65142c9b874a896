#include "lgc/analysis.hpp"
#include "lgc/states.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>

using namespace lgc;

namespace {

constexpr double kPi = M_PI;

ComplexField vacuum(int n, double half_width) {
    return sample(
        [](double r, double) { return Complex(std::exp(-0.5 * r * r) / std::sqrt(kPi), 0.0); },
        {n, half_width});
}

} // namespace

TEST_CASE("metrics of the vacuum Gaussian") {
    const FieldMetrics m = metrics(vacuum(1024, 8.0));
    CHECK(m.norm == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(std::abs(m.centroid_x) < 1e-10);
    CHECK(std::abs(m.centroid_y) < 1e-10);
    CHECK(m.radial_centroid == doctest::Approx(0.8862269254527579).epsilon(1e-4));
    CHECK(m.second_radial_moment == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("metrics homogeneity and symmetry") {
    StateSpec s{Family::LG, Sign::Plus, 0, 0.5, 0, {}, {0, 3}, 1e-8};
    ComplexField f = render_state(s, {256, 8.0});
    const FieldMetrics m1 = metrics(f);
    CHECK(std::abs(m1.centroid_x) < 1e-10);
    CHECK(std::abs(m1.centroid_y) < 1e-10);
    for (Complex& z : f.data)
        z *= 2.0;
    const FieldMetrics m2 = metrics(f);
    CHECK(m2.norm == doctest::Approx(4.0 * m1.norm).epsilon(1e-12));
    CHECK(m2.radial_centroid == doctest::Approx(m1.radial_centroid).epsilon(1e-12));
    CHECK(m2.centroid_x == doctest::Approx(m1.centroid_x));
}

TEST_CASE("metrics rejects the zero field") {
    CHECK_THROWS_AS(metrics(make_field({16, 1.0})), std::domain_error);
}

TEST_CASE("l2_distance and correlation basics") {
    const ComplexField f = vacuum(64, 6.0);
    CHECK(l2_distance(f, f) == 0.0);
    CHECK(correlation(f, f) == doctest::Approx(1.0).epsilon(1e-14));

    ComplexField g = f;
    for (Complex& z : g.data)
        z *= std::polar(1.0, 1.234);
    CHECK(correlation(f, g) == doctest::Approx(1.0).epsilon(1e-14));

    ComplexField h = f;
    for (Complex& z : h.data)
        z = -z;
    double norm = 0.0;
    for (const Complex& z : f.data)
        norm += std::norm(z);
    CHECK(l2_distance(f, h)
          == doctest::Approx(2.0 * std::sqrt(norm) * f.spec.spacing()).epsilon(1e-12));

    ComplexField other = make_field({32, 6.0});
    CHECK_THROWS_AS(l2_distance(f, other), std::invalid_argument);
    CHECK_THROWS_AS(correlation(f, make_field(f.spec)), std::domain_error);
}

TEST_CASE("winding numbers of basis modes") {
    const GridSpec g{512, 8.0};
    StateSpec s1{Family::LG, Sign::Plus, 0, 0.5, 0, {}, {0, 1}, 1e-8};
    CHECK(winding_number(render_state(s1, g), 0.5) == 1);
    StateSpec s3{Family::LG, Sign::Plus, 0, 0.5, 0, {}, {0, -3}, 1e-8};
    const ComplexField f3 = render_state(s3, g);
    CHECK(winding_number(f3, 0.5) == -3);
    // charge is topological: radius independent between 0.5 and 2
    for (double radius : {0.5, 0.9, 1.4, 2.0})
        CHECK(winding_number(f3, radius) == -3);
}

TEST_CASE("winding number of the Bessel-Gauss state at k=4") {
    StateSpec s{Family::Su11BG, Sign::Plus, 0, 4.0, 0, {1.0, 0.0}, {}, 1e-8};
    CHECK(winding_number(render_state(s, {512, 8.0}), 0.5) == 7);
}

TEST_CASE("winding number guards") {
    const GridSpec g{64, 1.0};
    ComplexField f = make_field(g, Complex(1.0, 0.0));
    CHECK_THROWS_AS(winding_number(f, 0.01), std::invalid_argument); // radius < 3 spacings
    f.at(40, 32) = 0.0; // on the loop at radius ~0.25
    CHECK_THROWS_AS(winding_number(f, 0.25), std::domain_error);
}

TEST_CASE("rotation_residual is zero for delta=0 and for the exact rates") {
    StateSpec hw{Family::HW, Sign::Plus, 0, 0.5, 0, {1.5, 0.2}, {}, 1e-8};
    CHECK(rotation_residual(hw, 0.0, 12.3) == 0.0);
    CHECK(rotation_residual(hw, 0.8, -1.0) < 1e-10);
    StateSpec su2{Family::Su2GP, Sign::Plus, 4.0, 0.5, 0, {1.2, 0.9}, {}, 1e-8};
    CHECK(rotation_residual(su2, 0.8, 0.5) < 1e-10);
    // a wrong rate must be visibly nonzero
    CHECK(rotation_residual(hw, 0.8, 1.0) > 1e-3);
}

TEST_CASE("csv report rows") {
    std::ostringstream ss;
    write_csv_header(ss);
    ReportRow r;
    r.family = "hw";
    r.parameters = "zeta=1";
    r.metric = "norm";
    r.value = 1.0;
    r.reference = 1.0;
    r.abs_error = 0.0;
    r.pass = true;
    write_csv_row(ss, r);
    CHECK(ss.str()
          == "family,parameters,metric,value,reference,abs_error,pass\n"
             "hw,zeta=1,norm,1,1,0,pass\n");
}
