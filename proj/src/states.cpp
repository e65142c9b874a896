#include "lgc/states.hpp"
#include "lgc/specfun.hpp"

#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace lgc {

namespace sf = specfun;

namespace {

constexpr double kTwoPi = 2.0 * M_PI;
constexpr double kInvSqrtPi = 0.5641895835477563;
constexpr int kSeriesCap = 400;
constexpr int kMaxSubExcitation = 32; // supported n range for the subspace families

[[noreturn]] void invalid(const std::string& what) { throw std::invalid_argument(what); }

bool is_half_integer(double x) { return std::abs(2.0 * x - std::round(2.0 * x)) < 1e-9; }

// exp(lnmag) * r^a * e^{-r^2/2} with the r = 0 corner handled exactly.
double radial_envelope(double lnmag, int a, double r) {
    if (r == 0.0)
        return a == 0 ? std::exp(lnmag) : 0.0;
    return std::exp(lnmag + a * std::log(r) - 0.5 * r * r);
}

} // namespace

double reduce_theta(double theta) {
    double t = std::fmod(theta, kTwoPi);
    if (t < 0.0)
        t += kTwoPi;
    return t == kTwoPi ? 0.0 : t;
}

const char* family_name(Family f) {
    switch (f) {
    case Family::LG: return "lg";
    case Family::HW: return "hw";
    case Family::Su2GP: return "su2gp";
    case Family::Su11GP: return "su11gp";
    case Family::Su11BG: return "su11bg";
    case Family::Su11GPSub: return "su11gpsub";
    case Family::Su11BGSub: return "su11bgsub";
    }
    return "?";
}

void validate(const StateSpec& spec) {
    const auto& p = spec.param;
    if (!(p.zeta >= 0.0) || !std::isfinite(p.zeta) || !std::isfinite(p.theta))
        invalid("coherent parameter must have finite theta and zeta >= 0");
    switch (spec.family) {
    case Family::LG:
        if (spec.lg.p < 0)
            invalid("lg: radial number p must be >= 0");
        break;
    case Family::HW:
        break;
    case Family::Su2GP:
        if (!is_half_integer(spec.j) || spec.j < 0.0)
            invalid("su2gp: j must be a half-integer >= 0");
        if (p.zeta > M_PI + 1e-12)
            invalid("su2gp: zeta must lie in [0, pi]");
        break;
    case Family::Su11GP:
    case Family::Su11BG:
        if (!is_half_integer(spec.k) || spec.k < 0.5 - 1e-12)
            invalid("su11 azimuthal partition: k must be a half-integer >= 1/2");
        break;
    case Family::Su11GPSub:
    case Family::Su11BGSub:
        if (std::abs(spec.k - 0.25) > 1e-12 && std::abs(spec.k - 0.75) > 1e-12)
            invalid("su11 subspace partition: k must be 1/4 or 3/4");
        if (spec.n < 0 || spec.n > kMaxSubExcitation)
            invalid("subspace families: n must lie in [0, "
                    + std::to_string(kMaxSubExcitation) + "]");
        if (!(spec.tol > 0.0) || spec.tol > 1e-6)
            invalid("subspace families: tol must lie in (0, 1e-6]");
        break;
    }
}

StateSpec evolve(StateSpec spec, double delta) {
    if (spec.family != Family::LG)
        spec.param.theta = reduce_theta(spec.param.theta + delta);
    return spec;
}

Complex lg_mode(LGIndex idx, double r, double phi) {
    if (idx.p < 0)
        invalid("lg_mode: p must be >= 0");
    if (!(r >= 0.0))
        invalid("lg_mode: r must be >= 0");
    const int a = std::abs(idx.l);
    const double lnmag = -0.5 * std::log(M_PI)
                         + 0.5 * (sf::ln_factorial(idx.p) - sf::ln_factorial(idx.p + a));
    const double env = radial_envelope(lnmag, a, r);
    if (env == 0.0)
        return 0.0;
    const double lag = sf::assoc_laguerre(idx.p, a, r * r);
    const double sign = (idx.p % 2 == 0) ? 1.0 : -1.0;
    return std::polar(1.0, idx.l * phi) * (sign * env * lag);
}

Complex hw_coherent(Sign sign, CoherentParam alpha, double r, double phi) {
    const Complex a = std::polar(alpha.zeta, alpha.theta);
    const Complex exponent = -0.5 * alpha.zeta * alpha.zeta
                             - r * a * std::polar(1.0, sign_value(sign) * phi)
                             - 0.5 * r * r;
    return kInvSqrtPi * std::exp(exponent);
}

double radial_displacement(CoherentParam alpha) {
    const double z2 = alpha.zeta * alpha.zeta;
    const double x = 0.5 * z2;
    return 0.5 * std::sqrt(M_PI)
           * ((z2 + 1.0) * sf::bessel_i_scaled(0, x) + z2 * sf::bessel_i_scaled(1, x));
}

namespace {

// Precomputed state-fixed coefficients of the finite sum over t = j + m.
// The angular phase t (pi - theta) + (2t - 2j) phi advances by a constant
// step per term, so the evaluation rotates one phasor instead of calling
// polar in the loop.
struct Su2Eval {
    int twoj = 0;
    double theta = 0.0;
    std::vector<double> ln_coef; // -inf marks a vanishing endpoint term
    std::vector<int> absm2;      // 2|m|
    std::vector<int> pdeg;       // j - |m|

    Complex operator()(double r, double phi) const {
        const double x = r * r;
        Complex sum = 0.0;
        Complex rot = std::polar(1.0, -static_cast<double>(twoj) * phi);
        const Complex step = std::polar(1.0, M_PI - theta + 2.0 * phi);
        for (int t = 0; t <= twoj; ++t, rot *= step) {
            if (!std::isfinite(ln_coef[t]))
                continue;
            const double env = radial_envelope(ln_coef[t], absm2[t], r);
            if (env == 0.0)
                continue;
            sum += (env * sf::assoc_laguerre(pdeg[t], absm2[t], x)) * rot;
        }
        return sum;
    }
};

Su2Eval build_su2(double j, CoherentParam zt) {
    if (!is_half_integer(j) || j < 0.0)
        invalid("su2_gp: j must be a half-integer >= 0");
    if (zt.zeta < 0.0 || zt.zeta > M_PI + 1e-12)
        invalid("su2_gp: zeta must lie in [0, pi]");
    Su2Eval out;
    out.twoj = static_cast<int>(std::round(2.0 * j));
    out.theta = zt.theta;
    const double half = std::min(zt.zeta, M_PI) * 0.5;
    const double s = std::sin(half);
    const double c = std::cos(half);
    // sin^{j+m} cos^{j-m} replaces the cos^{2j} tan^{j+m} split so both
    // endpoint limits are exact; j + m = t runs over integers 0..2j.
    const double lnpref = 0.5 * (sf::ln_factorial(out.twoj) - std::log(M_PI));
    for (int t = 0; t <= out.twoj; ++t) {
        const int twom = 2 * t - out.twoj;
        const int absm2 = std::abs(twom);
        const int pdeg = (out.twoj - absm2) / 2;
        out.absm2.push_back(absm2);
        out.pdeg.push_back(pdeg);
        if ((t > 0 && s == 0.0) || (t < out.twoj && c == 0.0)) {
            out.ln_coef.push_back(-std::numeric_limits<double>::infinity());
            continue;
        }
        double lnmag = lnpref
                       + 0.5 * (sf::ln_factorial(pdeg)
                                - sf::ln_factorial(out.twoj - t)
                                - sf::ln_factorial(t)
                                - sf::ln_factorial((out.twoj + absm2) / 2));
        if (t > 0)
            lnmag += t * std::log(s);
        if (t < out.twoj)
            lnmag += (out.twoj - t) * std::log(c);
        out.ln_coef.push_back(lnmag);
    }
    return out;
}

} // namespace

Complex su2_gp(double j, CoherentParam zt, double r, double phi) {
    return build_su2(j, zt)(r, phi);
}

double envelope_waist(CoherentParam zt) {
    return std::cosh(zt.zeta) - std::cos(zt.theta) * std::sinh(zt.zeta);
}

Complex su11_gp(double k, Sign sign, CoherentParam zt, double r, double phi) {
    if (!is_half_integer(k) || k < 0.5 - 1e-12)
        invalid("su11_gp: k must be a half-integer >= 1/2");
    const int nu = static_cast<int>(std::round(2.0 * k)) - 1;
    const double sigma2 = envelope_waist(zt);
    const double chirp = std::sin(zt.theta) * std::sinh(zt.zeta) / sigma2;
    const double lnmag = -0.5 * (std::log(M_PI) + sf::ln_factorial(nu)) - k * std::log(sigma2);
    double env;
    if (r == 0.0)
        env = nu == 0 ? std::exp(lnmag) : 0.0;
    else
        env = std::exp(lnmag + nu * std::log(r) - 0.5 * r * r / sigma2);
    if (env == 0.0)
        return 0.0;
    const double angle = sign_value(sign) * nu * phi - chirp * r * r;
    return std::polar(env, angle);
}

namespace {

struct BgEval {
    int nu = 0;
    int sgn = +1;
    bool base_mode = false; // xi = 0 limit
    Complex w;              // principal sqrt(-xi)
    double ln_base = 0.0;   // log magnitude without the Gaussian
    double angle_base = 0.0;

    Complex operator()(double r, double phi) const {
        if (base_mode)
            return lg_mode({0, sgn * nu}, r, phi);
        const Complex jval = sf::bessel_j_complex(nu, 2.0 * w * r);
        return std::polar(std::exp(ln_base - 0.5 * r * r), angle_base + sgn * nu * phi)
               * jval;
    }
};

BgEval build_bg(double k, Sign sign, CoherentParam xi) {
    if (!is_half_integer(k) || k < 0.5 - 1e-12)
        invalid("su11_bg: k must be a half-integer >= 1/2");
    BgEval out;
    out.nu = static_cast<int>(std::round(2.0 * k)) - 1;
    out.sgn = sign_value(sign);
    // the state is the base mode plus O(zeta) corrections; below this the
    // prefactor exponents are no longer representable
    if (xi.zeta < 1e-60) {
        out.base_mode = true;
        return out;
    }
    const Complex xival = std::polar(xi.zeta, xi.theta);
    out.w = std::sqrt(-xival); // principal branch
    // ln I_nu(2 zeta) = nu ln zeta + ln sum_m zeta^{2m}/(m! (m+nu)!)
    const double ln_inorm = out.nu * std::log(xi.zeta)
                            + std::log(sf::scaled_bessel_series(out.nu, xi.zeta));
    // global phase fixed so the base-mode expansion coefficient is real
    // positive; with principal branches this reduces to -nu arg(w)
    out.ln_base = -xi.zeta * std::cos(xi.theta) - 0.5 * (std::log(M_PI) + ln_inorm);
    out.angle_base = -out.nu * std::arg(out.w) - xi.zeta * std::sin(xi.theta);
    return out;
}

} // namespace

Complex su11_bg(double k, Sign sign, CoherentParam xi, double r, double phi) {
    return build_bg(k, sign, xi)(r, phi);
}

LGIndex sub_indices(int n, double k, Sign sign, int m) {
    if (n < 0 || m < 0)
        invalid("sub_indices: n and m must be >= 0");
    int k_offset;
    if (std::abs(k - 0.25) < 1e-12)
        k_offset = 0;
    else if (std::abs(k - 0.75) < 1e-12)
        k_offset = 1;
    else
        throw std::invalid_argument("sub_indices: inconsistent parameters: k must be 1/4 or 3/4");
    const int excitation = 2 * m + k_offset; // 2 (k + m - 1/4)
    const int l = sign_value(sign) * (excitation - n);
    const int p = (n + excitation - std::abs(excitation - n)) / 2;
    if (p < 0 || (n + excitation - std::abs(l)) % 2 != 0)
        throw std::invalid_argument("sub_indices: inconsistent (n, k) combination");
    return {p, l};
}

// ---------------------------------------------------------------------------
// Series engine for the constant-circular-excitation families. Term m is
//   dir[m] * U_m(r) * L_{p_m}^{a_m}(r^2) * e^{i l_m phi},
//   U_m(r) = exp(ln_u0[m] + a_m ln r - r^2/2).
// Every coefficient magnitude of the normalized expansion is O(1), so U is
// representable at all m and r.
// ---------------------------------------------------------------------------

namespace {

struct SubSeries {
    int n = 0;
    int sign = +1;
    double tol = 1e-8;
    int m_switch = 0;            // first m with excitation >= n; p is constant after it
    std::vector<Complex> dir;    // unit-modulus coefficient phase including (-1)^p
    std::vector<double> ln_u0;   // log of the r-independent positive factor
    std::vector<LGIndex> pl;
    std::vector<double> uratio;  // exp(ln_u0[m+1] - ln_u0[m]), ascending regime
};

SubSeries build_sub_series(Family family, int n, double k, Sign sign, CoherentParam cp,
                           double tol) {
    SubSeries out;
    out.n = n;
    out.sign = sign_value(sign);
    out.tol = tol;
    const int k_offset = std::abs(k - 0.25) < 1e-12 ? 0 : 1;
    out.m_switch = std::max(0, (n - k_offset + 1) / 2);

    const double zeta = cp.zeta;
    const double theta = cp.theta;
    double ln_c0;        // log magnitude at m = 0, without the Gamma(2k+m)/m! factors
    double ln_step;      // log of the m-th power base (tanh or zeta)
    double phase0 = 0.0; // constant phase
    double step_phase;   // coefficient phase advance per m
    double gamma_sign;   // +0.5 for GP (Gamma in the numerator), -0.5 for BG
    if (family == Family::Su11GPSub) {
        const double th = std::tanh(0.5 * zeta);
        ln_c0 = -2.0 * k * std::log(std::cosh(0.5 * zeta)) - 0.5 * sf::ln_gamma(2.0 * k);
        ln_step = th > 0.0 ? std::log(th) : -std::numeric_limits<double>::infinity();
        step_phase = M_PI - theta;
        gamma_sign = +0.5;
    } else {
        const double s = sf::scaled_bessel_series(2.0 * k - 1.0, zeta);
        ln_c0 = -0.5 * std::log(s);
        ln_step = zeta > 0.0 ? std::log(zeta) : -std::numeric_limits<double>::infinity();
        if (zeta > 0.0) {
            double thstar = std::remainder(theta, kTwoPi); // principal branch of xi^{k-1/2}
            if (thstar <= -M_PI)
                thstar = M_PI;
            phase0 = (k - 0.5) * thstar;
        }
        step_phase = theta;
        gamma_sign = -0.5;
    }

    double running_max = -std::numeric_limits<double>::infinity();
    for (int m = 0;; ++m) {
        if (m > kSeriesCap)
            throw std::runtime_error("subspace series: term cap reached before the tail "
                                     "bound met the requested tolerance");
        double lnc = ln_c0 - 0.5 * sf::ln_factorial(m) + gamma_sign * sf::ln_gamma(2.0 * k + m);
        if (m > 0) {
            if (!std::isfinite(ln_step))
                break; // zeta = 0: base mode only
            lnc += m * ln_step;
        }
        const LGIndex idx = sub_indices(n, k, sign, m);
        const int a = std::abs(idx.l);
        const double ln_lgcoef = -0.5 * std::log(M_PI)
                                 + 0.5 * (sf::ln_factorial(idx.p) - sf::ln_factorial(idx.p + a));
        out.dir.push_back(std::polar(1.0, phase0 + m * step_phase + (idx.p % 2 ? M_PI : 0.0)));
        out.ln_u0.push_back(lnc + ln_lgcoef);
        out.pl.push_back(idx);

        // state-level stop: bound each term by its radial supremum
        // sup_r r^a e^{-r^2/2} = (a/e)^{a/2}, then require a certified
        // geometric tail below tol with a wide safety margin.
        const double ln_sup = a > 0 ? 0.5 * a * (std::log(static_cast<double>(a)) - 1.0) : 0.0;
        const double bound = out.ln_u0.back() + ln_sup;
        running_max = std::max(running_max, bound);
        if (m > out.m_switch + 4) {
            // |c_{m+1}/c_m|: the Gamma factor sits in the numerator for the
            // displaced family and in the denominator for the eigenstate one
            const double ratio =
                family == Family::Su11GPSub
                    ? std::exp(ln_step) * std::sqrt((2.0 * k + m) / (m + 1.0))
                    : std::exp(ln_step) / std::sqrt((m + 1.0) * (2.0 * k + m));
            if (ratio < 0.9 && bound < running_max + std::log(tol) - std::log(1e4))
                break;
        }
    }
    out.uratio.resize(out.ln_u0.size(), 0.0);
    for (size_t m = 0; m + 1 < out.ln_u0.size(); ++m)
        out.uratio[m] = std::exp(out.ln_u0[m + 1] - out.ln_u0[m]);
    return out;
}

Complex eval_sub_series(const SubSeries& s, double r, double phi) {
    const double x = r * r;
    const int total = static_cast<int>(s.dir.size());
    Complex sum = 0.0;
    double tmax = 0.0;
    int m = 0;
    // descending-|l| regime: at most (n+1)/2 terms, evaluated directly
    for (; m < std::min(s.m_switch, total); ++m) {
        const LGIndex idx = s.pl[m];
        const int a = std::abs(idx.l);
        const double u = radial_envelope(s.ln_u0[m], a, r);
        if (u == 0.0)
            continue;
        const double lag = sf::assoc_laguerre(idx.p, a, x);
        const Complex term = s.dir[m] * (u * lag)
                             * std::polar(1.0, static_cast<double>(idx.l) * phi);
        sum += term;
        tmax = std::max(tmax, std::abs(term));
    }
    if (m >= total)
        return sum;

    // ascending-|l| regime: p fixed at s.pl[m].p, |l| grows by 2 per term
    const int p = s.pl[m].p;
    const int a0 = std::abs(s.pl[m].l);
    const int a_last = std::abs(s.pl[total - 1].l);
    if (x >= a_last) {
        // u grows monotonically through every remaining term here, so the
        // final term bounds the whole tail; deep Gaussian-tail pixels exit
        // with a single evaluation
        const double u_last = radial_envelope(s.ln_u0[total - 1], a_last, r);
        const double lag_last = std::exp(sf::ln_factorial(p + a_last) - sf::ln_factorial(p)
                                         - sf::ln_factorial(a_last))
                                * std::pow(std::max(1.0, x), p);
        if (total * u_last * lag_last < s.tol * std::max(tmax, 0.02))
            return sum;
    }
    double u = radial_envelope(s.ln_u0[m], a0, r);
    // raw-double phasor arithmetic keeps libm and __muldc3 out of the loop
    const Complex rot0 = std::polar(1.0, static_cast<double>(s.pl[m].l) * phi);
    const Complex step0 = std::polar(1.0, 2.0 * s.sign * phi);
    double rot_re = rot0.real(), rot_im = rot0.imag();
    const double step_re = step0.real(), step_im = step0.imag();
    double sum_re = sum.real(), sum_im = sum.imag();
    double tmax2 = tmax * tmax;
    const double floor2 = s.tol * s.tol * 4e-4; // (tol * 0.02)^2 unit-scale floor
    // binomials C(p+a, p-i) and powers x^i/i! for the fixed-p polynomial
    std::array<double, kMaxSubExcitation + 1> binom{}, xpow{};
    {
        double xp = 1.0;
        for (int i = 0; i <= p; ++i) {
            binom[i] = std::exp(sf::ln_factorial(p + a0) - sf::ln_factorial(p - i)
                                - sf::ln_factorial(a0 + i));
            xpow[i] = xp / std::exp(sf::ln_factorial(i));
            xp *= x;
        }
    }
    double xcap_p = 1.0;
    for (int i = 0; i < p; ++i)
        xcap_p *= std::max(1.0, x);
    for (;; ++m) {
        const int a = a0 + 2 * (m - s.m_switch);
        if (u > 0.0) {
            double lag = 0.0;
            double sgn = 1.0;
            for (int i = 0; i <= p; ++i) {
                lag += sgn * binom[i] * xpow[i];
                sgn = -sgn;
            }
            const double mag = u * lag;
            const double t_re = mag * (s.dir[m].real() * rot_re - s.dir[m].imag() * rot_im);
            const double t_im = mag * (s.dir[m].real() * rot_im + s.dir[m].imag() * rot_re);
            sum_re += t_re;
            sum_im += t_im;
            tmax2 = std::max(tmax2, t_re * t_re + t_im * t_im);
        }
        if (m + 1 >= total)
            break;
        const double uratio = s.uratio[m];
        const double unext = u * x * uratio;
        const double binom_step = ((p + a + 1.0) * (p + a + 2.0)) / ((a + 1.0) * (a + 2.0));
        const double q = x * uratio * binom_step;
        // the tolerance is absolute against the unit scale of a normalized
        // state, so tail terms far below it are dropped even where the local
        // running max is tiny (deep in the Gaussian tail)
        if (q < 0.9) {
            const double bound = unext * binom[0] * binom_step * xcap_p / (1.0 - q);
            if (bound * bound < floor2 || bound * bound < s.tol * s.tol * tmax2)
                break;
        }
        u = unext;
        const double nr = rot_re * step_re - rot_im * step_im;
        rot_im = rot_re * step_im + rot_im * step_re;
        rot_re = nr;
        for (int i = 0; i <= p; ++i)
            binom[i] *= ((p + a + 1.0) * (p + a + 2.0)) / ((a + i + 1.0) * (a + i + 2.0));
    }
    return {sum_re, sum_im};
}

} // namespace

Complex su11_gp_sub(int n, double k, Sign sign, CoherentParam zt, double r, double phi,
                    double tol) {
    StateSpec spec{Family::Su11GPSub, sign, 0.0, k, n, zt, {}, tol};
    validate(spec);
    const SubSeries s = build_sub_series(Family::Su11GPSub, n, k, sign, zt, tol);
    return eval_sub_series(s, r, phi);
}

Complex su11_bg_sub(int n, double k, Sign sign, CoherentParam xi, double r, double phi,
                    double tol) {
    StateSpec spec{Family::Su11BGSub, sign, 0.0, k, n, xi, {}, tol};
    validate(spec);
    const SubSeries s = build_sub_series(Family::Su11BGSub, n, k, sign, xi, tol);
    return eval_sub_series(s, r, phi);
}

PointEvaluator make_evaluator(const StateSpec& spec) {
    validate(spec);
    switch (spec.family) {
    case Family::LG: {
        const LGIndex idx = spec.lg;
        return [idx](double r, double phi) { return lg_mode(idx, r, phi); };
    }
    case Family::HW: {
        const Sign sg = spec.sign;
        const CoherentParam cp = spec.param;
        return [sg, cp](double r, double phi) { return hw_coherent(sg, cp, r, phi); };
    }
    case Family::Su2GP: {
        auto eval = std::make_shared<const Su2Eval>(build_su2(spec.j, spec.param));
        return [eval](double r, double phi) { return (*eval)(r, phi); };
    }
    case Family::Su11GP: {
        const double k = spec.k;
        const Sign sg = spec.sign;
        const CoherentParam cp = spec.param;
        return [k, sg, cp](double r, double phi) { return su11_gp(k, sg, cp, r, phi); };
    }
    case Family::Su11BG: {
        auto eval = std::make_shared<const BgEval>(build_bg(spec.k, spec.sign, spec.param));
        return [eval](double r, double phi) { return (*eval)(r, phi); };
    }
    case Family::Su11GPSub:
    case Family::Su11BGSub: {
        auto series = std::make_shared<const SubSeries>(
            build_sub_series(spec.family, spec.n, spec.k, spec.sign, spec.param, spec.tol));
        return [series](double r, double phi) { return eval_sub_series(*series, r, phi); };
    }
    }
    invalid("make_evaluator: unknown family");
}

ComplexField render_state(const StateSpec& spec, const GridSpec& grid) {
    return sample(make_evaluator(spec), grid);
}

double recommended_half_width(const StateSpec& spec) {
    const double z = spec.param.zeta;
    double L = 8.0;
    switch (spec.family) {
    case Family::LG:
        L = std::sqrt(2.0 * spec.lg.p + std::abs(spec.lg.l) + 1.0) * 1.6 + 4.0;
        break;
    case Family::HW:
        L = z + 7.0;
        break;
    case Family::Su2GP:
        L = std::sqrt(2.0 * spec.j + 1.0) + 6.0;
        break;
    case Family::Su11GP:
        L = std::sqrt(envelope_waist(spec.param) * (4.0 * spec.k + 18.0));
        break;
    case Family::Su11BG:
        L = 2.0 * std::sqrt(z) + 7.0;
        break;
    case Family::Su11GPSub:
        L = std::sqrt(spec.n + 4.0 * spec.k + 2.0) + 2.0 * std::sqrt(std::cosh(z)) + 4.0;
        break;
    case Family::Su11BGSub:
        L = std::sqrt(spec.n + 4.0 * spec.k + 2.0) + 2.0 * std::sqrt(1.0 + z) + 4.0;
        break;
    }
    return std::max(8.0, L);
}

} // namespace lgc
