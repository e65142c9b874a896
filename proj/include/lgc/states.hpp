#ifndef LGC_STATES_HPP
#define LGC_STATES_HPP

#include "lgc/field.hpp"

#include <functional>

namespace lgc {

enum class Family { LG, HW, Su2GP, Su11GP, Su11BG, Su11GPSub, Su11BGSub };

// Circular / azimuthal branch selector.
enum class Sign : int { Plus = +1, Minus = -1 };

inline int sign_value(Sign s) { return static_cast<int>(s); }

// Radial and azimuthal quantum numbers of a basis mode.
struct LGIndex {
    int p = 0;
    int l = 0;
    bool operator==(const LGIndex&) const = default;
};

// Polar complex parameter zeta * exp(i theta) shared by all families.
// theta is kept reduced to [0, 2 pi).
struct CoherentParam {
    double zeta = 0.0;
    double theta = 0.0;
};

double reduce_theta(double theta); // into [0, 2 pi)

struct StateSpec {
    Family family = Family::LG;
    Sign sign = Sign::Plus;
    double j = 0.0;   // SU(2) Bargmann parameter, half-integer >= 0
    double k = 0.5;   // SU(1,1) Bargmann parameter
    int n = 0;        // circular excitation number (subspace families)
    CoherentParam param;
    LGIndex lg;       // LG family only
    double tol = 1e-10; // series tolerance (subspace families)
};

// Throws std::invalid_argument with a reason if any parameter is outside
// its family range.
void validate(const StateSpec& spec);

const char* family_name(Family f);

// theta -> theta + delta (mod 2 pi), zeta unchanged; LG modes are fixed points.
StateSpec evolve(StateSpec spec, double delta);

// Basis mode <r,phi|p,l>. Coefficient computed in log space; underflow
// returns 0.
Complex lg_mode(LGIndex idx, double r, double phi);

// Displaced-Gaussian state of the circular ladder with parameter
// alpha = zeta e^{i theta}.
Complex hw_coherent(Sign sign, CoherentParam alpha, double r, double phi);

// Mean radius of the hw_coherent density as a closed form in |alpha|.
double radial_displacement(CoherentParam alpha);

// SU(2) displaced state on the constant-total-excitation subspace. zeta is
// restricted to [0, pi]; zeta = pi is the explicit single-mode limit.
Complex su2_gp(double j, CoherentParam zt, double r, double phi);

// Gaussian envelope waist sigma^2 = cosh zeta - cos theta sinh zeta.
double envelope_waist(CoherentParam zt);

// SU(1,1) displaced state on the constant-azimuthal-number subspace,
// 2k a positive integer.
Complex su11_gp(double k, Sign sign, CoherentParam zt, double r, double phi);

// SU(1,1) lowering-operator eigenstate on the same subspace: a Bessel-Gauss
// profile with complex argument. The global phase is fixed so the expansion
// coefficient of the base mode is real positive. xi = 0 degenerates to the
// base mode.
Complex su11_bg(double k, Sign sign, CoherentParam xi, double r, double phi);

// Index map for the constant-circular-excitation subspaces, k in {1/4, 3/4}.
LGIndex sub_indices(int n, double k, Sign sign, int m);

// Series families on the constant-circular-excitation subspaces.
Complex su11_gp_sub(int n, double k, Sign sign, CoherentParam zt, double r, double phi,
                    double tol);
Complex su11_bg_sub(int n, double k, Sign sign, CoherentParam xi, double r, double phi,
                    double tol);

using PointEvaluator = std::function<Complex(double r, double phi)>;

// Returns a closure evaluating <r,phi|spec>; series coefficients are
// precomputed once, so this is the entry point for whole-grid sampling.
PointEvaluator make_evaluator(const StateSpec& spec);

// Samples the state on a grid.
ComplexField render_state(const StateSpec& spec, const GridSpec& grid);

// Half-width such that the density tail lost outside [-L, L)^2 is
// negligible against a 1e-4 norm check (per-family sizing; 8 at minimum).
double recommended_half_width(const StateSpec& spec);

} // namespace lgc

#endif
