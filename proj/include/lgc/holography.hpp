#ifndef LGC_HOLOGRAPHY_HPP
#define LGC_HOLOGRAPHY_HPP

#include "lgc/field.hpp"

#include <array>

namespace lgc {

enum class Encoding { PhaseOfSum, AmplitudeModulatedBlaze };

// Geometry of the simulated two-carrier hologram and the 4f filter.
// Wave vectors and filter coordinates are in cycles per dimensionless
// length; bin b of an n-point grid corresponds to b / (2 L).
struct HologramSpec {
    double carrier1_x = 0.0, carrier1_y = 0.0; // object beam
    double carrier2_x = 0.0, carrier2_y = 0.0; // reference beam
    Encoding encoding = Encoding::PhaseOfSum;
    double filter_center_x = 0.0, filter_center_y = 0.0;
    double filter_radius = 0.0;
    double reference_amplitude = 4.0;

    void validate() const;
};

// Carriers at bins (n/8, 0) and (-n/8, 0), filter disc of radius n/16 bins
// around the object order.
HologramSpec default_hologram_spec(const GridSpec& grid);

// Phase-only mask, values in [0, 2 pi).
struct PhaseMask {
    GridSpec spec;
    std::vector<double> values;
};

// Encodes the target (normalized to max |psi| = 1 internally) onto a phase
// mask. reference_shift is subtracted from the multiplexed reference term's
// phase; it is ignored by the blaze encoding, which carries no reference.
PhaseMask encode(const ComplexField& target, const HologramSpec& h,
                 double reference_shift = 0.0);

// Forms exp(i mask), applies the forward DFT, keeps the filter disc, rolls
// the selected order to zero frequency and transforms back.
ComplexField propagate_first_order(const PhaseMask& mask, const HologramSpec& h);

// |obj + ref e^{-i shift}|^2 pixelwise.
ScalarField interferogram(const ComplexField& obj, const ComplexField& ref, double shift);

// Four-step phase retrieval, shifts 0, pi/2, pi, 3pi/2. Pixels where both
// numerator and denominator vanish return 0 and are cleared in the validity
// mask when one is supplied.
ScalarField four_frame(const ScalarField& i1, const ScalarField& i2, const ScalarField& i3,
                       const ScalarField& i4, ScalarField* validity = nullptr);

// The full generate-and-measure loop: encode, extract the first order,
// interfere with the analytically known reference wave at the four shifts,
// retrieve the phase.
struct PipelineResult {
    std::array<PhaseMask, 4> masks;  // blaze mode repeats one mask
    ComplexField recovered;          // first-order field, carrier removed
    std::array<ScalarField, 4> frames;
    ScalarField retrieved_phase;
    ScalarField validity;
    double correlation = 0.0;        // against the normalized target
    double rms_phase_error = 0.0;    // on the |psi| > 0.1 max support
};

PipelineResult run_pipeline(const ComplexField& target, const HologramSpec& h);

} // namespace lgc

#endif
