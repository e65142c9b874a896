#ifndef LGC_DFT_HPP
#define LGC_DFT_HPP

#include "lgc/field.hpp"

namespace lgc {

enum class DftDirection { Forward, Inverse };

// Unitary 2D DFT with a centered spectrum: the DC bin of a forward transform
// sits at index (n/2, n/2), and bin b (signed, relative to the center)
// corresponds to the physical frequency b / (2 L) in cycles per unit length.
// Each direction scales by 1/n, so forward followed by inverse is the
// identity and the l2 norm is preserved. Requires power-of-two n.
ComplexField dft2(const ComplexField& f, DftDirection direction);

} // namespace lgc

#endif
