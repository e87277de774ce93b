#pragma once

namespace qsv {

// Default tolerance for orthogonality/unitarity decisions.  Every routine
// that makes such a decision takes this value as a defaulted parameter, so
// there is exactly one knob and it can be overridden per call.
inline constexpr double kCheckTol = 1e-10;

// Phase comparisons (radians).
inline constexpr double kPhaseTol = 1e-9;

}  // namespace qsv
