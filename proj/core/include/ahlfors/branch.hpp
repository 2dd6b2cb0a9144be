#pragma once

#include "ahlfors/types.hpp"

namespace ahlfors {

/// Square root with the branch fixed by a witness point: the returned branch
/// is continuous on any region avoiding the ray through -witness, and
/// sqrt_branch(witness, witness) has nonnegative real part.
///
/// Throws BranchPointError for w = 0 and InvalidParameterError for a zero
/// witness.
Complex sqrt_branch(Complex w, Complex witness);

}  // namespace ahlfors
