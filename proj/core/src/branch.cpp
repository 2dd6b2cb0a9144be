#include "ahlfors/branch.hpp"

#include <cmath>
#include <complex>

#include "ahlfors/errors.hpp"

namespace ahlfors {

Complex sqrt_branch(Complex w, Complex witness) {
  if (w == Complex{0.0, 0.0}) {
    throw BranchPointError("sqrt_branch evaluated at the branch point 0");
  }
  if (witness == Complex{0.0, 0.0}) {
    throw InvalidParameterError("sqrt_branch witness must be nonzero");
  }
  // Root at the witness, flipped into Re >= 0 (ties broken toward Im >= 0).
  Complex s0 = std::sqrt(witness);
  if (s0.real() < 0.0 || (s0.real() == 0.0 && s0.imag() < 0.0)) s0 = -s0;
  // The principal cut of sqrt(w/witness) lands on the ray through -witness,
  // so the product is continuous wherever that ray is avoided.
  return std::sqrt(w / witness) * s0;
}

}  // namespace ahlfors
