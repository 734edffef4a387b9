#ifndef DERIVSPACE_REFERENCE_HPP
#define DERIVSPACE_REFERENCE_HPP

// Serial kernels. The parallel entry points (rref, catalecticant,
// run_experiment) must agree with these bit for bit; tests and the
// benchmark compare the two.

#include "derivspace/derivatives.hpp"
#include "derivspace/exactla.hpp"

namespace derivspace::reference {

RrefResult rref(const ExactMatrix& m);

Catalecticant catalecticant(const HomPoly& f, int k);

} // namespace derivspace::reference

#endif // DERIVSPACE_REFERENCE_HPP
