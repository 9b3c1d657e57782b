#ifndef SZEGO_ROOTS_HPP
#define SZEGO_ROOTS_HPP

#include <vector>

#include "szego/mat2.hpp"

namespace szego {

/// Roots of c_0 + c_1 z + ... + c_p z^p via balanced companion-matrix
/// eigenvalues. Degree must be >= 1 with a nonzero leading coefficient.
std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs);

} // namespace szego

#endif
