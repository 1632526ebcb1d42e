#pragma once

#include "geomgate/matrix.hpp"

#include <vector>

namespace geomgate {

struct EigenDecomposition {
    std::vector<double> values;  // ascending
    ComplexMatrix vectors;       // columns are eigenvectors
};

// Cyclic complex Jacobi; 2x2 inputs use the closed form.
EigenDecomposition eigh(const ComplexMatrix& h);

// exp(-i H t) for hermitian H. Throws ValidationError if H is not hermitian.
ComplexMatrix matrix_exp_hermitian(const ComplexMatrix& h, double t);

} // namespace geomgate
