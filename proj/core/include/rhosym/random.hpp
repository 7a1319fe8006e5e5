#pragma once

#include <cstdint>
#include <random>

#include "rhosym/matrix.hpp"

namespace rhosym {

using Rng = std::mt19937_64;

/// Standard Gaussian entries; complex entries have independent real and
/// imaginary parts of variance 1/2.
Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, Field field);
Matrix random_hermitian(Rng& rng, std::size_t n, Field field);
/// Haar-distributed unitary (orthogonal in the real field), built as a
/// product of Householder reflections.
Matrix random_unitary(Rng& rng, std::size_t n, Field field);
Vector random_unit_vector(Rng& rng, std::size_t n, Field field);
/// Unit vector drawn from the span of the given orthonormal columns.
Vector random_unit_vector_in(Rng& rng, const Matrix& basis);

}  // namespace rhosym
