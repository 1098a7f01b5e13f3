// Copyright 2026 The autotherm Authors
// SPDX-License-Identifier: Apache-2.0
//
// Slow, index-by-index reference implementations used as test oracles.

#pragma once

#include <functional>
#include <vector>

#include "autotherm/tensor.hpp"

namespace autotherm::testing {

/// Multi-index of a flat row-major index over `dims`, first factor slowest.
std::vector<std::size_t> digits(std::size_t flat, const std::vector<std::size_t>& dims);
std::size_t flatten(const std::vector<std::size_t>& idx, const std::vector<std::size_t>& dims);

/// Keeps factors whose positions are listed in `keep` (ascending).
Matrix brute_partial_trace(const Matrix& m, const std::vector<std::size_t>& dims, const std::vector<std::size_t>& keep);
Matrix brute_partial_transpose(const Matrix& m, const std::vector<std::size_t>& dims,
                               const std::vector<std::size_t>& transposed);

/// Schatten norm from the eigenvalues of A^dagger A.
double brute_schatten(const Matrix& a, double p);

/// Composite Simpson rule with `panels` (even) panels.
double simpson(const std::function<double(double)>& f, double a, double b, std::size_t panels);

/// e^{-iHt} by a truncated Taylor series with scaling and squaring.
Matrix brute_expm_i(const Matrix& h, double t);

}  // namespace autotherm::testing
