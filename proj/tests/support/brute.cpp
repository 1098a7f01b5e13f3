// Copyright 2026 The autotherm Authors
// SPDX-License-Identifier: Apache-2.0

#include "brute.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>

namespace autotherm::testing {

std::vector<std::size_t> digits(std::size_t flat, const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> idx(dims.size());
  for (std::size_t k = dims.size(); k-- > 0;) {
    idx[k] = flat % dims[k];
    flat /= dims[k];
  }
  return idx;
}

std::size_t flatten(const std::vector<std::size_t>& idx, const std::vector<std::size_t>& dims) {
  std::size_t flat = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) flat = flat * dims[k] + idx[k];
  return flat;
}

Matrix brute_partial_trace(const Matrix& m, const std::vector<std::size_t>& dims, const std::vector<std::size_t>& keep) {
  std::vector<std::size_t> kept_dims;
  for (std::size_t k : keep) kept_dims.push_back(dims[k]);
  std::size_t out_dim = 1;
  for (std::size_t d : kept_dims) out_dim *= d;
  Matrix out = Matrix::Zero(static_cast<Eigen::Index>(out_dim), static_cast<Eigen::Index>(out_dim));
  const auto n = static_cast<std::size_t>(m.rows());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const auto ri = digits(r, dims);
      const auto ci = digits(c, dims);
      bool traced_equal = true;
      for (std::size_t k = 0; k < dims.size(); ++k) {
        if (std::find(keep.begin(), keep.end(), k) == keep.end() && ri[k] != ci[k]) traced_equal = false;
      }
      if (!traced_equal) continue;
      std::vector<std::size_t> ro;
      std::vector<std::size_t> co;
      for (std::size_t k : keep) {
        ro.push_back(ri[k]);
        co.push_back(ci[k]);
      }
      out(static_cast<Eigen::Index>(flatten(ro, kept_dims)), static_cast<Eigen::Index>(flatten(co, kept_dims))) +=
          m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }
  }
  return out;
}

Matrix brute_partial_transpose(const Matrix& m, const std::vector<std::size_t>& dims,
                               const std::vector<std::size_t>& transposed) {
  Matrix out(m.rows(), m.cols());
  const auto n = static_cast<std::size_t>(m.rows());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      auto ri = digits(r, dims);
      auto ci = digits(c, dims);
      for (std::size_t k : transposed) std::swap(ri[k], ci[k]);
      out(static_cast<Eigen::Index>(flatten(ri, dims)), static_cast<Eigen::Index>(flatten(ci, dims))) =
          m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }
  }
  return out;
}

double brute_schatten(const Matrix& a, double p) {
  const Eigen::SelfAdjointEigenSolver<Matrix> es(a.adjoint() * a, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd s = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  if (std::isinf(p)) return s.maxCoeff();
  double total = 0.0;
  for (Eigen::Index k = 0; k < s.size(); ++k) total += std::pow(s(k), p);
  return std::pow(total, 1.0 / p);
}

double simpson(const std::function<double(double)>& f, double a, double b, std::size_t panels) {
  if (panels % 2 != 0) ++panels;
  const double h = (b - a) / static_cast<double>(panels);
  double sum = f(a) + f(b);
  for (std::size_t k = 1; k < panels; ++k) sum += (k % 2 == 1 ? 4.0 : 2.0) * f(a + h * static_cast<double>(k));
  return sum * h / 3.0;
}

Matrix brute_expm_i(const Matrix& h, double t) {
  const double norm = h.cwiseAbs().rowwise().sum().maxCoeff() * std::abs(t);
  int squarings = 0;
  while (norm / std::pow(2.0, squarings) > 0.25) ++squarings;
  const Matrix a = Complex(0.0, -t / std::pow(2.0, squarings)) * h;
  Matrix term = Matrix::Identity(h.rows(), h.cols());
  Matrix sum = term;
  for (int k = 1; k < 30; ++k) {
    term = term * a / static_cast<double>(k);
    sum += term;
  }
  for (int k = 0; k < squarings; ++k) sum = sum * sum;
  return sum;
}

}  // namespace autotherm::testing
