// Copyright 2026 The autotherm Authors
// SPDX-License-Identifier: Apache-2.0
//
// Dense multipartite linear algebra. Composite indices are row-major with
// the first layout entry varying slowest, so for layout (a, b) the basis
// vector |i_a, i_b> sits at index i_a * d_b + i_b.

#pragma once

#include <complex>
#include <cstddef>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace autotherm {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

/// Canonical role labels. Factor order of a full scenario is
/// bath, system, memory, work.
namespace labels {
inline constexpr std::string_view kBath = "bath";
inline constexpr std::string_view kSystem = "system";
inline constexpr std::string_view kMemory = "memory";
inline constexpr std::string_view kWork = "work";
}  // namespace labels

namespace tol {
/// Hermiticity residual allowed relative to the operator's spectral norm.
inline constexpr double kHermitianRelative = 1e-10;
inline constexpr double kEig = 1e-12;
inline constexpr double kSchmidt = 1e-12;
}  // namespace tol

using LabelSet = std::vector<std::string>;

struct Subsystem {
  std::string label;
  std::size_t dim = 1;

  bool operator==(const Subsystem&) const = default;
};

class SubsystemLayout {
 public:
  SubsystemLayout() = default;
  explicit SubsystemLayout(std::vector<Subsystem> entries);

  /// Layout of two-level factors with the given labels.
  static SubsystemLayout qubits(std::initializer_list<std::string_view> names);

  [[nodiscard]] const std::vector<Subsystem>& entries() const noexcept { return entries_; }
  [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
  [[nodiscard]] std::size_t total_dim() const noexcept { return total_dim_; }
  [[nodiscard]] bool contains(std::string_view label) const noexcept;
  [[nodiscard]] std::size_t position(std::string_view label) const;
  [[nodiscard]] std::size_t dim_of(std::string_view label) const;
  [[nodiscard]] LabelSet labels() const;

  /// Stride of a factor in the composite index.
  [[nodiscard]] std::size_t stride(std::size_t position) const;

  [[nodiscard]] SubsystemLayout concat(const SubsystemLayout& other) const;
  /// Entries named in `keep`, in this layout's order.
  [[nodiscard]] SubsystemLayout restricted_to(const LabelSet& keep) const;
  /// Entries not named in `drop`, in this layout's order.
  [[nodiscard]] SubsystemLayout complement(const LabelSet& drop) const;

  bool operator==(const SubsystemLayout&) const = default;

 private:
  std::vector<Subsystem> entries_;
  std::size_t total_dim_ = 1;
};

/// Order of a Schatten norm; p in [1, inf].
class SchattenOrder {
 public:
  explicit SchattenOrder(double p);
  static SchattenOrder infinity() { return SchattenOrder(std::numeric_limits<double>::infinity()); }

  [[nodiscard]] double value() const noexcept { return p_; }
  [[nodiscard]] bool is_infinite() const noexcept { return p_ == std::numeric_limits<double>::infinity(); }
  /// Exponent 1 - 1/p appearing in dimension weights.
  [[nodiscard]] double dual_exponent() const noexcept { return is_infinite() ? 1.0 : 1.0 - 1.0 / p_; }

 private:
  double p_;
};

/// Parses "1", "2.5", "inf".
SchattenOrder parse_schatten_order(std::string_view text);

class CompositeOperator {
 public:
  CompositeOperator(SubsystemLayout layout, Matrix matrix);

  static CompositeOperator identity(const SubsystemLayout& layout);
  static CompositeOperator zero(const SubsystemLayout& layout);

  [[nodiscard]] const Matrix& matrix() const noexcept { return matrix_; }
  [[nodiscard]] const SubsystemLayout& layout() const noexcept { return layout_; }
  [[nodiscard]] std::size_t dim() const noexcept { return layout_.total_dim(); }

  [[nodiscard]] Complex trace() const { return matrix_.trace(); }
  [[nodiscard]] CompositeOperator adjoint() const;
  /// ||A - A^dagger||_inf
  [[nodiscard]] double hermiticity_residual() const;
  /// ||A^dagger A - 1||_inf
  [[nodiscard]] double unitarity_residual() const;
  [[nodiscard]] bool is_hermitian() const;

  CompositeOperator& operator+=(const CompositeOperator& rhs);
  CompositeOperator& operator-=(const CompositeOperator& rhs);
  CompositeOperator& operator*=(Complex scale);

 private:
  SubsystemLayout layout_;
  Matrix matrix_;
};

CompositeOperator operator+(CompositeOperator lhs, const CompositeOperator& rhs);
CompositeOperator operator-(CompositeOperator lhs, const CompositeOperator& rhs);
CompositeOperator operator*(const CompositeOperator& lhs, const CompositeOperator& rhs);
CompositeOperator operator*(Complex scale, CompositeOperator op);

/// Kronecker product; the left factor varies slowest.
CompositeOperator tensor_product(const CompositeOperator& a, const CompositeOperator& b);
Matrix kron(const Matrix& a, const Matrix& b);

CompositeOperator partial_trace(const CompositeOperator& op, const LabelSet& keep);
CompositeOperator partial_transpose(const CompositeOperator& op, const LabelSet& subset);

/// Reorders factors so that the result's layout lists `order` first to last.
CompositeOperator permute_subsystems(const CompositeOperator& op, const LabelSet& order);

/// Places `block`, an operator on the factors `block_labels` taken in the
/// given order, into `layout` with identities elsewhere.
CompositeOperator embed(const Matrix& block, const LabelSet& block_labels, const SubsystemLayout& layout);

double schatten_norm(const Matrix& a, SchattenOrder p);
double schatten_norm(const CompositeOperator& a, SchattenOrder p);
/// Schatten norm of a matrix known to be Hermitian (|eigenvalues|).
double hermitian_schatten_norm(const Matrix& a, SchattenOrder p);
double spectral_norm(const Matrix& a);

struct HermitianEigen {
  RealVector values;  // ascending
  Matrix vectors;     // columns are eigenvectors
};

HermitianEigen hermitian_eig(const Matrix& a);
HermitianEigen hermitian_eig(const CompositeOperator& a);

/// e^{-iHt} for all t from one eigendecomposition; immutable once built.
class Propagator {
 public:
  explicit Propagator(const CompositeOperator& h);

  [[nodiscard]] CompositeOperator at(double t) const;
  [[nodiscard]] const HermitianEigen& eigen() const noexcept { return eig_; }
  [[nodiscard]] const SubsystemLayout& layout() const noexcept { return layout_; }

 private:
  SubsystemLayout layout_;
  HermitianEigen eig_;
};

CompositeOperator evolution_operator(const CompositeOperator& h, double t);

struct SchmidtTerm {
  double weight = 0.0;
  Matrix left;
  Matrix right;
};

/// Operator-Schmidt decomposition across the cut (left | right). Factor
/// matrices act on the left/right labels in layout order; terms are sorted
/// by descending weight with unit Hilbert-Schmidt norm factors.
std::vector<SchmidtTerm> operator_schmidt(const CompositeOperator& h, const LabelSet& left, const LabelSet& right);

CompositeOperator commutator(const CompositeOperator& a, const CompositeOperator& b);
Matrix commutator(const Matrix& a, const Matrix& b);

}  // namespace autotherm
