// Copyright 2026 The autotherm Authors
// SPDX-License-Identifier: Apache-2.0

#include "autotherm/tensor.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

#include <unsupported/Eigen/KroneckerProduct>

#include "autotherm/errors.hpp"

namespace autotherm {
namespace {

/// Composite-index offsets of every multi-index over `positions`, enumerated
/// with the first listed position varying slowest.
std::vector<std::size_t> index_offsets(const SubsystemLayout& layout, const std::vector<std::size_t>& positions) {
  std::vector<std::size_t> out{0};
  for (std::size_t pos : positions) {
    const std::size_t d = layout.entries()[pos].dim;
    const std::size_t s = layout.stride(pos);
    std::vector<std::size_t> next;
    next.reserve(out.size() * d);
    for (std::size_t base : out) {
      for (std::size_t k = 0; k < d; ++k) next.push_back(base + k * s);
    }
    out = std::move(next);
  }
  return out;
}

std::vector<std::size_t> positions_of(const SubsystemLayout& layout, const LabelSet& names) {
  std::vector<std::size_t> out;
  out.reserve(names.size());
  std::set<std::size_t> seen;
  for (const auto& name : names) {
    const std::size_t p = layout.position(name);
    if (!seen.insert(p).second) throw LayoutError("label listed twice: " + name);
    out.push_back(p);
  }
  return out;
}

std::vector<std::size_t> complement_positions(const SubsystemLayout& layout, const std::vector<std::size_t>& taken) {
  std::vector<std::size_t> rest;
  for (std::size_t p = 0; p < layout.size(); ++p) {
    if (std::find(taken.begin(), taken.end(), p) == taken.end()) rest.push_back(p);
  }
  return rest;
}

void require_same_layout(const CompositeOperator& a, const CompositeOperator& b, const char* op) {
  if (!(a.layout() == b.layout())) throw LayoutError(std::string(op) + ": operands have different layouts");
}

}  // namespace

// ---------------------------------------------------------------- layout

SubsystemLayout::SubsystemLayout(std::vector<Subsystem> entries) : entries_(std::move(entries)) {
  std::set<std::string> seen;
  for (const auto& e : entries_) {
    if (e.label.empty()) throw LayoutError("empty subsystem label");
    if (e.dim < 1) throw LayoutError("subsystem '" + e.label + "' has dimension 0");
    if (!seen.insert(e.label).second) throw LayoutError("duplicate subsystem label: " + e.label);
    total_dim_ *= e.dim;
  }
}

SubsystemLayout SubsystemLayout::qubits(std::initializer_list<std::string_view> names) {
  std::vector<Subsystem> entries;
  for (auto n : names) entries.push_back({std::string(n), 2});
  return SubsystemLayout(std::move(entries));
}

bool SubsystemLayout::contains(std::string_view label) const noexcept {
  return std::any_of(entries_.begin(), entries_.end(), [&](const Subsystem& e) { return e.label == label; });
}

std::size_t SubsystemLayout::position(std::string_view label) const {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].label == label) return i;
  }
  throw LayoutError("unknown subsystem label: " + std::string(label));
}

std::size_t SubsystemLayout::dim_of(std::string_view label) const { return entries_[position(label)].dim; }

LabelSet SubsystemLayout::labels() const {
  LabelSet out;
  for (const auto& e : entries_) out.push_back(e.label);
  return out;
}

std::size_t SubsystemLayout::stride(std::size_t position) const {
  std::size_t s = 1;
  for (std::size_t i = position + 1; i < entries_.size(); ++i) s *= entries_[i].dim;
  return s;
}

SubsystemLayout SubsystemLayout::concat(const SubsystemLayout& other) const {
  std::vector<Subsystem> joined = entries_;
  joined.insert(joined.end(), other.entries_.begin(), other.entries_.end());
  return SubsystemLayout(std::move(joined));
}

SubsystemLayout SubsystemLayout::restricted_to(const LabelSet& keep) const {
  auto pos = positions_of(*this, keep);
  std::sort(pos.begin(), pos.end());
  std::vector<Subsystem> out;
  for (auto p : pos) out.push_back(entries_[p]);
  return SubsystemLayout(std::move(out));
}

SubsystemLayout SubsystemLayout::complement(const LabelSet& drop) const {
  const auto pos = positions_of(*this, drop);
  std::vector<Subsystem> out;
  for (auto p : complement_positions(*this, pos)) out.push_back(entries_[p]);
  return SubsystemLayout(std::move(out));
}

// ---------------------------------------------------------------- Schatten order

SchattenOrder::SchattenOrder(double p) : p_(p) {
  if (!(p >= 1.0)) {
    std::ostringstream msg;
    msg << "Schatten order must satisfy p >= 1, got " << p;
    throw ParameterError(msg.str());
  }
}

SchattenOrder parse_schatten_order(std::string_view text) {
  if (text == "inf" || text == "Inf" || text == "infinity") return SchattenOrder::infinity();
  double p = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, p);
  if (ec != std::errc() || ptr != end) throw ParameterError("invalid Schatten order: " + std::string(text));
  return SchattenOrder(p);
}

// ---------------------------------------------------------------- operator

CompositeOperator::CompositeOperator(SubsystemLayout layout, Matrix matrix)
    : layout_(std::move(layout)), matrix_(std::move(matrix)) {
  const auto d = static_cast<Eigen::Index>(layout_.total_dim());
  if (matrix_.rows() != d || matrix_.cols() != d) {
    std::ostringstream msg;
    msg << "matrix is " << matrix_.rows() << "x" << matrix_.cols() << " but layout dimension is " << d;
    throw LayoutError(msg.str());
  }
}

CompositeOperator CompositeOperator::identity(const SubsystemLayout& layout) {
  const auto d = static_cast<Eigen::Index>(layout.total_dim());
  return CompositeOperator(layout, Matrix::Identity(d, d));
}

CompositeOperator CompositeOperator::zero(const SubsystemLayout& layout) {
  const auto d = static_cast<Eigen::Index>(layout.total_dim());
  return CompositeOperator(layout, Matrix::Zero(d, d));
}

CompositeOperator CompositeOperator::adjoint() const { return CompositeOperator(layout_, matrix_.adjoint()); }

double CompositeOperator::hermiticity_residual() const { return spectral_norm(matrix_ - matrix_.adjoint()); }

double CompositeOperator::unitarity_residual() const {
  const Matrix g = matrix_.adjoint() * matrix_ - Matrix::Identity(matrix_.rows(), matrix_.cols());
  return spectral_norm(g);
}

bool CompositeOperator::is_hermitian() const {
  return hermiticity_residual() <= tol::kHermitianRelative * spectral_norm(matrix_);
}

CompositeOperator& CompositeOperator::operator+=(const CompositeOperator& rhs) {
  require_same_layout(*this, rhs, "operator+");
  matrix_ += rhs.matrix_;
  return *this;
}

CompositeOperator& CompositeOperator::operator-=(const CompositeOperator& rhs) {
  require_same_layout(*this, rhs, "operator-");
  matrix_ -= rhs.matrix_;
  return *this;
}

CompositeOperator& CompositeOperator::operator*=(Complex scale) {
  matrix_ *= scale;
  return *this;
}

CompositeOperator operator+(CompositeOperator lhs, const CompositeOperator& rhs) { return lhs += rhs; }
CompositeOperator operator-(CompositeOperator lhs, const CompositeOperator& rhs) { return lhs -= rhs; }

CompositeOperator operator*(const CompositeOperator& lhs, const CompositeOperator& rhs) {
  require_same_layout(lhs, rhs, "operator*");
  return CompositeOperator(lhs.layout(), lhs.matrix() * rhs.matrix());
}

CompositeOperator operator*(Complex scale, CompositeOperator op) { return op *= scale; }

// ---------------------------------------------------------------- structure

Matrix kron(const Matrix& a, const Matrix& b) { return Eigen::kroneckerProduct(a, b).eval(); }

CompositeOperator tensor_product(const CompositeOperator& a, const CompositeOperator& b) {
  return CompositeOperator(a.layout().concat(b.layout()), kron(a.matrix(), b.matrix()));
}

CompositeOperator partial_trace(const CompositeOperator& op, const LabelSet& keep) {
  if (keep.empty()) throw LayoutError("partial_trace: keep set is empty");
  const auto& layout = op.layout();
  auto kept = positions_of(layout, keep);
  std::sort(kept.begin(), kept.end());
  const auto traced = complement_positions(layout, kept);
  const auto off_k = index_offsets(layout, kept);
  const auto off_t = index_offsets(layout, traced);

  const auto dk = static_cast<Eigen::Index>(off_k.size());
  Matrix out = Matrix::Zero(dk, dk);
  const Matrix& m = op.matrix();
  for (Eigen::Index c = 0; c < dk; ++c) {
    for (Eigen::Index r = 0; r < dk; ++r) {
      Complex acc{0.0, 0.0};
      for (std::size_t t : off_t) acc += m(off_k[r] + t, off_k[c] + t);
      out(r, c) = acc;
    }
  }
  return CompositeOperator(layout.restricted_to(keep), std::move(out));
}

CompositeOperator partial_transpose(const CompositeOperator& op, const LabelSet& subset) {
  const auto& layout = op.layout();
  const auto chosen = positions_of(layout, subset);
  const auto rest = complement_positions(layout, chosen);
  const auto off_s = index_offsets(layout, chosen);
  const auto off_r = index_offsets(layout, rest);

  const Matrix& m = op.matrix();
  Matrix out(m.rows(), m.cols());
  for (std::size_t a : off_s) {
    for (std::size_t b : off_s) {
      for (std::size_t r : off_r) {
        for (std::size_t c : off_r) out(a + r, b + c) = m(b + r, a + c);
      }
    }
  }
  return CompositeOperator(layout, std::move(out));
}

CompositeOperator permute_subsystems(const CompositeOperator& op, const LabelSet& order) {
  const auto& layout = op.layout();
  if (order.size() != layout.size()) throw LayoutError("permute_subsystems: order must list every label once");
  const auto pos = positions_of(layout, order);
  std::vector<Subsystem> entries;
  for (auto p : pos) entries.push_back(layout.entries()[p]);
  const auto old_index = index_offsets(layout, pos);

  const Matrix& m = op.matrix();
  Matrix out(m.rows(), m.cols());
  const auto d = static_cast<Eigen::Index>(old_index.size());
  for (Eigen::Index c = 0; c < d; ++c) {
    for (Eigen::Index r = 0; r < d; ++r) out(r, c) = m(old_index[r], old_index[c]);
  }
  return CompositeOperator(SubsystemLayout(std::move(entries)), std::move(out));
}

CompositeOperator embed(const Matrix& block, const LabelSet& block_labels, const SubsystemLayout& layout) {
  const auto chosen = positions_of(layout, block_labels);
  const auto off_s = index_offsets(layout, chosen);
  const auto off_r = index_offsets(layout, complement_positions(layout, chosen));
  const auto ds = static_cast<Eigen::Index>(off_s.size());
  if (block.rows() != ds || block.cols() != ds) throw LayoutError("embed: block dimension does not match its labels");

  const auto d = static_cast<Eigen::Index>(layout.total_dim());
  Matrix m = Matrix::Zero(d, d);
  for (Eigen::Index a = 0; a < ds; ++a) {
    for (Eigen::Index b = 0; b < ds; ++b) {
      const Complex v = block(a, b);
      if (v == Complex{}) continue;
      for (std::size_t r : off_r) m(off_s[a] + r, off_s[b] + r) = v;
    }
  }
  return CompositeOperator(layout, std::move(m));
}

// ---------------------------------------------------------------- norms

namespace {

double norm_from_values(const RealVector& magnitudes, SchattenOrder p) {
  if (magnitudes.size() == 0) return 0.0;
  const double top = magnitudes.maxCoeff();
  if (p.is_infinite()) return top;
  if (p.value() == 1.0) return magnitudes.sum();
  if (top == 0.0) return 0.0;
  double acc = 0.0;
  for (double s : magnitudes) acc += std::pow(s / top, p.value());
  return top * std::pow(acc, 1.0 / p.value());
}

}  // namespace

double spectral_norm(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(a);
  return svd.singularValues()(0);
}

double schatten_norm(const Matrix& a, SchattenOrder p) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(a);
  return norm_from_values(svd.singularValues(), p);
}

double schatten_norm(const CompositeOperator& a, SchattenOrder p) { return schatten_norm(a.matrix(), p); }

double hermitian_schatten_norm(const Matrix& a, SchattenOrder p) {
  if (a.rows() == 2) {
    // eigenvalues (a00 + a11)/2 +- sqrt(((a00 - a11)/2)^2 + |a01|^2)
    const double mean = 0.5 * (a(0, 0).real() + a(1, 1).real());
    const double half = 0.5 * (a(0, 0).real() - a(1, 1).real());
    const double radius = std::hypot(half, std::abs(a(0, 1)));
    RealVector mags(2);
    mags << std::abs(mean + radius), std::abs(mean - radius);
    return norm_from_values(mags, p);
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(a, Eigen::EigenvaluesOnly);
  return norm_from_values(solver.eigenvalues().cwiseAbs(), p);
}

// ---------------------------------------------------------------- spectral

HermitianEigen hermitian_eig(const Matrix& a) {
  const double scale = spectral_norm(a);
  const double residual = spectral_norm(a - a.adjoint());
  if (residual > tol::kHermitianRelative * scale) {
    std::ostringstream msg;
    msg << "hermitian_eig: input is not Hermitian (residual " << residual << ", norm " << scale << ")";
    throw ContractError(msg.str());
  }
  const Matrix sym = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
  if (solver.info() != Eigen::Success) throw ContractError("hermitian_eig: eigensolver did not converge");
  return HermitianEigen{solver.eigenvalues(), solver.eigenvectors()};
}

HermitianEigen hermitian_eig(const CompositeOperator& a) { return hermitian_eig(a.matrix()); }

Propagator::Propagator(const CompositeOperator& h) : layout_(h.layout()), eig_(hermitian_eig(h)) {}

CompositeOperator Propagator::at(double t) const {
  const auto n = eig_.values.size();
  Eigen::VectorXcd phases(n);
  for (Eigen::Index k = 0; k < n; ++k) phases(k) = std::polar(1.0, -eig_.values(k) * t);
  Matrix u = eig_.vectors * phases.asDiagonal() * eig_.vectors.adjoint();
  return CompositeOperator(layout_, std::move(u));
}

CompositeOperator evolution_operator(const CompositeOperator& h, double t) { return Propagator(h).at(t); }

// ---------------------------------------------------------------- Schmidt

namespace {

/// Removes the phase freedom of a factor pair so that factors of Hermitian
/// operators come out Hermitian with a fixed sign.
void normalize_phase(Matrix& left, Matrix& right) {
  const Complex square = (left * left).trace();
  if (std::abs(square) > 1e-12) {
    const Complex rot = std::polar(1.0, -0.5 * std::arg(square));
    left *= rot;
    right /= rot;
  }
  Eigen::Index best = 0;
  double best_mag = -1.0;
  for (Eigen::Index k = 0; k < left.size(); ++k) {
    const double mag = std::abs(left.data()[k]);
    if (mag > best_mag + 1e-12) {
      best_mag = mag;
      best = k;
    }
  }
  const Complex pivot = left.data()[best];
  const bool negative = pivot.real() < 0.0 || (pivot.real() == 0.0 && pivot.imag() < 0.0);
  if (negative) {
    left = -left;
    right = -right;
  }
}

}  // namespace

std::vector<SchmidtTerm> operator_schmidt(const CompositeOperator& h, const LabelSet& left, const LabelSet& right) {
  const auto& layout = h.layout();
  if (left.empty() || right.empty() || left.size() + right.size() != layout.size()) {
    throw LayoutError("operator_schmidt: cut must partition the layout into two non-empty parts");
  }
  const SubsystemLayout left_layout = layout.restricted_to(left);
  const SubsystemLayout right_layout = layout.restricted_to(right);
  LabelSet order = left_layout.labels();
  for (const auto& l : right_layout.labels()) order.push_back(l);
  const CompositeOperator ordered = permute_subsystems(h, order);

  const auto dl = static_cast<Eigen::Index>(left_layout.total_dim());
  const auto dr = static_cast<Eigen::Index>(right_layout.total_dim());
  const Matrix& m = ordered.matrix();
  Matrix realigned(dl * dl, dr * dr);
  for (Eigen::Index i = 0; i < dl; ++i) {
    for (Eigen::Index j = 0; j < dl; ++j) {
      for (Eigen::Index k = 0; k < dr; ++k) {
        for (Eigen::Index l = 0; l < dr; ++l) realigned(i * dl + j, k * dr + l) = m(i * dr + k, j * dr + l);
      }
    }
  }

  Eigen::JacobiSVD<Matrix> svd(realigned, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const RealVector& s = svd.singularValues();
  std::vector<SchmidtTerm> terms;
  if (s.size() == 0 || s(0) == 0.0) return terms;
  const double cutoff = tol::kSchmidt * s(0);
  for (Eigen::Index n = 0; n < s.size(); ++n) {
    if (s(n) <= cutoff) break;
    SchmidtTerm t;
    t.weight = s(n);
    t.left = svd.matrixU().col(n).reshaped<Eigen::RowMajor>(dl, dl);
    t.right = svd.matrixV().col(n).conjugate().reshaped<Eigen::RowMajor>(dr, dr);
    normalize_phase(t.left, t.right);
    terms.push_back(std::move(t));
  }
  return terms;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

CompositeOperator commutator(const CompositeOperator& a, const CompositeOperator& b) {
  require_same_layout(a, b, "commutator");
  return CompositeOperator(a.layout(), commutator(a.matrix(), b.matrix()));
}

}  // namespace autotherm
