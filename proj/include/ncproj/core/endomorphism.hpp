#pragma once

#include "ncproj/core/dense.hpp"
#include "ncproj/core/nc_polynomial.hpp"

namespace ncproj {

/// Linear map on the span of the unit-weight generators, extended
/// multiplicatively to the free algebra. Column j holds the image of
/// generator j, so composition corresponds to the matrix product.
template <ExactField S>
class GradedEndomorphism {
 public:
  explicit GradedEndomorphism(DenseMatrix<S> matrix) : m_(std::move(matrix)) {
    if (m_.rows() != m_.cols()) throw DomainError("endomorphism matrix must be square");
  }
  static GradedEndomorphism identity(Eigen::Index n) {
    return GradedEndomorphism(DenseMatrix<S>::Identity(n, n));
  }
  static GradedEndomorphism diagonal(const std::vector<S>& entries) {
    DenseMatrix<S> m = DenseMatrix<S>::Identity(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return GradedEndomorphism(std::move(m));
  }

  const DenseMatrix<S>& matrix() const { return m_; }
  Eigen::Index dimension() const { return m_.rows(); }
  bool is_invertible() const { return rank(m_) == m_.rows(); }
  GradedEndomorphism inverse() const {
    auto inv = inverse_matrix(m_);
    if (!inv) throw DomainError("endomorphism is not invertible");
    return GradedEndomorphism(*inv);
  }

  /// (this o other)(p) = this(other(p)).
  GradedEndomorphism compose(const GradedEndomorphism& other) const {
    if (other.dimension() != dimension()) throw DomainError("endomorphism dimension mismatch");
    return GradedEndomorphism(multiply(m_, other.m_));
  }
  GradedEndomorphism power(int k) const {
    if (k < 0) return inverse().power(-k);
    GradedEndomorphism r = identity(dimension());
    for (int i = 0; i < k; ++i) r = compose(r);
    return r;
  }

  /// Image of generator g as a linear form.
  NcPolynomial<S> image(Letter g) const {
    if (g >= m_.cols()) throw DomainError("endomorphism dimension mismatch");
    NcPolynomial<S> r;
    for (Eigen::Index i = 0; i < m_.rows(); ++i) r.add_term(Word({static_cast<Letter>(i)}), m_(i, g));
    return r;
  }

  NcPolynomial<S> apply(const NcPolynomial<S>& p) const {
    std::vector<NcPolynomial<S>> images;
    for (Eigen::Index g = 0; g < m_.cols(); ++g) images.push_back(image(static_cast<Letter>(g)));
    NcPolynomial<S> out;
    for (const auto& [w, c] : p.terms()) {
      NcPolynomial<S> acc(c);
      for (Letter l : w.letters()) {
        if (l >= images.size()) throw DomainError("endomorphism dimension mismatch");
        acc = acc * images[l];
      }
      out += acc;
    }
    return out;
  }

 private:
  DenseMatrix<S> m_;
};

}  // namespace ncproj
