#pragma once

#include "wg/poly.hpp"
#include "wg/rational.hpp"

#include <stdexcept>
#include <vector>

namespace wg {

template <class T>
class Mat {
public:
  Mat() : n_(0), m_(0) {}
  Mat(int n, int m) : n_(n), m_(m), a_(static_cast<size_t>(n) * m) {}
  static Mat identity(int n) {
    Mat r(n, n);
    for (int i = 0; i < n; i++) r(i, i) = T(1);
    return r;
  }

  int rows() const { return n_; }
  int cols() const { return m_; }
  T& operator()(int i, int j) { return a_[static_cast<size_t>(i) * m_ + j]; }
  const T& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * m_ + j]; }
  bool operator==(const Mat&) const = default;

  friend Mat operator*(const Mat& x, const Mat& y) {
    if (x.m_ != y.n_) throw std::invalid_argument("matrix product shape");
    Mat r(x.n_, y.m_);
    for (int i = 0; i < x.n_; i++)
      for (int k = 0; k < x.m_; k++) {
        const T& xik = x(i, k);
        if (xik == T(0)) continue;
        for (int j = 0; j < y.m_; j++) r(i, j) += xik * y(k, j);
      }
    return r;
  }

  friend Mat operator-(const Mat& x, const Mat& y) {
    if (x.n_ != y.n_ || x.m_ != y.m_) throw std::invalid_argument("matrix diff shape");
    Mat r(x.n_, x.m_);
    for (size_t i = 0; i < x.a_.size(); i++) r.a_[i] = x.a_[i] - y.a_[i];
    return r;
  }

private:
  int n_, m_;
  std::vector<T> a_;
};

// Fraction-free one-step Bareiss determinant; entries stay in the ring.
Poly det_bareiss(Mat<Poly> a);

// Plain fraction Gaussian elimination.
Rat det_exact(Mat<Rat> a);

// Determinant of a polynomial matrix by multi-prime modular evaluation and
// interpolation; exact, and much faster than Bareiss beyond ~20 rows.
Poly det_modular(const Mat<Poly>& a);

// Dispatcher: Bareiss for small matrices, modular for the rest.
Poly det_poly(const Mat<Poly>& a, int bareiss_cutoff = 12);

// Inverse over the fraction field; throws std::domain_error when singular.
Mat<RatFunc> invert(const Mat<Poly>& a);
Mat<Rat> invert(const Mat<Rat>& a);

// (adjugate, determinant) of a square polynomial matrix, computed by
// multi-prime evaluation, Newton interpolation, and CRT under rigorous
// degree and coefficient bounds, so a * adj == det * I exactly.
// Throws std::domain_error when the determinant is identically zero.
std::pair<Mat<Poly>, Poly> adjugate_poly(const Mat<Poly>& a);

// Exact check of a * adj == det * I done coefficientwise; intended for
// plain-Poly matrices of moderate degree.
bool adjugate_identity_holds(const Mat<Poly>& a, const Mat<Poly>& adj, const Poly& det);

// Greedy maximal independent row set of a square symmetric matrix, scanning
// rows in index order. Returns the selected indices, ascending.
std::vector<int> independent_rows(const Mat<Rat>& a);

Mat<Rat> submatrix(const Mat<Rat>& a, const std::vector<int>& rows,
                   const std::vector<int>& cols);

} // namespace wg
