#pragma once

#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "borbit/indexing.hpp"
#include "borbit/laurent.hpp"
#include "borbit/rational.hpp"

namespace borbit {

// Dense 2n x 2n matrix over an exact ring R (Rat or Laurent), with rows and
// columns addressed by signed indices 1..n,-n..-1.  Using distinct template
// instantiations for the two rings makes ring mixing a compile-time error.
template <class R>
class IndexedMatrix {
 public:
  IndexedMatrix() = default;
  explicit IndexedMatrix(int n) : n_(n), a_(static_cast<size_t>(4) * n * n) {
    if (n < 1) throw std::invalid_argument("matrix rank must be >= 1");
  }

  static IndexedMatrix identity(int n) {
    IndexedMatrix m(n);
    for (int p = 0; p < 2 * n; ++p) m.at_display(p, p) = R(1);
    return m;
  }

  int n() const { return n_; }
  int dim() const { return 2 * n_; }

  R& at(int i, int j) { return a_[idx(display_pos(i, n_), display_pos(j, n_))]; }
  const R& at(int i, int j) const { return a_[idx(display_pos(i, n_), display_pos(j, n_))]; }
  R& at_display(int r, int c) { return a_[idx(r, c)]; }
  const R& at_display(int r, int c) const { return a_[idx(r, c)]; }

  IndexedMatrix transpose() const {
    IndexedMatrix m(n_);
    for (int r = 0; r < dim(); ++r)
      for (int c = 0; c < dim(); ++c) m.at_display(c, r) = at_display(r, c);
    return m;
  }

  // Strictly-lower part in display order; diagonal and above are dropped.
  IndexedMatrix lower_projection() const {
    IndexedMatrix m(n_);
    for (int r = 0; r < dim(); ++r)
      for (int c = 0; c < r; ++c) m.at_display(r, c) = at_display(r, c);
    return m;
  }

  bool is_zero() const {
    for (const auto& v : a_)
      if (!(v == R(0))) return false;
    return true;
  }

  bool operator==(const IndexedMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }
  bool operator!=(const IndexedMatrix& o) const { return !(*this == o); }

  IndexedMatrix& operator+=(const IndexedMatrix& o) {
    check_same(o);
    for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
  }
  IndexedMatrix& operator-=(const IndexedMatrix& o) {
    check_same(o);
    for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
  }
  friend IndexedMatrix operator+(IndexedMatrix a, const IndexedMatrix& b) { return a += b; }
  friend IndexedMatrix operator-(IndexedMatrix a, const IndexedMatrix& b) { return a -= b; }

  friend IndexedMatrix operator*(const IndexedMatrix& a, const IndexedMatrix& b) {
    a.check_same(b);
    int d = a.dim();
    IndexedMatrix m(a.n_);
    for (int r = 0; r < d; ++r)
      for (int k = 0; k < d; ++k) {
        const R& x = a.at_display(r, k);
        if (x == R(0)) continue;
        for (int c = 0; c < d; ++c) {
          const R& y = b.at_display(k, c);
          if (!(y == R(0))) m.at_display(r, c) += x * y;
        }
      }
    return m;
  }

  friend IndexedMatrix operator*(const R& s, IndexedMatrix m) {
    for (auto& v : m.a_) v = s * v;
    return m;
  }

 private:
  size_t idx(int r, int c) const {
    assert(r >= 0 && r < dim() && c >= 0 && c < dim());
    return static_cast<size_t>(r) * dim() + c;
  }
  void check_same(const IndexedMatrix& o) const {
    if (n_ != o.n_) throw std::invalid_argument("matrix size mismatch");
  }

  int n_ = 0;
  std::vector<R> a_;
};

// J = [[0, s],[-s, 0]] where s is the n x n antidiagonal of ones; the
// symplectic form every membership test below refers to.
template <class R>
IndexedMatrix<R> symplectic_form(int n) {
  IndexedMatrix<R> j(n);
  for (int i = 1; i <= n; ++i) {
    // the antidiagonal of the upper-right block sits at (i, -i)
    j.at(i, -i) = R(1);
    j.at(-i, i) = R(-1);
  }
  return j;
}

template <class R>
bool is_symplectic_group(const IndexedMatrix<R>& x) {
  auto j = symplectic_form<R>(x.n());
  return x.transpose() * j * x == j;
}

template <class R>
bool is_symplectic_algebra(const IndexedMatrix<R>& x) {
  auto j = symplectic_form<R>(x.n());
  return (x.transpose() * j + j * x).is_zero();
}

template <class R>
bool is_upper_triangular(const IndexedMatrix<R>& x) {
  for (int r = 0; r < x.dim(); ++r)
    for (int c = 0; c < r; ++c)
      if (!(x.at_display(r, c) == R(0))) return false;
  return true;
}

template <class R>
bool is_strictly_lower(const IndexedMatrix<R>& x) {
  for (int r = 0; r < x.dim(); ++r)
    for (int c = r; c < x.dim(); ++c)
      if (!(x.at_display(r, c) == R(0))) return false;
  return true;
}

template <class R>
bool is_diagonal(const IndexedMatrix<R>& x) {
  for (int r = 0; r < x.dim(); ++r)
    for (int c = 0; c < x.dim(); ++c)
      if (r != c && !(x.at_display(r, c) == R(0))) return false;
  return true;
}

inline IndexedMatrix<Laurent> lift_to_laurent(const IndexedMatrix<Rat>& m) {
  IndexedMatrix<Laurent> r(m.n());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) r.at_display(i, j) = Laurent(m.at_display(i, j));
  return r;
}

// Entrywise limit at 0; throws NegativeExponentError carrying the signed
// position of the first offending entry.
inline IndexedMatrix<Rat> limit_at_zero(const IndexedMatrix<Laurent>& m) {
  IndexedMatrix<Rat> r(m.n());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) {
      const Laurent& v = m.at_display(i, j);
      if (!v.is_zero() && v.min_exponent() < 0)
        throw NegativeExponentError(signed_of_pos(i, m.n()), signed_of_pos(j, m.n()),
                                    v.min_exponent());
      r.at_display(i, j) = v.constant_term();
    }
  return r;
}

inline std::string scalar_str(const Rat& v) { return rat_str(v); }
inline std::string scalar_str(const Laurent& v) { return v.str(); }

// Pretty printer: display order with signed index headers.
template <class R>
std::string matrix_str(const IndexedMatrix<R>& m) {
  int d = m.dim();
  std::vector<std::string> cells(static_cast<size_t>(d) * d);
  std::vector<size_t> width(d);
  for (int c = 0; c < d; ++c) {
    width[c] = std::to_string(signed_of_pos(c, m.n())).size();
    for (int r = 0; r < d; ++r) {
      std::string s = scalar_str(m.at_display(r, c));
      cells[static_cast<size_t>(r) * d + c] = s;
      width[c] = std::max(width[c], s.size());
    }
  }
  size_t rowhdr = std::to_string(-m.n()).size() + 1;
  std::ostringstream os;
  os << std::string(rowhdr, ' ');
  for (int c = 0; c < d; ++c)
    os << "  " << std::setw(static_cast<int>(width[c])) << signed_of_pos(c, m.n());
  os << "\n";
  for (int r = 0; r < d; ++r) {
    os << std::setw(static_cast<int>(rowhdr)) << signed_of_pos(r, m.n());
    for (int c = 0; c < d; ++c)
      os << "  " << std::setw(static_cast<int>(width[c])) << cells[static_cast<size_t>(r) * d + c];
    os << "\n";
  }
  return os.str();
}

}  // namespace borbit
