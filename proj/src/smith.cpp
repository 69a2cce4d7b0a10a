#include "ahss/smith.hpp"

#include <stdexcept>

namespace ahss {

namespace {

// Smallest nonzero |entry| in the lower-right block starting at (s, s).
// Returns false when the block is zero.
bool locate_pivot(const IntMat& d, Index s, Index& pr, Index& pc) {
  bool found = false;
  Int best = 0;
  for (Index i = s; i < d.rows(); ++i) {
    for (Index j = s; j < d.cols(); ++j) {
      if (d(i, j).is_zero()) continue;
      Int a = abs(d(i, j));
      if (!found || a < best) {
        found = true;
        best = a;
        pr = i;
        pc = j;
      }
    }
  }
  return found;
}

bool row_col_cleared(const IntMat& d, Index s) {
  for (Index i = s + 1; i < d.rows(); ++i)
    if (!d(i, s).is_zero()) return false;
  for (Index j = s + 1; j < d.cols(); ++j)
    if (!d(s, j).is_zero()) return false;
  return true;
}

// First entry in the strict lower-right block not divisible by d(s, s).
bool find_nondivisible(const IntMat& d, Index s, Index& r, Index& c) {
  for (Index i = s + 1; i < d.rows(); ++i)
    for (Index j = s + 1; j < d.cols(); ++j)
      if (!(d(i, j) % d(s, s)).is_zero()) {
        r = i;
        c = j;
        return true;
      }
  return false;
}

}  // namespace

Index SmithDecomposition::rank() const {
  Index r = 0;
  for (Index i = 0; i < diagonal_length(); ++i)
    if (!d(i, i).is_zero()) ++r;
  return r;
}

SmithDecomposition smith(const IntMat& a) {
  const Index m = a.rows(), n = a.cols();
  SmithDecomposition s;
  s.source = a;
  s.u = IntMat::Identity(m, m);
  s.v = IntMat::Identity(n, n);
  s.d = a;
  IntMat& d = s.d;

  const Index steps = std::min(m, n);
  for (Index i = 0; i < steps; ++i) {
    Index pr = i, pc = i;
    if (!locate_pivot(d, i, pr, pc)) break;  // remaining block is zero

    for (;;) {
      if (pr != i) {
        d.row(i).swap(d.row(pr));
        s.u.row(i).swap(s.u.row(pr));
      }
      if (pc != i) {
        d.col(i).swap(d.col(pc));
        s.v.col(i).swap(s.v.col(pc));
      }
      for (Index r = i + 1; r < m; ++r) {
        if (d(r, i).is_zero()) continue;
        Int q = d(r, i) / d(i, i);
        if (!q.is_zero()) {
          d.row(r) -= q * d.row(i);
          s.u.row(r) -= q * s.u.row(i);
        }
      }
      for (Index c = i + 1; c < n; ++c) {
        if (d(i, c).is_zero()) continue;
        Int q = d(i, c) / d(i, i);
        if (!q.is_zero()) {
          d.col(c) -= q * d.col(i);
          s.v.col(c) -= q * s.v.col(i);
        }
      }
      if (!row_col_cleared(d, i)) {
        locate_pivot(d, i, pr, pc);
        continue;
      }
      Index nr = 0, nc = 0;
      if (find_nondivisible(d, i, nr, nc)) {
        d.row(i) += d.row(nr);
        s.u.row(i) += s.u.row(nr);
        pr = i;
        pc = i;
        continue;
      }
      break;
    }
    if (d(i, i) < 0) {
      d.row(i) = -d.row(i);
      s.u.row(i) = -s.u.row(i);
    }
  }
  return s;
}

Int determinant(const IntMat& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix not square");
  const Index n = a.rows();
  if (n == 0) return 1;
  IntMat w = a;
  Int prev = 1;
  int sign = 1;
  for (Index k = 0; k + 1 < n; ++k) {
    if (w(k, k).is_zero()) {
      Index piv = -1;
      for (Index i = k + 1; i < n; ++i)
        if (!w(i, k).is_zero()) {
          piv = i;
          break;
        }
      if (piv < 0) return 0;
      w.row(k).swap(w.row(piv));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j)
        w(i, j) = (w(i, j) * w(k, k) - w(i, k) * w(k, j)) / prev;
      w(i, k) = 0;
    }
    prev = w(k, k);
  }
  Int det = w(n - 1, n - 1);
  return sign > 0 ? det : -det;
}

std::optional<IntVec> solve(const SmithDecomposition& s, const IntVec& b) {
  if (b.size() != s.source.rows()) throw std::invalid_argument("solve: dimension mismatch");
  IntVec c = s.u * b;
  const Index n = s.source.cols();
  IntVec y = IntVec::Zero(n);
  const Index k = s.diagonal_length();
  for (Index i = 0; i < c.size(); ++i) {
    if (i < k && !s.d(i, i).is_zero()) {
      if (!(c(i) % s.d(i, i)).is_zero()) return std::nullopt;
      y(i) = c(i) / s.d(i, i);
    } else if (!c(i).is_zero()) {
      return std::nullopt;
    }
  }
  return IntVec(s.v * y);
}

std::optional<IntVec> solve(const IntMat& a, const IntVec& b) {
  return solve(smith(a), b);
}

std::optional<IntMat> solve_matrix(const IntMat& a, const IntMat& b) {
  if (b.rows() != a.rows()) throw std::invalid_argument("solve_matrix: dimension mismatch");
  SmithDecomposition s = smith(a);
  IntMat x(a.cols(), b.cols());
  for (Index j = 0; j < b.cols(); ++j) {
    auto col = solve(s, IntVec(b.col(j)));
    if (!col) return std::nullopt;
    x.col(j) = *col;
  }
  return x;
}

IntMat kernel_basis(const SmithDecomposition& s) {
  const Index n = s.source.cols();
  const Index k = s.diagonal_length();
  Index count = 0;
  for (Index i = 0; i < n; ++i)
    if (i >= k || s.d(i, i).is_zero()) ++count;
  IntMat basis(n, count);
  Index out = 0;
  for (Index i = 0; i < n; ++i)
    if (i >= k || s.d(i, i).is_zero()) basis.col(out++) = s.v.col(i);
  return basis;
}

IntMat kernel_basis(const IntMat& a) {
  return kernel_basis(smith(a));
}

}  // namespace ahss
