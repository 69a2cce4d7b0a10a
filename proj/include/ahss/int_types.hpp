#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <Eigen/Core>

#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>

namespace ahss {

/// Arbitrary-precision integer scalar.
///
/// Thin value wrapper around boost::multiprecision::cpp_int exposing exactly
/// the operations the matrix layer needs. The wrapper keeps Eigen's template
/// machinery away from cpp_int's converting constructors, which do not
/// coexist with Eigen expression types in this Boost version.
class Int {
public:
  Int() = default;
  Int(int v) : v_(v) {}
  Int(long v) : v_(v) {}
  Int(long long v) : v_(v) {}
  explicit Int(const std::string& digits) : v_(digits) {}

  friend Int operator+(const Int& a, const Int& b) { return Int(a.v_ + b.v_); }
  friend Int operator-(const Int& a, const Int& b) { return Int(a.v_ - b.v_); }
  friend Int operator*(const Int& a, const Int& b) { return Int(a.v_ * b.v_); }
  /// Truncated division (rounds toward zero), exact on all inputs.
  friend Int operator/(const Int& a, const Int& b) { return Int(a.v_ / b.v_); }
  friend Int operator%(const Int& a, const Int& b) { return Int(a.v_ % b.v_); }
  Int operator-() const { return Int(-v_); }

  Int& operator+=(const Int& o) { v_ += o.v_; return *this; }
  Int& operator-=(const Int& o) { v_ -= o.v_; return *this; }
  Int& operator*=(const Int& o) { v_ *= o.v_; return *this; }

  friend bool operator==(const Int& a, const Int& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Int& a, const Int& b) { return a.v_ != b.v_; }
  friend bool operator<(const Int& a, const Int& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Int& a, const Int& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Int& a, const Int& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Int& a, const Int& b) { return a.v_ >= b.v_; }

  bool is_zero() const { return v_.is_zero(); }
  int sign() const { return v_.sign(); }
  bool fits_long() const;
  long to_long() const { return static_cast<long>(v_); }
  std::string str() const { return v_.str(); }

  friend Int abs(const Int& a) { return Int(boost::multiprecision::abs(a.v_)); }
  friend Int gcd(const Int& a, const Int& b) { return Int(boost::multiprecision::gcd(a.v_, b.v_)); }

  friend std::ostream& operator<<(std::ostream& os, const Int& x) { return os << x.v_.str(); }

private:
  explicit Int(boost::multiprecision::cpp_int v) : v_(std::move(v)) {}
  boost::multiprecision::cpp_int v_;
};

inline bool Int::fits_long() const {
  static const boost::multiprecision::cpp_int lo(std::numeric_limits<long>::min());
  static const boost::multiprecision::cpp_int hi(std::numeric_limits<long>::max());
  return v_ >= lo && v_ <= hi;
}

using IntMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using Eigen::Index;

}  // namespace ahss

namespace Eigen {

template <>
struct NumTraits<ahss::Int> : GenericNumTraits<ahss::Int> {
  typedef ahss::Int Real;
  typedef ahss::Int NonInteger;
  typedef ahss::Int Nested;
  typedef ahss::Int Literal;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 30,
    MulCost = 60,
  };
  static inline ahss::Int epsilon() { return 0; }
  static inline ahss::Int dummy_precision() { return 0; }
};

}  // namespace Eigen

namespace ahss {

/// Dense matrix from rows; `mat({{1, 2}, {3, 4}})`. `mat({}, cols)` for 0 x cols.
inline IntMat mat(std::initializer_list<std::initializer_list<long>> rows, Index cols_if_empty = 0) {
  const Index m = static_cast<Index>(rows.size());
  Index n = cols_if_empty;
  if (m > 0) n = static_cast<Index>(rows.begin()->size());
  IntMat a(m, n);
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (long v : row) a(i, j++) = v;
    ++i;
  }
  return a;
}

inline IntVec vec(std::initializer_list<long> entries) {
  IntVec v(static_cast<Index>(entries.size()));
  Index i = 0;
  for (long e : entries) v(i++) = e;
  return v;
}

inline bool is_zero(const IntMat& a) {
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i)
      if (!a(i, j).is_zero()) return false;
  return true;
}

inline bool is_zero(const IntVec& a) {
  for (Index i = 0; i < a.size(); ++i)
    if (!a(i).is_zero()) return false;
  return true;
}

inline bool same_matrix(const IntMat& a, const IntMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

/// [a | b], requiring equal row counts.
inline IntMat hstack(const IntMat& a, const IntMat& b) {
  IntMat r(a.rows(), a.cols() + b.cols());
  r.leftCols(a.cols()) = a;
  r.rightCols(b.cols()) = b;
  return r;
}

/// [a ; b], requiring equal column counts.
inline IntMat vstack(const IntMat& a, const IntMat& b) {
  IntMat r(a.rows() + b.rows(), a.cols());
  r.topRows(a.rows()) = a;
  r.bottomRows(b.rows()) = b;
  return r;
}

inline IntMat drop_zero_columns(const IntMat& a) {
  Index kept = 0;
  for (Index j = 0; j < a.cols(); ++j)
    if (!is_zero(IntVec(a.col(j)))) ++kept;
  IntMat r(a.rows(), kept);
  Index out = 0;
  for (Index j = 0; j < a.cols(); ++j)
    if (!is_zero(IntVec(a.col(j)))) r.col(out++) = a.col(j);
  return r;
}

}  // namespace ahss
