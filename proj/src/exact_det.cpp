#include "csnd/exact_det.hpp"

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "csnd/errors.hpp"

namespace csnd {

namespace {

struct Int64Overflow {};

// Arithmetic shims so the Bareiss loop below can run in either 64-bit
// integers (with overflow detection) or arbitrary precision.
inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Int64Overflow{};
  return r;
}
inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Int64Overflow{};
  return r;
}
inline std::int64_t div_exact(std::int64_t a, std::int64_t b) { return a / b; }

inline mpz_class mul(const mpz_class& a, const mpz_class& b) { return a * b; }
inline mpz_class sub(const mpz_class& a, const mpz_class& b) { return a - b; }
inline mpz_class div_exact(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Fraction-free elimination: after step k every entry is an exact integer
// (a minor of the input), and the last pivot is the determinant.
template <class T>
T bareiss(std::vector<T> a, int n) {
  int sign = 1;
  T prev = T(1);
  auto at = [&](int i, int j) -> T& { return a[static_cast<size_t>(i) * n + j]; };
  for (int k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      int r = k + 1;
      while (r < n && at(r, k) == 0) ++r;
      if (r == n) return T(0);
      for (int j = k; j < n; ++j) std::swap(at(k, j), at(r, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        at(i, j) = div_exact(sub(mul(at(i, j), at(k, k)), mul(at(i, k), at(k, j))), prev);
    prev = at(k, k);
  }
  T det = at(n - 1, n - 1);
  return sign < 0 ? T(-det) : det;
}

}  // namespace

ExactDeterminant exact_integer_determinant(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) throw ValidationError("determinant of a non-square matrix");
  const int n = static_cast<int>(m.rows());
  if (n == 0) throw ValidationError("determinant of an empty matrix");

  constexpr double kMaxExact = 9007199254740992.0;  // 2^53
  std::vector<std::int64_t> ints(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double v = m(i, j);
      if (!std::isfinite(v) || std::nearbyint(v) != v || std::abs(v) > kMaxExact)
        throw ValidationError("matrix entries are not exact integers");
      ints[static_cast<size_t>(i) * n + j] = static_cast<std::int64_t>(v);
    }

  ExactDeterminant out;
  try {
    std::int64_t det = bareiss(ints, n);
    out.is_zero = det == 0;
    out.decimal = std::to_string(det);
    out.approx = static_cast<double>(det);
  } catch (const Int64Overflow&) {
    std::vector<mpz_class> big(ints.size());
    for (size_t i = 0; i < ints.size(); ++i)
      big[i] = mpz_class(static_cast<long>(ints[i]));
    mpz_class det = bareiss(std::move(big), n);
    out.is_zero = det == 0;
    out.decimal = det.get_str();
    out.approx = det.get_d();
  }
  return out;
}

}  // namespace csnd
