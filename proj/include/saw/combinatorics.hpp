#pragma once

#include <mpfr.h>

#include <cstdint>
#include <cstdlib>

#include "saw/bignat.hpp"
#include "saw/error.hpp"

namespace saw {

inline BigNat binomial(std::uint64_t n, std::uint64_t k) {
  BigNat out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);  // zero when k > n
  return out;
}

/// Number of walks of length n1+n2+2t from (0,0) to (n1,n2).
inline BigNat walk_count(std::uint64_t n1, std::uint64_t n2, std::uint64_t t) {
  const std::uint64_t len = n1 + n2 + 2 * t;
  return binomial(len, t) * binomial(len, n1 + t);
}

/// Number of closed walks of length 2k through a fixed point.
inline BigNat closed_walk_count(std::uint64_t k) {
  BigNat c = binomial(2 * k, k);
  return c * c;
}

namespace detail {

class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

/// Outward-rounded enclosure [lo, hi] of a rational.
struct Enclosure {
  Mpfr lo;
  Mpfr hi;
  Enclosure(const mpq_class& q, mpfr_prec_t prec) : lo(prec), hi(prec) {
    mpfr_set_q(lo.get(), q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi.get(), q.get_mpq_t(), MPFR_RNDU);
  }
};

enum class Verdict { certainly_true, certainly_false, undecided };

/// Decides a <= b given enclosures of both sides.
inline Verdict compare_le(mpfr_srcptr a_lo, mpfr_srcptr a_hi, mpfr_srcptr b_lo, mpfr_srcptr b_hi) {
  if (mpfr_lessequal_p(a_hi, b_lo)) return Verdict::certainly_true;
  if (mpfr_greater_p(a_lo, b_hi)) return Verdict::certainly_false;
  return Verdict::undecided;
}

}  // namespace detail

/// Certified check of the two-sided estimate
///   (n^k/k!) exp(E/(2n) - (2k|x| + 2k^2)/n) <= C(n+x, k) <= (n^k/k!) exp(E/(2n)),
/// with E = 2kx - k^2 + k. Requires |x|, k <= n/10 and n+x-k >= |x|, k.
///
/// The binomial side is exact; logarithms are enclosed with directed
/// rounding and the precision is raised until the verdict is certain.
inline bool binomial_bound_check(std::int64_t n, std::int64_t x, std::int64_t k) {
  const std::int64_t ax = std::llabs(x);
  if (n < 1 || k < 0 || 10 * ax > n || 10 * k > n || n + x - k < ax || n + x - k < k)
    throw invalid_argument("binomial_bound_check: precondition violated");

  // ratio = C(n+x,k) * k! / n^k = prod_{i<k} (n+x-i)/n
  mpz_class num = 1;
  for (std::int64_t i = 0; i < k; ++i) num *= mpz_class(std::to_string(n + x - i));
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  mpq_class ratio(num, den);
  ratio.canonicalize();

  const mpz_class big_n(std::to_string(n)), big_x(std::to_string(x)), big_k(std::to_string(k));
  const mpz_class e = 2 * big_k * big_x - big_k * big_k + big_k;
  mpq_class upper_exp(e, 2 * big_n);
  upper_exp.canonicalize();
  mpq_class lower_exp = upper_exp - mpq_class(2 * big_k * mpz_class(std::to_string(ax)) + 2 * big_k * big_k, big_n);
  lower_exp.canonicalize();

  if (ratio == 1) return lower_exp <= 0 && 0 <= upper_exp;

  // ln(ratio) is irrational here, so refinement terminates.
  for (mpfr_prec_t prec = 128; prec <= (1 << 20); prec *= 2) {
    detail::Enclosure r(ratio, prec), lo(lower_exp, prec), hi(upper_exp, prec);
    detail::Mpfr ln_lo(prec), ln_hi(prec);
    mpfr_log(ln_lo.get(), r.lo.get(), MPFR_RNDD);
    mpfr_log(ln_hi.get(), r.hi.get(), MPFR_RNDU);
    auto left = detail::compare_le(lo.lo.get(), lo.hi.get(), ln_lo.get(), ln_hi.get());
    auto right = detail::compare_le(ln_lo.get(), ln_hi.get(), hi.lo.get(), hi.hi.get());
    if (left == detail::Verdict::certainly_false || right == detail::Verdict::certainly_false) return false;
    if (left == detail::Verdict::certainly_true && right == detail::Verdict::certainly_true) return true;
  }
  throw error("binomial_bound_check: precision limit reached");
}

}  // namespace saw
