// Copyright 2026 The symdyn authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "stirling.hpp"

#include <gmp.h>
#include <mpfr.h>

#include <cmath>

namespace symdyn {

namespace {

constexpr mpfr_prec_t kPrec = 192;

void check_gamma(const Rational& gamma) {
  if (!(gamma > Rational(0, 1) && gamma < Rational(1, 2)))
    fail(ErrorCode::domain, "gamma must lie in (0, 1/2)");
}

// kappa with directed rounding: rounds the result down (RNDD) or up (RNDU).
void kappa_directed(const Rational& gamma, mpfr_rnd_t dir, mpfr_t out) {
  // kappa = -2 (g ln g + (1-g) ln(1-g)); the parenthesized sum is negative,
  // so rounding kappa down means rounding the sum toward zero (up).
  mpfr_rnd_t inner = dir == MPFR_RNDD ? MPFR_RNDU : MPFR_RNDD;
  mpfr_t g, omg, lg, lomg, t1, t2, sum;
  mpfr_inits2(kPrec, g, omg, lg, lomg, t1, t2, sum, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_si(g, gamma.num, MPFR_RNDN);
  mpfr_div_si(g, g, gamma.den, MPFR_RNDN);  // exact enough at this precision
  mpfr_ui_sub(omg, 1, g, MPFR_RNDN);
  mpfr_log(lg, g, inner);
  mpfr_log(lomg, omg, inner);
  mpfr_mul(t1, g, lg, inner);
  mpfr_mul(t2, omg, lomg, inner);
  mpfr_add(sum, t1, t2, inner);
  mpfr_mul_si(out, sum, -2, dir);
  mpfr_clears(g, omg, lg, lomg, t1, t2, sum, static_cast<mpfr_ptr>(nullptr));
}

}  // namespace

double kappa(const Rational& gamma) {
  check_gamma(gamma);
  mpfr_t k;
  mpfr_init2(k, kPrec);
  kappa_directed(gamma, MPFR_RNDN, k);
  double out = mpfr_get_d(k, MPFR_RNDN);
  mpfr_clear(k);
  return out;
}

std::int64_t d_zero(const Rational& gamma) {
  check_gamma(gamma);
  mpfr_t klo;
  mpfr_init2(klo, kPrec);
  kappa_directed(gamma, MPFR_RNDD, klo);

  // exp(kappa x / 2) > x^3 is monotone in x once x > 6/kappa
  double kd = mpfr_get_d(klo, MPFR_RNDD);
  std::int64_t start = (2 * gamma.den + gamma.num - 1) / gamma.num;  // ceil(2/gamma)
  std::int64_t mono = static_cast<std::int64_t>(std::ceil(6.0 / kd)) + 1;
  std::int64_t d = std::max(start, mono);

  mpfr_t lhs, rhs;
  mpfr_inits2(kPrec, lhs, rhs, static_cast<mpfr_ptr>(nullptr));
  auto g_positive = [&](std::int64_t x) {
    // certified exp(kappa_lo x / 2) > x^3
    mpfr_mul_si(lhs, klo, x, MPFR_RNDD);
    mpfr_div_ui(lhs, lhs, 2, MPFR_RNDD);
    mpfr_exp(lhs, lhs, MPFR_RNDD);
    mpfr_set_si(rhs, x, MPFR_RNDU);
    mpfr_pow_ui(rhs, rhs, 3, MPFR_RNDU);
    return mpfr_cmp(lhs, rhs) > 0;
  };
  while (!g_positive(d)) {
    ++d;
    if (d > (std::int64_t{1} << 32)) fail(ErrorCode::internal, "d0 scan diverged");
  }
  // grid re-check past the threshold
  for (std::int64_t x = d; x < d + 100; ++x)
    if (!g_positive(x)) fail(ErrorCode::internal, "G(x) dipped after the returned d0");
  mpfr_clears(lhs, rhs, static_cast<mpfr_ptr>(nullptr));
  mpfr_clear(klo);
  return d;
}

TailReport verify_tail_bound(const Rational& gamma, std::int64_t d_lo, std::int64_t d_hi) {
  check_gamma(gamma);
  TailReport report;
  report.d0 = d_zero(gamma);
  report.kappa_value = kappa(gamma);
  if (d_lo < report.d0)
    fail(ErrorCode::invalid_argument,
         "tail bound range must start at or above d0 = " + std::to_string(report.d0));
  if (d_hi < d_lo) fail(ErrorCode::invalid_argument, "empty d range");

  mpfr_t klo, kd, lnsum;
  mpfr_inits2(kPrec, klo, kd, lnsum, static_cast<mpfr_ptr>(nullptr));
  kappa_directed(gamma, MPFR_RNDD, klo);
  // pad for the (negligible) rounding of gamma itself, keeping the pass
  // a genuine one-sided certificate
  mpfr_sub_d(klo, klo, 1e-18, MPFR_RNDD);

  mpz_t sum, binom;
  mpz_init(sum);
  mpz_init(binom);
  for (std::int64_t d = d_lo; d <= d_hi; ++d) {
    // floor(gamma d)
    std::int64_t j_max = (gamma.num * d) / gamma.den;
    mpz_set_ui(sum, 0);
    for (std::int64_t j = 0; j <= j_max; ++j) {
      mpz_bin_uiui(binom, static_cast<unsigned long>(d), static_cast<unsigned long>(j));
      mpz_add(sum, sum, binom);
    }
    // ln(sum) rounded up vs kappa_lo * d rounded down
    mpfr_set_z(lnsum, sum, MPFR_RNDU);
    mpfr_log(lnsum, lnsum, MPFR_RNDU);
    mpfr_mul_si(kd, klo, d, MPFR_RNDD);
    if (mpfr_cmp(lnsum, kd) > 0) {
      mpz_clears(sum, binom, nullptr);
      mpfr_clears(klo, kd, lnsum, static_cast<mpfr_ptr>(nullptr));
      fail(ErrorCode::certificate, "binomial tail bound violated at gamma=" + gamma.str() +
                                       ", d=" + std::to_string(d));
    }
    TailSlack row;
    row.d = d;
    row.log_sum = mpfr_get_d(lnsum, MPFR_RNDN);
    mpfr_t slack;
    mpfr_init2(slack, kPrec);
    mpfr_sub(slack, kd, lnsum, MPFR_RNDN);
    row.slack = mpfr_get_d(slack, MPFR_RNDN);
    mpfr_clear(slack);
    report.rows.push_back(row);
  }
  mpz_clears(sum, binom, nullptr);
  mpfr_clears(klo, kd, lnsum, static_cast<mpfr_ptr>(nullptr));
  report.all_pass = true;
  return report;
}

TailReport verify_tail_bound_span(const Rational& gamma, std::int64_t span) {
  std::int64_t d0 = d_zero(gamma);
  return verify_tail_bound(gamma, d0, d0 + span);
}

std::pair<std::string, std::string> binomial_subset_identity(int n, const Rational& t) {
  if (n < 0 || n > 30) fail(ErrorCode::invalid_argument, "n must lie in [0, 30]");
  mpq_t lhs, rhs, term, tq, power;
  mpq_inits(lhs, rhs, term, tq, power, nullptr);
  mpq_set_si(tq, t.num, static_cast<unsigned long>(t.den));
  mpq_canonicalize(tq);

  // lhs = sum_j C(n,j) t^j
  mpq_set_ui(power, 1, 1);
  mpq_set_ui(lhs, 0, 1);
  mpz_t binom;
  mpz_init(binom);
  for (int j = 0; j <= n; ++j) {
    mpz_bin_uiui(binom, static_cast<unsigned long>(n), static_cast<unsigned long>(j));
    mpq_set_z(term, binom);
    mpq_mul(term, term, power);
    mpq_add(lhs, lhs, term);
    mpq_mul(power, power, tq);
  }
  // rhs = (1+t)^n
  mpq_set_ui(rhs, 1, 1);
  mpq_set_ui(term, 1, 1);
  mpq_add(term, term, tq);
  for (int j = 0; j < n; ++j) mpq_mul(rhs, rhs, term);

  if (!mpq_equal(lhs, rhs)) {
    mpz_clear(binom);
    mpq_clears(lhs, rhs, term, tq, power, nullptr);
    fail(ErrorCode::certificate, "binomial subset identity failed");
  }
  char* num = mpz_get_str(nullptr, 10, mpq_numref(lhs));
  char* den = mpz_get_str(nullptr, 10, mpq_denref(lhs));
  std::pair<std::string, std::string> out(num, den);
  free(num);
  free(den);
  mpz_clear(binom);
  mpq_clears(lhs, rhs, term, tq, power, nullptr);
  return out;
}

FactorialBounds stirling_factorial_bounds(int m) {
  if (m < 1) fail(ErrorCode::invalid_argument, "m must be positive");
  mpz_t fact;
  mpz_init(fact);
  mpz_fac_ui(fact, static_cast<unsigned long>(m));

  // ln m! exactly summed with directed rounding on each side
  mpfr_t lf_lo, lf_hi, t;
  mpfr_inits2(kPrec, lf_lo, lf_hi, t, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_z(t, fact, MPFR_RNDD);
  mpfr_log(lf_lo, t, MPFR_RNDD);
  mpfr_set_z(t, fact, MPFR_RNDU);
  mpfr_log(lf_hi, t, MPFR_RNDU);

  // lower: ln(e (m/e)^m) = 1 + m ln m - m; must be <= ln m!
  mpfr_t lo_hi, hi_lo, lnm;
  mpfr_inits2(kPrec, lo_hi, hi_lo, lnm, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_ui(lnm, static_cast<unsigned long>(m), MPFR_RNDN);
  mpfr_log(lnm, lnm, MPFR_RNDU);
  mpfr_mul_ui(lo_hi, lnm, static_cast<unsigned long>(m), MPFR_RNDU);
  mpfr_add_ui(lo_hi, lo_hi, 1, MPFR_RNDU);
  mpfr_sub_ui(lo_hi, lo_hi, static_cast<unsigned long>(m), MPFR_RNDU);
  if (mpfr_cmp(lo_hi, lf_lo) > 0) {
    // retry with exact-direction rounding before declaring failure: the
    // chain is an equality at m = 1
    mpfr_set_ui(lnm, static_cast<unsigned long>(m), MPFR_RNDN);
    mpfr_log(lnm, lnm, MPFR_RNDD);
    mpfr_mul_ui(hi_lo, lnm, static_cast<unsigned long>(m), MPFR_RNDD);
    mpfr_add_ui(hi_lo, hi_lo, 1, MPFR_RNDD);
    mpfr_sub_ui(hi_lo, hi_lo, static_cast<unsigned long>(m), MPFR_RNDD);
    bool genuinely_above = mpfr_cmp(hi_lo, lf_hi) > 0;
    if (genuinely_above) {
      mpz_clear(fact);
      mpfr_clears(lf_lo, lf_hi, t, lo_hi, hi_lo, lnm, static_cast<mpfr_ptr>(nullptr));
      fail(ErrorCode::certificate, "factorial lower bound failed at m=" + std::to_string(m));
    }
  }
  // upper: ln m! <= ln(e m (m/e)^m) = 1 + (m+1) ln m - m
  mpfr_set_ui(lnm, static_cast<unsigned long>(m), MPFR_RNDN);
  mpfr_log(lnm, lnm, MPFR_RNDD);
  mpfr_mul_ui(hi_lo, lnm, static_cast<unsigned long>(m + 1), MPFR_RNDD);
  mpfr_add_ui(hi_lo, hi_lo, 1, MPFR_RNDD);
  mpfr_sub_ui(hi_lo, hi_lo, static_cast<unsigned long>(m), MPFR_RNDD);
  if (mpfr_cmp(lf_hi, hi_lo) > 0) {
    mpfr_set_ui(lnm, static_cast<unsigned long>(m), MPFR_RNDN);
    mpfr_log(lnm, lnm, MPFR_RNDU);
    mpfr_mul_ui(lo_hi, lnm, static_cast<unsigned long>(m + 1), MPFR_RNDU);
    mpfr_add_ui(lo_hi, lo_hi, 1, MPFR_RNDU);
    mpfr_sub_ui(lo_hi, lo_hi, static_cast<unsigned long>(m), MPFR_RNDU);
    bool genuinely_below = mpfr_cmp(lf_lo, lo_hi) > 0;
    if (genuinely_below) {
      mpz_clear(fact);
      mpfr_clears(lf_lo, lf_hi, t, lo_hi, hi_lo, lnm, static_cast<mpfr_ptr>(nullptr));
      fail(ErrorCode::certificate, "factorial upper bound failed at m=" + std::to_string(m));
    }
  }

  FactorialBounds out;
  out.lower = std::exp(1.0 + m * std::log(static_cast<double>(m)) - m);
  out.upper = std::exp(1.0 + (m + 1) * std::log(static_cast<double>(m)) - m);
  char* s = mpz_get_str(nullptr, 10, fact);
  out.factorial = s;
  free(s);
  mpz_clear(fact);
  mpfr_clears(lf_lo, lf_hi, t, lo_hi, hi_lo, lnm, static_cast<mpfr_ptr>(nullptr));
  return out;
}

}  // namespace symdyn
