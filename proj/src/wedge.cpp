#include "lrs/wedge.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "lrs/error.hpp"
#include "lrs/fields.hpp"

namespace lrs {

WedgeContext::WedgeContext(std::uint64_t characteristic) : characteristic_(characteristic) {
  if (characteristic != 0 && !is_prime(characteristic)) {
    throw DomainError("characteristic must be 0 or a prime, got " + std::to_string(characteristic));
  }
}

PExpansion PExpansion::of(std::uint64_t value, std::uint64_t base) {
  if (base < 2) throw DomainError("p-expansion base must be at least 2");
  PExpansion out;
  out.base = base;
  for (; value != 0; value /= base) out.digits.push_back(value % base);
  return out;
}

std::uint64_t PExpansion::value() const {
  std::uint64_t v = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) v = v * base + *it;
  return v;
}

namespace {

// C(n, k) mod p for n, k < p.
std::uint64_t small_binom_mod(std::uint64_t n, std::uint64_t k, std::uint64_t p) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t num = 1, den = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    num = num * ((n - i) % p) % p;
    den = den * ((i + 1) % p) % p;
  }
  return num * inverse_mod(den, p) % p;
}

void check_sum(std::uint64_t i, std::uint64_t j) {
  if (i > std::numeric_limits<std::uint64_t>::max() - j) throw DomainError("wedge arguments overflow 64 bits");
}

}  // namespace

mpz_class binom_mod(std::uint64_t n, std::uint64_t k, const WedgeContext& ctx) {
  if (k > n) return 0;
  const std::uint64_t p = ctx.characteristic();
  if (p == 0) {
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
  }
  std::uint64_t acc = 1;
  for (; n != 0 || k != 0; n /= p, k /= p) {
    acc = acc * small_binom_mod(n % p, k % p, p) % p;
    if (acc == 0) break;
  }
  return mpz_class(static_cast<unsigned long>(acc));
}

WedgeExplanation explain_wedge(std::uint64_t i, std::uint64_t j, const WedgeContext& ctx) {
  WedgeExplanation ex;
  ex.i = i;
  ex.j = j;
  if (i == 0 || j == 0) return ex;
  check_sum(i, j);
  const std::uint64_t p = ctx.characteristic();
  if (p == 0) {
    ex.value = i + j - 1;
    return ex;
  }
  ex.i_minus_one = PExpansion::of(i - 1, p);
  ex.j_minus_one = PExpansion::of(j - 1, p);
  const std::size_t len = std::max(ex.i_minus_one.digits.size(), ex.j_minus_one.digits.size());
  for (std::size_t m = 0; m < len; ++m) {
    if (ex.i_minus_one.digit(m) + ex.j_minus_one.digit(m) >= p) ex.q = m + 1;
  }
  // d = p^q + sum_{m >= q} (i_m + j_m) p^m; bounded by i + j - 1, so no overflow.
  std::uint64_t power = 1;
  for (std::uint64_t m = 0; m < ex.q; ++m) power *= p;
  std::uint64_t d = power;
  for (std::size_t m = ex.q; m < len; ++m) {
    d += (ex.i_minus_one.digit(m) + ex.j_minus_one.digit(m)) * power;
    if (m + 1 < len) power *= p;
  }
  ex.value = d;
  return ex;
}

std::uint64_t wedge(std::uint64_t i, std::uint64_t j, const WedgeContext& ctx) {
  return explain_wedge(i, j, ctx).value;
}

std::uint64_t wedge_oracle(std::uint64_t i, std::uint64_t j, const WedgeContext& ctx) {
  if (i == 0 || j == 0) throw DomainError("wedge_oracle is defined for positive arguments only");
  check_sum(i, j);
  std::uint64_t best = 0;
  for (std::uint64_t e = 0; e < i; ++e) {
    for (std::uint64_t t = 0; t < j; ++t) {
      if (e + t + 1 > best && binom_mod(e + t, e, ctx) != 0) best = e + t + 1;
    }
  }
  return best;
}

std::uint64_t wedge_lambda(std::uint64_t t, std::uint64_t s, bool lambda_is_zero) {
  if (lambda_is_zero) return std::min(t, s);
  return s != 0 ? t : 0;
}

std::uint64_t wedge_fold(std::span<const std::uint64_t> values, const WedgeContext& ctx) {
  if (values.empty()) throw DomainError("wedge_fold needs at least one value");
  std::uint64_t acc = values.front();
  for (std::size_t k = 1; k < values.size(); ++k) acc = wedge(acc, values[k], ctx);
  return acc;
}

mpz_class struct_const(std::uint64_t e, std::uint64_t t, std::uint64_t m, const WedgeContext& ctx) {
  const std::uint64_t hi = std::max(e, t);
  const std::uint64_t lo = std::min(e, t);
  check_sum(e, t);
  if (m < hi || m > e + t) {
    throw DomainError("struct_const needs max(e,t) <= m <= e+t");
  }
  mpz_class value = binom_mod(m, hi, ctx) * binom_mod(hi, m - lo, ctx);
  if (ctx.characteristic() != 0) value %= static_cast<unsigned long>(ctx.characteristic());
  return value;
}

}  // namespace lrs
