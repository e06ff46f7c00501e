#include "lrs/fields.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "lrs/error.hpp"

namespace lrs {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  // Extended Euclid on signed 128-bit values; p < 2^32 in practice.
  __int128 r0 = p, r1 = a % p, s0 = 0, s1 = 1;
  if (r1 == 0) throw DomainError("inverse of zero modulo " + std::to_string(p));
  while (r1 != 0) {
    const __int128 q = r0 / r1;
    std::swap(r0, r1);
    r1 -= q * r0;
    std::swap(s0, s1);
    s1 -= q * s0;
  }
  __int128 inv = s0 % static_cast<__int128>(p);
  if (inv < 0) inv += p;
  return static_cast<std::uint64_t>(inv);
}

// ---------------------------------------------------------------------------
// Dense polynomials over GF(p) on raw coefficient vectors (constant first).
// Used for modulus selection and extension-field inversion.
// ---------------------------------------------------------------------------
namespace {

using Raw = std::vector<std::uint64_t>;

void trim(Raw& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Raw raw_mod(Raw a, const Raw& m, std::uint64_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t inv_lead = inverse_mod(m.back(), p);
  while (a.size() >= m.size()) {
    const std::uint64_t c = a.back() * inv_lead % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t j = 0; j <= dm; ++j) {
      a[shift + j] = (a[shift + j] + (p - c) * m[j]) % p;
    }
    trim(a);
  }
  return a;
}

Raw raw_mul(const Raw& a, const Raw& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Raw out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  }
  return out;
}

Raw raw_mulmod(const Raw& a, const Raw& b, const Raw& m, std::uint64_t p) {
  return raw_mod(raw_mul(a, b, p), m, p);
}

Raw raw_powmod(Raw base, std::uint64_t e, const Raw& m, std::uint64_t p) {
  Raw acc{1};
  base = raw_mod(std::move(base), m, p);
  while (e != 0) {
    if (e & 1) acc = raw_mulmod(acc, base, m, p);
    e >>= 1;
    if (e != 0) base = raw_mulmod(base, base, m, p);
  }
  return acc;
}

Raw raw_gcd(Raw a, Raw b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Raw r = raw_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Inverse of a modulo m via the extended Euclidean algorithm.
Raw raw_inverse(const Raw& a, const Raw& m, std::uint64_t p) {
  Raw r0 = m, r1 = a, s0{}, s1{1};
  trim(r1);
  if (r1.empty()) throw DomainError("inverse of zero");
  while (!r1.empty()) {
    // q, r = divmod(r0, r1)
    Raw rem = r0;
    Raw q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 1, 0);
    const std::uint64_t inv_lead = inverse_mod(r1.back(), p);
    while (rem.size() >= r1.size()) {
      const std::uint64_t c = rem.back() * inv_lead % p;
      const std::size_t shift = rem.size() - r1.size();
      q[shift] = c;
      for (std::size_t j = 0; j < r1.size(); ++j) rem[shift + j] = (rem[shift + j] + (p - c) * r1[j]) % p;
      trim(rem);
    }
    trim(q);
    Raw qs = raw_mul(q, s1, p);
    Raw s2 = s0;
    if (s2.size() < qs.size()) s2.resize(qs.size(), 0);
    for (std::size_t j = 0; j < qs.size(); ++j) s2[j] = (s2[j] + p - qs[j]) % p;
    trim(s2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant when gcd(a, m) = 1.
  if (r0.size() != 1) throw DomainError("element is not invertible");
  const std::uint64_t c = inverse_mod(r0[0], p);
  for (auto& v : s0) v = v * c % p;
  return s0;
}

}  // namespace

bool is_irreducible_mod_p(std::span<const std::uint64_t> poly, std::uint64_t p) {
  Raw f(poly.begin(), poly.end());
  for (auto& c : f) c %= p;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t n = f.size() - 1;
  if (n == 1) return true;
  if (f[0] == 0) return false;
  // Ben-Or: f is irreducible iff gcd(f, x^(p^i) - x) = 1 for 1 <= i <= n/2.
  const Raw x{0, 1};
  Raw h = x;
  for (std::size_t i = 1; i <= n / 2; ++i) {
    h = raw_powmod(h, p, f, p);
    Raw diff = h;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (diff.empty()) return false;
    if (raw_gcd(f, diff, p).size() > 1) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// FieldDescriptor
// ---------------------------------------------------------------------------

struct FieldDescriptor::Impl {
  FieldKind kind = FieldKind::kRationals;
  std::uint64_t p = 0;
  unsigned k = 1;
  std::vector<std::uint64_t> modulus;
  bool canonical = true;
  // Nonzero (j, p - m_j) for j < k, used to fold x^k back into lower terms.
  std::vector<std::pair<unsigned, std::uint64_t>> fold;

  // out = a * b mod modulus; a, b have length k.
  void mul(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
           FieldElement::Coefficients& out) const;
};

void FieldDescriptor::Impl::mul(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
                                FieldElement::Coefficients& out) const {
  if (k == 1) {
    out.assign(1, a[0] * b[0] % p);
    return;
  }
  thread_local std::vector<std::uint64_t> tmp;
  tmp.assign(2 * k - 1, 0);
  // Lazy reduction is safe while k * p^2 stays far below 2^64.
  const bool lazy = p < (1u << 20);
  for (unsigned i = 0; i < k; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < k; ++j) {
      if (lazy) {
        tmp[i + j] += a[i] * b[j];
      } else {
        tmp[i + j] = (tmp[i + j] + a[i] * b[j]) % p;
      }
    }
  }
  for (unsigned i = 2 * k - 2; i >= k; --i) {
    const std::uint64_t c = tmp[i] % p;
    if (c == 0) continue;
    for (const auto& [j, neg] : fold) {
      tmp[i - k + j] = (tmp[i - k + j] + c * neg) % p;
    }
  }
  out.resize(k);
  for (unsigned i = 0; i < k; ++i) out[i] = tmp[i] % p;
}

FieldDescriptor FieldDescriptor::rationals() {
  static const auto impl = std::make_shared<const Impl>();
  return FieldDescriptor(impl);
}

namespace {

std::shared_ptr<FieldDescriptor::Impl> build_finite(std::uint64_t p, std::vector<std::uint64_t> modulus) {
  if (!is_prime(p)) throw DomainError("field characteristic must be prime, got " + std::to_string(p));
  if (p >= (std::uint64_t{1} << 32)) throw DomainError("characteristic must be below 2^32");
  for (auto& c : modulus) c %= p;
  trim(modulus);
  if (modulus.size() < 2) throw DomainError("field modulus must have degree at least 1");
  if (modulus.back() != 1) throw DomainError("field modulus must be monic");
  if (!is_irreducible_mod_p(modulus, p)) throw DomainError("field modulus is not irreducible");
  auto impl = std::make_shared<FieldDescriptor::Impl>();
  impl->kind = FieldKind::kFinite;
  impl->p = p;
  impl->k = static_cast<unsigned>(modulus.size() - 1);
  if (impl->k > 1) {
    for (unsigned j = 0; j < impl->k; ++j) {
      if (modulus[j] != 0) impl->fold.emplace_back(j, p - modulus[j]);
    }
    impl->modulus = std::move(modulus);
  }
  return impl;
}

}  // namespace

FieldDescriptor FieldDescriptor::finite(std::uint64_t p, std::vector<std::uint64_t> modulus) {
  auto impl = build_finite(p, std::move(modulus));
  if (impl->k == 1) return make_field(p, 1);
  const FieldDescriptor canonical = make_field(p, impl->k);
  if (std::ranges::equal(canonical.modulus(), impl->modulus)) return canonical;
  impl->canonical = false;
  return FieldDescriptor(std::move(impl));
}

FieldDescriptor make_field(std::uint64_t characteristic, unsigned degree) {
  if (degree < 1) throw DomainError("field degree must be at least 1");
  if (characteristic == 0) {
    if (degree != 1) throw DomainError("characteristic 0 supports only Q (degree 1)");
    return FieldDescriptor::rationals();
  }
  if (!is_prime(characteristic)) {
    throw DomainError("field characteristic must be prime, got " + std::to_string(characteristic));
  }
  static std::mutex mutex;
  static std::map<std::pair<std::uint64_t, unsigned>, FieldDescriptor> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find({characteristic, degree}); it != cache.end()) return it->second;
  }
  std::vector<std::uint64_t> modulus(degree + 1, 0);
  modulus[degree] = 1;
  if (degree > 1) {
    // Count upward in base p with the x^(degree-1) coefficient most significant.
    for (;;) {
      if (is_irreducible_mod_p(modulus, characteristic)) break;
      std::size_t pos = 0;
      while (pos < degree && ++modulus[pos] == characteristic) modulus[pos++] = 0;
      if (pos == degree) throw DomainError("no irreducible polynomial found");
    }
  }
  FieldDescriptor out = [&] {
    auto impl = build_finite(characteristic, degree > 1 ? modulus : std::vector<std::uint64_t>{0, 1});
    return FieldDescriptor(std::move(impl));
  }();
  std::lock_guard lock(mutex);
  return cache.emplace(std::pair{characteristic, degree}, out).first->second;
}

FieldKind FieldDescriptor::kind() const { return impl_->kind; }
std::uint64_t FieldDescriptor::characteristic() const { return impl_->p; }
unsigned FieldDescriptor::degree() const { return impl_->k; }
std::span<const std::uint64_t> FieldDescriptor::modulus() const { return impl_->modulus; }
bool FieldDescriptor::is_canonical() const { return impl_->canonical; }

mpz_class FieldDescriptor::order() const {
  if (is_rationals()) throw DomainError("Q has no finite order");
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), impl_->p, impl_->k);
  return out;
}

std::string FieldDescriptor::name() const {
  if (is_rationals()) return "Q";
  std::ostringstream os;
  os << "GF(" << impl_->p;
  if (impl_->k > 1) os << "^" << impl_->k;
  os << ")";
  if (!impl_->canonical) {
    os << "/";
    bool first = true;
    for (std::size_t j = impl_->modulus.size(); j-- > 0;) {
      const std::uint64_t c = impl_->modulus[j];
      if (c == 0) continue;
      if (!first) os << "+";
      first = false;
      if (j == 0 || c != 1) os << c;
      if (j > 0 && c != 1) os << "*";
      if (j > 0) os << "x";
      if (j > 1) os << "^" << j;
    }
  }
  return os.str();
}

bool operator==(const FieldDescriptor& a, const FieldDescriptor& b) {
  if (a.impl_ == b.impl_) return true;
  return a.impl_->kind == b.impl_->kind && a.impl_->p == b.impl_->p && a.impl_->k == b.impl_->k &&
         a.impl_->modulus == b.impl_->modulus;
}

// ---------------------------------------------------------------------------
// FieldElement
// ---------------------------------------------------------------------------

FieldElement FieldElement::zero(const FieldDescriptor& field) {
  FieldElement out(field);
  if (field.is_finite()) out.coeffs_.assign(field.degree(), 0);
  return out;
}

FieldElement FieldElement::one(const FieldDescriptor& field) { return from_integer(field, 1); }

FieldElement FieldElement::from_integer(const FieldDescriptor& field, const mpz_class& value) {
  FieldElement out = zero(field);
  if (field.is_rationals()) {
    out.rational_ = value;
  } else {
    out.coeffs_[0] = mpz_fdiv_ui(value.get_mpz_t(), field.characteristic());
  }
  return out;
}

FieldElement FieldElement::from_rational(const FieldDescriptor& field, const mpq_class& value) {
  if (!field.is_rationals()) {
    // Accept integral values; a denominator is inverted in the field.
    mpq_class v = value;
    v.canonicalize();
    return from_integer(field, v.get_num()) / from_integer(field, v.get_den());
  }
  FieldElement out(field);
  out.rational_ = value;
  out.rational_.canonicalize();
  return out;
}

FieldElement FieldElement::from_coefficients(const FieldDescriptor& field, std::span<const std::uint64_t> coeffs) {
  if (!field.is_finite()) throw DomainError("coefficient arrays describe finite-field elements only");
  const std::uint64_t p = field.characteristic();
  const unsigned k = field.degree();
  Raw raw(coeffs.begin(), coeffs.end());
  for (auto& c : raw) c %= p;
  if (raw.size() > k) {
    if (k == 1) {
      // Evaluate c0 + c1*g + ... at g = 0 in the prime field.
      raw.resize(1);
    } else {
      raw = raw_mod(std::move(raw), Raw(field.modulus().begin(), field.modulus().end()), p);
    }
  }
  FieldElement out = zero(field);
  for (std::size_t j = 0; j < raw.size() && j < k; ++j) out.coeffs_[j] = raw[j];
  return out;
}

FieldElement FieldElement::generator(const FieldDescriptor& field) {
  const std::uint64_t x[2] = {0, 1};
  return from_coefficients(field, x);
}

bool FieldElement::is_zero() const {
  if (field_.is_rationals()) return rational_ == 0;
  return std::ranges::all_of(coeffs_, [](std::uint64_t c) { return c == 0; });
}

bool FieldElement::is_one() const {
  if (field_.is_rationals()) return rational_ == 1;
  if (coeffs_[0] != 1) return false;
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](std::uint64_t c) { return c == 0; });
}

bool FieldElement::in_prime_subfield() const {
  if (field_.is_rationals()) return rational_.get_den() == 1;
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](std::uint64_t c) { return c == 0; });
}

void FieldElement::require_same_field(const FieldElement& other) const {
  if (!(field_ == other.field_)) {
    throw FieldMismatch("cannot combine elements of " + field_.name() + " and " + other.field_.name());
  }
}

FieldElement FieldElement::operator-() const {
  FieldElement out = *this;
  if (field_.is_rationals()) {
    out.rational_ = -rational_;
  } else {
    const std::uint64_t p = field_.characteristic();
    for (auto& c : out.coeffs_) c = c == 0 ? 0 : p - c;
  }
  return out;
}

FieldElement& FieldElement::operator+=(const FieldElement& other) {
  require_same_field(other);
  if (field_.is_rationals()) {
    rational_ += other.rational_;
  } else {
    const std::uint64_t p = field_.characteristic();
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
      const std::uint64_t s = coeffs_[j] + other.coeffs_[j];
      coeffs_[j] = s >= p ? s - p : s;
    }
  }
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& other) {
  require_same_field(other);
  if (field_.is_rationals()) {
    rational_ -= other.rational_;
  } else {
    const std::uint64_t p = field_.characteristic();
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
      coeffs_[j] = coeffs_[j] >= other.coeffs_[j] ? coeffs_[j] - other.coeffs_[j] : coeffs_[j] + p - other.coeffs_[j];
    }
  }
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& other) {
  require_same_field(other);
  if (field_.is_rationals()) {
    rational_ *= other.rational_;
  } else {
    Coefficients out;
    field_.impl().mul(coefficients(), other.coefficients(), out);
    coeffs_ = std::move(out);
  }
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& other) {
  require_same_field(other);
  return *this *= other.inverse();
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero in " + field_.name());
  FieldElement out = zero(field_);
  if (field_.is_rationals()) {
    out.rational_ = 1 / rational_;
    return out;
  }
  const std::uint64_t p = field_.characteristic();
  if (field_.degree() == 1) {
    out.coeffs_[0] = inverse_mod(coeffs_[0], p);
    return out;
  }
  const Raw inv = raw_inverse(Raw(coeffs_.begin(), coeffs_.end()), Raw(field_.modulus().begin(), field_.modulus().end()), p);
  for (std::size_t j = 0; j < inv.size(); ++j) out.coeffs_[j] = inv[j];
  return out;
}

FieldElement FieldElement::pow(const mpz_class& exponent) const {
  if (exponent < 0) return inverse().pow(mpz_class(-exponent));
  if (field_.is_rationals()) {
    if (!mpz_fits_ulong_p(exponent.get_mpz_t())) throw DomainError("exponent too large for Q");
    FieldElement out(field_);
    const unsigned long e = exponent.get_ui();
    mpz_pow_ui(out.rational_.get_num_mpz_t(), rational_.get_num_mpz_t(), e);
    mpz_pow_ui(out.rational_.get_den_mpz_t(), rational_.get_den_mpz_t(), e);
    out.rational_.canonicalize();
    return out;
  }
  FieldElement acc = one(field_);
  const std::size_t bits = exponent == 0 ? 0 : mpz_sizeinbase(exponent.get_mpz_t(), 2);
  for (std::size_t b = bits; b-- > 0;) {
    acc *= acc;
    if (mpz_tstbit(exponent.get_mpz_t(), b)) acc *= *this;
  }
  return acc;
}

FieldElement FieldElement::frobenius() const {
  if (field_.is_rationals() || field_.degree() == 1) return *this;
  return pow(field_.characteristic());
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (!(a.field_ == b.field_)) return false;
  if (a.field_.is_rationals()) return a.rational_ == b.rational_;
  return a.coeffs_ == b.coeffs_;
}

std::strong_ordering canonical_compare(const FieldElement& a, const FieldElement& b) {
  a.require_same_field(b);
  if (a.field_.is_rationals()) {
    const int c = cmp(a.rational_, b.rational_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }
  for (std::size_t j = a.coeffs_.size(); j-- > 0;) {
    if (a.coeffs_[j] != b.coeffs_[j]) return a.coeffs_[j] <=> b.coeffs_[j];
  }
  return std::strong_ordering::equal;
}

std::string FieldElement::to_string() const {
  if (field_.is_rationals()) return rational_.get_str();
  if (in_prime_subfield()) return std::to_string(coeffs_[0]);
  std::string out = "[";
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (j) out += ",";
    out += std::to_string(coeffs_[j]);
  }
  return out + "]";
}

std::vector<FieldElement> frobenius_orbit(const FieldElement& a) {
  if (a.field().is_rationals()) throw DomainError("Frobenius orbits are defined over finite fields only");
  std::vector<FieldElement> orbit{a};
  for (FieldElement next = a.frobenius(); !(next == a); next = next.frobenius()) orbit.push_back(next);
  return orbit;
}

}  // namespace lrs
