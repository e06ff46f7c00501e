#include "lrs/poly.hpp"

#include <algorithm>

#include "lrs/error.hpp"

namespace lrs {

Polynomial::Polynomial(FieldDescriptor field, std::vector<FieldElement> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (!(c.field() == field_)) throw FieldMismatch("polynomial coefficient outside " + field_.name());
  }
  trim();
}

Polynomial Polynomial::constant(const FieldElement& c) { return Polynomial(c.field(), {c}); }

Polynomial Polynomial::x(const FieldDescriptor& field) { return monomial(field, 1); }

Polynomial Polynomial::monomial(const FieldDescriptor& field, std::size_t n) {
  std::vector<FieldElement> coeffs(n + 1, FieldElement::zero(field));
  coeffs[n] = FieldElement::one(field);
  return Polynomial(field, std::move(coeffs));
}

Polynomial Polynomial::linear(const FieldElement& root) { return Polynomial(root.field(), {-root, FieldElement::one(root.field())}); }

Polynomial Polynomial::from_integers(const FieldDescriptor& field, std::span<const long> coeffs) {
  std::vector<FieldElement> out;
  out.reserve(coeffs.size());
  for (long c : coeffs) out.push_back(FieldElement::from_integer(field, c));
  return Polynomial(field, std::move(out));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void Polynomial::require_same_field(const Polynomial& other) const {
  if (!(field_ == other.field_)) {
    throw FieldMismatch("cannot combine polynomials over " + field_.name() + " and " + other.field_.name());
  }
}

FieldElement Polynomial::coeff(std::size_t n) const {
  return n < coeffs_.size() ? coeffs_[n] : FieldElement::zero(field_);
}

const FieldElement& Polynomial::leading() const {
  if (coeffs_.empty()) throw DomainError("the zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_field(other);
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), FieldElement::zero(field_));
  for (std::size_t j = 0; j < other.coeffs_.size(); ++j) coeffs_[j] += other.coeffs_[j];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_field(other);
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), FieldElement::zero(field_));
  for (std::size_t j = 0; j < other.coeffs_.size(); ++j) coeffs_[j] -= other.coeffs_[j];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_same_field(b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
  std::vector<FieldElement> out(a.coeffs_.size() + b.coeffs_.size() - 1, FieldElement::zero(a.field_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(a.field_, std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial Polynomial::scaled(const FieldElement& c) const {
  Polynomial out = *this;
  for (auto& v : out.coeffs_) v *= c;
  out.trim();
  return out;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  require_same_field(divisor);
  if (divisor.is_zero()) throw DomainError("polynomial division by zero");
  Polynomial rem = *this;
  if (rem.coeffs_.size() < divisor.coeffs_.size()) return {Polynomial(field_), rem};
  const std::size_t dd = divisor.coeffs_.size() - 1;
  std::vector<FieldElement> quot(rem.coeffs_.size() - dd, FieldElement::zero(field_));
  const FieldElement inv_lead = divisor.leading().inverse();
  const bool monic_divisor = divisor.leading().is_one();
  for (std::size_t top = rem.coeffs_.size(); top-- > dd;) {
    if (rem.coeffs_[top].is_zero()) continue;
    const FieldElement c = monic_divisor ? rem.coeffs_[top] : rem.coeffs_[top] * inv_lead;
    const std::size_t shift = top - dd;
    quot[shift] = c;
    for (std::size_t j = 0; j <= dd; ++j) rem.coeffs_[shift + j] -= c * divisor.coeffs_[j];
  }
  rem.coeffs_.resize(dd, FieldElement::zero(field_));
  rem.trim();
  return {Polynomial(field_, std::move(quot)), std::move(rem)};
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial(field_);
  std::vector<FieldElement> out;
  out.reserve(coeffs_.size() - 1);
  for (std::size_t j = 1; j < coeffs_.size(); ++j) {
    out.push_back(coeffs_[j] * FieldElement::from_integer(field_, static_cast<long>(j)));
  }
  return Polynomial(field_, std::move(out));
}

FieldElement Polynomial::eval(const FieldElement& at) const {
  if (!(at.field() == field_)) throw FieldMismatch("evaluation point outside " + field_.name());
  FieldElement acc = FieldElement::zero(field_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading().is_one()) return *this;
  return scaled(leading().inverse());
}

Polynomial Polynomial::pow(std::uint64_t e) const {
  Polynomial acc = constant(FieldElement::one(field_));
  Polynomial base = *this;
  while (e != 0) {
    if (e & 1) acc *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return acc;
}

Polynomial Polynomial::powmod(const mpz_class& e, const Polynomial& modulus) const {
  if (e < 0) throw DomainError("negative exponent in powmod");
  Polynomial base = *this % modulus;
  Polynomial acc = constant(FieldElement::one(field_)) % modulus;
  const std::size_t bits = e == 0 ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t b = bits; b-- > 0;) {
    acc = (acc * acc) % modulus;
    if (mpz_tstbit(e.get_mpz_t(), b)) acc = (acc * base) % modulus;
  }
  return acc;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

std::string Polynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t j = coeffs_.size(); j-- > 0;) {
    FieldElement c = coeffs_[j];
    if (c.is_zero()) continue;
    bool negative = false;
    if (field_.is_rationals() && c.rational() < 0) {
      negative = true;
      c = -c;
    }
    if (negative) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    const bool unit = c.is_one();
    if (j == 0 || !unit) out += c.to_string();
    if (j > 0 && !unit) out += "*";
    if (j > 0) out += "x";
    if (j > 1) out += "^" + std::to_string(j);
  }
  return out;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial r0 = a, r1 = b;
  while (!r1.is_zero()) {
    Polynomial r2 = r0 % r1;
    r0 = std::move(r1);
    r1 = std::move(r2);
  }
  return r0.monic();
}

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial(a.field());
  return (a / gcd(a, b) * b).monic();
}

bool canonical_less(const Polynomial& a, const Polynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t j = a.coefficients().size(); j-- > 0;) {
    const auto c = canonical_compare(a.coefficients()[j], b.coefficients()[j]);
    if (c != 0) return c < 0;
  }
  return false;
}

Polynomial Factorization::expand() const {
  Polynomial out = Polynomial::constant(unit);
  for (const auto& fp : factors) out *= fp.factor.pow(fp.multiplicity);
  if (remainder) out *= *remainder;
  return out;
}

}  // namespace lrs
