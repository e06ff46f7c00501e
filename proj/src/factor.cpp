#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "lrs/error.hpp"
#include "lrs/poly.hpp"

namespace lrs {

namespace {

FieldElement random_element(const FieldDescriptor& field, std::mt19937_64& rng) {
  std::vector<std::uint64_t> c(field.degree());
  for (auto& v : c) v = rng() % field.characteristic();
  return FieldElement::from_coefficients(field, c);
}

Polynomial random_poly(const FieldDescriptor& field, std::size_t below_degree, std::mt19937_64& rng) {
  std::vector<FieldElement> c;
  c.reserve(below_degree);
  for (std::size_t j = 0; j < below_degree; ++j) c.push_back(random_element(field, rng));
  return Polynomial(field, std::move(c));
}

// a^(1/p) in a finite field: a^(p^(k-1)).
FieldElement pth_root(const FieldElement& a) {
  FieldElement out = a;
  for (unsigned j = 1; j < a.field().degree(); ++j) out = out.frobenius();
  return out;
}

// Sum_i a_{ip} x^{ip} -> Sum_i a_{ip}^{1/p} x^i, for polynomials with zero derivative.
Polynomial pth_root(const Polynomial& f) {
  const std::uint64_t p = f.field().characteristic();
  std::vector<FieldElement> out;
  for (std::size_t j = 0; j < f.coefficients().size(); j += p) out.push_back(pth_root(f.coefficients()[j]));
  return Polynomial(f.field(), std::move(out));
}

// x^e mod f for a big exponent.
Polynomial x_pow_mod(const mpz_class& e, const Polynomial& f) { return Polynomial::x(f.field()).powmod(e, f); }

// Distinct-degree factorization of a monic square-free polynomial.
std::vector<std::pair<Polynomial, unsigned>> distinct_degree(Polynomial f) {
  const mpz_class q = f.field().order();
  const Polynomial x = Polynomial::x(f.field());
  std::vector<std::pair<Polynomial, unsigned>> out;
  Polynomial h = x % f;
  for (unsigned i = 1; f.degree() >= 2 * static_cast<long>(i); ++i) {
    h = h.powmod(q, f);
    Polynomial g = gcd(f, h - x);
    if (!g.is_one()) {
      f = f / g;
      h = h % f;
      out.emplace_back(std::move(g), i);
    }
  }
  if (f.degree() > 0) out.emplace_back(f, static_cast<unsigned>(f.degree()));
  return out;
}

// Cantor-Zassenhaus splitting of a monic square-free product of irreducibles of degree d.
void equal_degree(const Polynomial& f, unsigned d, std::mt19937_64& rng, std::vector<Polynomial>& out) {
  if (f.degree() == static_cast<long>(d)) {
    out.push_back(f);
    return;
  }
  const FieldDescriptor& field = f.field();
  const std::uint64_t p = field.characteristic();
  mpz_class qd;
  mpz_ui_pow_ui(qd.get_mpz_t(), p, static_cast<unsigned long>(field.degree()) * d);
  const Polynomial one = Polynomial::constant(FieldElement::one(field));
  for (;;) {
    Polynomial a = random_poly(field, static_cast<std::size_t>(f.degree()), rng);
    if (a.degree() < 1) continue;
    Polynomial g(field);
    if (p == 2) {
      // Absolute trace to GF(2): a + a^2 + ... + a^(2^(kd-1)).
      Polynomial t = a % f;
      Polynomial sq = t;
      const unsigned steps = field.degree() * d;
      for (unsigned j = 1; j < steps; ++j) {
        sq = (sq * sq) % f;
        t += sq;
      }
      g = gcd(f, t);
    } else {
      g = gcd(f, a.powmod((qd - 1) / 2, f) - one);
    }
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(f / g, d, rng, out);
      return;
    }
  }
}

std::vector<FactorPower> squarefree_impl(const Polynomial& f) {
  std::vector<FactorPower> out;
  const FieldDescriptor& field = f.field();
  Polynomial c = gcd(f, f.derivative());
  Polynomial w = f / c;
  std::uint64_t i = 1;
  while (!w.is_one()) {
    Polynomial y = gcd(w, c);
    Polynomial fac = w / y;
    if (!fac.is_one()) out.push_back({fac.monic(), i});
    w = std::move(y);
    c = c / w;
    ++i;
  }
  if (!c.is_one() && c.degree() > 0) {
    if (!field.is_finite()) throw DomainError("square-free decomposition failed to terminate over Q");
    const std::uint64_t p = field.characteristic();
    for (auto& fp : squarefree_impl(pth_root(c.monic()))) out.push_back({std::move(fp.factor), fp.multiplicity * p});
  }
  return out;
}

void sort_factors(std::vector<FactorPower>& factors) {
  std::ranges::sort(factors, [](const FactorPower& a, const FactorPower& b) {
    if (canonical_less(a.factor, b.factor)) return true;
    if (canonical_less(b.factor, a.factor)) return false;
    return a.multiplicity < b.multiplicity;
  });
}

// Positive divisors of |n| (n nonzero) by trial division.
std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<std::pair<mpz_class, unsigned>> primes;
  for (mpz_class d = 2; d * d <= n; ++d) {
    if (d > 1000000) {
      if (mpz_probab_prime_p(n.get_mpz_t(), 40) == 0) {
        throw DomainError("coefficients too large to enumerate rational-root candidates");
      }
      break;
    }
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) primes.emplace_back(d, e);
  }
  if (n > 1) primes.emplace_back(n, 1);
  std::vector<mpz_class> out{1};
  for (const auto& [prime, e] : primes) {
    const std::size_t base = out.size();
    mpz_class pw = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pw *= prime;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pw);
    }
  }
  return out;
}

Factorization factor_rationals(const Polynomial& p) {
  const FieldDescriptor& field = p.field();
  Factorization out{p.leading(), {}, std::nullopt};
  Polynomial f = p.monic();
  std::uint64_t zero_mult = 0;
  while (f.degree() > 0 && f.coefficients().front().is_zero()) {
    f = f / Polynomial::x(field);
    ++zero_mult;
  }
  if (zero_mult) out.factors.push_back({Polynomial::x(field), zero_mult});
  if (f.degree() > 0) {
    // Primitive integer multiple: numerators over the lcm of denominators.
    mpz_class den = 1;
    for (const auto& c : f.coefficients()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.rational().get_den_mpz_t());
    std::vector<mpz_class> ints;
    for (const auto& c : f.coefficients()) ints.push_back(mpz_class(c.rational() * den));
    mpz_class content = 0;
    for (const auto& v : ints) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    for (auto& v : ints) v /= content;
    std::vector<mpq_class> candidates;
    for (const auto& num : divisors(ints.front())) {
      for (const auto& dn : divisors(ints.back())) {
        mpq_class r(num, dn);
        r.canonicalize();
        candidates.push_back(r);
        candidates.push_back(-r);
      }
    }
    std::ranges::sort(candidates);
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const auto& r : candidates) {
      const FieldElement root = FieldElement::from_rational(field, r);
      std::uint64_t mult = 0;
      while (f.degree() > 0 && f.eval(root).is_zero()) {
        f = f / Polynomial::linear(root);
        ++mult;
      }
      if (mult) out.factors.push_back({Polynomial::linear(root), mult});
    }
  }
  if (f.degree() > 0) out.remainder = f;
  sort_factors(out.factors);
  return out;
}

}  // namespace

std::vector<FactorPower> squarefree_decompose(const Polynomial& p) {
  if (p.is_zero()) throw DomainError("square-free decomposition of the zero polynomial");
  if (p.is_constant()) return {};
  auto out = squarefree_impl(p.monic());
  std::ranges::sort(out, [](const FactorPower& a, const FactorPower& b) { return a.multiplicity < b.multiplicity; });
  return out;
}

Factorization factor(const Polynomial& p, std::uint64_t seed) {
  if (p.is_zero()) throw DomainError("cannot factor the zero polynomial");
  if (p.field().is_rationals()) return factor_rationals(p);
  Factorization out{p.leading(), {}, std::nullopt};
  if (p.is_constant()) return out;
  std::mt19937_64 rng(seed);
  for (const auto& sq : squarefree_decompose(p)) {
    for (const auto& [part, d] : distinct_degree(sq.factor)) {
      std::vector<Polynomial> irreducibles;
      equal_degree(part, d, rng, irreducibles);
      for (auto& g : irreducibles) out.factors.push_back({g.monic(), sq.multiplicity});
    }
  }
  sort_factors(out.factors);
  return out;
}

unsigned splitting_degree(const Factorization& f) {
  if (f.remainder && f.remainder->degree() > 0) {
    throw DomainError("polynomial has irrational roots; its splitting field is not supported");
  }
  unsigned out = 1;
  for (const auto& fp : f.factors) out = std::lcm(out, static_cast<unsigned>(fp.factor.degree()));
  return out;
}

bool is_irreducible(const Polynomial& f) {
  if (!f.field().is_finite()) throw DomainError("irreducibility check is for finite fields");
  if (f.degree() < 1) return false;
  if (f.degree() == 1) return true;
  const FieldDescriptor& field = f.field();
  const mpz_class q = field.order();
  if (f.degree() <= 3) {
    if (q <= 4096) {
      // Exhaustive root search.
      const std::uint64_t p = field.characteristic();
      std::vector<std::uint64_t> c(field.degree(), 0);
      for (;;) {
        if (f.eval(FieldElement::from_coefficients(field, c)).is_zero()) return false;
        std::size_t pos = 0;
        while (pos < c.size() && ++c[pos] == p) c[pos++] = 0;
        if (pos == c.size()) return true;
      }
    }
    return gcd(f, x_pow_mod(q, f) - Polynomial::x(field)).is_one();
  }
  const Polynomial x = Polynomial::x(field);
  Polynomial h = x % f;
  for (long i = 1; i <= f.degree() / 2; ++i) {
    h = h.powmod(q, f);
    if (!gcd(f, h - x).is_one()) return false;
  }
  return true;
}

std::vector<FieldElement> roots_in_field(const Polynomial& f, std::uint64_t seed) {
  if (!f.field().is_finite()) throw DomainError("roots_in_field is for finite fields");
  if (f.is_zero()) throw DomainError("the zero polynomial has every element as a root");
  const FieldDescriptor& field = f.field();
  std::vector<FieldElement> roots;
  if (f.degree() < 1) return roots;
  const Polynomial monic = f.monic();
  Polynomial split = gcd(monic, x_pow_mod(field.order(), monic) - Polynomial::x(field));
  if (split.degree() >= 1) {
    std::mt19937_64 rng(seed);
    std::vector<Polynomial> linears;
    equal_degree(split, 1, rng, linears);
    for (const auto& l : linears) roots.push_back(-l.monic().coefficients()[0]);
  }
  std::ranges::sort(roots, CanonicalLess{});
  return roots;
}

}  // namespace lrs
