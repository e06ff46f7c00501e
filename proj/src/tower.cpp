#include "lrs/tower.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

#include "lrs/error.hpp"

namespace lrs {

FieldDescriptor splitting_field(const FieldDescriptor& base, unsigned degree) {
  if (degree < 1) throw DomainError("splitting degree must be at least 1");
  if (base.is_rationals()) {
    if (degree != 1) throw DomainError("Q has no finite extensions in this library");
    return base;
  }
  if (degree == 1) return base;
  return make_field(base.characteristic(), base.degree() * degree);
}

bool is_subfield(const FieldDescriptor& sub, const FieldDescriptor& field) {
  if (sub.is_rationals() || field.is_rationals()) return sub.is_rationals() && field.is_rationals();
  return sub.characteristic() == field.characteristic() && field.degree() % sub.degree() == 0;
}

namespace {

using EmbedKey = std::tuple<std::uint64_t, std::vector<std::uint64_t>, std::vector<std::uint64_t>>;

// Horner evaluation of a source element's coordinates at the image of its generator.
FieldElement evaluate_at(const FieldElement& a, const FieldElement& image, const FieldDescriptor& target) {
  FieldElement acc = FieldElement::zero(target);
  const auto c = a.coefficients();
  for (std::size_t j = c.size(); j-- > 0;) {
    acc *= image;
    acc += FieldElement::from_integer(target, static_cast<long>(c[j]));
  }
  return acc;
}

std::vector<std::uint64_t> prime_divisors(unsigned n) {
  std::vector<std::uint64_t> out;
  for (unsigned d = 2; d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  return out;
}

FieldElement generator_image(const FieldDescriptor& source, const FieldDescriptor& target) {
  static std::mutex mutex;
  static std::map<EmbedKey, FieldElement::Coefficients> cache;
  const EmbedKey key{source.characteristic(), std::vector<std::uint64_t>(source.modulus().begin(), source.modulus().end()),
                     std::vector<std::uint64_t>(target.modulus().begin(), target.modulus().end())};
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return FieldElement::from_coefficients(target, std::span<const std::uint64_t>(it->second.data(), it->second.size()));
  }
  const std::uint64_t p = source.characteristic();
  const unsigned k = source.degree();
  std::vector<long> modulus;
  for (auto c : source.modulus()) modulus.push_back(static_cast<long>(c));
  const Polynomial m_target = Polynomial::from_integers(target, modulus);

  // Subfield generators: for each maximal canonical subfield GF(p^J) of the
  // source, its generator's image in the source and in the target.
  std::vector<std::pair<FieldElement, FieldElement>> constraints;
  for (auto ell : prime_divisors(k)) {
    const unsigned j = k / static_cast<unsigned>(ell);
    if (j == 1) continue;
    const FieldDescriptor sub = make_field(p, j);
    const FieldElement g = FieldElement::generator(sub);
    constraints.emplace_back(embed(g, source), embed(g, target));
  }
  std::optional<FieldElement> chosen;
  for (const auto& r : roots_in_field(m_target)) {
    const bool compatible = std::ranges::all_of(constraints, [&](const auto& c) {
      return evaluate_at(c.first, r, target) == c.second;
    });
    if (compatible) {
      chosen = r;
      break;
    }
  }
  if (!chosen) throw DomainError("no compatible embedding of " + source.name() + " into " + target.name());
  std::lock_guard lock(mutex);
  cache.emplace(key, FieldElement::Coefficients(chosen->coefficients().begin(), chosen->coefficients().end()));
  return *chosen;
}

void require_embeddable(const FieldDescriptor& sub, const FieldDescriptor& field) {
  if (!is_subfield(sub, field)) throw DomainError("cannot embed " + sub.name() + " into " + field.name());
}

}  // namespace

FieldElement embed(const FieldElement& a, const FieldDescriptor& target) {
  const FieldDescriptor& source = a.field();
  if (source == target) return a;
  require_embeddable(source, target);
  if (source.degree() == 1) return FieldElement::from_integer(target, static_cast<long>(a.coefficients()[0]));
  return evaluate_at(a, generator_image(source, target), target);
}

Polynomial embed(const Polynomial& p, const FieldDescriptor& target) {
  return p.map_coefficients(target, [&](const FieldElement& c) { return embed(c, target); });
}

std::optional<FieldElement> try_descend(const FieldElement& b, const FieldDescriptor& sub) {
  const FieldDescriptor& field = b.field();
  if (field == sub) return b;
  require_embeddable(sub, field);
  if (sub.degree() == 1) {
    if (!b.in_prime_subfield()) return std::nullopt;
    return FieldElement::from_integer(sub, static_cast<long>(b.coefficients()[0]));
  }
  // Solve sum_i a_i r^i = b over GF(p), r the image of the sub generator.
  const std::uint64_t p = field.characteristic();
  const unsigned k = sub.degree();
  const unsigned n = field.degree();
  const FieldElement r = generator_image(sub, field);
  std::vector<std::vector<std::uint64_t>> rows(n, std::vector<std::uint64_t>(k + 1, 0));
  FieldElement power = FieldElement::one(field);
  for (unsigned i = 0; i < k; ++i) {
    for (unsigned row = 0; row < n; ++row) rows[row][i] = power.coefficients()[row];
    power *= r;
  }
  for (unsigned row = 0; row < n; ++row) rows[row][k] = b.coefficients()[row];
  std::vector<unsigned> pivot_row_of(k, n);
  unsigned rank = 0;
  for (unsigned col = 0; col < k && rank < n; ++col) {
    unsigned piv = rank;
    while (piv < n && rows[piv][col] == 0) ++piv;
    if (piv == n) continue;
    std::swap(rows[piv], rows[rank]);
    const std::uint64_t inv = inverse_mod(rows[rank][col], p);
    for (auto& v : rows[rank]) v = v * inv % p;
    for (unsigned row = 0; row < n; ++row) {
      if (row == rank || rows[row][col] == 0) continue;
      const std::uint64_t c = rows[row][col];
      for (unsigned j = 0; j <= k; ++j) rows[row][j] = (rows[row][j] + (p - c) * rows[rank][j]) % p;
    }
    pivot_row_of[col] = rank++;
  }
  for (unsigned row = rank; row < n; ++row) {
    if (rows[row][k] != 0) return std::nullopt;
  }
  std::vector<std::uint64_t> coords(k, 0);
  for (unsigned col = 0; col < k; ++col) {
    if (pivot_row_of[col] < n) coords[col] = rows[pivot_row_of[col]][k];
  }
  return FieldElement::from_coefficients(sub, coords);
}

FieldElement descend(const FieldElement& b, const FieldDescriptor& sub) {
  auto out = try_descend(b, sub);
  if (!out) throw DescentError("element " + b.to_string() + " of " + b.field().name() + " does not lie in " + sub.name());
  return *out;
}

Polynomial descend(const Polynomial& p, const FieldDescriptor& sub) {
  return p.map_coefficients(sub, [&](const FieldElement& c) { return descend(c, sub); });
}

std::vector<FieldElement> conjugates(const FieldElement& a, const FieldDescriptor& over) {
  if (a.field().is_rationals()) {
    if (!over.is_rationals()) throw DomainError("conjugates over a field other than Q");
    return {a};
  }
  require_embeddable(over, a.field());
  std::vector<FieldElement> orbit{a};
  auto step = [&](const FieldElement& v) {
    FieldElement out = v;
    for (unsigned j = 0; j < over.degree(); ++j) out = out.frobenius();
    return out;
  };
  for (FieldElement next = step(a); !(next == a); next = step(next)) orbit.push_back(next);
  return orbit;
}

Polynomial minimal_poly_of_element(const FieldElement& a, const FieldDescriptor& over) {
  Polynomial prod = Polynomial::constant(FieldElement::one(a.field()));
  for (const auto& c : conjugates(a, over)) prod *= Polynomial::linear(c);
  return descend(prod, over);
}

SplitRoots roots_in_splitting_field(const Factorization& f, unsigned degree, std::uint64_t seed) {
  const FieldDescriptor& base = f.unit.field();
  if (f.remainder && f.remainder->degree() > 0) {
    throw IrrationalRoots("polynomial has roots outside Q: " + f.remainder->to_string());
  }
  SplitRoots out{splitting_field(base, degree), {}, 0};
  for (const auto& [g, mult] : f.factors) {
    if (degree % static_cast<unsigned>(g.degree()) != 0) {
      throw DomainError("factor of degree " + std::to_string(g.degree()) + " does not split in degree " +
                        std::to_string(degree));
    }
    if (g.degree() == 1 && g.coefficients()[0].is_zero()) {
      out.zero_multiplicity += mult;
      continue;
    }
    if (g.degree() == 1) {
      out.roots.emplace_back(embed(-g.coeff(0), out.field), mult);
      continue;
    }
    for (auto& r : roots_in_field(embed(g, out.field), seed)) out.roots.emplace_back(std::move(r), mult);
  }
  std::ranges::sort(out.roots, [](const auto& a, const auto& b) { return canonical_compare(a.first, b.first) < 0; });
  return out;
}

}  // namespace lrs
