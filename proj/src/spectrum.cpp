#include "lrs/spectrum.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "lrs/error.hpp"
#include "lrs/tower.hpp"
#include "lrs/wedge.hpp"

namespace lrs {

namespace {

WedgeContext wedge_context(const FieldDescriptor& base) { return WedgeContext(base.characteristic()); }

void require_same_base(const RootSpectrum& a, const RootSpectrum& b) {
  if (!(a.base() == b.base())) {
    throw FieldMismatch("spectra over different base fields: " + a.base().name() + " and " + b.base().name());
  }
}

// Both operands moved to the lcm of their splitting degrees.
std::pair<RootSpectrum, RootSpectrum> common_field(const RootSpectrum& a, const RootSpectrum& b) {
  require_same_base(a, b);
  const unsigned d = std::lcm(a.splitting_degree(), b.splitting_degree());
  return {reembed(a, d), reembed(b, d)};
}

}  // namespace

RootSpectrum::RootSpectrum(FieldDescriptor base, unsigned splitting_degree)
    : base_(std::move(base)), field_(splitting_field(base_, splitting_degree)), splitting_degree_(splitting_degree) {}

void RootSpectrum::raise(const FieldElement& root, std::uint64_t mult) {
  if (!(root.field() == field_)) throw FieldMismatch("root outside " + field_.name());
  if (root.is_zero()) throw DomainError("the zero root is tracked by zero_mult, not as an entry");
  if (mult == 0) return;
  auto [it, inserted] = entries_.try_emplace(root, mult);
  if (!inserted) it->second = std::max(it->second, mult);
}

std::uint64_t RootSpectrum::multiplicity(const FieldElement& root) const {
  auto it = entries_.find(root);
  return it == entries_.end() ? 0 : it->second;
}

std::uint64_t RootSpectrum::nonzero_dimension() const {
  std::uint64_t out = 0;
  for (const auto& [root, mult] : entries_) out += mult;
  return out;
}

bool RootSpectrum::is_orbit_closed() const {
  for (const auto& [root, mult] : entries_) {
    for (const auto& c : conjugates(root, base_)) {
      if (multiplicity(c) != mult) return false;
    }
  }
  return true;
}

nlohmann::json RootSpectrum::to_json() const {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [root, mult] : entries_) entries.push_back({root.to_string(), mult});
  return {{"base", base_.name()},
          {"splitting_degree", splitting_degree_},
          {"zero_mult", zero_mult_},
          {"entries", std::move(entries)}};
}

bool operator==(const RootSpectrum& a, const RootSpectrum& b) {
  return a.base_ == b.base_ && a.splitting_degree_ == b.splitting_degree_ && a.zero_mult_ == b.zero_mult_ &&
         a.entries_ == b.entries_;
}

RootSpectrum from_poly(const Polynomial& p, std::uint64_t seed) {
  if (p.is_zero() || !p.is_monic()) throw DomainError("from_poly needs a monic nonzero polynomial");
  const Factorization f = factor(p, seed);
  if (f.remainder) throw IrrationalRoots("polynomial has roots outside Q: " + f.remainder->to_string());
  return from_poly(p, splitting_degree(f), seed);
}

RootSpectrum from_poly(const Polynomial& p, unsigned degree, std::uint64_t seed) {
  if (p.is_zero() || !p.is_monic()) throw DomainError("from_poly needs a monic nonzero polynomial");
  const Factorization f = factor(p, seed);
  if (f.remainder) throw IrrationalRoots("polynomial has roots outside Q: " + f.remainder->to_string());
  const SplitRoots split = roots_in_splitting_field(f, degree, seed);
  RootSpectrum out(p.field(), degree);
  out.set_zero_mult(split.zero_multiplicity);
  for (const auto& [root, mult] : split.roots) out.raise(root, mult);
  return out;
}

Polynomial to_poly(const RootSpectrum& spec) {
  const FieldDescriptor& base = spec.base();
  Polynomial out = Polynomial::monomial(base, spec.zero_mult());
  std::set<FieldElement, CanonicalLess> seen;
  for (const auto& [root, mult] : spec.entries()) {
    if (seen.contains(root)) continue;
    Polynomial orbit_poly = Polynomial::constant(FieldElement::one(spec.field()));
    for (const auto& c : conjugates(root, base)) {
      if (spec.multiplicity(c) != mult) {
        throw DescentError("spectrum is not closed under conjugation: " + root.to_string() + " has multiplicity " +
                           std::to_string(mult) + " but its conjugate " + c.to_string() + " has " +
                           std::to_string(spec.multiplicity(c)));
      }
      seen.insert(c);
      orbit_poly *= Polynomial::linear(c);
    }
    out *= descend(orbit_poly, base).pow(mult);
  }
  return out;
}

RootSpectrum reembed(const RootSpectrum& spec, unsigned degree) {
  if (degree == spec.splitting_degree()) return spec;
  if (degree % spec.splitting_degree() != 0) {
    throw DomainError("cannot move a spectrum from splitting degree " + std::to_string(spec.splitting_degree()) +
                      " to " + std::to_string(degree));
  }
  RootSpectrum out(spec.base(), degree);
  out.set_zero_mult(spec.zero_mult());
  for (const auto& [root, mult] : spec.entries()) out.raise(embed(root, out.field()), mult);
  return out;
}

RootSpectrum spec_add(const RootSpectrum& a, const RootSpectrum& b) {
  auto [x, y] = common_field(a, b);
  x.set_zero_mult(std::max(x.zero_mult(), y.zero_mult()));
  for (const auto& [root, mult] : y.entries()) x.raise(root, mult);
  return x;
}

RootSpectrum spec_mul(const RootSpectrum& a, const RootSpectrum& b) {
  const auto [x, y] = common_field(a, b);
  const WedgeContext ctx = wedge_context(x.base());
  RootSpectrum out(x.base(), x.splitting_degree());
  out.set_zero_mult(std::max({wedge_lambda(x.zero_mult(), y.zero_mult(), true),
                              wedge_lambda(x.zero_mult(), y.nonzero_dimension(), false),
                              wedge_lambda(y.zero_mult(), x.nonzero_dimension(), false)}));
  for (const auto& [lambda, i] : x.entries()) {
    for (const auto& [mu, j] : y.entries()) out.raise(lambda * mu, wedge(i, j, ctx));
  }
  return out;
}

UpsilonResult upsilon_mary(const std::vector<RootSpectrum>& specs, std::uint64_t cap) {
  if (specs.empty()) throw DomainError("upsilon_mary needs at least one spectrum");
  unsigned degree = 1;
  for (const auto& s : specs) {
    require_same_base(specs.front(), s);
    if (s.zero_mult() != 0) throw DomainError("upsilon_mary takes spectra without a zero root");
    degree = std::lcm(degree, s.splitting_degree());
  }
  const FieldDescriptor& base = specs.front().base();
  UpsilonResult out{RootSpectrum(base, degree), {}, 0};
  mpz_class count = 1;
  for (const auto& s : specs) count *= static_cast<unsigned long>(s.entries().size());
  if (count == 0) return out;
  if (count > mpz_class(static_cast<unsigned long>(cap))) {
    throw BudgetExceeded("Upsilon enumeration needs " + count.get_str() + " root tuples, above the cap of " +
                         std::to_string(cap) + "; use the spec_mul fold path instead");
  }
  out.tuple_count = count.get_ui();

  const std::size_t m = specs.size();
  std::vector<std::vector<std::pair<FieldElement, std::uint64_t>>> lists;
  for (const auto& s : specs) {
    const RootSpectrum moved = reembed(s, degree);
    lists.emplace_back(moved.entries().begin(), moved.entries().end());
  }
  const WedgeContext ctx = wedge_context(base);
  const FieldDescriptor& field = out.spectrum.field();
  std::map<FieldElement, OmegaClass, CanonicalLess> classes;

  // Odometer over tuples, keeping prefix products and prefix folded wedges.
  std::vector<std::size_t> idx(m, 0);
  std::vector<FieldElement> prefix_product(m + 1, FieldElement::one(field));
  std::vector<std::uint64_t> prefix_wedge(m + 1, 0);
  std::size_t valid = 0;  // prefixes [0, valid] are up to date
  for (;;) {
    for (std::size_t k = valid; k < m; ++k) {
      const auto& [root, mult] = lists[k][idx[k]];
      prefix_product[k + 1] = prefix_product[k] * root;
      prefix_wedge[k + 1] = k == 0 ? mult : wedge(prefix_wedge[k], mult, ctx);
    }
    const FieldElement& value = prefix_product[m];
    const std::uint64_t folded = prefix_wedge[m];
    auto it = classes.find(value);
    if (it == classes.end() || it->second.best < folded) {
      std::vector<FieldElement> witness;
      for (std::size_t k = 0; k < m; ++k) witness.push_back(lists[k][idx[k]].first);
      if (it == classes.end()) {
        classes.emplace(value, OmegaClass{value, folded, std::move(witness)});
      } else {
        it->second.best = folded;
        it->second.witness = std::move(witness);
      }
    }
    std::size_t k = m;
    while (k-- > 0) {
      if (++idx[k] < lists[k].size()) break;
      idx[k] = 0;
    }
    if (k == static_cast<std::size_t>(-1)) break;
    valid = k;
  }
  for (auto& [value, cls] : classes) {
    out.spectrum.raise(value, cls.best);
    out.classes.push_back(std::move(cls));
  }
  return out;
}

namespace {

struct SplitInputs {
  std::vector<std::uint64_t> zero_mults;
  std::vector<Polynomial> nonzero_parts;
  std::vector<Factorization> factorizations;
  unsigned degree = 1;
};

SplitInputs split_inputs(const std::vector<Polynomial>& polys, std::uint64_t seed) {
  if (polys.empty()) throw DomainError("need at least one polynomial");
  SplitInputs out;
  const FieldDescriptor& base = polys.front().field();
  for (const auto& p : polys) {
    if (!(p.field() == base)) throw FieldMismatch("all polynomials must share one base field");
    if (p.degree() < 1) throw DomainError("characteristic polynomials must be nonconstant");
    if (!p.is_monic()) throw DomainError("characteristic polynomials must be monic: " + p.to_string());
    std::uint64_t s = 0;
    while (p.coefficients()[s].is_zero()) ++s;
    std::vector<FieldElement> q(p.coefficients().begin() + static_cast<long>(s), p.coefficients().end());
    Polynomial qpoly(base, std::move(q));
    Factorization f = factor(qpoly, seed);
    if (f.remainder) {
      throw IrrationalRoots(p.to_string() + " has roots outside Q; use the sequence oracle (verify) instead");
    }
    out.degree = std::lcm(out.degree, splitting_degree(f));
    out.zero_mults.push_back(s);
    out.nonzero_parts.push_back(std::move(qpoly));
    out.factorizations.push_back(std::move(f));
  }
  return out;
}

RootSpectrum spectrum_of(const Factorization& f, std::uint64_t zero_mult, unsigned degree, std::uint64_t seed) {
  const SplitRoots split = roots_in_splitting_field(f, degree, seed);
  RootSpectrum out(f.unit.field(), degree);
  out.set_zero_mult(zero_mult + split.zero_multiplicity);
  for (const auto& [root, mult] : split.roots) out.raise(root, mult);
  return out;
}

}  // namespace

ProductCharPoly product_char_poly(const std::vector<Polynomial>& polys, const ProductOptions& options) {
  SplitInputs in = split_inputs(polys, options.seed);
  const FieldDescriptor& base = polys.front().field();

  std::vector<RootSpectrum> nonzero_specs;
  std::vector<std::size_t> theta;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    nonzero_specs.push_back(spectrum_of(in.factorizations[i], 0, in.degree, options.seed));
    if (in.nonzero_parts[i].is_one()) theta.push_back(i + 1);
  }
  std::uint64_t rho = 0;
  if (!theta.empty()) {
    rho = in.zero_mults[theta.front() - 1];
    for (auto i : theta) rho = std::min(rho, in.zero_mults[i - 1]);
  } else {
    rho = *std::ranges::max_element(in.zero_mults);
  }
  UpsilonResult upsilon = upsilon_mary(nonzero_specs, options.cap);
  Polynomial result = Polynomial::monomial(base, rho) * to_poly(upsilon.spectrum);

  RootSpectrum folded = [&] {
    RootSpectrum acc = nonzero_specs.front();
    acc.set_zero_mult(in.zero_mults.front());
    for (std::size_t i = 1; i < polys.size(); ++i) {
      RootSpectrum next = nonzero_specs[i];
      next.set_zero_mult(in.zero_mults[i]);
      acc = spec_mul(acc, next);
    }
    return acc;
  }();
  Polynomial fold_result = to_poly(folded);
  if (!(fold_result == result)) {
    throw Error("internal inconsistency: rho/Upsilon gives " + result.to_string() + " but the spec_mul fold gives " +
                fold_result.to_string());
  }
  return ProductCharPoly{std::move(result), std::move(fold_result), rho, std::move(theta), std::move(in.zero_mults),
                         std::move(in.nonzero_parts), in.degree, std::move(upsilon)};
}

Polynomial product_char_poly_fold(const std::vector<Polynomial>& polys, std::uint64_t seed) {
  const SplitInputs in = split_inputs(polys, seed);
  RootSpectrum acc = spectrum_of(in.factorizations.front(), in.zero_mults.front(), in.degree, seed);
  for (std::size_t i = 1; i < polys.size(); ++i) {
    acc = spec_mul(acc, spectrum_of(in.factorizations[i], in.zero_mults[i], in.degree, seed));
  }
  return to_poly(acc);
}

}  // namespace lrs
