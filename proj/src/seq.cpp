#include "lrs/seq.hpp"

#include <algorithm>
#include <optional>

#include "lrs/error.hpp"

namespace lrs {

LinearRecurrence::LinearRecurrence(Polynomial char_poly, std::vector<FieldElement> initial)
    : char_poly_(std::move(char_poly)), initial_(std::move(initial)) {
  if (char_poly_.degree() < 1 || !char_poly_.is_monic()) {
    throw DomainError("a recurrence needs a monic characteristic polynomial of degree >= 1");
  }
  if (initial_.size() != static_cast<std::size_t>(char_poly_.degree())) {
    throw DomainError("a recurrence of order " + std::to_string(char_poly_.degree()) + " needs exactly that many initial terms");
  }
  for (const auto& v : initial_) {
    if (!(v.field() == char_poly_.field())) throw FieldMismatch("initial term outside " + char_poly_.field().name());
  }
}

SequencePrefix generate(const LinearRecurrence& r, std::size_t n) {
  const auto& c = r.char_poly().coefficients();
  const std::size_t d = c.size() - 1;
  SequencePrefix out{r.char_poly().field(), {}};
  out.terms.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i < d) {
      out.terms.push_back(r.initial()[i]);
      continue;
    }
    FieldElement next = FieldElement::zero(out.field);
    for (std::size_t k = 0; k < d; ++k) {
      if (!c[k].is_zero()) next -= c[k] * out.terms[i - d + k];
    }
    out.terms.push_back(std::move(next));
  }
  return out;
}

std::vector<LinearRecurrence> impulse_basis(const Polynomial& p) {
  if (p.degree() < 1) throw DomainError("impulse basis of a constant polynomial");
  const std::size_t d = static_cast<std::size_t>(p.degree());
  std::vector<LinearRecurrence> out;
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<FieldElement> init(d, FieldElement::zero(p.field()));
    init[i] = FieldElement::one(p.field());
    out.emplace_back(p, std::move(init));
  }
  return out;
}

SequencePrefix hadamard(const SequencePrefix& a, const SequencePrefix& b) {
  if (!(a.field == b.field)) throw FieldMismatch("Hadamard product of sequences over different fields");
  SequencePrefix out{a.field, {}};
  const std::size_t n = std::min(a.size(), b.size());
  out.terms.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.terms.push_back(a.terms[i] * b.terms[i]);
  return out;
}

Membership satisfies(const Polynomial& p, const SequencePrefix& s) {
  if (p.is_zero()) throw DomainError("the zero polynomial is not a recurrence");
  const auto& c = p.coefficients();
  const std::size_t d = c.size() - 1;
  if (s.size() < d + 1) return {true, true};
  for (std::size_t n = 0; n + d < s.size(); ++n) {
    FieldElement acc = FieldElement::zero(s.field);
    for (std::size_t k = 0; k <= d; ++k) {
      if (!c[k].is_zero()) acc += c[k] * s.terms[n + k];
    }
    if (!acc.is_zero()) return {false, false};
  }
  return {true, false};
}

namespace {

// Rows kept in semi-echelon form: each row is 1 at its pivot, and every row
// inserted later is 0 at all earlier pivots.
class EchelonBasis {
 public:
  explicit EchelonBasis(FieldDescriptor field) : field_(std::move(field)) {}

  /// Reduces `v`; appends it and returns true when it is independent.
  bool insert(std::vector<FieldElement> v) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const std::size_t piv = pivots_[r];
      if (v[piv].is_zero()) continue;
      const FieldElement c = v[piv];
      const auto& row = rows_[r];
      for (std::size_t j = piv; j < v.size(); ++j) {
        if (!row[j].is_zero()) v[j] -= c * row[j];
      }
    }
    auto it = std::ranges::find_if(v, [](const FieldElement& e) { return !e.is_zero(); });
    if (it == v.end()) return false;
    const std::size_t piv = static_cast<std::size_t>(it - v.begin());
    const FieldElement inv = v[piv].inverse();
    for (std::size_t j = piv; j < v.size(); ++j) v[j] *= inv;
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  FieldDescriptor field_;
  std::vector<std::vector<FieldElement>> rows_;
  std::vector<std::size_t> pivots_;
};

std::vector<FieldElement> window(const SequencePrefix& s, std::size_t start, std::size_t length) {
  return {s.terms.begin() + static_cast<long>(start), s.terms.begin() + static_cast<long>(start + length)};
}

// Solves A c = b for square A given as rows; nullopt when A is singular.
std::optional<std::vector<FieldElement>> solve_square(std::vector<std::vector<FieldElement>> a, const FieldDescriptor& field) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    const FieldElement inv = a[col][col].inverse();
    for (std::size_t j = col; j <= n; ++j) a[col][j] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const FieldElement c = a[r][col];
      for (std::size_t j = col; j <= n; ++j) {
        if (!a[col][j].is_zero()) a[r][j] -= c * a[col][j];
      }
    }
  }
  std::vector<FieldElement> out;
  out.reserve(n);
  for (std::size_t r = 0; r < n; ++r) out.push_back(a[r][n]);
  (void)field;
  return out;
}

}  // namespace

Polynomial min_annihilator_span(std::span<const SequencePrefix> prefixes, std::size_t degree_bound) {
  if (prefixes.empty()) throw DomainError("min_annihilator_span needs at least one prefix");
  const FieldDescriptor field = prefixes.front().field;
  for (const auto& s : prefixes) {
    if (!(s.field == field)) throw FieldMismatch("prefixes over different fields");
    if (s.size() < 2 * degree_bound) {
      throw DomainError("prefix of length " + std::to_string(s.size()) + " is shorter than 2*" +
                        std::to_string(degree_bound));
    }
  }
  const auto fail = [&] {
    return DomainError("no monic annihilator of degree <= " + std::to_string(degree_bound) + " fits every window");
  };

  // Basis of the shift-closed span, built from Krylov runs s, Ss, S^2 s, ...
  // compared on their first degree_bound terms. Any space annihilated by a
  // polynomial of degree r <= degree_bound is determined by r terms, so the
  // truncation is faithful under the precondition.
  EchelonBasis echelon(field);
  struct Member {
    std::size_t prefix;
    std::size_t shift;
  };
  std::vector<Member> members;
  for (std::size_t i = 0; i < prefixes.size(); ++i) {
    for (std::size_t shift = 0;; ++shift) {
      if (shift > degree_bound) throw fail();
      if (!echelon.insert(window(prefixes[i], shift, degree_bound))) break;
      members.push_back({i, shift});
      if (members.size() > degree_bound) throw fail();
    }
  }

  // Solve sum_{k<r} c_k b_k + b_r = 0 over the basis members b.
  const std::size_t r = members.size();
  std::vector<std::vector<FieldElement>> system;
  for (const auto& [i, shift] : members) {
    std::vector<FieldElement> row = window(prefixes[i], shift, r + 1);
    row.back() = -row.back();
    system.push_back(std::move(row));
  }
  auto solution = solve_square(std::move(system), field);
  if (!solution) throw fail();
  solution->push_back(FieldElement::one(field));
  Polynomial out(field, std::move(*solution));

  for (const auto& s : prefixes) {
    if (!satisfies(out, s)) throw fail();
  }
  return out;
}

std::size_t rank_of(std::span<const SequencePrefix> rows) {
  if (rows.empty()) return 0;
  EchelonBasis echelon(rows.front().field);
  const std::size_t n = rows.front().size();
  for (const auto& s : rows) {
    if (s.size() != n) throw DomainError("rank_of needs prefixes of equal length");
    echelon.insert(s.terms);
  }
  return echelon.rank();
}

std::vector<SequencePrefix> product_prefixes(const std::vector<std::vector<LinearRecurrence>>& bases, std::size_t n) {
  if (bases.empty()) throw DomainError("product of an empty family of spaces");
  std::vector<SequencePrefix> out;
  for (const auto& r : bases.front()) out.push_back(generate(r, n));
  for (std::size_t k = 1; k < bases.size(); ++k) {
    std::vector<SequencePrefix> factor_terms;
    for (const auto& r : bases[k]) factor_terms.push_back(generate(r, n));
    std::vector<SequencePrefix> next;
    next.reserve(out.size() * factor_terms.size());
    for (const auto& a : out) {
      for (const auto& b : factor_terms) next.push_back(hadamard(a, b));
    }
    out = std::move(next);
  }
  return out;
}

std::size_t product_space_rank(const std::vector<std::vector<LinearRecurrence>>& bases, std::size_t n) {
  const auto rows = product_prefixes(bases, n);
  return rank_of(rows);
}

OracleResult oracle_product_char_poly(const std::vector<Polynomial>& polys, std::uint64_t budget) {
  if (polys.empty()) throw DomainError("need at least one polynomial");
  std::uint64_t bound = 1;
  std::vector<std::vector<LinearRecurrence>> bases;
  for (const auto& p : polys) {
    if (!(p.field() == polys.front().field())) throw FieldMismatch("all polynomials must share one base field");
    if (p.degree() < 1 || !p.is_monic()) throw DomainError("characteristic polynomials must be monic and nonconstant");
    bound *= static_cast<std::uint64_t>(p.degree());
    if (bound > budget) {
      throw BudgetExceeded("oracle needs product degree " + std::to_string(bound) + " (or more), above the budget of " +
                           std::to_string(budget));
    }
    bases.push_back(impulse_basis(p));
  }
  const std::size_t length = 2 * bound;
  const auto products = product_prefixes(bases, length);
  OracleResult out{min_annihilator_span(products, bound), 0, length, products.size()};
  out.rank = rank_of(products);
  if (out.rank != static_cast<std::size_t>(out.annihilator.degree())) {
    throw Error("oracle certificate failed: product span has rank " + std::to_string(out.rank) +
                " but its annihilator has degree " + std::to_string(out.annihilator.degree()));
  }
  return out;
}

}  // namespace lrs
