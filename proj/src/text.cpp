#include "lrs/text.hpp"

#include <cctype>
#include <optional>
#include <string>
#include <tuple>

#include "lrs/error.hpp"

namespace lrs {
namespace {

constexpr unsigned long kMaxExponent = 1u << 16;

class Parser {
 public:
  Parser(std::string_view text, FieldDescriptor field) : text_(text), field_(std::move(field)) {}

  Polynomial parse_all() {
    Polynomial out = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, std::string(text_), pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return std::string(text_.substr(start, pos_ - start));
  }

  Polynomial expr() {
    Polynomial out = term();
    for (;;) {
      if (accept('+')) {
        out = out + term();
      } else if (accept('-')) {
        out = out - term();
      } else {
        return out;
      }
    }
  }

  static bool starts_atom(char c) { return c == '(' || c == 'x' || c == 'X' || c == '['; }

  Polynomial term() {
    Polynomial out = factor();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        out = out * factor();
      } else if (c == '/') {
        ++pos_;
        const std::size_t at = pos_;
        const Polynomial d = factor();
        if (d.is_zero()) {
          pos_ = at;
          fail("division by zero");
        }
        if (d.degree() > 0) {
          const auto [q, r] = out.divmod(d);
          if (!r.is_zero()) {
            pos_ = at;
            fail("division by a polynomial that does not divide exactly");
          }
          out = q;
        } else {
          out = out.scaled(d.leading().inverse());
        }
      } else if (starts_atom(c)) {
        out = out * factor();
      } else {
        return out;
      }
    }
  }

  Polynomial factor() {
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    Polynomial base = atom();
    if (accept('^')) {
      const std::size_t at = pos_;
      const std::string e = digits();
      if (e.size() > 6 || std::stoul(e) > kMaxExponent) {
        pos_ = at;
        fail("exponent too large");
      }
      base = base.pow(std::stoul(e));
    }
    return base;
  }

  Polynomial atom() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      expect(')');
      return inner;
    }
    if (c == 'x' || c == 'X') {
      ++pos_;
      return Polynomial::x(field_);
    }
    if (c == '[') return Polynomial::constant(bracket());
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return Polynomial::constant(FieldElement::from_integer(field_, mpz_class(digits())));
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  FieldElement bracket() {
    const std::size_t at = pos_;
    expect('[');
    if (!field_.is_finite()) {
      pos_ = at;
      fail("coefficient arrays need a finite field");
    }
    std::vector<std::uint64_t> coeffs;
    const mpz_class p(static_cast<unsigned long>(field_.characteristic()));
    do {
      const bool negative = accept('-');
      mpz_class v(digits());
      if (negative) v = -v;
      mpz_class r;
      mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
      coeffs.push_back(r.get_ui());
    } while (accept(','));
    expect(']');
    if (coeffs.size() > field_.degree()) {
      pos_ = at;
      fail("coefficient array longer than the field degree " + std::to_string(field_.degree()));
    }
    coeffs.resize(field_.degree(), 0);
    return FieldElement::from_coefficients(field_, coeffs);
  }

  std::string_view text_;
  FieldDescriptor field_;
  std::size_t pos_ = 0;
};

std::string trimmed(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

// Smallest prime factor and exponent when n is a prime power.
std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  std::uint64_t p = n;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      p = d;
      break;
    }
  }
  unsigned k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  if (n != 1) return std::nullopt;
  return std::pair{p, k};
}

}  // namespace

FieldDescriptor parse_field(std::string_view raw) {
  const std::string text = trimmed(raw);
  const auto fail = [&](const std::string& message, std::size_t pos) -> ParseError {
    return ParseError(message, text, pos);
  };
  if (text == "Q") return FieldDescriptor::rationals();
  if (text.rfind("GF", 0) != 0) throw fail("expected Q or GF(...)", 0);
  if (text.size() < 3 || text[2] != '(') throw fail("expected '('", 2);

  std::size_t pos = 3;
  const auto number = [&]() -> std::uint64_t {
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw fail("expected an integer", pos);
    if (pos - start > 18) throw fail("integer too large", start);
    return std::stoull(text.substr(start, pos - start));
  };
  const std::size_t size_pos = pos;
  std::uint64_t p = number();
  unsigned k = 1;
  if (pos < text.size() && text[pos] == '^') {
    ++pos;
    const std::size_t at = pos;
    const std::uint64_t e = number();
    if (e < 1 || e > 64) throw fail("extension degree must be between 1 and 64", at);
    if (!is_prime(p)) throw fail("characteristic must be prime", size_pos);
    k = static_cast<unsigned>(e);
  } else {
    const auto pk = prime_power(p);
    if (!pk) throw fail("field order must be a prime power", size_pos);
    std::tie(p, k) = *pk;
  }
  if (pos >= text.size() || text[pos] != ')') throw fail("expected ')'", pos);
  ++pos;
  if (p >= (std::uint64_t{1} << 32)) throw fail("characteristic must be below 2^32", size_pos);
  if (pos == text.size()) return make_field(p, k);

  if (text[pos] != '/') throw fail("expected '/' before an explicit modulus", pos);
  ++pos;
  const FieldDescriptor prime = make_field(p, 1);
  Polynomial m(prime);
  try {
    m = Parser(std::string_view(text).substr(pos), prime).parse_all();
  } catch (const ParseError& e) {
    throw fail(e.what(), pos + e.position());
  }
  if (m.degree() != static_cast<long>(k)) {
    throw fail("modulus has degree " + std::to_string(m.degree()) + ", expected " + std::to_string(k), pos);
  }
  if (!m.is_monic()) throw fail("modulus must be monic", pos);
  std::vector<std::uint64_t> coeffs;
  for (const auto& c : m.coefficients()) coeffs.push_back(c.coefficients()[0]);
  if (!is_irreducible_mod_p(coeffs, p)) throw fail("modulus is not irreducible over GF(" + std::to_string(p) + ")", pos);
  return FieldDescriptor::finite(p, std::move(coeffs));
}

Polynomial parse_polynomial(std::string_view text, const FieldDescriptor& field) {
  return Parser(text, field).parse_all();
}

FieldElement parse_element(std::string_view text, const FieldDescriptor& field) {
  const Polynomial p = parse_polynomial(text, field);
  if (p.degree() > 0) throw ParseError("expected a constant", std::string(text), 0);
  return p.is_zero() ? FieldElement::zero(field) : p.coeff(0);
}

}  // namespace lrs
