#pragma once

#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "locmod/fields.hpp"
#include "locmod/monomial.hpp"

namespace locmod {

// Ambient variable list; polynomials refer to variables by index.
struct VarSet {
  std::vector<std::string> names;

  VarSet() = default;
  explicit VarSet(std::vector<std::string> n) : names(std::move(n)) {}

  std::size_t size() const { return names.size(); }
  const std::string& operator[](std::size_t i) const { return names[i]; }

  std::optional<std::size_t> find(const std::string& v) const {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == v) return i;
    return std::nullopt;
  }
  std::size_t index_of(const std::string& v) const {
    auto i = find(v);
    if (!i) throw std::invalid_argument("unknown variable: " + v);
    return *i;
  }
  std::size_t add(const std::string& v) {
    if (find(v)) throw std::invalid_argument("duplicate variable: " + v);
    names.push_back(v);
    return names.size() - 1;
  }
  bool operator==(const VarSet& o) const { return names == o.names; }
};

// Sparse multivariate polynomial over the field F. Terms are kept sorted in
// strictly decreasing grevlex order with no zero coefficients stored.
template <class F>
struct Poly {
  using Elem = typename F::Elem;
  struct Term {
    Monomial m;
    Elem c;
  };

  F k;
  std::size_t nv = 0;
  std::vector<Term> terms;

  Poly() = default;
  Poly(F field, std::size_t nvars) : k(field), nv(nvars) {}

  static Poly zero(F field, std::size_t nvars) { return Poly(field, nvars); }
  static Poly constant(F field, std::size_t nvars, Elem c) {
    Poly p(field, nvars);
    if (!field.is_zero(c)) p.terms.push_back({Monomial(nvars), c});
    return p;
  }
  static Poly from_int(F field, std::size_t nvars, long long v) {
    return constant(field, nvars, field.from_int(v));
  }
  static Poly variable(F field, std::size_t nvars, std::size_t i,
                       std::uint32_t e = 1) {
    Poly p(field, nvars);
    Monomial m(nvars);
    m.e.at(i) = e;
    p.terms.push_back({std::move(m), field.one()});
    return p;
  }
  static Poly monomial(F field, Monomial m, Elem c) {
    Poly p(field, m.nvars());
    if (!field.is_zero(c)) p.terms.push_back({std::move(m), c});
    return p;
  }

  bool is_zero() const { return terms.empty(); }
  bool is_constant() const {
    return terms.empty() || (terms.size() == 1 && terms[0].m.is_one());
  }
  std::uint64_t total_degree() const {
    std::uint64_t d = 0;
    for (auto& t : terms) d = std::max(d, t.m.degree());
    return d;
  }
  std::uint32_t degree_in(std::size_t var) const {
    std::uint32_t d = 0;
    for (auto& t : terms) d = std::max(d, t.m.e[var]);
    return d;
  }
  bool involves(std::size_t var) const {
    for (auto& t : terms)
      if (t.m.e[var]) return true;
    return false;
  }
  std::vector<char> support() const {
    std::vector<char> s(nv, 0);
    for (auto& t : terms)
      for (std::size_t i = 0; i < nv; ++i)
        if (t.m.e[i]) s[i] = 1;
    return s;
  }

  bool operator==(const Poly& o) const {
    if (nv != o.nv || terms.size() != o.terms.size()) return false;
    for (std::size_t i = 0; i < terms.size(); ++i)
      if (terms[i].m != o.terms[i].m || !k.equal(terms[i].c, o.terms[i].c))
        return false;
    return true;
  }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly operator-() const {
    Poly r(*this);
    for (auto& t : r.terms) t.c = k.neg(t.c);
    return r;
  }

  Poly operator+(const Poly& o) const {
    check(o);
    Poly r(k, nv);
    r.terms.reserve(terms.size() + o.terms.size());
    MonOrder g = MonOrder::grevlex();
    std::size_t i = 0, j = 0;
    while (i < terms.size() || j < o.terms.size()) {
      if (j == o.terms.size()) {
        r.terms.push_back(terms[i++]);
      } else if (i == terms.size()) {
        r.terms.push_back(o.terms[j++]);
      } else {
        int c = mon_compare(terms[i].m, o.terms[j].m, g);
        if (c > 0) {
          r.terms.push_back(terms[i++]);
        } else if (c < 0) {
          r.terms.push_back(o.terms[j++]);
        } else {
          Elem s = k.add(terms[i].c, o.terms[j].c);
          if (!k.is_zero(s)) r.terms.push_back({terms[i].m, s});
          ++i;
          ++j;
        }
      }
    }
    return r;
  }

  Poly operator-(const Poly& o) const { return *this + (-o); }

  Poly scaled(const Elem& c) const {
    if (k.is_zero(c)) return zero(k, nv);
    Poly r(*this);
    for (auto& t : r.terms) t.c = k.mul(t.c, c);
    return r;
  }

  Poly mul_term(const Monomial& m, const Elem& c) const {
    if (k.is_zero(c)) return zero(k, nv);
    Poly r(k, nv);
    r.terms.reserve(terms.size());
    for (auto& t : terms) r.terms.push_back({t.m * m, k.mul(t.c, c)});
    return r;  // multiplying by a fixed monomial preserves grevlex order
  }

  Poly operator*(const Poly& o) const {
    check(o);
    std::map<Monomial, Elem, MonGreater> acc{MonGreater{MonOrder::grevlex()}};
    for (auto& a : terms)
      for (auto& b : o.terms) {
        Monomial m = a.m * b.m;
        Elem c = k.mul(a.c, b.c);
        auto it = acc.find(m);
        if (it == acc.end()) {
          acc.emplace(std::move(m), std::move(c));
        } else {
          it->second = k.add(it->second, c);
          if (k.is_zero(it->second)) acc.erase(it);
        }
      }
    Poly r(k, nv);
    r.terms.reserve(acc.size());
    for (auto& [m, c] : acc) r.terms.push_back({m, c});
    return r;
  }

  Poly pow(std::uint64_t e) const {
    Poly r = from_int(k, nv, 1);
    Poly base(*this);
    while (e) {
      if (e & 1) r = r * base;
      if (e >>= 1) base = base * base;
    }
    return r;
  }

  // Leading term under ord (linear scan; canonical storage is grevlex).
  const Term& leading(const MonOrder& ord) const {
    if (terms.empty()) throw std::domain_error("leading term of zero");
    if (ord.kind == MonOrder::GrevLex) return terms.front();
    std::size_t best = 0;
    for (std::size_t i = 1; i < terms.size(); ++i)
      if (mon_compare(terms[i].m, terms[best].m, ord) > 0) best = i;
    return terms[best];
  }

  Poly derivative(std::size_t var) const {
    Poly r(k, nv);
    for (auto& t : terms) {
      if (!t.m.e[var]) continue;
      Term d{t.m, k.mul(t.c, k.from_int(static_cast<long long>(t.m.e[var])))};
      d.m.e[var] -= 1;
      if (!k.is_zero(d.c)) r.terms.push_back(std::move(d));
    }
    normalize_sorted(r);
    return r;
  }

  // Substitute variable -> polynomial (same ambient ring).
  Poly substituted(std::size_t var, const Poly& value) const {
    Poly r = zero(k, nv);
    for (auto& t : terms) {
      Term rest = t;
      std::uint32_t e = rest.m.e[var];
      rest.m.e[var] = 0;
      Poly piece = monomial(k, rest.m, rest.c);
      if (e) piece = piece * value.pow(e);
      r = r + piece;
    }
    return r;
  }

  static void normalize_sorted(Poly& p) {
    MonGreater g{MonOrder::grevlex()};
    std::sort(p.terms.begin(), p.terms.end(),
              [&](const Term& a, const Term& b) { return g(a.m, b.m); });
  }

 private:
  void check(const Poly& o) const {
    if (nv != o.nv) throw std::invalid_argument("polynomial arity mismatch");
    if (!k.same_domain(o.k))
      throw std::invalid_argument("coefficient domain mismatch");
  }
};

using PolyQ = Poly<RationalField>;
using PolyF = Poly<PrimeField>;

// ---------------------------------------------------------------------------
// Canonical text format: rational coefficients, `^` powers, `*` products,
// ASCII identifier variables. This is the interchange format everywhere.
// ---------------------------------------------------------------------------

namespace textio {

inline void skip_ws(const std::string& s, std::size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

inline std::optional<std::string> read_ident(const std::string& s, std::size_t& i) {
  skip_ws(s, i);
  if (i >= s.size()) return std::nullopt;
  if (!std::isalpha(static_cast<unsigned char>(s[i])) && s[i] != '_')
    return std::nullopt;
  std::size_t j = i;
  while (j < s.size() &&
         (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
    ++j;
  std::string out = s.substr(i, j - i);
  i = j;
  return out;
}

inline std::optional<BigInt> read_nat(const std::string& s, std::size_t& i) {
  skip_ws(s, i);
  if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
    return std::nullopt;
  BigInt v = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    v = v * 10 + (s[i] - '0');
    ++i;
  }
  return v;
}

}  // namespace textio

template <class F>
Poly<F> parse_poly(const F& k, const VarSet& vars, const std::string& text) {
  using P = Poly<F>;
  std::size_t i = 0;
  const std::size_t nv = vars.size();
  P total = P::zero(k, nv);

  auto parse_factor_exp = [&](std::size_t& pos) -> std::uint32_t {
    textio::skip_ws(text, pos);
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      auto n = textio::read_nat(text, pos);
      if (!n) throw std::invalid_argument("expected exponent in: " + text);
      return static_cast<std::uint32_t>(*n);
    }
    return 1;
  };

  bool expect_term = true;
  int sign = 1;
  while (true) {
    textio::skip_ws(text, i);
    if (i >= text.size()) {
      if (expect_term && !total.is_zero())
        throw std::invalid_argument("dangling operator in: " + text);
      break;
    }
    if (text[i] == '+' || text[i] == '-') {
      if (expect_term) {
        if (text[i] == '-') sign = -sign;
      } else {
        sign = (text[i] == '-') ? -1 : 1;
        expect_term = true;
      }
      ++i;
      continue;
    }
    if (!expect_term)
      throw std::invalid_argument("expected operator at '" +
                                  text.substr(i) + "' in: " + text);

    // one term: product of factors separated by '*'
    typename F::Elem coef = k.from_int(sign);
    Monomial mon(nv);
    bool any_factor = false;
    while (true) {
      textio::skip_ws(text, i);
      if (auto id = textio::read_ident(text, i)) {
        auto vi = vars.find(*id);
        if (!vi) throw std::invalid_argument("unknown variable '" + *id +
                                             "' in: " + text);
        mon.e[*vi] += parse_factor_exp(i);
        any_factor = true;
      } else if (auto n = textio::read_nat(text, i)) {
        BigInt num = *n;
        BigInt den = 1;
        textio::skip_ws(text, i);
        if (i < text.size() && text[i] == '/') {
          ++i;
          auto d = textio::read_nat(text, i);
          if (!d || *d == 0) throw std::invalid_argument("bad denominator in: " + text);
          den = *d;
        }
        std::uint32_t e = parse_factor_exp(i);
        for (std::uint32_t r = 0; r < e; ++r) {
          coef = k.mul(coef, field_from_rat<F>(k, num, den));
        }
        any_factor = true;
      } else {
        throw std::invalid_argument("expected factor at '" +
                                    text.substr(i) + "' in: " + text);
      }
      textio::skip_ws(text, i);
      if (i < text.size() && text[i] == '*') {
        ++i;
        continue;
      }
      break;
    }
    if (!any_factor) throw std::invalid_argument("empty term in: " + text);
    total = total + P::monomial(k, mon, coef);
    sign = 1;
    expect_term = false;
  }
  return total;
}

template <class F>
typename F::Elem field_from_rat(const F& k, const BigInt& num, const BigInt& den);

template <>
inline RationalField::Elem field_from_rat<RationalField>(const RationalField&,
                                                         const BigInt& num,
                                                         const BigInt& den) {
  return BigRat(num, den);
}

template <>
inline PrimeField::Elem field_from_rat<PrimeField>(const PrimeField& k,
                                                   const BigInt& num,
                                                   const BigInt& den) {
  BigInt p(k.p);
  BigInt n = num % p;
  if (n < 0) n += p;
  BigInt d = den % p;
  if (d < 0) d += p;
  if (d == 0) throw std::domain_error("denominator divisible by modulus");
  auto nn = static_cast<std::uint64_t>(n);
  auto dd = static_cast<std::uint64_t>(d);
  return k.mul(nn, k.inv(dd));
}

template <class F>
std::string render_poly(const Poly<F>& p, const VarSet& vars) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto& t : p.terms) {
    std::string cs = F::to_string(t.c);
    bool neg = !cs.empty() && cs[0] == '-';
    std::string mag = neg ? cs.substr(1) : cs;
    if (first) {
      if (neg) out << "-";
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    bool coef_emitted = false;
    if (mag != "1" || t.m.is_one()) {
      out << mag;
      coef_emitted = true;
    }
    for (std::size_t i = 0; i < t.m.e.size(); ++i) {
      if (!t.m.e[i]) continue;
      if (coef_emitted) out << "*";
      out << vars[i];
      if (t.m.e[i] > 1) out << "^" << t.m.e[i];
      coef_emitted = true;
    }
  }
  return out.str();
}

// Rational polynomial with integer coefficients reduced mod ell.
inline PolyF specialize_mod(const PolyQ& f, const PrimeField& k) {
  PolyF r(k, f.nv);
  for (auto& t : f.terms) {
    BigInt num = boost::multiprecision::numerator(t.c);
    BigInt den = boost::multiprecision::denominator(t.c);
    auto c = field_from_rat<PrimeField>(k, num, den);
    if (c != 0) r.terms.push_back({t.m, c});
  }
  return r;
}

// Clears denominators and content; leading grevlex coefficient positive.
inline PolyQ primitive_part(const PolyQ& f) {
  if (f.is_zero()) return f;
  BigInt den_lcm = 1;
  for (auto& t : f.terms) {
    BigInt d = boost::multiprecision::denominator(t.c);
    den_lcm = boost::multiprecision::lcm(den_lcm, d);
  }
  BigInt content = 0;
  for (auto& t : f.terms) {
    BigInt n = boost::multiprecision::numerator(t.c) * den_lcm /
               boost::multiprecision::denominator(t.c);
    content = boost::multiprecision::gcd(content, n);
  }
  if (content == 0) return f;
  BigRat scale(den_lcm, content);
  PolyQ r = f.scaled(scale);
  if (boost::multiprecision::numerator(r.terms.front().c) < 0)
    r = -r;
  return r;
}

inline bool has_integer_coefficients(const PolyQ& f) {
  for (auto& t : f.terms)
    if (boost::multiprecision::denominator(t.c) != 1) return false;
  return true;
}

}  // namespace locmod
