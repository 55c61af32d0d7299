#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace locmod {

// Exponent vector indexed by the ambient variable list. The length always
// equals the ambient variable count.
struct Monomial {
  std::vector<std::uint32_t> e;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : e(std::move(exps)) {}

  std::size_t nvars() const { return e.size(); }
  std::uint64_t degree() const {
    return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
  }
  bool is_one() const {
    return std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
  }

  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator!=(const Monomial& o) const { return e != o.e; }

  Monomial operator*(const Monomial& o) const {
    check(o);
    Monomial r(*this);
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
    return r;
  }

  bool divides(const Monomial& o) const {
    check(o);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }

  // this / o, requires o.divides(*this)
  Monomial operator/(const Monomial& o) const {
    check(o);
    Monomial r(*this);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (o.e[i] > r.e[i]) throw std::domain_error("inexact monomial division");
      r.e[i] -= o.e[i];
    }
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    a.check(b);
    Monomial r(a);
    for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(r.e[i], b.e[i]);
    return r;
  }

  static Monomial gcd(const Monomial& a, const Monomial& b) {
    a.check(b);
    Monomial r(a);
    for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::min(r.e[i], b.e[i]);
    return r;
  }

  bool coprime(const Monomial& o) const {
    check(o);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] && o.e[i]) return false;
    return true;
  }

 private:
  void check(const Monomial& o) const {
    if (e.size() != o.e.size())
      throw std::invalid_argument("monomial length mismatch");
  }
};

// Total, multiplicative well-orders on monomials. Block orders put the
// elimination variables in a dominant first block (grevlex within blocks).
struct MonOrder {
  enum Kind { GrevLex, Lex, Block } kind = GrevLex;
  std::vector<char> elim;  // Block: mask over variables, 1 = elimination block

  static MonOrder grevlex() { return MonOrder{GrevLex, {}}; }
  static MonOrder lex() { return MonOrder{Lex, {}}; }
  static MonOrder block(std::vector<char> mask) { return MonOrder{Block, std::move(mask)}; }
  static MonOrder block(const std::vector<std::size_t>& elim_vars, std::size_t nvars) {
    std::vector<char> mask(nvars, 0);
    for (auto v : elim_vars) mask.at(v) = 1;
    return block(std::move(mask));
  }
};

namespace detail {

inline int cmp_grevlex_masked(const Monomial& a, const Monomial& b,
                              const std::vector<char>* mask, char want) {
  std::uint64_t da = 0, db = 0;
  const std::size_t n = a.e.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (mask && (*mask)[i] != want) continue;
    da += a.e[i];
    db += b.e[i];
  }
  if (da != db) return da < db ? -1 : 1;
  // reverse lexicographic tie-break: last variable with differing exponent,
  // larger exponent there means smaller monomial
  for (std::size_t i = n; i-- > 0;) {
    if (mask && (*mask)[i] != want) continue;
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace detail

// Returns -1, 0, 1 for a < b, a == b, a > b under ord.
inline int mon_compare(const Monomial& a, const Monomial& b, const MonOrder& ord) {
  if (a.e.size() != b.e.size())
    throw std::invalid_argument("monomial length mismatch");
  switch (ord.kind) {
    case MonOrder::GrevLex:
      return detail::cmp_grevlex_masked(a, b, nullptr, 0);
    case MonOrder::Lex:
      for (std::size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
      return 0;
    case MonOrder::Block: {
      if (ord.elim.size() != a.e.size())
        throw std::invalid_argument("block mask length mismatch");
      if (int c = detail::cmp_grevlex_masked(a, b, &ord.elim, 1)) return c;
      return detail::cmp_grevlex_masked(a, b, &ord.elim, 0);
    }
  }
  return 0;
}

struct MonLess {
  MonOrder ord;
  bool operator()(const Monomial& a, const Monomial& b) const {
    return mon_compare(a, b, ord) < 0;
  }
};

struct MonGreater {
  MonOrder ord;
  bool operator()(const Monomial& a, const Monomial& b) const {
    return mon_compare(a, b, ord) > 0;
  }
};

}  // namespace locmod
