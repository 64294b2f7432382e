#include "qsd/hilbert.hpp"

#include <set>

namespace qsd {

namespace {

// Splits a nonzero rational as p^val * unit with unit a p-adic unit.
struct PAdicSplit {
  long val;
  Rat unit;
};

PAdicSplit split(const Rat& x, const Int& p) {
  const long v = valuation(x, p);
  Int pe;
  mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(v < 0 ? -v : v));
  Rat unit = v >= 0 ? Rat(x / pe) : Rat(x * pe);
  unit.canonicalize();
  return {v, unit};
}

}  // namespace

int hilbert_symbol(const Rat& a, const Rat& b, const Int& p) {
  if (a == 0 || b == 0) throw DomainError("hilbert_symbol: zero argument");
  if (p < 2 || !is_probable_prime(p)) {
    throw DomainError("hilbert_symbol: modulus " + to_string(p) + " is not a prime");
  }
  const auto [alpha, u] = split(a, p);
  const auto [beta, v] = split(b, p);
  if (p == 2) {
    const long e = eps_mod4(u) * eps_mod4(v) + alpha * omega_mod8(v) + beta * omega_mod8(u);
    return e % 2 == 0 ? 1 : -1;
  }
  int s = 1;
  const bool p_mod4_is3 = mpz_fdiv_ui(p.get_mpz_t(), 4) == 3;
  if (p_mod4_is3 && (alpha % 2 != 0) && (beta % 2 != 0)) s = -s;
  if (beta % 2 != 0) s *= legendre(u, p);
  if (alpha % 2 != 0) s *= legendre(v, p);
  return s;
}

int real_symbol(const Rat& a, const Rat& b) {
  if (a == 0 || b == 0) throw DomainError("real_symbol: zero argument");
  return (a < 0 && b < 0) ? -1 : 1;
}

std::vector<Int> relevant_primes(const std::vector<Rat>& values) {
  std::set<Int> primes{Int(2)};
  for (const Rat& value : values) {
    if (value == 0) throw DomainError("relevant_primes: zero value");
    std::map<Int, unsigned> parity;
    for (const auto& [p, e] : factorize(Int(value.get_num())).primes) parity[p] += e;
    for (const auto& [p, e] : factorize(Int(value.get_den())).primes) parity[p] += e;
    for (const auto& [p, e] : parity) {
      if (e % 2 == 1 && p != 2) primes.insert(p);
    }
  }
  return std::vector<Int>(primes.begin(), primes.end());
}

Int Solvability::witness() const {
  if (solvable || failing.empty()) {
    throw DomainError("Solvability::witness: no failing prime");
  }
  return failing.front();
}

Solvability legendre_eq_solvable(const Rat& a, const Rat& b) {
  if (a == 0 || b == 0) throw DomainError("legendre_eq_solvable: zero coefficient");
  Solvability result;
  for (const Int& p : relevant_primes({a, b})) {
    if (hilbert_symbol(a, b, p) == -1) result.failing.push_back(p);
  }
  result.solvable = result.failing.empty();
  return result;
}

bool sum_two_squares_hilbert(const Int& n) {
  if (n < 0) throw DomainError("sum_two_squares_hilbert: negative argument " + to_string(n));
  if (n == 0) return true;
  const Rat nr(n);
  for (const Int& p : relevant_primes({nr})) {
    if (hilbert_symbol(Rat(-1), nr, p) == -1) return false;
  }
  return true;
}

}  // namespace qsd
