#pragma once

// Exact arithmetic over arbitrary-precision integers and rationals, plus the
// elementary number theory everything else builds on: factorization, p-adic
// valuations, Legendre symbols, square classes, two-adic unit characters and
// sums of two squares.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qsd {

using Int = mpz_class;
using Rat = mpq_class;

// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A numeric argument violated a precondition (zero where nonzero is required,
// composite where a prime is required, and so on).
class DomainError : public Error {
 public:
  using Error::Error;
};

// factorize() gave up on a cofactor within its iteration budget.
class FactorizationError : public Error {
 public:
  using Error::Error;
};

// Canonical rational from numerator and denominator. mpq_class built from a
// raw pair does not reduce to lowest terms on its own; this always does.
Rat rat(const Int& num, const Int& den);
Rat rat(const Int& num);

// Parses "123", "-4/9" and the like into a canonical rational.
Rat parse_rat(const std::string& text);

std::string to_string(const Int& x);
std::string to_string(const Rat& x);

// Sign and sorted prime powers; unit() for |n| = 1. value() multiplies back.
struct Factorization {
  int sign = 1;                                   // +1 or -1
  std::vector<std::pair<Int, unsigned>> primes;   // ascending, exponents >= 1

  Int value() const;
};

// Deterministic Miller-Rabin. Uses the 13-witness set proved complete below
// 3.3e24 and a fixed 64-prime witness set beyond that.
bool is_probable_prime(const Int& n);

// Trial division up to 1e6, then Brent-cycle Pollard rho with a fixed budget.
// Throws DomainError on 0 and FactorizationError if the budget runs out.
Factorization factorize(const Int& n);

// Multiplicity of the prime p in n; DomainError on n = 0.
unsigned valuation_in(const Int& n, const Int& p);

// p-adic valuation of a nonzero rational (valuation of numerator minus
// valuation of denominator).
long valuation(const Rat& x, const Int& p);

// The class of a nonzero rational modulo nonzero rational squares, stored as
// sign plus positive squarefree integer. Forms a group under multiplication
// without any further factoring.
struct SquareClass {
  int sign = 1;        // +1 or -1
  Int squarefree = 1;  // positive, squarefree

  Int rep() const;     // sign * squarefree, the canonical representative
  bool is_one() const { return sign == 1 && squarefree == 1; }
  SquareClass operator*(const SquareClass& other) const;
  // Class of the k-th power: trivial for even k, unchanged for odd k.
  SquareClass pow(const Int& k) const;
  bool operator==(const SquareClass& other) const = default;
};

SquareClass square_class(const Int& x);
SquareClass square_class(const Rat& x);

// True for 0 and for squares of rationals; false for negatives.
bool is_perfect_square(const Int& x);
bool is_perfect_square(const Rat& x);

// Integer square root of a perfect square; DomainError otherwise.
Int exact_sqrt(const Int& x);
Rat exact_sqrt(const Rat& x);

// Legendre symbol (u/p) for odd prime p and u coprime to p. For a rational
// unit the symbol is evaluated on numerator times denominator.
int legendre(const Int& u, const Int& p);
int legendre(const Rat& u, const Int& p);

// eps(u) = 0 iff u = 1 (mod 4); omega(u) = 0 iff u = +-1 (mod 8). Defined for
// odd u, extended to rational 2-adic units via numerator times denominator.
int eps_mod4(const Rat& u);
int omega_mod8(const Rat& u);

// Whether n >= 0 is a sum of two integer squares; for n > 0 the obstruction,
// when present, is the least prime p = 3 (mod 4) with odd multiplicity.
bool is_sum_two_squares(const Int& n);
std::optional<Int> sum_two_squares_obstruction(const Int& n);

// Floor square root for n >= 0.
Int isqrt(const Int& n);

// Binomial coefficient C(n, 2) reduced mod 2, used in exponent bookkeeping.
int choose2_mod2(const Int& n);

}  // namespace qsd
