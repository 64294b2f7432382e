#pragma once

// Hilbert symbols over the rationals: the local symbol at a finite prime and
// at the real place, the finite places where a symbol can be nontrivial, and
// solvability of a x^2 + b y^2 = z^2 via the product formula.

#include "qsd/arith.hpp"

namespace qsd {

// Local Hilbert symbol (a, b)_p for nonzero rationals a, b and a prime p.
// Computed from the closed form in terms of valuations, Legendre symbols and
// the two-adic unit characters.
int hilbert_symbol(const Rat& a, const Rat& b, const Int& p);

// Symbol at the real place: -1 exactly when both arguments are negative.
int real_symbol(const Rat& a, const Rat& b);

// Sorted primes at which a Hilbert symbol built from the given values can be
// nontrivial: 2 together with every odd prime dividing the squarefree part
// of some value. Numerators and denominators are factored separately.
std::vector<Int> relevant_primes(const std::vector<Rat>& values);

struct Solvability {
  bool solvable = true;
  std::vector<Int> failing;  // primes with symbol -1, ascending
  Int witness() const;       // least failing prime; DomainError when solvable
};

// Whether a x^2 + b y^2 = z^2 has a rational solution besides (0, 0, 0),
// equivalently (a, b)_p = 1 at every place. By the product formula the real
// place is determined by the finite ones, so only those are checked.
Solvability legendre_eq_solvable(const Rat& a, const Rat& b);

// Sum-of-two-squares test routed through Hilbert symbols: n is a sum of two
// squares iff (-1, n)_p = 1 at every finite prime.
bool sum_two_squares_hilbert(const Int& n);

}  // namespace qsd
