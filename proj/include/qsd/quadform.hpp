#pragma once

// Exact invariants of nonsingular rational symmetric forms: congruence
// diagonalization, determinants, Hasse invariants (with a closed form for
// a I + b J), Schur complements, and the full rational equivalence data.

#include "qsd/hilbert.hpp"

namespace qsd {

class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

// Dense symmetric matrix over the rationals. set() writes both mirror
// entries, so symmetry holds by construction.
class SymMatrix {
 public:
  explicit SymMatrix(int n);
  // Validates squareness and symmetry of the given rows.
  static SymMatrix from_rows(const std::vector<std::vector<Rat>>& rows);

  int order() const { return n_; }
  const Rat& at(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }
  void set(int i, int j, const Rat& value);
  // Principal submatrix on a sorted duplicate-free index set.
  SymMatrix principal(const std::vector<int>& idx) const;

 private:
  int n_ = 0;
  std::vector<Rat> e_;
};

// Exact determinant via Bareiss elimination on a common-denominator lift.
Rat det(const SymMatrix& a);

// Diagonal of some congruent diagonal form S^T A S, computed by symmetric
// elimination. Throws SingularMatrixError on singular input.
std::vector<Rat> diagonalize(const SymMatrix& a);

// Hasse invariant of a diagonal form at p: product of (d_i, d_j)_p, i < j.
int hasse_from_diagonal(const std::vector<Rat>& diag, const Int& p);

// Hasse invariant of a nonsingular symmetric matrix at p.
int hasse_invariant(const SymMatrix& a, const Int& p);

// Determinant and Hasse invariant of the n x n form a I + b J in closed
// form, without building the matrix.
Rat det_aIbJ(const Rat& a, const Rat& b, const Int& n);
int hasse_aIbJ(const Rat& a, const Rat& b, const Int& n, const Int& p);

// Schur complement A/B for B = A[S, S] nonsingular; the result lives on the
// complementary index set.
SymMatrix schur_complement(const SymMatrix& a, const std::vector<int>& s);

// Hasse invariant of A from a nonsingular section B and the complement A/B:
// hasse(A) = hasse(B) * hasse(A/B) * (det B, det A/B)_p.
int hasse_combine(int hasse_b, int hasse_schur, const Rat& det_b, const Rat& det_schur,
                  const Int& p);

// Complete rational equivalence data of a nonsingular symmetric form. Hasse
// invariants are recorded at the relevant primes of the diagonalization and
// are +1 everywhere else.
struct EquivInvariants {
  int rank = 0;
  int positive = 0;
  int negative = 0;
  SquareClass discriminant;
  std::map<Int, int> hasse;

  int hasse_at(const Int& p) const;
  bool operator==(const EquivInvariants& other) const;
};

EquivInvariants equivalence_invariants(const SymMatrix& a);

// Greedy leftmost choice of `count` linearly independent columns of a
// rectangular matrix given by rows; throws DomainError if the rank is
// insufficient.
std::vector<int> select_independent_columns(const std::vector<std::vector<Rat>>& rows, int count);
std::vector<int> select_independent_columns(const SymMatrix& m, int count);

}  // namespace qsd
