#pragma once

// Design parameter derivation and the feasibility machinery: the five exact
// parametric conditions, the p-adic nonexistence tests, parity-dispatched
// family screens, family enumerators, the small-parameter table, and the
// classical symmetric-design tests.

#include "qsd/srg.hpp"

namespace qsd {

class FeasibilityError : public Error {
 public:
  using Error::Error;
};

// The seven parameters of a quasi-symmetric 2-design with two intersection
// numbers lambda1 < lambda2.
struct DesignParams {
  Int b, v, r, k, lambda, lambda1, lambda2;

  Int mu() const { return lambda2 - lambda1; }  // defect
  Int order() const { return r - lambda; }      // nu

  bool operator==(const DesignParams&) const = default;
};

std::string to_string(const DesignParams& d);

// Complementary design parameters on the same point set and block graph.
DesignParams complement(const DesignParams& d);

struct ConditionResult {
  std::string label;
  bool passed = true;
  std::string witness;
};

// Aggregated verdict: feasible means every evaluated condition passed.
// params is populated exactly when the parametric conditions all hold.
struct FeasibilityReport {
  bool feasible = false;
  std::vector<ConditionResult> conditions;
  std::optional<std::pair<DesignParams, DesignParams>> params;

  std::vector<std::string> failed_labels() const;
  void merge(const FeasibilityReport& other);
};

// The five exact parametric conditions (labels "2.3(a)" through "2.3(e)")
// for a quasi-symmetric design with the given block-graph spectrum and
// defect mu; on success the report carries the derived parameter pair.
FeasibilityReport feasibility(const SpectralParams& sp, const Int& mu);

// Both members of the complementary pair, canonical (k <= v/2) first.
// Throws FeasibilityError naming the failed condition when infeasible.
std::pair<DesignParams, DesignParams> derive_params(const SpectralParams& sp, const Int& mu);

// The p-adic main test ("4.2(a)" and "4.2(b) at p") of the spectrum and
// defect against a graph's invariants.
FeasibilityReport main_test(const SpectralParams& sp, const GraphInvariants& inv, const Int& mu);

// Parity-dispatched screens equivalent to the main test on their families;
// only the clauses applicable to the parity class appear in the report.
FeasibilityReport screen_multipartite(const Int& m, const Int& n, const Int& mu);
FeasibilityReport screen_cotriangular(const Int& n, const Int& mu);
FeasibilityReport screen_symplectic(const Int& d, const Int& mu);
FeasibilityReport screen_steiner(const Int& n, const Int& m, const Int& mu);

enum class TriState { Pass, Reject, NotApplicable };

struct SymmetricResult {
  TriState verdict = TriState::NotApplicable;
  std::string witness;
};

// Square test for symmetric 2-designs on an even number of points.
SymmetricResult schutzenberger(const Int& v, const Int& nu);
// Rational solvability test on an odd number of points.
SymmetricResult chowla_ryser(const Int& v, const Int& lambda, const Int& nu);

// Ordered quadruples parameterizing designs with complete multipartite
// block graph: l * lstar = alpha (alpha - 1) and alpha | (l + lstar)^2 t.
struct Quadruple {
  Int alpha, l, lstar, t;
  bool operator==(const Quadruple&) const = default;
};

bool quadruple_admissible(const Quadruple& q);

// Parameter set of the member associated with l (its complement swaps l and
// lstar). Throws DomainError on inadmissible quadruples.
DesignParams multipartite_params(const Quadruple& q);
Int multipartite_side(const Quadruple& q);  // n = l + lstar + 2 alpha
Int multipartite_m(const Quadruple& q);     // m = (t/alpha) n^2 + n + 1
Int multipartite_mu(const Quadruple& q);    // mu = (n-1) t + alpha

struct MultipartiteEntry {
  Quadruple quad;                               // canonical: l <= lstar
  Int n, m, mu;
  std::pair<DesignParams, DesignParams> params; // canonical member first
  bool conjectural_flag;                        // set when alpha does not divide t
};

// Every admissible quadruple with l <= lstar within the bounds, in
// lexicographic (alpha, l, lstar, t) order. The flag marks quadruples that
// violate the conjectured divisibility alpha | t; the conjecture is open, so
// flagged entries are fully valid output.
std::vector<MultipartiteEntry> enum_multipartite(const Int& alpha_max, const Int& sum_max,
                                                 const Int& t_max);

struct CoTriangularEntry {
  Int l, lstar, n;
  DesignParams params;  // the member whose replication is (n/2)(l + 2 mu)
};

// For mu = 1 the pairs (0, k) and (k, 0) up to the bound; for mu >= 2 all
// ordered factorizations of 4 mu (mu - 1), lexicographically by (l, lstar).
std::vector<CoTriangularEntry> enum_cotriangular(const Int& mu, const Int& bound);

struct SymplecticCheck {
  bool congruence_ok = false;
  bool square_ok = false;
  Rat mu;  // (q^d - q + 2)/8, exact
  std::vector<ConditionResult> conditions;

  bool feasible() const { return congruence_ok && square_ok; }
};

// Exact evaluation of the two feasibility conditions for symplectic-type
// parameters with q > 2; q = 2 is redirected to the Steiner screen.
SymplecticCheck check_symplectic(const Int& q, const Int& d);

struct SteinerEntry {
  Int m;
  std::pair<DesignParams, DesignParams> params;
};

// All m up to the bound such that (Steiner(n, m) spectrum, mu) is feasible.
// For mu >= 2 the set is finite via divisor pairs of n^2 mu (mu - 1); n = 2
// with mu >= 2 is empty by the triangular exclusion rule.
std::vector<SteinerEntry> enum_steiner(const Int& n, const Int& mu, const Int& m_bound);

struct TableRow {
  int number = 0;
  Int n, m, mu;
  DesignParams params;  // canonical member
  bool rejected = false;
  std::string reject_label;
};

// The table of small feasible parameter sets with Steiner block graph and
// mu >= 2, with the p-adic screen verdict per row.
std::vector<TableRow> feasible_table(const Int& n_max, const Int& mu_max, const Int& v_cap);

// The affine-type quadruple (1, 0, n-2, t).
Quadruple affine_quadruple(const Int& n, const Int& t);

// Parameters of the composition of an affine-type design (given by n and t)
// with a symmetric 2-design on n points given as (n, k2, lambda2); the
// result is the quadruple (k2 - lambda2, lambda2, n - 2 k2 + lambda2,
// (k2 - lambda2) t) member. Throws DomainError on incompatible inputs.
DesignParams compose_params(const Int& n, const Int& t, const Int& sym_v, const Int& sym_k,
                            const Int& sym_lambda);

}  // namespace qsd
