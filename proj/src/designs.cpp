#include "qsd/designs.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace qsd {

namespace {

bool divides(const Int& d, const Int& n) {
  return d != 0 && mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t());
}

Int exact_div(const Int& num, const Int& den, const char* who) {
  if (!divides(den, num)) {
    throw FeasibilityError(std::string(who) + ": expected " + to_string(den) + " to divide " +
                           to_string(num));
  }
  return num / den;
}

Int rat_to_int(const Rat& x, const char* who) {
  if (x.get_den() != 1) {
    throw FeasibilityError(std::string(who) + ": value " + to_string(x) + " is not an integer");
  }
  return x.get_num();
}

int symbol_if(int parity, const Rat& a, const Rat& b, const Int& p) {
  return parity % 2 != 0 ? hilbert_symbol(a, b, p) : 1;
}

std::string join_primes(const std::vector<Int>& primes) {
  std::string out;
  for (const Int& p : primes) {
    if (!out.empty()) out += ", ";
    out += to_string(p);
  }
  return out;
}

void add_condition(FeasibilityReport& rep, std::string label, bool ok, std::string witness) {
  rep.conditions.push_back({std::move(label), ok, std::move(witness)});
  if (!ok) rep.feasible = false;
}

// Clause helpers shared by the family screens.

void clause_square(FeasibilityReport& rep, const std::string& label, const Int& value,
                   const std::string& name) {
  const bool ok = is_perfect_square(value);
  std::string w = name + " = " + to_string(value);
  w += ok ? " = " + to_string(exact_sqrt(value)) + "^2" : " is not a perfect square";
  add_condition(rep, label, ok, std::move(w));
}

void clause_sum_two_squares(FeasibilityReport& rep, const std::string& label, const Int& value,
                            const std::string& name) {
  const auto bad = sum_two_squares_obstruction(value);
  std::string w = name + " = " + to_string(value);
  w += bad ? " is not a sum of two squares (prime " + to_string(*bad) + " has odd multiplicity)"
           : " is a sum of two squares";
  add_condition(rep, label, !bad.has_value(), std::move(w));
}

void clause_solvable(FeasibilityReport& rep, const std::string& label, const Rat& a,
                     const Rat& b) {
  const Solvability s = legendre_eq_solvable(a, b);
  const std::string eq =
      "(" + to_string(a) + ") x^2 + (" + to_string(b) + ") y^2 = z^2";
  if (s.solvable) {
    add_condition(rep, label, true, eq + " is solvable");
  } else {
    add_condition(rep, label + " at p=" + to_string(s.witness()), false,
                  eq + " fails at p in {" + join_primes(s.failing) + "}");
  }
}

}  // namespace

std::string to_string(const DesignParams& d) {
  return "b=" + to_string(d.b) + " v=" + to_string(d.v) + " r=" + to_string(d.r) +
         " k=" + to_string(d.k) + " lambda=" + to_string(d.lambda) +
         " lambda1=" + to_string(d.lambda1) + " lambda2=" + to_string(d.lambda2);
}

DesignParams complement(const DesignParams& d) {
  DesignParams c;
  c.b = d.b;
  c.v = d.v;
  c.r = d.b - d.r;
  c.k = d.v - d.k;
  c.lambda = d.b - 2 * d.r + d.lambda;
  c.lambda1 = d.lambda1 + d.v - 2 * d.k;
  c.lambda2 = d.lambda2 + d.v - 2 * d.k;
  return c;
}

std::vector<std::string> FeasibilityReport::failed_labels() const {
  std::vector<std::string> out;
  for (const auto& c : conditions) {
    if (!c.passed) out.push_back(c.label);
  }
  return out;
}

void FeasibilityReport::merge(const FeasibilityReport& other) {
  feasible = feasible && other.feasible;
  conditions.insert(conditions.end(), other.conditions.begin(), other.conditions.end());
  if (!params) params = other.params;
}

namespace {

// Builds both members once the parametric conditions are known to hold.
std::pair<DesignParams, DesignParams> build_pair(const SpectralParams& sp, const Int& mu) {
  const Int b = sp.vertices();
  const Int v = sp.f + 1;
  const Int nu = (sp.rho - sp.sigma) * mu;
  const Int root_sum = b - 2 * nu;
  const Rat disc = Rat(root_sum) * Rat(root_sum) - 4 * (Rat(nu) * Rat(nu) - rat(nu * b, v));
  const Rat sqrt_disc = exact_sqrt(disc);

  const auto member = [&](const Rat& lambda_r) {
    DesignParams d;
    d.b = b;
    d.v = v;
    d.lambda = rat_to_int(lambda_r, "derive_params lambda");
    d.r = d.lambda + nu;
    d.lambda1 = exact_div(v * (d.lambda + sp.rho * mu) + sp.g * sp.sigma * mu, b,
                          "derive_params lambda1");
    d.lambda2 = d.lambda1 + mu;
    d.k = d.lambda1 - sp.sigma * mu;
    if (d.lambda < 0 || d.lambda1 < 0 || d.r < 1 || d.k < 1) {
      throw FeasibilityError("derive_params: negative parameter in " + to_string(d));
    }
    if (d.b * d.k != d.r * d.v || d.r * (d.k - 1) != d.lambda * (d.v - 1)) {
      throw FeasibilityError("derive_params: design identities fail for " + to_string(d));
    }
    return d;
  };

  DesignParams small = member((Rat(root_sum) - sqrt_disc) / 2);
  DesignParams large = member((Rat(root_sum) + sqrt_disc) / 2);
  // Canonical member first: k <= v/2, ties broken by smaller lambda1.
  if (2 * small.k > small.v ||
      (2 * small.k == small.v && small.lambda1 > large.lambda1)) {
    std::swap(small, large);
  }
  return {small, large};
}

}  // namespace

FeasibilityReport feasibility(const SpectralParams& sp, const Int& mu) {
  if (mu < 1) throw DomainError("feasibility: mu must be positive");
  FeasibilityReport rep;
  rep.feasible = true;

  add_condition(rep, "2.3(a)", true,
                "integral spectrum: rho = " + to_string(sp.rho) +
                    ", sigma = " + to_string(sp.sigma));

  const Int b = sp.vertices();
  const Int v = sp.f + 1;
  const Rat lower = rat(-v * (sp.f * sp.rho + (sp.g + 1) * sp.sigma), b * sp.sigma * sp.sigma);
  const Rat upper = rat(-v, 2 * sp.sigma);
  const bool okb = Rat(mu) >= lower && Rat(mu) <= upper;
  add_condition(rep, "2.3(b)", okb,
                "mu = " + to_string(mu) + (okb ? " inside " : " outside ") + "[" +
                    to_string(lower) + ", " + to_string(upper) + "]");

  const Int cnum = sp.g * (sp.rho - sp.sigma) * mu;
  const bool okc = divides(v, cnum);
  add_condition(rep, "2.3(c)", okc,
                "f+1 = " + to_string(v) + (okc ? " divides " : " does not divide ") +
                    "g(rho-sigma)mu = " + to_string(cnum));

  const Int dnum = sp.f * cnum;
  const bool okd = divides(b, dnum);
  add_condition(rep, "2.3(d)", okd,
                "f+g+1 = " + to_string(b) + (okd ? " divides " : " does not divide ") +
                    "fg(rho-sigma)mu = " + to_string(dnum));

  const Rat disc = Rat(b) * (Rat(b) - rat(4 * sp.f * (sp.rho - sp.sigma) * mu, v));
  const bool oke = is_perfect_square(disc);
  add_condition(rep, "2.3(e)", oke,
                "discriminant " + to_string(disc) +
                    (oke ? " is a perfect square" : " is not a perfect square"));

  if (rep.feasible) rep.params = build_pair(sp, mu);
  return rep;
}

std::pair<DesignParams, DesignParams> derive_params(const SpectralParams& sp, const Int& mu) {
  const FeasibilityReport rep = feasibility(sp, mu);
  if (!rep.feasible) {
    std::string labels;
    for (const std::string& l : rep.failed_labels()) {
      if (!labels.empty()) labels += ", ";
      labels += l;
    }
    throw FeasibilityError("derive_params: infeasible, failed condition(s) " + labels);
  }
  return *rep.params;
}

FeasibilityReport main_test(const SpectralParams& sp, const GraphInvariants& inv, const Int& mu) {
  if (mu < 1) throw DomainError("main_test: mu must be positive");
  FeasibilityReport rep;
  rep.feasible = true;

  const Int b = sp.vertices();
  const Int v = sp.f + 1;
  const Int nu = (sp.rho - sp.sigma) * mu;

  const SquareClass lhs = square_class(nu).pow(sp.f);
  const SquareClass rhs = square_class(Int(v * b)) * inv.delta;
  const bool oka = lhs == rhs;
  add_condition(rep, "4.2(a)", oka,
                "nu^f class " + to_string(lhs.rep()) + (oka ? " = " : " != ") +
                    "(f+1)(f+g+1)delta class " + to_string(rhs.rep()));

  std::set<Int> prime_set;
  for (const Int& p :
       relevant_primes({Rat(nu), Rat(v), Rat(b), Rat(inv.delta.rep()), Rat(-1)})) {
    prime_set.insert(p);
  }
  for (const auto& [p, s] : inv.hasse) prime_set.insert(p);
  const std::vector<Int> primes(prime_set.begin(), prime_set.end());

  const Int neg_v = -v;
  const Int neg_vb = -(v * b);
  std::vector<Int> bad;
  for (const Int& p : primes) {
    int lhs_s = symbol_if(choose2_mod2(sp.f), Rat(-1), Rat(nu), p);
    lhs_s *= hilbert_symbol(Rat(nu), Rat(v), p);
    int rhs_s = hilbert_symbol(Rat(b), Rat(neg_v), p);
    rhs_s *= hilbert_symbol(Rat(neg_vb), Rat(inv.delta.rep()), p);
    rhs_s *= inv.eps(p);
    if (lhs_s != rhs_s) bad.push_back(p);
  }
  if (bad.empty()) {
    add_condition(rep, "4.2(b)", true, "local conditions hold at p in {" + join_primes(primes) + "}");
  } else {
    for (const Int& p : bad) {
      add_condition(rep, "4.2(b) at p=" + to_string(p), false,
                    "local obstruction at p = " + to_string(p));
    }
  }
  return rep;
}

FeasibilityReport screen_multipartite(const Int& m, const Int& n, const Int& mu) {
  family_spectral(Multipartite{m, n});  // validate m, n
  if (mu < 1) throw DomainError("screen_multipartite: mu must be positive");
  FeasibilityReport rep;
  rep.feasible = true;
  const Int q = m * n - m + 1;
  const unsigned long m4 = mpz_fdiv_ui(m.get_mpz_t(), 4);
  const unsigned long n4 = mpz_fdiv_ui(n.get_mpz_t(), 4);
  if (m4 % 2 == 0) {
    clause_square(rep, "Cor 4.3(a1)", q, "mn-m+1");
    if (m4 == 2) clause_sum_two_squares(rep, "Cor 4.3(b1)", n, "n");
  } else if (n4 % 2 == 0) {
    clause_square(rep, "Cor 4.3(a2)", q * mu, "(mn-m+1)mu");
    if (m4 == 3 && n4 == 2) {
      clause_sum_two_squares(rep, "Cor 4.3(b2)", n, "n");
    } else if (m4 == 3 && n4 == 0) {
      clause_sum_two_squares(rep, "Cor 4.3(b3)", q, "mn-m+1");
    } else if (m4 == 1 && n4 == 2) {
      clause_sum_two_squares(rep, "Cor 4.3(b4)", n * q, "n(mn-m+1)");
    }
  } else {
    clause_square(rep, "Cor 4.3(a3)", n * q, "n(mn-m+1)");
    const Int neg_n = -n;
    const Int neg_mu = -mu;
    if (m4 != n4) {
      clause_solvable(rep, "Cor 4.3(b5)", Rat(mu), Rat(n4 == 3 ? neg_n : n));
    } else if (m4 == 1) {
      clause_solvable(rep, "Cor 4.3(b6)", Rat(n), Rat(neg_mu));
    } else {
      // Both 3 mod 4: (-mu, -n)_p must be -1 exactly at p = 2.
      std::vector<Int> bad;
      const std::vector<Int> primes = relevant_primes({Rat(mu), Rat(n)});
      for (const Int& p : primes) {
        const int want = p == 2 ? -1 : 1;
        if (hilbert_symbol(Rat(neg_mu), Rat(neg_n), p) != want) bad.push_back(p);
      }
      if (bad.empty()) {
        add_condition(rep, "Cor 4.3(b7)", true,
                      "(-mu, -n)_p = -1 exactly at p = 2; checked p in {" + join_primes(primes) + "}");
      } else {
        add_condition(rep, "Cor 4.3(b7) at p=" + to_string(bad.front()), false,
                      "(-mu, -n)_p wrong at p in {" + join_primes(bad) + "}");
      }
    }
  }
  return rep;
}

FeasibilityReport screen_cotriangular(const Int& n, const Int& mu) {
  family_spectral(CoTriangular{n});  // validate n
  if (mu < 1) throw DomainError("screen_cotriangular: mu must be positive");
  FeasibilityReport rep;
  rep.feasible = true;
  const unsigned long n8 = mpz_fdiv_ui(n.get_mpz_t(), 8);
  const Int pairs = (n - 1) * (n - 2) / 2;  // C(n-1, 2)
  switch (n8 % 4) {
    case 1:
      clause_square(rep, "Cor 4.5(a1)", mu, "mu");
      clause_solvable(rep, "Cor 4.5(b2)", Rat(n - 2), Rat(n8 == 5 ? -2 : 2));
      break;
    case 2:
      clause_square(rep, "Cor 4.5(a2)", (n - 2) * mu, "(n-2)mu");
      clause_sum_two_squares(rep, "Cor 4.5(b3)", n - 1, "n-1");
      break;
    case 3: {
      clause_square(rep, "Cor 4.5(a3)", n - 2, "n-2");
      const Int neg_pairs = -pairs;
      clause_solvable(rep, "Cor 4.5(b4)", Rat(mu), Rat(n8 == 7 ? neg_pairs : pairs));
      break;
    }
    default: {
      const int sign = n8 == 4 ? -1 : 1;
      const Int signed_pairs = sign * pairs;
      const Int n_minus_2 = n - 2;
      std::vector<Int> bad;
      const std::vector<Int> primes =
          relevant_primes({Rat(mu), Rat(pairs), Rat(n_minus_2), Rat(2)});
      for (const Int& p : primes) {
        if (hilbert_symbol(Rat(mu), Rat(signed_pairs), p) !=
            hilbert_symbol(Rat(n_minus_2), Rat(sign * 2), p)) {
          bad.push_back(p);
        }
      }
      if (bad.empty()) {
        add_condition(rep, "Cor 4.5(b1)", true,
                      "matching local symbols at p in {" + join_primes(primes) + "}");
      } else {
        add_condition(rep, "Cor 4.5(b1) at p=" + to_string(bad.front()), false,
                      "local symbols differ at p in {" + join_primes(bad) + "}");
      }
      break;
    }
  }
  return rep;
}

FeasibilityReport screen_symplectic(const Int& d, const Int& mu) {
  if (d < 2) throw DomainError("screen_symplectic: need d >= 2");
  if (mu < 1) throw DomainError("screen_symplectic: mu must be positive");
  FeasibilityReport rep;
  rep.feasible = true;
  Int pw;
  mpz_pow_ui(pw.get_mpz_t(), Int(2).get_mpz_t(), mpz_get_ui(d.get_mpz_t()));
  clause_square(rep, "Cor 4.6", pw * mu, "nu = 2^d mu");
  return rep;
}

FeasibilityReport screen_steiner(const Int& n, const Int& m, const Int& mu) {
  family_spectral(Steiner{n, m});  // validate n, m
  if (mu < 1) throw DomainError("screen_steiner: mu must be positive");
  FeasibilityReport rep;
  rep.feasible = true;
  const Int w = m * n - m;
  if (mpz_odd_p(m.get_mpz_t()) && mpz_even_p(n.get_mpz_t())) {
    clause_square(rep, "Cor 4.7(a)", mu, "mu");
  }
  const Int w1 = w + 1;
  const Int neg_w1 = -w1;
  clause_solvable(rep, "Cor 4.7(b)", Rat(mu), Rat(choose2_mod2(w) == 1 ? neg_w1 : w1));
  return rep;
}

SymmetricResult schutzenberger(const Int& v, const Int& nu) {
  if (v < 2 || nu < 1) throw DomainError("schutzenberger: need v >= 2 and nu >= 1");
  if (mpz_odd_p(v.get_mpz_t())) {
    return {TriState::NotApplicable, "v = " + to_string(v) + " is odd"};
  }
  if (is_perfect_square(nu)) {
    return {TriState::Pass, "nu = " + to_string(nu) + " = " + to_string(exact_sqrt(nu)) + "^2"};
  }
  return {TriState::Reject, "v even but nu = " + to_string(nu) + " is not a perfect square"};
}

SymmetricResult chowla_ryser(const Int& v, const Int& lambda, const Int& nu) {
  if (v < 2 || nu < 1 || lambda < 1) {
    throw DomainError("chowla_ryser: need v >= 2, lambda >= 1, nu >= 1");
  }
  if (mpz_even_p(v.get_mpz_t())) {
    return {TriState::NotApplicable, "v = " + to_string(v) + " is even"};
  }
  const bool negate = mpz_fdiv_ui(v.get_mpz_t(), 4) == 3;  // (-1)^((v-1)/2)
  const Rat second(negate ? Int(-lambda) : lambda);
  const Solvability s = legendre_eq_solvable(Rat(nu), second);
  const std::string eq = to_string(nu) + " x^2 + (" + to_string(second) + ") y^2 = z^2";
  if (s.solvable) return {TriState::Pass, eq + " is solvable"};
  return {TriState::Reject,
          eq + " fails at p = " + to_string(s.witness()) + " (failing set {" +
              join_primes(s.failing) + "})"};
}

bool quadruple_admissible(const Quadruple& q) {
  return q.alpha >= 1 && q.l >= 0 && q.lstar >= 0 && q.t >= 0 &&
         q.l * q.lstar == q.alpha * (q.alpha - 1) &&
         divides(q.alpha, (q.l + q.lstar) * (q.l + q.lstar) * q.t);
}

Int multipartite_side(const Quadruple& q) { return q.l + q.lstar + 2 * q.alpha; }

Int multipartite_m(const Quadruple& q) {
  const Int n = multipartite_side(q);
  return exact_div(q.t * n * n, q.alpha, "multipartite_m") + n + 1;
}

Int multipartite_mu(const Quadruple& q) { return (multipartite_side(q) - 1) * q.t + q.alpha; }

DesignParams multipartite_params(const Quadruple& q) {
  if (!quadruple_admissible(q)) {
    throw DomainError("multipartite_params: quadruple (" + to_string(q.alpha) + "," +
                      to_string(q.l) + "," + to_string(q.lstar) + "," + to_string(q.t) +
                      ") is not admissible");
  }
  const Int n = multipartite_side(q);
  const Int m = multipartite_m(q);
  const Int mu = multipartite_mu(q);
  // y = (n-1)t/alpha + 1 = mu/alpha may be a non-integral rational; all
  // final parameters come out integral.
  const Rat y = rat(mu, q.alpha);
  DesignParams d;
  d.b = m * n;
  d.v = rat_to_int(Rat(n) * n * y, "multipartite_params v");
  d.r = m * (q.alpha + q.l);
  d.k = rat_to_int(Rat(n) * y * (q.alpha + q.l), "multipartite_params k");
  d.lambda = rat_to_int((rat(q.t * n, q.alpha) + 1) * (q.alpha + q.l) * (q.alpha + q.l) + q.l,
                        "multipartite_params lambda");
  d.lambda1 = rat_to_int(Rat(n) * y * q.l, "multipartite_params lambda1");
  d.lambda2 = rat_to_int(y * (q.alpha + q.l) * (q.alpha + q.l), "multipartite_params lambda2");
  if (d.b * d.k != d.r * d.v || d.r * (d.k - 1) != d.lambda * (d.v - 1) ||
      d.lambda2 - d.lambda1 != mu) {
    throw FeasibilityError("multipartite_params: derived parameters inconsistent for " +
                           to_string(d));
  }
  return d;
}

std::vector<MultipartiteEntry> enum_multipartite(const Int& alpha_max, const Int& sum_max,
                                                 const Int& t_max) {
  if (alpha_max < 1 || sum_max < 0 || t_max < 0) {
    throw DomainError("enum_multipartite: bounds must be positive");
  }
  std::vector<MultipartiteEntry> out;
  for (Int alpha = 1; alpha <= alpha_max; ++alpha) {
    const Int prod = alpha * (alpha - 1);
    std::vector<std::pair<Int, Int>> pairs;
    if (prod == 0) {
      for (Int s = 0; s <= sum_max; ++s) pairs.emplace_back(0, s);
    } else {
      for (Int dvs = 1; dvs * dvs <= prod; ++dvs) {
        if (divides(dvs, prod) && dvs + prod / dvs <= sum_max) {
          pairs.emplace_back(dvs, prod / dvs);
        }
      }
    }
    for (const auto& [l, lstar] : pairs) {
      const Int s2 = (l + lstar) * (l + lstar);
      for (Int t = 0; t <= t_max; ++t) {
        if (!divides(alpha, s2 * t)) continue;
        Quadruple quad{alpha, l, lstar, t};
        MultipartiteEntry entry;
        entry.quad = quad;
        entry.n = multipartite_side(quad);
        entry.m = multipartite_m(quad);
        entry.mu = multipartite_mu(quad);
        DesignParams first = multipartite_params(quad);
        entry.params = {first, complement(first)};
        entry.conjectural_flag = !divides(alpha, t);
        out.push_back(std::move(entry));
      }
    }
  }
  return out;
}

std::vector<CoTriangularEntry> enum_cotriangular(const Int& mu, const Int& bound) {
  if (mu < 1) throw DomainError("enum_cotriangular: mu must be positive");
  if (bound < 0) throw DomainError("enum_cotriangular: negative bound");
  std::vector<std::pair<Int, Int>> pairs;
  if (mu == 1) {
    for (Int k = 0; k <= bound; ++k) pairs.emplace_back(0, k);
    for (Int k = 1; k <= bound; ++k) pairs.emplace_back(k, 0);
  } else {
    const Int prod = 4 * mu * (mu - 1);
    for (Int dvs = 1; dvs <= prod; ++dvs) {
      if (divides(dvs, prod)) pairs.emplace_back(dvs, prod / dvs);
    }
  }
  std::vector<CoTriangularEntry> out;
  for (const auto& [l, lstar] : pairs) {
    CoTriangularEntry e;
    e.l = l;
    e.lstar = lstar;
    e.n = 4 * mu + 1 + l + lstar;
    const Rat half(rat(e.n, 2));
    DesignParams d;
    d.b = e.n * (e.n - 1) / 2;
    d.v = (e.n - 1) * (e.n - 2) / 2;
    d.r = rat_to_int(half * (l + 2 * mu), "enum_cotriangular r");
    d.k = rat_to_int((half - 1) * (l + 2 * mu), "enum_cotriangular k");
    d.lambda = rat_to_int(half * l + 2 * mu, "enum_cotriangular lambda");
    d.lambda1 = rat_to_int((half - 1) * l + mu, "enum_cotriangular lambda1");
    d.lambda2 = rat_to_int((half - 1) * l + 2 * mu, "enum_cotriangular lambda2");
    if (d.b * d.k != d.r * d.v || d.r * (d.k - 1) != d.lambda * (d.v - 1)) {
      throw FeasibilityError("enum_cotriangular: inconsistent parameters for pair (" +
                             to_string(l) + "," + to_string(lstar) + ")");
    }
    e.params = d;
    out.push_back(std::move(e));
  }
  return out;
}

SymplecticCheck check_symplectic(const Int& q, const Int& d) {
  if (q == 2) {
    throw DomainError(
        "check_symplectic: q = 2 reduces to the Steiner block-graph screen; "
        "use the steiner family");
  }
  if (q < 2 || factorize(q).primes.size() != 1) {
    throw DomainError("check_symplectic: q = " + to_string(q) + " is not a prime power");
  }
  if (d < 2) throw DomainError("check_symplectic: need d >= 2");

  Int qd;
  mpz_pow_ui(qd.get_mpz_t(), q.get_mpz_t(), mpz_get_ui(d.get_mpz_t()));
  Int qd1 = qd / q;  // q^(d-1)

  SymplecticCheck chk;
  const Int cong = qd - q;  // q (q^(d-1) - 1)
  chk.congruence_ok = mpz_fdiv_ui(cong.get_mpz_t(), 8) == 6;
  chk.mu = rat(qd - q + 2, 8);
  chk.conditions.push_back(
      {"Cor 2.6 congruence", chk.congruence_ok,
       "q(q^(d-1)-1) = " + to_string(cong) + " = " +
           std::to_string(mpz_fdiv_ui(cong.get_mpz_t(), 8)) + " (mod 8), required 6; mu = " +
           to_string(chk.mu)});

  const Int quot_d = (qd - 1) / (q - 1);
  const Int quot_d1 = (qd1 - 1) / (q - 1);
  const Int val = quot_d * quot_d - qd * quot_d1;
  chk.square_ok = is_perfect_square(val);
  chk.conditions.push_back(
      {"Cor 2.6 square", chk.square_ok,
       "x^2 = " + to_string(val) +
           (chk.square_ok ? " solved by x = " + to_string(exact_sqrt(val))
                          : " has no integer solution")});
  return chk;
}

std::vector<SteinerEntry> enum_steiner(const Int& n, const Int& mu, const Int& m_bound) {
  if (n < 2 || mu < 1) throw DomainError("enum_steiner: need n >= 2 and mu >= 1");
  if (m_bound < 0) throw DomainError("enum_steiner: negative bound");
  std::vector<SteinerEntry> out;
  // Triangular block graphs (n = 2) carry no design with mu >= 2; this is
  // the direct exclusion rule, not a search result.
  if (n == 2 && mu >= 2) return out;

  const auto try_m = [&](const Int& m) {
    if (m <= n || m > m_bound) return;
    if (!divides(n, m * (m - 1))) return;
    const FeasibilityReport rep = feasibility(family_spectral(Steiner{n, m}), mu);
    if (rep.feasible) out.push_back({m, *rep.params});
  };

  if (mu == 1) {
    for (Int m = n + 1; m <= m_bound; ++m) try_m(m);
    return out;
  }

  std::set<Int> candidates;
  const Int prod = n * n * mu * (mu - 1);
  for (Int u = 1; u * u <= prod; ++u) {
    if (!divides(u, prod)) continue;
    const Int sum = u + prod / u + 2 * n * mu - 1;
    if (!divides(n - 1, sum)) continue;
    candidates.insert(sum / (n - 1));
  }
  for (const Int& m : candidates) try_m(m);
  return out;
}

std::vector<TableRow> feasible_table(const Int& n_max, const Int& mu_max, const Int& v_cap) {
  if (n_max < 2 || mu_max < 2 || v_cap < 1) {
    throw DomainError("feasible_table: need n_max >= 2, mu_max >= 2, v_cap >= 1");
  }
  std::vector<TableRow> rows;
  for (Int n = 2; n <= n_max; ++n) {
    // v = m(n-1) + 1 <= v_cap bounds m.
    const Int m_bound = (v_cap - 1) / (n - 1);
    for (Int mu = 2; mu <= mu_max; ++mu) {
      for (const SteinerEntry& e : enum_steiner(n, mu, m_bound)) {
        TableRow row;
        row.n = n;
        row.m = e.m;
        row.mu = mu;
        row.params = e.params.first;
        const FeasibilityReport screen = screen_steiner(n, e.m, mu);
        row.rejected = !screen.feasible;
        if (row.rejected) row.reject_label = screen.failed_labels().front();
        rows.push_back(std::move(row));
      }
    }
  }
  std::sort(rows.begin(), rows.end(), [](const TableRow& a, const TableRow& b) {
    if (a.n != b.n) return a.n < b.n;
    if (a.m != b.m) return a.m < b.m;
    return a.mu < b.mu;
  });
  for (size_t i = 0; i < rows.size(); ++i) rows[i].number = static_cast<int>(i) + 1;
  return rows;
}

Quadruple affine_quadruple(const Int& n, const Int& t) {
  if (n < 2 || t < 0) throw DomainError("affine_quadruple: need n >= 2 and t >= 0");
  return Quadruple{1, 0, n - 2, t};
}

DesignParams compose_params(const Int& n, const Int& t, const Int& sym_v, const Int& sym_k,
                            const Int& sym_lambda) {
  if (sym_v != n) {
    throw DomainError("compose_params: incompatible point counts (affine side n = " +
                      to_string(n) + ", symmetric design on " + to_string(sym_v) + " points)");
  }
  if (sym_k < 1 || sym_lambda < 0 || sym_k <= sym_lambda) {
    throw DomainError("compose_params: degenerate symmetric design triple");
  }
  if (sym_k * (sym_k - 1) != sym_lambda * (n - 1)) {
    throw DomainError("compose_params: (" + to_string(sym_v) + "," + to_string(sym_k) + "," +
                      to_string(sym_lambda) + ") is not a symmetric 2-design triple");
  }
  affine_quadruple(n, t);  // validate the affine side
  const Int alpha = sym_k - sym_lambda;
  const Int lstar = n - 2 * sym_k + sym_lambda;
  if (lstar < 0) {
    throw DomainError("compose_params: complementary balance negative");
  }
  return multipartite_params(Quadruple{alpha, sym_lambda, lstar, alpha * t});
}

}  // namespace qsd
