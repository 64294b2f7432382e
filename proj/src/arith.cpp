#include "qsd/arith.hpp"

#include <algorithm>
#include <array>

namespace qsd {

namespace {

// Primes below 1e6, sieved once on first use.
const std::vector<uint32_t>& small_primes() {
  static const std::vector<uint32_t> primes = [] {
    const uint32_t limit = 1'000'000;
    std::vector<bool> composite(limit + 1, false);
    std::vector<uint32_t> out;
    for (uint32_t p = 2; p <= limit; ++p) {
      if (composite[p]) continue;
      out.push_back(p);
      for (uint64_t q = uint64_t(p) * p; q <= limit; q += p) composite[q] = true;
    }
    return out;
  }();
  return primes;
}

// True if a proves n composite; n odd >= 3, n - 1 = d * 2^r with d odd.
bool mr_composite_witness(const Int& n, const Int& a, const Int& d, unsigned long r) {
  Int x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  const Int nm1 = n - 1;
  if (x == 1 || x == nm1) return false;
  for (unsigned long i = 1; i < r; ++i) {
    x = x * x % n;
    if (x == nm1) return false;
  }
  return true;
}

// Brent-cycle rho; n odd, composite, with no prime factor <= 1e6. Returns a
// proper factor or throws when the budget is exhausted.
Int pollard_rho(const Int& n) {
  const uint64_t budget_per_seed = 6'000'000;
  for (unsigned long c = 1; c <= 20; ++c) {
    Int x = 2, y = 2, q = 1, g = 1, ys = 2;
    uint64_t iters = 0;
    unsigned long r = 1;
    const unsigned long batch = 128;
    while (g == 1 && iters <= budget_per_seed) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
      for (unsigned long k = 0; k < r && g == 1; k += batch) {
        ys = y;
        const unsigned long lim = std::min(batch, r - k);
        for (unsigned long i = 0; i < lim; ++i) {
          y = (y * y + c) % n;
          Int diff = x - y;
          mpz_abs(diff.get_mpz_t(), diff.get_mpz_t());
          q = q * diff % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        iters += lim;
      }
      r *= 2;
    }
    if (g == n) {
      // The batched gcd overshot; replay one step at a time from ys.
      do {
        ys = (ys * ys + c) % n;
        Int diff = x - ys;
        mpz_abs(diff.get_mpz_t(), diff.get_mpz_t());
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != 1 && g != n) return g;
  }
  throw FactorizationError("factorize: rho budget exhausted on cofactor " + to_string(n));
}

Rat unit_product(const Rat& u) {
  return rat(u.get_num() * u.get_den());
}

}  // namespace

Rat rat(const Int& num, const Int& den) {
  if (den == 0) throw DomainError("rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat rat(const Int& num) { return Rat(num); }

Rat parse_rat(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num_s = slash == std::string::npos ? text : text.substr(0, slash);
  const std::string den_s = slash == std::string::npos ? "1" : text.substr(slash + 1);
  Int num, den;
  if (num_s.empty() || den_s.empty() ||
      mpz_set_str(num.get_mpz_t(), num_s.c_str(), 10) != 0 ||
      mpz_set_str(den.get_mpz_t(), den_s.c_str(), 10) != 0) {
    throw DomainError("parse_rat: malformed rational '" + text + "'");
  }
  return rat(num, den);
}

std::string to_string(const Int& x) { return x.get_str(); }

std::string to_string(const Rat& x) { return x.get_str(); }

Int Factorization::value() const {
  Int v = sign;
  for (const auto& [p, e] : primes) {
    Int pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    v *= pe;
  }
  return v;
}

bool is_probable_prime(const Int& n) {
  if (n < 2) return false;
  static const std::array<unsigned, 13> base13 = {2,  3,  5,  7,  11, 13, 17,
                                                 19, 23, 29, 31, 37, 41};
  for (unsigned p : base13) {
    if (mpz_cmp_ui(n.get_mpz_t(), p) == 0) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  Int d = n - 1;
  const unsigned long r = mpz_scan1(d.get_mpz_t(), 0);
  d >>= r;
  // The 13 bases above are a complete witness set below 3317044064679887385961981.
  static const Int complete_bound("3317044064679887385961981");
  if (n < complete_bound) {
    for (unsigned a : base13) {
      if (mr_composite_witness(n, Int(a), d, r)) return false;
    }
    return true;
  }
  const auto& witnesses = small_primes();
  for (int i = 0; i < 64; ++i) {
    if (mr_composite_witness(n, Int(witnesses[i]), d, r)) return false;
  }
  return true;
}

Factorization factorize(const Int& n) {
  if (n == 0) throw DomainError("factorize: argument is zero");
  Factorization f;
  Int m = n;
  if (m < 0) {
    f.sign = -1;
    mpz_abs(m.get_mpz_t(), m.get_mpz_t());
  }
  if (m == 1) return f;

  std::map<Int, unsigned> acc;
  Int root = isqrt(m);
  bool below_root_scanned = false;
  for (uint32_t p : small_primes()) {
    if (mpz_cmp_ui(root.get_mpz_t(), p) < 0) {
      below_root_scanned = true;
      break;
    }
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      const Int pp(p);
      const unsigned e =
          mpz_remove(m.get_mpz_t(), m.get_mpz_t(), pp.get_mpz_t());
      acc[pp] += e;
      root = isqrt(m);
    }
  }

  if (m > 1) {
    if (below_root_scanned) {
      // No factor up to sqrt(m) remains, so m is prime.
      acc[m] += 1;
    } else {
      std::vector<Int> pending{m};
      while (!pending.empty()) {
        Int c = pending.back();
        pending.pop_back();
        if (is_probable_prime(c)) {
          acc[c] += 1;
          continue;
        }
        if (mpz_perfect_power_p(c.get_mpz_t())) {
          const unsigned long bits = mpz_sizeinbase(c.get_mpz_t(), 2);
          for (unsigned long e = 2; e <= bits; ++e) {
            Int base;
            if (mpz_root(base.get_mpz_t(), c.get_mpz_t(), e) != 0) {
              for (unsigned long i = 0; i < e; ++i) pending.push_back(base);
              break;
            }
          }
          continue;
        }
        const Int d = pollard_rho(c);
        pending.push_back(d);
        pending.push_back(c / d);
      }
    }
  }

  f.primes.assign(acc.begin(), acc.end());
  return f;
}

unsigned valuation_in(const Int& n, const Int& p) {
  if (n == 0) throw DomainError("valuation: argument is zero");
  if (p < 2) throw DomainError("valuation: modulus " + to_string(p) + " is not a prime");
  Int rest;
  return mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
}

long valuation(const Rat& x, const Int& p) {
  if (x == 0) throw DomainError("valuation: argument is zero");
  return static_cast<long>(valuation_in(x.get_num(), p)) -
         static_cast<long>(valuation_in(x.get_den(), p));
}

Int SquareClass::rep() const { return sign < 0 ? Int(-squarefree) : squarefree; }

SquareClass SquareClass::operator*(const SquareClass& other) const {
  // Both parts squarefree, so the squarefree part of the product is the
  // product divided by the square of the gcd.
  Int g;
  mpz_gcd(g.get_mpz_t(), squarefree.get_mpz_t(), other.squarefree.get_mpz_t());
  return SquareClass{sign * other.sign, (squarefree / g) * (other.squarefree / g)};
}

SquareClass SquareClass::pow(const Int& k) const {
  return mpz_odd_p(k.get_mpz_t()) ? *this : SquareClass{};
}

SquareClass square_class(const Int& x) {
  if (x == 0) throw DomainError("square_class: argument is zero");
  const Factorization f = factorize(x);
  SquareClass c{f.sign, 1};
  for (const auto& [p, e] : f.primes) {
    if (e % 2 == 1) c.squarefree *= p;
  }
  return c;
}

SquareClass square_class(const Rat& x) {
  // num/den and num*den differ by the square den^2.
  if (x == 0) throw DomainError("square_class: argument is zero");
  return square_class(Int(x.get_num() * x.get_den()));
}

bool is_perfect_square(const Int& x) {
  if (x < 0) return false;
  return mpz_perfect_square_p(x.get_mpz_t()) != 0;
}

bool is_perfect_square(const Rat& x) {
  return is_perfect_square(Int(x.get_num())) && is_perfect_square(Int(x.get_den()));
}

Int exact_sqrt(const Int& x) {
  if (!is_perfect_square(x)) {
    throw DomainError("exact_sqrt: " + to_string(x) + " is not a perfect square");
  }
  Int r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

Rat exact_sqrt(const Rat& x) {
  if (!is_perfect_square(x)) {
    throw DomainError("exact_sqrt: " + to_string(x) + " is not a perfect square");
  }
  return rat(exact_sqrt(Int(x.get_num())), exact_sqrt(Int(x.get_den())));
}

int legendre(const Int& u, const Int& p) {
  if (p < 3 || mpz_even_p(p.get_mpz_t()) || !is_probable_prime(p)) {
    throw DomainError("legendre: modulus " + to_string(p) + " is not an odd prime");
  }
  if (mpz_divisible_p(u.get_mpz_t(), p.get_mpz_t())) {
    throw DomainError("legendre: argument " + to_string(u) + " divisible by " + to_string(p));
  }
  return mpz_legendre(u.get_mpz_t(), p.get_mpz_t());
}

int legendre(const Rat& u, const Int& p) {
  return legendre(Int(u.get_num() * u.get_den()), p);
}

int eps_mod4(const Rat& u) {
  const Rat w = unit_product(u);
  const Int wn = w.get_num();
  if (mpz_even_p(wn.get_mpz_t())) {
    throw DomainError("eps_mod4: argument " + to_string(u) + " is not a 2-adic unit");
  }
  return mpz_fdiv_ui(wn.get_mpz_t(), 4) == 1 ? 0 : 1;
}

int omega_mod8(const Rat& u) {
  const Rat w = unit_product(u);
  const Int wn = w.get_num();
  if (mpz_even_p(wn.get_mpz_t())) {
    throw DomainError("omega_mod8: argument " + to_string(u) + " is not a 2-adic unit");
  }
  const unsigned long r = mpz_fdiv_ui(wn.get_mpz_t(), 8);
  return (r == 1 || r == 7) ? 0 : 1;
}

bool is_sum_two_squares(const Int& n) {
  return !sum_two_squares_obstruction(n).has_value();
}

std::optional<Int> sum_two_squares_obstruction(const Int& n) {
  if (n < 0) throw DomainError("sum_two_squares: negative argument " + to_string(n));
  if (n == 0) return std::nullopt;
  const Factorization f = factorize(n);
  for (const auto& [p, e] : f.primes) {
    if (e % 2 == 1 && mpz_fdiv_ui(p.get_mpz_t(), 4) == 3) return p;
  }
  return std::nullopt;
}

Int isqrt(const Int& n) {
  if (n < 0) throw DomainError("isqrt: negative argument " + to_string(n));
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

int choose2_mod2(const Int& n) {
  // n(n-1)/2 is even exactly when n = 0 or 1 (mod 4).
  if (n < 0) throw DomainError("choose2_mod2: negative argument " + to_string(n));
  const unsigned long r = mpz_fdiv_ui(n.get_mpz_t(), 4);
  return (r == 0 || r == 1) ? 0 : 1;
}

}  // namespace qsd
