#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qsd/arith.hpp"

#include <map>

using namespace qsd;

TEST_CASE("rat canonicalizes sign and common factors") {
  CHECK(rat(4, 6) == rat(2, 3));
  CHECK(rat(-4, 6) == rat(Int(2), Int(-3)));
  CHECK(rat(0, 7) == rat(0));
  CHECK(to_string(rat(-4, 6)) == "-2/3");
  CHECK(to_string(rat(8, 4)) == "2");
  CHECK_THROWS_AS(rat(1, 0), DomainError);
}

TEST_CASE("parse_rat round-trips integers and fractions") {
  CHECK(parse_rat("123") == rat(123));
  CHECK(parse_rat("-4/9") == rat(Int(-4), Int(9)));
  CHECK(parse_rat("6/4") == rat(3, 2));
  CHECK_THROWS_AS(parse_rat("1/0"), DomainError);
  CHECK_THROWS_AS(parse_rat("abc"), DomainError);
  CHECK_THROWS_AS(parse_rat(""), DomainError);
}

TEST_CASE("factorize on reference values") {
  Factorization f = factorize(405);
  CHECK(f.sign == 1);
  REQUIRE(f.primes.size() == 2);
  CHECK(f.primes[0] == std::pair<Int, unsigned>(3, 4));
  CHECK(f.primes[1] == std::pair<Int, unsigned>(5, 1));
  CHECK(f.value() == 405);

  Factorization g = factorize(-4095);
  CHECK(g.sign == -1);
  REQUIRE(g.primes.size() == 4);
  CHECK(g.primes[0] == std::pair<Int, unsigned>(3, 2));
  CHECK(g.primes[1] == std::pair<Int, unsigned>(5, 1));
  CHECK(g.primes[2] == std::pair<Int, unsigned>(7, 1));
  CHECK(g.primes[3] == std::pair<Int, unsigned>(13, 1));
  CHECK(g.value() == -4095);

  CHECK(factorize(1).primes.empty());
  CHECK(factorize(-1).sign == -1);
  CHECK_THROWS_AS(factorize(0), DomainError);
}

TEST_CASE("factorize handles large semiprimes and prime powers") {
  // 1000003 and 1000033 are both prime and above the trial division bound.
  Int p = 1000003, q = 1000033;
  Factorization f = factorize(p * q);
  REQUIRE(f.primes.size() == 2);
  CHECK(f.primes[0].first == p);
  CHECK(f.primes[1].first == q);

  Int pw;
  mpz_pow_ui(pw.get_mpz_t(), p.get_mpz_t(), 3);
  Factorization g = factorize(pw);
  REQUIRE(g.primes.size() == 1);
  CHECK(g.primes[0] == std::pair<Int, unsigned>(p, 3));
}

TEST_CASE("is_probable_prime agrees with factorize on a window") {
  for (Int n = 2; n < 600; ++n) {
    Factorization f = factorize(n);
    bool prime = f.primes.size() == 1 && f.primes[0].second == 1;
    CHECK(is_probable_prime(n) == prime);
  }
  CHECK_FALSE(is_probable_prime(1));
  CHECK_FALSE(is_probable_prime(0));
  CHECK_FALSE(is_probable_prime(-7));
  // A Carmichael number must not fool the test.
  CHECK_FALSE(is_probable_prime(561));
  CHECK(is_probable_prime(Int("1000000000000066600000000000001")));
}

TEST_CASE("valuations") {
  CHECK(valuation_in(12, 2) == 2);
  CHECK(valuation_in(12, 3) == 1);
  CHECK(valuation_in(12, 5) == 0);
  CHECK_THROWS_AS(valuation_in(0, 2), DomainError);

  CHECK(valuation(rat(3, 4), 2) == -2);
  CHECK(valuation(rat(3, 4), 3) == 1);
  CHECK(valuation(rat(-8), 2) == 3);
  CHECK_THROWS_AS(valuation(rat(0), 2), DomainError);
}

TEST_CASE("square_class reference values and group laws") {
  CHECK(square_class(Int(405)) == SquareClass{1, 5});
  CHECK(square_class(rat(-8, 3)) == SquareClass{-1, 6});
  CHECK(square_class(rat(4, 9)) == SquareClass{1, 1});
  CHECK(square_class(Int(1)).is_one());
  CHECK(square_class(Int(-1)) == SquareClass{-1, 1});
  CHECK(square_class(Int(405)).rep() == 5);
  CHECK(square_class(rat(-8, 3)).rep() == -6);
  CHECK_THROWS_AS(square_class(Int(0)), DomainError);

  // The class map is a homomorphism and squares die.
  SquareClass a = square_class(Int(30));
  SquareClass b = square_class(Int(-42));
  CHECK(a * b == square_class(Int(30 * -42)));
  CHECK((a * a).is_one());
  CHECK(a.pow(2).is_one());
  CHECK(a.pow(7) == a);
  CHECK(a.pow(0).is_one());
}

TEST_CASE("perfect squares and exact roots") {
  CHECK(is_perfect_square(Int(0)));
  CHECK(is_perfect_square(Int(3136)));
  CHECK_FALSE(is_perfect_square(Int(1800)));
  CHECK_FALSE(is_perfect_square(Int(-4)));
  CHECK(is_perfect_square(rat(4, 9)));
  CHECK_FALSE(is_perfect_square(rat(4, 3)));

  CHECK(exact_sqrt(Int(3136)) == 56);
  CHECK(exact_sqrt(rat(4, 9)) == rat(2, 3));
  CHECK_THROWS_AS(exact_sqrt(Int(2)), DomainError);
  CHECK_THROWS_AS(exact_sqrt(rat(-1)), DomainError);
}

TEST_CASE("legendre symbol matches Euler's criterion") {
  for (Int p : {Int(3), Int(5), Int(7), Int(11), Int(13), Int(97)}) {
    for (Int u = 1; u < p; ++u) {
      Int e;
      Int exp = (p - 1) / 2;
      mpz_powm(e.get_mpz_t(), u.get_mpz_t(), exp.get_mpz_t(), p.get_mpz_t());
      int euler = e == 1 ? 1 : -1;
      CHECK(legendre(u, p) == euler);
      // Negative and shifted representatives give the same symbol.
      CHECK(legendre(Int(u - p), p) == euler);
      CHECK(legendre(Int(u + p), p) == euler);
    }
  }
  // Rational units: numerator times denominator.
  CHECK(legendre(rat(2, 3), 5) == legendre(Int(6), 5));
  CHECK_THROWS_AS(legendre(Int(5), Int(5)), DomainError);
  CHECK_THROWS_AS(legendre(Int(1), Int(2)), DomainError);
}

TEST_CASE("two-adic unit characters") {
  // eps detects 1 mod 4, omega detects +-1 mod 8.
  CHECK(eps_mod4(rat(21)) == 0);
  CHECK(omega_mod8(rat(21)) == 1);
  CHECK(eps_mod4(rat(3)) == 1);
  CHECK(omega_mod8(rat(7)) == 0);
  CHECK(eps_mod4(rat(-1)) == 1);
  CHECK(omega_mod8(rat(-1)) == 0);
  CHECK(eps_mod4(rat(1, 3)) == 1);   // numerator times denominator is 3
  CHECK(omega_mod8(rat(3, 5)) == 0); // numerator times denominator is 15 = -1 mod 8
  CHECK_THROWS_AS(eps_mod4(rat(2)), DomainError);

  // Characters are additive under multiplication of units mod squares.
  for (int a = -15; a <= 15; a += 2) {
    for (int b = -15; b <= 15; b += 2) {
      CHECK((eps_mod4(rat(a)) + eps_mod4(rat(b))) % 2 == eps_mod4(rat(a * b)) % 2);
      CHECK((omega_mod8(rat(a)) + omega_mod8(rat(b))) % 2 == omega_mod8(rat(a * b)) % 2);
    }
  }
}

TEST_CASE("sums of two squares") {
  CHECK(is_sum_two_squares(5));
  CHECK(is_sum_two_squares(0));
  CHECK(is_sum_two_squares(2));
  CHECK_FALSE(is_sum_two_squares(21));
  CHECK(sum_two_squares_obstruction(21) == Int(3));
  CHECK(sum_two_squares_obstruction(5) == std::nullopt);
  CHECK(sum_two_squares_obstruction(9 * 21) == Int(3));
  CHECK(sum_two_squares_obstruction(49) == std::nullopt);

  // Brute force over a window.
  for (int n = 0; n <= 200; ++n) {
    bool found = false;
    for (int x = 0; x * x <= n && !found; ++x) {
      int rest = n - x * x;
      int y = static_cast<int>(isqrt(rest).get_si());
      found = y * y == rest;
    }
    CHECK(is_sum_two_squares(n) == found);
    CHECK(sum_two_squares_obstruction(n).has_value() == (n > 0 && !found));
  }
}

TEST_CASE("isqrt and choose2_mod2") {
  CHECK(isqrt(0) == 0);
  CHECK(isqrt(15) == 3);
  CHECK(isqrt(16) == 4);
  CHECK_THROWS_AS(isqrt(-1), DomainError);

  // C(n,2) mod 2 has period 4: 0,0,1,1.
  CHECK(choose2_mod2(0) == 0);
  CHECK(choose2_mod2(1) == 0);
  CHECK(choose2_mod2(2) == 1);
  CHECK(choose2_mod2(3) == 1);
  CHECK(choose2_mod2(4) == 0);
  CHECK(choose2_mod2(7) == 1);
}
