#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qsd/designs.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

using namespace qsd;

namespace {

const ConditionResult* find_condition(const FeasibilityReport& r, const std::string& label) {
  for (const ConditionResult& c : r.conditions) {
    if (c.label == label) return &c;
  }
  return nullptr;
}

bool failed(const FeasibilityReport& r, const std::string& label) {
  const ConditionResult* c = find_condition(r, label);
  return c != nullptr && !c->passed;
}

// Full verdict through the generic route: parametric feasibility, then the
// p-adic main test against the family's closed-form invariants.
bool generic_verdict(const GraphFamily& fam, const Int& mu) {
  FeasibilityReport fz = feasibility(family_spectral(fam), mu);
  if (!fz.feasible) return false;
  return main_test(family_spectral(fam), family_invariants(fam), mu).feasible;
}

}  // namespace

TEST_CASE("feasibility on the Petersen spectrum") {
  SpectralParams pet(1, -2, 5, 4);
  FeasibilityReport r = feasibility(pet, 1);
  CHECK(r.feasible);
  CHECK(r.failed_labels().empty());
  REQUIRE(r.params.has_value());
  DesignParams d = r.params->first;
  CHECK(d == DesignParams{10, 6, 5, 3, 2, 1, 2});
  CHECK(r.params->second == d);  // self-complementary
  CHECK(d.mu() == 1);
  CHECK(d.order() == 3);
  CHECK(to_string(d) == "b=10 v=6 r=5 k=3 lambda=2 lambda1=1 lambda2=2");

  // mu = 2 falls outside the window [3/4, 3/2].
  FeasibilityReport r2 = feasibility(pet, 2);
  CHECK_FALSE(r2.feasible);
  CHECK(failed(r2, "2.3(b)"));
  CHECK_FALSE(r2.params.has_value());
}

TEST_CASE("feasibility failure labels on the Paley(9) spectrum") {
  FeasibilityReport r = feasibility(SpectralParams(1, -2, 4, 4), 1);
  CHECK_FALSE(r.feasible);
  CHECK(r.failed_labels() == std::vector<std::string>{"2.3(c)", "2.3(d)", "2.3(e)"});

  CHECK_THROWS_AS(derive_params(SpectralParams(1, -2, 4, 4), 1), FeasibilityError);
  try {
    derive_params(SpectralParams(1, -2, 4, 4), 1);
  } catch (const FeasibilityError& e) {
    CHECK(std::string(e.what()).find("2.3(c)") != std::string::npos);
  }
}

TEST_CASE("conference spectra are never feasible") {
  for (Int q : {Int(9), Int(25), Int(49)}) {
    SpectralParams sp = family_spectral(Conference{q});
    for (Int mu = 1; mu <= 6; ++mu) {
      CAPTURE(q);
      CAPTURE(mu);
      CHECK_FALSE(feasibility(sp, mu).feasible);
    }
  }
}

TEST_CASE("derived parameters satisfy the design identities") {
  struct Case {
    GraphFamily fam;
    Int mu;
  };
  std::vector<Case> cases = {
      {Multipartite{4, 3}, 1}, {Multipartite{3, 2}, 1}, {CoTriangular{5}, 1},
      {CoTriangular{6}, 1},    {Steiner{3, 10}, 2},     {Steiner{3, 4}, 1},
      {Symplectic{3, 2}, 1},   {Triangular{17}, 2},     {Steiner{5, 16}, 3},
  };
  for (const Case& c : cases) {
    SpectralParams sp = family_spectral(c.fam);
    auto [d, e] = derive_params(sp, c.mu);
    CAPTURE(family_name(c.fam));

    // Canonical member first.
    CHECK(2 * d.k <= d.v);
    // Complementation swaps the pair and is an involution.
    CHECK(complement(d) == e);
    CHECK(complement(e) == d);
    CHECK(e.lambda == d.b - 2 * d.r + d.lambda);
    CHECK(e.lambda1 == d.lambda1 + d.v - 2 * d.k);
    CHECK(e.lambda2 == d.lambda2 + d.v - 2 * d.k);

    for (const DesignParams& p : {d, e}) {
      // Counting identities of any 2-design.
      CHECK(p.b * p.k == p.r * p.v);
      CHECK(p.r * (p.k - 1) == p.lambda * (p.v - 1));
      CHECK(p.mu() == c.mu);
      CHECK(p.v == sp.f + 1);
      CHECK(p.b == sp.vertices());
      // Spectral ties to the block graph.
      CHECK(p.order() == (sp.rho - sp.sigma) * c.mu);
      CHECK(p.k - p.lambda1 == -sp.sigma * c.mu);
    }
    // nu is shared, and lambda with its complement's lambda are the two
    // roots of x^2 - (b - 2 nu) x + nu (nu - b/v).
    Int nu = d.order();
    CHECK(e.order() == nu);
    CHECK(d.lambda + e.lambda == d.b - 2 * nu);
    CHECK(d.v * d.lambda * e.lambda == d.v * nu * nu - nu * d.b);
  }
}

TEST_CASE("main test reference outcomes") {
  // Sp(6,2) with mu = 1 passes the parametric conditions but fails the
  // global square class condition.
  SpectralParams sp6 = family_spectral(Symplectic{3, 2});
  CHECK(feasibility(sp6, 1).feasible);
  FeasibilityReport mt = main_test(sp6, family_invariants(Symplectic{3, 2}), 1);
  CHECK_FALSE(mt.feasible);
  CHECK(failed(mt, "4.2(a)"));

  // The Steiner(3,10) mu = 2 row fails locally at 2 and 3.
  FeasibilityReport st = main_test(family_spectral(Steiner{3, 10}),
                                   family_invariants(Steiner{3, 10}), 2);
  CHECK_FALSE(st.feasible);
  CHECK(st.failed_labels() ==
        std::vector<std::string>{"4.2(b) at p=2", "4.2(b) at p=3"});

  // AG(2,3) passes everything.
  FeasibilityReport ag = main_test(family_spectral(Multipartite{4, 3}),
                                   family_invariants(Multipartite{4, 3}), 1);
  CHECK(ag.feasible);
  CHECK(find_condition(ag, "4.2(a)") != nullptr);
  CHECK(find_condition(ag, "4.2(b)") != nullptr);
}

TEST_CASE("report merge semantics") {
  FeasibilityReport a = feasibility(family_spectral(Symplectic{3, 2}), 1);
  FeasibilityReport b = main_test(family_spectral(Symplectic{3, 2}),
                                  family_invariants(Symplectic{3, 2}), 1);
  size_t na = a.conditions.size(), nb = b.conditions.size();
  bool bf = b.feasible;
  a.merge(b);
  CHECK(a.conditions.size() == na + nb);
  CHECK(a.feasible == bf);  // true && false
  CHECK(a.params.has_value());
  CHECK(a.failed_labels() == std::vector<std::string>{"4.2(a)"});
}

TEST_CASE("screens agree with the generic route") {
  // Multipartite window.
  for (Int m = 2; m <= 12; ++m) {
    for (Int n = 2; n <= 12; ++n) {
      for (Int mu = 1; mu <= 6; ++mu) {
        if (!feasibility(family_spectral(Multipartite{m, n}), mu).feasible) continue;
        CAPTURE(m);
        CAPTURE(n);
        CAPTURE(mu);
        CHECK(screen_multipartite(m, n, mu).feasible ==
              generic_verdict(Multipartite{m, n}, mu));
      }
    }
  }
  // Cotriangular window.
  for (Int n = 5; n <= 20; ++n) {
    for (Int mu = 1; mu <= 6; ++mu) {
      if (!feasibility(family_spectral(CoTriangular{n}), mu).feasible) continue;
      CAPTURE(n);
      CAPTURE(mu);
      CHECK(screen_cotriangular(n, mu).feasible == generic_verdict(CoTriangular{n}, mu));
    }
  }
  // Symplectic window, q = 2.
  for (Int d = 2; d <= 4; ++d) {
    for (Int mu = 1; mu <= 8; ++mu) {
      if (!feasibility(family_spectral(Symplectic{d, 2}), mu).feasible) continue;
      CAPTURE(d);
      CAPTURE(mu);
      CHECK(screen_symplectic(d, mu).feasible == generic_verdict(Symplectic{d, 2}, mu));
    }
  }
  // Steiner window.
  for (Int n = 3; n <= 5; ++n) {
    for (Int m = n + 1; m <= 40; ++m) {
      if ((m * (m - 1)) % n != 0) continue;
      for (Int mu = 2; mu <= 6; ++mu) {
        if (!feasibility(family_spectral(Steiner{n, m}), mu).feasible) continue;
        CAPTURE(n);
        CAPTURE(m);
        CAPTURE(mu);
        CHECK(screen_steiner(n, m, mu).feasible == generic_verdict(Steiner{n, m}, mu));
      }
    }
  }
}

TEST_CASE("screen clause labels on known cases") {
  // Steiner(3,10) mu 2: clause (b) fails at 2.
  FeasibilityReport st = screen_steiner(3, 10, 2);
  CHECK_FALSE(st.feasible);
  CHECK(failed(st, "Cor 4.7(b) at p=2"));

  // Steiner(4,9) mu 2: m odd and n even makes clause (a) bite: mu not square.
  FeasibilityReport st2 = screen_steiner(4, 9, 2);
  CHECK_FALSE(st2.feasible);
  CHECK(failed(st2, "Cor 4.7(a)"));

  // Steiner(5,16) mu 3: clause (b) fails at 3.
  FeasibilityReport st3 = screen_steiner(5, 16, 3);
  CHECK_FALSE(st3.feasible);
  CHECK(failed(st3, "Cor 4.7(b) at p=3"));

  // Multipartite m even: the square clause, passing for AG(2,3).
  FeasibilityReport mp = screen_multipartite(4, 3, 1);
  CHECK(mp.feasible);
  CHECK(find_condition(mp, "Cor 4.3(a1)") != nullptr);

  // Symplectic: 2^d mu must be a square.
  FeasibilityReport sy = screen_symplectic(3, 1);
  CHECK_FALSE(sy.feasible);
  CHECK(failed(sy, "Cor 4.6"));
  CHECK(screen_symplectic(3, 2).feasible);  // 2^3 * 2 = 16
}

TEST_CASE("symmetric design tests") {
  SymmetricResult s = schutzenberger(22, 5);
  CHECK(s.verdict == TriState::Reject);
  SymmetricResult s2 = schutzenberger(16, 4);
  CHECK(s2.verdict == TriState::Pass);
  CHECK(schutzenberger(7, 2).verdict == TriState::NotApplicable);

  SymmetricResult c = chowla_ryser(43, 1, 6);
  CHECK(c.verdict == TriState::Reject);
  CHECK(c.witness.find("p = 2") != std::string::npos);
  CHECK(chowla_ryser(7, 1, 2).verdict == TriState::Pass);
  CHECK(chowla_ryser(111, 1, 10).verdict == TriState::Pass);
  CHECK(chowla_ryser(22, 1, 5).verdict == TriState::NotApplicable);

  // A square order passes the rational test regardless of the rest.
  for (Int v = 5; v <= 41; v += 2) {
    for (Int lambda = 1; lambda <= 3; ++lambda) {
      for (Int nu : {Int(1), Int(4), Int(9), Int(16)}) {
        CHECK(chowla_ryser(v, lambda, nu).verdict == TriState::Pass);
      }
    }
  }
}

TEST_CASE("quadruple admissibility and parameters") {
  CHECK(quadruple_admissible(Quadruple{4, 2, 6, 1}));
  CHECK(quadruple_admissible(Quadruple{4, 6, 2, 1}));
  CHECK(quadruple_admissible(Quadruple{1, 0, 7, 3}));
  CHECK_FALSE(quadruple_admissible(Quadruple{3, 1, 5, 1}));   // l lstar mismatch
  CHECK_FALSE(quadruple_admissible(Quadruple{3, 1, 6, 1}));   // 3 does not divide 49
  CHECK(quadruple_admissible(Quadruple{3, 1, 6, 3}));

  Quadruple q{4, 2, 6, 1};
  CHECK(multipartite_side(q) == 16);
  CHECK(multipartite_m(q) == 81);
  CHECK(multipartite_mu(q) == 19);
  CHECK(multipartite_params(q) ==
        DesignParams{1296, 1216, 486, 456, 182, 152, 171});
  // Swapping l and lstar gives the complement.
  CHECK(multipartite_params(Quadruple{4, 6, 2, 1}) ==
        complement(multipartite_params(q)));

  CHECK_THROWS_AS(multipartite_params(Quadruple{3, 1, 5, 1}), DomainError);
}

TEST_CASE("enum_multipartite small run") {
  std::vector<MultipartiteEntry> es = enum_multipartite(1, 2, 1);
  REQUIRE(es.size() == 6);
  CHECK(es[0].quad == Quadruple{1, 0, 0, 0});
  CHECK(es[1].quad == Quadruple{1, 0, 0, 1});
  CHECK(es[2].quad == Quadruple{1, 0, 1, 0});
  CHECK(es[3].quad == Quadruple{1, 0, 1, 1});
  CHECK(es[4].quad == Quadruple{1, 0, 2, 0});
  CHECK(es[5].quad == Quadruple{1, 0, 2, 1});

  CHECK(es[0].n == 2);
  CHECK(es[0].m == 3);
  CHECK(es[0].mu == 1);
  CHECK(es[0].params.first == DesignParams{6, 4, 3, 2, 1, 0, 1});
  CHECK(es[1].params.first == DesignParams{14, 8, 7, 4, 3, 0, 2});
  CHECK(es[2].params.first == DesignParams{12, 9, 4, 3, 1, 0, 1});  // AG(2,3)
  CHECK(es[3].params.first == DesignParams{39, 27, 13, 9, 4, 0, 3});
  CHECK(es[4].params.first == DesignParams{20, 16, 5, 4, 1, 0, 1});  // AG(2,4)

  for (const MultipartiteEntry& e : es) {
    CHECK_FALSE(e.conjectural_flag);  // alpha = 1 divides everything
    CHECK(e.params.second == complement(e.params.first));
    CHECK(e.params.first.mu() == e.mu);
  }
}

TEST_CASE("enum_multipartite matches a direct feasibility scan") {
  // Any feasible multipartite triple in the window must come from an
  // admissible quadruple, and conversely.
  std::set<std::array<long, 3>> direct;
  for (long m = 2; m <= 25; ++m) {
    for (long n = 2; n <= 25; ++n) {
      for (long mu = 1; mu <= 12; ++mu) {
        if (feasibility(family_spectral(Multipartite{m, n}), mu).feasible) {
          direct.insert({m, n, mu});
        }
      }
    }
  }
  std::set<std::array<long, 3>> from_enum;
  for (const MultipartiteEntry& e : enum_multipartite(12, 25, 12)) {
    if (e.m <= 25 && e.n <= 25 && e.mu <= 12) {
      from_enum.insert({e.m.get_si(), e.n.get_si(), e.mu.get_si()});
    }
  }
  CHECK(direct.size() == 40);
  CHECK(from_enum == direct);
}

TEST_CASE("multipartite (n, mu) determines the rest") {
  std::map<std::pair<Int, Int>, Quadruple> seen;
  for (const MultipartiteEntry& e : enum_multipartite(8, 20, 8)) {
    auto key = std::make_pair(e.n, e.mu);
    auto it = seen.find(key);
    if (it == seen.end()) {
      seen.emplace(key, e.quad);
    } else {
      CHECK(it->second == e.quad);
    }
  }
}

TEST_CASE("enum_cotriangular") {
  std::vector<CoTriangularEntry> mu1 = enum_cotriangular(1, 6);
  REQUIRE(mu1.size() == 13);
  CHECK(mu1[0].l == 0);
  CHECK(mu1[0].lstar == 0);
  CHECK(mu1[0].n == 5);
  CHECK(mu1[0].params == DesignParams{10, 6, 5, 3, 2, 1, 2});
  CHECK(mu1[1].l == 0);
  CHECK(mu1[1].lstar == 1);
  CHECK(mu1[1].n == 6);
  CHECK(mu1[7].l == 1);  // the (k, 0) block starts after (0, 0)..(0, 6)
  CHECK(mu1[7].lstar == 0);

  std::vector<CoTriangularEntry> mu2 = enum_cotriangular(2, 0);
  REQUIRE(mu2.size() == 4);
  CHECK(mu2[0].l == 1);
  CHECK(mu2[0].lstar == 8);
  CHECK(mu2[0].n == 18);
  CHECK(mu2[0].params == DesignParams{153, 136, 45, 40, 13, 10, 12});
  CHECK(mu2[1].l == 2);
  CHECK(mu2[1].lstar == 4);
  CHECK(mu2[1].n == 15);
  CHECK(mu2[1].params == DesignParams{105, 91, 45, 39, 19, 15, 17});
  CHECK(mu2[2].l == 4);
  CHECK(mu2[2].lstar == 2);
  CHECK(mu2[2].params == DesignParams{105, 91, 60, 52, 34, 28, 30});
  CHECK(mu2[3].l == 8);
  CHECK(mu2[3].lstar == 1);
  CHECK(mu2[3].params == DesignParams{153, 136, 108, 96, 76, 66, 68});

  // Each entry's parameters pass the parametric conditions on its graph.
  for (const CoTriangularEntry& e : mu2) {
    FeasibilityReport r = feasibility(family_spectral(CoTriangular{e.n}), 2);
    REQUIRE(r.feasible);
    CHECK((r.params->first == e.params || r.params->second == e.params));
  }
}

TEST_CASE("check_symplectic") {
  SymplecticCheck a = check_symplectic(3, 2);
  CHECK(a.congruence_ok);
  CHECK_FALSE(a.square_ok);
  CHECK(a.mu == rat(1));
  CHECK_FALSE(a.feasible());
  CHECK(a.conditions.size() == 2);
  CHECK(a.conditions[0].label == "Cor 2.6 congruence");
  CHECK(a.conditions[1].label == "Cor 2.6 square");

  SymplecticCheck b = check_symplectic(4, 2);
  CHECK_FALSE(b.congruence_ok);
  CHECK(b.square_ok);
  CHECK(b.mu == rat(7, 4));

  SymplecticCheck c = check_symplectic(5, 2);
  CHECK_FALSE(c.congruence_ok);
  CHECK_FALSE(c.square_ok);
  CHECK(c.mu == rat(11, 4));

  CHECK_THROWS_AS(check_symplectic(2, 3), DomainError);
  CHECK_THROWS_AS(check_symplectic(6, 2), DomainError);  // not a prime power

  // No symplectic-type parameters pass both conditions in a wide window.
  for (Int q : {Int(3), Int(4), Int(5), Int(7), Int(8), Int(9), Int(11), Int(13)}) {
    for (Int d = 2; d <= 4; ++d) {
      CAPTURE(q);
      CAPTURE(d);
      CHECK_FALSE(check_symplectic(q, d).feasible());
    }
  }
}

TEST_CASE("enum_steiner") {
  std::vector<SteinerEntry> s32 = enum_steiner(3, 2, 100);
  REQUIRE(s32.size() == 2);
  CHECK(s32[0].m == 10);
  CHECK(s32[1].m == 15);
  CHECK(s32[0].params.first == DesignParams{70, 21, 30, 9, 12, 3, 5});

  std::vector<Int> m63;
  for (const SteinerEntry& e : enum_steiner(6, 3, 100)) m63.push_back(e.m);
  CHECK(std::find(m63.begin(), m63.end(), Int(13)) != m63.end());

  // Pairs block graphs never carry mu >= 2.
  for (Int mu = 2; mu <= 12; ++mu) CHECK(enum_steiner(2, mu, 50).empty());

  // mu = 1 is the classical Steiner existence window for parameters.
  std::vector<Int> m31;
  for (const SteinerEntry& e : enum_steiner(3, 1, 20)) m31.push_back(e.m);
  CHECK(m31 == std::vector<Int>{4, 6, 7, 9, 10, 12, 13, 15, 16, 18, 19});

  // Against a direct scan: every feasible (n, m, mu) with mu >= 2 shows up.
  for (Int n = 3; n <= 6; ++n) {
    for (Int mu = 2; mu <= 10; ++mu) {
      std::set<Int> direct;
      for (Int m = n + 1; m <= 100; ++m) {
        if ((m * (m - 1)) % n != 0) continue;
        if (feasibility(family_spectral(Steiner{n, m}), mu).feasible) direct.insert(m);
      }
      std::set<Int> via;
      for (const SteinerEntry& e : enum_steiner(n, mu, 100)) via.insert(e.m);
      CAPTURE(n);
      CAPTURE(mu);
      CHECK(via == direct);
    }
  }
}

TEST_CASE("feasible_table") {
  std::vector<TableRow> rows = feasible_table(6, 4, 500);
  REQUIRE(rows.size() == 27);
  for (int i = 0; i < 27; ++i) CHECK(rows[static_cast<size_t>(i)].number == i + 1);

  CHECK(rows[0].n == 3);
  CHECK(rows[0].m == 10);
  CHECK(rows[0].mu == 2);
  CHECK(rows[0].params == DesignParams{70, 21, 30, 9, 12, 3, 5});
  CHECK(rows[0].rejected);
  CHECK(rows[0].reject_label == "Cor 4.7(b) at p=2");

  // The two rows absent from older published lists.
  CHECK(rows[10].n == 4);
  CHECK(rows[10].m == 16);
  CHECK(rows[10].mu == 2);
  CHECK(rows[10].params == DesignParams{196, 49, 36, 9, 6, 1, 3});
  CHECK_FALSE(rows[10].rejected);
  CHECK(rows[14].n == 5);
  CHECK(rows[14].m == 15);
  CHECK(rows[14].mu == 3);
  CHECK_FALSE(rows[14].rejected);

  // Row 16 carries the corrected intersection numbers (5, 8).
  CHECK(rows[15].n == 5);
  CHECK(rows[15].m == 16);
  CHECK(rows[15].params.lambda1 == 5);
  CHECK(rows[15].params.lambda2 == 8);
  CHECK(rows[15].rejected);
  CHECK(rows[15].reject_label == "Cor 4.7(b) at p=3");

  std::set<int> rejected;
  for (const TableRow& r : rows) {
    if (r.rejected) rejected.insert(r.number);
    // Rows are sorted by (n, m, mu) and consistent.
    CHECK(r.params.mu() == r.mu);
    CHECK(r.params.v <= 500);
    CHECK(r.mu >= 2);
    CHECK(r.mu <= 4);
    CHECK(r.n <= 6);
  }
  CHECK(rejected == std::set<int>{1, 10, 12, 16, 20, 21, 22});

  CHECK(rows[26].n == 6);
  CHECK(rows[26].m == 96);
  CHECK(rows[26].params == DesignParams{7696, 481, 400, 25, 20, 1, 5});
}

TEST_CASE("affine quadruples and composition") {
  CHECK(affine_quadruple(4, 0) == Quadruple{1, 0, 2, 0});
  CHECK(affine_quadruple(5, 2) == Quadruple{1, 0, 3, 2});
  CHECK(quadruple_admissible(affine_quadruple(7, 3)));

  // Composing the affine quadruple on 4 points with the symmetric 2-(4,3,2)
  // gives the complement of AG(2,4).
  DesignParams comp = compose_params(4, 0, 4, 3, 2);
  CHECK(comp == DesignParams{20, 16, 15, 12, 11, 8, 9});
  CHECK(complement(comp) == DesignParams{20, 16, 5, 4, 1, 0, 1});

  CHECK_THROWS_AS(compose_params(4, 0, 5, 3, 2), DomainError);  // wrong point count
  CHECK_THROWS_AS(compose_params(4, 0, 4, 3, 1), DomainError);  // not a 2-design
}
