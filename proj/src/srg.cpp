#include "qsd/srg.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <sstream>

namespace qsd {

namespace {

bool is_prime_power(const Int& q) {
  if (q < 2) return false;
  return factorize(q).primes.size() == 1;
}

Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Int exact_div(const Int& num, const Int& den, const char* who) {
  if (den == 0 || !mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
    throw SrgError(std::string(who) + ": expected " + to_string(den) + " to divide " +
                   to_string(num));
  }
  return num / den;
}

unsigned long to_ulong(const Int& x, const char* who) {
  if (x < 0 || !x.fits_ulong_p()) {
    throw DomainError(std::string(who) + ": value " + to_string(x) + " out of range");
  }
  return x.get_ui();
}

// Product of Hilbert symbols with 0/1 exponents, shared by the closed forms.
int symbol_if(int parity, const Rat& a, const Rat& b, const Int& p) {
  return parity % 2 != 0 ? hilbert_symbol(a, b, p) : 1;
}

}  // namespace

SpectralParams::SpectralParams(Int rho_, Int sigma_, Int f_, Int g_)
    : rho(std::move(rho_)), sigma(std::move(sigma_)), f(std::move(f_)), g(std::move(g_)) {
  if (sigma >= 0) throw SrgError("SpectralParams: sigma must be negative");
  if (rho < 0) throw SrgError("SpectralParams: rho must be non-negative");
  if (f < 1 || g < 1) throw SrgError("SpectralParams: multiplicities must be positive");
  const Int a = degree();
  const Int b = vertices();
  if (a <= rho) throw SrgError("SpectralParams: degree not larger than rho");
  if (a > b - 1) throw SrgError("SpectralParams: degree exceeds vertex count");
  // trace(A^2) counted two ways: a*b versus the eigenvalue squares.
  if (a * a + f * rho * rho + g * sigma * sigma != a * b) {
    throw SrgError("SpectralParams: multiplicities inconsistent with the spectrum");
  }
  if (common_adjacent() < 0) {
    throw SrgError("SpectralParams: negative common neighbor count on edges");
  }
  if (common_nonadjacent() < 1) {
    throw SrgError("SpectralParams: parameters describe a disconnected graph");
  }
}

Int SpectralParams::common_adjacent() const { return degree() + rho + sigma + rho * sigma; }

Int SpectralParams::common_nonadjacent() const { return degree() + rho * sigma; }

std::string family_name(const GraphFamily& fam) {
  return std::visit(
      [](const auto& f) -> std::string {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Multipartite>) {
          return "multipartite(" + to_string(f.m) + "," + to_string(f.n) + ")";
        } else if constexpr (std::is_same_v<T, CoTriangular>) {
          return "cotriangular(" + to_string(f.n) + ")";
        } else if constexpr (std::is_same_v<T, Symplectic>) {
          return "symplectic(" + to_string(f.d) + "," + to_string(f.q) + ")";
        } else if constexpr (std::is_same_v<T, Steiner>) {
          return "steiner(" + to_string(f.n) + "," + to_string(f.m) + ")";
        } else if constexpr (std::is_same_v<T, Triangular>) {
          return "triangular(" + to_string(f.m) + ")";
        } else {
          return "conference(" + to_string(f.q) + ")";
        }
      },
      fam);
}

SpectralParams family_spectral(const GraphFamily& fam) {
  if (const auto* k = std::get_if<Multipartite>(&fam)) {
    if (k->m < 2 || k->n < 2) {
      throw SrgError("multipartite: need m >= 2 parts of size n >= 2");
    }
    return SpectralParams(0, -k->n, k->m * (k->n - 1), k->m - 1);
  }
  if (const auto* c = std::get_if<CoTriangular>(&fam)) {
    if (c->n < 5) throw SrgError("cotriangular: need n >= 5");
    return SpectralParams(1, -(c->n - 3), exact_div(c->n * (c->n - 3), 2, "cotriangular"),
                          c->n - 1);
  }
  if (const auto* s = std::get_if<Symplectic>(&fam)) {
    if (s->d < 2) throw SrgError("symplectic: need d >= 2");
    if (!is_prime_power(s->q)) {
      throw SrgError("symplectic: q = " + to_string(s->q) + " is not a prime power");
    }
    const Int qd1 = int_pow(s->q, to_ulong(s->d - 1, "symplectic"));
    const Int qd = qd1 * s->q;
    const Int den = 2 * (s->q - 1);
    const Int f = exact_div(s->q * (qd1 - 1) * (qd + 1), den, "symplectic");
    const Int g = exact_div(s->q * (qd1 + 1) * (qd - 1), den, "symplectic");
    return SpectralParams(qd1, -qd1, f, g);
  }
  if (const auto* s = std::get_if<Steiner>(&fam)) {
    if (s->n < 2 || s->m <= s->n) throw SrgError("steiner: need 2 <= n < m");
    if (!mpz_divisible_p(Int(s->m * (s->m - 1)).get_mpz_t(), s->n.get_mpz_t())) {
      throw SrgError("steiner: need n | m(m-1), got n = " + to_string(s->n) +
                     ", m = " + to_string(s->m));
    }
    const Int v = s->m * (s->n - 1) + 1;
    const Int b = exact_div(s->m * (s->m * s->n - s->m + 1), s->n, "steiner");
    return SpectralParams(s->m - s->n - 1, -s->n, v - 1, b - v);
  }
  if (const auto* t = std::get_if<Triangular>(&fam)) {
    if (t->m < 5) throw SrgError("triangular: need m >= 5");
    return SpectralParams(t->m - 4, -2, t->m - 1, exact_div(t->m * (t->m - 3), 2, "triangular"));
  }
  const auto& c = std::get<Conference>(fam);
  if (c.q < 5 || mpz_fdiv_ui(c.q.get_mpz_t(), 4) != 1 || !is_prime_power(c.q)) {
    throw SrgError("conference: q must be a prime power congruent to 1 mod 4");
  }
  if (!is_perfect_square(c.q)) {
    throw ConferenceError("conference(" + to_string(c.q) +
                          "): irrational eigenvalues (1 +- sqrt(q))/2; the integrality "
                          "condition fails for every mu");
  }
  const Int s = exact_sqrt(c.q);
  return SpectralParams(exact_div(s - 1, 2, "conference"), -exact_div(s + 1, 2, "conference"),
                        exact_div(c.q - 1, 2, "conference"), exact_div(c.q - 1, 2, "conference"));
}

int GraphInvariants::eps(const Int& p) const {
  const auto it = hasse.find(p);
  return it == hasse.end() ? 1 : it->second;
}

bool GraphInvariants::operator==(const GraphInvariants& other) const {
  if (!(delta == other.delta)) return false;
  std::vector<Int> keys;
  for (const auto& [p, s] : hasse) keys.push_back(p);
  for (const auto& [p, s] : other.hasse) keys.push_back(p);
  for (const Int& p : keys) {
    if (eps(p) != other.eps(p)) return false;
  }
  return true;
}

GraphInvariants family_invariants(const GraphFamily& fam) {
  GraphInvariants inv;
  if (const auto* k = std::get_if<Multipartite>(&fam)) {
    family_spectral(fam);  // validate
    const Int &m = k->m, &n = k->n;
    inv.delta = square_class(m) * square_class(n).pow(m - 1);
    for (const Int& p : relevant_primes({Rat(m), Rat(n)})) {
      int s = symbol_if(choose2_mod2(m - 1), Rat(-1), Rat(n), p);
      s *= symbol_if(mpz_odd_p(m.get_mpz_t()), Rat(m), Rat(n), p);
      s *= hilbert_symbol(Rat(-1), Rat(m), p);
      inv.hasse[p] = s;
    }
    return inv;
  }
  if (const auto* c = std::get_if<CoTriangular>(&fam)) {
    family_spectral(fam);
    const Int& n = c->n;
    inv.delta = square_class(n) * square_class(Int(n - 2)).pow(n - 1);
    for (const Int& p : relevant_primes({Rat(n - 2), Rat(n)})) {
      int s = symbol_if(choose2_mod2(n - 1), Rat(-1), Rat(n - 2), p);
      s *= symbol_if(mpz_odd_p(n.get_mpz_t()), Rat(n - 2), Rat(n), p);
      s *= hilbert_symbol(Rat(-1), Rat(n), p);
      inv.hasse[p] = s;
    }
    return inv;
  }
  if (const auto* s = std::get_if<Symplectic>(&fam)) {
    family_spectral(fam);
    if (s->q != 2) {
      throw NoClosedFormError("symplectic invariants: closed form recorded only for q = 2");
    }
    const unsigned long d = to_ulong(s->d, "symplectic invariants");
    const Int pow2d = int_pow(2, d);
    inv.delta = square_class(Int(2)).pow(s->d - 1) * square_class(Int(pow2d + 1));
    const Int b = pow2d * pow2d - 1;
    for (const Int& p : relevant_primes({Rat(2), Rat(b)})) {
      inv.hasse[p] = symbol_if(static_cast<int>(d % 2), Rat(2), Rat(b), p);
    }
    return inv;
  }
  if (const auto* s = std::get_if<Steiner>(&fam)) {
    family_spectral(fam);
    const Int &n = s->n, &m = s->m;
    const Int w = m * n - m;  // number of points minus one
    inv.delta = square_class(Int(m * n)) * square_class(Int(m - 1)).pow(w);
    for (const Int& p : relevant_primes({Rat(m - 1), Rat(m * n), Rat(w + 1)})) {
      // Exponent C(w, 2) - 1 on the first factor, so include it when C(w, 2)
      // is even.
      int sym = symbol_if(1 - choose2_mod2(w), Rat(-1), Rat(m - 1), p);
      sym *= symbol_if(mpz_odd_p(w.get_mpz_t()), Rat(-m * n), Rat(m - 1), p);
      sym *= hilbert_symbol(Rat(m * n * (m - 1)), Rat(-(w + 1)), p);
      inv.hasse[p] = sym;
    }
    return inv;
  }
  if (std::holds_alternative<Triangular>(fam)) {
    throw NoClosedFormError("triangular invariants: no closed form recorded");
  }
  throw NoClosedFormError("conference invariants: no closed form recorded");
}

AdjacencyMatrix::AdjacencyMatrix(int n) : n_(n), adj_(static_cast<size_t>(n) * n, 0) {
  if (n < 1) throw DomainError("AdjacencyMatrix: order must be positive");
}

void AdjacencyMatrix::add_edge(int i, int j) {
  if (i < 0 || j < 0 || i >= n_ || j >= n_ || i == j) {
    throw DomainError("AdjacencyMatrix::add_edge: bad endpoints");
  }
  adj_[static_cast<size_t>(i) * n_ + j] = 1;
  adj_[static_cast<size_t>(j) * n_ + i] = 1;
}

Int AdjacencyMatrix::degree(int i) const {
  long d = 0;
  for (int j = 0; j < n_; ++j) d += edge(i, j) ? 1 : 0;
  return d;
}

namespace {

AdjacencyMatrix parse_matrix_format(const std::string& text) {
  std::vector<std::vector<int>> rows;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::vector<int> row;
    std::string tok;
    int col = 0;
    while (ls >> tok) {
      ++col;
      if (tok == "0") {
        row.push_back(0);
      } else if (tok == "1") {
        row.push_back(1);
      } else {
        throw DomainError("graph parse error at line " + std::to_string(lineno) + ", entry " +
                          std::to_string(col) + ": expected 0 or 1, got '" + tok + "'");
      }
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  const int n = static_cast<int>(rows.size());
  if (n == 0) throw DomainError("graph parse error: empty matrix");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) {
      throw DomainError("graph parse error: row " + std::to_string(i + 1) + " has " +
                        std::to_string(rows[i].size()) + " entries, expected " +
                        std::to_string(n));
    }
    if (rows[i][i] != 0) {
      throw DomainError("graph parse error: nonzero diagonal at row " + std::to_string(i + 1));
    }
  }
  AdjacencyMatrix a(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rows[i][j] != rows[j][i]) {
        throw DomainError("graph parse error: asymmetry between entries (" +
                          std::to_string(i + 1) + "," + std::to_string(j + 1) + ") and (" +
                          std::to_string(j + 1) + "," + std::to_string(i + 1) + ")");
      }
      if (rows[i][j] == 1) a.add_edge(i, j);
    }
  }
  return a;
}

AdjacencyMatrix parse_graph6(const std::string& text) {
  std::string s = text;
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
  size_t pos = 0;
  auto take = [&]() -> int {
    if (pos >= s.size()) throw DomainError("graph6 parse error: truncated at byte " + std::to_string(pos));
    const unsigned char c = static_cast<unsigned char>(s[pos]);
    if (c < 63 || c > 126) {
      throw DomainError("graph6 parse error: invalid byte at position " + std::to_string(pos));
    }
    ++pos;
    return c - 63;
  };
  long n;
  const int first = take();
  if (first < 63) {
    n = first;
  } else {
    // '~' prefix: the next three bytes hold an 18-bit vertex count.
    long acc = 0;
    for (int i = 0; i < 3; ++i) acc = (acc << 6) | take();
    n = acc;
  }
  if (n < 1) throw DomainError("graph6 parse error: bad vertex count");
  AdjacencyMatrix a(static_cast<int>(n));
  const long nbits = n * (n - 1) / 2;
  long bit = 0;
  int cur = 0, curbits = 0;
  for (long j = 1; j < n; ++j) {
    for (long i = 0; i < j; ++i) {
      if (curbits == 0) {
        cur = take();
        curbits = 6;
      }
      --curbits;
      if ((cur >> curbits) & 1) a.add_edge(static_cast<int>(i), static_cast<int>(j));
      ++bit;
    }
  }
  (void)nbits;
  if (pos != s.size()) {
    throw DomainError("graph6 parse error: trailing bytes after position " + std::to_string(pos));
  }
  return a;
}

}  // namespace

AdjacencyMatrix parse_graph(const std::string& text, const std::string& format) {
  if (format == "matrix") return parse_matrix_format(text);
  if (format == "graph6") return parse_graph6(text);
  throw DomainError("parse_graph: unknown format '" + format + "'");
}

AdjacencyMatrix read_graph(const std::string& path, const std::string& format) {
  FILE* fp = std::fopen(path.c_str(), "rb");
  if (!fp) throw DomainError("read_graph: cannot open '" + path + "'");
  std::string text;
  char buf[4096];
  size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, fp)) > 0) text.append(buf, got);
  std::fclose(fp);
  return parse_graph(text, format);
}

SpectralParams srg_recognize(const AdjacencyMatrix& a) {
  const int n = a.order();
  if (n < 2) throw SrgError("srg_recognize: need at least two vertices");

  const Int deg0 = a.degree(0);
  for (int i = 1; i < n; ++i) {
    const Int di = a.degree(i);
    if (di != deg0) {
      throw NotRegularError("not regular: vertex 0 has degree " + to_string(deg0) +
                            ", vertex " + std::to_string(i) + " has degree " + to_string(di));
    }
  }

  std::vector<char> seen(n, 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int w = 0; w < n; ++w) {
      if (a.edge(u, w) && !seen[w]) {
        seen[w] = 1;
        ++reached;
        queue.push_back(w);
      }
    }
  }
  if (reached != n) {
    throw DisconnectedError("disconnected: only " + std::to_string(reached) + " of " +
                            std::to_string(n) + " vertices reachable from vertex 0");
  }
  if (deg0 == n - 1) {
    throw NotStronglyRegularError("complete graph: only two distinct eigenvalues");
  }

  // Common-neighbor counts via one exact matrix square.
  std::vector<std::vector<long>> sq(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      if (!a.edge(i, k)) continue;
      for (int j = 0; j < n; ++j) {
        if (a.edge(k, j)) ++sq[i][j];
      }
    }
  }
  long c = -1, d = -1;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      long& slot = a.edge(i, j) ? c : d;
      if (slot < 0) {
        slot = sq[i][j];
      } else if (slot != sq[i][j]) {
        throw NotStronglyRegularError(
            "not strongly regular: common-neighbor count differs at vertex pair (" +
            std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }

  const Int deg = deg0;
  const Int delta = Int(c - d) * Int(c - d) + 4 * (deg - d);
  const Int s = isqrt(delta);
  if (s * s != delta) {
    throw ConferenceError("irrational eigenvalues on " + std::to_string(n) +
                          " vertices (conference graph); the integrality condition fails");
  }
  const Int two_rho = (c - d) + s;
  if (mpz_odd_p(two_rho.get_mpz_t())) {
    throw NotStronglyRegularError("not strongly regular: non-integral eigenvalue pair");
  }
  const Int rho = two_rho / 2;
  const Int sigma = rho - s;
  if (rho == sigma) {
    throw NotStronglyRegularError("not strongly regular: repeated eigenvalue");
  }
  const Int fnum = -deg - (n - 1) * sigma;
  if (!mpz_divisible_p(fnum.get_mpz_t(), Int(rho - sigma).get_mpz_t())) {
    throw NotStronglyRegularError("not strongly regular: non-integral multiplicity");
  }
  const Int f = fnum / (rho - sigma);
  return SpectralParams(rho, sigma, f, Int(n - 1) - f);
}

SymMatrix minimal_idempotent(const AdjacencyMatrix& a, const SpectralParams& sp) {
  if (!(srg_recognize(a) == sp)) {
    throw SrgError("minimal_idempotent: spectral parameters do not match the graph");
  }
  const int n = a.order();
  const Int b = sp.vertices();
  const Int deg = sp.degree();
  const Int scale = b * (sp.sigma - sp.rho);  // common denominator of E

  // M = scale * E is integral: M_ij = b A_ij - b rho [i=j] - (deg - rho).
  std::vector<std::vector<Int>> m(n, std::vector<Int>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Int e = -(deg - sp.rho);
      if (a.edge(i, j)) e += b;
      if (i == j) e -= b * sp.rho;
      m[i][j] = e;
    }
  }

  // Verify idempotency, the eigenvector property, trace and row sums exactly.
  Int trace = 0, rowsum_bad = 0;
  for (int i = 0; i < n; ++i) {
    trace += m[i][i];
    Int rs = 0;
    for (int j = 0; j < n; ++j) rs += m[i][j];
    if (rs != 0) rowsum_bad = 1;
  }
  if (rowsum_bad != 0) throw SrgError("minimal_idempotent: nonzero row sum");
  if (trace != scale * sp.g) throw SrgError("minimal_idempotent: trace is not g");
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      Int mm = 0, am = 0;
      for (int k = 0; k < n; ++k) {
        mm += m[i][k] * m[k][j];
        if (a.edge(i, k)) am += m[k][j];
      }
      if (mm != scale * m[i][j]) throw SrgError("minimal_idempotent: E^2 = E fails");
      if (am != sp.sigma * m[i][j]) throw SrgError("minimal_idempotent: A E = sigma E fails");
    }
  }

  SymMatrix e(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) e.set(i, j, rat(m[i][j], scale));
  }
  return e;
}

GraphInvariants graph_invariants_direct(const AdjacencyMatrix& a) {
  const SpectralParams sp = srg_recognize(a);
  const SymMatrix e = minimal_idempotent(a, sp);
  const int g = static_cast<int>(to_ulong(sp.g, "graph_invariants_direct"));
  const std::vector<int> s = select_independent_columns(e, g);
  const EquivInvariants inv = equivalence_invariants(e.principal(s));
  return GraphInvariants{inv.discriminant, inv.hasse};
}

}  // namespace qsd
