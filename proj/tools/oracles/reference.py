"""Pure-Python reference implementation used to freeze expected values for the
C++ test suite.

Everything here favours clarity over speed: Fractions, dense lists, naive
factorization.  The C++ library must agree with these results exactly; the
test files quote outputs of freeze_values.py next to this module.
"""

from fractions import Fraction
from itertools import combinations
from math import comb, isqrt

# ---------------------------------------------------------------------------
# elementary number theory


def factorize(n):
    """Return {prime: exponent} for |n|, n != 0."""
    n = abs(n)
    assert n != 0
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def squarefree_part(n):
    """Signed square-free part of a nonzero integer or Fraction."""
    if isinstance(n, Fraction):
        n = n.numerator * n.denominator
    assert n != 0
    sign = -1 if n < 0 else 1
    out = sign
    for p, e in factorize(n).items():
        if e % 2:
            out *= p
    return out


def is_perfect_square(x):
    if isinstance(x, Fraction):
        return x >= 0 and is_perfect_square(x.numerator) and is_perfect_square(x.denominator)
    return x >= 0 and isqrt(x) ** 2 == x


def legendre(a, p):
    """Legendre symbol (a|p) for odd prime p, p not dividing a."""
    a %= p
    assert a != 0
    r = pow(a, (p - 1) // 2, p)
    return 1 if r == 1 else -1


def valuation(x, p):
    x = Fraction(x)
    assert x != 0
    v = 0
    num, den = x.numerator, x.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


def unit_part(x, p):
    """x / p^v(x) as a Fraction."""
    x = Fraction(x)
    return x / Fraction(p) ** valuation(x, p)


def _eps2(u):
    """(u-1)/2 mod 2 for a 2-adic unit (rational with odd num and den)."""
    m = (u.numerator * u.denominator) % 4
    return 0 if m == 1 else 1


def _omega2(u):
    """(u^2-1)/8 mod 2 for a 2-adic unit."""
    m = (u.numerator * u.denominator) % 8
    return 0 if m in (1, 7) else 1


def _leg_unit(u, p):
    """Legendre symbol of a p-adic unit given as a Fraction."""
    return legendre(u.numerator * u.denominator, p)


def hilbert(a, b, p):
    """Hilbert symbol (a,b)_p for nonzero rationals, p prime."""
    a, b = Fraction(a), Fraction(b)
    assert a != 0 and b != 0
    al, be = valuation(a, p), valuation(b, p)
    u, v = unit_part(a, p), unit_part(b, p)
    if p == 2:
        e = _eps2(u) * _eps2(v) + al * _omega2(v) + be * _omega2(u)
        return -1 if e % 2 else 1
    s = 1
    if (al * be) % 2 and p % 4 == 3:
        s = -s
    if be % 2:
        s *= _leg_unit(u, p)
    if al % 2:
        s *= _leg_unit(v, p)
    return s


def real_symbol(a, b):
    return -1 if a < 0 and b < 0 else 1


def relevant_primes(values):
    """{2} union odd primes dividing some square-free part."""
    ps = {2}
    for x in values:
        sf = abs(squarefree_part(x))
        for p in factorize(sf):
            ps.add(p)
    return sorted(ps)


def legendre_eq_solvable(a, b):
    """Whether a x^2 + b y^2 = z^2 has a nontrivial rational solution.

    Returns (True, None) or (False, least bad prime).
    """
    assert a != 0 and b != 0
    for p in relevant_primes([a, b]):
        if hilbert(a, b, p) == -1:
            return False, p
    return True, None


def sum_two_squares(n):
    assert n > 0
    for p in relevant_primes([-1, n]):
        if hilbert(-1, n, p) == -1:
            return False, p
    return True, None


# ---------------------------------------------------------------------------
# quadratic forms


def diagonalize(M):
    """Symmetric congruence diagonalization; returns the diagonal entries.

    M must be symmetric and nonsingular (lists of Fractions).
    """
    n = len(M)
    M = [[Fraction(x) for x in row] for row in M]
    for i in range(n):
        if M[i][i] == 0:
            k = next((k for k in range(i + 1, n) if M[k][k] != 0), None)
            if k is None:
                # all remaining diagonal entries vanish; repair with the first
                # nonzero off-diagonal entry
                r, c = next(
                    (r, c)
                    for r in range(i, n)
                    for c in range(r + 1, n)
                    if M[r][c] != 0
                )
                for j in range(n):
                    M[r][j] += M[c][j]
                for j in range(n):
                    M[j][r] += M[j][c]
                k = r
            if k != i:
                M[i], M[k] = M[k], M[i]
                for row in M:
                    row[i], row[k] = row[k], row[i]
        piv = M[i][i]
        assert piv != 0
        for r in range(i + 1, n):
            if M[r][i] != 0:
                t = M[r][i] / piv
                for j in range(n):
                    M[r][j] -= t * M[i][j]
                for j in range(n):
                    M[j][r] -= t * M[j][i]
    return [M[i][i] for i in range(n)]


def det(M):
    n = len(M)
    M = [[Fraction(x) for x in row] for row in M]
    d = Fraction(1)
    for i in range(n):
        k = next((k for k in range(i, n) if M[k][i] != 0), None)
        if k is None:
            return Fraction(0)
        if k != i:
            M[i], M[k] = M[k], M[i]
            d = -d
        d *= M[i][i]
        for r in range(i + 1, n):
            if M[r][i] != 0:
                t = M[r][i] / M[i][i]
                for j in range(i, n):
                    M[r][j] -= t * M[i][j]
    return d


def hasse_of_diag(diag, p):
    s = 1
    for i in range(len(diag)):
        for j in range(i + 1, len(diag)):
            s *= hilbert(diag[i], diag[j], p)
    return s


def hasse_aIbJ(a, b, n, p):
    """Hasse invariant of a*I_n + b*J_n (a != 0, a + b*n != 0)."""
    a, b = Fraction(a), Fraction(b)
    t = a + b * n
    s = hilbert(-1, a, p) ** (comb(n - 1, 2) % 2)
    s *= hilbert(a, t, p) ** ((n - 1) % 2)
    s *= hilbert(a * t, n, p)
    return s


def select_independent_columns(M, g):
    """Lexicographically least set of g linearly independent column indices."""
    rows = len(M)
    basis = []  # reduced rows of selected columns, as (pivot_row, vector)
    chosen = []
    for c in range(len(M[0])):
        vec = [Fraction(M[r][c]) for r in range(rows)]
        for pr, bv in basis:
            if vec[pr] != 0:
                t = vec[pr] / bv[pr]
                vec = [x - t * y for x, y in zip(vec, bv)]
        pr = next((r for r in range(rows) if vec[r] != 0), None)
        if pr is not None:
            basis.append((pr, vec))
            chosen.append(c)
            if len(chosen) == g:
                return chosen
    raise ValueError("rank deficient: got %d of %d" % (len(chosen), g))


# ---------------------------------------------------------------------------
# strongly regular graphs


def srg_recognize(A):
    """Return (rho, sigma, f, g) or the string 'conference'."""
    b = len(A)
    deg = [sum(row) for row in A]
    assert all(A[i][i] == 0 for i in range(b))
    assert all(A[i][j] == A[j][i] for i in range(b) for j in range(b))
    assert len(set(deg)) == 1, "not regular"
    a = deg[0]
    # connectivity
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for y in range(b):
            if A[x][y] and y not in seen:
                seen.add(y)
                stack.append(y)
    assert len(seen) == b, "disconnected"
    assert a < b - 1, "complete graph"
    A2 = [[sum(A[i][k] * A[k][j] for k in range(b)) for j in range(b)] for i in range(b)]
    c = d = None
    for i in range(b):
        for j in range(b):
            if i == j:
                assert A2[i][j] == a
            elif A[i][j]:
                if c is None:
                    c = A2[i][j]
                assert A2[i][j] == c, "not strongly regular"
            else:
                if d is None:
                    d = A2[i][j]
                assert A2[i][j] == d, "not strongly regular"
    disc = (c - d) ** 2 + 4 * (a - d)
    s = isqrt(disc)
    if s * s != disc:
        assert 2 * a + (b - 1) * (c - d) == 0
        return "conference"
    rho = (c - d + s) // 2
    sigma = (c - d - s) // 2
    assert rho + sigma == c - d and rho * sigma == d - a
    f, rem = divmod(-a - (b - 1) * sigma, rho - sigma)
    assert rem == 0
    g = b - 1 - f
    return rho, sigma, f, g


def minimal_idempotent(A):
    b = len(A)
    rho, sigma, f, g = srg_recognize(A)
    a = sum(A[0])
    c0 = Fraction(a - rho, b)
    E = [
        [
            (Fraction(A[i][j]) - (rho if i == j else 0) - c0) / (sigma - rho)
            for j in range(b)
        ]
        for i in range(b)
    ]
    return E, (rho, sigma, f, g)


def graph_invariants(A):
    """(delta, {p: eps_p over recorded primes}) computed from the adjacency matrix."""
    E, (rho, sigma, f, g) = minimal_idempotent(A)
    S = select_independent_columns(E, g)
    E0 = [[E[i][j] for j in S] for i in S]
    d0 = det(E0)
    delta = squarefree_part(d0)
    diag = diagonalize(E0)
    ps = relevant_primes(diag)
    eps = {p: hasse_of_diag(diag, p) for p in ps}
    return delta, {p: v for p, v in eps.items()}


def invariants_equal(a, b):
    da, ea = a
    db, eb = b
    if da != db:
        return False
    for p in set(ea) | set(eb):
        if ea.get(p, 1) != eb.get(p, 1):
            return False
    return True


# family closed forms --------------------------------------------------------


def family_invariants(kind, *args):
    if kind == "multipartite":
        m, n = args
        delta = squarefree_part(m * n ** (m - 1))
        arglist = [-1, n, m]

        def eps(p):
            return (
                hilbert(-1, n, p) ** (comb(m - 1, 2) % 2)
                * hilbert(m, n, p) ** (m % 2)
                * hilbert(-1, m, p)
            )

    elif kind == "cotriangular":
        (n,) = args
        delta = squarefree_part(n * (n - 2) ** (n - 1))
        arglist = [-1, n - 2, n]

        def eps(p):
            return (
                hilbert(-1, n - 2, p) ** (comb(n - 1, 2) % 2)
                * hilbert(n - 2, n, p) ** (n % 2)
                * hilbert(-1, n, p)
            )

    elif kind == "symplectic":
        d = args[0]
        assert len(args) == 1 or args[1] == 2
        delta = squarefree_part(2 ** (d - 1) * (2 ** d + 1))
        arglist = [2, 4 ** d - 1]

        def eps(p):
            return hilbert(2, 4 ** d - 1, p) ** (d % 2)

    elif kind == "steiner":
        n, m = args
        delta = squarefree_part(m * n * (m - 1) ** ((m * (n - 1)) % 2))
        arglist = [-1, m - 1, m * n, m * n - m + 1]

        def eps(p):
            return (
                hilbert(-1, m - 1, p) ** ((comb(m * n - m, 2) - 1) % 2)
                * hilbert(-m * n, m - 1, p) ** ((m * n - m) % 2)
                * hilbert(m * n * (m - 1), -(m * n - m + 1), p)
            )

    else:
        raise ValueError(kind)
    ps = relevant_primes(arglist)
    return delta, {p: eps(p) for p in ps}


# graph constructions --------------------------------------------------------


def multipartite_graph(m, n):
    b = m * n
    return [[1 if i // n != j // n else 0 for j in range(b)] for i in range(b)]


def triangular_graph(m):
    pairs = list(combinations(range(m), 2))
    return [
        [1 if x != y and set(x) & set(y) else 0 for y in pairs] for x in pairs
    ]


def complement(A):
    b = len(A)
    return [[1 if i != j and not A[i][j] else 0 for j in range(b)] for i in range(b)]


def cotriangular_graph(n):
    return complement(triangular_graph(n))


def symplectic_graph(d):
    """Nonzero vectors of F_2^{2d}; x ~ y iff sum x_{2i} y_{2i+1} + x_{2i+1} y_{2i} = 1."""
    vecs = list(range(1, 4 ** d))

    def form(x, y):
        s = 0
        for i in range(d):
            s += ((x >> (2 * i)) & 1) * ((y >> (2 * i + 1)) & 1)
            s += ((x >> (2 * i + 1)) & 1) * ((y >> (2 * i)) & 1)
        return s % 2

    return [[form(x, y) if x != y else 0 for y in vecs] for x in vecs]


def paley_graph(q):
    qr = {pow(x, 2, q) for x in range(1, q)}
    return [[1 if (i - j) % q in qr else 0 for j in range(q)] for i in range(q)]


def block_graph(blocks):
    """Steiner block graph: blocks adjacent iff they share a point."""
    bs = [frozenset(b) for b in blocks]
    return [
        [1 if x is not y and len(x & y) == 1 else 0 for y in bs] for x in bs
    ]


def pairs_design(m):
    return [set(p) for p in combinations(range(m), 2)]


def affine_plane_prime(q):
    """Lines of AG(2,q), q prime, points numbered x*q + y."""
    lines = []
    for s in range(q):
        for c in range(q):
            lines.append({x * q + (s * x + c) % q for x in range(q)})
    for c in range(q):
        lines.append({c * q + y for y in range(q)})
    return lines


def pg_point_line_design(dim, q):
    """Points vs lines of the projective space of given dimension over F_q, q prime."""
    def normalize(v):
        lead = next(x for x in v if x)
        inv = pow(lead, q - 2, q)
        return tuple((x * inv) % q for x in v)

    pts = sorted(
        {
            normalize(
                tuple((i // q ** k) % q for k in range(dim, -1, -1))
            )
            for i in range(1, q ** (dim + 1))
        }
    )
    index = {p: i for i, p in enumerate(pts)}
    lines = set()
    for i, p in enumerate(pts):
        for r in pts[i + 1:]:
            line = set()
            for s in range(q):
                line.add(index[normalize(tuple((x + s * y) % q for x, y in zip(p, r)))])
            line.add(index[r])
            lines.add(frozenset(line))
    return [set(l) for l in sorted(lines, key=sorted)]


def sts13():
    base = [(0, 1, 4), (0, 2, 7)]
    return [{(x + s) % 13 for x in blk} for blk in base for s in range(13)]


def sts19():
    base = [(0, 1, 4), (0, 2, 9), (0, 5, 11)]
    return [{(x + s) % 19 for x in blk} for blk in base for s in range(19)]


GF4_MUL = {  # elements 0,1,2,3 with 2 = x, 3 = x+1 over x^2+x+1
    (0, 0): 0, (0, 1): 0, (0, 2): 0, (0, 3): 0,
    (1, 0): 0, (1, 1): 1, (1, 2): 2, (1, 3): 3,
    (2, 0): 0, (2, 1): 2, (2, 2): 3, (2, 3): 1,
    (3, 0): 0, (3, 1): 3, (3, 2): 1, (3, 3): 2,
}


def affine_plane_4():
    """Lines of AG(2,4), points numbered x*4 + y."""
    add = lambda a, b: a ^ b
    lines = []
    for s in range(4):
        for c in range(4):
            lines.append({x * 4 + add(GF4_MUL[(s, x)], c) for x in range(4)})
    for c in range(4):
        lines.append({c * 4 + y for y in range(4)})
    return lines


# ---------------------------------------------------------------------------
# designs


def family_spectral(kind, *args):
    if kind == "multipartite":
        m, n = args
        return (0, -n, m * (n - 1), m - 1)
    if kind == "cotriangular":
        (n,) = args
        return (1, -(n - 3), n * (n - 3) // 2, n - 1)
    if kind == "symplectic":
        d, q = args
        r = q ** (d - 1)
        f = q * (q ** (d - 1) - 1) * (q ** d + 1) // (2 * (q - 1))
        g = q * (q ** (d - 1) + 1) * (q ** d - 1) // (2 * (q - 1))
        return (r, -r, f, g)
    if kind == "steiner":
        n, m = args
        assert (m * (m - 1)) % n == 0 and 2 <= n < m
        return (m - n - 1, -n, m * (n - 1), m * (m - n + 1) - 1 - m * (m - 1) // n)
    if kind == "triangular":
        (m,) = args
        return (m - 4, -2, m - 1, comb(m - 1, 2) - 1)
    raise ValueError(kind)


def feasibility(sp, mu):
    """Return (ok, failed_labels)."""
    rho, sigma, f, g = sp
    fails = []
    lo = Fraction(-(f + 1) * (f * rho + (g + 1) * sigma), (f + g + 1) * sigma ** 2)
    hi = Fraction(-(f + 1), 2 * sigma)
    if not (lo <= mu <= hi):
        fails.append("b")
    if (g * (rho - sigma) * mu) % (f + 1):
        fails.append("c")
    if (f * g * (rho - sigma) * mu) % (f + g + 1):
        fails.append("d")
    delta = (f + g + 1) * ((f + g + 1) - Fraction(4 * f * (rho - sigma) * mu, f + 1))
    if not is_perfect_square(delta):
        fails.append("e")
    return not fails, fails


def derive_params(sp, mu):
    """Both members of the complementary pair, smaller k first.

    Returns two dicts with keys b v r k lambda lambda1 lambda2.
    """
    rho, sigma, f, g = sp
    b, v = f + g + 1, f + 1
    nu = (rho - sigma) * mu
    a1 = v + 2 * sigma * mu
    b1 = sigma ** 2 * mu ** 2 + Fraction(v * (f * rho + (g + 1) * sigma) * mu, b)
    disc = Fraction(a1) ** 2 - 4 * b1
    assert is_perfect_square(disc), "infeasible input"
    s = Fraction(isqrt(disc.numerator), isqrt(disc.denominator))
    out = []
    for l1 in ((a1 - s) / 2, (a1 + s) / 2):
        assert l1.denominator == 1
        l1 = int(l1)
        lam = Fraction(b * l1 - g * sigma * mu, v) - rho * mu
        assert lam.denominator == 1
        lam = int(lam)
        k = l1 - sigma * mu
        r = lam + nu
        p = dict(b=b, v=v, r=r, k=k)
        p["lambda"] = lam
        p["lambda1"] = l1
        p["lambda2"] = l1 + mu
        assert b * k == r * v and r * (k - 1) == lam * (v - 1)
        assert 0 <= l1 and 0 <= lam and k >= 1
        out.append(p)
    assert out[0]["k"] + out[1]["k"] == v
    return out


def main_test(sp, mu, inv):
    """Square-class and local conditions against invariants (delta, eps map)."""
    rho, sigma, f, g = sp
    nu = (rho - sigma) * mu
    delta, eps = inv
    fails = []
    lhs = squarefree_part(nu) if f % 2 else 1
    rhs = squarefree_part(Fraction((f + 1) * (f + g + 1) * delta))
    if lhs != rhs:
        fails.append(("a", None))
    ps = sorted(set(relevant_primes([nu, f + 1, f + g + 1, delta])) | set(eps))
    for p in ps:
        l = hilbert(-1, nu, p) ** (comb(f, 2) % 2) * hilbert(nu, f + 1, p)
        r = (
            hilbert(f + g + 1, -(f + 1), p)
            * hilbert(-(f + 1) * (f + g + 1), delta, p)
            * eps.get(p, 1)
        )
        if l != r:
            fails.append(("b", p))
    return not fails, fails


def schutzenberger(v, nu):
    assert v % 2 == 0
    return is_perfect_square(nu)


def chowla_ryser(v, lam, nu):
    assert v % 2 == 1
    return legendre_eq_solvable(nu, (-1) ** ((v - 1) // 2) * lam)


def cor_4_3(m, n, mu):
    """Multipartite exclusion clauses; returns (ok, failed labels)."""
    fails = []
    v = m * n - m + 1

    def need_square(label, x):
        if not is_perfect_square(x):
            fails.append((label, None))

    def need_sum2sq(label, x):
        ok, p = sum_two_squares(x)
        if not ok:
            fails.append((label, p))

    def need_solvable(label, a, b):
        ok, p = legendre_eq_solvable(a, b)
        if not ok:
            fails.append((label, p))

    if m % 2 == 0:
        need_square("a1", v)
    elif n % 2 == 0:
        need_square("a2", v * mu)
    else:
        need_square("a3", n * v)
    if m % 4 == 2:
        need_sum2sq("b1", n)
    elif m % 4 == 3 and n % 4 == 2:
        need_sum2sq("b2", n)
    elif m % 4 == 3 and n % 4 == 0:
        need_sum2sq("b3", v)
    elif m % 4 == 1 and n % 4 == 2:
        need_sum2sq("b4", n * v)
    elif m % 2 == 1 and n % 2 == 1 and m % 4 != n % 4:
        need_solvable("b5", mu, (-1) ** ((n - 1) // 2) * n)
    elif m % 4 == 1 and n % 4 == 1:
        need_solvable("b6", n, -mu)
    elif m % 4 == 3 and n % 4 == 3:
        for p in relevant_primes([-mu, -n]):
            want = -1 if p == 2 else 1
            if hilbert(-mu, -n, p) != want:
                fails.append(("b7", p))
    return not fails, fails


def cor_4_5(n, mu):
    fails = []

    def need_square(label, x):
        if not is_perfect_square(x):
            fails.append((label, None))

    if n % 4 == 1:
        need_square("a1", mu)
    elif n % 4 == 2:
        need_square("a2", (n - 2) * mu)
    elif n % 4 == 3:
        need_square("a3", n - 2)
    if n % 4 == 0:
        s = (-1) ** (n // 4 % 2)
        for p in relevant_primes([mu, s * comb(n - 1, 2), n - 2, 2]):
            if hilbert(mu, s * comb(n - 1, 2), p) != hilbert(n - 2, s * 2, p):
                fails.append(("b1", p))
                break
    elif n % 4 == 1:
        ok, p = legendre_eq_solvable(n - 2, (-1) ** ((n - 1) // 4 % 2) * 2)
        if not ok:
            fails.append(("b2", p))
    elif n % 4 == 2:
        ok, p = sum_two_squares(n - 1)
        if not ok:
            fails.append(("b3", p))
    else:
        ok, p = legendre_eq_solvable(mu, (-1) ** ((n - 3) // 4 % 2) * comb(n - 1, 2))
        if not ok:
            fails.append(("b4", p))
    return not fails, fails


def cor_4_6(d, mu):
    return is_perfect_square(2 ** d * mu)


def cor_4_7(n, m, mu):
    fails = []
    if m % 2 == 1 and n % 2 == 0 and not is_perfect_square(mu):
        fails.append(("a", None))
    v = m * n - m + 1
    ok, p = legendre_eq_solvable(mu, (-1) ** (comb(m * n - m, 2) % 2) * v)
    if not ok:
        fails.append(("b", p))
    return not fails, fails


def enum_steiner(n, mu, m_max):
    """Feasible m values for the Steiner family at defect mu."""
    assert mu >= 1
    if mu == 1:
        return [m for m in range(n + 1, m_max + 1) if (m * (m - 1)) % n == 0]
    if n == 2:
        return []  # triangular block graphs carry no defect >= 2
    out = []
    D = n * n * mu * (mu - 1)
    for u in range(1, isqrt(D) + 1):
        if D % u:
            continue
        w = D // u
        s = u + w + 2 * n * mu - 1  # = m(n-1)
        m, rem = divmod(s, n - 1)
        if rem or m <= n or m > m_max or (m * (m - 1)) % n:
            continue
        ok, _ = feasibility(family_spectral("steiner", n, m), mu)
        if ok:
            out.append(m)
    return sorted(set(out))


def table1(n_max=6, mu_max=4, v_cap=500):
    rows = []
    for n in range(3, n_max + 1):
        m_max = (v_cap - 1) // (n - 1)
        for mu in range(2, mu_max + 1):
            for m in enum_steiner(n, mu, m_max):
                v = m * n - m + 1
                if v > v_cap:
                    continue
                d = derive_params(family_spectral("steiner", n, m), mu)[0]
                ok, fails = cor_4_7(n, m, mu)
                rows.append((n, m, v, d["k"], d["lambda"], d["lambda1"], d["lambda2"],
                             "open" if ok else "no:" + ",".join(
                                 "%s@%s" % (l, p) for l, p in fails)))
    rows.sort(key=lambda r: (r[0], r[1], r[6] - r[5]))
    return rows


def enum_multipartite(amax, smax, tmax):
    """Admissible quadruples (alpha, l, l*, t) in lexicographic order."""
    out = []
    for a in range(1, amax + 1):
        prod = a * (a - 1)
        for l in range(0, smax + 1):
            if l == 0:
                lstars = [ls for ls in range(0, smax + 1)] if prod == 0 else []
            elif prod % l == 0 and prod // l <= smax:
                lstars = [prod // l]
            else:
                lstars = []
            for ls in lstars:
                if l + ls > smax:
                    continue
                for t in range(0, tmax + 1):
                    if ((l + ls) ** 2 * t) % a:
                        continue
                    out.append((a, l, ls, t))
    return out


def quadruple_params(a, l, ls, t):
    n = l + ls + 2 * a
    ta = Fraction(t, a)
    m = ta * n * n + n + 1
    mu = (n - 1) * t + a
    s = (n - 1) * ta + 1
    p = dict(
        n=n,
        m=int(m),
        mu=mu,
        b=int(m) * n,
        v=int(n * n * s),
        r=int(m * (a + l)),
        k=int(n * s * (a + l)),
        lam=int((ta * n + 1) * (a + l) ** 2 + l),
        lam1=int(n * s * l),
        lam2=int(s * (a + l) ** 2),
    )
    return p


def enum_cotriangular(mu, bound):
    """Ordered pairs (l, l*) with l*l = 4 mu (mu-1), l + l* <= bound."""
    out = []
    D = 4 * mu * (mu - 1)
    if D == 0:
        for l in range(0, bound + 1):
            out.append((0, l))
            if l:
                out.append((l, 0))
        return sorted(out)
    for l in range(1, bound + 1):
        if D % l == 0 and l + D // l <= bound:
            out.append((l, D // l))
    return sorted(out)


def cotriangular_params(l, ls, mu):
    n = 4 * mu + 1 + l + ls
    h = Fraction(n, 2)
    return dict(
        n=n,
        b=comb(n, 2),
        v=comb(n - 1, 2),
        r=int(h * (l + 2 * mu)),
        k=int((h - 1) * (l + 2 * mu)),
        lam=int(h * l + 2 * mu),
        lam1=int((h - 1) * l) + mu,
        lam2=int((h - 1) * l) + 2 * mu,
    )


def check_symplectic(d, q):
    """(feasible, mu or None, failed labels)."""
    fails = []
    if (q * (q ** (d - 1) - 1)) % 8 != 6:
        fails.append("congruence")
    x = ((q ** d - 1) // (q - 1)) ** 2 - q ** d * ((q ** (d - 1) - 1) // (q - 1))
    if not is_perfect_square(x):
        fails.append("square")
    mu = (q ** d - q + 2) // 8 if not fails else None
    return not fails, mu, fails
