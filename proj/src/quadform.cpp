#include "qsd/quadform.hpp"

#include <algorithm>
#include <set>

namespace qsd {

namespace {

std::vector<std::vector<Rat>> dense_copy(const SymMatrix& a) {
  const int n = a.order();
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = a.at(i, j);
  }
  return m;
}

void sym_swap(std::vector<std::vector<Rat>>& m, int i, int j) {
  if (i == j) return;
  std::swap(m[i], m[j]);
  for (auto& row : m) std::swap(row[i], row[j]);
}

// Row i += row j followed by column i += column j.
void sym_add(std::vector<std::vector<Rat>>& m, int i, int j) {
  const int n = static_cast<int>(m.size());
  for (int c = 0; c < n; ++c) m[i][c] += m[j][c];
  for (int r = 0; r < n; ++r) m[r][i] += m[r][j];
}

void check_indices(const std::vector<int>& idx, int n, const char* who) {
  int prev = -1;
  for (int i : idx) {
    if (i <= prev || i >= n) {
      throw DomainError(std::string(who) + ": index set must be sorted, duplicate-free and in range");
    }
    prev = i;
  }
}

Rat pow_rat(const Rat& x, unsigned long e) {
  Rat acc(1);
  Rat base = x;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

}  // namespace

SymMatrix::SymMatrix(int n) : n_(n), e_(static_cast<size_t>(n) * n, Rat(0)) {
  if (n < 0) throw DomainError("SymMatrix: negative order");
}

SymMatrix SymMatrix::from_rows(const std::vector<std::vector<Rat>>& rows) {
  const int n = static_cast<int>(rows.size());
  SymMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) {
      throw DomainError("SymMatrix::from_rows: matrix is not square");
    }
    for (int j = 0; j < n; ++j) {
      if (j < i && rows[i][j] != rows[j][i]) {
        throw DomainError("SymMatrix::from_rows: matrix is not symmetric");
      }
      m.e_[static_cast<size_t>(i) * n + j] = rows[i][j];
    }
  }
  return m;
}

void SymMatrix::set(int i, int j, const Rat& value) {
  e_[static_cast<size_t>(i) * n_ + j] = value;
  e_[static_cast<size_t>(j) * n_ + i] = value;
}

SymMatrix SymMatrix::principal(const std::vector<int>& idx) const {
  check_indices(idx, n_, "SymMatrix::principal");
  const int k = static_cast<int>(idx.size());
  SymMatrix sub(k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j <= i; ++j) sub.set(i, j, at(idx[i], idx[j]));
  }
  return sub;
}

Rat det(const SymMatrix& a) {
  const int n = a.order();
  if (n == 0) return Rat(1);
  // Lift to integers over a common denominator, then run fraction-free
  // Bareiss elimination with row pivoting.
  Int lcm = 1;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), a.at(i, j).get_den().get_mpz_t());
    }
  }
  std::vector<std::vector<Int>> m(n, std::vector<Int>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Rat& e = a.at(i, j);
      m[i][j] = e.get_num() * (lcm / e.get_den());
    }
  }
  int sign = 1;
  Int prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      int r = -1;
      for (int i = k + 1; i < n; ++i) {
        if (m[i][k] != 0) {
          r = i;
          break;
        }
      }
      if (r < 0) return Rat(0);
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  Int scale;
  mpz_pow_ui(scale.get_mpz_t(), lcm.get_mpz_t(), static_cast<unsigned long>(n));
  Rat d = rat(m[n - 1][n - 1], scale);
  return sign < 0 ? Rat(-d) : d;
}

std::vector<Rat> diagonalize(const SymMatrix& a) {
  const int n = a.order();
  if (n == 0) return {};
  if (det(a) == 0) throw SingularMatrixError("diagonalize: singular matrix");
  auto m = dense_copy(a);
  std::vector<Rat> diag;
  diag.reserve(n);
  for (int i = 0; i < n; ++i) {
    int piv = -1;
    for (int r = i; r < n; ++r) {
      if (m[r][r] != 0) {
        piv = r;
        break;
      }
    }
    if (piv >= 0) {
      sym_swap(m, i, piv);
    } else {
      // Remaining diagonal is all zero; pull in the first nonzero
      // off-diagonal entry (row-major scan of the trailing block), move its
      // row to position i and fold in its column, which makes the new
      // diagonal entry twice that off-diagonal value.
      int pr = -1, pc = -1;
      for (int r = i; r < n && pr < 0; ++r) {
        for (int c = r + 1; c < n; ++c) {
          if (m[r][c] != 0) {
            pr = r;
            pc = c;
            break;
          }
        }
      }
      if (pr < 0) throw SingularMatrixError("diagonalize: singular trailing block");
      sym_swap(m, i, pr);
      sym_add(m, i, pc);
    }
    const Rat d = m[i][i];
    for (int r = i + 1; r < n; ++r) {
      if (m[r][i] == 0) continue;
      const Rat f = m[r][i] / d;
      for (int c = 0; c < n; ++c) m[r][c] -= f * m[i][c];
      for (int c = 0; c < n; ++c) m[c][r] -= f * m[c][i];
    }
    diag.push_back(d);
  }
  return diag;
}

int hasse_from_diagonal(const std::vector<Rat>& diag, const Int& p) {
  int s = 1;
  const int n = static_cast<int>(diag.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) s *= hilbert_symbol(diag[i], diag[j], p);
  }
  return s;
}

int hasse_invariant(const SymMatrix& a, const Int& p) {
  return hasse_from_diagonal(diagonalize(a), p);
}

Rat det_aIbJ(const Rat& a, const Rat& b, const Int& n) {
  if (n < 1 || !n.fits_ulong_p()) throw DomainError("det_aIbJ: bad order " + to_string(n));
  const unsigned long un = n.get_ui();
  return pow_rat(a, un - 1) * (a + b * n);
}

int hasse_aIbJ(const Rat& a, const Rat& b, const Int& n, const Int& p) {
  if (n < 1) throw DomainError("hasse_aIbJ: bad order " + to_string(n));
  const Rat edge = a + b * n;
  if (a == 0 || edge == 0) throw DomainError("hasse_aIbJ: singular form");
  int s = 1;
  if (choose2_mod2(n - 1) == 1) s *= hilbert_symbol(Rat(-1), a, p);
  if (mpz_even_p(n.get_mpz_t())) s *= hilbert_symbol(a, edge, p);  // exponent n - 1
  s *= hilbert_symbol(a * edge, Rat(n), p);
  return s;
}

SymMatrix schur_complement(const SymMatrix& a, const std::vector<int>& s) {
  const int n = a.order();
  check_indices(s, n, "schur_complement");
  const int k = static_cast<int>(s.size());
  if (k == 0 || k == n) throw DomainError("schur_complement: index set must be proper and nonempty");
  std::vector<int> t;
  {
    std::set<int> in_s(s.begin(), s.end());
    for (int i = 0; i < n; ++i) {
      if (!in_s.count(i)) t.push_back(i);
    }
  }
  // Solve B X = A[S, T] by Gauss-Jordan on an augmented system.
  const int w = static_cast<int>(t.size());
  std::vector<std::vector<Rat>> aug(k, std::vector<Rat>(k + w));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) aug[i][j] = a.at(s[i], s[j]);
    for (int j = 0; j < w; ++j) aug[i][k + j] = a.at(s[i], t[j]);
  }
  for (int col = 0; col < k; ++col) {
    int piv = -1;
    for (int r = col; r < k; ++r) {
      if (aug[r][col] != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) throw SingularMatrixError("schur_complement: section is singular");
    std::swap(aug[col], aug[piv]);
    const Rat d = aug[col][col];
    for (int j = col; j < k + w; ++j) aug[col][j] /= d;
    for (int r = 0; r < k; ++r) {
      if (r == col || aug[r][col] == 0) continue;
      const Rat f = aug[r][col];
      for (int j = col; j < k + w; ++j) aug[r][j] -= f * aug[col][j];
    }
  }
  SymMatrix out(w);
  for (int i = 0; i < w; ++i) {
    for (int j = 0; j <= i; ++j) {
      Rat acc = a.at(t[i], t[j]);
      for (int q = 0; q < k; ++q) acc -= a.at(t[i], s[q]) * aug[q][k + j];
      out.set(i, j, acc);
    }
  }
  return out;
}

int hasse_combine(int hasse_b, int hasse_schur, const Rat& det_b, const Rat& det_schur,
                  const Int& p) {
  return hasse_b * hasse_schur * hilbert_symbol(det_b, det_schur, p);
}

int EquivInvariants::hasse_at(const Int& p) const {
  const auto it = hasse.find(p);
  return it == hasse.end() ? 1 : it->second;
}

bool EquivInvariants::operator==(const EquivInvariants& other) const {
  if (rank != other.rank || positive != other.positive || negative != other.negative ||
      !(discriminant == other.discriminant)) {
    return false;
  }
  std::set<Int> keys;
  for (const auto& [p, s] : hasse) keys.insert(p);
  for (const auto& [p, s] : other.hasse) keys.insert(p);
  for (const Int& p : keys) {
    if (hasse_at(p) != other.hasse_at(p)) return false;
  }
  return true;
}

EquivInvariants equivalence_invariants(const SymMatrix& a) {
  const std::vector<Rat> diag = diagonalize(a);
  EquivInvariants inv;
  inv.rank = static_cast<int>(diag.size());
  inv.discriminant = SquareClass{};
  for (const Rat& d : diag) {
    (d > 0 ? inv.positive : inv.negative) += 1;
    inv.discriminant = inv.discriminant * square_class(d);
  }
  for (const Int& p : relevant_primes(diag)) {
    inv.hasse[p] = hasse_from_diagonal(diag, p);
  }
  return inv;
}

std::vector<int> select_independent_columns(const std::vector<std::vector<Rat>>& rows, int count) {
  const int nrows = static_cast<int>(rows.size());
  const int ncols = nrows == 0 ? 0 : static_cast<int>(rows[0].size());
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != ncols) {
      throw DomainError("select_independent_columns: ragged rows");
    }
  }
  if (count < 0 || count > ncols) throw DomainError("select_independent_columns: bad count");
  std::vector<int> chosen;
  // Reduced spanning vectors of the chosen columns, each with its pivot row.
  std::vector<std::pair<int, std::vector<Rat>>> basis;
  for (int j = 0; j < ncols && static_cast<int>(chosen.size()) < count; ++j) {
    std::vector<Rat> col(nrows);
    for (int i = 0; i < nrows; ++i) col[i] = rows[i][j];
    for (const auto& [piv, vec] : basis) {
      if (col[piv] == 0) continue;
      const Rat f = col[piv] / vec[piv];
      for (int i = 0; i < nrows; ++i) col[i] -= f * vec[i];
    }
    int piv = -1;
    for (int i = 0; i < nrows; ++i) {
      if (col[i] != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    chosen.push_back(j);
    basis.emplace_back(piv, std::move(col));
  }
  if (static_cast<int>(chosen.size()) < count) {
    throw DomainError("select_independent_columns: rank " + std::to_string(chosen.size()) +
                      " below requested " + std::to_string(count));
  }
  return chosen;
}

std::vector<int> select_independent_columns(const SymMatrix& m, int count) {
  const int n = m.order();
  std::vector<std::vector<Rat>> rows(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) rows[i][j] = m.at(i, j);
  }
  return select_independent_columns(rows, count);
}

}  // namespace qsd
