#include "support/graphgen.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace qsd::testgen {

namespace {

std::vector<std::pair<int, int>> pair_list(int m) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) pairs.emplace_back(i, j);
  }
  return pairs;
}

}  // namespace

AdjacencyMatrix multipartite_graph(int m, int n) {
  AdjacencyMatrix a(m * n);
  for (int i = 0; i < m * n; ++i) {
    for (int j = i + 1; j < m * n; ++j) {
      if (i / n != j / n) a.add_edge(i, j);
    }
  }
  return a;
}

AdjacencyMatrix triangular_graph(int m) {
  const auto pairs = pair_list(m);
  const int b = static_cast<int>(pairs.size());
  AdjacencyMatrix a(b);
  for (int x = 0; x < b; ++x) {
    for (int y = x + 1; y < b; ++y) {
      const auto& [p, q] = pairs[x];
      const auto& [r, s] = pairs[y];
      if (p == r || p == s || q == r || q == s) a.add_edge(x, y);
    }
  }
  return a;
}

AdjacencyMatrix cotriangular_graph(int n) { return complement_graph(triangular_graph(n)); }

AdjacencyMatrix symplectic_graph(int d) {
  const int count = (1 << (2 * d)) - 1;
  AdjacencyMatrix a(count);
  const auto form = [d](int x, int y) {
    int s = 0;
    for (int i = 0; i < d; ++i) {
      s ^= ((x >> (2 * i)) & 1) & ((y >> (2 * i + 1)) & 1);
      s ^= ((x >> (2 * i + 1)) & 1) & ((y >> (2 * i)) & 1);
    }
    return s;
  };
  for (int x = 1; x <= count; ++x) {
    for (int y = x + 1; y <= count; ++y) {
      if (form(x, y)) a.add_edge(x - 1, y - 1);
    }
  }
  return a;
}

AdjacencyMatrix paley_graph(int q) {
  if (q < 5 || q % 4 != 1) throw std::invalid_argument("paley_graph: need prime q = 1 mod 4");
  std::set<int> qr;
  for (int x = 1; x < q; ++x) qr.insert(x * x % q);
  AdjacencyMatrix a(q);
  for (int i = 0; i < q; ++i) {
    for (int j = i + 1; j < q; ++j) {
      if (qr.count((j - i) % q)) a.add_edge(i, j);
    }
  }
  return a;
}

AdjacencyMatrix paley9() {
  // Over GF(9) the nonzero squares are {1, -1, i, -i}, so vertices (a, b) of
  // the 3x3 grid are adjacent exactly when they share a row or a column.
  AdjacencyMatrix a(9);
  for (int i = 0; i < 9; ++i) {
    for (int j = i + 1; j < 9; ++j) {
      if (i / 3 == j / 3 || i % 3 == j % 3) a.add_edge(i, j);
    }
  }
  return a;
}

AdjacencyMatrix path_graph(int n) {
  AdjacencyMatrix a(n);
  for (int i = 0; i + 1 < n; ++i) a.add_edge(i, i + 1);
  return a;
}

AdjacencyMatrix complete_graph(int n) {
  AdjacencyMatrix a(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) a.add_edge(i, j);
  }
  return a;
}

AdjacencyMatrix complement_graph(const AdjacencyMatrix& a) {
  const int n = a.order();
  AdjacencyMatrix c(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!a.edge(i, j)) c.add_edge(i, j);
    }
  }
  return c;
}

AdjacencyMatrix block_graph(const Design& d) {
  const int b = static_cast<int>(d.blocks.size());
  std::vector<std::set<int>> sets;
  sets.reserve(d.blocks.size());
  for (const auto& blk : d.blocks) sets.emplace_back(blk.begin(), blk.end());
  AdjacencyMatrix a(b);
  for (int x = 0; x < b; ++x) {
    for (int y = x + 1; y < b; ++y) {
      int common = 0;
      for (int p : sets[x]) common += sets[y].count(p);
      if (common == 1) a.add_edge(x, y);
    }
  }
  return a;
}

Design pairs_design(int m) {
  Design d;
  d.v = m;
  for (const auto& [i, j] : pair_list(m)) d.blocks.push_back({i, j});
  return d;
}

Design affine_plane_prime(int q) {
  Design d;
  d.v = q * q;  // point (x, y) is x*q + y
  for (int s = 0; s < q; ++s) {
    for (int c = 0; c < q; ++c) {
      std::vector<int> line;
      for (int x = 0; x < q; ++x) line.push_back(x * q + (s * x + c) % q);
      d.blocks.push_back(std::move(line));
    }
  }
  for (int c = 0; c < q; ++c) {
    std::vector<int> line;
    for (int y = 0; y < q; ++y) line.push_back(c * q + y);
    d.blocks.push_back(std::move(line));
  }
  return d;
}

Design affine_plane4() {
  // GF(4) as {0, 1, x, x+1} with x^2 = x + 1; addition is xor.
  static const int mul[4][4] = {
      {0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
  Design d;
  d.v = 16;
  for (int s = 0; s < 4; ++s) {
    for (int c = 0; c < 4; ++c) {
      std::vector<int> line;
      for (int x = 0; x < 4; ++x) line.push_back(x * 4 + (mul[s][x] ^ c));
      d.blocks.push_back(std::move(line));
    }
  }
  for (int c = 0; c < 4; ++c) {
    std::vector<int> line;
    for (int y = 0; y < 4; ++y) line.push_back(c * 4 + y);
    d.blocks.push_back(std::move(line));
  }
  return d;
}

namespace {

Design cyclic_triples(int v, const std::vector<std::vector<int>>& base) {
  Design d;
  d.v = v;
  for (const auto& blk : base) {
    for (int s = 0; s < v; ++s) {
      std::vector<int> b;
      for (int x : blk) b.push_back((x + s) % v);
      d.blocks.push_back(std::move(b));
    }
  }
  return d;
}

}  // namespace

Design sts13() { return cyclic_triples(13, {{0, 1, 4}, {0, 2, 7}}); }

Design sts19() { return cyclic_triples(19, {{0, 1, 4}, {0, 2, 9}, {0, 5, 11}}); }

Design pg_lines(int dim, int q) {
  using Vec = std::vector<int>;
  const auto normalize = [q](Vec v) {
    int lead = 0;
    for (int x : v) {
      if (x) {
        lead = x;
        break;
      }
    }
    // lead^(q-2) is the inverse mod prime q
    int inv = 1;
    for (int e = 0; e < q - 2; ++e) inv = inv * lead % q;
    for (int& x : v) x = x * inv % q;
    return v;
  };

  std::set<Vec> pt_set;
  int total = 1;
  for (int k = 0; k <= dim; ++k) total *= q;
  for (int i = 1; i < total; ++i) {
    Vec v(dim + 1);
    int rest = i;
    for (int k = dim; k >= 0; --k) {
      int p = 1;
      for (int e = 0; e < k; ++e) p *= q;
      v[static_cast<size_t>(dim - k)] = rest / p;
      rest %= p;
    }
    pt_set.insert(normalize(v));
  }
  const std::vector<Vec> pts(pt_set.begin(), pt_set.end());
  std::map<Vec, int> index;
  for (size_t i = 0; i < pts.size(); ++i) index[pts[i]] = static_cast<int>(i);

  std::set<std::vector<int>> lines;
  for (size_t i = 0; i < pts.size(); ++i) {
    for (size_t j = i + 1; j < pts.size(); ++j) {
      std::set<int> line{index.at(pts[j])};
      for (int s = 0; s < q; ++s) {
        Vec v(dim + 1);
        for (size_t c = 0; c < v.size(); ++c) v[c] = (pts[i][c] + s * pts[j][c]) % q;
        line.insert(index.at(normalize(v)));
      }
      lines.insert(std::vector<int>(line.begin(), line.end()));
    }
  }
  Design d;
  d.v = static_cast<int>(pts.size());
  for (const auto& line : lines) d.blocks.push_back(line);
  return d;
}

bool is_2design(const Design& d, int k, int lambda) {
  std::map<std::pair<int, int>, int> cover;
  for (const auto& blk : d.blocks) {
    if (static_cast<int>(blk.size()) != k) return false;
    for (size_t i = 0; i < blk.size(); ++i) {
      for (size_t j = i + 1; j < blk.size(); ++j) {
        cover[{std::min(blk[i], blk[j]), std::max(blk[i], blk[j])}]++;
      }
    }
  }
  for (int i = 0; i < d.v; ++i) {
    for (int j = i + 1; j < d.v; ++j) {
      auto it = cover.find({i, j});
      if (it == cover.end() || it->second != lambda) return false;
    }
  }
  return true;
}

std::string to_matrix_text(const AdjacencyMatrix& a) {
  std::string out;
  for (int i = 0; i < a.order(); ++i) {
    for (int j = 0; j < a.order(); ++j) {
      if (j) out += ' ';
      out += a.edge(i, j) ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

}  // namespace qsd::testgen
