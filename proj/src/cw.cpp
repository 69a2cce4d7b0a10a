#include "ahss/cw.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace ahss {

ValidationReport validate(const CWComplex& x) {
  ValidationReport rep;
  if (x.dim < -1) return {false, x.dim, "dimension below -1"};
  if (x.dim == -1) {
    if (!x.cells.empty() || !x.boundaries.empty())
      return {false, -1, "empty complex must carry no cells"};
    return rep;
  }
  if (static_cast<int>(x.cells.size()) != x.dim + 1)
    return {false, 0, "cell count list does not match dimension"};
  if (static_cast<int>(x.boundaries.size()) != x.dim)
    return {false, 0, "boundary list does not match dimension"};
  for (long c : x.cells)
    if (c < 0) return {false, 0, "negative cell count"};
  for (int k = 1; k <= x.dim; ++k) {
    const IntMat& b = x.boundaries[static_cast<size_t>(k - 1)];
    if (b.rows() != x.cell_count(k - 1) || b.cols() != x.cell_count(k)) {
      std::ostringstream os;
      os << "boundary " << k << " has shape " << b.rows() << "x" << b.cols() << ", expected "
         << x.cell_count(k - 1) << "x" << x.cell_count(k);
      return {false, k, os.str()};
    }
  }
  for (int k = 2; k <= x.dim; ++k) {
    IntMat prod = x.boundary(k - 1) * x.boundary(k);
    for (Index j = 0; j < prod.cols(); ++j)
      for (Index i = 0; i < prod.rows(); ++i)
        if (!prod(i, j).is_zero()) {
          std::ostringstream os;
          os << "boundary composite nonzero in degree " << k << " at entry (" << i << ", " << j
             << ") = " << prod(i, j).str();
          return {false, k, os.str()};
        }
  }
  return rep;
}

int clamp_skeleton(const CWComplex& x, int p) {
  return std::min(std::max(p, -1), x.dim);
}

CWComplex skeleton(const CWComplex& x, int p) {
  p = clamp_skeleton(x, p);
  if (p == x.dim) return x;
  if (p < 0) return empty_complex();
  CWComplex s;
  s.dim = p;
  s.cells.assign(x.cells.begin(), x.cells.begin() + p + 1);
  s.boundaries.assign(x.boundaries.begin(), x.boundaries.begin() + p);
  return s;
}

long euler_characteristic(const CWComplex& x) {
  long chi = 0;
  for (int k = 0; k <= x.dim; ++k) chi += (k % 2 == 0 ? 1 : -1) * x.cell_count(k);
  return chi;
}

CWComplex empty_complex() { return CWComplex{}; }

CWComplex point() {
  CWComplex x;
  x.dim = 0;
  x.cells = {1};
  return x;
}

CWComplex sphere(int n) {
  if (n < 0) throw std::invalid_argument("sphere: n >= 0 required");
  if (n == 0) {
    CWComplex x;
    x.dim = 0;
    x.cells = {2};
    return x;
  }
  CWComplex x;
  x.dim = n;
  x.cells.assign(static_cast<size_t>(n + 1), 0);
  x.cells[0] = 1;
  x.cells[static_cast<size_t>(n)] = 1;
  for (int k = 1; k <= n; ++k)
    x.boundaries.push_back(IntMat::Zero(x.cell_count(k - 1), x.cell_count(k)));
  return x;
}

CWComplex torus() {
  CWComplex x;
  x.dim = 2;
  x.cells = {1, 2, 1};
  x.boundaries = {IntMat::Zero(1, 2), IntMat::Zero(2, 1)};
  return x;
}

CWComplex real_projective(int n) {
  if (n < 0) throw std::invalid_argument("real_projective: n >= 0 required");
  CWComplex x;
  x.dim = n;
  x.cells.assign(static_cast<size_t>(n + 1), 1);
  for (int k = 1; k <= n; ++k) {
    IntMat b(1, 1);
    b(0, 0) = (k % 2 == 0) ? 2 : 0;
    x.boundaries.push_back(std::move(b));
  }
  return x;
}

CWComplex complex_projective(int n) {
  if (n < 0) throw std::invalid_argument("complex_projective: n >= 0 required");
  CWComplex x;
  x.dim = 2 * n;
  x.cells.assign(static_cast<size_t>(2 * n + 1), 0);
  for (int k = 0; k <= 2 * n; k += 2) x.cells[static_cast<size_t>(k)] = 1;
  for (int k = 1; k <= 2 * n; ++k)
    x.boundaries.push_back(IntMat::Zero(x.cell_count(k - 1), x.cell_count(k)));
  return x;
}

CWComplex moore_space(long m, int n) {
  if (m < 2) throw std::invalid_argument("moore_space: m >= 2 required");
  if (n < 1) throw std::invalid_argument("moore_space: n >= 1 required");
  CWComplex x;
  x.dim = n + 1;
  x.cells.assign(static_cast<size_t>(n + 2), 0);
  x.cells[0] = 1;
  x.cells[static_cast<size_t>(n)] = 1;
  x.cells[static_cast<size_t>(n + 1)] = 1;
  for (int k = 1; k <= n + 1; ++k) {
    IntMat b = IntMat::Zero(x.cell_count(k - 1), x.cell_count(k));
    if (k == n + 1) b(0, 0) = m;
    x.boundaries.push_back(std::move(b));
  }
  return x;
}

CWComplex wedge(const CWComplex& a, const CWComplex& b) {
  if (a.dim < 0 || b.dim < 0 || a.cell_count(0) == 0 || b.cell_count(0) == 0)
    throw std::invalid_argument("wedge: both complexes need a 0-cell");
  CWComplex x;
  x.dim = std::max(a.dim, b.dim);
  x.cells.assign(static_cast<size_t>(x.dim + 1), 0);
  x.cells[0] = a.cell_count(0) + b.cell_count(0) - 1;
  for (int k = 1; k <= x.dim; ++k)
    x.cells[static_cast<size_t>(k)] = a.cell_count(k) + b.cell_count(k);
  for (int k = 1; k <= x.dim; ++k) {
    IntMat ba = a.boundary(k), bb = b.boundary(k);
    IntMat m = IntMat::Zero(x.cell_count(k - 1), x.cell_count(k));
    if (k == 1) {
      m.topLeftCorner(ba.rows(), ba.cols()) = ba;
      // b's base point (row 0) is identified with a's base point
      const Index a0 = a.cell_count(0);
      for (Index j = 0; j < bb.cols(); ++j) {
        m(0, ba.cols() + j) += bb(0, j);
        for (Index i = 1; i < bb.rows(); ++i) m(a0 + i - 1, ba.cols() + j) = bb(i, j);
      }
    } else {
      m.topLeftCorner(ba.rows(), ba.cols()) = ba;
      m.bottomRightCorner(bb.rows(), bb.cols()) = bb;
    }
    x.boundaries.push_back(std::move(m));
  }
  return x;
}

CWComplex disjoint_union(const CWComplex& a, const CWComplex& b) {
  if (a.dim < 0) return b;
  if (b.dim < 0) return a;
  CWComplex x;
  x.dim = std::max(a.dim, b.dim);
  x.cells.assign(static_cast<size_t>(x.dim + 1), 0);
  for (int k = 0; k <= x.dim; ++k)
    x.cells[static_cast<size_t>(k)] = a.cell_count(k) + b.cell_count(k);
  for (int k = 1; k <= x.dim; ++k) {
    IntMat ba = a.boundary(k), bb = b.boundary(k);
    IntMat m = IntMat::Zero(x.cell_count(k - 1), x.cell_count(k));
    m.topLeftCorner(ba.rows(), ba.cols()) = ba;
    m.bottomRightCorner(bb.rows(), bb.cols()) = bb;
    x.boundaries.push_back(std::move(m));
  }
  return x;
}

CWComplex suspension(const CWComplex& a) {
  // One fresh 0-cell; every cell of a shifts up by one and attaches trivially
  // to it, so positive-degree homology shifts while degree <= 1 carries the
  // unreduced discrepancy.
  CWComplex x;
  x.dim = a.dim < 0 ? 0 : a.dim + 1;
  x.cells.assign(static_cast<size_t>(x.dim + 1), 0);
  x.cells[0] = 1;
  for (int k = 0; k <= a.dim; ++k) x.cells[static_cast<size_t>(k + 1)] = a.cell_count(k);
  for (int k = 1; k <= x.dim; ++k) {
    if (k == 1)
      x.boundaries.push_back(IntMat::Zero(1, a.cell_count(0)));
    else
      x.boundaries.push_back(a.boundary(k - 1));
  }
  return x;
}

namespace {

// Deterministic 64-bit generator (splitmix64); fixed across platforms.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  long below(long n) { return n <= 1 ? 0 : static_cast<long>(next() % static_cast<std::uint64_t>(n)); }

private:
  std::uint64_t state_;
};

CWComplex attachment_complex(Rng& rng, long budget) {
  CWComplex x = point();
  long extra0 = std::min<long>(rng.below(3), budget - 1);
  x.cells[0] += extra0;

  const int max_dim = 4;
  int misses = 0;
  while (x.total_cells() < budget && misses < 8) {
    int top = x.dim;
    int k = 1 + static_cast<int>(rng.below(std::min(top + 1, max_dim)));
    IntMat cycles = kernel_basis(x.boundary(k - 1));
    if (cycles.cols() == 0) {
      ++misses;
      continue;
    }
    IntVec z = IntVec::Zero(x.cell_count(k - 1));
    long picks = 1 + rng.below(std::min<long>(3, cycles.cols()));
    for (long t = 0; t < picks; ++t) {
      long col = rng.below(cycles.cols());
      long coeff = rng.below(4) - 2;  // -2..1
      if (coeff == 0) coeff = 2;
      z += Int(coeff) * cycles.col(col);
    }
    if (k > x.dim) {
      x.dim = k;
      x.cells.push_back(0);
      x.boundaries.push_back(IntMat::Zero(x.cell_count(k - 1), 0));
    }
    IntMat& b = x.boundaries[static_cast<size_t>(k - 1)];
    IntMat grown(b.rows(), b.cols() + 1);
    grown.leftCols(b.cols()) = b;
    grown.col(b.cols()) = z;
    b = std::move(grown);
    x.cells[static_cast<size_t>(k)] += 1;
  }
  return x;
}

CWComplex flag_complex(Rng& rng, long budget) {
  const int nv = 3 + static_cast<int>(rng.below(4));
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<bool>> adj(nv, std::vector<bool>(nv, false));
  for (int i = 0; i < nv; ++i)
    for (int j = i + 1; j < nv; ++j)
      if (rng.below(2) == 0) {
        adj[i][j] = adj[j][i] = true;
        edges.push_back({i, j});
      }
  std::vector<std::array<int, 3>> tris;
  for (int i = 0; i < nv; ++i)
    for (int j = i + 1; j < nv; ++j)
      for (int k = j + 1; k < nv; ++k)
        if (adj[i][j] && adj[i][k] && adj[j][k]) tris.push_back({i, j, k});
  std::vector<std::array<int, 4>> tets;
  for (int i = 0; i < nv; ++i)
    for (int j = i + 1; j < nv; ++j)
      for (int k = j + 1; k < nv; ++k)
        for (int l = k + 1; l < nv; ++l)
          if (adj[i][j] && adj[i][k] && adj[i][l] && adj[j][k] && adj[j][l] && adj[k][l])
            tets.push_back({i, j, k, l});

  // Trim from the top dimension down so faces stay present.
  auto total = [&]() {
    return static_cast<long>(nv + edges.size() + tris.size() + tets.size());
  };
  while (total() > budget && !tets.empty()) tets.pop_back();
  while (total() > budget && !tris.empty()) tris.pop_back();
  while (total() > budget && !edges.empty()) edges.pop_back();

  auto edge_index = [&](int a, int b) {
    for (size_t e = 0; e < edges.size(); ++e)
      if (edges[e].first == a && edges[e].second == b) return static_cast<long>(e);
    return -1L;
  };
  auto tri_index = [&](int a, int b, int c) {
    for (size_t t = 0; t < tris.size(); ++t)
      if (tris[t][0] == a && tris[t][1] == b && tris[t][2] == c) return static_cast<long>(t);
    return -1L;
  };

  CWComplex x;
  x.dim = !tets.empty() ? 3 : (!tris.empty() ? 2 : (!edges.empty() ? 1 : 0));
  x.cells.assign(static_cast<size_t>(x.dim + 1), 0);
  x.cells[0] = nv;
  if (x.dim >= 1) x.cells[1] = static_cast<long>(edges.size());
  if (x.dim >= 2) x.cells[2] = static_cast<long>(tris.size());
  if (x.dim >= 3) x.cells[3] = static_cast<long>(tets.size());

  if (x.dim >= 1) {
    IntMat b1 = IntMat::Zero(nv, static_cast<Index>(edges.size()));
    for (size_t e = 0; e < edges.size(); ++e) {
      b1(edges[e].second, static_cast<Index>(e)) = 1;
      b1(edges[e].first, static_cast<Index>(e)) = -1;
    }
    x.boundaries.push_back(std::move(b1));
  }
  if (x.dim >= 2) {
    IntMat b2 = IntMat::Zero(static_cast<Index>(edges.size()), static_cast<Index>(tris.size()));
    for (size_t t = 0; t < tris.size(); ++t) {
      auto [a, b, c] = tris[t];
      b2(edge_index(b, c), static_cast<Index>(t)) += 1;
      b2(edge_index(a, c), static_cast<Index>(t)) -= 1;
      b2(edge_index(a, b), static_cast<Index>(t)) += 1;
    }
    x.boundaries.push_back(std::move(b2));
  }
  if (x.dim >= 3) {
    IntMat b3 = IntMat::Zero(static_cast<Index>(tris.size()), static_cast<Index>(tets.size()));
    for (size_t t = 0; t < tets.size(); ++t) {
      auto [a, b, c, d] = tets[t];
      b3(tri_index(b, c, d), static_cast<Index>(t)) += 1;
      b3(tri_index(a, c, d), static_cast<Index>(t)) -= 1;
      b3(tri_index(a, b, d), static_cast<Index>(t)) += 1;
      b3(tri_index(a, b, c), static_cast<Index>(t)) -= 1;
    }
    x.boundaries.push_back(std::move(b3));
  }
  return x;
}

}  // namespace

CWComplex random_complex(std::uint64_t seed, long budget) {
  if (budget <= 0) return point();
  Rng rng(seed);
  CWComplex x = (rng.below(4) == 3) ? flag_complex(rng, budget) : attachment_complex(rng, budget);
  ValidationReport rep = validate(x);
  if (!rep.ok) throw std::logic_error("random_complex: generated complex invalid: " + rep.message);
  return x;
}

ChainComplex relative_chains(const CWComplex& x, int top, int sub) {
  top = clamp_skeleton(x, top);
  sub = clamp_skeleton(x, sub);
  if (top < 0) return ChainComplex();
  std::vector<PresentedGroup> groups;
  std::vector<IntMat> diffs;
  for (int k = 0; k <= top; ++k) {
    const bool live = k > sub;
    groups.push_back(PresentedGroup::free_group(live ? x.cell_count(k) : 0));
    if (k > 0) {
      const bool prev_live = (k - 1) > sub;
      if (live && prev_live)
        diffs.push_back(x.boundary(k));
      else
        diffs.push_back(IntMat::Zero(prev_live ? x.cell_count(k - 1) : 0,
                                     live ? x.cell_count(k) : 0));
    }
  }
  return ChainComplex(0, std::move(groups), std::move(diffs));
}

ChainComplex relative_chains(const CWPair& p) {
  return relative_chains(p.total, p.total.dim, p.sub_dim);
}

ChainComplex cellular_chains(const CWComplex& x) {
  return relative_chains(x, x.dim, -1);
}

ChainMap pair_chain_map(const CWComplex& x, int t1, int s1, int t2, int s2) {
  t1 = clamp_skeleton(x, t1);
  s1 = clamp_skeleton(x, s1);
  t2 = clamp_skeleton(x, t2);
  s2 = clamp_skeleton(x, s2);
  if (t1 > t2 || s1 > s2)
    throw std::invalid_argument("pair_chain_map: not an inclusion of pairs");
  ChainComplex src = relative_chains(x, t1, s1);
  ChainComplex dst = relative_chains(x, t2, s2);
  std::map<int, IntMat> comps;
  for (int k = 0; k <= t1; ++k)
    if (k > s1 && k > s2 && k <= t1)
      comps[k] = IntMat::Identity(x.cell_count(k), x.cell_count(k));
  return ChainMap(std::move(src), std::move(dst), std::move(comps));
}

ComplexSES triple_ses(const CWComplex& x, int t, int s, int u) {
  return ComplexSES(pair_chain_map(x, s, u, t, u), pair_chain_map(x, t, u, t, s));
}

}  // namespace ahss
