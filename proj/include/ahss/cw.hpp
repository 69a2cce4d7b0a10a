#pragma once

#include "ahss/chain.hpp"

#include <cstdint>
#include <string>

namespace ahss {

/// Finite CW complex recorded through cell counts and integer cellular
/// boundary matrices. Column j of boundary(k) is the boundary of the j-th
/// k-cell expressed in (k-1)-cells. dim == -1 encodes the empty complex.
struct CWComplex {
  int dim = -1;
  std::vector<long> cells;         // size dim + 1
  std::vector<IntMat> boundaries;  // boundaries[k-1] : cells[k-1] x cells[k]

  long cell_count(int k) const {
    return (k >= 0 && k <= dim) ? cells[static_cast<size_t>(k)] : 0;
  }
  /// boundary(k) with zero-shaped fallbacks outside [1, dim].
  IntMat boundary(int k) const {
    if (k >= 1 && k <= dim) return boundaries[static_cast<size_t>(k - 1)];
    return IntMat::Zero(cell_count(k - 1), cell_count(k));
  }
  long total_cells() const {
    long t = 0;
    for (long c : cells) t += c;
    return t;
  }
};

struct ValidationReport {
  bool ok = true;
  int degree = 0;
  std::string message;
};

/// Shape checks plus the boundary-composite-zero condition; reports the first
/// failing degree and entry.
ValidationReport validate(const CWComplex& x);

int clamp_skeleton(const CWComplex& x, int p);
CWComplex skeleton(const CWComplex& x, int p);
long euler_characteristic(const CWComplex& x);

CWComplex empty_complex();
CWComplex point();
CWComplex sphere(int n);
CWComplex torus();
CWComplex real_projective(int n);
CWComplex complex_projective(int n);
CWComplex moore_space(long m, int n);
CWComplex wedge(const CWComplex& a, const CWComplex& b);
CWComplex disjoint_union(const CWComplex& a, const CWComplex& b);
CWComplex suspension(const CWComplex& a);

/// Deterministic random complex, at most `budget` cells. Alternates between
/// iterated attachment along the cycle lattice of the current skeleton and
/// flag complexes of random graphs.
CWComplex random_complex(std::uint64_t seed, long budget);

/// The pair (X, X^sub_dim).
struct CWPair {
  CWComplex total;
  int sub_dim = -1;
};

/// Cellular chains of the pair (X^top, X^sub): free on cells of dimension in
/// (sub, top], zero elsewhere. Indices are clamped to [-1, dim].
ChainComplex relative_chains(const CWComplex& x, int top, int sub);
ChainComplex relative_chains(const CWPair& p);
ChainComplex cellular_chains(const CWComplex& x);

/// Chain map of pairs (X^t1, X^s1) -> (X^t2, X^s2) for t1 <= t2, s1 <= s2:
/// identity on shared cells, zero elsewhere.
ChainMap pair_chain_map(const CWComplex& x, int t1, int s1, int t2, int s2);

/// Degreewise split SES of the triple u <= s <= t:
/// C(X^s, X^u) >-> C(X^t, X^u) ->> C(X^t, X^s).
ComplexSES triple_ses(const CWComplex& x, int t, int s, int u);

}  // namespace ahss
