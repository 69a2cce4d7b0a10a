#pragma once

#include "ahss/abgroup.hpp"

#include <map>

namespace ahss {

/// Chain complex of presented groups over a degree window. Groups outside the
/// window are trivial; the differential composite is checked at construction.
class ChainComplex {
public:
  ChainComplex() : lo_(0), hi_(-1) {}
  /// groups[i] sits in degree lo + i; diffs[i] maps degree lo+i+1 -> lo+i.
  ChainComplex(int lo, std::vector<PresentedGroup> groups, std::vector<IntMat> diff_matrices);

  int lo() const { return lo_; }
  int hi() const { return hi_; }
  PresentedGroup group(int n) const;
  /// d_n : C_n -> C_{n-1}; a zero hom outside the window.
  GroupHom diff(int n) const;

private:
  int lo_, hi_;
  std::vector<PresentedGroup> groups_;
  std::vector<GroupHom> diffs_;  // diffs_[i] : degree lo+i+1 -> lo+i
};

/// Homology at one degree, keeping representative cycles: the subquotient
/// generators are ambient vectors of the chain group.
struct HomologyData {
  PresentedGroup group;
  Subgroup cycles;
  Subgroup boundaries;
  Subquotient subq;
  const IntMat& representatives() const { return subq.generator_vectors(); }
};

HomologyData homology(const ChainComplex& c, int n);

/// Degreewise hom commuting with the differentials (checked).
class ChainMap {
public:
  ChainMap(ChainComplex src, ChainComplex dst, std::map<int, IntMat> components);

  const ChainComplex& src() const { return src_; }
  const ChainComplex& dst() const { return dst_; }
  GroupHom component(int n) const;

private:
  ChainComplex src_, dst_;
  std::map<int, GroupHom> components_;
};

GroupHom induced_on_homology(const ChainMap& f, int n, const HomologyData& hsrc,
                             const HomologyData& hdst);
GroupHom induced_on_homology(const ChainMap& f, int n);

/// Degreewise short exact sequence A >-> B ->> C (verified at construction).
class ComplexSES {
public:
  ComplexSES(ChainMap inject, ChainMap project);
  const ChainMap& inject() const { return inject_; }
  const ChainMap& project() const { return project_; }
  const ChainComplex& a() const { return inject_.src(); }
  const ChainComplex& b() const { return inject_.dst(); }
  const ChainComplex& c() const { return project_.dst(); }

private:
  ChainMap inject_, project_;
};

/// Snake-lemma connecting homomorphism H_n(C) -> H_{n-1}(A), computed by
/// lifting representatives through an exact section of the projection.
GroupHom connecting_hom(const ComplexSES& s, int n, const HomologyData& hc,
                        const HomologyData& ha);
GroupHom connecting_hom(const ComplexSES& s, int n);

/// C (x) M for a complex of free groups: each C_n becomes a direct sum of
/// copies of M and each differential the Kronecker product with the identity.
ChainComplex tensor_free_complex(const ChainComplex& c, const PresentedGroup& m);

ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b);

}  // namespace ahss
