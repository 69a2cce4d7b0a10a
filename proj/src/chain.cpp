#include "ahss/chain.hpp"

#include <sstream>

namespace ahss {

ChainComplex::ChainComplex(int lo, std::vector<PresentedGroup> groups,
                           std::vector<IntMat> diff_matrices)
    : lo_(lo), hi_(lo + static_cast<int>(groups.size()) - 1), groups_(std::move(groups)) {
  if (!groups_.empty() && diff_matrices.size() != groups_.size() - 1)
    throw std::invalid_argument("ChainComplex: need one differential per adjacent degree pair");
  for (size_t i = 0; i < diff_matrices.size(); ++i) {
    auto h = GroupHom::certify(groups_[i + 1], groups_[i], std::move(diff_matrices[i]));
    if (!h) {
      std::ostringstream os;
      os << "ChainComplex: differential at degree " << lo_ + static_cast<int>(i) + 1
         << " does not descend";
      throw std::invalid_argument(os.str());
    }
    diffs_.push_back(std::move(*h));
  }
  for (size_t i = 0; i + 1 < diffs_.size(); ++i) {
    if (!compose(diffs_[i], diffs_[i + 1]).is_zero_hom()) {
      std::ostringstream os;
      os << "ChainComplex: d∘d != 0 entering degree " << lo_ + static_cast<int>(i);
      throw std::invalid_argument(os.str());
    }
  }
}

PresentedGroup ChainComplex::group(int n) const {
  if (n < lo_ || n > hi_) return PresentedGroup::trivial();
  return groups_[static_cast<size_t>(n - lo_)];
}

GroupHom ChainComplex::diff(int n) const {
  if (n > lo_ && n <= hi_) return diffs_[static_cast<size_t>(n - lo_ - 1)];
  return GroupHom::zero(group(n), group(n - 1));
}

HomologyData homology(const ChainComplex& c, int n) {
  Subgroup cycles = hom_kernel(c.diff(n));
  Subgroup boundaries = hom_image(c.diff(n + 1));
  Subquotient subq(c.group(n), cycles, boundaries);
  return HomologyData{subq.group(), std::move(cycles), std::move(boundaries), std::move(subq)};
}

ChainMap::ChainMap(ChainComplex src, ChainComplex dst, std::map<int, IntMat> components)
    : src_(std::move(src)), dst_(std::move(dst)) {
  for (auto& [n, m] : components) {
    auto h = GroupHom::certify(src_.group(n), dst_.group(n), std::move(m));
    if (!h) {
      std::ostringstream os;
      os << "ChainMap: component at degree " << n << " does not descend";
      throw std::invalid_argument(os.str());
    }
    components_.emplace(n, std::move(*h));
  }
  const int lo = std::min(src_.lo(), dst_.lo());
  const int hi = std::max(src_.hi(), dst_.hi());
  for (int n = lo; n <= hi; ++n) {
    GroupHom left = compose(component(n - 1), src_.diff(n));
    GroupHom right = compose(dst_.diff(n), component(n));
    if (!same_hom(left, right)) {
      std::ostringstream os;
      os << "ChainMap: does not commute with differentials at degree " << n;
      throw std::invalid_argument(os.str());
    }
  }
}

GroupHom ChainMap::component(int n) const {
  auto it = components_.find(n);
  if (it != components_.end()) return it->second;
  return GroupHom::zero(src_.group(n), dst_.group(n));
}

GroupHom induced_on_homology(const ChainMap& f, int n, const HomologyData& hsrc,
                             const HomologyData& hdst) {
  InducedResult r = induced_on_subquotient(f.component(n), hsrc.subq, hdst.subq);
  if (!r.hom)
    throw std::logic_error("induced_on_homology: " + r.error);
  return std::move(*r.hom);
}

GroupHom induced_on_homology(const ChainMap& f, int n) {
  HomologyData hsrc = homology(f.src(), n);
  HomologyData hdst = homology(f.dst(), n);
  return induced_on_homology(f, n, hsrc, hdst);
}

ComplexSES::ComplexSES(ChainMap inject, ChainMap project)
    : inject_(std::move(inject)), project_(std::move(project)) {
  const int lo = std::min(a().lo(), std::min(b().lo(), c().lo()));
  const int hi = std::max(a().hi(), std::max(b().hi(), c().hi()));
  for (int n = lo; n <= hi; ++n) {
    if (!same_presentation(inject_.dst().group(n), project_.src().group(n)))
      throw std::invalid_argument("ComplexSES: middle complexes differ");
    GroupHom i = inject_.component(n);
    GroupHom p = project_.component(n);
    if (!i.is_injective())
      throw std::invalid_argument("ComplexSES: inclusion not injective");
    if (!p.is_surjective())
      throw std::invalid_argument("ComplexSES: projection not surjective");
    if (!is_exact_at(i, p).exact)
      throw std::invalid_argument("ComplexSES: not exact at the middle");
  }
}

GroupHom connecting_hom(const ComplexSES& s, int n, const HomologyData& hc,
                        const HomologyData& ha) {
  const GroupHom proj_n = s.project().component(n);
  const GroupHom inj_nm1 = s.inject().component(n - 1);
  const GroupHom d_b = s.b().diff(n);

  SmithDecomposition lift_sys = smith(hstack(proj_n.matrix(), s.c().group(n).relations()));
  SmithDecomposition pull_sys = smith(hstack(inj_nm1.matrix(), s.b().group(n - 1).relations()));

  const Index gens = hc.representatives().cols();
  IntMat m(ha.group.ambient_rank(), gens);
  for (Index j = 0; j < gens; ++j) {
    IntVec z = hc.representatives().col(j);
    auto lifted = solve(lift_sys, z);
    if (!lifted)
      throw TheoremViolation("connecting_hom: representative does not lift through the projection");
    IntVec b = lifted->head(s.b().group(n).ambient_rank());
    IntVec w = d_b.matrix() * b;
    auto pulled = solve(pull_sys, w);
    if (!pulled)
      throw TheoremViolation("connecting_hom: boundary of lift is not in the subcomplex");
    IntVec a = pulled->head(s.a().group(n - 1).ambient_rank());
    auto coords = ha.subq.express(a);
    if (!coords)
      throw TheoremViolation("connecting_hom: pulled-back chain is not a cycle");
    m.col(j) = *coords;
  }
  auto hom = GroupHom::certify(hc.group, ha.group, std::move(m));
  if (!hom)
    throw TheoremViolation("connecting_hom: result not well defined on homology classes");
  return std::move(*hom);
}

GroupHom connecting_hom(const ComplexSES& s, int n) {
  HomologyData hc = homology(s.c(), n);
  HomologyData ha = homology(s.a(), n - 1);
  return connecting_hom(s, n, hc, ha);
}

ChainComplex tensor_free_complex(const ChainComplex& c, const PresentedGroup& m) {
  const Index ma = m.ambient_rank();
  std::vector<PresentedGroup> groups;
  std::vector<IntMat> diffs;
  for (int n = c.lo(); n <= c.hi(); ++n) {
    PresentedGroup g = c.group(n);
    if (g.relations().cols() != 0)
      throw std::invalid_argument("tensor_free_complex: chain group not free");
    std::vector<PresentedGroup> copies(static_cast<size_t>(g.ambient_rank()), m);
    groups.push_back(PresentedGroup::direct_sum(copies));
    if (n > c.lo()) {
      const IntMat& d = c.diff(n).matrix();
      IntMat big = IntMat::Zero(d.rows() * ma, d.cols() * ma);
      for (Index i = 0; i < d.rows(); ++i)
        for (Index j = 0; j < d.cols(); ++j)
          if (!d(i, j).is_zero())
            for (Index t = 0; t < ma; ++t) big(i * ma + t, j * ma + t) = d(i, j);
      diffs.push_back(std::move(big));
    }
  }
  return ChainComplex(c.lo(), std::move(groups), std::move(diffs));
}

ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b) {
  const int lo = std::min(a.lo(), b.lo());
  const int hi = std::max(a.hi(), b.hi());
  std::vector<PresentedGroup> groups;
  std::vector<IntMat> diffs;
  for (int n = lo; n <= hi; ++n) {
    groups.push_back(PresentedGroup::direct_sum({a.group(n), b.group(n)}));
    if (n > lo) {
      const IntMat& da = a.diff(n).matrix();
      const IntMat& db = b.diff(n).matrix();
      IntMat d = IntMat::Zero(da.rows() + db.rows(), da.cols() + db.cols());
      d.topLeftCorner(da.rows(), da.cols()) = da;
      d.bottomRightCorner(db.rows(), db.cols()) = db;
      diffs.push_back(std::move(d));
    }
  }
  return ChainComplex(lo, std::move(groups), std::move(diffs));
}

}  // namespace ahss
