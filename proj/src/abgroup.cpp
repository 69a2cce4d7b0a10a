#include "ahss/abgroup.hpp"

#include <sstream>

namespace ahss {

PresentedGroup::PresentedGroup(Index ambient_rank, IntMat relations)
    : ambient_rank_(ambient_rank), relations_(drop_zero_columns(relations)) {
  if (relations.rows() != ambient_rank)
    throw std::invalid_argument("PresentedGroup: relations row count != ambient rank");
  SmithDecomposition s = smith(relations_);
  const Index k = s.diagonal_length();
  Index nonzero = 0;
  for (Index i = 0; i < k; ++i) {
    if (s.d(i, i).is_zero()) break;
    ++nonzero;
    if (s.d(i, i) > 1) canonical_.invariant_factors.push_back(s.d(i, i));
  }
  canonical_.free_rank = static_cast<long>(ambient_rank_ - nonzero);
}

PresentedGroup PresentedGroup::cyclic(const Int& order) {
  IntMat rel(1, 1);
  rel(0, 0) = order;
  return PresentedGroup(1, rel);
}

PresentedGroup PresentedGroup::direct_sum(const std::vector<PresentedGroup>& parts) {
  Index rank = 0, cols = 0;
  for (const auto& p : parts) {
    rank += p.ambient_rank();
    cols += p.relations().cols();
  }
  IntMat rel = IntMat::Zero(rank, cols);
  Index r = 0, c = 0;
  for (const auto& p : parts) {
    rel.block(r, c, p.ambient_rank(), p.relations().cols()) = p.relations();
    r += p.ambient_rank();
    c += p.relations().cols();
  }
  return PresentedGroup(rank, rel);
}

bool PresentedGroup::is_zero_element(const IntVec& v) const {
  if (v.size() != ambient_rank_) throw std::invalid_argument("is_zero_element: wrong ambient rank");
  return solve(relations_, v).has_value();
}

std::string to_string(const CanonicalForm& cf) {
  if (cf.trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (cf.free_rank == 1) {
    os << "Z";
    first = false;
  } else if (cf.free_rank > 1) {
    os << "Z^" << cf.free_rank;
    first = false;
  }
  for (const Int& d : cf.invariant_factors) {
    if (!first) os << " ⊕ ";
    os << "Z/" << d.str();
    first = false;
  }
  return os.str();
}

std::optional<GroupHom> GroupHom::certify(PresentedGroup src, PresentedGroup dst, IntMat matrix) {
  if (matrix.rows() != dst.ambient_rank() || matrix.cols() != src.ambient_rank())
    throw std::invalid_argument("GroupHom: matrix shape does not match ambient ranks");
  IntMat pushed = matrix * src.relations();
  auto cert = solve_matrix(dst.relations(), pushed);
  if (!cert) return std::nullopt;
  return GroupHom(std::move(src), std::move(dst), std::move(matrix), std::move(*cert));
}

GroupHom::GroupHom(PresentedGroup src, PresentedGroup dst, IntMat matrix) {
  auto h = certify(std::move(src), std::move(dst), std::move(matrix));
  if (!h) throw std::invalid_argument("GroupHom: matrix does not descend to the quotients");
  *this = std::move(*h);
}

GroupHom GroupHom::zero(PresentedGroup src, PresentedGroup dst) {
  IntMat m = IntMat::Zero(dst.ambient_rank(), src.ambient_rank());
  IntMat cert = IntMat::Zero(dst.relations().cols(), src.relations().cols());
  return GroupHom(std::move(src), std::move(dst), std::move(m), std::move(cert));
}

GroupHom GroupHom::identity(const PresentedGroup& g) {
  IntMat m = IntMat::Identity(g.ambient_rank(), g.ambient_rank());
  // relations map to themselves: certificate is the identity on relation columns
  IntMat cert = IntMat::Identity(g.relations().cols(), g.relations().cols());
  return GroupHom(g, g, std::move(m), std::move(cert));
}

bool GroupHom::is_zero_hom() const {
  return solve_matrix(dst_.relations(), matrix_).has_value();
}

bool GroupHom::is_injective() const {
  IntMat ker = hom_kernel(*this).generators();
  for (Index j = 0; j < ker.cols(); ++j)
    if (!src_.is_zero_element(IntVec(ker.col(j)))) return false;
  return true;
}

bool GroupHom::is_surjective() const {
  Subgroup im = hom_image(*this);
  IntVec e = IntVec::Zero(dst_.ambient_rank());
  for (Index i = 0; i < dst_.ambient_rank(); ++i) {
    e(i) = 1;
    bool hit = im.contains(e);
    e(i) = 0;
    if (!hit) return false;
  }
  return true;
}

std::optional<GroupHom> GroupHom::inverse() const {
  // Solve matrix * x = e_i modulo dst relations, columnwise.
  IntMat lifted(src_.ambient_rank(), dst_.ambient_rank());
  IntMat system = hstack(matrix_, dst_.relations());
  SmithDecomposition s = smith(system);
  for (Index i = 0; i < dst_.ambient_rank(); ++i) {
    IntVec e = IntVec::Zero(dst_.ambient_rank());
    e(i) = 1;
    auto sol = solve(s, e);
    if (!sol) return std::nullopt;
    lifted.col(i) = sol->head(src_.ambient_rank());
  }
  auto inv = certify(dst_, src_, lifted);
  if (!inv) return std::nullopt;
  if (!same_hom(compose(*inv, *this), GroupHom::identity(src_))) return std::nullopt;
  if (!same_hom(compose(*this, *inv), GroupHom::identity(dst_))) return std::nullopt;
  return inv;
}

GroupHom compose(const GroupHom& g, const GroupHom& f) {
  if (!same_presentation(f.dst(), g.src()))
    throw std::invalid_argument("compose: middle presentations differ");
  return GroupHom(f.src_, g.dst_, IntMat(g.matrix_ * f.matrix_),
                  IntMat(g.certificate_ * f.certificate_));
}

bool same_hom(const GroupHom& f, const GroupHom& g) {
  if (!same_presentation(f.src(), g.src()) || !same_presentation(f.dst(), g.dst()))
    return false;
  IntMat diff = f.matrix() - g.matrix();
  return solve_matrix(f.dst().relations(), diff).has_value();
}

Subgroup::Subgroup(PresentedGroup ambient, IntMat generators)
    : ambient_(std::move(ambient)), generators_(drop_zero_columns(generators)) {
  if (generators.rows() != ambient_.ambient_rank())
    throw std::invalid_argument("Subgroup: generator rows != ambient rank");
}

Subgroup Subgroup::zero(const PresentedGroup& ambient) {
  return Subgroup(ambient, IntMat(ambient.ambient_rank(), 0));
}

Subgroup Subgroup::full(const PresentedGroup& ambient) {
  return Subgroup(ambient, IntMat::Identity(ambient.ambient_rank(), ambient.ambient_rank()));
}

const SmithDecomposition& Subgroup::membership_system() const {
  if (!membership_)
    membership_ = std::make_shared<const SmithDecomposition>(
        smith(hstack(generators_, ambient_.relations())));
  return *membership_;
}

bool Subgroup::contains(const IntVec& v) const {
  return solve(membership_system(), v).has_value();
}

std::optional<IntVec> Subgroup::first_generator_outside(const Subgroup& other) const {
  const SmithDecomposition& s = other.membership_system();
  for (Index j = 0; j < generators_.cols(); ++j) {
    IntVec g = generators_.col(j);
    if (!solve(s, g)) return g;
  }
  return std::nullopt;
}

Subgroup Subgroup::sum(const Subgroup& other) const {
  return Subgroup(ambient_, hstack(generators_, other.generators_));
}

PresentedGroup Subgroup::as_group() const {
  return Subquotient::of_subgroup(*this).group();
}

Subgroup hom_kernel(const GroupHom& f) {
  // Full preimage of the dst relation span.
  IntMat ker = kernel_basis(hstack(f.matrix(), f.dst().relations()));
  return Subgroup(f.src(), IntMat(ker.topRows(f.src().ambient_rank())));
}

Subgroup hom_image(const GroupHom& f) {
  return Subgroup(f.dst(), f.matrix());
}

PresentedGroup hom_cokernel(const GroupHom& f) {
  return PresentedGroup(f.dst().ambient_rank(), hstack(f.dst().relations(), f.matrix()));
}

Subquotient::Subquotient(PresentedGroup ambient, Subgroup numerator, Subgroup denominator)
    : ambient_(std::move(ambient)), numerator_(std::move(numerator)),
      denominator_(std::move(denominator)) {
  if (auto w = denominator_.first_generator_outside(numerator_)) {
    std::ostringstream os;
    os << "Subquotient: denominator not contained in numerator; witness ("
       << w->transpose() << ")";
    throw TheoremViolation(os.str());
  }
  // Relations on the numerator generators: coefficient vectors x with
  // N x in span(D) + span(ambient relations).
  IntMat sys = hstack(hstack(numerator_.generators(), denominator_.generators()),
                      ambient_.relations());
  express_system_ = std::make_shared<const SmithDecomposition>(smith(sys));
  IntMat ker = kernel_basis(*express_system_);
  group_ = PresentedGroup(numerator_.generators().cols(),
                          IntMat(ker.topRows(numerator_.generators().cols())));
}

Subquotient Subquotient::of_subgroup(const Subgroup& s) {
  return Subquotient(s.ambient(), s, Subgroup::zero(s.ambient()));
}

Subquotient Subquotient::full_quotient(const PresentedGroup& ambient, const Subgroup& denominator) {
  return Subquotient(ambient, Subgroup::full(ambient), denominator);
}

std::optional<IntVec> Subquotient::express(const IntVec& ambient_vec) const {
  auto sol = solve(*express_system_, ambient_vec);
  if (!sol) return std::nullopt;
  return IntVec(sol->head(numerator_.generators().cols()));
}

InducedResult induced_on_subquotient(const GroupHom& f, const Subquotient& s, const Subquotient& t) {
  InducedResult out;
  if (!same_presentation(f.src(), s.ambient()) || !same_presentation(f.dst(), t.ambient())) {
    out.error = "induced_on_subquotient: ambient presentations do not match the hom";
    return out;
  }
  // f must carry numerator into numerator and denominator into denominator.
  const IntMat& ngen = s.numerator().generators();
  for (Index j = 0; j < ngen.cols(); ++j) {
    IntVec img = f.apply(IntVec(ngen.col(j)));
    if (!t.numerator().contains(img)) {
      out.error = "numerator image escapes target numerator";
      out.witness = ngen.col(j);
      return out;
    }
  }
  const IntMat& dgen = s.denominator().generators();
  for (Index j = 0; j < dgen.cols(); ++j) {
    IntVec img = f.apply(IntVec(dgen.col(j)));
    if (!t.denominator().contains(img)) {
      out.error = "denominator image escapes target denominator";
      out.witness = dgen.col(j);
      return out;
    }
  }
  IntMat m(t.group().ambient_rank(), s.group().ambient_rank());
  for (Index j = 0; j < ngen.cols(); ++j) {
    auto coords = t.express(f.apply(IntVec(ngen.col(j))));
    if (!coords) {
      out.error = "image of generator not expressible in target numerator";
      out.witness = ngen.col(j);
      return out;
    }
    m.col(j) = *coords;
  }
  auto hom = GroupHom::certify(s.group(), t.group(), std::move(m));
  if (!hom) {
    out.error = "induced matrix does not descend to the subquotient presentations";
    return out;
  }
  out.hom = std::move(hom);
  return out;
}

ExactnessReport is_exact_at(const GroupHom& f, const GroupHom& g) {
  if (!same_presentation(f.dst(), g.src()))
    throw std::invalid_argument("is_exact_at: middle presentations differ");
  ExactnessReport rep;
  Subgroup image = hom_image(f);
  Subgroup kernel = hom_kernel(g);
  auto w1 = image.first_generator_outside(kernel);
  rep.image_in_kernel = !w1;
  auto w2 = kernel.first_generator_outside(image);
  rep.kernel_in_image = !w2;
  rep.exact = rep.image_in_kernel && rep.kernel_in_image;
  if (w1)
    rep.witness = *w1;
  else if (w2)
    rep.witness = *w2;
  return rep;
}

}  // namespace ahss
