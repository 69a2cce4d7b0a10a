#pragma once

#include "ahss/int_types.hpp"
#include "ahss/smith.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ahss {

/// Thrown when a computation contradicts a statement the engine is built to
/// verify; callers in the verification layer catch these and report them.
class TheoremViolation : public std::runtime_error {
public:
  explicit TheoremViolation(const std::string& what) : std::runtime_error(what) {}
};

/// Structure-theorem classification: Z^free_rank + sum of Z/d with each
/// invariant factor > 1 and d_i | d_{i+1}.
struct CanonicalForm {
  long free_rank = 0;
  std::vector<Int> invariant_factors;

  bool trivial() const { return free_rank == 0 && invariant_factors.empty(); }
  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.free_rank == b.free_rank && a.invariant_factors == b.invariant_factors;
  }
  friend bool operator!=(const CanonicalForm& a, const CanonicalForm& b) { return !(a == b); }
};

/// Finitely generated abelian group, presented as the quotient of the rank-n
/// integer lattice by the column span of a relations matrix. Zero columns are
/// pruned at construction; the canonical form is computed once and cached.
class PresentedGroup {
public:
  PresentedGroup() : PresentedGroup(0, IntMat(0, 0)) {}
  PresentedGroup(Index ambient_rank, IntMat relations);

  static PresentedGroup free_group(Index rank) { return PresentedGroup(rank, IntMat(rank, 0)); }
  static PresentedGroup trivial() { return free_group(0); }
  static PresentedGroup cyclic(const Int& order);
  static PresentedGroup direct_sum(const std::vector<PresentedGroup>& parts);

  Index ambient_rank() const { return ambient_rank_; }
  const IntMat& relations() const { return relations_; }
  const CanonicalForm& canonical() const { return canonical_; }
  bool is_trivial_group() const { return canonical_.trivial(); }

  /// True when the element represented by an ambient vector is zero.
  bool is_zero_element(const IntVec& v) const;

  friend bool same_presentation(const PresentedGroup& a, const PresentedGroup& b) {
    return a.ambient_rank_ == b.ambient_rank_ && same_matrix(a.relations_, b.relations_);
  }

private:
  Index ambient_rank_;
  IntMat relations_;
  CanonicalForm canonical_;
};

inline CanonicalForm canonical_form(const PresentedGroup& g) { return g.canonical(); }

std::string to_string(const CanonicalForm& cf);

/// Homomorphism between presented groups, given on ambient lattices and
/// carrying a certificate that it descends to the quotients: a matrix c with
/// matrix * src.relations = dst.relations * c.
class GroupHom {
public:
  /// Certifies well-definedness; nullopt when the matrix does not descend.
  static std::optional<GroupHom> certify(PresentedGroup src, PresentedGroup dst, IntMat matrix);
  /// As certify, but an uncertifiable matrix is a caller bug.
  GroupHom(PresentedGroup src, PresentedGroup dst, IntMat matrix);

  static GroupHom zero(PresentedGroup src, PresentedGroup dst);
  static GroupHom identity(const PresentedGroup& g);

  const PresentedGroup& src() const { return src_; }
  const PresentedGroup& dst() const { return dst_; }
  const IntMat& matrix() const { return matrix_; }
  const IntMat& certificate() const { return certificate_; }

  IntVec apply(const IntVec& v) const { return matrix_ * v; }
  bool is_zero_hom() const;
  bool is_injective() const;
  bool is_surjective() const;
  bool is_isomorphism() const { return is_injective() && is_surjective(); }

  /// Inverse of an isomorphism, computed by exact solving; nullopt when the
  /// map fails to be invertible.
  std::optional<GroupHom> inverse() const;

private:
  GroupHom(PresentedGroup src, PresentedGroup dst, IntMat matrix, IntMat certificate)
      : src_(std::move(src)), dst_(std::move(dst)), matrix_(std::move(matrix)),
        certificate_(std::move(certificate)) {}

  PresentedGroup src_;
  PresentedGroup dst_;
  IntMat matrix_;
  IntMat certificate_;

  friend GroupHom compose(const GroupHom& g, const GroupHom& f);
};

/// g after f; endpoint presentations must match exactly.
GroupHom compose(const GroupHom& g, const GroupHom& f);

/// Equal as maps between identical presentations.
bool same_hom(const GroupHom& f, const GroupHom& g);

/// Subgroup of a presented group, spanned by generator columns together with
/// the ambient relations. Membership and equality are decided by exact solves;
/// the solve system is factored once per subgroup and reused.
class Subgroup {
public:
  Subgroup(PresentedGroup ambient, IntMat generators);

  static Subgroup zero(const PresentedGroup& ambient);
  static Subgroup full(const PresentedGroup& ambient);

  const PresentedGroup& ambient() const { return ambient_; }
  const IntMat& generators() const { return generators_; }

  bool contains(const IntVec& v) const;
  /// First generator of this subgroup outside `other`, if any.
  std::optional<IntVec> first_generator_outside(const Subgroup& other) const;
  bool contained_in(const Subgroup& other) const { return !first_generator_outside(other); }
  bool equals(const Subgroup& other) const {
    return contained_in(other) && other.contained_in(*this);
  }
  Subgroup sum(const Subgroup& other) const;

  /// The subgroup as a group in its own right.
  PresentedGroup as_group() const;

private:
  const SmithDecomposition& membership_system() const;

  PresentedGroup ambient_;
  IntMat generators_;
  mutable std::shared_ptr<const SmithDecomposition> membership_;
};

Subgroup hom_kernel(const GroupHom& f);
Subgroup hom_image(const GroupHom& f);
PresentedGroup hom_cokernel(const GroupHom& f);

/// numerator/denominator inside an ambient presented group, with the
/// quotient presentation (one generator per numerator generator) computed at
/// construction. Denominator containment is verified.
class Subquotient {
public:
  Subquotient(PresentedGroup ambient, Subgroup numerator, Subgroup denominator);

  static Subquotient of_subgroup(const Subgroup& s);  // s / 0
  static Subquotient full_quotient(const PresentedGroup& ambient, const Subgroup& denominator);

  const PresentedGroup& ambient() const { return ambient_; }
  const Subgroup& numerator() const { return numerator_; }
  const Subgroup& denominator() const { return denominator_; }
  const PresentedGroup& group() const { return group_; }

  /// Ambient vectors of the presentation generators (numerator generators).
  const IntMat& generator_vectors() const { return numerator_.generators(); }

  /// Coordinates of an ambient vector in the quotient presentation; nullopt
  /// when the vector does not lie in the numerator.
  std::optional<IntVec> express(const IntVec& ambient_vec) const;
  IntVec to_ambient(const IntVec& coords) const { return numerator_.generators() * coords; }

private:
  PresentedGroup ambient_;
  Subgroup numerator_;
  Subgroup denominator_;
  PresentedGroup group_;
  std::shared_ptr<const SmithDecomposition> express_system_;
};

/// Map of subquotients induced by an ambient hom carrying numerator into
/// numerator and denominator into denominator. On a containment failure the
/// violating generator is reported.
struct InducedResult {
  std::optional<GroupHom> hom;
  std::string error;          // empty on success
  std::optional<IntVec> witness;
};
InducedResult induced_on_subquotient(const GroupHom& f, const Subquotient& s, const Subquotient& t);

/// Exactness of A -f-> B -g-> C at B, with a witness generator on failure.
struct ExactnessReport {
  bool exact = false;
  bool image_in_kernel = false;
  bool kernel_in_image = false;
  std::optional<IntVec> witness;  // generator violating the failing inclusion
};
ExactnessReport is_exact_at(const GroupHom& f, const GroupHom& g);

}  // namespace ahss
