#pragma once

#include <string>
#include <vector>

#include "reslat/algebra.hpp"
#include "reslat/filters.hpp"
#include "reslat/regular.hpp"

namespace reslat {

/// The congruence a == b (mod F) iff a <-> b in F. Class representatives
/// are least-index.
struct Congruence {
    Filter filter;
    std::vector<int> class_of;             // carrier -> class index
    std::vector<std::vector<int>> classes; // ascending members, ordered by representative
};

/// A verified map between two algebras: preserves all four operations and
/// both constants (checked exhaustively on construction).
struct Morphism {
    ResiduatedLattice source;
    ResiduatedLattice target;
    std::vector<int> map;
    bool injective = false;
    bool surjective = false;
    bool is_isomorphism = false;

    int apply(int a) const { return map[static_cast<size_t>(a)]; }
};

/// Verifies preservation of all operations; throws NotMorphism otherwise.
Morphism make_morphism(ResiduatedLattice source, ResiduatedLattice target,
                       std::vector<int> map);

Congruence congruence_mod(const ResiduatedLattice& l, const Filter& f);

struct Quotient {
    ResiduatedLattice algebra;
    Morphism projection;
    Congruence congruence;
};

/// Quotient algebra A/F plus the canonical surjection. The induced tables
/// are checked to be independent of representative choice, and the result
/// re-validates.
Quotient quotient(const ResiduatedLattice& l, const Filter& f);

/// Compares Ds(A/F) with the image of Ds(A) under the projection.
struct DenseQuotientVerdict {
    bool equal = false;
    std::vector<int> ds_of_quotient;   // class indices
    std::vector<int> image_of_ds;      // class indices
    std::vector<int> only_in_quotient; // witnesses: classes dense in A/F but not images
    std::vector<int> only_in_image;    // witnesses: images of dense elements not dense in A/F
    Congruence congruence;
};

DenseQuotientVerdict dense_quotient_comparison(const ResiduatedLattice& l, const Filter& f);

/// Restriction of a morphism to Boolean centers (as induced subalgebras).
/// Throws CenterNotPreserved if a central element maps outside the center.
Morphism b_functor(const Morphism& f);

/// The comparison diagram A -> A/Ds(A) -> A/Rad(A) with its Boolean-center
/// restrictions. lifting = surjectivity of B(A) -> B(A/Rad(A)).
struct LiftingDiagram {
    Quotient by_dense;
    Quotient by_radical;
    Morphism phi;    // A/Ds(A) -> A/Rad(A)
    Morphism b_p;    // B(A) -> B(A/Ds(A))
    Morphism b_r;    // B(A) -> B(A/Rad(A))
    Morphism b_phi;  // B(A/Ds(A)) -> B(A/Rad(A))
    bool lifting = false;
};

LiftingDiagram lifting_diagram(const ResiduatedLattice& l);
bool has_lifting_boolean_center(const ResiduatedLattice& l);

/// The comparison morphism A/Ds(A) -> A/Rad(A), a/Ds |-> a/Rad; verified
/// well-defined.
Morphism phi_map(const ResiduatedLattice& l);

/// theta : A/Ds(A) -> Reg(A), a/Ds |-> ~~a. Verified to be an isomorphism
/// with theta o p = ~~ pointwise. Requires Glivenko.
Morphism theta_iso(const ResiduatedLattice& l);

/// Transfer of the maximal spectrum along A -> A/Ds(A): membership, Max
/// correspondence, Rad transfer, and the basis-level homeomorphism; also
/// |Max(A)| = |Max(A/Rad(A))|.
struct MaxCorrespondenceVerdict {
    bool membership_transfer = false; // a/Ds in M/Ds iff a in M
    bool max_correspondence = false;  // Max(A/Ds) = {N/Ds : N in Max(A)}
    bool rad_membership = false;      // a/Ds in Rad(A)/Ds iff a in Rad(A)
    bool rad_transfer = false;        // Rad(A/Ds) = Rad(A)/Ds
    bool homeomorphism = false;       // h(N)=N/Ds bijective with h(S_Max(b)) = S_Max(b/Ds)
    bool max_count_mod_radical = false; // |Max(A)| = |Max(A/Rad(A))|

    bool all() const {
        return membership_transfer && max_correspondence && rad_membership &&
               rad_transfer && homeomorphism && max_count_mod_radical;
    }
};

MaxCorrespondenceVerdict max_spectrum_correspondence(const ResiduatedLattice& l);

/// For Glivenko algebras: a in Rad(A) iff ~~a in Rad(A), and
/// Rad(Reg(A)) = Rad(A) n Reg(A).
struct RadicalRegularVerdict {
    bool double_negation_transfer = false;
    bool regular_radical_equality = false;
};

RadicalRegularVerdict radical_double_negation(const ResiduatedLattice& l);

} // namespace reslat
