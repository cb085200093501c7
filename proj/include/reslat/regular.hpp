#pragma once

#include <optional>
#include <vector>

#include "reslat/algebra.hpp"

namespace reslat {

/// Reg(A) with the star operations a op* b = ~~(a op b). The implication is
/// inherited (Reg(A) is closed under it). When the star tables validate as a
/// residuated lattice, `algebra` holds the validated structure.
struct StarAlgebra {
    std::vector<int> carrier;        // parent indices, ascending
    std::vector<int> join, meet, prod, imp; // tables over carrier positions
    std::optional<std::vector<int>> oplus;  // MV addition, when constructed
    bool is_involutive_rl = false;
    std::optional<ResiduatedLattice> algebra;

    int pos_of(int parent_index) const;
    int n() const { return static_cast<int>(carrier.size()); }
};

/// Fixed points of double negation; equals {~a : a in A}.
std::vector<int> regular_elements(const ResiduatedLattice& l);

/// The identity ~~(~~a -> a) = 1, for every a.
bool is_glivenko(const ResiduatedLattice& l);

/// Builds the star tables on Reg(A). The involutive-residuated-lattice
/// verdict comes from an actual validation run, never from an assumption.
StarAlgebra star_algebra(const ResiduatedLattice& l);

/// The identity (~a -> ~b) -> ~b = (~b -> ~a) -> ~a, for all pairs.
bool satisfies_star_equation(const ResiduatedLattice& l);

/// Defines oplus on Reg(A) by ~a (+) ~b = ~(a .* b), scans the MV axioms,
/// and asserts the verdict matches satisfies_star_equation. Requires
/// Glivenko (throws NotGlivenko).
StarAlgebra mv_structure_on_reg(const ResiduatedLattice& l);

/// Whether the MV-axiom scan on Reg(A) succeeds (the verdict recorded by
/// mv_structure_on_reg).
bool reg_is_mv(const StarAlgebra& star);

/// B(A) == B(Reg(A)), as sets of parent elements.
bool boolean_center_equality(const ResiduatedLattice& l);

} // namespace reslat
