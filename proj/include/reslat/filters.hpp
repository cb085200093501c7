#pragma once

#include <cstdint>
#include <vector>

#include "reslat/algebra.hpp"

namespace reslat {

using Mask = std::uint64_t;

inline bool mask_has(Mask m, int a) { return (m >> a) & 1u; }
inline Mask mask_all(int n) { return n == 64 ? ~Mask{0} : ((Mask{1} << n) - 1); }

/// A filter of a residuated lattice with its classification flags.
struct Filter {
    Mask members = 0;
    bool proper = false;
    bool prime = false;
    bool maximal = false;
    bool primary = false;
    bool quasi_primary = false;

    bool contains(int a) const { return mask_has(members, a); }
    std::vector<int> elements(int n) const;
    int cardinality() const;
};

/// Canonical filter order: by cardinality, then by bitmask.
bool filter_less(const Filter& a, const Filter& b);

/// Verifies that the subset is a filter under both the filter and the
/// deductive-system characterizations, then computes all flags.
Filter make_filter(const ResiduatedLattice& l, Mask members);

/// Least filter containing X; generated_filter({}) = {1}.
Filter generated_filter(const ResiduatedLattice& l, const std::vector<int>& generators);

/// All filters, canonically ordered. Requires n <= 20 (subset scan).
std::vector<Filter> all_filters(const ResiduatedLattice& l);

/// A finite topological space whose points are filters.
struct SpectrumSpace {
    std::vector<Filter> points;
    std::vector<Mask> basis; // basis[a] = S(a), as a mask over point indices
    std::vector<Mask> opens; // all opens (unions of basis sets), sorted

    bool is_open(Mask point_set) const;
};

/// Prime filters with the Stone topology.
SpectrumSpace spectrum(const ResiduatedLattice& l);
/// Maximal filters with the induced topology.
SpectrumSpace max_spectrum(const ResiduatedLattice& l);

/// S(X) = primes (points of sp) not containing X, as a mask over sp.points.
Mask stone_open(const SpectrumSpace& sp, Mask x);

/// Ds(A) = {a : ~a = 0}, returned as a verified filter; asserts Ds <= Rad.
Filter dense_elements(const ResiduatedLattice& l);

/// D(A) = {a : ord(a) = infinite}, as a mask (not a filter in general).
Mask infinite_order_elements(const ResiduatedLattice& l);

/// Rad(A), computed both as the intersection of all maximal filters and by
/// the elementwise order formula; throws RadicalMismatch if they disagree.
Filter radical(const ResiduatedLattice& l);

/// Factorization conditions on proper filters: ~(a.b) in F forces some
/// power-based membership (see the class glossary in the README).
bool is_primary(const ResiduatedLattice& l, const Filter& f);
bool is_quasi_primary(const ResiduatedLattice& l, const Filter& f);

} // namespace reslat
