#pragma once

#include <map>
#include <string>
#include <vector>

#include "reslat/algebra.hpp"
#include "reslat/filters.hpp"

namespace reslat {

enum class Verdict { True, False, Trivial };

std::string to_string(Verdict v);

/// A concrete violating tuple for a failed identity.
struct Witness {
    std::vector<int> tuple;
    std::string description;
};

/// Result of one identity scan: holds, or fails with the least witness in
/// canonical scan order.
struct Check {
    bool holds = true;
    Witness witness;
};

Check is_mtl(const ResiduatedLattice& l);        // (a->b) v (b->a) = 1
Check is_divisible(const ResiduatedLattice& l);  // a ^ b = a . (a->b)
Check is_bl(const ResiduatedLattice& l);
Check is_involutive(const ResiduatedLattice& l); // ~~a = a
Check is_imtl(const ResiduatedLattice& l);
Check is_mv(const ResiduatedLattice& l);         // involutive and BL

/// Simple: only filters are {1} and A; equivalently every a != 1 has finite
/// order. Both routes are computed and must agree. Trivial for n = 1.
Verdict is_simple(const ResiduatedLattice& l);

/// Local: exactly one maximal filter. Trivial for n = 1.
Verdict is_local(const ResiduatedLattice& l);

/// Semilocal: finitely many maximal filters (always true at finite size).
Verdict is_semilocal(const ResiduatedLattice& l);

/// Quasi-local: every a admits a central e and n with a^n . e = 0 and
/// (~a)^n . ~e = 0. False verdicts carry the violating a.
Check is_quasi_local(const ResiduatedLattice& l);

struct ClassificationReport {
    std::string name;
    int n = 0;
    std::vector<std::pair<std::string, Verdict>> verdicts; // stable order
    std::map<std::string, Witness> witnesses;              // for false verdicts
    std::size_t filter_count = 0;
    std::size_t spec_count = 0;
    std::size_t max_count = 0;
    std::vector<int> dense;   // Ds(A)
    std::vector<int> rad;     // Rad(A)
    std::vector<int> center;  // B(A)
    std::vector<int> d_set;   // D(A) = elements of infinite order

    Verdict verdict(const std::string& cls) const;
};

/// Runs every class predicate, asserts the cross-implication closure
/// (MV => BL => MTL, simple => local => semilocal and quasi-local, ...) and
/// the quotient-preservation properties; throws Error on any violation.
ClassificationReport classification_report(const ResiduatedLattice& l);

/// Named class predicates usable as enumeration filters.
const std::map<std::string, bool (*)(const ResiduatedLattice&)>& class_predicates();

} // namespace reslat
