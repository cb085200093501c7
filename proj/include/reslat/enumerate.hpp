#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "reslat/algebra.hpp"

namespace reslat {

/// A bounded lattice in canonical form (join/meet tables over 0..n-1 with
/// bottom 0 and top n-1).
struct BoundedLattice {
    int n = 0;
    std::vector<char> leq;
    std::vector<int> join;
    std::vector<int> meet;
};

struct EnumerationOptions {
    int full_cap = 5;   // exhaustive over all lattice shapes
    int chain_cap = 6;  // chains only beyond full_cap
    bool chains_only = false;
};

EnumerationOptions enumeration_options_from_env();

/// All bounded lattices on n elements up to isomorphism, in canonical order.
std::vector<BoundedLattice> enumerate_lattices(int n, const EnumerationOptions& opts = {});

/// All residuated lattices on n elements up to isomorphism: every
/// commutative, unital, associative, monotone product admitting residuals on
/// every enumerated lattice, deduplicated by lattice automorphisms. Each
/// result passes the full validator.
std::vector<ResiduatedLattice> enumerate_residuated(int n,
                                                    const EnumerationOptions& opts = {});

/// Streams enumerated algebras of a given size through a callback; stops
/// early when the callback returns false.
void for_each_residuated(int n, const EnumerationOptions& opts,
                         const std::function<bool(const ResiduatedLattice&)>& fn);

struct HuntResult {
    bool found = false;
    std::optional<ResiduatedLattice> counterexample;
    int last_size_searched = 0;
};

/// Searches enumeration order for the least algebra satisfying every
/// antecedent but not the consequent. Predicate names come from
/// class_predicates().
HuntResult hunt(const std::vector<std::string>& antecedents, const std::string& consequent,
                int max_size, const EnumerationOptions& opts = {});

} // namespace reslat
