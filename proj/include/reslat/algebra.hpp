#pragma once

#include <optional>
#include <string>
#include <vector>

#include "reslat/errors.hpp"

namespace reslat {

/// Raw operation tables, as read from a file or a built-in corpus entry.
/// Tables are row-major: table[a][b] is the value of (a op b) with a the
/// left operand.
struct AlgebraSpec {
    std::string name;
    std::vector<std::string> elements;
    std::vector<std::vector<std::string>> join;
    std::vector<std::vector<std::string>> meet;
    std::vector<std::vector<std::string>> prod;
    std::optional<std::vector<std::vector<std::string>>> imp;
    std::string bottom;
    std::string top;
};

/// The order of an element: the least k with a^k = 0, or infinite.
struct ElementOrder {
    int element = 0;
    std::optional<int> ord;      // nullopt means infinite
    std::vector<int> power_trace; // a^1, a^2, ... distinct values until repeat or zero

    bool finite() const { return ord.has_value(); }
};

/// A validated finite commutative residuated lattice. Immutable after
/// construction; the carrier is 0..n-1 and element names are metadata.
class ResiduatedLattice {
public:
    static constexpr int kDefaultCap = 64;

    /// Checks every axiom (lattice, monoid, residuation) and derives the
    /// implication table when the spec omits it. Throws on any violation,
    /// naming the offending elements.
    static ResiduatedLattice validate(const AlgebraSpec& spec, int cap = kDefaultCap);

    int size() const { return n_; }
    const std::string& label() const { return label_; }
    const std::string& name_of(int a) const { return names_[static_cast<size_t>(a)]; }
    const std::vector<std::string>& names() const { return names_; }

    /// Resolves an element name; throws NameError for unknown names.
    int index_of(const std::string& name) const;

    int bottom() const { return bottom_; }
    int top() const { return top_; }

    int join(int a, int b) const { return join_[idx(a, b)]; }
    int meet(int a, int b) const { return meet_[idx(a, b)]; }
    int prod(int a, int b) const { return prod_[idx(a, b)]; }
    int imp(int a, int b) const { return imp_[idx(a, b)]; }
    bool leq(int a, int b) const { return leq_[idx(a, b)]; }

    int neg(int a) const { return imp(a, bottom_); }
    int biimp(int a, int b) const { return meet(imp(a, b), imp(b, a)); }

    /// a^k, with a^0 = 1.
    int power(int a, int k) const;
    ElementOrder order_of(int a) const;

    /// The stabilized value of the power sequence a, a^2, ... (the sequence
    /// is non-increasing, so it becomes constant within n steps).
    int stable_power(int a) const;

    /// B(A) = {e : e v ~e = 1}, ascending. Also re-verifies that the set is
    /// closed under join/meet/neg, that each member is idempotent and
    /// regular, and that the induced structure is a Boolean algebra.
    std::vector<int> boolean_center() const;

    /// The complement of a central element; throws NotComplemented outside B(A).
    int complement_of(int e) const;

    /// Exports the algebra back to a spec (always with an explicit imp table).
    AlgebraSpec to_spec() const;

    bool same_tables(const ResiduatedLattice& other) const;

    /// Empty algebra; useful only as a placeholder before assignment.
    ResiduatedLattice() = default;

private:
    size_t idx(int a, int b) const { return static_cast<size_t>(a) * static_cast<size_t>(n_) + static_cast<size_t>(b); }

    int n_ = 0;
    std::string label_;
    std::vector<std::string> names_;
    std::vector<int> join_, meet_, prod_, imp_;
    std::vector<char> leq_;
    int bottom_ = 0, top_ = 0;
};

/// Componentwise product of two algebras; the result re-validates.
ResiduatedLattice direct_product(const ResiduatedLattice& l1, const ResiduatedLattice& l2);

/// Induced algebra on a subset containing 0 and 1 and closed under all four
/// operations. Throws NotClosed naming the first violated closure.
ResiduatedLattice subalgebra(const ResiduatedLattice& l, const std::vector<int>& subset);

/// Backtracking search for an isomorphism; returns the carrier map or
/// nullopt. Intended as an oracle on small algebras.
std::optional<std::vector<int>> find_isomorphism(const ResiduatedLattice& l1,
                                                 const ResiduatedLattice& l2);

} // namespace reslat
