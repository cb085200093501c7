#include "reslat/regular.hpp"

#include <algorithm>

namespace reslat {

int StarAlgebra::pos_of(int parent_index) const {
    auto it = std::lower_bound(carrier.begin(), carrier.end(), parent_index);
    if (it == carrier.end() || *it != parent_index)
        throw Error("element is not regular");
    return static_cast<int>(it - carrier.begin());
}

std::vector<int> regular_elements(const ResiduatedLattice& l) {
    std::vector<int> fixed;
    for (int a = 0; a < l.size(); ++a)
        if (l.neg(l.neg(a)) == a) fixed.push_back(a);

    // Reg(A) = image of negation; 0 and 1 are always regular.
    std::vector<int> image;
    for (int a = 0; a < l.size(); ++a) image.push_back(l.neg(a));
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    if (image != fixed)
        throw Error("regular elements differ from the image of negation in '" + l.label() + "'");
    if (!std::binary_search(fixed.begin(), fixed.end(), l.bottom()) ||
        !std::binary_search(fixed.begin(), fixed.end(), l.top()))
        throw Error("0 or 1 is not regular in '" + l.label() + "'");
    return fixed;
}

bool is_glivenko(const ResiduatedLattice& l) {
    for (int a = 0; a < l.size(); ++a) {
        const int nn = l.neg(l.neg(a));
        if (l.neg(l.neg(l.imp(nn, a))) != l.top()) return false;
    }
    return true;
}

bool satisfies_star_equation(const ResiduatedLattice& l) {
    for (int a = 0; a < l.size(); ++a)
        for (int b = 0; b < l.size(); ++b) {
            const int na = l.neg(a), nb = l.neg(b);
            if (l.imp(l.imp(na, nb), nb) != l.imp(l.imp(nb, na), na)) return false;
        }
    return true;
}

StarAlgebra star_algebra(const ResiduatedLattice& l) {
    StarAlgebra s;
    s.carrier = regular_elements(l);
    const int m = s.n();
    auto dn = [&](int x) { return l.neg(l.neg(x)); };

    s.join.assign(static_cast<size_t>(m) * m, 0);
    s.meet.assign(static_cast<size_t>(m) * m, 0);
    s.prod.assign(static_cast<size_t>(m) * m, 0);
    s.imp.assign(static_cast<size_t>(m) * m, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const int a = s.carrier[static_cast<size_t>(i)];
            const int b = s.carrier[static_cast<size_t>(j)];
            s.join[static_cast<size_t>(i) * m + j] = s.pos_of(dn(l.join(a, b)));
            s.meet[static_cast<size_t>(i) * m + j] = s.pos_of(dn(l.meet(a, b)));
            s.prod[static_cast<size_t>(i) * m + j] = s.pos_of(dn(l.prod(a, b)));
            s.imp[static_cast<size_t>(i) * m + j] = s.pos_of(l.imp(a, b)); // Reg closed under ->
        }

    // The involutive-residuated-lattice verdict comes from an actual
    // validation run on the star tables.
    AlgebraSpec spec;
    spec.name = l.label() + "|reg";
    for (int a : s.carrier) spec.elements.push_back(l.name_of(a));
    auto dump = [&](const std::vector<int>& t) {
        std::vector<std::vector<std::string>> rows;
        for (int i = 0; i < m; ++i) {
            std::vector<std::string> row;
            for (int j = 0; j < m; ++j)
                row.push_back(l.name_of(s.carrier[static_cast<size_t>(
                    t[static_cast<size_t>(i) * m + j])]));
            rows.push_back(std::move(row));
        }
        return rows;
    };
    spec.join = dump(s.join);
    spec.meet = dump(s.meet);
    spec.prod = dump(s.prod);
    spec.imp = dump(s.imp);
    spec.bottom = l.name_of(l.bottom());
    spec.top = l.name_of(l.top());
    try {
        ResiduatedLattice reg = ResiduatedLattice::validate(spec);
        bool involutive = true;
        for (int i = 0; i < m; ++i)
            if (reg.neg(reg.neg(i)) != i) { involutive = false; break; }
        s.is_involutive_rl = involutive;
        s.algebra = std::move(reg);
    } catch (const Error&) {
        s.is_involutive_rl = false;
    }

    if (is_glivenko(l)) {
        if (!s.is_involutive_rl || !s.algebra)
            throw Error("Glivenko algebra '" + l.label() +
                        "' has a non-involutive regular part");
        // a |-> ~~a must be a surjective morphism onto the star algebra.
        for (int a = 0; a < l.size(); ++a)
            for (int b = 0; b < l.size(); ++b) {
                const auto& reg = *s.algebra;
                const int fa = s.pos_of(dn(a)), fb = s.pos_of(dn(b));
                if (reg.join(fa, fb) != s.pos_of(dn(l.join(a, b))) ||
                    reg.meet(fa, fb) != s.pos_of(dn(l.meet(a, b))) ||
                    reg.prod(fa, fb) != s.pos_of(dn(l.prod(a, b))) ||
                    reg.imp(fa, fb) != s.pos_of(dn(l.imp(a, b))))
                    throw Error("double negation is not a morphism on '" + l.label() + "'");
            }
    }
    return s;
}

namespace {

bool mv_axioms_hold(const StarAlgebra& s) {
    const int m = s.n();
    auto op = [&](const std::vector<int>& t, int i, int j) {
        return t[static_cast<size_t>(i) * m + j];
    };
    auto oplus = [&](int i, int j) { return op(*s.oplus, i, j); };
    if (!s.algebra) throw Error("star tables did not validate");
    const ResiduatedLattice& reg = *s.algebra;
    const int zero = reg.bottom(), one = reg.top();
    auto nn = [&](int i) { return reg.neg(i); };

    for (int i = 0; i < m; ++i) {
        if (nn(nn(i)) != i) return false;           // ~~a = a
        if (oplus(i, one) != one) return false;     // a (+) ~0 = ~0
        if (oplus(i, zero) != i) return false;      // unit
        for (int j = 0; j < m; ++j) {
            if (oplus(i, j) != oplus(j, i)) return false;
            if (oplus(nn(oplus(nn(i), j)), j) != oplus(nn(oplus(nn(j), i)), i)) return false;
            for (int k = 0; k < m; ++k)
                if (oplus(oplus(i, j), k) != oplus(i, oplus(j, k))) return false;
        }
    }
    return true;
}

} // namespace

StarAlgebra mv_structure_on_reg(const ResiduatedLattice& l) {
    if (!is_glivenko(l))
        throw NotGlivenko("MV structure on Reg(A) requires a Glivenko algebra: '" +
                          l.label() + "'");
    StarAlgebra s = star_algebra(l);
    const int m = s.n();
    const ResiduatedLattice& reg = *s.algebra;

    // ~a (+) ~b = ~(a .* b); every regular x is ~(~x), so
    // x (+) y = ~(~x .* ~y) within Reg(A).
    std::vector<int> oplus(static_cast<size_t>(m) * m, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            oplus[static_cast<size_t>(i) * m + j] = reg.neg(reg.prod(reg.neg(i), reg.neg(j)));
    s.oplus = std::move(oplus);

    if (mv_axioms_hold(s) != satisfies_star_equation(l))
        throw Error("MV verdict on Reg(A) disagrees with the star equation for '" +
                    l.label() + "'");
    return s;
}

bool reg_is_mv(const StarAlgebra& star) {
    if (!star.oplus || !star.algebra) return false;
    return mv_axioms_hold(star);
}

bool boolean_center_equality(const ResiduatedLattice& l) {
    const std::vector<int> center = l.boolean_center();
    const StarAlgebra s = star_algebra(l);
    if (!s.algebra) return false;
    std::vector<int> reg_center;
    for (int i : s.algebra->boolean_center())
        reg_center.push_back(s.carrier[static_cast<size_t>(i)]);
    return center == reg_center;
}

} // namespace reslat
