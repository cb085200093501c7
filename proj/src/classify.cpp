#include "reslat/classify.hpp"

#include <algorithm>

#include "reslat/quotient.hpp"
#include "reslat/regular.hpp"

namespace reslat {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::True: return "true";
        case Verdict::False: return "false";
        default: return "trivial";
    }
}

namespace {

Verdict as_verdict(bool b) { return b ? Verdict::True : Verdict::False; }

bool truthy(Verdict v) { return v == Verdict::True; }

} // namespace

Check is_mtl(const ResiduatedLattice& l) {
    for (int a = 0; a < l.size(); ++a)
        for (int b = 0; b < l.size(); ++b)
            if (l.join(l.imp(a, b), l.imp(b, a)) != l.top())
                return {false,
                        {{a, b},
                         "(" + l.name_of(a) + "->" + l.name_of(b) + ") v (" + l.name_of(b) +
                             "->" + l.name_of(a) + ") = " +
                             l.name_of(l.join(l.imp(a, b), l.imp(b, a))) + " != 1"}};
    return {};
}

Check is_divisible(const ResiduatedLattice& l) {
    for (int a = 0; a < l.size(); ++a)
        for (int b = 0; b < l.size(); ++b)
            if (l.meet(a, b) != l.prod(a, l.imp(a, b)))
                return {false,
                        {{a, b},
                         l.name_of(a) + " ^ " + l.name_of(b) + " = " +
                             l.name_of(l.meet(a, b)) + " != " +
                             l.name_of(l.prod(a, l.imp(a, b))) + " = " + l.name_of(a) + " . (" +
                             l.name_of(a) + "->" + l.name_of(b) + ")"}};
    return {};
}

Check is_bl(const ResiduatedLattice& l) {
    Check mtl = is_mtl(l);
    if (!mtl.holds) return mtl;
    return is_divisible(l);
}

Check is_involutive(const ResiduatedLattice& l) {
    for (int a = 0; a < l.size(); ++a)
        if (l.neg(l.neg(a)) != a)
            return {false,
                    {{a}, "~~" + l.name_of(a) + " = " + l.name_of(l.neg(l.neg(a))) + " != " +
                              l.name_of(a)}};
    return {};
}

Check is_imtl(const ResiduatedLattice& l) {
    Check mtl = is_mtl(l);
    if (!mtl.holds) return mtl;
    return is_involutive(l);
}

Check is_mv(const ResiduatedLattice& l) {
    Check inv = is_involutive(l);
    if (!inv.holds) return inv;
    return is_bl(l);
}

Verdict is_simple(const ResiduatedLattice& l) {
    if (l.size() == 1) return Verdict::Trivial;
    bool by_filters = true;
    for (const Filter& f : all_filters(l))
        if (f.proper && f.cardinality() > 1) { by_filters = false; break; }
    bool by_order = true;
    for (int a = 0; a < l.size(); ++a)
        if (a != l.top() && !l.order_of(a).finite()) { by_order = false; break; }
    if (by_filters != by_order)
        throw Error("simplicity via filters and via element order disagree on '" + l.label() +
                    "'");
    return as_verdict(by_filters);
}

Verdict is_local(const ResiduatedLattice& l) {
    if (l.size() == 1) return Verdict::Trivial;
    int maximal = 0;
    for (const Filter& f : all_filters(l))
        if (f.maximal) ++maximal;
    return as_verdict(maximal == 1);
}

Verdict is_semilocal(const ResiduatedLattice& l) {
    if (l.size() == 1) return Verdict::Trivial;
    return Verdict::True; // finite algebras have finitely many maximal filters
}

Check is_quasi_local(const ResiduatedLattice& l) {
    const std::vector<int> center = l.boolean_center();
    for (int a = 0; a < l.size(); ++a) {
        // a^n . e = 0 and (~a)^n . ~e = 0; both sides are monotone in n, so
        // the stabilized powers decide the existential.
        const int as = l.stable_power(a);
        const int nas = l.stable_power(l.neg(a));
        bool found = false;
        for (int e : center)
            if (l.prod(as, e) == l.bottom() && l.prod(nas, l.neg(e)) == l.bottom()) {
                found = true;
                break;
            }
        if (!found)
            return {false, {{a}, "no central witness for " + l.name_of(a)}};
    }
    return {};
}

Verdict ClassificationReport::verdict(const std::string& cls) const {
    for (const auto& [name, v] : verdicts)
        if (name == cls) return v;
    throw NameError("unknown class '" + cls + "' in report");
}

ClassificationReport classification_report(const ResiduatedLattice& l) {
    ClassificationReport r;
    r.name = l.label();
    r.n = l.size();

    const Check mtl = is_mtl(l);
    const Check bl = is_bl(l);
    const Check inv = is_involutive(l);
    const Check imtl = is_imtl(l);
    const Check mv = is_mv(l);
    const bool glivenko = is_glivenko(l);
    const bool star_eq = satisfies_star_equation(l);
    const Verdict simple = is_simple(l);
    const Verdict local = is_local(l);
    const Verdict semilocal = is_semilocal(l);
    const Check quasi_local = is_quasi_local(l);

    auto record = [&](const std::string& name, Verdict v) { r.verdicts.emplace_back(name, v); };
    auto record_check = [&](const std::string& name, const Check& c) {
        record(name, as_verdict(c.holds));
        if (!c.holds) r.witnesses.emplace(name, c.witness);
    };
    record_check("mtl", mtl);
    record_check("imtl", imtl);
    record_check("bl", bl);
    record_check("mv", mv);
    record_check("involutive", inv);
    record("glivenko", as_verdict(glivenko));
    record("star_equation", as_verdict(star_eq));
    record("simple", simple);
    record("local", local);
    record("semilocal", semilocal);
    record_check("quasi_local", quasi_local);

    const std::vector<Filter> filters = all_filters(l);
    r.filter_count = filters.size();
    r.spec_count = spectrum(l).points.size();
    r.max_count = max_spectrum(l).points.size();
    r.dense = dense_elements(l).elements(l.size());
    r.rad = radical(l).elements(l.size());
    r.center = l.boolean_center();
    const Mask d_mask = infinite_order_elements(l);
    for (int a = 0; a < l.size(); ++a)
        if (mask_has(d_mask, a)) r.d_set.push_back(a);

    // Cross-implication closure; a violation is a bug, not a verdict.
    auto require = [&](bool cond, const std::string& what) {
        if (!cond) throw Error("implication '" + what + "' fails on '" + l.label() + "'");
    };
    if (truthy(r.verdict("mv"))) require(bl.holds, "MV => BL");
    if (bl.holds) require(mtl.holds, "BL => MTL");
    require(truthy(r.verdict("imtl")) == (mtl.holds && inv.holds), "IMTL = MTL and involutive");
    if (inv.holds) require(glivenko, "involutive => Glivenko");
    if (simple == Verdict::True) require(local == Verdict::True, "simple => local");
    if (local == Verdict::True) {
        require(semilocal == Verdict::True, "local => semilocal");
        require(quasi_local.holds, "local => quasi-local");
        require(r.center == std::vector<int>({l.bottom(), l.top()}), "local => B(A) = {0,1}");
        // The unique maximal filter is D(A).
        Mask max_mask = 0;
        for (const Filter& f : filters)
            if (f.maximal) max_mask = f.members;
        require(max_mask == d_mask, "local => unique maximal filter = D(A)");
        for (int a = 0; a < l.size(); ++a)
            require(l.order_of(a).finite() || l.order_of(l.neg(a)).finite(),
                    "local => ord(a) or ord(~a) finite");
    }
    for (const Filter& f : filters)
        if (f.proper && f.primary) require(f.quasi_primary, "primary => quasi-primary");

    // MV via involutive+BL agrees with the direct axiom scan when it applies.
    if (inv.holds && glivenko) {
        const StarAlgebra star = mv_structure_on_reg(l);
        require(reg_is_mv(star) == mv.holds, "MV = involutive BL = direct axiom scan");
    }

    // Quasi-local survives every quotient.
    if (quasi_local.holds)
        for (const Filter& f : filters)
            require(is_quasi_local(quotient(l, f).algebra).holds,
                    "quasi-local preserved by quotients");
    return r;
}

namespace {

bool pred_mtl(const ResiduatedLattice& l) { return is_mtl(l).holds; }
bool pred_imtl(const ResiduatedLattice& l) { return is_imtl(l).holds; }
bool pred_bl(const ResiduatedLattice& l) { return is_bl(l).holds; }
bool pred_mv(const ResiduatedLattice& l) { return is_mv(l).holds; }
bool pred_involutive(const ResiduatedLattice& l) { return is_involutive(l).holds; }
bool pred_glivenko(const ResiduatedLattice& l) { return is_glivenko(l); }
bool pred_star(const ResiduatedLattice& l) { return satisfies_star_equation(l); }
bool pred_simple(const ResiduatedLattice& l) { return is_simple(l) == Verdict::True; }
bool pred_local(const ResiduatedLattice& l) { return is_local(l) == Verdict::True; }
bool pred_semilocal(const ResiduatedLattice& l) { return is_semilocal(l) == Verdict::True; }
bool pred_quasi_local(const ResiduatedLattice& l) { return is_quasi_local(l).holds; }
bool pred_quasi_local_mod_ds(const ResiduatedLattice& l) {
    return is_quasi_local(quotient(l, dense_elements(l)).algebra).holds;
}
bool pred_lifting(const ResiduatedLattice& l) { return has_lifting_boolean_center(l); }

} // namespace

const std::map<std::string, bool (*)(const ResiduatedLattice&)>& class_predicates() {
    static const std::map<std::string, bool (*)(const ResiduatedLattice&)> registry = {
        {"mtl", &pred_mtl},
        {"imtl", &pred_imtl},
        {"bl", &pred_bl},
        {"mv", &pred_mv},
        {"involutive", &pred_involutive},
        {"glivenko", &pred_glivenko},
        {"star_equation", &pred_star},
        {"simple", &pred_simple},
        {"local", &pred_local},
        {"semilocal", &pred_semilocal},
        {"quasi_local", &pred_quasi_local},
        {"quasi_local_mod_ds", &pred_quasi_local_mod_ds},
        {"lifting", &pred_lifting},
    };
    return registry;
}

} // namespace reslat
