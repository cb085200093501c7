#include "reslat/filters.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace reslat {

std::vector<int> Filter::elements(int n) const {
    std::vector<int> out;
    for (int a = 0; a < n; ++a)
        if (contains(a)) out.push_back(a);
    return out;
}

int Filter::cardinality() const { return std::popcount(members); }

bool filter_less(const Filter& a, const Filter& b) {
    const int ca = std::popcount(a.members), cb = std::popcount(b.members);
    if (ca != cb) return ca < cb;
    return a.members < b.members;
}

namespace {

std::string set_name(const ResiduatedLattice& l, Mask m) {
    std::string s = "{";
    bool first = true;
    for (int a = 0; a < l.size(); ++a)
        if (mask_has(m, a)) {
            if (!first) s += ",";
            s += l.name_of(a);
            first = false;
        }
    return s + "}";
}

bool is_filter_set(const ResiduatedLattice& l, Mask m) {
    if (m == 0) return false;
    for (int a = 0; a < l.size(); ++a) {
        if (!mask_has(m, a)) continue;
        for (int b = 0; b < l.size(); ++b) {
            if (mask_has(m, b) && !mask_has(m, l.prod(a, b))) return false;
            if (l.leq(a, b) && !mask_has(m, b)) return false;
        }
    }
    return true;
}

bool is_deductive_system(const ResiduatedLattice& l, Mask m) {
    if (!mask_has(m, l.top())) return false;
    for (int a = 0; a < l.size(); ++a) {
        if (!mask_has(m, a)) continue;
        for (int b = 0; b < l.size(); ++b)
            if (mask_has(m, l.imp(a, b)) && !mask_has(m, b)) return false;
    }
    return true;
}

Mask closure(const ResiduatedLattice& l, Mask seed) {
    Mask m = seed | (Mask{1} << l.top());
    bool changed = true;
    while (changed) {
        changed = false;
        for (int a = 0; a < l.size(); ++a) {
            if (!mask_has(m, a)) continue;
            for (int b = 0; b < l.size(); ++b) {
                if (mask_has(m, b) && !mask_has(m, l.prod(a, b))) {
                    m |= Mask{1} << l.prod(a, b);
                    changed = true;
                }
                if (l.leq(a, b) && !mask_has(m, b)) {
                    m |= Mask{1} << b;
                    changed = true;
                }
            }
        }
    }
    return m;
}

bool prime_set(const ResiduatedLattice& l, Mask m) {
    for (int a = 0; a < l.size(); ++a)
        for (int b = a; b < l.size(); ++b)
            if (mask_has(m, l.join(a, b)) && !mask_has(m, a) && !mask_has(m, b)) return false;
    return true;
}

bool maximal_set(const ResiduatedLattice& l, Mask m) {
    const Mask full = mask_all(l.size());
    for (int a = 0; a < l.size(); ++a)
        if (!mask_has(m, a) && closure(l, m | (Mask{1} << a)) != full) return false;
    return true;
}

bool primary_set(const ResiduatedLattice& l, Mask m) {
    for (int a = 0; a < l.size(); ++a)
        for (int b = a; b < l.size(); ++b) {
            if (!mask_has(m, l.neg(l.prod(a, b)))) continue;
            // The existential over n is monotone, so the stabilized powers decide it.
            if (!mask_has(m, l.neg(l.stable_power(a))) &&
                !mask_has(m, l.neg(l.stable_power(b))))
                return false;
        }
    return true;
}

bool quasi_primary_set(const ResiduatedLattice& l, Mask m) {
    std::vector<char> central(static_cast<size_t>(l.size()), 0);
    for (int e = 0; e < l.size(); ++e)
        central[static_cast<size_t>(e)] = l.join(e, l.neg(e)) == l.top() ? 1 : 0;
    for (int a = 0; a < l.size(); ++a)
        for (int b = a; b < l.size(); ++b) {
            if (!mask_has(m, l.neg(l.prod(a, b)))) continue;
            const int as = l.stable_power(a), bs = l.stable_power(b);
            bool found = false;
            for (int u = 0; u < l.size() && !found; ++u) {
                if (!central[static_cast<size_t>(l.join(u, l.neg(u)))]) continue;
                if (mask_has(m, l.neg(l.prod(as, u))) &&
                    mask_has(m, l.neg(l.prod(bs, l.neg(u)))))
                    found = true;
            }
            if (!found) return false;
        }
    return true;
}

} // namespace

Filter make_filter(const ResiduatedLattice& l, Mask members) {
    const bool filter_ok = is_filter_set(l, members);
    const bool ds_ok = is_deductive_system(l, members);
    if (filter_ok != ds_ok)
        throw Error("filter and deductive-system characterizations disagree on " +
                    set_name(l, members) + " in '" + l.label() + "'");
    if (!filter_ok)
        throw Error(set_name(l, members) + " is not a filter of '" + l.label() + "'");

    Filter f;
    f.members = members;
    f.proper = members != mask_all(l.size());
    if (f.proper) {
        f.prime = prime_set(l, members);
        f.maximal = maximal_set(l, members);
        f.primary = primary_set(l, members);
        f.quasi_primary = quasi_primary_set(l, members);
    }
    return f;
}

Filter generated_filter(const ResiduatedLattice& l, const std::vector<int>& generators) {
    Mask seed = 0;
    for (int a : generators) seed |= Mask{1} << a;
    return make_filter(l, closure(l, seed));
}

std::vector<Filter> all_filters(const ResiduatedLattice& l) {
    const int n = l.size();
    if (n > 20)
        throw CapExceeded("filter enumeration needs n <= 20, got " + std::to_string(n));
    std::vector<Filter> out;
    const Mask top_bit = Mask{1} << l.top();
    const Mask full = mask_all(n);
    for (Mask m = 0; m <= full; ++m) {
        if (!(m & top_bit)) continue;
        if (!is_filter_set(l, m)) continue;
        out.push_back(make_filter(l, m));
    }
    std::sort(out.begin(), out.end(), filter_less);
    return out;
}

bool SpectrumSpace::is_open(Mask point_set) const {
    return std::binary_search(opens.begin(), opens.end(), point_set);
}

namespace {

SpectrumSpace build_space(const ResiduatedLattice& l, std::vector<Filter> points) {
    if (points.size() > 64)
        throw CapExceeded("spectrum has more than 64 points");
    SpectrumSpace sp;
    sp.points = std::move(points);
    sp.basis.assign(static_cast<size_t>(l.size()), 0);
    for (int a = 0; a < l.size(); ++a)
        for (size_t p = 0; p < sp.points.size(); ++p)
            if (!sp.points[p].contains(a)) sp.basis[static_cast<size_t>(a)] |= Mask{1} << p;

    // Finite space: the opens are exactly the unions of basis sets.
    std::set<Mask> opens{0};
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<Mask> snapshot(opens.begin(), opens.end());
        for (Mask o : snapshot)
            for (Mask b : sp.basis)
                if (opens.insert(o | b).second) changed = true;
    }
    sp.opens.assign(opens.begin(), opens.end());
    return sp;
}

} // namespace

SpectrumSpace spectrum(const ResiduatedLattice& l) {
    std::vector<Filter> primes;
    for (const Filter& f : all_filters(l))
        if (f.proper && f.prime) primes.push_back(f);
    return build_space(l, std::move(primes));
}

SpectrumSpace max_spectrum(const ResiduatedLattice& l) {
    std::vector<Filter> maximals;
    for (const Filter& f : all_filters(l))
        if (f.maximal) maximals.push_back(f);
    return build_space(l, std::move(maximals));
}

Mask stone_open(const SpectrumSpace& sp, Mask x) {
    Mask out = 0;
    for (size_t p = 0; p < sp.points.size(); ++p)
        if ((x & sp.points[p].members) != x) out |= Mask{1} << p;
    return out;
}

Mask infinite_order_elements(const ResiduatedLattice& l) {
    Mask m = 0;
    for (int a = 0; a < l.size(); ++a)
        if (!l.order_of(a).finite()) m |= Mask{1} << a;
    return m;
}

namespace {

Mask radical_by_intersection(const ResiduatedLattice& l) {
    Mask rad = mask_all(l.size());
    for (const Filter& f : all_filters(l))
        if (f.maximal) rad &= f.members;
    return rad;
}

Mask radical_by_formula(const ResiduatedLattice& l) {
    // a in Rad iff for every power v of a, some power of ~v reaches 0,
    // i.e. ord(~v) is finite. Both existentials are monotone, so the
    // distinct-power traces decide them.
    Mask rad = 0;
    for (int a = 0; a < l.size(); ++a) {
        bool in_rad = true;
        for (int v : l.order_of(a).power_trace)
            if (l.order_of(l.neg(v)).finite() == false) { in_rad = false; break; }
        if (in_rad) rad |= Mask{1} << a;
    }
    return rad;
}

} // namespace

Filter radical(const ResiduatedLattice& l) {
    const Mask by_max = radical_by_intersection(l);
    const Mask by_formula = radical_by_formula(l);
    if (by_max != by_formula)
        throw RadicalMismatch("radical routes disagree on '" + l.label() + "': " +
                              set_name(l, by_max) + " vs " + set_name(l, by_formula));
    return make_filter(l, by_max);
}

Filter dense_elements(const ResiduatedLattice& l) {
    Mask m = 0;
    for (int a = 0; a < l.size(); ++a)
        if (l.neg(a) == l.bottom()) m |= Mask{1} << a;
    Filter ds = make_filter(l, m);
    const Mask rad = radical_by_intersection(l);
    if ((ds.members & rad) != ds.members)
        throw Error("dense elements are not contained in the radical of '" + l.label() + "'");
    return ds;
}

bool is_primary(const ResiduatedLattice& l, const Filter& f) {
    if (!f.proper) throw NotProper("primary is defined for proper filters only");
    return primary_set(l, f.members);
}

bool is_quasi_primary(const ResiduatedLattice& l, const Filter& f) {
    if (!f.proper) throw NotProper("quasi-primary is defined for proper filters only");
    return quasi_primary_set(l, f.members);
}

} // namespace reslat
