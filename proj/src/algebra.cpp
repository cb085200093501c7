#include "reslat/algebra.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace reslat {

namespace {

std::string triple(const std::vector<std::string>& names, int a, int b, int c) {
    return "(" + names[a] + ", " + names[b] + ", " + names[c] + ")";
}

} // namespace

int ResiduatedLattice::index_of(const std::string& name) const {
    for (int i = 0; i < n_; ++i)
        if (names_[static_cast<size_t>(i)] == name) return i;
    throw NameError("unknown element name '" + name + "' in algebra " + label_);
}

ResiduatedLattice ResiduatedLattice::validate(const AlgebraSpec& spec, int cap) {
    const int n = static_cast<int>(spec.elements.size());
    if (n == 0) throw NameError("algebra '" + spec.name + "' has no elements");
    if (n > cap)
        throw CapExceeded("algebra '" + spec.name + "' has " + std::to_string(n) +
                          " elements, cap is " + std::to_string(cap));

    std::map<std::string, int> index;
    for (int i = 0; i < n; ++i) {
        if (!index.emplace(spec.elements[static_cast<size_t>(i)], i).second)
            throw NameError("duplicate element name '" + spec.elements[static_cast<size_t>(i)] +
                            "' in algebra '" + spec.name + "'");
    }
    auto resolve = [&](const std::string& name, const std::string& where) {
        auto it = index.find(name);
        if (it == index.end())
            throw NameError("unknown element name '" + name + "' in " + where +
                            " of algebra '" + spec.name + "'");
        return it->second;
    };

    auto read_table = [&](const std::vector<std::vector<std::string>>& rows,
                          const std::string& which) {
        if (static_cast<int>(rows.size()) != n)
            throw NameError(which + " table of '" + spec.name + "' has " +
                            std::to_string(rows.size()) + " rows, expected " + std::to_string(n));
        std::vector<int> t(static_cast<size_t>(n) * static_cast<size_t>(n));
        for (int a = 0; a < n; ++a) {
            if (static_cast<int>(rows[static_cast<size_t>(a)].size()) != n)
                throw NameError(which + " table row '" + spec.elements[static_cast<size_t>(a)] +
                                "' of '" + spec.name + "' has " +
                                std::to_string(rows[static_cast<size_t>(a)].size()) +
                                " entries, expected " + std::to_string(n));
            for (int b = 0; b < n; ++b)
                t[static_cast<size_t>(a) * n + b] =
                    resolve(rows[static_cast<size_t>(a)][static_cast<size_t>(b)],
                            which + " table");
        }
        return t;
    };

    ResiduatedLattice l;
    l.n_ = n;
    l.label_ = spec.name;
    l.names_ = spec.elements;
    l.join_ = read_table(spec.join, "join");
    l.meet_ = read_table(spec.meet, "meet");
    l.prod_ = read_table(spec.prod, "prod");
    l.bottom_ = resolve(spec.bottom, "bottom");
    l.top_ = resolve(spec.top, "top");

    const auto& nm = l.names_;
    auto jn = [&](int a, int b) { return l.join_[static_cast<size_t>(a) * n + b]; };
    auto mt = [&](int a, int b) { return l.meet_[static_cast<size_t>(a) * n + b]; };
    auto pr = [&](int a, int b) { return l.prod_[static_cast<size_t>(a) * n + b]; };

    // Lattice axioms.
    for (int a = 0; a < n; ++a) {
        if (jn(a, a) != a || mt(a, a) != a)
            throw LatticeAxiomViolation("idempotence fails at " + nm[a] + " in '" + spec.name + "'");
        for (int b = 0; b < n; ++b) {
            if (jn(a, b) != jn(b, a))
                throw LatticeAxiomViolation("join not commutative at (" + nm[a] + ", " + nm[b] +
                                            ") in '" + spec.name + "'");
            if (mt(a, b) != mt(b, a))
                throw LatticeAxiomViolation("meet not commutative at (" + nm[a] + ", " + nm[b] +
                                            ") in '" + spec.name + "'");
            if (jn(a, mt(a, b)) != a || mt(a, jn(a, b)) != a)
                throw LatticeAxiomViolation("absorption fails at (" + nm[a] + ", " + nm[b] +
                                            ") in '" + spec.name + "'");
            for (int c = 0; c < n; ++c) {
                if (jn(jn(a, b), c) != jn(a, jn(b, c)))
                    throw LatticeAxiomViolation("join not associative at " + triple(nm, a, b, c) +
                                                " in '" + spec.name + "'");
                if (mt(mt(a, b), c) != mt(a, mt(b, c)))
                    throw LatticeAxiomViolation("meet not associative at " + triple(nm, a, b, c) +
                                                " in '" + spec.name + "'");
            }
        }
    }

    // Order derived from join, cross-checked against meet.
    l.leq_.assign(static_cast<size_t>(n) * n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const bool by_join = jn(a, b) == b;
            const bool by_meet = mt(a, b) == a;
            if (by_join != by_meet)
                throw LatticeAxiomViolation("join/meet orders disagree at (" + nm[a] + ", " +
                                            nm[b] + ") in '" + spec.name + "'");
            l.leq_[static_cast<size_t>(a) * n + b] = by_join ? 1 : 0;
        }
    for (int a = 0; a < n; ++a) {
        if (!l.leq(l.bottom_, a) || !l.leq(a, l.top_))
            throw LatticeAxiomViolation("bottom/top are not least/greatest at " + nm[a] +
                                        " in '" + spec.name + "'");
    }

    // Commutative monoid with unit top.
    for (int a = 0; a < n; ++a) {
        if (pr(a, l.top_) != a || pr(l.top_, a) != a)
            throw MonoidAxiomViolation("1 is not a unit at " + nm[a] + " in '" + spec.name + "'");
        for (int b = 0; b < n; ++b) {
            if (pr(a, b) != pr(b, a))
                throw MonoidAxiomViolation("prod not commutative at (" + nm[a] + ", " + nm[b] +
                                           ") in '" + spec.name + "'");
            for (int c = 0; c < n; ++c)
                if (pr(pr(a, b), c) != pr(a, pr(b, c)))
                    throw MonoidAxiomViolation("prod not associative at " + triple(nm, a, b, c) +
                                               " in '" + spec.name + "'");
        }
    }

    // Residuals: derive, or check the given table against the derived one.
    std::vector<int> derived(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int best = -1;
            bool is_max = false;
            for (int c = 0; c < n; ++c) {
                if (!l.leq(pr(a, c), b)) continue;
                if (best < 0 || l.leq(best, c)) {
                    best = c;
                    is_max = true;
                } else if (!l.leq(c, best)) {
                    is_max = false; // incomparable candidates; recheck below
                }
            }
            if (best >= 0) {
                // best must dominate every candidate
                is_max = true;
                for (int c = 0; c < n; ++c)
                    if (l.leq(pr(a, c), b) && !l.leq(c, best)) { is_max = false; break; }
            }
            if (best < 0 || !is_max)
                throw NoResidual("no residual for (" + nm[a] + " -> " + nm[b] + ") in '" +
                                 spec.name + "'");
            derived[static_cast<size_t>(a) * n + b] = best;
        }

    if (spec.imp) {
        l.imp_ = read_table(*spec.imp, "imp");
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (l.imp_[static_cast<size_t>(a) * n + b] != derived[static_cast<size_t>(a) * n + b])
                    throw ResiduationViolation(
                        "given imp(" + nm[a] + ", " + nm[b] + ") = " +
                        nm[l.imp_[static_cast<size_t>(a) * n + b]] + " but the residual is " +
                        nm[derived[static_cast<size_t>(a) * n + b]] + " in '" + spec.name + "'");
    } else {
        l.imp_ = derived;
    }

    // Full residuation law a <= b->c iff a.b <= c.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (l.leq(a, l.imp(b, c)) != l.leq(l.prod(a, b), c))
                    throw ResiduationViolation("residuation fails at " + triple(nm, a, b, c) +
                                               " in '" + spec.name + "'");

    return l;
}

int ResiduatedLattice::power(int a, int k) const {
    int v = top_;
    for (int i = 0; i < k; ++i) v = prod(v, a);
    return v;
}

ElementOrder ResiduatedLattice::order_of(int a) const {
    ElementOrder result;
    result.element = a;
    int v = a;
    for (int k = 1; k <= n_ + 1; ++k) {
        if (!result.power_trace.empty() && v == result.power_trace.back()) break; // stabilized
        result.power_trace.push_back(v);
        if (v == bottom_) {
            result.ord = k;
            break;
        }
        v = prod(v, a);
    }
    return result;
}

int ResiduatedLattice::stable_power(int a) const {
    int v = a;
    for (int k = 0; k < n_; ++k) {
        int next = prod(v, a);
        if (next == v) break;
        v = next;
    }
    return v;
}

std::vector<int> ResiduatedLattice::boolean_center() const {
    std::vector<int> center;
    for (int e = 0; e < n_; ++e)
        if (join(e, neg(e)) == top_) center.push_back(e);

    // The set must behave as a Boolean algebra; anything else signals a bug
    // upstream since the axioms force it.
    for (int e : center) {
        if (prod(e, e) != e || neg(neg(e)) != e)
            throw Error("central element " + name_of(e) + " is not idempotent-regular in '" +
                        label_ + "'");
        if (meet(e, neg(e)) != bottom_)
            throw Error("central element " + name_of(e) + " misses its complement law in '" +
                        label_ + "'");
    }
    auto central = [&](int x) { return join(x, neg(x)) == top_; };
    for (int e : center)
        for (int f : center) {
            if (!central(join(e, f)) || !central(meet(e, f)) || !central(neg(e)))
                throw Error("Boolean center of '" + label_ + "' is not closed");
            for (int g : center)
                if (meet(e, join(f, g)) != join(meet(e, f), meet(e, g)))
                    throw Error("Boolean center of '" + label_ + "' is not distributive");
        }
    return center;
}

int ResiduatedLattice::complement_of(int e) const {
    if (join(e, neg(e)) != top_)
        throw NotComplemented("element " + name_of(e) + " is not in the Boolean center of '" +
                              label_ + "'");
    return neg(e);
}

AlgebraSpec ResiduatedLattice::to_spec() const {
    AlgebraSpec spec;
    spec.name = label_;
    spec.elements = names_;
    auto dump = [&](const std::vector<int>& t) {
        std::vector<std::vector<std::string>> rows(static_cast<size_t>(n_));
        for (int a = 0; a < n_; ++a) {
            rows[static_cast<size_t>(a)].reserve(static_cast<size_t>(n_));
            for (int b = 0; b < n_; ++b)
                rows[static_cast<size_t>(a)].push_back(names_[static_cast<size_t>(
                    t[static_cast<size_t>(a) * n_ + b])]);
        }
        return rows;
    };
    spec.join = dump(join_);
    spec.meet = dump(meet_);
    spec.prod = dump(prod_);
    spec.imp = dump(imp_);
    spec.bottom = names_[static_cast<size_t>(bottom_)];
    spec.top = names_[static_cast<size_t>(top_)];
    return spec;
}

bool ResiduatedLattice::same_tables(const ResiduatedLattice& other) const {
    return n_ == other.n_ && join_ == other.join_ && meet_ == other.meet_ &&
           prod_ == other.prod_ && imp_ == other.imp_ && bottom_ == other.bottom_ &&
           top_ == other.top_;
}

ResiduatedLattice direct_product(const ResiduatedLattice& l1, const ResiduatedLattice& l2) {
    const int n1 = l1.size(), n2 = l2.size();
    AlgebraSpec spec;
    spec.name = l1.label() + "x" + l2.label();
    auto pair_name = [&](int a1, int a2) {
        return "(" + l1.name_of(a1) + "," + l2.name_of(a2) + ")";
    };
    for (int a1 = 0; a1 < n1; ++a1)
        for (int a2 = 0; a2 < n2; ++a2) spec.elements.push_back(pair_name(a1, a2));

    auto build = [&](int (ResiduatedLattice::*op)(int, int) const) {
        std::vector<std::vector<std::string>> rows;
        for (int a1 = 0; a1 < n1; ++a1)
            for (int a2 = 0; a2 < n2; ++a2) {
                std::vector<std::string> row;
                for (int b1 = 0; b1 < n1; ++b1)
                    for (int b2 = 0; b2 < n2; ++b2)
                        row.push_back(pair_name((l1.*op)(a1, b1), (l2.*op)(a2, b2)));
                rows.push_back(std::move(row));
            }
        return rows;
    };
    spec.join = build(&ResiduatedLattice::join);
    spec.meet = build(&ResiduatedLattice::meet);
    spec.prod = build(&ResiduatedLattice::prod);
    spec.imp = build(&ResiduatedLattice::imp);
    spec.bottom = pair_name(l1.bottom(), l2.bottom());
    spec.top = pair_name(l1.top(), l2.top());
    return ResiduatedLattice::validate(spec);
}

ResiduatedLattice subalgebra(const ResiduatedLattice& l, const std::vector<int>& subset) {
    std::vector<int> members = subset;
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());

    auto in = [&](int x) { return std::binary_search(members.begin(), members.end(), x); };
    if (!in(l.bottom()) || !in(l.top()))
        throw NotClosed("subset of '" + l.label() + "' must contain 0 and 1");

    struct OpDesc {
        const char* sym;
        int (ResiduatedLattice::*op)(int, int) const;
    };
    const OpDesc ops[] = {{"v", &ResiduatedLattice::join},
                          {"^", &ResiduatedLattice::meet},
                          {".", &ResiduatedLattice::prod},
                          {"->", &ResiduatedLattice::imp}};
    for (const auto& d : ops)
        for (int a : members)
            for (int b : members)
                if (!in((l.*d.op)(a, b)))
                    throw NotClosed(std::string("subset of '") + l.label() +
                                    "' is not closed under " + d.sym + " at (" + l.name_of(a) +
                                    ", " + l.name_of(b) + ")");

    AlgebraSpec spec;
    spec.name = l.label() + "|sub";
    for (int a : members) spec.elements.push_back(l.name_of(a));
    auto build = [&](int (ResiduatedLattice::*op)(int, int) const) {
        std::vector<std::vector<std::string>> rows;
        for (int a : members) {
            std::vector<std::string> row;
            for (int b : members) row.push_back(l.name_of((l.*op)(a, b)));
            rows.push_back(std::move(row));
        }
        return rows;
    };
    spec.join = build(&ResiduatedLattice::join);
    spec.meet = build(&ResiduatedLattice::meet);
    spec.prod = build(&ResiduatedLattice::prod);
    spec.imp = build(&ResiduatedLattice::imp);
    spec.bottom = l.name_of(l.bottom());
    spec.top = l.name_of(l.top());
    return ResiduatedLattice::validate(spec);
}

namespace {

bool extend_isomorphism(const ResiduatedLattice& l1, const ResiduatedLattice& l2,
                        std::vector<int>& map, std::vector<char>& used, int next) {
    const int n = l1.size();
    if (next == n) return true;
    if (map[static_cast<size_t>(next)] >= 0)
        return extend_isomorphism(l1, l2, map, used, next + 1);
    for (int img = 0; img < n; ++img) {
        if (used[static_cast<size_t>(img)]) continue;
        map[static_cast<size_t>(next)] = img;
        used[static_cast<size_t>(img)] = 1;
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) {
            if (map[static_cast<size_t>(a)] < 0) continue;
            for (int b = 0; b < n && ok; ++b) {
                if (map[static_cast<size_t>(b)] < 0) continue;
                const int fa = map[static_cast<size_t>(a)], fb = map[static_cast<size_t>(b)];
                auto check = [&](int (ResiduatedLattice::*op)(int, int) const) {
                    const int v = (l1.*op)(a, b);
                    if (map[static_cast<size_t>(v)] < 0) return true;
                    return map[static_cast<size_t>(v)] == (l2.*op)(fa, fb);
                };
                ok = check(&ResiduatedLattice::join) && check(&ResiduatedLattice::meet) &&
                     check(&ResiduatedLattice::prod) && check(&ResiduatedLattice::imp);
            }
        }
        if (ok && extend_isomorphism(l1, l2, map, used, next + 1)) return true;
        map[static_cast<size_t>(next)] = -1;
        used[static_cast<size_t>(img)] = 0;
    }
    return false;
}

} // namespace

std::optional<std::vector<int>> find_isomorphism(const ResiduatedLattice& l1,
                                                 const ResiduatedLattice& l2) {
    if (l1.size() != l2.size()) return std::nullopt;
    const int n = l1.size();
    std::vector<int> map(static_cast<size_t>(n), -1);
    std::vector<char> used(static_cast<size_t>(n), 0);
    map[static_cast<size_t>(l1.bottom())] = l2.bottom();
    used[static_cast<size_t>(l2.bottom())] = 1;
    if (l1.top() != l1.bottom()) {
        map[static_cast<size_t>(l1.top())] = l2.top();
        used[static_cast<size_t>(l2.top())] = 1;
    }
    if (extend_isomorphism(l1, l2, map, used, 0)) return map;
    return std::nullopt;
}

} // namespace reslat
