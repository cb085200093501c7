#include "reslat/quotient.hpp"

#include <algorithm>

namespace reslat {

namespace {

void compute_flags(Morphism& f) {
    const int ns = f.source.size(), nt = f.target.size();
    std::vector<char> hit(static_cast<size_t>(nt), 0);
    f.injective = true;
    for (int a = 0; a < ns; ++a) {
        if (hit[static_cast<size_t>(f.map[static_cast<size_t>(a)])]) f.injective = false;
        hit[static_cast<size_t>(f.map[static_cast<size_t>(a)])] = 1;
    }
    f.surjective = std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
    f.is_isomorphism = f.injective && f.surjective;
}

} // namespace

Morphism make_morphism(ResiduatedLattice source, ResiduatedLattice target,
                       std::vector<int> map) {
    if (static_cast<int>(map.size()) != source.size())
        throw NotMorphism("map size does not match the source carrier");
    for (int v : map)
        if (v < 0 || v >= target.size()) throw NotMorphism("map value out of range");

    const int n = source.size();
    auto at = [&](int a) { return map[static_cast<size_t>(a)]; };
    if (at(source.bottom()) != target.bottom() || at(source.top()) != target.top())
        throw NotMorphism("constants are not preserved");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (at(source.join(a, b)) != target.join(at(a), at(b)) ||
                at(source.meet(a, b)) != target.meet(at(a), at(b)) ||
                at(source.prod(a, b)) != target.prod(at(a), at(b)) ||
                at(source.imp(a, b)) != target.imp(at(a), at(b)))
                throw NotMorphism("operation not preserved at (" + source.name_of(a) + ", " +
                                  source.name_of(b) + ")");
        }

    Morphism f;
    f.source = std::move(source);
    f.target = std::move(target);
    f.map = std::move(map);
    compute_flags(f);
    return f;
}

Congruence congruence_mod(const ResiduatedLattice& l, const Filter& f) {
    const int n = l.size();
    Congruence c;
    c.filter = f;
    std::vector<int> rep(static_cast<size_t>(n), -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b <= a; ++b)
            if (f.contains(l.biimp(a, b))) { rep[static_cast<size_t>(a)] = b; break; }

    c.class_of.assign(static_cast<size_t>(n), -1);
    for (int a = 0; a < n; ++a) {
        const int r = rep[static_cast<size_t>(a)];
        if (r == a) {
            c.class_of[static_cast<size_t>(a)] = static_cast<int>(c.classes.size());
            c.classes.push_back({a});
        } else {
            const int idx = c.class_of[static_cast<size_t>(r)];
            c.class_of[static_cast<size_t>(a)] = idx;
            c.classes[static_cast<size_t>(idx)].push_back(a);
        }
    }

    // Sanity: the relation really is an equivalence on this filter.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if ((c.class_of[static_cast<size_t>(a)] == c.class_of[static_cast<size_t>(b)]) !=
                f.contains(l.biimp(a, b)))
                throw Error("congruence mod filter is not an equivalence on '" + l.label() + "'");
    return c;
}

Quotient quotient(const ResiduatedLattice& l, const Filter& f) {
    Congruence c = congruence_mod(l, f);
    const int k = static_cast<int>(c.classes.size());
    const int n = l.size();

    struct OpDesc {
        int (ResiduatedLattice::*op)(int, int) const;
        const char* sym;
    };
    const OpDesc ops[] = {{&ResiduatedLattice::join, "v"},
                          {&ResiduatedLattice::meet, "^"},
                          {&ResiduatedLattice::prod, "."},
                          {&ResiduatedLattice::imp, "->"}};

    // Representative independence: any choice of members yields the same class.
    for (const auto& d : ops)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                const int ra = c.classes[static_cast<size_t>(
                    c.class_of[static_cast<size_t>(a)])][0];
                const int rb = c.classes[static_cast<size_t>(
                    c.class_of[static_cast<size_t>(b)])][0];
                if (c.class_of[static_cast<size_t>((l.*d.op)(a, b))] !=
                    c.class_of[static_cast<size_t>((l.*d.op)(ra, rb))])
                    throw Error("quotient tables depend on representatives in '" + l.label() +
                                "' at op " + d.sym);
            }

    AlgebraSpec spec;
    spec.name = l.label() + "/F";
    for (int i = 0; i < k; ++i)
        spec.elements.push_back(l.name_of(c.classes[static_cast<size_t>(i)][0]) + "/F");
    auto build = [&](int (ResiduatedLattice::*op)(int, int) const) {
        std::vector<std::vector<std::string>> rows;
        for (int i = 0; i < k; ++i) {
            std::vector<std::string> row;
            for (int j = 0; j < k; ++j) {
                const int v = (l.*op)(c.classes[static_cast<size_t>(i)][0],
                                      c.classes[static_cast<size_t>(j)][0]);
                row.push_back(spec.elements[static_cast<size_t>(
                    c.class_of[static_cast<size_t>(v)])]);
            }
            rows.push_back(std::move(row));
        }
        return rows;
    };
    spec.join = build(&ResiduatedLattice::join);
    spec.meet = build(&ResiduatedLattice::meet);
    spec.prod = build(&ResiduatedLattice::prod);
    spec.imp = build(&ResiduatedLattice::imp);
    spec.bottom = spec.elements[static_cast<size_t>(c.class_of[static_cast<size_t>(l.bottom())])];
    spec.top = spec.elements[static_cast<size_t>(c.class_of[static_cast<size_t>(l.top())])];

    Quotient q;
    q.algebra = ResiduatedLattice::validate(spec);
    q.projection = make_morphism(l, q.algebra, c.class_of);
    if (!q.projection.surjective)
        throw Error("canonical projection is not surjective");

    // Order preservation: a <= b implies a/F <= b/F.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (l.leq(a, b) && !q.algebra.leq(c.class_of[static_cast<size_t>(a)],
                                              c.class_of[static_cast<size_t>(b)]))
                throw Error("quotient order does not refine the source order");

    q.congruence = std::move(c);
    return q;
}

DenseQuotientVerdict dense_quotient_comparison(const ResiduatedLattice& l, const Filter& f) {
    Quotient q = quotient(l, f);
    DenseQuotientVerdict v;

    const Filter ds_q = dense_elements(q.algebra);
    v.ds_of_quotient = ds_q.elements(q.algebra.size());

    const Filter ds_l = dense_elements(l);
    std::vector<int> image;
    for (int a : ds_l.elements(l.size()))
        image.push_back(q.congruence.class_of[static_cast<size_t>(a)]);
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    v.image_of_ds = image;

    std::set_difference(v.ds_of_quotient.begin(), v.ds_of_quotient.end(), image.begin(),
                        image.end(), std::back_inserter(v.only_in_quotient));
    std::set_difference(image.begin(), image.end(), v.ds_of_quotient.begin(),
                        v.ds_of_quotient.end(), std::back_inserter(v.only_in_image));
    v.equal = v.only_in_quotient.empty() && v.only_in_image.empty();

    // Whenever F is contained in Ds(A) the two sets must coincide.
    if ((f.members & ds_l.members) == f.members && !v.equal)
        throw Error("Ds(A/F) != Ds(A)/F although F is contained in Ds(A), in '" + l.label() +
                    "'");
    v.congruence = std::move(q.congruence);
    return v;
}

Morphism b_functor(const Morphism& f) {
    const std::vector<int> bs = f.source.boolean_center();
    const std::vector<int> bt = f.target.boolean_center();
    ResiduatedLattice source_center = subalgebra(f.source, bs);
    ResiduatedLattice target_center = subalgebra(f.target, bt);

    std::vector<int> map;
    for (size_t i = 0; i < bs.size(); ++i) {
        const int image = f.apply(bs[i]);
        auto it = std::lower_bound(bt.begin(), bt.end(), image);
        if (it == bt.end() || *it != image)
            throw CenterNotPreserved("image of central element " + f.source.name_of(bs[i]) +
                                     " is not central");
        map.push_back(static_cast<int>(it - bt.begin()));
    }
    return make_morphism(std::move(source_center), std::move(target_center), std::move(map));
}

LiftingDiagram lifting_diagram(const ResiduatedLattice& l) {
    LiftingDiagram d;
    d.by_dense = quotient(l, dense_elements(l));
    d.by_radical = quotient(l, radical(l));

    // phi : A/Ds -> A/Rad, a/Ds |-> a/Rad. Well-definedness is exactly
    // representative independence, which the exhaustive check covers.
    const auto& cd = d.by_dense.congruence;
    const auto& cr = d.by_radical.congruence;
    std::vector<int> phi(cd.classes.size());
    for (size_t i = 0; i < cd.classes.size(); ++i) {
        const int expected = cr.class_of[static_cast<size_t>(cd.classes[i][0])];
        for (int member : cd.classes[i])
            if (cr.class_of[static_cast<size_t>(member)] != expected)
                throw NotMorphism("phi is not well defined on '" + l.label() + "'");
        phi[i] = expected;
    }
    d.phi = make_morphism(d.by_dense.algebra, d.by_radical.algebra, std::move(phi));

    d.b_p = b_functor(d.by_dense.projection);
    d.b_r = b_functor(d.by_radical.projection);
    d.b_phi = b_functor(d.phi);
    d.lifting = d.b_r.surjective;
    return d;
}

bool has_lifting_boolean_center(const ResiduatedLattice& l) {
    return lifting_diagram(l).lifting;
}

Morphism phi_map(const ResiduatedLattice& l) { return lifting_diagram(l).phi; }

Morphism theta_iso(const ResiduatedLattice& l) {
    if (!is_glivenko(l))
        throw NotGlivenko("theta requires a Glivenko algebra: '" + l.label() + "'");
    StarAlgebra s = star_algebra(l);
    Quotient q = quotient(l, dense_elements(l));

    std::vector<int> map(q.congruence.classes.size());
    for (size_t i = 0; i < q.congruence.classes.size(); ++i) {
        const int rep = q.congruence.classes[i][0];
        const int expected = s.pos_of(l.neg(l.neg(rep)));
        for (int member : q.congruence.classes[i])
            if (s.pos_of(l.neg(l.neg(member))) != expected)
                throw NotMorphism("theta is not well defined on '" + l.label() + "'");
        map[i] = expected;
    }
    Morphism theta = make_morphism(q.algebra, *s.algebra, std::move(map));
    if (!theta.is_isomorphism)
        throw Error("theta is not an isomorphism on '" + l.label() + "'");

    // Diagram: theta o p = ~~ pointwise.
    for (int a = 0; a < l.size(); ++a)
        if (theta.apply(q.congruence.class_of[static_cast<size_t>(a)]) !=
            s.pos_of(l.neg(l.neg(a))))
            throw Error("theta does not commute with the projection on '" + l.label() + "'");
    return theta;
}

MaxCorrespondenceVerdict max_spectrum_correspondence(const ResiduatedLattice& l) {
    MaxCorrespondenceVerdict v;
    const Filter ds = dense_elements(l);
    Quotient q = quotient(l, ds);
    const auto& cls = q.congruence.class_of;

    const SpectrumSpace max_a = max_spectrum(l);
    const SpectrumSpace max_q = max_spectrum(q.algebra);

    auto push_down = [&](const Filter& m) {
        Mask img = 0;
        for (int a = 0; a < l.size(); ++a)
            if (m.contains(a)) img |= Mask{1} << cls[static_cast<size_t>(a)];
        return img;
    };

    // (i) a/Ds in M/Ds iff a in M, for every maximal M.
    v.membership_transfer = true;
    for (const Filter& m : max_a.points) {
        const Mask img = push_down(m);
        for (int a = 0; a < l.size(); ++a)
            if (mask_has(img, cls[static_cast<size_t>(a)]) != m.contains(a))
                v.membership_transfer = false;
    }

    // (ii) Max(A/Ds) = {N/Ds : N in Max(A)}.
    std::vector<Mask> images;
    for (const Filter& m : max_a.points) images.push_back(push_down(m));
    std::sort(images.begin(), images.end());
    images.erase(std::unique(images.begin(), images.end()), images.end());
    std::vector<Mask> down;
    for (const Filter& m : max_q.points) down.push_back(m.members);
    std::sort(down.begin(), down.end());
    v.max_correspondence = images == down;

    // (iii)/(iv) radical transfer.
    const Filter rad_a = radical(l);
    const Filter rad_q = radical(q.algebra);
    Mask rad_img = 0;
    for (int a = 0; a < l.size(); ++a)
        if (rad_a.contains(a)) rad_img |= Mask{1} << cls[static_cast<size_t>(a)];
    v.rad_transfer = rad_img == rad_q.members;
    v.rad_membership = true;
    for (int a = 0; a < l.size(); ++a)
        if (mask_has(rad_img, cls[static_cast<size_t>(a)]) != rad_a.contains(a))
            v.rad_membership = false;

    // (v) h(N) = N/Ds is a bijection matching the bases pointwise:
    // h(S_Max(b)) = S_Max(b/Ds) for every b.
    v.homeomorphism = images.size() == max_a.points.size() && v.max_correspondence;
    if (v.homeomorphism) {
        std::vector<int> h(max_a.points.size());
        for (size_t i = 0; i < max_a.points.size(); ++i) {
            const Mask img = push_down(max_a.points[i]);
            int found = -1;
            for (size_t j = 0; j < max_q.points.size(); ++j)
                if (max_q.points[j].members == img) found = static_cast<int>(j);
            if (found < 0) { v.homeomorphism = false; break; }
            h[i] = found;
        }
        if (v.homeomorphism)
            for (int b = 0; b < l.size(); ++b) {
                Mask mapped = 0;
                for (size_t i = 0; i < max_a.points.size(); ++i)
                    if (mask_has(max_a.basis[static_cast<size_t>(b)], static_cast<int>(i)))
                        mapped |= Mask{1} << h[i];
                if (mapped != max_q.basis[static_cast<size_t>(cls[static_cast<size_t>(b)])]) {
                    v.homeomorphism = false;
                    break;
                }
            }
    }

    // |Max(A)| = |Max(A/Rad(A))|.
    Quotient qr = quotient(l, radical(l));
    v.max_count_mod_radical =
        max_a.points.size() == max_spectrum(qr.algebra).points.size();
    return v;
}

RadicalRegularVerdict radical_double_negation(const ResiduatedLattice& l) {
    if (!is_glivenko(l))
        throw NotGlivenko("radical double-negation transfer requires Glivenko: '" + l.label() +
                          "'");
    RadicalRegularVerdict v;
    const Filter rad = radical(l);
    v.double_negation_transfer = true;
    for (int a = 0; a < l.size(); ++a)
        if (rad.contains(a) != rad.contains(l.neg(l.neg(a))))
            v.double_negation_transfer = false;

    const StarAlgebra s = star_algebra(l);
    const Filter rad_reg = radical(*s.algebra);
    std::vector<int> rad_reg_parent;
    for (int i : rad_reg.elements(s.n()))
        rad_reg_parent.push_back(s.carrier[static_cast<size_t>(i)]);
    std::vector<int> intersection;
    for (int a : s.carrier)
        if (rad.contains(a)) intersection.push_back(a);
    v.regular_radical_equality = rad_reg_parent == intersection;
    return v;
}

} // namespace reslat
