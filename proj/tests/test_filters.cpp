#include <doctest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "reslat/corpus.hpp"
#include "reslat/filters.hpp"

using namespace reslat;
using reslat::testing::indices;
using reslat::testing::names;

namespace {

// Independent oracle: enumerate filters as up-sets closed under product.
std::set<std::vector<std::string>> filters_by_scan(const ResiduatedLattice& l) {
    const int n = l.size();
    std::set<std::vector<std::string>> out;
    for (Mask s = 0; s < (Mask{1} << n); ++s) {
        if (!mask_has(s, l.top())) continue;
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) {
            if (!mask_has(s, a)) continue;
            for (int b = 0; b < n && ok; ++b) {
                if (l.leq(a, b) && !mask_has(s, b)) ok = false;
                if (mask_has(s, b) && !mask_has(s, l.prod(a, b))) ok = false;
            }
        }
        if (!ok) continue;
        std::vector<std::string> f;
        for (int a = 0; a < n; ++a)
            if (mask_has(s, a)) f.push_back(l.name_of(a));
        out.insert(f);
    }
    return out;
}

} // namespace

TEST_CASE("filters of RL6D are exactly the five expected sets") {
    const ResiduatedLattice l = builtin_algebra("RL6D");
    std::set<std::vector<std::string>> got;
    for (const Filter& f : all_filters(l)) got.insert(names(l, f.elements(l.size())));
    const std::set<std::vector<std::string>> want = {
        {"1"}, {"c", "1"}, {"d", "1"}, {"b", "c", "d", "1"},
        {"0", "a", "b", "c", "d", "1"}};
    CHECK(got == want);
    CHECK(got == filters_by_scan(l));
}

TEST_CASE("all_filters agrees with the subset-scan oracle on every corpus algebra") {
    for (const auto& key : corpus_keys()) {
        const ResiduatedLattice l = builtin_algebra(key);
        std::set<std::vector<std::string>> got;
        for (const Filter& f : all_filters(l)) got.insert(names(l, f.elements(l.size())));
        CHECK(got == filters_by_scan(l));
    }
}

TEST_CASE("filter and deductive-system characterizations coincide") {
    // make_filter asserts the equivalence internally; this exercises it on
    // every subset that is a filter, and rejects a non-filter.
    const ResiduatedLattice l = builtin_algebra("RL6C");
    for (const Filter& f : all_filters(l)) {
        const Filter again = make_filter(l, f.members);
        CHECK(again.members == f.members);
    }
    Mask not_up = 0;
    not_up = mask_all(l.size()) & ~(Mask{1} << l.top());
    CHECK_THROWS_AS(make_filter(l, not_up), Error);
}

TEST_CASE("generated filters") {
    const ResiduatedLattice l = builtin_algebra("RL6D");
    CHECK(names(l, generated_filter(l, {l.index_of("d")}).elements(l.size())) ==
          std::vector<std::string>{"d", "1"});
    CHECK(names(l, generated_filter(l, {l.index_of("b")}).elements(l.size())) ==
          std::vector<std::string>{"b", "c", "d", "1"});
    CHECK(names(l, generated_filter(l, {l.index_of("0")}).elements(l.size())).size() == 6);
    CHECK(names(l, generated_filter(l, {}).elements(l.size())) ==
          std::vector<std::string>{"1"});
}

TEST_CASE("prime and maximal flags on RL7Q") {
    const ResiduatedLattice l = builtin_algebra("RL7Q");
    int maximal = 0, prime = 0;
    for (const Filter& f : all_filters(l)) {
        if (f.maximal) ++maximal;
        if (f.prime) ++prime;
        if (f.maximal) CHECK(f.prime); // finite case: maximal filters are prime
    }
    CHECK(maximal == 2);
    CHECK(prime == 3);
}

TEST_CASE("spectrum spaces") {
    const ResiduatedLattice l = builtin_algebra("RL7Q");
    const SpectrumSpace spec = spectrum(l);
    CHECK(spec.points.size() == 3);
    const SpectrumSpace max = max_spectrum(l);
    CHECK(max.points.size() == 2);
    // opens are closed under union and contain the empty set and the space
    CHECK(max.is_open(0));
    Mask everything = mask_all(static_cast<int>(max.points.size()));
    CHECK(max.is_open(everything));
    for (Mask u : max.opens)
        for (Mask v : max.opens) CHECK(max.is_open(u | v));
}

TEST_CASE("dense elements of the named corpus algebras") {
    auto dense_names = [](const std::string& key) {
        const ResiduatedLattice l = builtin_algebra(key);
        return names(l, dense_elements(l).elements(l.size()));
    };
    CHECK(dense_names("RL6D") == std::vector<std::string>{"c", "1"});
    CHECK(dense_names("RL6C") == std::vector<std::string>{"1"});
    CHECK(dense_names("RL7Q") == std::vector<std::string>{"e", "1"});
}

TEST_CASE("radical: intersection route equals the order-formula route") {
    for (const auto& key : corpus_keys()) {
        const ResiduatedLattice l = builtin_algebra(key);
        const Filter rad = radical(l); // throws RadicalMismatch on disagreement

        // independent intersection of maximal filters
        Mask inter = mask_all(l.size());
        for (const Filter& f : all_filters(l))
            if (f.maximal) inter &= f.members;
        CHECK(rad.members == inter);

        // Ds(A) is always inside Rad(A)
        CHECK((dense_elements(l).members & ~rad.members) == 0);
    }
}

TEST_CASE("radical of RL6D and RL7Q") {
    const ResiduatedLattice d = builtin_algebra("RL6D");
    CHECK(names(d, radical(d).elements(d.size())) ==
          std::vector<std::string>{"b", "c", "d", "1"});
    const ResiduatedLattice q = builtin_algebra("RL7Q");
    CHECK(names(q, radical(q).elements(q.size())) == std::vector<std::string>{"e", "1"});
}

TEST_CASE("radical respects subalgebras and products") {
    const ResiduatedLattice l1 = builtin_algebra("RL6D");
    const ResiduatedLattice l2 = builtin_algebra("CHAIN3_LUK");
    const ResiduatedLattice p = direct_product(l1, l2);
    const Filter rp = radical(p);
    const Filter r1 = radical(l1);
    const Filter r2 = radical(l2);
    for (int a = 0; a < l1.size(); ++a)
        for (int b = 0; b < l2.size(); ++b) {
            const int pa = p.index_of("(" + l1.name_of(a) + "," + l2.name_of(b) + ")");
            CHECK(mask_has(rp.members, pa) ==
                  (mask_has(r1.members, a) && mask_has(r2.members, b)));
        }

    const std::vector<int> carrier = indices(l1, {"0", "a", "b", "c", "d", "1"});
    const ResiduatedLattice sub = subalgebra(l1, carrier);
    for (size_t i = 0; i < carrier.size(); ++i)
        CHECK(mask_has(radical(sub).members, static_cast<int>(i)) ==
              mask_has(radical(l1).members, carrier[i]));
}

TEST_CASE("primary and quasi-primary flags") {
    const ResiduatedLattice l = builtin_algebra("RL6D");
    for (const Filter& f : all_filters(l)) {
        if (!f.proper) continue;
        CHECK(f.primary);
        CHECK(f.quasi_primary);
        if (f.primary) CHECK(f.quasi_primary);
    }
    const ResiduatedLattice b4 = builtin_algebra("BOOL4");
    const Filter trivial = generated_filter(b4, {});
    CHECK_FALSE(trivial.primary); // ~(x.y) = 1 in F, but no power of x or y is 0
    CHECK(trivial.quasi_primary); // u = x is a central witness
}

TEST_CASE("stone opens of the full spectrum") {
    const ResiduatedLattice l = builtin_algebra("RL6D");
    const SpectrumSpace s = spectrum(l);
    // S(X) for X = whole algebra is the whole space; S({1}) is empty
    CHECK(stone_open(s, mask_all(l.size())) == mask_all(static_cast<int>(s.points.size())));
    CHECK(stone_open(s, Mask{1} << l.top()) == 0);
}
