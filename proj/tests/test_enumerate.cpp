#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "reslat/classify.hpp"
#include "reslat/corpus.hpp"
#include "reslat/enumerate.hpp"

using namespace reslat;

TEST_CASE("bounded lattice counts up to isomorphism") {
    EnumerationOptions opts;
    CHECK(enumerate_lattices(1, opts).size() == 1);
    CHECK(enumerate_lattices(2, opts).size() == 1);
    CHECK(enumerate_lattices(3, opts).size() == 1);
    CHECK(enumerate_lattices(4, opts).size() == 2); // chain and diamond
    CHECK(enumerate_lattices(5, opts).size() == 5);
}

TEST_CASE("residuated lattice counts are frozen") {
    EnumerationOptions opts;
    CHECK(enumerate_residuated(2, opts).size() == 1);
    CHECK(enumerate_residuated(3, opts).size() == 2);
    CHECK(enumerate_residuated(4, opts).size() == 7);
    CHECK(enumerate_residuated(5, opts).size() == 26);
}

TEST_CASE("chain-only counts for sizes past the full cap") {
    EnumerationOptions opts;
    opts.chains_only = true;
    CHECK(enumerate_residuated(4, opts).size() == 6);
    CHECK(enumerate_residuated(5, opts).size() == 22);
    // beyond full_cap the general entry point falls back to chains
    CHECK(enumerate_residuated(6, EnumerationOptions{}).size() == 94);
    CHECK_THROWS_AS(enumerate_residuated(7, EnumerationOptions{}), CapExceeded);
}

TEST_CASE("enumerated algebras are pairwise non-isomorphic and validate") {
    for (int n = 2; n <= 4; ++n) {
        const auto algebras = enumerate_residuated(n, EnumerationOptions{});
        for (size_t i = 0; i < algebras.size(); ++i)
            for (size_t j = i + 1; j < algebras.size(); ++j)
                CHECK_FALSE(find_isomorphism(algebras[i], algebras[j]).has_value());
    }
}

TEST_CASE("size-3 enumeration finds exactly the two known chains") {
    const auto algebras = enumerate_residuated(3, EnumerationOptions{});
    REQUIRE(algebras.size() == 2);
    const ResiduatedLattice luk = builtin_algebra("CHAIN3_LUK");
    const ResiduatedLattice godel = builtin_algebra("CHAIN3_GODEL");
    int luk_hits = 0, godel_hits = 0;
    for (const auto& l : algebras) {
        if (find_isomorphism(l, luk).has_value()) ++luk_hits;
        if (find_isomorphism(l, godel).has_value()) ++godel_hits;
    }
    CHECK(luk_hits == 1);
    CHECK(godel_hits == 1);
}

TEST_CASE("enumeration order is deterministic") {
    const auto a = enumerate_residuated(4, EnumerationOptions{});
    const auto b = enumerate_residuated(4, EnumerationOptions{});
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) CHECK(a[i].same_tables(b[i]));
}

TEST_CASE("for_each_residuated stops early") {
    int count = 0;
    for_each_residuated(4, EnumerationOptions{}, [&](const ResiduatedLattice&) {
        return ++count < 3;
    });
    CHECK(count == 3);
}

TEST_CASE("hunt finds the least MTL-not-BL algebra at size 4") {
    const HuntResult r = hunt({"mtl"}, "bl", 4, EnumerationOptions{});
    REQUIRE(r.found);
    CHECK(r.counterexample->size() == 4);
    CHECK(is_mtl(*r.counterexample).holds);
    CHECK_FALSE(is_bl(*r.counterexample).holds);

    const HuntResult none = hunt({"mtl"}, "bl", 3, EnumerationOptions{});
    CHECK_FALSE(none.found);
    CHECK(none.last_size_searched == 3);
}

TEST_CASE("hunt validates predicate names") {
    CHECK_THROWS_AS(hunt({"mtl"}, "nonsense", 3, EnumerationOptions{}), NameError);
    CHECK_THROWS_AS(hunt({"nonsense"}, "bl", 3, EnumerationOptions{}), NameError);
}

TEST_CASE("no small counterexample to sound implications") {
    // BL implies lifting Boolean center; involutive implies Glivenko
    CHECK_FALSE(hunt({"bl"}, "lifting", 5, EnumerationOptions{}).found);
    CHECK_FALSE(hunt({"involutive"}, "glivenko", 5, EnumerationOptions{}).found);
    CHECK_FALSE(hunt({"simple"}, "local", 5, EnumerationOptions{}).found);
    CHECK_FALSE(hunt({"local"}, "quasi_local", 5, EnumerationOptions{}).found);
}

TEST_CASE("env cap parsing") {
    // enumeration_options_from_env reads RESLAT_SIZE_CAP; defaults unchanged
    const EnumerationOptions opts = enumeration_options_from_env();
    CHECK(opts.full_cap >= 1);
    const bool cap_consistent = opts.chain_cap >= opts.full_cap || opts.chain_cap == 6;
    CHECK(cap_consistent);
}
