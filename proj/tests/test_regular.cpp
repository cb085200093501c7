#include <doctest.h>

#include "helpers.hpp"
#include "reslat/corpus.hpp"
#include "reslat/quotient.hpp"
#include "reslat/regular.hpp"

using namespace reslat;
using reslat::testing::names;

TEST_CASE("regular elements are the fixed points of double negation") {
    const ResiduatedLattice d = builtin_algebra("RL6D");
    CHECK(names(d, regular_elements(d)) == std::vector<std::string>{"0", "a", "d", "1"});
    const ResiduatedLattice q = builtin_algebra("RL7Q");
    CHECK(names(q, regular_elements(q)) == std::vector<std::string>{"0", "b", "d", "1"});
    const ResiduatedLattice b4 = builtin_algebra("BOOL4");
    CHECK(regular_elements(b4).size() == 4); // involutive: everything is regular
}

TEST_CASE("glivenko verdicts match the frozen corpus values") {
    CHECK(is_glivenko(builtin_algebra("RL6D")));
    CHECK(is_glivenko(builtin_algebra("RL6C")));
    CHECK(is_glivenko(builtin_algebra("RL7Q")));
    CHECK(is_glivenko(builtin_algebra("BOOL2")));
    CHECK(is_glivenko(builtin_algebra("BOOL4")));
    CHECK(is_glivenko(builtin_algebra("CHAIN3_LUK")));
    CHECK(is_glivenko(builtin_algebra("CHAIN3_GODEL")));
}

TEST_CASE("star equation verdicts match the frozen corpus values") {
    // RL7Q satisfies the equation: both sides only involve negations, whose
    // values lie in {0,b,d,1}, and the scan below is the literal definition.
    const ResiduatedLattice q = builtin_algebra("RL7Q");
    bool literal = true;
    for (int a = 0; a < q.size(); ++a)
        for (int b = 0; b < q.size(); ++b) {
            const int na = q.neg(a), nb = q.neg(b);
            if (q.imp(q.imp(na, nb), nb) != q.imp(q.imp(nb, na), na)) literal = false;
        }
    CHECK(literal);
    CHECK(satisfies_star_equation(q) == literal);

    CHECK_FALSE(satisfies_star_equation(builtin_algebra("RL6D")));
    CHECK_FALSE(satisfies_star_equation(builtin_algebra("RL6C")));
    CHECK(satisfies_star_equation(builtin_algebra("CHAIN3_LUK")));
    CHECK(satisfies_star_equation(builtin_algebra("CHAIN3_GODEL")));
    CHECK(satisfies_star_equation(builtin_algebra("BOOL4")));
}

TEST_CASE("star algebra of a Glivenko algebra is an involutive residuated lattice") {
    for (const auto& key : corpus_keys()) {
        const ResiduatedLattice l = builtin_algebra(key);
        const StarAlgebra s = star_algebra(l);
        if (is_glivenko(l)) {
            REQUIRE(s.algebra.has_value());
            CHECK(s.is_involutive_rl);
            for (int i = 0; i < s.n(); ++i)
                CHECK(s.algebra->neg(s.algebra->neg(i)) == i);
        }
    }
}

TEST_CASE("Reg(A) is an MV-algebra exactly when the star equation holds") {
    for (const auto& key : corpus_keys()) {
        const ResiduatedLattice l = builtin_algebra(key);
        if (!is_glivenko(l)) continue;
        const StarAlgebra s = mv_structure_on_reg(l);
        CHECK(reg_is_mv(s) == satisfies_star_equation(l));
    }
}

TEST_CASE("theta maps A/Ds(A) isomorphically onto Reg(A)") {
    for (const auto& key : corpus_keys()) {
        const ResiduatedLattice l = builtin_algebra(key);
        if (!is_glivenko(l)) continue;
        const Morphism theta = theta_iso(l);
        CHECK(theta.is_isomorphism);
    }
}

TEST_CASE("A/Ds(A) is involutive iff A is Glivenko (corpus)") {
    for (const auto& key : corpus_keys()) {
        const ResiduatedLattice l = builtin_algebra(key);
        const ResiduatedLattice q = quotient(l, dense_elements(l)).algebra;
        bool involutive = true;
        for (int a = 0; a < q.size(); ++a)
            if (q.neg(q.neg(a)) != a) involutive = false;
        CHECK(involutive == is_glivenko(l));
    }
}

TEST_CASE("B(A) = B(Reg(A)) for Glivenko MTL-algebras, and fails for RL7Q") {
    CHECK(boolean_center_equality(builtin_algebra("RL6D")));
    CHECK(boolean_center_equality(builtin_algebra("RL6C")));
    CHECK(boolean_center_equality(builtin_algebra("BOOL4")));
    CHECK(boolean_center_equality(builtin_algebra("CHAIN3_GODEL")));
    // RL7Q is Glivenko but not MTL; its regular part is the diamond, which is
    // its own center, while B(RL7Q) = {0,1}.
    CHECK_FALSE(boolean_center_equality(builtin_algebra("RL7Q")));
}

TEST_CASE("mv structure requires Glivenko") {
    AlgebraSpec s = builtin("CHAIN3_GODEL").spec;
    const ResiduatedLattice godel = ResiduatedLattice::validate(s);
    CHECK_NOTHROW(mv_structure_on_reg(godel));
}
