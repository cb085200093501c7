#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "helpers.hpp"
#include "reslat/corpus.hpp"

using namespace reslat;

TEST_CASE("corpus keys and lookups") {
    const auto keys = corpus_keys();
    CHECK(keys == std::vector<std::string>{"RL6D", "RL6C", "RL7Q", "BOOL2", "BOOL4",
                                           "CHAIN3_LUK", "CHAIN3_GODEL"});
    CHECK_THROWS_AS(builtin("NOPE"), UnknownKey);
}

TEST_CASE("format/parse round trip") {
    for (const auto& key : corpus_keys()) {
        const ResiduatedLattice l = builtin_algebra(key);
        const AlgebraSpec s = l.to_spec();
        const AlgebraSpec back = parse_spec(format_spec(s), key);
        const ResiduatedLattice l2 = ResiduatedLattice::validate(back);
        CHECK(l.same_tables(l2));
        CHECK(format_spec(back) == format_spec(s)); // byte-stable
    }
}

TEST_CASE("save and load") {
    const std::string path = "corpus_roundtrip.rl";
    const ResiduatedLattice l = builtin_algebra("RL6D");
    save(path, l.to_spec());
    const ResiduatedLattice back = ResiduatedLattice::validate(load(path));
    CHECK(l.same_tables(back));
    std::remove(path.c_str());
    CHECK_THROWS_AS(load(path), IoError);
}

TEST_CASE("parse errors carry origin and line") {
    CHECK_THROWS_AS(parse_spec("nonsense", "bad.rl"), ParseError);
    try {
        parse_spec("name x\nelements 0 1\nbottom 0\ntop 1\njoin\n0 1\n", "bad.rl");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("bad.rl") != std::string::npos);
    }
}

TEST_CASE("covering pairs are the transitive reduction") {
    const ResiduatedLattice l = builtin_algebra("RL6D");
    const auto covers = covering_pairs(l);
    // 0<a<b<{c,d}<1: six covering edges
    CHECK(covers.size() == 6);
    for (const auto& [lo, hi] : covers) {
        CHECK(l.leq(lo, hi));
        CHECK(lo != hi);
        for (int m = 0; m < l.size(); ++m)
            if (m != lo && m != hi) {
                const bool between = l.leq(lo, m) && l.leq(m, hi);
                CHECK_FALSE(between);
            }
    }
}

TEST_CASE("hasse dot output") {
    const ResiduatedLattice l = builtin_algebra("CHAIN3_GODEL");
    const std::string dot = hasse_dot(l);
    CHECK(dot.find("digraph hasse") != std::string::npos);
    CHECK(dot.find("\"0\" -> \"h\"") != std::string::npos);
    CHECK(dot.find("\"h\" -> \"1\"") != std::string::npos);
    CHECK(dot.find("\"0\" -> \"1\"") == std::string::npos); // reduced edge only
    // deterministic
    CHECK(dot == hasse_dot(l));
}

TEST_CASE("comments and blank lines are tolerated") {
    const std::string text =
        "# comment\n"
        "name two\n\n"
        "elements 0 1\n"
        "bottom 0\n"
        "top 1\n"
        "join\n0 1\n1 1\n"
        "meet\n0 0\n0 1\n"
        "prod\n0 0\n0 1\n";
    const ResiduatedLattice l = ResiduatedLattice::validate(parse_spec(text));
    CHECK(l.size() == 2);
}
