#include <doctest.h>

#include <map>

#include "helpers.hpp"
#include "reslat/claims.hpp"
#include "reslat/corpus.hpp"

using namespace reslat;

namespace {

std::map<std::string, std::string> status_map(const std::string& key) {
    std::map<std::string, std::string> out;
    for (const ClaimResult& c : check_claims(builtin_algebra(key)))
        out[c.id] = to_string(c.status);
    return out;
}

} // namespace

TEST_CASE("no corpus algebra fails any claim") {
    for (const auto& key : corpus_keys()) {
        const auto results = check_claims(builtin_algebra(key));
        CHECK_FALSE(any_failed(results));
        CHECK(results.size() >= 30);
    }
}

TEST_CASE("claim output is deterministic") {
    for (const auto& key : corpus_keys()) {
        const auto a = check_claims(builtin_algebra(key));
        const auto b = check_claims(builtin_algebra(key));
        REQUIRE(a.size() == b.size());
        for (size_t i = 0; i < a.size(); ++i) {
            CHECK(a[i].id == b[i].id);
            CHECK(a[i].status == b[i].status);
            CHECK(a[i].detail == b[i].detail);
        }
    }
}

TEST_CASE("RL6D dense-quotient claim reports the documented discrepancy") {
    const auto results = check_claims(builtin_algebra("RL6D"));
    bool seen = false;
    for (const ClaimResult& c : results)
        if (c.id == "dense-quotient-separation") {
            seen = true;
            CHECK(c.status == ClaimStatus::Pass);
            CHECK(c.detail.find("{0,a}") != std::string::npos);
            CHECK(c.detail.find("{b,c}") != std::string::npos);
            CHECK(c.detail.find("{d,1}") != std::string::npos);
            CHECK(c.detail.find("diverges from the printed inequality claim") !=
                  std::string::npos);
        }
    CHECK(seen);
}

TEST_CASE("RL7Q refutations of the lifting claims are reported as counterexamples") {
    const auto statuses = status_map("RL7Q");
    for (const char* id : {"glivenko-lifting-iff-phi-surjective", "lifting-descends", "star-implies-lifting", "star-implies-quasi-local"})
        CHECK(statuses.at(id) == "PASS");
    const auto results = check_claims(builtin_algebra("RL7Q"));
    int counterexamples = 0;
    for (const ClaimResult& c : results)
        if (c.title.find("counterexample found") != std::string::npos) {
            ++counterexamples;
            CHECK(c.detail.find("B(Reg(A)) is not contained in B(A)") != std::string::npos);
        }
    CHECK(counterexamples == 4);
    CHECK(statuses.at("quasi-local-converse-witness") == "PASS"); // RL7Q is the witness
}

TEST_CASE("hypothesis gating") {
    const auto rl7 = status_map("RL7Q");
    CHECK(rl7.at("center-equality-mtl") == "N-A");  // not MTL
    CHECK(rl7.at("bl-dense-quotient-mv") == "N-A");  // not BL
    CHECK(rl7.at("local-maximal-is-infinite-order") == "N-A");  // not local
    const auto luk = status_map("CHAIN3_LUK");
    CHECK(luk.at("mv-lifting") == "PASS");
    CHECK(luk.at("bl-lifting") == "PASS");
    CHECK(luk.at("quasi-local-converse-witness") == "N-A");
    const auto godel = status_map("CHAIN3_GODEL");
    CHECK(godel.at("mv-lifting") == "N-A"); // BL but not MV
    CHECK(godel.at("bl-lifting") == "PASS");
}
