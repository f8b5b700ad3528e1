#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "support/oracles.hpp"
#include "tdesign/block_design.hpp"
#include "tdesign/params.hpp"

using namespace tdesign;
namespace ts = testsupport;

TEST_CASE("complete_design enumerates lexicographically") {
    BlockDesign d = complete_design(4, 2);
    REQUIRE(d.blocks.size() == 6);
    CHECK(d.blocks == std::vector<Block>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(complete_design(18, 5).blocks.size() == 8568);
    BlockDesign empty_blocks = complete_design(5, 0);
    REQUIRE(empty_blocks.blocks.size() == 1);
    CHECK(empty_blocks.blocks[0].empty());
    CHECK(complete_design(6, 6).blocks.size() == 1);
    CHECK_THROWS_AS(complete_design(4, 5), std::domain_error);
}

TEST_CASE("verify_t_design: Fano plane and complete designs") {
    BalanceReport rep = verify_t_design(ts::fano(), 2);
    CHECK(rep.is_t_design);
    CHECK(rep.lambda == 1);
    // complete designs carry lambda = C(v-t,k-t) at every t <= k
    for (int v = 1; v <= 10; ++v)
        for (int k = 0; k <= v; ++k) {
            BlockDesign d = complete_design(v, k);
            for (int t = 0; t <= k; ++t) {
                BalanceReport r = verify_t_design(d, t);
                CHECK(r.is_t_design);
                CHECK(r.lambda == binom(v - t, k - t));
            }
        }
}

TEST_CASE("verify_t_design: edge cases and counterexamples") {
    // one k-block is a k-design only when v = k
    BlockDesign single{5, 3, {{0, 1, 2}}};
    CHECK_FALSE(verify_t_design(single, 3).is_t_design);
    BlockDesign full{3, 3, {{0, 1, 2}}};
    CHECK(verify_t_design(full, 3).is_t_design);
    // empty block list: balanced with lambda 0
    BlockDesign none{6, 3, {}};
    BalanceReport r0 = verify_t_design(none, 2);
    CHECK(r0.is_t_design);
    CHECK(r0.lambda == 0);
    // a corrupted Fano reports the first lexicographic violation
    BlockDesign bad = ts::fano();
    bad.blocks[0] = {0, 1, 2};  // replaces {0,1,3}
    BalanceReport rbad = verify_t_design(bad, 2);
    REQUIRE_FALSE(rbad.is_t_design);
    REQUIRE(rbad.counterexample.has_value());
    // {0,1} keeps count 1; the first lexicographic violation is {0,2}, now doubled
    CHECK(rbad.counterexample->t_subset == Block{0, 2});
    CHECK(rbad.counterexample->count == 2);
    CHECK(rbad.counterexample->expected == 1);
    CHECK_THROWS_AS(verify_t_design(single, 4), std::domain_error);
}

TEST_CASE("verified designs satisfy b*C(k,t) = lambda*C(v,t)") {
    auto check_identity = [](const BlockDesign& d, int t) {
        BalanceReport r = verify_t_design(d, t);
        REQUIRE(r.is_t_design);
        CHECK(Int(d.blocks.size()) * binom(d.k, t) == r.lambda * binom(d.v, t));
    };
    check_identity(ts::fano(), 2);
    check_identity(ts::sqs8(), 3);
    check_identity(complete_design(9, 4), 2);
}

TEST_CASE("complement_blocks") {
    BlockDesign comp = complement_blocks(ts::fano());
    CHECK(comp.k == 4);
    BalanceReport r = verify_t_design(comp, 2);
    CHECK(r.is_t_design);
    CHECK(r.lambda == 2);  // 2-(7,4,2)
    // involution on random subsets of the complete design
    std::mt19937 rng(77);
    for (int it = 0; it < 10; ++it) {
        BlockDesign d{8, 3, {}};
        for (const Block& b : complete_design(8, 3).blocks)
            if (rng() % 3 == 0) d.blocks.push_back(b);
        CHECK(complement_blocks(complement_blocks(d)).blocks == d.blocks);
    }
    CHECK(complement_blocks(complete_design(6, 2)).blocks == complete_design(6, 4).blocks);
    // one empty block -> one full block
    BlockDesign empty_block{5, 0, {{}}};
    CHECK(complement_blocks(empty_block).blocks == std::vector<Block>{{0, 1, 2, 3, 4}});
}

TEST_CASE("supplement_blocks") {
    BlockDesign supp = supplement_blocks(ts::fano());
    CHECK(supp.blocks.size() == 28);  // C(7,3) - 7
    BalanceReport r = verify_t_design(supp, 2);
    CHECK(r.is_t_design);
    CHECK(r.lambda == 4);
    CHECK(supplement_blocks(complete_design(6, 3)).blocks.empty());
    BlockDesign none{6, 3, {}};
    CHECK(supplement_blocks(none).blocks == complete_design(6, 3).blocks);
    CHECK(supplement_blocks(supplement_blocks(ts::fano())).blocks == ts::fano().blocks);
    BlockDesign dup{5, 2, {{0, 1}, {0, 1}}};
    CHECK_THROWS_AS(supplement_blocks(dup), std::invalid_argument);
}

TEST_CASE("classify_t_subset") {
    PointPartition part{3, 3};
    CHECK(classify_t_subset({0, 1, 2}, part) == std::pair<int, int>{3, 0});
    CHECK(classify_t_subset({3, 4, 5}, part) == std::pair<int, int>{0, 3});
    CHECK(classify_t_subset({0, 1, 4}, part) == std::pair<int, int>{2, 1});
    CHECK_THROWS_AS(classify_t_subset({0, 9}, part), std::invalid_argument);
}

TEST_CASE("block-set file round trip is byte-identical") {
    std::ostringstream out;
    write_block_file(out, ts::fano());
    std::istringstream in(out.str());
    BlockDesign back = read_block_file(in);
    CHECK(back.v == 7);
    CHECK(back.k == 3);
    CHECK(back.blocks == ts::fano().blocks);
    std::ostringstream again;
    write_block_file(again, back);
    CHECK(again.str() == out.str());
    // k = 0 design: a single empty line as its block
    BlockDesign empty_block{4, 0, {{}}};
    std::ostringstream o2;
    write_block_file(o2, empty_block);
    std::istringstream i2(o2.str());
    BlockDesign b2 = read_block_file(i2);
    CHECK(b2.blocks == empty_block.blocks);
}

TEST_CASE("block-set file errors carry line numbers") {
    {
        std::istringstream bad("x y z\n");
        CHECK_THROWS_WITH(read_block_file(bad), Catch::Matchers::ContainsSubstring("header"));
    }
    {
        std::istringstream bad("7 3 2\n0 1 2\n");
        CHECK_THROWS_WITH(read_block_file(bad), Catch::Matchers::ContainsSubstring("expected 2 blocks"));
    }
    {
        std::istringstream bad("7 3 1\n0 2 1\n");
        CHECK_THROWS_WITH(read_block_file(bad), Catch::Matchers::ContainsSubstring("line 2"));
    }
    {
        std::istringstream bad("7 3 1\n0 1 9\n");
        CHECK_THROWS_WITH(read_block_file(bad), Catch::Matchers::ContainsSubstring("line 2"));
    }
}
