#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "depcodec/brackets.hpp"
#include "depcodec/relpos.hpp"
#include "depcodec/tree.hpp"
#include "fixtures.hpp"

using namespace depcodec;

TEST_CASE("a head to the right counts matching tags rightward") {
    DepTree t = validate_tree({{0, 2, "root"}, {2, 1, "nsubj"}}, 2);
    std::vector<RelPosLabel> labels = encode_relpos(t, {"N", "V"});
    REQUIRE(labels.size() == 2);
    CHECK(labels[0] == RelPosLabel{1, "V"});
    CHECK(labels[1] == RelPosLabel{-1, "ROOT"});
    std::vector<RawArc> arcs = decode_relpos(labels, {"N", "V"});
    std::vector<RawArc> want = {{2, 1}, {0, 2}};
    CHECK(arcs == want);
}

TEST_CASE("repeated tags raise the occurrence count") {
    DepTree t = validate_tree({{0, 3, "root"}, {3, 1, "a"}, {3, 2, "b"}}, 3);
    std::vector<RelPosLabel> labels = encode_relpos(t, {"N", "V", "V"});
    CHECK(labels[0] == RelPosLabel{2, "V"});  // skip the V at 2, land on 3
    CHECK(labels[1] == RelPosLabel{1, "V"});
    CHECK(labels[2] == RelPosLabel{-1, "ROOT"});
    std::vector<RawArc> arcs = decode_relpos(labels, {"N", "V", "V"});
    std::vector<RawArc> want = {{3, 1}, {3, 2}, {0, 3}};
    CHECK(arcs == want);
}

TEST_CASE("a head to the left counts matching tags leftward") {
    DepTree t = validate_tree({{0, 1, "root"}, {1, 2, "a"}, {2, 3, "b"}, {1, 4, "c"}}, 4);
    std::vector<RelPosLabel> labels = encode_relpos(t, {"V", "N", "V", "N"});
    CHECK(labels[0] == RelPosLabel{-1, "ROOT"});
    CHECK(labels[1] == RelPosLabel{-1, "V"});
    CHECK(labels[2] == RelPosLabel{-1, "N"});
    CHECK(labels[3] == RelPosLabel{-2, "V"});  // the V at 3 intervenes
    std::vector<RawArc> arcs = decode_relpos(labels, {"V", "N", "V", "N"});
    std::vector<RawArc> want = {{0, 1}, {1, 2}, {2, 3}, {1, 4}};
    CHECK(arcs == want);
}

TEST_CASE("a single token is a root attachment") {
    DepTree t = validate_tree({{0, 1, "root"}}, 1);
    std::vector<RelPosLabel> labels = encode_relpos(t, {"X"});
    CHECK(labels[0] == RelPosLabel{-1, "ROOT"});
    std::vector<RawArc> want = {{0, 1}};
    CHECK(decode_relpos(labels, {"X"}) == want);
}

TEST_CASE("encode_relpos demands one tag per token") {
    DepTree t = validate_tree({{0, 1, "root"}, {1, 2, "a"}}, 2);
    CHECK_THROWS_AS(encode_relpos(t, {"N"}), std::invalid_argument);
    CHECK_THROWS_AS(encode_relpos(t, {"N", ""}), std::invalid_argument);
    CHECK_THROWS_AS(encode_relpos(t, {"N", "_"}), std::invalid_argument);
}

TEST_CASE("labels that outrun the matching tags leave the token headless") {
    std::vector<RawArc> arcs = decode_relpos({{3, "X"}, {-1, "ROOT"}}, {"X", "X"});
    // only one X right of token 1 (and the request for three never resolves)
    std::vector<RawArc> want = {{0, 2}};
    CHECK(arcs == want);
    DepTree fixed = postprocess(arcs, 2, {"a", "root"});
    CHECK(fixed.head_of(1) == 2);  // headless token hangs off the root child
    CHECK(fixed.head_of(2) == 0);
}

TEST_CASE("the virtual root tag only lives at position zero") {
    CHECK(decode_relpos({{1, "ROOT"}}, {"X"}).empty());   // nothing to the right
    CHECK(decode_relpos({{-2, "ROOT"}}, {"X"}).empty());  // only one virtual slot
}

TEST_CASE("decode_relpos survives corrupt tag rows") {
    CHECK(decode_relpos({{-1, "ROOT"}, {1, "V"}}, {"N"}).size() == 1);
    CHECK(decode_relpos({{-1, "V"}}, {}).empty());
    std::vector<RawArc> want = {{0, 1}};
    CHECK(decode_relpos({{-1, "ROOT"}}, {}) == want);
}

TEST_CASE("relative-PoS label text round-trips") {
    CHECK(relpos_text({2, "V"}) == "+2@V");
    CHECK(relpos_text({-1, "ROOT"}) == "-1@ROOT");
    CHECK(parse_relpos_label("+2@V") == RelPosLabel{2, "V"});
    CHECK(parse_relpos_label("-1@ROOT") == RelPosLabel{-1, "ROOT"});
    CHECK(parse_relpos_label("2@V") == RelPosLabel{2, "V"});  // plus sign optional
    CHECK_THROWS_AS(parse_relpos_label("0@V"), std::invalid_argument);
    CHECK_THROWS_AS(parse_relpos_label("x@V"), std::invalid_argument);
    CHECK_THROWS_AS(parse_relpos_label("+2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_relpos_label("@V"), std::invalid_argument);
    CHECK_THROWS_AS(parse_relpos_label("+2@"), std::invalid_argument);
    CHECK_THROWS_AS(parse_relpos_label(""), std::invalid_argument);
}

TEST_CASE("round trip is the identity on every small tree and tagging") {
    std::mt19937 rng(99173);
    static const std::string tags[3] = {"A", "B", "N"};
    for (int n = 1; n <= 6; ++n) {
        for_each_tree(n, [&](const DepTree& plain) {
            DepTree t = fx::relabel(plain);
            std::vector<std::string> upos(static_cast<size_t>(n));
            for (auto& u : upos) u = tags[rng() % 3];
            std::vector<RelPosLabel> labels = encode_relpos(t, upos);
            std::vector<std::string> deprels;
            for (const Arc& a : t.arcs) deprels.push_back(a.label);
            REQUIRE(postprocess(decode_relpos(labels, upos), n, deprels) == t);
        });
    }
}
