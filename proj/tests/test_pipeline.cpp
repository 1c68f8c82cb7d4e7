#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "depcodec/pipeline.hpp"
#include "fixtures.hpp"

using namespace depcodec;

TEST_CASE("encoding names parse in both directions") {
    CHECK(parse_encoding("1p") == Encoding::one_planar);
    CHECK(parse_encoding("2p-greedy") == Encoding::two_planar_greedy);
    CHECK(parse_encoding("2p-prop") == Encoding::two_planar_prop);
    CHECK(parse_encoding("relpos") == Encoding::rel_pos);
    CHECK_THROWS_AS(parse_encoding("3p"), std::invalid_argument);
    for (Encoding e : {Encoding::one_planar, Encoding::two_planar_greedy,
                       Encoding::two_planar_prop, Encoding::rel_pos}) {
        CHECK(parse_encoding(encoding_name(e)) == e);
    }
}

TEST_CASE("task_count matches the file layout") {
    CHECK(task_count(Encoding::one_planar) == 2);
    CHECK(task_count(Encoding::two_planar_greedy) == 3);
    CHECK(task_count(Encoding::two_planar_prop) == 3);
    CHECK(task_count(Encoding::rel_pos) == 2);
}

TEST_CASE("encode_sentence lays out rows for the propagation encoding") {
    RawSentence s = fx::sentence_of(fx::sample6());
    SentenceEncode enc = encode_sentence(s, {Encoding::two_planar_prop, false});
    REQUIRE(enc.rows.size() == 6);
    CHECK(enc.unassigned_arcs == 0);
    CHECK(enc.rows[0] == LabelRow{1, "w1", {"NONE", "NONE", "root"}});
    CHECK(enc.rows[1] == LabelRow{2, "w2", {"//>", "/", "det"}});
    CHECK(enc.rows[3] == LabelRow{4, "w4", {"/", ">", "obj"}});
    CHECK(enc.rows[5] == LabelRow{6, "w6", {">", "NONE", "amod"}});
}

TEST_CASE("greedy encoding reports its unassigned arc") {
    RawSentence s = fx::sentence_of(fx::sample6());
    SentenceEncode enc = encode_sentence(s, {Encoding::two_planar_greedy, false});
    CHECK(enc.unassigned_arcs == 1);
    CHECK(enc.rows[5] == LabelRow{6, "w6", {"NONE", "NONE", "amod"}});
}

TEST_CASE("single-plane rows carry two columns") {
    RawSentence s = fx::sentence_of(fx::sample6());
    SentenceEncode enc = encode_sentence(s, {Encoding::one_planar, false});
    CHECK(enc.rows[1] == LabelRow{2, "w2", {"///>", "det"}});
    CHECK(enc.rows[1].tasks.size() == 2);
}

TEST_CASE("relative-PoS rows need tags and carry two columns") {
    RawSentence tagged = fx::sentence_of(fx::sample6(), {"D", "N", "V", "N", "N", "A"});
    SentenceEncode enc = encode_sentence(tagged, {Encoding::rel_pos, false});
    CHECK(enc.rows[0] == LabelRow{1, "w1", {"-1@ROOT", "root"}});
    CHECK(enc.rows[2] == LabelRow{3, "w3", {"-1@D", "nsubj"}});
    RawSentence untagged = fx::sentence_of(fx::sample6());
    CHECK_THROWS_AS(encode_sentence(untagged, {Encoding::rel_pos, false}),
                    std::invalid_argument);
}

TEST_CASE("encode_sentence refuses invalid analyses") {
    RawSentence s = fx::sentence_of(fx::sample6());
    s.tokens[0].head = 1;  // self loop
    CHECK_THROWS_AS(encode_sentence(s, {Encoding::two_planar_prop, false}), TreeError);
}

TEST_CASE("decode_sentence inverts encode_sentence") {
    RawSentence s = fx::sentence_of(fx::sample6(), {"D", "N", "V", "N", "N", "A"});
    for (Encoding e : {Encoding::one_planar, Encoding::two_planar_greedy,
                       Encoding::two_planar_prop, Encoding::rel_pos}) {
        SentenceEncode enc = encode_sentence(s, {e, false});
        SentenceDecode dec = decode_sentence(enc.rows, upos_of(s), {e, true});
        if (e == Encoding::two_planar_prop || e == Encoding::rel_pos) {
            CHECK(dec.heads == std::vector<int>{0, 1, 1, 2, 1, 3});
        }
        CHECK(dec.deprels ==
              std::vector<std::string>{"root", "det", "nsubj", "obj", "obl", "amod"});
        CHECK(dec.dropped_closers == 0);
    }
}

TEST_CASE("raw mode reports headless tokens as zero") {
    RawSentence s = fx::sentence_of(fx::sample6());
    SentenceEncode enc = encode_sentence(s, {Encoding::two_planar_greedy, false});
    SentenceDecode dec = decode_sentence(enc.rows, {}, {Encoding::two_planar_greedy, false});
    // token 1 is the real root, token 6 lost its arc to the plane limit
    CHECK(dec.heads == std::vector<int>{0, 1, 1, 2, 1, 0});
    CHECK(dec.headless == 2);
    CHECK(dec.leftover_openers == 0);
}

TEST_CASE("decode_sentence checks the task arity") {
    LabelSentence rows = {{1, "a", {"NONE", "root"}}};
    try {
        decode_sentence(rows, {}, {Encoding::two_planar_prop, true});
        FAIL("expected invalid_argument");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("token 1") != std::string::npos);
        CHECK(std::string(e.what()).find("2p-prop") != std::string::npos);
    }
}

TEST_CASE("decode_sentence names the token with a bad label") {
    LabelSentence rows = {{1, "a", {"NONE", "NONE", "root"}},
                          {2, "b", {"q", "NONE", "x"}}};
    try {
        decode_sentence(rows, {}, {Encoding::two_planar_prop, true});
        FAIL("expected invalid_argument");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("token 2") != std::string::npos);
    }
    LabelSentence relrows = {{1, "a", {"0@V", "root"}}};
    CHECK_THROWS_AS(decode_sentence(relrows, {"V"}, {Encoding::rel_pos, true}),
                    std::invalid_argument);
}

TEST_CASE("relative-PoS decoding requires usable tags") {
    LabelSentence rows = {{1, "a", {"-1@ROOT", "root"}}};
    CHECK_THROWS_AS(decode_sentence(rows, {}, {Encoding::rel_pos, true}),
                    std::invalid_argument);
    CHECK_THROWS_AS(decode_sentence(rows, {"_"}, {Encoding::rel_pos, true}),
                    std::invalid_argument);
    SentenceDecode dec = decode_sentence(rows, {"V"}, {Encoding::rel_pos, true});
    CHECK(dec.heads == std::vector<int>{0});
}

TEST_CASE("postprocess always yields usable heads even from junk labels") {
    LabelSentence rows = {{1, "a", {">", "NONE", "x"}}, {2, "b", {"NONE", "//", "y"}}};
    SentenceDecode dec = decode_sentence(rows, {}, {Encoding::two_planar_prop, true});
    CHECK(dec.heads.size() == 2);
    CHECK(dec.headless == 2);
    CHECK(dec.dropped_closers == 1);
    CHECK(dec.leftover_openers == 2);
    // every token found a head, one of them the dummy root
    CHECK(std::count(dec.heads.begin(), dec.heads.end(), 0) == 1);
}
