#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "depcodec/conllu.hpp"
#include "fixtures.hpp"

using namespace depcodec;

namespace {

std::vector<RawSentence> parse(const std::string& text) {
    std::istringstream in(text);
    return read_conllu(in);
}

std::string render(const std::vector<RawSentence>& sentences) {
    std::ostringstream out;
    write_conllu(out, sentences);
    return out.str();
}

const std::string kTwoTokens =
    "# sent_id = 1\n"
    "1\tHe\the\tPRON\t_\t_\t2\tnsubj\t_\t_\n"
    "2\truns\trun\tVERB\t_\t_\t0\troot\t_\t_\n"
    "\n";

}  // namespace

TEST_CASE("a basic sentence parses into tokens") {
    std::vector<RawSentence> s = parse(kTwoTokens);
    REQUIRE(s.size() == 1);
    REQUIRE(s[0].size() == 2);
    CHECK(s[0].comments == std::vector<std::string>{"# sent_id = 1"});
    CHECK(s[0].tokens[0].form == "He");
    CHECK(s[0].tokens[0].upos == "PRON");
    CHECK(s[0].tokens[0].head == 2);
    CHECK(s[0].tokens[0].deprel == "nsubj");
    CHECK(s[0].tokens[1].head == 0);
}

TEST_CASE("writing reproduces the input byte for byte") {
    CHECK(render(parse(kTwoTokens)) == kTwoTokens);
}

TEST_CASE("multiword ranges and empty nodes ride along in place") {
    const std::string text =
        "1-2\tdel\t_\t_\t_\t_\t_\t_\t_\t_\n"
        "1\tde\tde\tADP\t_\t_\t2\tcase\t_\t_\n"
        "2\tel\tel\tDET\t_\t_\t0\troot\t_\t_\n"
        "2.1\tnull\t_\t_\t_\t_\t_\t_\t_\t_\n"
        "\n";
    std::vector<RawSentence> s = parse(text);
    REQUIRE(s.size() == 1);
    CHECK(s[0].size() == 2);  // ranges and empty nodes are not tokens
    REQUIRE(s[0].passthrough.size() == 2);
    CHECK(s[0].passthrough[0].first == 0);
    CHECK(s[0].passthrough[1].first == 2);
    CHECK(render(s) == text);
}

TEST_CASE("mid-sentence comments are kept in position") {
    const std::string text =
        "# leading\n"
        "1\ta\t_\t_\t_\t_\t0\troot\t_\t_\n"
        "# between\n"
        "2\tb\t_\t_\t_\t_\t1\tx\t_\t_\n"
        "\n";
    std::vector<RawSentence> s = parse(text);
    REQUIRE(s.size() == 1);
    CHECK(s[0].comments.size() == 1);
    REQUIRE(s[0].passthrough.size() == 1);
    CHECK(s[0].passthrough[0] == std::pair<int, std::string>(1, "# between"));
    CHECK(render(s) == text);
}

TEST_CASE("carriage returns and stray blank lines are tolerated") {
    const std::string text =
        "\n"
        "1\ta\t_\t_\t_\t_\t0\troot\t_\t_\r\n"
        "\n"
        "\n"
        "1\tb\t_\t_\t_\t_\t0\troot\t_\t_\n";  // no trailing blank line
    std::vector<RawSentence> s = parse(text);
    REQUIRE(s.size() == 2);
    CHECK(s[0].tokens[0].form == "a");
    CHECK(s[1].tokens[0].form == "b");
}

TEST_CASE("column count errors name the line") {
    try {
        parse("1\ta\t_\t_\t_\t_\t0\troot\t_\n\n");
        FAIL("expected ConlluError");
    } catch (const ConlluError& e) {
        CHECK(e.line == 1);
        CHECK(std::string(e.what()).find("line 1") != std::string::npos);
        CHECK(std::string(e.what()).find("10") != std::string::npos);
    }
}

TEST_CASE("bad ids, ordering and heads are rejected with line numbers") {
    CHECK_THROWS_AS(parse("x\ta\t_\t_\t_\t_\t0\troot\t_\t_\n\n"), ConlluError);
    CHECK_THROWS_AS(parse("2\ta\t_\t_\t_\t_\t0\troot\t_\t_\n\n"), ConlluError);
    CHECK_THROWS_AS(parse("1\ta\t_\t_\t_\t_\tx\troot\t_\t_\n\n"), ConlluError);
    CHECK_THROWS_AS(parse("1\ta\t_\t_\t_\t_\t-1\troot\t_\t_\n\n"), ConlluError);
    try {
        parse(
            "1\ta\t_\t_\t_\t_\t0\troot\t_\t_\n"
            "2\tb\t_\t_\t_\t_\t5\tx\t_\t_\n"
            "\n");
        FAIL("expected ConlluError");
    } catch (const ConlluError& e) {
        CHECK(e.line == 2);  // the head check runs once n is known
    }
    CHECK_THROWS_AS(parse("1\ta\t_\t_\t_\t_\t1\tx\t_\t_\n\n"), ConlluError);  // self head
}

TEST_CASE("tree_of validates the analysis") {
    std::vector<RawSentence> s = parse(kTwoTokens);
    DepTree t = tree_of(s[0]);
    CHECK(t.head_of(1) == 2);
    CHECK(t.label_of(2) == "root");
    // in-range but cyclic heads only fail at validation time
    std::vector<RawSentence> bad = parse(
        "1\ta\t_\t_\t_\t_\t2\tx\t_\t_\n"
        "2\tb\t_\t_\t_\t_\t1\ty\t_\t_\n"
        "\n");
    CHECK_THROWS_AS(tree_of(bad[0]), TreeError);
}

TEST_CASE("upos_of lifts the tag column") {
    std::vector<RawSentence> s = parse(kTwoTokens);
    CHECK(upos_of(s[0]) == std::vector<std::string>{"PRON", "VERB"});
}

TEST_CASE("with_tree swaps heads and relations, nothing else") {
    std::vector<RawSentence> s = parse(kTwoTokens);
    DepTree t = validate_tree({{0, 1, "root"}, {1, 2, "obj"}}, 2);
    RawSentence swapped = with_tree(s[0], t);
    CHECK(swapped.tokens[0].head == 0);
    CHECK(swapped.tokens[0].deprel == "root");
    CHECK(swapped.tokens[1].head == 1);
    CHECK(swapped.tokens[1].deprel == "obj");
    CHECK(swapped.tokens[0].form == "He");
    CHECK(swapped.comments == s[0].comments);
    CHECK_THROWS_AS(with_tree(s[0], fx::chain(3)), std::invalid_argument);
}

TEST_CASE("reading a missing file reports the path") {
    try {
        read_conllu_file("/nonexistent/x.conllu");
        FAIL("expected runtime_error");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find("x.conllu") != std::string::npos);
    }
}

TEST_CASE("streaming reader yields sentences one at a time") {
    std::istringstream in(kTwoTokens + kTwoTokens);
    ConlluReader reader(in);
    RawSentence s;
    int count = 0;
    while (reader.next(s)) {
        CHECK(s.size() == 2);
        ++count;
    }
    CHECK(count == 2);
}
