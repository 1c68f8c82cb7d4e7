#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "depcodec/tree.hpp"

namespace depcodec {

// One basic token line, all ten columns, so files survive a round trip.
struct Token {
    int id = 0;
    std::string form = "_";
    std::string lemma = "_";
    std::string upos = "_";
    std::string xpos = "_";
    std::string feats = "_";
    int head = 0;
    std::string deprel = "_";
    std::string deps = "_";
    std::string misc = "_";

    friend bool operator==(const Token&, const Token&) = default;
};

// A sentence as stored in the file. Multiword ranges, empty nodes and
// mid-sentence comments are kept verbatim in passthrough, each tagged with
// the number of basic tokens that precede it.
struct RawSentence {
    std::vector<std::string> comments;  // leading '#' lines
    std::vector<Token> tokens;
    std::vector<std::pair<int, std::string>> passthrough;

    int size() const { return static_cast<int>(tokens.size()); }
    friend bool operator==(const RawSentence&, const RawSentence&) = default;
};

class ConlluError : public std::runtime_error {
public:
    ConlluError(int line, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line(line) {}

    int line;
};

// Streaming reader; next() yields sentences in file order.
class ConlluReader {
public:
    explicit ConlluReader(std::istream& in) : in_(&in) {}

    bool next(RawSentence& out);

private:
    std::istream* in_;
    int line_ = 0;
};

std::vector<RawSentence> read_conllu(std::istream& in);
std::vector<RawSentence> read_conllu_file(const std::string& path);

void write_conllu(std::ostream& out, const RawSentence& s);
void write_conllu(std::ostream& out, const std::vector<RawSentence>& sentences);
void write_conllu_file(const std::string& path, const std::vector<RawSentence>& sentences);

// Heads and relation labels as a validated tree (throws TreeError).
DepTree tree_of(const RawSentence& s);

std::vector<std::string> upos_of(const RawSentence& s);

// Copy of s with the HEAD and DEPREL columns replaced from t.
RawSentence with_tree(RawSentence s, const DepTree& t);

}  // namespace depcodec
