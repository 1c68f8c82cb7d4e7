#include "depcodec/conllu.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

namespace depcodec {

namespace {

bool parse_int(const std::string& s, int& out) {
    const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
    return res.ec == std::errc() && res.ptr == s.data() + s.size();
}

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> fields;
    size_t start = 0;
    for (;;) {
        const size_t tab = line.find('\t', start);
        if (tab == std::string::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
}

}  // namespace

bool ConlluReader::next(RawSentence& out) {
    out = RawSentence{};
    std::vector<int> token_lines;  // source line of each token, for head checks
    bool any = false;
    std::string line;
    while (std::getline(*in_, line)) {
        ++line_;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) {
            if (any) break;
            continue;  // stray blank line between sentences
        }
        any = true;
        if (line[0] == '#') {
            if (out.tokens.empty() && out.passthrough.empty()) {
                out.comments.push_back(line);
            } else {
                out.passthrough.emplace_back(out.size(), line);
            }
            continue;
        }
        const std::vector<std::string> fields = split_tabs(line);
        if (fields.size() != 10) {
            throw ConlluError(line_, "expected 10 tab-separated columns, got " +
                                         std::to_string(fields.size()));
        }
        if (fields[0].find('-') != std::string::npos ||
            fields[0].find('.') != std::string::npos) {
            // multiword range or empty node: carried along, never encoded
            out.passthrough.emplace_back(out.size(), line);
            continue;
        }
        Token t;
        if (!parse_int(fields[0], t.id) || t.id < 1) {
            throw ConlluError(line_, "bad token id \"" + fields[0] + "\"");
        }
        if (t.id != out.size() + 1) {
            throw ConlluError(line_, "token id " + std::to_string(t.id) +
                                         " out of order, expected " +
                                         std::to_string(out.size() + 1));
        }
        if (!parse_int(fields[6], t.head) || t.head < 0) {
            throw ConlluError(line_, "bad head \"" + fields[6] + "\"");
        }
        t.form = fields[1];
        t.lemma = fields[2];
        t.upos = fields[3];
        t.xpos = fields[4];
        t.feats = fields[5];
        t.deprel = fields[7];
        t.deps = fields[8];
        t.misc = fields[9];
        out.tokens.push_back(std::move(t));
        token_lines.push_back(line_);
    }
    if (!any) return false;
    const int n = out.size();
    for (size_t i = 0; i < out.tokens.size(); ++i) {
        const Token& t = out.tokens[i];
        if (t.head > n || t.head == t.id) {
            throw ConlluError(token_lines[i], "head " + std::to_string(t.head) +
                                                  " out of range for token " +
                                                  std::to_string(t.id) + " (n=" +
                                                  std::to_string(n) + ")");
        }
    }
    return true;
}

std::vector<RawSentence> read_conllu(std::istream& in) {
    std::vector<RawSentence> sentences;
    ConlluReader reader(in);
    RawSentence s;
    while (reader.next(s)) sentences.push_back(std::move(s));
    return sentences;
}

std::vector<RawSentence> read_conllu_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_conllu(in);
}

void write_conllu(std::ostream& out, const RawSentence& s) {
    for (const std::string& c : s.comments) out << c << "\n";
    size_t pt = 0;
    for (int i = 0; i <= s.size(); ++i) {
        while (pt < s.passthrough.size() && s.passthrough[pt].first == i) {
            out << s.passthrough[pt].second << "\n";
            ++pt;
        }
        if (i == s.size()) break;
        const Token& t = s.tokens[static_cast<size_t>(i)];
        out << t.id << '\t' << t.form << '\t' << t.lemma << '\t' << t.upos << '\t' << t.xpos
            << '\t' << t.feats << '\t' << t.head << '\t' << t.deprel << '\t' << t.deps << '\t'
            << t.misc << "\n";
    }
    out << "\n";
}

void write_conllu(std::ostream& out, const std::vector<RawSentence>& sentences) {
    for (const RawSentence& s : sentences) write_conllu(out, s);
}

void write_conllu_file(const std::string& path, const std::vector<RawSentence>& sentences) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path);
    write_conllu(out, sentences);
}

DepTree tree_of(const RawSentence& s) {
    std::vector<Arc> arcs;
    arcs.reserve(s.tokens.size());
    for (const Token& t : s.tokens) arcs.push_back({t.head, t.id, t.deprel});
    return validate_tree(std::move(arcs), s.size());
}

std::vector<std::string> upos_of(const RawSentence& s) {
    std::vector<std::string> tags;
    tags.reserve(s.tokens.size());
    for (const Token& t : s.tokens) tags.push_back(t.upos);
    return tags;
}

RawSentence with_tree(RawSentence s, const DepTree& t) {
    if (t.n != s.size()) {
        throw std::invalid_argument("tree has " + std::to_string(t.n) + " tokens, sentence has " +
                                    std::to_string(s.size()));
    }
    for (Token& tok : s.tokens) {
        tok.head = t.head_of(tok.id);
        tok.deprel = t.label_of(tok.id);
    }
    return s;
}

}  // namespace depcodec
