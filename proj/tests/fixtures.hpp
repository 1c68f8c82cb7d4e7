#pragma once

#include <string>
#include <utility>
#include <vector>

#include "depcodec/conllu.hpp"
#include "depcodec/tree.hpp"

namespace fx {

// Six tokens rooted at 1, crossings (1,3)x(2,4), (1,5)x(3,6), (2,4)x(3,6).
// 2-planar but not planar; the running example throughout the tests.
inline depcodec::DepTree sample6() {
    return depcodec::validate_tree({{0, 1, "root"},
                                    {1, 2, "det"},
                                    {1, 3, "nsubj"},
                                    {2, 4, "obj"},
                                    {1, 5, "obl"},
                                    {3, 6, "amod"}},
                                   6);
}

// Projective left-to-right chain.
inline depcodec::DepTree chain(int n) {
    std::vector<depcodec::Arc> arcs;
    for (int d = 1; d <= n; ++d) arcs.push_back({d - 1, d, d == 1 ? "root" : "dep"});
    return depcodec::validate_tree(std::move(arcs), n);
}

// Crossings graph is a single triangle (arcs (1,4), (2,5), (3,6)),
// so the tree is not 2-planar.
inline depcodec::DepTree triangle6() {
    return depcodec::validate_tree(
        {{0, 1, "root"}, {1, 2, "a"}, {2, 3, "b"}, {1, 4, "c"}, {2, 5, "d"}, {3, 6, "e"}}, 6);
}

inline depcodec::RawSentence sentence_of(const depcodec::DepTree& t,
                                         const std::vector<std::string>& upos = {}) {
    depcodec::RawSentence s;
    for (int d = 1; d <= t.n; ++d) {
        depcodec::Token tok;
        tok.id = d;
        tok.form = "w" + std::to_string(d);
        if (!upos.empty()) tok.upos = upos[static_cast<size_t>(d) - 1];
        tok.head = t.head_of(d);
        tok.deprel = t.label_of(d);
        s.tokens.push_back(tok);
    }
    return s;
}

// Deterministic relabeling used by round-trip sweeps: root arcs "root",
// everything else cycles through three symbols.
inline depcodec::DepTree relabel(depcodec::DepTree t) {
    static const std::string names[3] = {"ra", "rb", "rc"};
    for (auto& a : t.arcs) a.label = a.head == 0 ? "root" : names[a.dep % 3];
    return t;
}

}  // namespace fx
