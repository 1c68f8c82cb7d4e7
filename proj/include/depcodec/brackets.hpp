#pragma once

#include <string>
#include <vector>

#include "depcodec/planes.hpp"
#include "depcodec/tree.hpp"

namespace depcodec {

// Bracket counts for one token within one plane. Encoder output keeps
// open_left and close_right at 0 or 1; parsed model output may not.
struct PlaneLabel {
    int open_left = 0;    // <   the previous token depends on a word to the right
    int close_left = 0;   // \   this token heads a pending left dependent
    int open_right = 0;   // /   the previous token heads a word to the right
    int close_right = 0;  // >   this token depends on a pending head

    bool empty() const {
        return open_left == 0 && close_left == 0 && open_right == 0 && close_right == 0;
    }
    friend bool operator==(const PlaneLabel&, const PlaneLabel&) = default;
};

struct TokenLabel {
    PlaneLabel p1;
    PlaneLabel p2;

    bool empty() const { return p1.empty() && p2.empty(); }
    friend bool operator==(const TokenLabel&, const TokenLabel&) = default;
};

// The bracket tasks plus the relation task for one sentence.
struct LabelSequence {
    std::vector<TokenLabel> tokens;
    std::vector<std::string> deprels;  // one per token

    friend bool operator==(const LabelSequence&, const LabelSequence&) = default;
};

// Raw decoder output: arcs in pop order plus discard diagnostics.
struct DecodeResult {
    std::vector<RawArc> arcs;
    int dropped_closers = 0;   // closers met on an empty stack
    int leftover_openers = 0;  // openers at token 1 or still stacked at the end
};

// Brackets for every plane-assigned non-root arc; deprels for every token.
// Root arcs carry no brackets (attachment is implied by the relation task).
// Throws std::invalid_argument if the partition does not cover t's arcs.
LabelSequence encode(const DepTree& t, const PlanePartition& partition);

// Four-stack matcher. Tokens left to right; within a token each plane runs
// open-left, close-left, open-right, close-right, plane 1 before plane 2.
DecodeResult decode(const std::vector<TokenLabel>& tokens);

// Turns arbitrary raw arcs into a valid tree: drop duplicate or out-of-range
// arcs, break cycles at the smallest dependent, root every headless token
// whose relation is "root" (the leftmost headless token if none is), attach
// the remaining headless tokens to the leftmost root child.
DepTree postprocess(const std::vector<RawArc>& raw, int n,
                    const std::vector<std::string>& deprels);

// Single-plane label text, canonical order "<" "\"... "/"... ">";
// empty labels render as "NONE".
std::string task_text(const PlaneLabel& label);

// Accepts the four bracket characters in any order, or "NONE".
// Throws std::invalid_argument on anything else.
PlaneLabel parse_task_label(const std::string& text);

// Both planes in one string; plane-2 elements wear a star and come first
// within each bracket kind ("/*//>" = plane-2 "/", plane-1 "//>").
std::string display_text(const TokenLabel& label);

TokenLabel parse_display_label(const std::string& text);

// True iff two non-root arcs cross while pointing the same way. Exactly the
// trees without such a pair survive a single-plane round trip.
bool has_same_direction_crossing(const DepTree& t);

}  // namespace depcodec
