#pragma once

#include <string>
#include <vector>

#include "depcodec/tree.hpp"

namespace depcodec {

// Head position expressed as a signed occurrence count of the head's own
// PoS tag, counted from the dependent in the head's direction. Root arcs
// use the reserved tag "ROOT", which lives at virtual position 0.
struct RelPosLabel {
    int offset = 0;   // never 0; +k = k-th matching tag to the right
    std::string pos;

    friend bool operator==(const RelPosLabel&, const RelPosLabel&) = default;
};

// upos[d-1] tags token d. Throws std::invalid_argument when a tag is
// missing (empty or "_") or upos does not cover the sentence.
std::vector<RelPosLabel> encode_relpos(const DepTree& t, const std::vector<std::string>& upos);

// Inverse lookup against the given tags. Labels that ask for more matching
// tags than exist yield no arc (the token stays headless for postprocess).
// Root lookups resolve to head 0 through the virtual ROOT position.
std::vector<RawArc> decode_relpos(const std::vector<RelPosLabel>& labels,
                                  const std::vector<std::string>& upos);

std::string relpos_text(const RelPosLabel& label);  // "+2@V", "-1@ROOT"

// Throws std::invalid_argument on a malformed label.
RelPosLabel parse_relpos_label(const std::string& text);

}  // namespace depcodec
