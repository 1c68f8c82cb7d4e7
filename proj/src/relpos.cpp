#include "depcodec/relpos.hpp"

#include <charconv>
#include <stdexcept>

namespace depcodec {

namespace {

const std::string kRootTag = "ROOT";

void check_tags(const std::vector<std::string>& upos, int n) {
    if (static_cast<int>(upos.size()) != n) {
        throw std::invalid_argument("expected " + std::to_string(n) + " PoS tags, got " +
                                    std::to_string(upos.size()));
    }
    for (int d = 1; d <= n; ++d) {
        const std::string& tag = upos[static_cast<size_t>(d) - 1];
        if (tag.empty() || tag == "_") {
            throw std::invalid_argument("token " + std::to_string(d) + " has no PoS tag");
        }
    }
}

// Tag of position p, with the virtual root at 0.
const std::string& tag_at(const std::vector<std::string>& upos, int p) {
    return p == 0 ? kRootTag : upos[static_cast<size_t>(p) - 1];
}

}  // namespace

std::vector<RelPosLabel> encode_relpos(const DepTree& t, const std::vector<std::string>& upos) {
    check_tags(upos, t.n);
    std::vector<RelPosLabel> out(static_cast<size_t>(t.n));
    for (const Arc& a : t.arcs) {
        RelPosLabel& l = out[static_cast<size_t>(a.dep) - 1];
        if (a.head == 0) {
            l = {-1, kRootTag};
            continue;
        }
        const std::string& tag = upos[static_cast<size_t>(a.head) - 1];
        int count = 0;
        if (a.head > a.dep) {
            for (int p = a.dep + 1; p <= a.head; ++p) count += tag_at(upos, p) == tag;
            l = {count, tag};
        } else {
            for (int p = a.head; p < a.dep; ++p) count += tag_at(upos, p) == tag;
            l = {-count, tag};
        }
    }
    return out;
}

std::vector<RawArc> decode_relpos(const std::vector<RelPosLabel>& labels,
                                  const std::vector<std::string>& upos) {
    const int n = static_cast<int>(labels.size());
    std::vector<RawArc> arcs;
    arcs.reserve(static_cast<size_t>(n));
    for (int d = 1; d <= n; ++d) {
        const RelPosLabel& l = labels[static_cast<size_t>(d) - 1];
        int remaining = l.offset > 0 ? l.offset : -l.offset;
        if (remaining == 0) continue;
        const int step = l.offset > 0 ? 1 : -1;
        const int tagged = static_cast<int>(upos.size());
        for (int p = d + step; p >= 0 && p <= n; p += step) {
            const bool match = p == 0 ? l.pos == kRootTag
                                      : p <= tagged && upos[static_cast<size_t>(p) - 1] == l.pos;
            if (match && --remaining == 0) {
                arcs.push_back({p, d});
                break;
            }
        }
        // remaining > 0: not enough matching tags, token stays headless
    }
    return arcs;
}

std::string relpos_text(const RelPosLabel& label) {
    return (label.offset > 0 ? "+" : "") + std::to_string(label.offset) + "@" + label.pos;
}

RelPosLabel parse_relpos_label(const std::string& text) {
    const size_t at = text.find('@');
    if (at == std::string::npos || at == 0 || at + 1 == text.size()) {
        throw std::invalid_argument("bad relative-PoS label \"" + text + "\"");
    }
    const char* first = text.data();
    if (*first == '+') ++first;  // from_chars takes '-' but not '+'
    int offset = 0;
    const auto res = std::from_chars(first, text.data() + at, offset);
    if (res.ec != std::errc() || res.ptr != text.data() + at || offset == 0) {
        throw std::invalid_argument("bad offset in relative-PoS label \"" + text + "\"");
    }
    return {offset, text.substr(at + 1)};
}

}  // namespace depcodec
