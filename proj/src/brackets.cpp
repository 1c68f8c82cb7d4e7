#include "depcodec/brackets.hpp"

#include <algorithm>
#include <stdexcept>

namespace depcodec {

LabelSequence encode(const DepTree& t, const PlanePartition& partition) {
    if (partition.plane.size() != t.arcs.size()) {
        throw std::invalid_argument("plane partition does not cover the tree's arcs");
    }
    LabelSequence out;
    out.tokens.resize(static_cast<size_t>(t.n));
    out.deprels.resize(static_cast<size_t>(t.n));
    for (size_t i = 0; i < t.arcs.size(); ++i) {
        const Arc& a = t.arcs[i];
        out.deprels[static_cast<size_t>(a.dep) - 1] = a.label;
        if (a.head == 0) continue;  // root attachment rides on the relation task
        if (partition.plane[i] == Plane::unassigned) continue;
        const bool starred = partition.plane[i] == Plane::two;
        if (a.head < a.dep) {
            PlaneLabel& open = starred ? out.tokens[static_cast<size_t>(a.head)].p2
                                       : out.tokens[static_cast<size_t>(a.head)].p1;
            PlaneLabel& close = starred ? out.tokens[static_cast<size_t>(a.dep) - 1].p2
                                        : out.tokens[static_cast<size_t>(a.dep) - 1].p1;
            ++open.open_right;  // token h+1 has index h
            ++close.close_right;
        } else {
            PlaneLabel& open = starred ? out.tokens[static_cast<size_t>(a.dep)].p2
                                       : out.tokens[static_cast<size_t>(a.dep)].p1;
            PlaneLabel& close = starred ? out.tokens[static_cast<size_t>(a.head) - 1].p2
                                        : out.tokens[static_cast<size_t>(a.head) - 1].p1;
            ++open.open_left;
            ++close.close_left;
        }
    }
    return out;
}

DecodeResult decode(const std::vector<TokenLabel>& tokens) {
    DecodeResult r;
    std::vector<int> left[2], right[2];
    const int n = static_cast<int>(tokens.size());
    for (int i = 1; i <= n; ++i) {
        const TokenLabel& tl = tokens[static_cast<size_t>(i) - 1];
        for (int p = 0; p < 2; ++p) {
            const PlaneLabel& l = p == 0 ? tl.p1 : tl.p2;
            for (int k = 0; k < l.open_left; ++k) {
                // an opener at token 1 would involve the dummy root; discard
                if (i == 1) ++r.leftover_openers;
                else left[p].push_back(i - 1);
            }
            for (int k = 0; k < l.close_left; ++k) {
                if (left[p].empty()) {
                    ++r.dropped_closers;
                } else {
                    r.arcs.push_back({i, left[p].back()});
                    left[p].pop_back();
                }
            }
            for (int k = 0; k < l.open_right; ++k) {
                if (i == 1) ++r.leftover_openers;
                else right[p].push_back(i - 1);
            }
            for (int k = 0; k < l.close_right; ++k) {
                if (right[p].empty()) {
                    ++r.dropped_closers;
                } else {
                    r.arcs.push_back({right[p].back(), i});
                    right[p].pop_back();
                }
            }
        }
    }
    r.leftover_openers += static_cast<int>(left[0].size() + left[1].size() +
                                           right[0].size() + right[1].size());
    return r;
}

namespace {

constexpr int kNoHead = -1;

// Remove one arc from every cycle of the partial head function: the arc
// whose dependent is smallest becomes headless. Heads of 0 terminate walks.
void break_cycles(std::vector<int>& head, int n) {
    std::vector<int> color(static_cast<size_t>(n) + 1, 0);  // 0 new, 1 on path, 2 done
    std::vector<int> path;
    for (int s = 1; s <= n; ++s) {
        if (color[static_cast<size_t>(s)] != 0) continue;
        path.clear();
        int x = s;
        while (x != 0 && head[static_cast<size_t>(x)] != kNoHead &&
               color[static_cast<size_t>(x)] == 0) {
            color[static_cast<size_t>(x)] = 1;
            path.push_back(x);
            x = head[static_cast<size_t>(x)];
        }
        if (x != 0 && head[static_cast<size_t>(x)] != kNoHead &&
            color[static_cast<size_t>(x)] == 1) {
            // x closes a cycle made of the path suffix that starts at x
            size_t at = path.size();
            while (path[at - 1] != x) --at;
            int smallest = x;
            for (size_t i = at; i < path.size(); ++i) smallest = std::min(smallest, path[i]);
            head[static_cast<size_t>(smallest)] = kNoHead;
        }
        for (int y : path) color[static_cast<size_t>(y)] = 2;
    }
}

}  // namespace

DepTree postprocess(const std::vector<RawArc>& raw, int n,
                    const std::vector<std::string>& deprels) {
    std::vector<int> head(static_cast<size_t>(n) + 1, kNoHead);
    for (const RawArc& a : raw) {
        if (a.dep < 1 || a.dep > n || a.head < 0 || a.head > n || a.head == a.dep) continue;
        if (head[static_cast<size_t>(a.dep)] != kNoHead) continue;  // first decode wins
        head[static_cast<size_t>(a.dep)] = a.head;
    }

    break_cycles(head, n);

    const auto deprel = [&](int d) -> const std::string& {
        static const std::string empty;
        return static_cast<size_t>(d) <= deprels.size() ? deprels[static_cast<size_t>(d) - 1]
                                                        : empty;
    };

    for (int d = 1; d <= n; ++d) {
        if (head[static_cast<size_t>(d)] == kNoHead && deprel(d) == "root") {
            head[static_cast<size_t>(d)] = 0;
        }
    }
    if (std::find(head.begin() + 1, head.end(), 0) == head.end()) {
        const auto headless = std::find(head.begin() + 1, head.end(), kNoHead);
        if (headless != head.end()) {
            *headless = 0;
        } else {
            // cannot happen after cycle breaking, kept for totality
            for (size_t i = raw.size(); i-- > 0;) {
                if (raw[i].dep >= 1 && raw[i].dep <= n) {
                    head[static_cast<size_t>(raw[i].dep)] = 0;
                    break;
                }
            }
        }
    }

    int root_child = 0;
    for (int d = 1; d <= n; ++d) {
        if (head[static_cast<size_t>(d)] == 0) {
            root_child = d;
            break;
        }
    }
    for (int d = 1; d <= n; ++d) {
        if (head[static_cast<size_t>(d)] == kNoHead) head[static_cast<size_t>(d)] = root_child;
    }

    std::vector<Arc> arcs;
    arcs.reserve(static_cast<size_t>(n));
    for (int d = 1; d <= n; ++d) {
        arcs.push_back({head[static_cast<size_t>(d)], d, deprel(d)});
    }
    return validate_tree(std::move(arcs), n);
}

std::string task_text(const PlaneLabel& label) {
    if (label.empty()) return "NONE";
    std::string s;
    s.append(static_cast<size_t>(label.open_left), '<');
    s.append(static_cast<size_t>(label.close_left), '\\');
    s.append(static_cast<size_t>(label.open_right), '/');
    s.append(static_cast<size_t>(label.close_right), '>');
    return s;
}

PlaneLabel parse_task_label(const std::string& text) {
    PlaneLabel l;
    if (text == "NONE") return l;
    if (text.empty()) throw std::invalid_argument("empty bracket label");
    for (char c : text) {
        switch (c) {
            case '<': ++l.open_left; break;
            case '\\': ++l.close_left; break;
            case '/': ++l.open_right; break;
            case '>': ++l.close_right; break;
            default:
                throw std::invalid_argument("bad character in bracket label \"" + text + "\"");
        }
    }
    return l;
}

std::string display_text(const TokenLabel& label) {
    if (label.empty()) return "NONE";
    std::string s;
    const auto put = [&s](int count, char c, bool star) {
        for (int k = 0; k < count; ++k) {
            s.push_back(c);
            if (star) s.push_back('*');
        }
    };
    put(label.p2.open_left, '<', true);
    put(label.p1.open_left, '<', false);
    put(label.p2.close_left, '\\', true);
    put(label.p1.close_left, '\\', false);
    put(label.p2.open_right, '/', true);
    put(label.p1.open_right, '/', false);
    put(label.p2.close_right, '>', true);
    put(label.p1.close_right, '>', false);
    return s;
}

TokenLabel parse_display_label(const std::string& text) {
    TokenLabel l;
    if (text == "NONE") return l;
    if (text.empty()) throw std::invalid_argument("empty bracket label");
    for (size_t i = 0; i < text.size();) {
        const char c = text[i];
        const bool star = i + 1 < text.size() && text[i + 1] == '*';
        PlaneLabel& p = star ? l.p2 : l.p1;
        switch (c) {
            case '<': ++p.open_left; break;
            case '\\': ++p.close_left; break;
            case '/': ++p.open_right; break;
            case '>': ++p.close_right; break;
            default:
                throw std::invalid_argument("bad character in bracket label \"" + text + "\"");
        }
        i += star ? 2 : 1;
    }
    return l;
}

bool has_same_direction_crossing(const DepTree& t) {
    for (size_t a = 0; a < t.arcs.size(); ++a) {
        if (t.arcs[a].head == 0) continue;
        for (size_t b = a + 1; b < t.arcs.size(); ++b) {
            if (t.arcs[b].head == 0) continue;
            if (!arcs_cross(t.arcs[a], t.arcs[b])) continue;
            const bool a_right = t.arcs[a].head < t.arcs[a].dep;
            const bool b_right = t.arcs[b].head < t.arcs[b].dep;
            if (a_right == b_right) return true;
        }
    }
    return false;
}

}  // namespace depcodec
