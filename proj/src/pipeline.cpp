#include "depcodec/pipeline.hpp"

#include <stdexcept>

namespace depcodec {

Encoding parse_encoding(const std::string& name) {
    if (name == "1p") return Encoding::one_planar;
    if (name == "2p-greedy") return Encoding::two_planar_greedy;
    if (name == "2p-prop") return Encoding::two_planar_prop;
    if (name == "relpos") return Encoding::rel_pos;
    throw std::invalid_argument("unknown encoding \"" + name +
                                "\" (expected 1p, 2p-greedy, 2p-prop or relpos)");
}

std::string encoding_name(Encoding e) {
    switch (e) {
        case Encoding::one_planar: return "1p";
        case Encoding::two_planar_greedy: return "2p-greedy";
        case Encoding::two_planar_prop: return "2p-prop";
        case Encoding::rel_pos: return "relpos";
    }
    return "?";
}

int task_count(Encoding e) {
    return e == Encoding::two_planar_greedy || e == Encoding::two_planar_prop ? 3 : 2;
}

SentenceEncode encode_sentence(const RawSentence& s, const EncodeOptions& opt) {
    const DepTree t = tree_of(s);
    SentenceEncode out;
    out.rows.resize(static_cast<size_t>(t.n));
    for (int d = 1; d <= t.n; ++d) {
        LabelRow& row = out.rows[static_cast<size_t>(d) - 1];
        row.id = d;
        row.form = s.tokens[static_cast<size_t>(d) - 1].form;
    }

    if (opt.encoding == Encoding::rel_pos) {
        const std::vector<RelPosLabel> labels = encode_relpos(t, upos_of(s));
        for (int d = 1; d <= t.n; ++d) {
            out.rows[static_cast<size_t>(d) - 1].tasks = {relpos_text(labels[static_cast<size_t>(d) - 1]),
                                                          t.label_of(d)};
        }
        return out;
    }

    PlanePartition partition;
    switch (opt.encoding) {
        case Encoding::one_planar: partition = single_plane(t); break;
        case Encoding::two_planar_greedy: partition = assign_greedy(t, opt.switch_averse); break;
        default: partition = assign_prop(t, opt.switch_averse); break;
    }
    out.unassigned_arcs = partition.unassigned_count();
    const LabelSequence labels = encode(t, partition);
    const bool two_planes = task_count(opt.encoding) == 3;
    for (int d = 1; d <= t.n; ++d) {
        const TokenLabel& tl = labels.tokens[static_cast<size_t>(d) - 1];
        LabelRow& row = out.rows[static_cast<size_t>(d) - 1];
        if (two_planes) {
            row.tasks = {task_text(tl.p1), task_text(tl.p2), t.label_of(d)};
        } else {
            row.tasks = {task_text(tl.p1), t.label_of(d)};
        }
    }
    return out;
}

SentenceDecode decode_sentence(const LabelSentence& rows, const std::vector<std::string>& upos,
                               const DecodeOptions& opt) {
    const int n = static_cast<int>(rows.size());
    const size_t tasks = static_cast<size_t>(task_count(opt.encoding));
    SentenceDecode out;
    out.deprels.resize(static_cast<size_t>(n));
    for (int d = 1; d <= n; ++d) {
        const LabelRow& row = rows[static_cast<size_t>(d) - 1];
        if (row.tasks.size() != tasks) {
            throw std::invalid_argument(
                "token " + std::to_string(d) + ": expected " + std::to_string(tasks) +
                " task columns for " + encoding_name(opt.encoding) + ", got " +
                std::to_string(row.tasks.size()));
        }
        out.deprels[static_cast<size_t>(d) - 1] = row.tasks.back();
    }

    std::vector<RawArc> raw;
    if (opt.encoding == Encoding::rel_pos) {
        if (static_cast<int>(upos.size()) != n) {
            throw std::invalid_argument("expected " + std::to_string(n) + " PoS tags, got " +
                                        std::to_string(upos.size()));
        }
        for (int d = 1; d <= n; ++d) {
            const std::string& tag = upos[static_cast<size_t>(d) - 1];
            if (tag.empty() || tag == "_") {
                throw std::invalid_argument("token " + std::to_string(d) +
                                            " has no PoS tag, required to decode relpos");
            }
        }
        std::vector<RelPosLabel> labels(static_cast<size_t>(n));
        for (int d = 1; d <= n; ++d) {
            try {
                labels[static_cast<size_t>(d) - 1] =
                    parse_relpos_label(rows[static_cast<size_t>(d) - 1].tasks[0]);
            } catch (const std::invalid_argument& e) {
                throw std::invalid_argument("token " + std::to_string(d) + ": " + e.what());
            }
        }
        raw = decode_relpos(labels, upos);
    } else {
        std::vector<TokenLabel> labels(static_cast<size_t>(n));
        const bool two_planes = tasks == 3;
        for (int d = 1; d <= n; ++d) {
            const LabelRow& row = rows[static_cast<size_t>(d) - 1];
            try {
                labels[static_cast<size_t>(d) - 1].p1 = parse_task_label(row.tasks[0]);
                if (two_planes) {
                    labels[static_cast<size_t>(d) - 1].p2 = parse_task_label(row.tasks[1]);
                }
            } catch (const std::invalid_argument& e) {
                throw std::invalid_argument("token " + std::to_string(d) + ": " + e.what());
            }
        }
        const DecodeResult dec = decode(labels);
        raw = dec.arcs;
        out.dropped_closers = dec.dropped_closers;
        out.leftover_openers = dec.leftover_openers;
    }

    std::vector<int> first_head(static_cast<size_t>(n) + 1, -1);
    for (const RawArc& a : raw) {
        if (a.dep < 1 || a.dep > n || a.head < 0 || a.head > n || a.head == a.dep) continue;
        if (first_head[static_cast<size_t>(a.dep)] == -1) {
            first_head[static_cast<size_t>(a.dep)] = a.head;
        }
    }
    for (int d = 1; d <= n; ++d) out.headless += first_head[static_cast<size_t>(d)] == -1;

    out.heads.resize(static_cast<size_t>(n));
    if (opt.postprocess) {
        const DepTree t = postprocess(raw, n, out.deprels);
        for (int d = 1; d <= n; ++d) out.heads[static_cast<size_t>(d) - 1] = t.head_of(d);
    } else {
        for (int d = 1; d <= n; ++d) {
            const int h = first_head[static_cast<size_t>(d)];
            out.heads[static_cast<size_t>(d) - 1] = h == -1 ? 0 : h;
        }
    }
    return out;
}

}  // namespace depcodec
