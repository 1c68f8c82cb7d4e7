#include "depcodec/metrics.hpp"

#include <cstdio>
#include <set>
#include <sstream>
#include <stdexcept>

#include "depcodec/parallel.hpp"

namespace depcodec {

std::string format_pct(long long num, long long den) {
    if (den == 0) return "n/a";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", 100.0 * static_cast<double>(num) /
                                               static_cast<double>(den));
    return buf;
}

CoverageCounts sentence_coverage(const DepTree& t, const std::vector<std::string>& upos,
                                 const EncodeOptions& opt) {
    std::vector<RawArc> raw;
    if (opt.encoding == Encoding::rel_pos) {
        raw = decode_relpos(encode_relpos(t, upos), upos);
    } else {
        PlanePartition partition;
        switch (opt.encoding) {
            case Encoding::one_planar: partition = single_plane(t); break;
            case Encoding::two_planar_greedy:
                partition = assign_greedy(t, opt.switch_averse);
                break;
            default: partition = assign_prop(t, opt.switch_averse); break;
        }
        raw = decode(encode(t, partition).tokens).arcs;
    }

    std::vector<int> raw_head(static_cast<size_t>(t.n) + 1, -1);
    for (const RawArc& a : raw) {
        if (a.dep < 1 || a.dep > t.n) continue;
        if (raw_head[static_cast<size_t>(a.dep)] == -1) {
            raw_head[static_cast<size_t>(a.dep)] = a.head;
        }
    }
    std::vector<std::string> deprels(static_cast<size_t>(t.n));
    for (const Arc& a : t.arcs) deprels[static_cast<size_t>(a.dep) - 1] = a.label;
    const DepTree fixed = postprocess(raw, t.n, deprels);

    CoverageCounts c;
    c.total = t.n;
    for (const Arc& a : t.arcs) {
        const int rh = raw_head[static_cast<size_t>(a.dep)];
        c.raw += rh == a.head || (a.head == 0 && rh == -1);
        c.post += fixed.head_of(a.dep) == a.head;
    }
    return c;
}

CoverageReport arc_coverage(const std::vector<RawSentence>& corpus, const EncodeOptions& opt,
                            int workers) {
    const std::vector<CoverageCounts> per_sentence = parallel_map<CoverageCounts>(
        corpus.size(), workers, [&](size_t i) {
            try {
                return sentence_coverage(tree_of(corpus[i]), upos_of(corpus[i]), opt);
            } catch (const std::exception& e) {
                throw std::runtime_error("sentence " + std::to_string(i + 1) + ": " + e.what());
            }
        });
    CoverageReport r;
    r.encoding = encoding_name(opt.encoding);
    r.sentences = static_cast<long long>(corpus.size());
    for (const CoverageCounts& c : per_sentence) {
        r.counts.total += c.total;
        r.counts.raw += c.raw;
        r.counts.post += c.post;
    }
    return r;
}

namespace {

// Distinct labels per task; arity fixed by the first row seen.
void collect_labels(const std::vector<LabelSentence>& sentences,
                    std::vector<std::set<std::string>>& per_task) {
    for (const LabelSentence& s : sentences) {
        for (const LabelRow& row : s) {
            if (per_task.empty()) per_task.resize(row.tasks.size());
            if (row.tasks.size() != per_task.size()) {
                throw std::invalid_argument(
                    "task arity mismatch: " + std::to_string(row.tasks.size()) + " vs " +
                    std::to_string(per_task.size()));
            }
            for (size_t t = 0; t < row.tasks.size(); ++t) per_task[t].insert(row.tasks[t]);
        }
    }
}

}  // namespace

VocabReport label_vocab(const std::vector<LabelSentence>& train,
                        const std::vector<LabelSentence>& dev) {
    std::vector<std::set<std::string>> per_task;
    collect_labels(train, per_task);
    collect_labels(dev, per_task);
    VocabReport r;
    for (std::set<std::string>& labels : per_task) {
        r.data.push_back(static_cast<long long>(labels.size()));
        labels.insert("BOS");
        labels.insert("EOS");
        labels.insert("NONE");
        r.total.push_back(static_cast<long long>(labels.size()));
    }
    return r;
}

UnseenReport unseen_labels(const std::vector<LabelSentence>& known,
                           const std::vector<LabelSentence>& test) {
    std::vector<std::set<std::string>> known_sets;
    collect_labels(known, known_sets);
    UnseenReport r;
    std::vector<std::set<std::string>> unseen_sets;
    std::vector<std::set<std::string>> test_sets;
    for (const LabelSentence& s : test) {
        for (const LabelRow& row : s) {
            if (r.tasks.empty()) {
                r.tasks.resize(row.tasks.size());
                unseen_sets.resize(row.tasks.size());
                test_sets.resize(row.tasks.size());
                if (!known_sets.empty() && known_sets.size() != row.tasks.size()) {
                    throw std::invalid_argument(
                        "task arity mismatch: " + std::to_string(row.tasks.size()) + " vs " +
                        std::to_string(known_sets.size()));
                }
            }
            if (row.tasks.size() != r.tasks.size()) {
                throw std::invalid_argument(
                    "task arity mismatch: " + std::to_string(row.tasks.size()) + " vs " +
                    std::to_string(r.tasks.size()));
            }
            for (size_t t = 0; t < row.tasks.size(); ++t) {
                UnseenTask& task = r.tasks[t];
                ++task.total_occurrences;
                test_sets[t].insert(row.tasks[t]);
                const bool seen = t < known_sets.size() &&
                                  known_sets[t].count(row.tasks[t]) > 0;
                if (!seen) {
                    ++task.unseen_occurrences;
                    unseen_sets[t].insert(row.tasks[t]);
                }
            }
        }
    }
    for (size_t t = 0; t < r.tasks.size(); ++t) {
        r.tasks[t].unseen = static_cast<long long>(unseen_sets[t].size());
        r.tasks[t].distinct_test = static_cast<long long>(test_sets[t].size());
    }
    return r;
}

namespace {

// Arcs as stored in the file, no validity requirements.
DepTree literal_tree(const RawSentence& s) {
    DepTree t;
    t.n = s.size();
    t.arcs.reserve(s.tokens.size());
    for (const Token& tok : s.tokens) t.arcs.push_back({tok.head, tok.id, tok.deprel});
    return t;
}

std::vector<char> crossed_flags(const DepTree& t) {
    std::vector<char> crossed(t.arcs.size(), 0);
    for (size_t a = 0; a < t.arcs.size(); ++a) {
        for (size_t b = a + 1; b < t.arcs.size(); ++b) {
            if (arcs_cross(t.arcs[a], t.arcs[b])) crossed[a] = crossed[b] = 1;
        }
    }
    return crossed;
}

}  // namespace

EvalReport evaluate(const std::vector<RawSentence>& gold, const std::vector<RawSentence>& pred,
                    bool nonproj, int workers) {
    if (gold.size() != pred.size()) {
        throw std::runtime_error("corpora differ in length: " + std::to_string(gold.size()) +
                                 " gold vs " + std::to_string(pred.size()) +
                                 " predicted sentences");
    }
    const std::vector<EvalReport> per_sentence = parallel_map<EvalReport>(
        gold.size(), workers, [&](size_t i) {
            const RawSentence& g = gold[i];
            const RawSentence& p = pred[i];
            if (g.size() != p.size()) {
                throw std::runtime_error("sentence " + std::to_string(i + 1) + ": gold has " +
                                         std::to_string(g.size()) + " tokens, predictions have " +
                                         std::to_string(p.size()));
            }
            EvalReport r;
            r.sentences = 1;
            r.tokens = g.size();
            for (int d = 1; d <= g.size(); ++d) {
                const Token& gt = g.tokens[static_cast<size_t>(d) - 1];
                const Token& pt = p.tokens[static_cast<size_t>(d) - 1];
                if (gt.head == pt.head) {
                    ++r.correct_heads;
                    r.correct_labeled += gt.deprel == pt.deprel;
                }
            }
            if (nonproj) {
                r.nonproj = true;
                const DepTree gt = literal_tree(g);
                const DepTree pt = literal_tree(p);
                const std::vector<char> gx = crossed_flags(gt);
                const std::vector<char> px = crossed_flags(pt);
                bool g_np = false, p_np = false;
                for (int d = 1; d <= g.size(); ++d) {
                    const size_t i0 = static_cast<size_t>(d) - 1;
                    g_np = g_np || gx[i0];
                    p_np = p_np || px[i0];
                    r.np_dep_gold += gx[i0];
                    r.np_dep_pred += px[i0];
                    r.np_dep_match += gx[i0] && px[i0] &&
                                      gt.arcs[i0].head == pt.arcs[i0].head;
                }
                r.np_sent_gold += g_np;
                r.np_sent_pred += p_np;
                r.np_sent_both += g_np && p_np;
            }
            return r;
        });
    EvalReport total;
    total.nonproj = nonproj;
    for (const EvalReport& r : per_sentence) {
        total.sentences += r.sentences;
        total.tokens += r.tokens;
        total.correct_heads += r.correct_heads;
        total.correct_labeled += r.correct_labeled;
        total.np_sent_gold += r.np_sent_gold;
        total.np_sent_pred += r.np_sent_pred;
        total.np_sent_both += r.np_sent_both;
        total.np_dep_gold += r.np_dep_gold;
        total.np_dep_pred += r.np_dep_pred;
        total.np_dep_match += r.np_dep_match;
    }
    return total;
}

TreebankStats treebank_stats(const std::vector<RawSentence>& corpus, int workers) {
    const std::vector<TreebankStats> per_sentence = parallel_map<TreebankStats>(
        corpus.size(), workers, [&](size_t i) {
            const DepTree t = literal_tree(corpus[i]);
            const std::vector<char> crossed = crossed_flags(t);
            TreebankStats r;
            r.sentences = 1;
            r.arcs = static_cast<long long>(t.arcs.size());
            bool any = false;
            for (char c : crossed) {
                r.np_arcs += c;
                any = any || c;
            }
            r.np_sentences = any;
            r.two_planar_sentences = is_two_planar(t);
            return r;
        });
    TreebankStats total;
    for (const TreebankStats& r : per_sentence) {
        total.sentences += r.sentences;
        total.arcs += r.arcs;
        total.np_sentences += r.np_sentences;
        total.np_arcs += r.np_arcs;
        total.two_planar_sentences += r.two_planar_sentences;
    }
    return total;
}

std::string to_text(const CoverageReport& r) {
    std::ostringstream os;
    os << "arc coverage, encoding " << r.encoding << "\n"
       << "  sentences             " << r.sentences << "\n"
       << "  gold arcs             " << r.counts.total << "\n"
       << "  recovered raw         " << r.counts.raw << " ("
       << format_pct(r.counts.raw, r.counts.total) << "%)\n"
       << "  recovered postproc    " << r.counts.post << " ("
       << format_pct(r.counts.post, r.counts.total) << "%)\n";
    return os.str();
}

std::string to_records(const CoverageReport& r) {
    std::ostringstream os;
    os << "coverage.encoding\t" << r.encoding << "\n"
       << "coverage.sentences\t" << r.sentences << "\n"
       << "coverage.total_arcs\t" << r.counts.total << "\n"
       << "coverage.recovered_raw\t" << r.counts.raw << "\n"
       << "coverage.recovered_raw_pct\t" << format_pct(r.counts.raw, r.counts.total) << "\n"
       << "coverage.recovered_post\t" << r.counts.post << "\n"
       << "coverage.recovered_post_pct\t" << format_pct(r.counts.post, r.counts.total) << "\n";
    return os.str();
}

std::string to_text(const VocabReport& r) {
    std::ostringstream os;
    os << "label vocabulary (BOS, EOS and NONE counted once on top)\n";
    for (size_t t = 0; t < r.data.size(); ++t) {
        os << "  task " << t + 1 << "  " << r.data[t] << " distinct, " << r.total[t]
           << " with reserved\n";
    }
    if (r.data.empty()) os << "  no labels\n";
    return os.str();
}

std::string to_records(const VocabReport& r) {
    std::ostringstream os;
    for (size_t t = 0; t < r.data.size(); ++t) {
        os << "vocab.task" << t + 1 << ".data\t" << r.data[t] << "\n"
           << "vocab.task" << t + 1 << ".total\t" << r.total[t] << "\n";
    }
    return os.str();
}

std::string to_text(const UnseenReport& r) {
    std::ostringstream os;
    os << "unseen test labels\n";
    for (size_t t = 0; t < r.tasks.size(); ++t) {
        const UnseenTask& task = r.tasks[t];
        os << "  task " << t + 1 << "  " << task.unseen << " of " << task.distinct_test
           << " distinct (" << format_pct(task.unseen, task.distinct_test) << "%), "
           << task.unseen_occurrences << " of " << task.total_occurrences << " occurrences ("
           << format_pct(task.unseen_occurrences, task.total_occurrences) << "%)\n";
    }
    if (r.tasks.empty()) os << "  no labels\n";
    return os.str();
}

std::string to_records(const UnseenReport& r) {
    std::ostringstream os;
    for (size_t t = 0; t < r.tasks.size(); ++t) {
        const UnseenTask& task = r.tasks[t];
        os << "unseen.task" << t + 1 << ".labels\t" << task.unseen << "\n"
           << "unseen.task" << t + 1 << ".labels_pct\t"
           << format_pct(task.unseen, task.distinct_test) << "\n"
           << "unseen.task" << t + 1 << ".occurrences\t" << task.unseen_occurrences << "\n"
           << "unseen.task" << t + 1 << ".occurrences_pct\t"
           << format_pct(task.unseen_occurrences, task.total_occurrences) << "\n";
    }
    return os.str();
}

std::string to_text(const EvalReport& r) {
    std::ostringstream os;
    os << "evaluation over " << r.sentences << " sentences, " << r.tokens << " tokens\n"
       << "  UAS  " << format_pct(r.correct_heads, r.tokens) << "\n"
       << "  LAS  " << format_pct(r.correct_labeled, r.tokens) << "\n";
    if (r.nonproj) {
        os << "  non-projective sentences  precision "
           << format_pct(r.np_sent_both, r.np_sent_pred) << "  recall "
           << format_pct(r.np_sent_both, r.np_sent_gold) << "\n"
           << "  non-projective deps       precision "
           << format_pct(r.np_dep_match, r.np_dep_pred) << "  recall "
           << format_pct(r.np_dep_match, r.np_dep_gold)
           << "  (strict: arcs must be non-projective on both sides)\n";
    }
    return os.str();
}

std::string to_records(const EvalReport& r) {
    std::ostringstream os;
    os << "eval.sentences\t" << r.sentences << "\n"
       << "eval.tokens\t" << r.tokens << "\n"
       << "eval.uas\t" << format_pct(r.correct_heads, r.tokens) << "\n"
       << "eval.las\t" << format_pct(r.correct_labeled, r.tokens) << "\n";
    if (r.nonproj) {
        os << "eval.np_sent_precision\t" << format_pct(r.np_sent_both, r.np_sent_pred) << "\n"
           << "eval.np_sent_recall\t" << format_pct(r.np_sent_both, r.np_sent_gold) << "\n"
           << "eval.np_dep_precision\t" << format_pct(r.np_dep_match, r.np_dep_pred) << "\n"
           << "eval.np_dep_recall\t" << format_pct(r.np_dep_match, r.np_dep_gold) << "\n";
    }
    return os.str();
}

std::string to_text(const TreebankStats& r) {
    std::ostringstream os;
    os << "treebank statistics (crossing-based non-projectivity)\n"
       << "  sentences                 " << r.sentences << "\n"
       << "  dependencies              " << r.arcs << "\n"
       << "  non-projective sentences  " << r.np_sentences << " ("
       << format_pct(r.np_sentences, r.sentences) << "%)\n"
       << "  non-projective deps       " << r.np_arcs << " (" << format_pct(r.np_arcs, r.arcs)
       << "%)\n"
       << "  2-planar sentences        " << r.two_planar_sentences << " ("
       << format_pct(r.two_planar_sentences, r.sentences) << "%)\n";
    if (r.sentences == 0) os << "  empty input\n";
    return os.str();
}

std::string to_records(const TreebankStats& r) {
    std::ostringstream os;
    os << "stats.sentences\t" << r.sentences << "\n"
       << "stats.arcs\t" << r.arcs << "\n"
       << "stats.np_sentences\t" << r.np_sentences << "\n"
       << "stats.np_sentences_pct\t" << format_pct(r.np_sentences, r.sentences) << "\n"
       << "stats.np_arcs\t" << r.np_arcs << "\n"
       << "stats.np_arcs_pct\t" << format_pct(r.np_arcs, r.arcs) << "\n"
       << "stats.two_planar\t" << r.two_planar_sentences << "\n"
       << "stats.two_planar_pct\t" << format_pct(r.two_planar_sentences, r.sentences) << "\n";
    if (r.sentences == 0) os << "stats.empty\ttrue\n";
    return os.str();
}

}  // namespace depcodec
