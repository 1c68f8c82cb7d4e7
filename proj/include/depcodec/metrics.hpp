#pragma once

#include <string>
#include <vector>

#include "depcodec/conllu.hpp"
#include "depcodec/labels_io.hpp"
#include "depcodec/pipeline.hpp"
#include "depcodec/tree.hpp"

namespace depcodec {

// "66.67" with two decimals, or "n/a" when the denominator is zero.
std::string format_pct(long long num, long long den);

struct CoverageCounts {
    long long total = 0;  // gold arcs
    long long raw = 0;    // recovered before postprocessing
    long long post = 0;   // recovered after postprocessing
};

// Encode, decode and compare against gold. A root arc counts as recovered
// raw when its dependent ends up headless (or explicitly attached to 0).
// upos is only needed for the relative-PoS encoding.
CoverageCounts sentence_coverage(const DepTree& t, const std::vector<std::string>& upos,
                                 const EncodeOptions& opt);

struct CoverageReport {
    std::string encoding;
    long long sentences = 0;
    CoverageCounts counts;
};

CoverageReport arc_coverage(const std::vector<RawSentence>& corpus, const EncodeOptions& opt,
                            int workers);

struct VocabReport {
    // per task: distinct labels in the data, and with BOS, EOS and NONE
    // counted once on top (NONE is usually in the data already)
    std::vector<long long> data;
    std::vector<long long> total;
};

// Distinct labels per task over both splits together; dev may be empty.
// Throws std::invalid_argument when task arities differ.
VocabReport label_vocab(const std::vector<LabelSentence>& train,
                        const std::vector<LabelSentence>& dev);

struct UnseenTask {
    long long unseen = 0;         // distinct test labels absent from known
    long long distinct_test = 0;
    long long unseen_occurrences = 0;
    long long total_occurrences = 0;
};

struct UnseenReport {
    std::vector<UnseenTask> tasks;
};

UnseenReport unseen_labels(const std::vector<LabelSentence>& known,
                           const std::vector<LabelSentence>& test);

struct EvalReport {
    long long sentences = 0;
    long long tokens = 0;
    long long correct_heads = 0;    // UAS numerator
    long long correct_labeled = 0;  // LAS numerator
    bool nonproj = false;           // whether the fields below were computed
    long long np_sent_gold = 0;
    long long np_sent_pred = 0;
    long long np_sent_both = 0;
    long long np_dep_gold = 0;
    long long np_dep_pred = 0;
    long long np_dep_match = 0;  // same arc, non-projective on both sides
};

// Token-level attachment scores, optionally with non-projectivity precision
// and recall. Trees are compared as given; predictions need not be valid
// trees. Throws std::runtime_error on misaligned corpora, naming the
// sentence.
EvalReport evaluate(const std::vector<RawSentence>& gold, const std::vector<RawSentence>& pred,
                    bool nonproj, int workers);

struct TreebankStats {
    long long sentences = 0;
    long long arcs = 0;
    long long np_sentences = 0;
    long long np_arcs = 0;
    long long two_planar_sentences = 0;
};

TreebankStats treebank_stats(const std::vector<RawSentence>& corpus, int workers);

// Aligned plain text and one-record-per-line ("key<TAB>value") renderings.
std::string to_text(const CoverageReport& r);
std::string to_records(const CoverageReport& r);
std::string to_text(const VocabReport& r);
std::string to_records(const VocabReport& r);
std::string to_text(const UnseenReport& r);
std::string to_records(const UnseenReport& r);
std::string to_text(const EvalReport& r);
std::string to_records(const EvalReport& r);
std::string to_text(const TreebankStats& r);
std::string to_records(const TreebankStats& r);

}  // namespace depcodec
