#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "depcodec/conllu.hpp"
#include "depcodec/labels_io.hpp"
#include "depcodec/metrics.hpp"
#include "depcodec/parallel.hpp"
#include "depcodec/pipeline.hpp"

namespace {

using namespace depcodec;

// 0 = clean, 1 = some sentences skipped, 2 = fatal error
constexpr int kSkipped = 1;
constexpr int kFatal = 2;

Encoding encoding_from(const std::string& name) {
    return parse_encoding(name);  // throws std::invalid_argument
}

void print_report(const std::string& text, const std::string& records,
                  const std::string& format) {
    std::cout << (format == "records" ? records : text);
}

// Keep the sentences whose trees validate; report the rest on stderr.
std::vector<RawSentence> keep_valid(std::vector<RawSentence> corpus, int& exit_code) {
    std::vector<RawSentence> valid;
    valid.reserve(corpus.size());
    for (size_t i = 0; i < corpus.size(); ++i) {
        try {
            tree_of(corpus[i]);
            valid.push_back(std::move(corpus[i]));
        } catch (const std::exception& e) {
            std::cerr << "sentence " << i + 1 << " skipped: " << e.what() << "\n";
            exit_code = kSkipped;
        }
    }
    return valid;
}

struct EncodeArgs {
    std::string input, output, encoding = "2p-prop";
    bool switch_averse = false;
    int workers = default_workers();
};

int run_encode(const EncodeArgs& args) {
    const EncodeOptions opt{encoding_from(args.encoding), args.switch_averse};
    const std::vector<RawSentence> corpus = read_conllu_file(args.input);

    struct Result {
        bool ok = false;
        std::string error;
        LabelSentence rows;
        int unassigned = 0;
    };
    const std::vector<Result> results = parallel_map<Result>(
        corpus.size(), args.workers, [&](size_t i) {
            Result r;
            try {
                SentenceEncode enc = encode_sentence(corpus[i], opt);
                r.ok = true;
                r.rows = std::move(enc.rows);
                r.unassigned = enc.unassigned_arcs;
            } catch (const std::exception& e) {
                r.error = e.what();
            }
            return r;
        });

    int exit_code = 0;
    std::vector<LabelSentence> out;
    long long arcs = 0, unassigned = 0, skipped = 0;
    for (size_t i = 0; i < results.size(); ++i) {
        if (!results[i].ok) {
            std::cerr << "sentence " << i + 1 << " skipped: " << results[i].error << "\n";
            exit_code = kSkipped;
            ++skipped;
            continue;
        }
        arcs += static_cast<long long>(results[i].rows.size());
        unassigned += results[i].unassigned;
        out.push_back(std::move(results[i].rows));
    }
    write_labels_file(args.output, out);
    std::cout << "encoded " << out.size() << " sentences";
    if (skipped) std::cout << " (" << skipped << " skipped)";
    std::cout << ", " << arcs << " arcs, " << unassigned << " unassigned\n";
    return exit_code;
}

struct DecodeArgs {
    std::string input, reference, output, tags, encoding = "2p-prop";
    bool no_postprocess = false;
    int workers = default_workers();
};

int run_decode(const DecodeArgs& args) {
    const DecodeOptions opt{encoding_from(args.encoding), !args.no_postprocess};
    const std::vector<LabelSentence> labels = read_labels_file(args.input);
    std::vector<RawSentence> ref = read_conllu_file(args.reference);
    if (labels.size() != ref.size()) {
        throw std::runtime_error("label file has " + std::to_string(labels.size()) +
                                 " sentences, reference has " + std::to_string(ref.size()));
    }
    std::vector<std::vector<std::string>> tags(ref.size());
    if (!args.tags.empty()) {
        const std::vector<RawSentence> tagged = read_conllu_file(args.tags);
        if (tagged.size() != ref.size()) {
            throw std::runtime_error("tag file has " + std::to_string(tagged.size()) +
                                     " sentences, reference has " + std::to_string(ref.size()));
        }
        for (size_t i = 0; i < ref.size(); ++i) tags[i] = upos_of(tagged[i]);
    } else {
        for (size_t i = 0; i < ref.size(); ++i) tags[i] = upos_of(ref[i]);
    }
    for (size_t i = 0; i < ref.size(); ++i) {
        if (static_cast<int>(labels[i].size()) != ref[i].size() ||
            tags[i].size() != labels[i].size()) {
            throw std::runtime_error("sentence " + std::to_string(i + 1) + ": label rows (" +
                                     std::to_string(labels[i].size()) +
                                     ") do not match reference tokens (" +
                                     std::to_string(ref[i].size()) + ")");
        }
    }

    const std::vector<SentenceDecode> decoded =
        parallel_map<SentenceDecode>(ref.size(), args.workers, [&](size_t i) {
            try {
                return decode_sentence(labels[i], tags[i], opt);
            } catch (const std::exception& e) {
                throw std::runtime_error("sentence " + std::to_string(i + 1) + ": " + e.what());
            }
        });

    for (size_t i = 0; i < ref.size(); ++i) {
        for (int d = 1; d <= ref[i].size(); ++d) {
            Token& tok = ref[i].tokens[static_cast<size_t>(d) - 1];
            tok.head = decoded[i].heads[static_cast<size_t>(d) - 1];
            tok.deprel = decoded[i].deprels[static_cast<size_t>(d) - 1];
        }
    }
    write_conllu_file(args.output, ref);

    if (args.no_postprocess) {
        std::ofstream diag(args.output + ".diag");
        if (!diag) throw std::runtime_error("cannot open " + args.output + ".diag");
        diag << "# sentence\theadless\tdropped_closers\tleftover_openers\n";
        for (size_t i = 0; i < decoded.size(); ++i) {
            diag << i + 1 << '\t' << decoded[i].headless << '\t' << decoded[i].dropped_closers
                 << '\t' << decoded[i].leftover_openers << "\n";
        }
    }
    std::cout << "decoded " << ref.size() << " sentences\n";
    return 0;
}

struct CoverageArgs {
    std::string input, encoding = "2p-prop", format = "text";
    bool switch_averse = false;
    int workers = default_workers();
};

int run_coverage(const CoverageArgs& args) {
    const EncodeOptions opt{encoding_from(args.encoding), args.switch_averse};
    int exit_code = 0;
    const std::vector<RawSentence> corpus = keep_valid(read_conllu_file(args.input), exit_code);
    const CoverageReport report = arc_coverage(corpus, opt, args.workers);
    print_report(to_text(report), to_records(report), args.format);
    return exit_code;
}

struct StatsArgs {
    std::string input, format = "text";
    int workers = default_workers();
};

int run_stats(const StatsArgs& args) {
    const TreebankStats report = treebank_stats(read_conllu_file(args.input), args.workers);
    print_report(to_text(report), to_records(report), args.format);
    return 0;
}

struct EvalArgs {
    std::string gold, pred, format = "text";
    bool nonproj = false;
    int workers = default_workers();
};

int run_eval(const EvalArgs& args) {
    const EvalReport report = evaluate(read_conllu_file(args.gold), read_conllu_file(args.pred),
                                       args.nonproj, args.workers);
    print_report(to_text(report), to_records(report), args.format);
    return 0;
}

struct VocabArgs {
    std::string train, dev, test, format = "text";
};

int run_vocab(const VocabArgs& args) {
    const std::vector<LabelSentence> train = read_labels_file(args.train);
    const std::vector<LabelSentence> dev =
        args.dev.empty() ? std::vector<LabelSentence>{} : read_labels_file(args.dev);
    const VocabReport report = label_vocab(train, dev);
    std::string text = to_text(report);
    std::string records = to_records(report);
    if (!args.test.empty()) {
        std::vector<LabelSentence> known = train;
        known.insert(known.end(), dev.begin(), dev.end());
        const UnseenReport unseen = unseen_labels(known, read_labels_file(args.test));
        text += to_text(unseen);
        records += to_records(unseen);
    }
    print_report(text, records, args.format);
    return 0;
}

void add_workers_flag(CLI::App* cmd, int& workers) {
    cmd->add_option("--workers", workers,
                    "worker threads (default: DEPCODEC_WORKERS or all cores)");
}

void add_format_flag(CLI::App* cmd, std::string& format) {
    cmd->add_option("--format", format, "report format")
        ->check(CLI::IsMember({"text", "records"}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bracket and relative-PoS linearization of dependency trees"};
    app.require_subcommand(1);

    EncodeArgs encode_args;
    CLI::App* encode = app.add_subcommand("encode", "CoNLL-U to per-token labels");
    encode->add_option("-i,--input", encode_args.input, "gold CoNLL-U file")->required();
    encode->add_option("-o,--output", encode_args.output, "label TSV to write")->required();
    encode->add_option("--encoding", encode_args.encoding, "1p, 2p-greedy, 2p-prop or relpos");
    encode->add_flag("--switch-averse", encode_args.switch_averse,
                     "prefer the plane of the previous assignment");
    add_workers_flag(encode, encode_args.workers);

    DecodeArgs decode_args;
    CLI::App* decode = app.add_subcommand("decode", "labels back to CoNLL-U");
    decode->add_option("-i,--input", decode_args.input, "label TSV file")->required();
    decode->add_option("-r,--reference", decode_args.reference,
                       "CoNLL-U providing forms and tags")->required();
    decode->add_option("-o,--output", decode_args.output, "CoNLL-U to write")->required();
    decode->add_option("--tags", decode_args.tags,
                       "CoNLL-U whose UPOS column replaces the reference tags");
    decode->add_option("--encoding", decode_args.encoding, "1p, 2p-greedy, 2p-prop or relpos");
    decode->add_flag("--no-postprocess", decode_args.no_postprocess,
                     "keep raw decoded heads (headless as 0) and write a .diag sidecar");
    add_workers_flag(decode, decode_args.workers);

    CoverageArgs coverage_args;
    CLI::App* coverage = app.add_subcommand("coverage", "arcs surviving an encode-decode trip");
    coverage->add_option("-i,--input", coverage_args.input, "gold CoNLL-U file")->required();
    coverage->add_option("--encoding", coverage_args.encoding,
                         "1p, 2p-greedy, 2p-prop or relpos");
    coverage->add_flag("--switch-averse", coverage_args.switch_averse,
                       "prefer the plane of the previous assignment");
    add_workers_flag(coverage, coverage_args.workers);
    add_format_flag(coverage, coverage_args.format);

    StatsArgs stats_args;
    CLI::App* stats = app.add_subcommand("stats", "treebank non-projectivity statistics");
    stats->add_option("-i,--input", stats_args.input, "CoNLL-U file")->required();
    add_workers_flag(stats, stats_args.workers);
    add_format_flag(stats, stats_args.format);

    EvalArgs eval_args;
    CLI::App* eval = app.add_subcommand("eval", "attachment scores gold vs. predicted");
    eval->add_option("--gold", eval_args.gold, "gold CoNLL-U file")->required();
    eval->add_option("--pred", eval_args.pred, "predicted CoNLL-U file")->required();
    eval->add_flag("--nonproj", eval_args.nonproj,
                   "add non-projective precision and recall");
    add_workers_flag(eval, eval_args.workers);
    add_format_flag(eval, eval_args.format);

    VocabArgs vocab_args;
    CLI::App* vocab = app.add_subcommand("vocab", "label vocabulary sizes");
    vocab->add_option("--train", vocab_args.train, "training label file")->required();
    vocab->add_option("--dev", vocab_args.dev, "development label file");
    vocab->add_option("--test", vocab_args.test,
                      "test label file; adds the unseen-label report");
    add_format_flag(vocab, vocab_args.format);

    CLI11_PARSE(app, argc, argv);

    try {
        if (encode->parsed()) return run_encode(encode_args);
        if (decode->parsed()) return run_decode(decode_args);
        if (coverage->parsed()) return run_coverage(coverage_args);
        if (stats->parsed()) return run_stats(stats_args);
        if (eval->parsed()) return run_eval(eval_args);
        if (vocab->parsed()) return run_vocab(vocab_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFatal;
    }
    return kFatal;
}
