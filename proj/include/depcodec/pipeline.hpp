#pragma once

#include <string>
#include <vector>

#include "depcodec/brackets.hpp"
#include "depcodec/conllu.hpp"
#include "depcodec/labels_io.hpp"
#include "depcodec/planes.hpp"
#include "depcodec/relpos.hpp"

namespace depcodec {

enum class Encoding { one_planar, two_planar_greedy, two_planar_prop, rel_pos };

// Accepts "1p", "2p-greedy", "2p-prop", "relpos"; throws std::invalid_argument.
Encoding parse_encoding(const std::string& name);
std::string encoding_name(Encoding e);

// Label columns per token, relation task included: 2, 3, 3, 2.
int task_count(Encoding e);

struct EncodeOptions {
    Encoding encoding = Encoding::two_planar_prop;
    bool switch_averse = false;
};

struct SentenceEncode {
    LabelSentence rows;
    int unassigned_arcs = 0;
};

// Throws TreeError for invalid trees and std::invalid_argument for missing
// PoS tags under the relative-PoS encoding.
SentenceEncode encode_sentence(const RawSentence& s, const EncodeOptions& opt);

struct DecodeOptions {
    Encoding encoding = Encoding::two_planar_prop;
    bool postprocess = true;
};

struct SentenceDecode {
    std::vector<int> heads;  // per token; without postprocess, headless stays 0
    std::vector<std::string> deprels;
    int headless = 0;  // tokens with no decoded head, before postprocess
    int dropped_closers = 0;
    int leftover_openers = 0;
};

// upos is only consulted by the relative-PoS encoding. Throws
// std::invalid_argument on task arity mismatches or unparseable labels,
// naming the offending token.
SentenceDecode decode_sentence(const LabelSentence& rows, const std::vector<std::string>& upos,
                               const DecodeOptions& opt);

}  // namespace depcodec
