#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace depcodec {

// One line of the label file: id, form, then one column per task.
// The empty label serializes as the literal "NONE".
struct LabelRow {
    int id = 0;
    std::string form;
    std::vector<std::string> tasks;

    friend bool operator==(const LabelRow&, const LabelRow&) = default;
};

using LabelSentence = std::vector<LabelRow>;

class LabelsError : public std::runtime_error {
public:
    LabelsError(int line, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line(line) {}

    int line;
};

// Sentences are blank-line separated. Every row in a file must carry the
// same number of task columns and ids must run 1..n per sentence.
std::vector<LabelSentence> read_labels(std::istream& in);
std::vector<LabelSentence> read_labels_file(const std::string& path);

void write_labels(std::ostream& out, const std::vector<LabelSentence>& sentences);
void write_labels_file(const std::string& path, const std::vector<LabelSentence>& sentences);

}  // namespace depcodec
