#include "depcodec/labels_io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>

namespace depcodec {

std::vector<LabelSentence> read_labels(std::istream& in) {
    std::vector<LabelSentence> sentences;
    LabelSentence current;
    size_t task_count = 0;  // fixed by the first row
    int line_no = 0;
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) {
            if (!current.empty()) sentences.push_back(std::move(current));
            current.clear();
            continue;
        }
        LabelRow row;
        size_t start = 0;
        std::vector<std::string> fields;
        for (;;) {
            const size_t tab = line.find('\t', start);
            fields.push_back(line.substr(start, tab == std::string::npos ? tab : tab - start));
            if (tab == std::string::npos) break;
            start = tab + 1;
        }
        if (fields.size() < 3) {
            throw LabelsError(line_no, "expected id, form and at least one task column");
        }
        const auto res =
            std::from_chars(fields[0].data(), fields[0].data() + fields[0].size(), row.id);
        if (res.ec != std::errc() || res.ptr != fields[0].data() + fields[0].size()) {
            throw LabelsError(line_no, "bad row id \"" + fields[0] + "\"");
        }
        if (row.id != static_cast<int>(current.size()) + 1) {
            throw LabelsError(line_no, "row id " + std::to_string(row.id) +
                                           " not contiguous, expected " +
                                           std::to_string(current.size() + 1));
        }
        row.form = fields[1];
        row.tasks.assign(fields.begin() + 2, fields.end());
        if (task_count == 0) {
            task_count = row.tasks.size();
        } else if (row.tasks.size() != task_count) {
            throw LabelsError(line_no, "row has " + std::to_string(row.tasks.size()) +
                                           " task columns, file started with " +
                                           std::to_string(task_count));
        }
        current.push_back(std::move(row));
    }
    if (!current.empty()) sentences.push_back(std::move(current));
    return sentences;
}

std::vector<LabelSentence> read_labels_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_labels(in);
}

void write_labels(std::ostream& out, const std::vector<LabelSentence>& sentences) {
    for (const LabelSentence& s : sentences) {
        for (const LabelRow& row : s) {
            out << row.id << '\t' << row.form;
            for (const std::string& t : row.tasks) out << '\t' << t;
            out << "\n";
        }
        out << "\n";
    }
}

void write_labels_file(const std::string& path, const std::vector<LabelSentence>& sentences) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path);
    write_labels(out, sentences);
}

}  // namespace depcodec
