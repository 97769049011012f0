#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace mpt {

/// Every number emitted to CSV goes through this: %.12g, locale-free,
/// byte-stable across runs.
inline std::string format_g12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

inline void ensure_parent_dir(const std::filesystem::path& p) {
    const auto parent = p.parent_path();
    if (!parent.empty()) std::filesystem::create_directories(parent);
}

class CsvWriter {
public:
    CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header) {
        ensure_parent_dir(path);
        out_.open(path, std::ios::binary);
        if (!out_) throw std::runtime_error("cannot open output file: " + path.string());
        text_row(header);
    }

    void row(const std::vector<double>& values) {
        std::string line;
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i) line += ',';
            line += format_g12(values[i]);
        }
        line += '\n';
        out_ << line;
    }

    void text_row(const std::vector<std::string>& cells) {
        std::string line;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) line += ',';
            line += cells[i];
        }
        line += '\n';
        out_ << line;
    }

private:
    std::ofstream out_;
};

inline void write_text_file(const std::filesystem::path& path, const std::string& content) {
    ensure_parent_dir(path);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path.string());
    out << content;
}

inline std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open input file: " + path.string());
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace mpt
