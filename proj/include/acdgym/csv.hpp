#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "acdgym/errors.hpp"

namespace acd {

// Fixed 6-decimal formatting used by every CSV emitter, so that repeated runs
// of the same configuration produce byte-identical files.
inline std::string fmt6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) {
        fields.push_back(field);
    }
    if (!line.empty() && line.back() == ',') {
        fields.emplace_back();
    }
    return fields;
}

// Reads a CSV file with a header row; returns rows of fields.
inline std::vector<std::vector<std::string>> read_csv(const std::string& path,
                                                      std::vector<std::string>* header = nullptr) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open CSV file: " + path);
    }
    std::string line;
    std::vector<std::vector<std::string>> rows;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (first) {
            if (header) *header = split_csv_line(line);
            first = false;
            continue;
        }
        rows.push_back(split_csv_line(line));
    }
    return rows;
}

}  // namespace acd
