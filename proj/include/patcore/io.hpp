#pragma once

// OEIS b-file reading/writing and small formatting helpers.

#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "common.hpp"

namespace patcore {

struct BFile {
    std::vector<std::pair<long long, BigInt>> terms;
    std::vector<std::string> comments;

    std::vector<BigInt> values() const {
        std::vector<BigInt> v;
        for (const auto& t : terms) v.push_back(t.second);
        return v;
    }
};

/// Lines "index value"; '#' starts a comment line; indices must increase by one.
inline BFile parse_bfile(std::istream& in) {
    BFile b;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') {
            b.comments.push_back(line.substr(first));
            continue;
        }
        std::istringstream ls(line);
        long long idx;
        std::string val, extra;
        if (!(ls >> idx >> val) || (ls >> extra))
            throw invalid_input("b-file line " + std::to_string(lineno) + ": expected 'index value'");
        BigInt v;
        try {
            v = BigInt(val);
        } catch (const std::exception&) {
            throw invalid_input("b-file line " + std::to_string(lineno) + ": bad value '" + val + "'");
        }
        if (!b.terms.empty() && idx != b.terms.back().first + 1)
            throw invalid_input("b-file line " + std::to_string(lineno) + ": indices must increase by one");
        b.terms.emplace_back(idx, v);
    }
    return b;
}

inline BFile read_bfile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input("cannot open b-file " + path);
    return parse_bfile(in);
}

inline std::string format_bfile(const std::vector<BigInt>& seq, long long offset = 0) {
    std::ostringstream os;
    for (std::size_t i = 0; i < seq.size(); ++i) os << offset + static_cast<long long>(i) << ' ' << seq[i] << '\n';
    return os.str();
}

inline std::string format_csv(const std::vector<BigInt>& seq, long long offset = 0, const std::string& header = "n,value") {
    std::ostringstream os;
    os << header << '\n';
    for (std::size_t i = 0; i < seq.size(); ++i) os << offset + static_cast<long long>(i) << ',' << seq[i] << '\n';
    return os.str();
}

/// Values compared in order; returns a description of the first mismatch.
inline std::optional<std::string> compare_terms(const BFile& expected, const std::vector<BigInt>& got) {
    if (got.size() < expected.terms.size())
        return "generator produced " + std::to_string(got.size()) + " terms, fixture has " + std::to_string(expected.terms.size());
    for (std::size_t i = 0; i < expected.terms.size(); ++i)
        if (expected.terms[i].second != got[i])
            return "term " + std::to_string(expected.terms[i].first) + ": expected " + expected.terms[i].second.str() + ", got " + got[i].str();
    return std::nullopt;
}

}  // namespace patcore
