#pragma once

#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hankel/errors.hpp"
#include "hankel/rational.hpp"
#include "hankel/sequence.hpp"

namespace hankel {

enum class OutputFormat { bfile, csv, json };

inline OutputFormat parse_format(const std::string& name) {
    if (name == "bfile")
        return OutputFormat::bfile;
    if (name == "csv")
        return OutputFormat::csv;
    if (name == "json")
        return OutputFormat::json;
    throw ConfigError("unknown output format '" + name + "'");
}

// OEIS b-file convention: one "index value" pair per line, '#' comment
// lines and blank lines allowed, indices contiguous and ascending from the
// first listed index. The result is re-indexed from 0 and the original
// start index recorded in the label.
inline Seq parse_bfile(const std::string& text) {
    Seq out;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    bool have_start = false;
    long long start = 0, expect = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos || line[begin] == '#')
            continue;
        std::istringstream fields(line);
        std::string idx_text, val_text, extra;
        if (!(fields >> idx_text >> val_text) || (fields >> extra))
            throw ParseError("b-file line " + std::to_string(line_no) +
                             ": expected 'index value'");
        long long idx;
        try {
            std::size_t used = 0;
            idx = std::stoll(idx_text, &used);
            if (used != idx_text.size())
                throw std::invalid_argument(idx_text);
        } catch (const std::exception&) {
            throw ParseError("b-file line " + std::to_string(line_no) +
                             ": bad index '" + idx_text + "'");
        }
        Rat value;
        try {
            value = Rat::parse(val_text);
        } catch (const ParseError&) {
            throw ParseError("b-file line " + std::to_string(line_no) +
                             ": bad value '" + val_text + "'");
        }
        if (!have_start) {
            start = expect = idx;
            have_start = true;
        } else if (idx != expect) {
            throw GapError("b-file line " + std::to_string(line_no) +
                           ": index " + std::to_string(idx) + " follows " +
                           std::to_string(expect - 1));
        }
        ++expect;
        out.values.push_back(value);
    }
    out.label = "start=" + std::to_string(have_start ? start : 0);
    return out;
}

// Bit-exact serialization. Rationals always appear as canonical "p/q"
// (or "p" for integers), never as decimals.
inline std::string emit(const Seq& s, OutputFormat fmt) {
    switch (fmt) {
    case OutputFormat::bfile: {
        std::string out;
        for (std::size_t n = 0; n < s.size(); ++n)
            out += std::to_string(n) + " " + s[n].str() + "\n";
        return out;
    }
    case OutputFormat::csv: {
        std::string out = "n,value\n";
        for (std::size_t n = 0; n < s.size(); ++n)
            out += std::to_string(n) + "," + s[n].str() + "\n";
        return out;
    }
    case OutputFormat::json: {
        nlohmann::json arr = nlohmann::json::array();
        for (std::size_t n = 0; n < s.size(); ++n)
            arr.push_back({{"n", n}, {"value", s[n].str()}});
        return arr.dump();
    }
    }
    throw ConfigError("emit: unhandled format");
}

} // namespace hankel
