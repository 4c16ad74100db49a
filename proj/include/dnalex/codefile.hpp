/**
 * @file codefile.hpp
 * @brief Reading and writing code files.
 *
 *     # dnalex code n=8 gens=3 property=gc>=4&hw>=4 mode=full-check
 *     G 11110000
 *     G 11001100
 *     00000000
 *     ...
 *
 * Words are Z4 digit strings, nucleotide strings (dna), or FASTA-like
 * records ">cw<index>" followed by the strand (fasta).
 */

#ifndef DNALEX_CODEFILE_HPP
#define DNALEX_CODEFILE_HPP

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "lexicode.hpp"
#include "z4.hpp"

namespace dnalex {

enum class WordFormat { z4, dna, fasta };

inline WordFormat parse_word_format(std::string_view s) {
    if (s == "z4") return WordFormat::z4;
    if (s == "dna") return WordFormat::dna;
    if (s == "fasta") return WordFormat::fasta;
    throw usage_error("unknown format '" + std::string(s) + "' (expected z4, dna or fasta)");
}

struct CodeFile {
    std::size_t n = 0;
    std::string property;  ///< text form, may be empty
    std::string mode;      ///< check mode, may be empty
    std::vector<Z4Vector> generators;
    std::vector<Z4Vector> codewords;
};

inline std::string format_word(const Z4Vector& x, WordFormat fmt) {
    return fmt == WordFormat::z4 ? x.str() : phi(x).str();
}

/// Digit strings parse as Z4 vectors, letter strings through phi_inv.
inline Z4Vector parse_word(std::string_view text) {
    if (!text.empty() && text.find_first_not_of("0123") == std::string_view::npos) return Z4Vector::parse(text);
    return phi_inv(DnaStrand::parse(text));
}

inline void write_code_file(std::ostream& out, const CodeFile& code, WordFormat fmt) {
    out << "# dnalex code n=" << code.n << " gens=" << code.generators.size() << " property="
        << (code.property.empty() ? "-" : code.property) << " mode=" << (code.mode.empty() ? "-" : code.mode) << '\n';
    for (const auto& g : code.generators) out << "G " << format_word(g, fmt) << '\n';
    for (std::size_t i = 0; i < code.codewords.size(); ++i) {
        if (fmt == WordFormat::fasta) out << ">cw" << i << '\n';
        out << format_word(code.codewords[i], fmt) << '\n';
    }
}

inline CodeFile to_code_file(const LinearCode& code, const PropertySpec& property) {
    return CodeFile{code.n, to_string(property), to_string(code.mode), code.generators, code.codewords};
}

inline CodeFile read_code_file(std::istream& in) {
    CodeFile code;
    std::optional<std::size_t> declared_n;
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& what) { throw usage_error("code file line " + std::to_string(lineno) + ": " + what); };
    auto take = [&](std::vector<Z4Vector>& into, std::string_view text) {
        Z4Vector w;
        try {
            w = parse_word(text);
        } catch (const usage_error& e) {
            fail(e.what());
        }
        if (!into.empty() && w.size() != into.front().size()) fail("word length differs from earlier words");
        into.push_back(std::move(w));
    };

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.starts_with("#")) {
            std::istringstream fields(line.substr(1));
            std::string field;
            while (fields >> field) {
                const auto eq = field.find('=');
                if (eq == std::string::npos) continue;
                const std::string key = field.substr(0, eq), value = field.substr(eq + 1);
                if (key == "n") {
                    try {
                        declared_n = std::stoul(value);
                    } catch (const std::exception&) {
                        fail("bad n in header");
                    }
                } else if (key == "property" && value != "-") {
                    code.property = value;
                } else if (key == "mode" && value != "-") {
                    code.mode = value;
                }
            }
        } else if (line.starts_with("G ")) {
            take(code.generators, std::string_view(line).substr(2));
        } else if (line.starts_with(">")) {
            continue;  // record name; the strand follows
        } else {
            take(code.codewords, line);
        }
    }

    if (!code.codewords.empty()) code.n = code.codewords.front().size();
    else if (!code.generators.empty()) code.n = code.generators.front().size();
    else if (declared_n) code.n = *declared_n;
    if (declared_n && *declared_n != code.n) throw usage_error("code file header n does not match word length");
    if (!code.generators.empty() && code.generators.front().size() != code.n)
        throw usage_error("generator length does not match word length");
    return code;
}

inline CodeFile load_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw usage_error("cannot open code file: " + path);
    return read_code_file(in);
}

}  // namespace dnalex

#endif  // DNALEX_CODEFILE_HPP
