#pragma once

#include <cctype>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "chow/affine.hpp"
#include "chow/errors.hpp"
#include "chow/oneps.hpp"
#include "chow/polytope.hpp"

namespace chow {

struct JobOptions {
    std::uint64_t seed = 0;
    std::optional<std::size_t> samples;  // default: parameters + 4
    bool flip_sign = false;
    int ehrhart_kmax = 2;
};

/// A parsed job document: the polytope, the one-parameter subgroup, the
/// declared parameter universe, and run options.
struct JobSpec {
    FanoPolytope polytope;
    ParameterList params;
    OnePSSpec ops{std::vector<AffineForm>{}};
    JobOptions options;
};

namespace detail {

inline std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

[[noreturn]] inline void parse_fail(std::size_t line_no, const std::string& message) {
    throw InputError("line " + std::to_string(line_no) + ": " + message);
}

/// Parses a sum of terms `[rational][*]name | rational` with +/- separators.
/// Every named parameter must belong to the declared universe.
inline AffineForm parse_affine(const std::string& text, const ParameterList& params,
                               std::size_t line_no) {
    std::string s;
    for (const char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) parse_fail(line_no, "empty expression");

    AffineForm form;
    std::size_t pos = 0;
    while (pos < s.size()) {
        Rational sign(1);
        while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
            if (s[pos] == '-') sign = -sign;
            ++pos;
        }
        if (pos == s.size()) parse_fail(line_no, "dangling sign in '" + text + "'");

        std::optional<Rational> coeff;
        if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
            std::size_t end = pos;
            while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end])))
                ++end;
            if (end < s.size() && s[end] == '/') {
                ++end;
                if (end == s.size() || !std::isdigit(static_cast<unsigned char>(s[end])))
                    parse_fail(line_no, "malformed fraction in '" + text + "'");
                while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end])))
                    ++end;
            }
            coeff = Rational::from_string(s.substr(pos, end - pos));
            pos = end;
            if (pos < s.size() && s[pos] == '*') ++pos;
        }

        std::string name;
        if (pos < s.size() && (std::isalpha(static_cast<unsigned char>(s[pos])) ||
                               s[pos] == '_')) {
            std::size_t end = pos;
            while (end < s.size() && (std::isalnum(static_cast<unsigned char>(s[end])) ||
                                      s[end] == '_'))
                ++end;
            name = s.substr(pos, end - pos);
            pos = end;
        }

        if (name.empty() && !coeff.has_value())
            parse_fail(line_no, "expected a term at '" + s.substr(pos) + "'");
        if (!name.empty()) {
            if (!params.contains(name))
                parse_fail(line_no, "unknown parameter '" + name + "'");
            form += AffineForm::variable(name, sign * coeff.value_or(Rational(1)));
        } else {
            form += AffineForm(sign * *coeff);
        }
        if (pos < s.size() && s[pos] != '+' && s[pos] != '-')
            parse_fail(line_no, "unexpected character '" + std::string(1, s[pos]) +
                                    "' in '" + text + "'");
    }
    return form;
}

inline std::vector<std::string> split_words(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> words;
    std::string w;
    while (in >> w) words.push_back(w);
    return words;
}

inline long long parse_integer(const std::string& word, std::size_t line_no) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(word, &used);
        if (used != word.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        parse_fail(line_no, "not an integer: '" + word + "'");
    }
}

}  // namespace detail

/// Parses the job document format:
///
///   dim = <n>
///   vertices:
///     <n integers per row, one vertex per line>
///   ops:
///     chart = <n ascending 1-based vertex indices>
///     params = <n parameter names>
///   (or, instead of chart:  lambda = <n comma-separated linear forms>)
///   options:
///     seed = <integer>         (default 0)
///     samples = <integer>      (default parameters + 4)
///     flip_sign = true|false   (default false)
///     ehrhart_kmax = <integer> (default 2)
///
/// '#' starts a comment. Errors name the offending line.
inline JobSpec parse_job(const std::string& document) {
    std::optional<int> dim;
    std::vector<LatticeVector> vertices;
    std::vector<std::string> param_names;
    std::optional<std::vector<std::size_t>> chart_indices;
    std::optional<std::string> lambda_text;
    std::size_t lambda_line = 0;
    JobOptions options;

    enum class Section { top, vertices, ops, options };
    Section section = Section::top;

    std::istringstream in(document);
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::string line = detail::trim(raw);
        if (line.empty()) continue;

        if (line == "vertices:") {
            section = Section::vertices;
            continue;
        }
        if (line == "ops:") {
            section = Section::ops;
            continue;
        }
        if (line == "options:") {
            section = Section::options;
            continue;
        }

        const auto eq = line.find('=');
        const std::string key = eq == std::string::npos ? "" : detail::trim(line.substr(0, eq));
        const std::string value =
            eq == std::string::npos ? "" : detail::trim(line.substr(eq + 1));

        switch (section) {
            case Section::top: {
                if (key == "dim") {
                    dim = static_cast<int>(detail::parse_integer(value, line_no));
                } else {
                    detail::parse_fail(line_no, "expected 'dim = <n>' or a section header");
                }
                break;
            }
            case Section::vertices: {
                if (!dim.has_value())
                    detail::parse_fail(line_no, "dim must be declared before vertices");
                const auto words = detail::split_words(line);
                LatticeVector v;
                for (const auto& w : words)
                    v.push_back(detail::parse_integer(w, line_no));
                if (v.size() != static_cast<std::size_t>(*dim))
                    detail::parse_fail(line_no, "vertex row " +
                                                    std::to_string(vertices.size() + 1) +
                                                    " has " + std::to_string(v.size()) +
                                                    " entries, expected " +
                                                    std::to_string(*dim));
                vertices.push_back(std::move(v));
                break;
            }
            case Section::ops: {
                if (key == "params") {
                    param_names = detail::split_words(value);
                } else if (key == "chart") {
                    std::vector<std::size_t> idx;
                    for (const auto& w : detail::split_words(value)) {
                        const long long i = detail::parse_integer(w, line_no);
                        if (i < 1 || static_cast<std::size_t>(i) > vertices.size())
                            detail::parse_fail(line_no, "chart index " + w +
                                                            " out of range");
                        idx.push_back(static_cast<std::size_t>(i) - 1);
                    }
                    for (std::size_t i = 1; i < idx.size(); ++i)
                        if (idx[i - 1] >= idx[i])
                            detail::parse_fail(line_no,
                                               "chart indices must be strictly ascending");
                    chart_indices = std::move(idx);
                } else if (key == "lambda") {
                    lambda_text = value;
                    lambda_line = line_no;
                } else {
                    detail::parse_fail(line_no, "unknown ops key '" + key + "'");
                }
                break;
            }
            case Section::options: {
                if (key == "seed") {
                    options.seed =
                        static_cast<std::uint64_t>(detail::parse_integer(value, line_no));
                } else if (key == "samples") {
                    const long long v = detail::parse_integer(value, line_no);
                    if (v < 1) detail::parse_fail(line_no, "samples must be positive");
                    options.samples = static_cast<std::size_t>(v);
                } else if (key == "flip_sign") {
                    if (value == "true") {
                        options.flip_sign = true;
                    } else if (value == "false") {
                        options.flip_sign = false;
                    } else {
                        detail::parse_fail(line_no, "flip_sign must be true or false");
                    }
                } else if (key == "ehrhart_kmax") {
                    const long long v = detail::parse_integer(value, line_no);
                    if (v < 0) detail::parse_fail(line_no, "ehrhart_kmax must be >= 0");
                    options.ehrhart_kmax = static_cast<int>(v);
                } else {
                    detail::parse_fail(line_no, "unknown option '" + key + "'");
                }
                break;
            }
        }
    }

    if (!dim.has_value()) throw InputError("missing 'dim = <n>'");
    if (vertices.empty()) throw InputError("missing 'vertices:' section");
    if (param_names.empty()) throw InputError("ops section must declare 'params'");
    if (chart_indices.has_value() == lambda_text.has_value())
        throw InputError("ops section must give exactly one of 'chart' or 'lambda'");

    JobSpec job;
    job.polytope = FanoPolytope::create(*dim, std::move(vertices));
    job.params = ParameterList::declare(param_names);
    if (chart_indices.has_value()) {
        job.ops = OnePSSpec::chart(ChartSpec{std::move(*chart_indices), param_names});
    } else {
        std::vector<AffineForm> coords;
        std::string piece;
        std::istringstream forms(*lambda_text);
        while (std::getline(forms, piece, ','))
            coords.push_back(detail::parse_affine(piece, job.params, lambda_line));
        if (coords.size() != static_cast<std::size_t>(*dim))
            throw InputError("lambda must list exactly " + std::to_string(*dim) +
                             " comma-separated forms");
        job.ops = OnePSSpec::explicit_lambda(std::move(coords));
    }
    job.options = options;
    return job;
}

}  // namespace chow
