#ifndef NRAD_IO_HPP
#define NRAD_IO_HPP

// Matrix ingestion and output.
//
//   Matrix Market: "%%MatrixMarket matrix array complex general" (also
//   "array real general"), '%' comment lines, a "rows cols" size line, then
//   one entry per line in column-major order.
//
//   JSON: {"rows": n, "cols": n, "data": [[re, im], ...]} in row-major order.
//
// Writers emit 17 significant digits so a written matrix reads back
// bit-identical.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "nrad/errors.hpp"
#include "nrad/linalg.hpp"

namespace nrad {

enum class MatrixFormat { matrix_market, json, automatic };

/// Shortest printf form with 17 significant digits; always carries a '.' or
/// exponent so that JSON readers keep it a floating-point number (and -0.0).
inline std::string format_full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    std::string s = buf;
    if (s.find_first_of(".eEn") == std::string::npos)
        s += ".0";
    return s;
}

inline MatrixFormat resolve_format(const std::filesystem::path& path, MatrixFormat format) {
    if (format != MatrixFormat::automatic)
        return format;
    std::string ext = path.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
    if (ext == ".mtx")
        return MatrixFormat::matrix_market;
    if (ext == ".json")
        return MatrixFormat::json;
    throw parse_error("cannot infer matrix format from extension '" + ext + "' (use .mtx or .json)", 0);
}

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        if (i > start)
            out.push_back(line.substr(start, i - start));
    }
    return out;
}

inline double parse_double(std::string_view tok, std::size_t line) {
    std::string_view t = tok;
    if (!t.empty() && t.front() == '+')
        t.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size())
        throw parse_error("invalid number '" + std::string(tok) + "'", line);
    if (!std::isfinite(v))
        throw parse_error("non-finite value '" + std::string(tok) + "'", line);
    return v;
}

inline long parse_dim(std::string_view tok, std::size_t line) {
    long v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || v <= 0)
        throw parse_error("invalid dimension '" + std::string(tok) + "'", line);
    return v;
}

inline std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
    return out;
}

} // namespace detail

inline Matrix read_matrix_market(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    if (!std::getline(in, line))
        throw parse_error("empty input", 1);
    ++lineno;
    const auto header = detail::split_ws(line);
    if (header.size() != 5 || header[0] != "%%MatrixMarket" || detail::lower(header[1]) != "matrix")
        throw parse_error("expected '%%MatrixMarket matrix array complex general' header", lineno);
    if (detail::lower(header[2]) != "array")
        throw parse_error("only the 'array' layout is supported", lineno);
    const std::string field = detail::lower(header[3]);
    if (field != "complex" && field != "real")
        throw parse_error("unsupported field '" + std::string(header[3]) + "'", lineno);
    if (detail::lower(header[4]) != "general")
        throw parse_error("only 'general' symmetry is supported", lineno);
    const bool is_complex = field == "complex";

    auto next_data_line = [&](std::vector<std::string_view>& tokens) {
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line.front() == '%')
                continue;
            tokens = detail::split_ws(line);
            if (!tokens.empty())
                return true;
        }
        return false;
    };

    std::vector<std::string_view> tokens;
    if (!next_data_line(tokens))
        throw parse_error("missing size line", lineno + 1);
    if (tokens.size() != 2)
        throw parse_error("size line must be 'rows cols'", lineno);
    const long rows = detail::parse_dim(tokens[0], lineno);
    const long cols = detail::parse_dim(tokens[1], lineno);

    Matrix m(rows, cols);
    const std::size_t want = is_complex ? 2 : 1;
    for (long j = 0; j < cols; ++j) {
        for (long i = 0; i < rows; ++i) {
            if (!next_data_line(tokens))
                throw parse_error("expected " + std::to_string(rows * cols) + " entries, file ended after " +
                                      std::to_string(j * rows + i),
                                  lineno + 1);
            if (tokens.size() != want)
                throw parse_error("expected " + std::to_string(want) + " value(s) per entry", lineno);
            const double re = detail::parse_double(tokens[0], lineno);
            const double im = is_complex ? detail::parse_double(tokens[1], lineno) : 0.0;
            m(i, j) = complex(re, im);
        }
    }
    if (next_data_line(tokens))
        throw parse_error("unexpected data after " + std::to_string(rows * cols) + " entries", lineno);
    return m;
}

inline void write_matrix_market(std::ostream& out, const Matrix& m) {
    out << "%%MatrixMarket matrix array complex general\n";
    out << m.rows() << ' ' << m.cols() << '\n';
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            out << format_full(m(i, j).real()) << ' ' << format_full(m(i, j).imag()) << '\n';
}

inline Matrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("data"))
        throw parse_error("JSON matrix must be an object with 'rows', 'cols' and 'data'", 0);
    if (!j["rows"].is_number_integer() || !j["cols"].is_number_integer())
        throw parse_error("'rows' and 'cols' must be integers", 0);
    const long rows = j["rows"].get<long>();
    const long cols = j["cols"].get<long>();
    if (rows <= 0 || cols <= 0)
        throw parse_error("'rows' and 'cols' must be positive", 0);
    const nlohmann::json& data = j["data"];
    if (!data.is_array() || static_cast<long>(data.size()) != rows * cols)
        throw parse_error("'data' must hold rows*cols = " + std::to_string(rows * cols) + " entries", 0);
    Matrix m(rows, cols);
    for (long k = 0; k < rows * cols; ++k) {
        const nlohmann::json& e = data[static_cast<std::size_t>(k)];
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
            throw parse_error("data entry " + std::to_string(k) + " must be [re, im]", 0);
        const double re = e[0].get<double>();
        const double im = e[1].get<double>();
        if (!std::isfinite(re) || !std::isfinite(im))
            throw parse_error("data entry " + std::to_string(k) + " is not finite", 0);
        m(k / cols, k % cols) = complex(re, im);
    }
    return m;
}

inline Matrix read_matrix_json(std::istream& in) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        // nlohmann reports "line L, column C" inside what()
        throw parse_error(e.what(), 0);
    }
    return matrix_from_json(j);
}

inline void write_matrix_json(std::ostream& out, const Matrix& m) {
    out << "{\"rows\": " << m.rows() << ", \"cols\": " << m.cols() << ", \"data\": [";
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (i || j)
                out << ", ";
            out << '[' << format_full(m(i, j).real()) << ", " << format_full(m(i, j).imag()) << ']';
        }
    }
    out << "]}\n";
}

inline Matrix read_matrix(const std::filesystem::path& path, MatrixFormat format = MatrixFormat::automatic) {
    const MatrixFormat resolved = resolve_format(path, format);
    std::ifstream in(path);
    if (!in)
        throw parse_error("cannot open '" + path.string() + "'", 0);
    return resolved == MatrixFormat::json ? read_matrix_json(in) : read_matrix_market(in);
}

inline void write_matrix(const std::filesystem::path& path, const Matrix& m,
                         MatrixFormat format = MatrixFormat::automatic) {
    const MatrixFormat resolved = resolve_format(path, format);
    std::ofstream out(path);
    if (!out)
        throw parse_error("cannot write '" + path.string() + "'", 0);
    if (resolved == MatrixFormat::json)
        write_matrix_json(out, m);
    else
        write_matrix_market(out, m);
}

} // namespace nrad

#endif // NRAD_IO_HPP
