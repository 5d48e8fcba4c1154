#pragma once

#include <cmath>
#include <cstddef>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cwt.hpp"
#include "errors.hpp"
#include "grid.hpp"

namespace wavepair {

namespace detail {

inline std::string format_grid(const TimeGrid& g) {
    return format_double(g.t_min) + "," + format_double(g.dt) + "," +
           std::to_string(g.n);
}

inline void write_row(std::ostream& os, const std::vector<double>& row) {
    for (std::size_t k = 0; k < row.size(); ++k) {
        if (k) os << ',';
        os << format_double(row[k]);
    }
    os << '\n';
}

inline std::vector<double> parse_row(const std::string& line) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= line.size()) {
        std::size_t next = line.find(',', pos);
        if (next == std::string::npos) next = line.size();
        const std::string tok = line.substr(pos, next - pos);
        try {
            std::size_t used = 0;
            const double v = std::stod(tok, &used);
            if (used != tok.size()) throw ParseError("trailing junk in '" + tok + "'");
            out.push_back(v);
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception&) {
            throw ParseError("bad numeric field '" + tok + "'");
        }
        pos = next + 1;
    }
    return out;
}

} // namespace detail

// Header line: `# kind=<tag> grid=<t_min,dt,n>[ scales=<a1,a2,...>]`
// followed by one comma-separated row of %.17g values per series row.
inline void write_csv(std::ostream& os, const RealSeries& x,
                      const std::string& kind = "real_series") {
    os << "# kind=" << kind << " grid=" << detail::format_grid(x.grid) << '\n';
    detail::write_row(os, x.v);
}

inline void write_csv(std::ostream& os, const ComplexSeries& x,
                      const std::string& kind = "complex_series") {
    os << "# kind=" << kind << " grid=" << detail::format_grid(x.grid) << '\n';
    std::vector<double> row(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) row[k] = x.v[k].real();
    detail::write_row(os, row);
    for (std::size_t k = 0; k < x.size(); ++k) row[k] = x.v[k].imag();
    detail::write_row(os, row);
}

enum class ScalogramPlane { Real, Imag, Modulus, Phase };

inline const char* name_of(ScalogramPlane p) {
    switch (p) {
        case ScalogramPlane::Real: return "scalogram_real";
        case ScalogramPlane::Imag: return "scalogram_imag";
        case ScalogramPlane::Modulus: return "scalogram_modulus";
        case ScalogramPlane::Phase: return "scalogram_phase";
    }
    return "scalogram";
}

// One plane of the coefficient matrix, one CSV row per scale (smallest
// scale first, matching storage order).
inline void write_csv(std::ostream& os, const Scalogram& s, ScalogramPlane p) {
    os << "# kind=" << name_of(p) << " grid=" << detail::format_grid(s.grid)
       << " scales=";
    for (std::size_t i = 0; i < s.scales.size(); ++i) {
        if (i) os << ',';
        os << detail::format_double(s.scales[i]);
    }
    os << '\n';
    std::vector<double> row(s.cols());
    for (std::size_t i = 0; i < s.rows(); ++i) {
        for (std::size_t j = 0; j < s.cols(); ++j) {
            const std::complex<double> c = s.at(i, j);
            switch (p) {
                case ScalogramPlane::Real: row[j] = c.real(); break;
                case ScalogramPlane::Imag: row[j] = c.imag(); break;
                case ScalogramPlane::Modulus: row[j] = std::abs(c); break;
                case ScalogramPlane::Phase: row[j] = std::arg(c); break;
            }
        }
        detail::write_row(os, row);
    }
}

struct CsvPayload {
    std::string kind;
    TimeGrid grid;
    std::vector<double> scales;
    std::vector<std::vector<double>> rows;
};

inline CsvPayload read_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw ParseError("empty input");
    CsvPayload p;
    std::istringstream hdr(line);
    std::string tok;
    hdr >> tok;
    if (tok != "#") throw ParseError("missing '#' header line");
    while (hdr >> tok) {
        const std::size_t eq = tok.find('=');
        if (eq == std::string::npos)
            throw ParseError("bad header field '" + tok + "'");
        const std::string key = tok.substr(0, eq);
        const std::string val = tok.substr(eq + 1);
        if (key == "kind") {
            p.kind = val;
        } else if (key == "grid") {
            const std::vector<double> f = detail::parse_row(val);
            if (f.size() != 3) throw ParseError("grid needs t_min,dt,n");
            p.grid = TimeGrid{f[0], f[1], static_cast<std::size_t>(f[2])};
        } else if (key == "scales") {
            p.scales = detail::parse_row(val);
        } else {
            throw ParseError("unknown header key '" + key + "'");
        }
    }
    if (p.kind.empty()) throw ParseError("header lacks kind");
    if (p.grid.n == 0) throw ParseError("header lacks grid");
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        p.rows.push_back(detail::parse_row(line));
        if (p.rows.back().size() != p.grid.n)
            throw ParseError("row width disagrees with grid");
    }
    return p;
}

inline RealSeries to_real_series(const CsvPayload& p) {
    if (p.rows.size() != 1)
        throw ParseError("expected one data row, got " +
                         std::to_string(p.rows.size()));
    return RealSeries{p.grid, p.rows[0]};
}

inline ComplexSeries to_complex_series(const CsvPayload& p) {
    if (p.rows.size() != 2)
        throw ParseError("expected two data rows, got " +
                         std::to_string(p.rows.size()));
    std::vector<std::complex<double>> v(p.grid.n);
    for (std::size_t k = 0; k < p.grid.n; ++k)
        v[k] = {p.rows[0][k], p.rows[1][k]};
    return ComplexSeries{p.grid, std::move(v)};
}

// Binary 8-bit PGM of the coefficient modulus. Row 0 (smallest scale) is
// the top image row; pixel value is floor(255 * |C| / max |C|).
inline void write_pgm(std::ostream& os, const Scalogram& s) {
    double peak = 0.0;
    for (const auto& c : s.coeffs) peak = std::max(peak, std::abs(c));
    os << "P5\n" << s.cols() << ' ' << s.rows() << "\n255\n";
    for (std::size_t i = 0; i < s.rows(); ++i) {
        for (std::size_t j = 0; j < s.cols(); ++j) {
            double v = peak > 0.0 ? std::abs(s.at(i, j)) / peak : 0.0;
            int px = static_cast<int>(std::floor(255.0 * v));
            if (px > 255) px = 255;
            os.put(static_cast<char>(static_cast<unsigned char>(px)));
        }
    }
}

// "a1..a2" or "a1..a2:step", all parts positive.
inline ScaleRange parse_scale_range(const std::string& text) {
    const std::size_t dots = text.find("..");
    if (dots == std::string::npos)
        throw ParseError("scale range must look like a1..a2[:step]");
    const std::size_t colon = text.find(':', dots + 2);
    const std::string first = text.substr(0, dots);
    const std::string last = colon == std::string::npos
                                 ? text.substr(dots + 2)
                                 : text.substr(dots + 2, colon - dots - 2);
    ScaleRange r;
    const std::vector<double> a = detail::parse_row(first);
    const std::vector<double> b = detail::parse_row(last);
    if (a.size() != 1 || b.size() != 1)
        throw ParseError("scale range must look like a1..a2[:step]");
    r.first = a[0];
    r.last = b[0];
    if (colon != std::string::npos) {
        const std::vector<double> c = detail::parse_row(text.substr(colon + 1));
        if (c.size() != 1) throw ParseError("bad scale step");
        r.step = c[0];
    }
    try {
        (void)r.values();
    } catch (const std::exception& e) {
        throw ParseError(e.what());
    }
    return r;
}

inline std::ofstream open_output(const std::string& path, bool binary = false) {
    if (path.empty()) throw std::invalid_argument("output path is empty");
    std::ofstream os(path, binary ? std::ios::binary : std::ios::out);
    if (!os) throw std::runtime_error("cannot open '" + path + "' for writing");
    return os;
}

} // namespace wavepair
