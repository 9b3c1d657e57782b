#include "szego/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "szego/errors.hpp"

namespace szego::io {

namespace {

// split "a+bi" into real and imaginary parts; the imaginary term ends in
// 'i' and the sign separating the parts is the last top-level +/-
double parse_double(const std::string& s) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw DomainError("parse_complex: bad number '" + s + "'");
    }
    if (pos != s.size()) throw DomainError("parse_complex: bad number '" + s + "'");
    return v;
}

} // namespace

Complex parse_complex(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw DomainError("parse_complex: empty literal");

    if (s.back() != 'i') return Complex{parse_double(s), 0.0};

    s.pop_back(); // strip 'i'
    // find the sign splitting real and imaginary parts (skip a leading sign
    // and signs following an exponent marker)
    std::size_t split = std::string::npos;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E')
            split = i;
    }
    if (split == std::string::npos) {
        if (s.empty() || s == "+") return Complex{0.0, 1.0};
        if (s == "-") return Complex{0.0, -1.0};
        return Complex{0.0, parse_double(s)};
    }
    double re = parse_double(s.substr(0, split));
    std::string im_str = s.substr(split);
    if (im_str == "+") im_str = "1";
    if (im_str == "-") im_str = "-1";
    return Complex{re, parse_double(im_str)};
}

VerblunskyWord parse_word(const std::string& text) {
    std::vector<Complex> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) values.push_back(parse_complex(item));
    if (values.empty()) throw DomainError("parse_word: empty word");
    return VerblunskyWord::from_complex(values);
}

std::vector<double> read_couplings(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("read_couplings: cannot open '" + path + "'");
    std::vector<double> out;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::stringstream ss(line);
        double v;
        if (ss >> v) {
            if (!(v > 0.0))
                throw DomainError("read_couplings: couplings must be positive");
            out.push_back(v);
        }
    }
    if (out.empty()) throw DomainError("read_couplings: no couplings in '" + path + "'");
    return out;
}

void write_file_atomic(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw DomainError("write_file_atomic: cannot open '" + tmp + "'");
        out << content;
        if (!out) throw DomainError("write_file_atomic: write failed for '" + tmp + "'");
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw DomainError("write_file_atomic: rename failed for '" + path + "'");
}

std::string zeros_csv(const ZeroSet& zeros) {
    std::ostringstream out;
    out.precision(17);
    out << "index,theta,re,im,multiplicity\n";
    std::size_t idx = 0;
    for (const auto& z : zeros.zeros()) {
        double t = z.angle.theta;
        out << idx++ << ',' << t << ',' << std::cos(t) << ',' << std::sin(t) << ','
            << z.multiplicity << '\n';
    }
    return out.str();
}

void emit_csv(const ZeroSet& zeros, const std::string& path) {
    write_file_atomic(path, zeros_csv(zeros));
}

void emit_json(const nlohmann::json& report, const std::string& path) {
    write_file_atomic(path, report.dump(2) + "\n");
}

namespace {

constexpr double kView = 800.0;
constexpr double kCx = 400.0, kCy = 400.0, kRadius = 320.0;

// SVG y grows downward; flip so positive angles go counterclockwise
double px(double theta) { return kCx + kRadius * std::cos(theta); }
double py(double theta) { return kCy - kRadius * std::sin(theta); }

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};

} // namespace

std::string svg_circle(const std::vector<std::pair<std::string, ArcSet>>& arc_layers,
                       const std::vector<std::pair<std::string, ZeroSet>>& zero_layers) {
    std::ostringstream out;
    out.precision(6);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kView
        << "\" height=\"" << kView << "\" viewBox=\"0 0 " << kView << ' ' << kView
        << "\">\n";
    out << "  <circle cx=\"" << kCx << "\" cy=\"" << kCy << "\" r=\"" << kRadius
        << "\" fill=\"none\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";

    std::size_t color = 0;
    double legend_y = 30.0;
    for (const auto& [label, arcs] : arc_layers) {
        const char* stroke = kPalette[color++ % 5];
        for (const auto& a : arcs.arcs()) {
            if (a.length >= kTwoPi - 1e-12) {
                out << "  <circle cx=\"" << kCx << "\" cy=\"" << kCy << "\" r=\""
                    << kRadius << "\" fill=\"none\" stroke=\"" << stroke
                    << "\" stroke-width=\"10\"/>\n";
                continue;
            }
            double t0 = a.start, t1 = a.end();
            int large = (a.length > kPi) ? 1 : 0;
            // sweep 0 = counterclockwise in flipped-y coordinates
            out << "  <path d=\"M " << px(t0) << ' ' << py(t0) << " A " << kRadius
                << ' ' << kRadius << " 0 " << large << " 0 " << px(t1) << ' '
                << py(t1) << "\" fill=\"none\" stroke=\"" << stroke
                << "\" stroke-width=\"10\"/>\n";
        }
        out << "  <text x=\"20\" y=\"" << legend_y << "\" fill=\"" << stroke
            << "\" font-size=\"16\">" << label << "</text>\n";
        legend_y += 22.0;
    }
    for (const auto& [label, zeros] : zero_layers) {
        const char* fill = kPalette[color++ % 5];
        for (const auto& z : zeros.zeros())
            out << "  <circle cx=\"" << px(z.angle.theta) << "\" cy=\""
                << py(z.angle.theta) << "\" r=\"4\" fill=\"" << fill << "\"/>\n";
        out << "  <text x=\"20\" y=\"" << legend_y << "\" fill=\"" << fill
            << "\" font-size=\"16\">" << label << "</text>\n";
        legend_y += 22.0;
    }
    out << "</svg>\n";
    return out.str();
}

void emit_svg_circle(const std::vector<std::pair<std::string, ArcSet>>& arc_layers,
                     const std::vector<std::pair<std::string, ZeroSet>>& zero_layers,
                     const std::string& path) {
    write_file_atomic(path, svg_circle(arc_layers, zero_layers));
}

} // namespace szego::io
