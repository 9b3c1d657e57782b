#ifndef SZEGO_IO_HPP
#define SZEGO_IO_HPP

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "szego/arcset.hpp"
#include "szego/mat2.hpp"
#include "szego/verblunsky.hpp"
#include "szego/zeroset.hpp"

namespace szego::io {

/// Parse a complex literal like "0.6", "-0.3", "0.9i", "0.5+0.2i", "1-0.4i".
Complex parse_complex(const std::string& text);

/// Comma-separated complex literals -> word.
VerblunskyWord parse_word(const std::string& text);

/// One positive decimal coupling per line; '#' comments and blank lines
/// are skipped.
std::vector<double> read_couplings(const std::string& path);

/// Atomic write: temp file in the same directory, then rename.
void write_file_atomic(const std::string& path, const std::string& content);

/// CSV with header "index,theta,re,im,multiplicity", full precision.
std::string zeros_csv(const ZeroSet& zeros);

void emit_csv(const ZeroSet& zeros, const std::string& path);
void emit_json(const nlohmann::json& report, const std::string& path);

/// 800x800 unit-circle figure: arcs as thick strokes, zeros as dots.
std::string svg_circle(const std::vector<std::pair<std::string, ArcSet>>& arc_layers,
                       const std::vector<std::pair<std::string, ZeroSet>>& zero_layers);

void emit_svg_circle(const std::vector<std::pair<std::string, ArcSet>>& arc_layers,
                     const std::vector<std::pair<std::string, ZeroSet>>& zero_layers,
                     const std::string& path);

} // namespace szego::io

#endif
