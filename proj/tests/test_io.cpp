#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include <nlohmann/json.hpp>

#include "szego/io.hpp"

using namespace szego;

namespace {

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    return std::string(std::istreambuf_iterator<char>(in),
                       std::istreambuf_iterator<char>());
}

} // namespace

TEST_CASE("complex literal parsing") {
    CHECK(io::parse_complex("0.6") == Complex{0.6, 0.0});
    CHECK(io::parse_complex("-0.3") == Complex{-0.3, 0.0});
    CHECK(io::parse_complex("0.9i") == Complex{0.0, 0.9});
    CHECK(io::parse_complex("-i") == Complex{0.0, -1.0});
    CHECK(io::parse_complex("i") == Complex{0.0, 1.0});
    CHECK(io::parse_complex("0.5+0.2i") == Complex{0.5, 0.2});
    CHECK(io::parse_complex("1-0.4i") == Complex{1.0, -0.4});
    CHECK(io::parse_complex("1e-2") == Complex{0.01, 0.0});
    CHECK(io::parse_complex("2.5e-1i") == Complex{0.0, 0.25});
    CHECK(io::parse_complex(" 0.5 ") == Complex{0.5, 0.0});

    CHECK_THROWS_AS(io::parse_complex(""), DomainError);
    CHECK_THROWS_AS(io::parse_complex("abc"), DomainError);
    CHECK_THROWS_AS(io::parse_complex("1+2"), DomainError);
}

TEST_CASE("word parsing") {
    VerblunskyWord w = io::parse_word("0.5,0.9i,-0.2");
    REQUIRE(w.size() == 3);
    CHECK(w[0].alpha == Complex{0.5, 0.0});
    CHECK(w[1].alpha == Complex{0.0, 0.9});
    CHECK(w[2].alpha == Complex{-0.2, 0.0});

    CHECK_THROWS_AS(io::parse_word(""), DomainError);
    CHECK_THROWS_AS(io::parse_word("0.5,1.5"), InvalidCoefficientError);
}

TEST_CASE("couplings file round trip") {
    std::string path = temp_path("szego_test_couplings.txt");
    io::write_file_atomic(path, "# chain A\n1.0\n0.5\n\n2.25 # inline note\n");
    auto j = io::read_couplings(path);
    REQUIRE(j.size() == 3);
    CHECK(j[0] == 1.0);
    CHECK(j[1] == 0.5);
    CHECK(j[2] == 2.25);
    std::remove(path.c_str());

    std::string bad = temp_path("szego_test_couplings_bad.txt");
    io::write_file_atomic(bad, "1.0\n-0.5\n");
    CHECK_THROWS_AS(io::read_couplings(bad), DomainError);
    std::remove(bad.c_str());

    CHECK_THROWS_AS(io::read_couplings(temp_path("szego_no_such_file.txt")),
                    DomainError);
}

TEST_CASE("zeros csv layout") {
    ZeroSet zeros = ZeroSet::from_angles({1.0, -0.5});
    std::string csv = io::zeros_csv(zeros);
    CHECK(csv.rfind("index,theta,re,im,multiplicity\n", 0) == 0);
    CHECK(csv.find("0,-0.5") != std::string::npos);
    CHECK(csv.find("\n1,1") != std::string::npos);

    std::string path = temp_path("szego_test_zeros.csv");
    io::emit_csv(zeros, path);
    CHECK(slurp(path) == csv);
    std::remove(path.c_str());
}

TEST_CASE("json report emission") {
    nlohmann::json report = {{"alpha", 0.5}, {"arcs", {1, 2, 3}}};
    std::string path = temp_path("szego_test_report.json");
    io::emit_json(report, path);
    auto parsed = nlohmann::json::parse(slurp(path));
    CHECK(parsed["alpha"] == 0.5);
    CHECK(parsed["arcs"].size() == 3);
    std::remove(path.c_str());
}

TEST_CASE("svg figure contains the expected elements") {
    ArcSet arcs = ArcSet::from_endpoints({{0.5, 2.0}});
    ZeroSet zeros = ZeroSet::from_angles({1.0, -1.0});
    std::string svg = io::svg_circle({{"spectrum", arcs}}, {{"zeros", zeros}});
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg.find("spectrum") != std::string::npos);
    CHECK(svg.find("zeros") != std::string::npos);
    CHECK(svg.find("circle") != std::string::npos);
}

TEST_CASE("atomic write replaces content") {
    std::string path = temp_path("szego_test_atomic.txt");
    io::write_file_atomic(path, "first");
    io::write_file_atomic(path, "second");
    CHECK(slurp(path) == "second");
    std::remove(path.c_str());
}
