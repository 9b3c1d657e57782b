#include <cstdio>
#include <filesystem>
#include <iostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "szego/dos.hpp"
#include "szego/io.hpp"
#include "szego/ising.hpp"
#include "szego/random_ensemble.hpp"

using json = nlohmann::json;
using namespace szego;

namespace {

json arcset_json(const ArcSet& arcs) {
    json out = json::array();
    for (const auto& a : arcs.arcs())
        out.push_back({{"start", a.start}, {"end", a.end()}, {"length", a.length}});
    return out;
}

json zeros_json(const ZeroSet& zeros) {
    json out = json::array();
    for (const auto& z : zeros.zeros())
        out.push_back({{"theta", z.angle.theta}, {"multiplicity", z.multiplicity}});
    return out;
}

/// measure spec: "uniform:a,b" or "atoms:v1:w1,v2:w2" (weights optional,
/// default equal)
SingleSiteMeasure parse_measure(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw DomainError("measure spec must be 'uniform:a,b' or 'atoms:v[:w],...'");
    std::string kind = spec.substr(0, colon);
    std::string body = spec.substr(colon + 1);
    if (kind == "uniform") {
        auto comma = body.find(',');
        if (comma == std::string::npos)
            throw DomainError("uniform measure needs two endpoints");
        return SingleSiteMeasure::uniform_interval(std::stod(body.substr(0, comma)),
                                                   std::stod(body.substr(comma + 1)));
    }
    if (kind == "atoms") {
        std::vector<SingleSiteMeasure::Atom> atoms;
        std::stringstream ss(body);
        std::string item;
        std::vector<std::pair<Complex, double>> raw;
        bool weighted = false;
        while (std::getline(ss, item, ',')) {
            auto c = item.find(':');
            if (c == std::string::npos) {
                raw.push_back({io::parse_complex(item), -1.0});
            } else {
                raw.push_back({io::parse_complex(item.substr(0, c)),
                               std::stod(item.substr(c + 1))});
                weighted = true;
            }
        }
        if (raw.empty()) throw DomainError("atoms measure needs at least one atom");
        for (auto& [v, w] : raw)
            atoms.push_back({v, weighted ? w : 1.0 / static_cast<double>(raw.size())});
        return SingleSiteMeasure::atoms(std::move(atoms));
    }
    throw DomainError("unknown measure kind '" + kind + "'");
}

/// Serialize the resolved run configuration next to the first output file.
void write_config(const std::string& out_path, const json& config) {
    if (out_path.empty()) return;
    std::filesystem::path p(out_path);
    p.replace_filename(p.stem().string() + ".config.json");
    io::emit_json(config, p.string());
}

void print_or_emit_zeros(const ZeroSet& zeros, const std::string& out,
                         const std::string& svg, const json& config) {
    if (!out.empty()) {
        io::emit_csv(zeros, out);
        write_config(out, config);
    } else {
        std::cout << io::zeros_csv(zeros);
    }
    if (!svg.empty()) io::emit_svg_circle({}, {{"zeros", zeros}}, svg);
}

int run(int argc, char** argv) {
    CLI::App app{"Szego cocycle / CMV / Lee-Yang toolkit"};
    app.require_subcommand(1);

    // gap
    auto* gap = app.add_subcommand("gap", "print the gap arc R_alpha");
    double gap_alpha = 0.0;
    gap->add_option("--alpha", gap_alpha, "alpha in [0,1)")->required();
    gap->callback([&] {
        double half = gap_half_angle(gap_alpha);
        char buf[64];
        std::snprintf(buf, sizeof(buf), "(%.6f, %.6f)", -half, half);
        std::cout << buf << "\n";
    });

    // disc-zeros
    auto* dz = app.add_subcommand("disc-zeros", "discriminant zeros of a word");
    std::string dz_word, dz_out, dz_svg;
    dz->add_option("--word", dz_word, "comma-separated coefficients, e.g. 0.5,0.9i")
        ->required();
    dz->add_option("--out", dz_out, "CSV output path (default stdout)");
    dz->add_option("--svg", dz_svg, "SVG figure path");
    dz->callback([&] {
        ZeroSet zeros = discriminant_zeros(io::parse_word(dz_word));
        json config = {{"command", "disc-zeros"}, {"word", dz_word}, {"out", dz_out}};
        print_or_emit_zeros(zeros, dz_out, dz_svg, config);
    });

    // spectrum
    auto* sp = app.add_subcommand("spectrum", "band structure of a periodic word");
    std::string sp_word, sp_out, sp_svg;
    std::size_t sp_grid = 0;
    sp->add_option("--word", sp_word)->required();
    sp->add_option("--grid", sp_grid, "grid size (default 64 * period)");
    sp->add_option("--out", sp_out, "JSON output path (default stdout)");
    sp->add_option("--svg", sp_svg, "SVG figure path");
    sp->callback([&] {
        VerblunskyWord word = io::parse_word(sp_word);
        BandStructure bs = band_structure(word, sp_grid);
        json report = {{"spectrum", arcset_json(bs.spectrum)},
                       {"zeros", zeros_json(bs.zeros)},
                       {"band_count", bs.bands.size()},
                       {"closed_gap_count", bs.closed_gaps.size()}};
        json config = {{"command", "spectrum"},
                       {"word", sp_word},
                       {"grid", sp_grid},
                       {"out", sp_out}};
        if (!sp_out.empty()) {
            io::emit_json(report, sp_out);
            write_config(sp_out, config);
        } else {
            std::cout << report.dump(2) << "\n";
        }
        if (!sp_svg.empty())
            io::emit_svg_circle({{"spectrum", bs.spectrum}}, {{"zeros", bs.zeros}},
                                sp_svg);
    });

    // random-approx
    auto* ra = app.add_subcommand("random-approx",
                                  "window zeros vs the almost-sure spectrum");
    std::string ra_measure, ra_windows = "250,1000,4000", ra_out;
    std::uint64_t ra_seed = 1;
    ra->add_option("--measure", ra_measure, "uniform:a,b or atoms:v[:w],...")
        ->required();
    ra->add_option("--windows", ra_windows, "comma-separated half-widths");
    ra->add_option("--seed", ra_seed);
    ra->add_option("--out", ra_out, "JSON report path (default stdout)");
    ra->callback([&] {
        SingleSiteMeasure measure = parse_measure(ra_measure);
        std::vector<std::pair<long, long>> schedule;
        std::stringstream ss(ra_windows);
        std::string item;
        while (std::getline(ss, item, ',')) {
            long k = std::stol(item);
            schedule.push_back({k, k});
        }
        ArcSet reference = almost_sure_spectrum_nonneg(measure);
        auto records = convergence_experiment(measure, schedule, reference, ra_seed);
        json rows = json::array();
        for (const auto& r : records)
            rows.push_back({{"k", r.k},
                            {"l", r.l},
                            {"r", r.r},
                            {"distance", r.distance},
                            {"zero_count", r.zero_count}});
        json report = {{"records", rows}, {"reference", arcset_json(reference)}};
        json config = {{"command", "random-approx"},
                       {"measure", ra_measure},
                       {"windows", ra_windows},
                       {"seed", ra_seed},
                       {"out", ra_out}};
        if (!ra_out.empty()) {
            io::emit_json(report, ra_out);
            write_config(ra_out, config);
        } else {
            std::cout << report.dump(2) << "\n";
        }
    });

    // ising-zeros
    auto* iz = app.add_subcommand("ising-zeros", "Lee-Yang zeros of an Ising chain");
    std::string iz_couplings, iz_out, iz_svg;
    double iz_tau = 1.0, iz_kb = 1.0;
    iz->add_option("--couplings", iz_couplings, "file with one J per line")
        ->required();
    iz->add_option("--tau", iz_tau, "temperature")->required();
    iz->add_option("--kb", iz_kb, "Boltzmann constant (default 1)");
    iz->add_option("--out", iz_out, "CSV output path (default stdout)");
    iz->add_option("--svg", iz_svg, "SVG figure path");
    iz->callback([&] {
        IsingChain chain(io::read_couplings(iz_couplings), iz_tau, iz_kb);
        ZeroSet zeros = leeyang_zeros(chain);
        json config = {{"command", "ising-zeros"},
                       {"couplings", iz_couplings},
                       {"tau", iz_tau},
                       {"kb", iz_kb},
                       {"out", iz_out}};
        print_or_emit_zeros(zeros, iz_out, iz_svg, config);
    });

    // lyapunov
    auto* ly = app.add_subcommand("lyapunov", "Monte Carlo Lyapunov exponent");
    std::string ly_measure, ly_z = "1";
    std::size_t ly_n = 10000, ly_trials = 1;
    std::uint64_t ly_seed = 1;
    ly->add_option("--measure", ly_measure)->required();
    ly->add_option("--z", ly_z, "spectral parameter (complex literal)");
    ly->add_option("--n", ly_n, "iterate count");
    ly->add_option("--trials", ly_trials);
    ly->add_option("--seed", ly_seed);
    ly->callback([&] {
        SingleSiteMeasure measure = parse_measure(ly_measure);
        Complex z = io::parse_complex(ly_z);
        auto est = lyapunov_estimate([&](double u) { return measure.draw(u); }, z,
                                     ly_n, ly_trials, ly_seed);
        char buf[128];
        std::snprintf(buf, sizeof(buf), "L = %.6f (stderr %.6f, n=%zu, trials=%zu)\n",
                      est.value, est.std_error, est.n, est.trials);
        std::cout << buf;
    });

    // gaplabels
    auto* gl = app.add_subcommand("gaplabels", "gap labels of a periodic word");
    std::string gl_word, gl_out;
    std::size_t gl_window = 0;
    gl->add_option("--word", gl_word)->required();
    gl->add_option("--window", gl_window,
                   "dos window length (default 500 * period)");
    gl->add_option("--out", gl_out, "JSON output path (default stdout)");
    gl->callback([&] {
        VerblunskyWord word = io::parse_word(gl_word);
        if (gl_window == 0) gl_window = 500 * word.size();
        std::size_t reps = std::max<std::size_t>(1, gl_window / word.size());
        ZeroSet window_zeros = periodic_window_zeros(word, reps);
        auto dos = dos_from_zeros({window_zeros});
        BandStructure bs = band_structure(word);
        GapLabelReport report = gap_labels(bs, dos.dos);

        json gaps = json::array();
        for (const auto& g : report.gaps)
            gaps.push_back({{"start", g.gap.start},
                            {"end", g.gap.end()},
                            {"label", g.label},
                            {"closed", g.closed}});
        json out = {{"gaps", gaps}, {"R", nullptr}};
        if (report.rotation_offset) out["R"] = *report.rotation_offset;
        json config = {{"command", "gaplabels"},
                       {"word", gl_word},
                       {"window", gl_window},
                       {"out", gl_out}};
        if (!gl_out.empty()) {
            io::emit_json(out, gl_out);
            write_config(gl_out, config);
        } else {
            std::cout << out.dump(2) << "\n";
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1; // usage problems are domain errors
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const NumericalFailureError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
