#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "blowspec/blowup_spectra.hpp"
#include "blowspec/graph.hpp"
#include "blowspec/io.hpp"
#include "blowspec/matrices.hpp"
#include "blowspec/verification.hpp"

namespace {

constexpr int kExitInternal = 1;
constexpr int kExitParse = 2;
constexpr int kExitVerifyFailed = 3;

/// Anything wrong with the input graph or its encoding; maps to exit code 2.
struct ParseFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CommonOpts {
    std::string input = "-";
    std::string inline_text;
    std::string format;  // empty = infer
    std::string output = "text";
    double tol = blowspec::kDefaultTolerance;
};

void add_common_options(CLI::App& cmd, CommonOpts& opts, bool with_tol) {
    cmd.add_option("input", opts.input, "Input file, or - for stdin")->capture_default_str();
    cmd.add_option("--inline", opts.inline_text, "Graph given directly on the command line")
        ->excludes(cmd.get_option("input"));
    cmd.add_option("--format", opts.format, "Input format (default: edgelist, graph6 for .g6 files and stdin/inline input)")
        ->check(CLI::IsMember({"graph6", "edgelist"}));
    cmd.add_option("--output", opts.output, "Output style")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    if (with_tol) {
        cmd.add_option("--tol", opts.tol, "Comparison tolerance")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
    }
}

std::string read_stream(std::istream& in) {
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

bool has_suffix(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

blowspec::Graph load_graph(const CommonOpts& opts) {
    std::string text;
    std::string format = opts.format;
    if (!opts.inline_text.empty()) {
        text = opts.inline_text;
        if (format.empty()) {
            format = "graph6";
        }
    } else if (opts.input == "-") {
        text = read_stream(std::cin);
        if (format.empty()) {
            format = "graph6";
        }
    } else {
        std::ifstream file(opts.input, std::ios::binary);
        if (!file) {
            throw ParseFailure("cannot open input file: " + opts.input);
        }
        text = read_stream(file);
        if (format.empty()) {
            format = has_suffix(opts.input, ".g6") ? "graph6" : "edgelist";
        }
    }
    try {
        return format == "graph6" ? blowspec::parse_graph6(text) : blowspec::parse_edge_list(text);
    } catch (const std::invalid_argument& e) {
        throw ParseFailure(e.what());
    }
}

std::string format_spectrum_line(const blowspec::Spectrum& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i > 0) {
            out.push_back(' ');
        }
        out += blowspec::format_double(s[i]);
    }
    return out;
}

std::string json_spectrum(const blowspec::Spectrum& s) {
    std::string out = "[";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i > 0) {
            out.push_back(',');
        }
        out += blowspec::format_double(s[i]);
    }
    out.push_back(']');
    return out;
}

std::vector<std::string> selected_families(const std::string& family) {
    if (family == "all") {
        return {"adjacency", "laplacian", "signless"};
    }
    return {family};
}

blowspec::Spectrum base_spectrum(const blowspec::Graph& g, const std::string& family) {
    using namespace blowspec;
    if (family == "adjacency") {
        return eig_symmetric(adjacency(g)).spectrum();
    }
    if (family == "laplacian") {
        return eig_symmetric(laplacian(g)).spectrum();
    }
    return eig_symmetric(signless_laplacian(g)).spectrum();
}

blowspec::Spectrum blowup_formula_spectrum(const blowspec::Graph& g, const std::string& family,
                                           bool use_complement, int t) {
    using namespace blowspec;
    const int n = g.vertex_count();
    if (family == "adjacency") {
        if (use_complement) {
            const Spectrum base = eig_symmetric(adjacency(complement(g))).spectrum();
            return blowup_adjacency_complement_spectrum(base, n, t).flatten();
        }
        const Spectrum base = eig_symmetric(adjacency(g)).spectrum();
        return blowup_adjacency_spectrum(base, n, t).flatten();
    }
    if (family == "laplacian") {
        const Spectrum base = eig_symmetric(laplacian(g)).spectrum();
        const Spectrum blown = blowup_laplacian_spectrum(base, g.degrees(), t).flatten();
        if (use_complement) {
            return blowup_complement_laplacian_spectrum(blown, n, t);
        }
        return blown;
    }
    if (use_complement) {
        const Spectrum base = eig_symmetric(signless_laplacian(complement(g))).spectrum();
        return blowup_complement_signless_spectrum(base, g.degrees(), n, t).flatten();
    }
    const Spectrum base = eig_symmetric(signless_laplacian(g)).spectrum();
    return blowup_signless_spectrum(base, g.degrees(), t).flatten();
}

void print_family_spectra(const CommonOpts& opts, const std::vector<std::string>& families,
                          const std::vector<blowspec::Spectrum>& spectra,
                          const std::string& emitted_graph6) {
    if (opts.output == "json") {
        std::string out = "{\"families\":{";
        for (std::size_t i = 0; i < families.size(); ++i) {
            if (i > 0) {
                out.push_back(',');
            }
            out += "\"" + families[i] + "\":" + json_spectrum(spectra[i]);
        }
        out += "}";
        if (!emitted_graph6.empty()) {
            out += ",\"blowup_graph6\":\"" + blowspec::json_escape(emitted_graph6) + "\"";
        }
        out += "}";
        std::cout << out << "\n";
        return;
    }
    const bool labeled = families.size() > 1;
    for (std::size_t i = 0; i < families.size(); ++i) {
        if (labeled) {
            std::cout << families[i] << ": ";
        }
        std::cout << format_spectrum_line(spectra[i]) << "\n";
    }
    if (!emitted_graph6.empty()) {
        std::cout << emitted_graph6 << "\n";
    }
}

int run_spectrum(const CommonOpts& opts, const std::string& family, bool use_complement) {
    const blowspec::Graph g = load_graph(opts);
    const blowspec::Graph target = use_complement ? blowspec::complement(g) : g;
    const std::vector<std::string> families = selected_families(family);
    std::vector<blowspec::Spectrum> spectra;
    spectra.reserve(families.size());
    for (const std::string& f : families) {
        spectra.push_back(base_spectrum(target, f));
    }
    print_family_spectra(opts, families, spectra, "");
    return 0;
}

int run_blowup(const CommonOpts& opts, const std::string& family, bool use_complement, int t,
               bool emit_graph) {
    const blowspec::Graph g = load_graph(opts);
    const std::vector<std::string> families = selected_families(family);
    std::vector<blowspec::Spectrum> spectra;
    spectra.reserve(families.size());
    for (const std::string& f : families) {
        spectra.push_back(blowup_formula_spectrum(g, f, use_complement, t));
    }
    std::string emitted;
    if (emit_graph) {
        const blowspec::Graph blown = blow_up(g, t);
        if (blown.vertex_count() > 62) {
            throw ParseFailure("--emit-graph needs n*t <= 62, got " +
                               std::to_string(blown.vertex_count()));
        }
        emitted = blowspec::write_graph6(blown);
    }
    print_family_spectra(opts, families, spectra, emitted);
    return 0;
}

void print_report_text(const blowspec::VerificationReport& report) {
    std::cout << "graph " << report.graph_id << "  n=" << report.n << "  t=" << report.t
              << "  tol=" << blowspec::format_double(report.tol) << "\n";
    for (const blowspec::FamilyRecord& rec : report.families) {
        std::cout << "  " << rec.family << ": " << (rec.pass ? "pass" : "FAIL")
                  << " (max deviation " << blowspec::format_double(rec.max_deviation) << ")\n";
    }
    std::cout << "  eigenvector residuals: "
              << blowspec::format_double(report.eigenvector_residuals) << "\n";
    std::cout << (report.overall_pass ? "PASS" : "FAIL") << "\n";
}

int run_verify(const CommonOpts& opts, int t, int random_count, std::uint32_t seed) {
    std::vector<blowspec::VerificationReport> reports;
    if (random_count > 0) {
        std::mt19937 rng(seed);
        std::uniform_int_distribution<int> pick_n(2, 8);
        const double probabilities[] = {0.2, 0.5, 0.8};
        std::uniform_int_distribution<int> pick_p(0, 2);
        for (int i = 0; i < random_count; ++i) {
            const int n = pick_n(rng);
            const double p = probabilities[pick_p(rng)];
            const blowspec::Graph g = blowspec::random_gnp(n, p, rng);
            reports.push_back(blowspec::run_verification(g, t, opts.tol));
        }
    } else {
        reports.push_back(blowspec::run_verification(load_graph(opts), t, opts.tol));
    }

    bool all_pass = true;
    for (const blowspec::VerificationReport& report : reports) {
        all_pass = all_pass && report.overall_pass;
    }
    if (opts.output == "json") {
        if (reports.size() == 1) {
            std::cout << blowspec::write_report(reports.front()) << "\n";
        } else {
            std::cout << "[";
            for (std::size_t i = 0; i < reports.size(); ++i) {
                if (i > 0) {
                    std::cout << ",";
                }
                std::cout << blowspec::write_report(reports[i]);
            }
            std::cout << "]\n";
        }
    } else {
        for (const blowspec::VerificationReport& report : reports) {
            print_report_text(report);
        }
        if (reports.size() > 1) {
            std::cout << reports.size() << " graphs checked, "
                      << (all_pass ? "all passed" : "some FAILED") << "\n";
        }
    }
    return all_pass ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Blow-up graph spectra: closed-form eigenvalues checked against a dense symmetric eigensolver"};
    app.require_subcommand(1);

    CommonOpts spectrum_opts;
    std::string spectrum_family = "all";
    bool spectrum_complement = false;
    CLI::App* spectrum_cmd =
        app.add_subcommand("spectrum", "Eigenvalues of one graph, straight from the eigensolver");
    add_common_options(*spectrum_cmd, spectrum_opts, /*with_tol=*/false);
    spectrum_cmd->add_option("--family", spectrum_family, "Matrix family")
        ->check(CLI::IsMember({"adjacency", "laplacian", "signless", "all"}))
        ->capture_default_str();
    spectrum_cmd->add_flag("--complement", spectrum_complement,
                           "Use the complement of the input graph");

    CommonOpts blowup_opts;
    std::string blowup_family = "all";
    bool blowup_complement = false;
    bool emit_graph = false;
    int blowup_t = 1;
    CLI::App* blowup_cmd =
        app.add_subcommand("blowup", "Closed-form spectra of the blow-up of a graph");
    add_common_options(*blowup_cmd, blowup_opts, /*with_tol=*/false);
    blowup_cmd->add_option("--family", blowup_family, "Matrix family")
        ->check(CLI::IsMember({"adjacency", "laplacian", "signless", "all"}))
        ->capture_default_str();
    blowup_cmd->add_flag("--complement", blowup_complement,
                         "Spectra of the complement of the blow-up");
    blowup_cmd->add_option("-t,--order", blowup_t, "Number of copies of each vertex")
        ->check(CLI::Range(1, 1000000))
        ->capture_default_str();
    blowup_cmd->add_flag("--emit-graph", emit_graph,
                         "Also print the blow-up itself in graph6 (needs n*t <= 62)");

    CommonOpts verify_opts;
    int verify_t = 1;
    int random_count = 0;
    std::uint32_t seed = 0;
    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "Compare all five closed-form spectra against the eigensolver");
    add_common_options(*verify_cmd, verify_opts, /*with_tol=*/true);
    verify_cmd->add_option("-t,--order", verify_t, "Number of copies of each vertex")
        ->check(CLI::Range(1, 1000000))
        ->capture_default_str();
    verify_cmd->add_option("--random", random_count,
                           "Verify this many random graphs instead of reading input")
        ->check(CLI::Range(1, 1000000));
    verify_cmd->add_option("--seed", seed, "Seed for the random graph suite")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    }

    try {
        if (spectrum_cmd->parsed()) {
            return run_spectrum(spectrum_opts, spectrum_family, spectrum_complement);
        }
        if (blowup_cmd->parsed()) {
            return run_blowup(blowup_opts, blowup_family, blowup_complement, blowup_t, emit_graph);
        }
        return run_verify(verify_opts, verify_t, random_count, seed);
    } catch (const ParseFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
