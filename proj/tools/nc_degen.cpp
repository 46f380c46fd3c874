// nc-degen: exact verification of the combinatorics and cohomology of the
// maximal semistable degeneration of the Fano surface of lines.
//
// Exit codes: 0 all checks pass, 1 a verification check failed, 2 usage or
// internal error.

#include "ncdegen/complexes.hpp"
#include "ncdegen/incidence.hpp"
#include "ncdegen/json_io.hpp"
#include "ncdegen/report.hpp"
#include "ncdegen/spectral.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
}

void dump_matrices(const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    const auto e1 = ncdegen::spectral::build_e1_page();
    write_file(dir / "d1_p0_q0.csv", ncdegen::spectral::differential_d1(e1, 0, 0).to_csv());
    write_file(dir / "d1_p1_q0.csv", ncdegen::spectral::differential_d1(e1, 1, 0).to_csv());
    write_file(dir / "d1_p0_q2.csv", ncdegen::spectral::differential_d1(e1, 0, 2).to_csv());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact checks for the degenerate Fano surface of the Segre cubic"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite = "all";
    std::string json_path;
    std::string matrix_dir;
    bool pi1_check = false;
    verify->add_option("--suite", suite, "one of: incidence, complex, spectral, reps, euler, arrangements, all");
    verify->add_option("--json", json_path, "write the report as JSON to this path");
    verify->add_option("--dump-matrices", matrix_dir, "write the d1 blocks as CSV into this directory");
    verify->add_flag("--pi1-check", pi1_check,
                     "also try to simplify the dual-complex pi1 presentation to the free abelian "
                     "standard form (informational; may be inconclusive)");

    auto* exp = app.add_subcommand("export", "write core objects as JSON");
    std::string what = "incidence";
    std::string out_path;
    exp->add_option("--what", what, "incidence | complex | surfaces | presentations")->required();
    exp->add_option("--out", out_path, "output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (verify->parsed()) {
            const auto names = ncdegen::report::suite_names();
            if (std::find(names.begin(), names.end(), suite) == names.end()) {
                std::cerr << "unknown suite: " << suite << "\n";
                return 2;
            }
            if (!matrix_dir.empty()) dump_matrices(matrix_dir);
            const auto report = ncdegen::report::run_suite(suite);
            std::cout << ncdegen::report::to_text(report);
            if (pi1_check) {
                const auto lambda = ncdegen::complexes::build_dual_complex(
                    ncdegen::incidence::Scheme::canonical());
                const auto verdict = ncdegen::complexes::tietze_free_abelian_check(
                    ncdegen::complexes::pi1_presentation(lambda), 5);
                std::cout << "pi1(dual complex) simplification: "
                          << (verdict == ncdegen::complexes::TietzeVerdict::confirmed_free_abelian
                                  ? "confirmed free abelian of rank 5"
                                  : "inconclusive (H1 = Z^5 is verified exactly either way)")
                          << "\n";
            }
            if (!json_path.empty())
                write_file(json_path, ncdegen::report::to_json_string(report));
            return report.pass ? 0 : 1;
        }

        const auto& scheme = ncdegen::incidence::Scheme::canonical();
        std::string content;
        if (what == "incidence") {
            content = ncdegen::json_io::incidence_scheme_json(scheme);
        } else if (what == "complex") {
            content = ncdegen::json_io::complex_json(ncdegen::complexes::build_dual_complex(scheme));
        } else if (what == "surfaces") {
            content = ncdegen::json_io::surfaces_json();
        } else if (what == "presentations") {
            content = ncdegen::json_io::presentations_json(scheme);
        } else {
            std::cerr << "unknown export: " << what << "\n";
            return 2;
        }
        if (out_path.empty())
            std::cout << content;
        else
            write_file(out_path, content);
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
