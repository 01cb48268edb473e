#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "landscape/cluster.hpp"
#include "landscape/ensemble.hpp"
#include "landscape/io.hpp"
#include "landscape/oracle.hpp"
#include "landscape/report.hpp"
#include "landscape/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitMismatch = 3;

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write '" + path + "'");
    out << content;
}

int cmd_analyze(const std::string& input, const std::string& out_path) {
    const landscape::Formula f = landscape::load_formula(input);
    const nlohmann::json report = landscape::analyze_json(f);
    const std::string text = report.dump(2) + "\n";
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
    return kExitOk;
}

int cmd_simulate(const landscape::EnsembleConfig& cfg, const std::string& out_base,
                 const std::string& svg_path) {
    const landscape::CampaignResult result = landscape::run_campaign(cfg);
    write_file(out_base + ".csv", landscape::campaign_csv(result));
    write_file(out_base + ".json",
               landscape::campaign_summary_json(result).dump(2) + "\n");
    if (!svg_path.empty())
        write_file(svg_path, landscape::campaign_svg(result.summary));
    std::cout << "wrote " << out_base << ".csv and " << out_base << ".json";
    if (!svg_path.empty())
        std::cout << " and " << svg_path;
    std::cout << "\n";
    return kExitOk;
}

int cmd_verify(const landscape::VerifyOptions& options) {
    const landscape::VerifyReport report = landscape::run_verification(options);
    for (const std::string& failure : report.failures)
        std::cerr << failure << "\n";
    std::cout << (report.cases_run - report.mismatches) << "/" << report.cases_run
              << " ok\n";
    return report.mismatches == 0 ? kExitOk : kExitMismatch;
}

int cmd_path(const std::string& input, const std::string& u_text,
             const std::string& v_text) {
    const landscape::Formula f = landscape::load_formula(input);
    const landscape::Genotype u = landscape::parse_genotype(u_text, f.n);
    const landscape::Genotype v = landscape::parse_genotype(v_text, f.n);
    const auto path = landscape::find_path(u, v, f);
    if (!path) {
        std::cout << "not connected\n";
        return kExitOk;
    }
    for (const landscape::Genotype& g : *path)
        std::cout << g.str() << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cluster structure of 2-SAT viable-genotype landscapes"};
    app.require_subcommand(1);

    std::string analyze_input, analyze_out;
    std::string analyze_format = "json";
    CLI::App* analyze = app.add_subcommand(
        "analyze", "analyze a fixed instance (native or DIMACS)");
    analyze->add_option("input", analyze_input, "formula file")->required();
    analyze->add_option("--format", analyze_format, "output format")
        ->check(CLI::IsMember({"json"}));
    analyze->add_option("--out", analyze_out, "write report here instead of stdout");

    landscape::EnsembleConfig cfg;
    std::string sim_out = "campaign";
    std::string sim_svg;
    CLI::App* simulate =
        app.add_subcommand("simulate", "run a Monte Carlo campaign at p = c/(2n)");
    simulate->add_option("--n", cfg.n, "locus count")->required()
        ->check(CLI::PositiveNumber);
    simulate->add_option("--c", cfg.c, "density parameter, p = c/(2n)")->required();
    simulate->add_option("--trials", cfg.trials, "trial count")->required()
        ->check(CLI::PositiveNumber);
    simulate->add_option("--seed", cfg.seed, "campaign seed");
    simulate->add_option("--max-cycle-len", cfg.max_cycle_len,
                         "cycle census truncation length")
        ->check(CLI::Range(2, 16));
    simulate->add_option("--out", sim_out,
                         "output path base; writes <base>.csv and <base>.json");
    simulate->add_option("--svg", sim_svg, "optional SVG histogram of Y");

    landscape::VerifyOptions vopt;
    std::string c_list_text = "0.3,0.5,0.8,1.2";
    CLI::App* verify =
        app.add_subcommand("verify", "oracle-vs-analytic random equivalence sweep");
    verify->add_option("--n-max", vopt.n_max, "largest locus count")
        ->check(CLI::Range(2, landscape::oracle::kDefaultLocusCap));
    verify->add_option("--cases", vopt.cases, "number of random cases");
    verify->add_option("--c-list", c_list_text, "comma-separated densities");
    verify->add_option("--seed", vopt.seed, "sweep seed");
    verify->add_option("--pairs", vopt.pairs_per_case,
                       "viable pairs checked per case");

    std::string path_input, path_u, path_v;
    CLI::App* path = app.add_subcommand(
        "path", "single-locus mutational path between two viable genotypes");
    path->add_option("input", path_input, "formula file")->required();
    path->add_option("u", path_u, "start genotype (binary, locus 1 first)")->required();
    path->add_option("v", path_v, "end genotype")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*analyze)
            return cmd_analyze(analyze_input, analyze_out);
        if (*simulate) {
            if (cfg.c < 0 || cfg.c > 2.0 * cfg.n) {
                std::cerr << "error: c must satisfy 0 <= c <= 2n\n";
                return kExitUsage;
            }
            return cmd_simulate(cfg, sim_out, sim_svg);
        }
        if (*verify) {
            vopt.c_list.clear();
            std::stringstream ss(c_list_text);
            std::string token;
            while (std::getline(ss, token, ','))
                if (!token.empty())
                    vopt.c_list.push_back(std::stod(token));
            if (vopt.c_list.empty()) {
                std::cerr << "error: --c-list needs at least one value\n";
                return kExitUsage;
            }
            return cmd_verify(vopt);
        }
        if (*path)
            return cmd_path(path_input, path_u, path_v);
    } catch (const landscape::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
