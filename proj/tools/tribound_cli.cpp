#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "tribound/bounds.hpp"
#include "tribound/designs.hpp"
#include "tribound/extremal.hpp"
#include "tribound/json_io.hpp"
#include "tribound/measure.hpp"
#include "tribound/mpts.hpp"
#include "tribound/oracle.hpp"

#include <json.hpp>

namespace {

void emit(const std::string& out_path, const std::string& payload) {
    if (out_path.empty()) {
        std::cout << payload << "\n";
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw tribound::ParamError("cannot open output file " + out_path);
        f << payload << "\n";
    }
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw tribound::ParamError("cannot open input file " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    using namespace tribound;
    CLI::App app{"extremal 3-graph bounds, designs, and exact oracles"};
    app.require_subcommand(1);

    long long n = 0;
    int nu = 0, lambda = 1, s = 0, delta2 = 1;
    std::uint64_t seed = 0;
    long long budget = 1'000'000'000;
    int threads = 1;
    std::string out_path, in_file;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--seed", seed)->check(CLI::NonNegativeNumber);
        cmd->add_option("-o,--output", out_path);
        cmd->add_option("--threads", threads)->check(CLI::PositiveNumber);
    };

    auto* c_bound = app.add_subcommand("bound", "print f(n,nu,delta2)");
    c_bound->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
    c_bound->add_option("--nu", nu)->required()->check(CLI::NonNegativeNumber);
    c_bound->add_option("--delta2", delta2)->required()->check(CLI::NonNegativeNumber);
    add_common(c_bound);

    auto* c_g = app.add_subcommand("g", "print g(nu,lambda,s)");
    c_g->add_option("--nu", nu)->required()->check(CLI::NonNegativeNumber);
    c_g->add_option("--lambda", lambda)->required()->check(CLI::NonNegativeNumber);
    c_g->add_option("--s", s)->required()->check(CLI::NonNegativeNumber);
    add_common(c_g);

    auto* c_sts = app.add_subcommand("sts", "Steiner triple system");
    c_sts->add_option("--nu", nu)->required()->check(CLI::NonNegativeNumber);
    add_common(c_sts);

    auto* c_ts = app.add_subcommand("ts", "triple system with index lambda");
    c_ts->add_option("--nu", nu)->required()->check(CLI::NonNegativeNumber);
    c_ts->add_option("--lambda", lambda)->required()->check(CLI::NonNegativeNumber);
    add_common(c_ts);

    auto* c_pbd = app.add_subcommand("pbd", "pairwise balanced design {3,5*}");
    c_pbd->add_option("--nu", nu)->required()->check(CLI::NonNegativeNumber);
    add_common(c_pbd);

    auto* c_mpts = app.add_subcommand("mpts", "maximum partial triple system");
    c_mpts->add_option("--nu", nu)->required()->check(CLI::NonNegativeNumber);
    c_mpts->add_option("--lambda", lambda)->required()->check(CLI::NonNegativeNumber);
    c_mpts->add_option("--s", s)->required()->check(CLI::NonNegativeNumber);
    add_common(c_mpts);

    auto* c_ext = app.add_subcommand("extremal", "extremal 3-graph");
    c_ext->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
    c_ext->add_option("--nu", nu)->required()->check(CLI::NonNegativeNumber);
    c_ext->add_option("--delta2", delta2)->required()->check(CLI::NonNegativeNumber);
    add_common(c_ext);

    auto* c_ver = app.add_subcommand("verify", "check an h3-v1 file");
    c_ver->add_option("--file", in_file)->required();
    c_ver->add_option("--nu", nu)->required()->check(CLI::NonNegativeNumber);
    c_ver->add_option("--delta2", delta2)->required()->check(CLI::NonNegativeNumber);
    add_common(c_ver);

    auto* c_oracle = app.add_subcommand("oracle", "exact brute-force search");
    c_oracle->require_subcommand(1);
    auto* c_omp = c_oracle->add_subcommand("mpts");
    c_omp->add_option("--nu", nu)->required()->check(CLI::NonNegativeNumber);
    c_omp->add_option("--lambda", lambda)->required()->check(CLI::NonNegativeNumber);
    c_omp->add_option("--s", s)->required()->check(CLI::NonNegativeNumber);
    c_omp->add_option("--budget", budget)->check(CLI::NonNegativeNumber);
    add_common(c_omp);
    auto* c_oex = c_oracle->add_subcommand("extremal");
    c_oex->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
    c_oex->add_option("--nu", nu)->required()->check(CLI::NonNegativeNumber);
    c_oex->add_option("--delta2", delta2)->required()->check(CLI::NonNegativeNumber);
    c_oex->add_option("--budget", budget)->check(CLI::NonNegativeNumber);
    add_common(c_oex);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "E:2: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*c_bound) {
            emit(out_path, std::to_string(compute_f(n, nu, delta2)));
        } else if (*c_g) {
            emit(out_path, std::to_string(compute_g(nu, lambda, s)));
        } else if (*c_sts) {
            emit(out_path, to_json(construct_sts(nu)));
        } else if (*c_ts) {
            emit(out_path, to_json(construct_ts(nu, lambda, seed)));
        } else if (*c_pbd) {
            PBD35 d = construct_pbd35(nu, seed);
            nlohmann::ordered_json j = nlohmann::ordered_json::parse(
                to_json(TripleSystem(d.nu, 1, d.triples)));
            j["five_block"] = d.five_block;
            emit(out_path, j.dump());
        } else if (*c_mpts) {
            MptsResult res = construct_mpts(nu, lambda, s, seed);
            emit(out_path, to_json(res.system));
            std::cout << mpts_certificate_json(res, s, compute_g(nu, lambda, s))
                      << "\n";
        } else if (*c_ext) {
            ExtremalResult res = construct_extremal(n, nu, delta2, seed);
            emit(out_path, to_json(res.h));
            std::cout << to_json(verify_extremal(res.h, nu, delta2)) << "\n";
        } else if (*c_ver) {
            Hypergraph3 h = hypergraph_from_json(slurp(in_file));
            Certificate cert = verify_extremal(h, nu, delta2);
            emit(out_path, to_json(cert));
            if (!cert.passed) {
                std::cerr << "E:1: verification failed\n";
                return 1;
            }
        } else if (*c_omp || *c_oex) {
            OracleOptions opts;
            opts.node_budget = budget;
            SearchReport rep = *c_omp ? oracle_mpts(nu, lambda, s, opts)
                                      : oracle_extremal(static_cast<int>(n),
                                                        nu, delta2, opts);
            emit(out_path, to_json(rep));
            if (!rep.exhausted) {
                std::cerr << "E:3: node budget exhausted, optimum not certified\n";
                return 3;
            }
        }
    } catch (const ParamError& e) {
        std::cerr << "E:2: " << e.what() << "\n";
        return 2;
    } catch (const ResourceError& e) {
        std::cerr << "E:3: " << e.what() << "\n";
        return 3;
    } catch (const VerifyError& e) {
        std::cerr << "E:1: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
