#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "braidchain/report.hpp"

namespace {

using namespace braidchain;


Family parse_family(const std::string& s) {
    if (s == "sl") return Family::SL;
    if (s == "so") return Family::SO;
    if (s == "sp") return Family::Sp;
    throw CLI::ValidationError("--group", "must be one of sl|so|sp");
}

AlgebraSign parse_sign(const std::string& s) {
    if (s == "weyl") return AlgebraSign::Weyl;
    if (s == "clifford") return AlgebraSign::Clifford;
    throw CLI::ValidationError("--sign", "must be weyl|clifford");
}

std::ostream& open_out(const std::string& path, std::ofstream& file) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    return file;
}

int cmd_rmatrix(const std::string& group, int n, bool projectors, bool with_inverse,
                const std::string& out) {
    GroupSpec g{parse_family(group), n};
    g.validate();
    BraidMatrix R = build_rhat(g);
    std::ofstream file;
    std::ostream& os = open_out(out, file);
    os << "# rhat " << g.str() << "\n";
    R.mat.dump(os);
    if (with_inverse) {
        os << "# rhat_inverse " << g.str() << "\n";
        build_rhat_inverse(R).dump(os);
    }
    if (projectors) {
        ProjectorSet ps = spectral_projectors(R);
        for (const auto& [label, P] : ps.projectors) {
            os << "# projector " << label << " rank " << rank(P) << "\n";
            P.dump(os);
        }
    }
    return 0;
}

int cmd_relations(const std::string& group, int n, const std::string& sign, int variant,
                  bool chain, bool glm, int m, const std::string& eps,
                  const std::vector<std::string>& couplings, const std::string& out) {
    std::ofstream file;
    std::ostream& os = open_out(out, file);
    AlgebraPresentation pres;
    if (glm) {
        if (group != "sl")
            throw CLI::ValidationError("--glm", "the composite construction exists for the sl "
                                                "family only");
        pres = gen_glm(m, n, parse_sign(sign), variant);
    } else if (chain) {
        GroupSpec g{parse_family(group), n};
        g.validate();
        ChainParams params;
        params.M = m;
        if (eps.empty()) {
            params.flavors.assign(m, {parity_of(parse_sign(sign)), variant});
        } else {
            std::istringstream es(eps);
            std::string tok;
            while (std::getline(es, tok, ','))
                params.flavors.push_back({std::stoi(tok), variant});
            if (int(params.flavors.size()) != m)
                throw CLI::ValidationError("--eps", "needs exactly M comma-separated parities");
        }
        for (const std::string& c : couplings) {
            auto equals = c.find('=');
            auto comma = c.find(',');
            if (equals == std::string::npos || comma == std::string::npos || comma > equals)
                throw CLI::ValidationError("--coupling", "format is a,b=<ratfunc>");
            int a = std::stoi(c.substr(0, comma));
            int b = std::stoi(c.substr(comma + 1, equals - comma - 1));
            params.couplings[{a, b}] = parse_ratfunc(c.substr(equals + 1));
        }
        pres = gen_chain(g, params);
    } else {
        GroupSpec g{parse_family(group), n};
        g.validate();
        pres = gen_single_copy(g, parse_sign(sign), variant);
    }
    os << pres.dump();
    return 0;
}

int cmd_verify(const RunConfig& cfg, const std::string& format, const std::string& out) {
    std::vector<CheckOutcome> checks = run_suite(cfg);
    std::ofstream file;
    std::ostream& os = open_out(out, file);
    os << render_report(cfg, checks, format);
    for (const auto& c : checks)
        if (c.status == "fail") return 1;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"braid matrices, q-deformed Weyl/Clifford algebra presentations, and their "
                 "exact verification suites"};
    app.require_subcommand(1);

    auto* rmatrix = app.add_subcommand("rmatrix", "build and dump a braid matrix");
    std::string r_group, r_out = "-";
    int r_n = 2;
    bool r_proj = false, r_inv = false;
    rmatrix->add_option("--group", r_group, "sl|so|sp")->required();
    rmatrix->add_option("--n", r_n, "dimension of the defining representation")->required();
    rmatrix->add_flag("--projectors", r_proj, "also dump the spectral projectors");
    rmatrix->add_flag("--inverse", r_inv, "also dump the inverse");
    rmatrix->add_option("--out", r_out, "output file (- for stdout)");

    auto* relations = app.add_subcommand("relations", "generate a quadratic presentation");
    std::string l_group = "sl", l_sign = "weyl", l_eps, l_out = "-";
    int l_n = 2, l_m = 1, l_variant = 1;
    bool l_chain = false, l_glm = false;
    std::vector<std::string> l_couplings;
    relations->add_option("--group", l_group, "sl|so|sp");
    relations->add_option("--n", l_n, "modes per copy")->required();
    relations->add_option("--sign", l_sign, "weyl|clifford");
    relations->add_option("--variant", l_variant, "+1 braids with R, -1 with R^-1");
    relations->add_flag("--chain", l_chain, "braided chain of M copies");
    relations->add_flag("--glm", l_glm, "composite-covariant algebra on M x N modes");
    relations->add_option("--m", l_m, "number of copies");
    relations->add_option("--eps", l_eps, "comma-separated copy parities, e.g. 0,1");
    relations->add_option("--coupling", l_couplings, "cross coupling a,b=<ratfunc>");
    relations->add_option("--out", l_out, "output file (- for stdout)");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string v_suite = "all", v_group, v_sign, v_format = "text", v_out = "-";
    int v_n = 0, v_m = 0, v_maxdeg = 0;
    bool v_timings = false;
    verify->add_option("--suite", v_suite, "all|braid|lemma1|chain|glm|star|series");
    verify->add_option("--group", v_group, "restrict to one family (sl|so|sp)");
    verify->add_option("--n", v_n, "restrict to one N");
    verify->add_option("--m", v_m, "restrict to one M");
    verify->add_option("--sign", v_sign, "restrict to weyl|clifford");
    verify->add_option("--max-degree", v_maxdeg,
                       "series degree bound (default 4, env BRAIDCHAIN_MAX_DEGREE)");
    verify->add_option("--format", v_format, "text|json");
    verify->add_flag("--timings", v_timings, "include wall times (breaks byte determinism)");
    verify->add_option("--out", v_out, "output file (- for stdout)");

    try {
        app.parse(argc, argv);
        if (rmatrix->parsed()) return cmd_rmatrix(r_group, r_n, r_proj, r_inv, r_out);
        if (relations->parsed())
            return cmd_relations(l_group, l_n, l_sign, l_variant, l_chain, l_glm, l_m, l_eps,
                                 l_couplings, l_out);
        if (verify->parsed()) {
            static const std::set<std::string> suites = {"all",  "braid", "lemma1", "chain",
                                                         "glm",  "star",  "series"};
            if (!suites.count(v_suite))
                throw CLI::ValidationError("--suite", "unknown suite: " + v_suite);
            RunConfig cfg;
            cfg.suite = v_suite;
            if (!v_group.empty()) cfg.family = parse_family(v_group);
            if (v_n > 0) cfg.N = v_n;
            if (v_m > 0) cfg.M = v_m;
            if (!v_sign.empty()) cfg.sign = parse_sign(v_sign);
            cfg.max_degree = 4;
            if (const char* env = std::getenv("BRAIDCHAIN_MAX_DEGREE"))
                cfg.max_degree = std::atoi(env);
            if (v_maxdeg > 0) cfg.max_degree = v_maxdeg;
            if (v_format != "text" && v_format != "json")
                throw CLI::ValidationError("--format", "must be text|json");
            cfg.timings = v_timings;
            return cmd_verify(cfg, v_format, v_out);
        }
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
