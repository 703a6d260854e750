#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include <jenhyp/certificate_json.hpp>
#include <jenhyp/certify.hpp>
#include <jenhyp/jensen.hpp>
#include <jenhyp/partition.hpp>
#include <jenhyp/sweep.hpp>

namespace {

using namespace jenhyp;

void emit(const nlohmann::json& j, const std::string& out_path) {
    std::string text = j.dump(2);
    if (out_path.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream f(out_path);
        if (!f) throw std::runtime_error("cannot open for writing: " + out_path);
        f << text << "\n";
    }
}

std::string default_epsilon(long d) {
    switch (d) {
        case 2: return "0.0295";
        case 3: return "0.021";
        case 4: return "0.0163";
        case 5: return "0.0081";
        default: return "";
    }
}

struct CommonOpts {
    long d = 0;
    long s = 10;
    std::string epsilon;
    long precision = Interval::default_prec;
    std::string sup = "bnb";
    std::string method = "both";
    unsigned jobs = 0;
    std::string out;
};

void add_cert_flags(CLI::App* cmd, CommonOpts& o, bool need_d) {
    auto* d = cmd->add_option("--d", o.d, "Jensen polynomial degree");
    if (need_d) d->required();
    cmd->add_option("--s", o.s, "Taylor truncation order")->capture_default_str();
    cmd->add_option("--epsilon", o.epsilon, "upper bound on w(n) for the certified tail");
    cmd->add_option("--precision", o.precision, "working precision in bits")
        ->capture_default_str();
    cmd->add_option("--sup", o.sup, "sup-bound strategy")
        ->check(CLI::IsMember({"bnb", "lemma41"}))
        ->capture_default_str();
    cmd->add_option("--out", o.out, "write JSON here instead of stdout");
}

std::string resolve_epsilon(const CommonOpts& o) {
    if (!o.epsilon.empty()) return o.epsilon;
    std::string eps = default_epsilon(o.d);
    if (eps.empty())
        throw CLI::ValidationError("--epsilon", "no built-in epsilon for d=" + std::to_string(o.d) +
                                                    "; pass one explicitly");
    return eps;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact and certified hyperbolicity checks for partition Jensen polynomials"};
    app.require_subcommand(1);

    CommonOpts opt;
    long n_arg = 0, from = 1, to = 0;
    std::string cert_path;

    auto* c_sweep = app.add_subcommand("sweep", "exact verdicts over a range of shifts");
    c_sweep->add_option("--d", opt.d)->required();
    c_sweep->add_option("--from", from, "first shift")->capture_default_str();
    c_sweep->add_option("--to", to, "last shift")->required();
    c_sweep->add_option("--method", opt.method, "exact criterion")
        ->check(CLI::IsMember({"hankel", "sturm", "both"}))
        ->capture_default_str();
    c_sweep->add_option("--jobs", opt.jobs, "worker threads (0 = all cores)");
    c_sweep->add_option("--out", opt.out);

    auto* c_find = app.add_subcommand("find-n", "determine N(d): certificate plus exact sweep");
    add_cert_flags(c_find, opt, true);
    c_find->add_option("--method", opt.method)
        ->check(CLI::IsMember({"hankel", "sturm", "both"}));
    c_find->add_option("--jobs", opt.jobs);

    long chen_to = 900, chen_s = 6;
    std::string chen_epsilon = "0.013";
    auto* c_chen = app.add_subcommand("chen", "verify the partition ratio inequality");
    c_chen->add_option("--to", chen_to, "direct exact range upper end")->capture_default_str();
    c_chen->add_option("--s", chen_s)->capture_default_str();
    c_chen->add_option("--epsilon", chen_epsilon)->capture_default_str();
    c_chen->add_option("--precision", opt.precision)->capture_default_str();
    c_chen->add_option("--sup", opt.sup)->check(CLI::IsMember({"bnb", "lemma41"}));
    c_chen->add_option("--out", opt.out);

    auto* c_bound = app.add_subcommand("bound", "general-d bound report");
    c_bound->add_option("--d", opt.d)->required();
    c_bound->add_option("--precision", opt.precision)->capture_default_str();
    c_bound->add_option("--out", opt.out);

    auto* c_cert = app.add_subcommand("certify", "emit a tail certificate");
    add_cert_flags(c_cert, opt, true);

    auto* c_check = app.add_subcommand("check-cert", "re-validate a serialized certificate");
    c_check->add_option("path", cert_path, "certificate JSON file")->required();

    auto* c_part = app.add_subcommand("partition", "print p(n)");
    c_part->add_option("n", n_arg)->required();

    auto* c_jensen = app.add_subcommand("jensen", "print Jensen polynomial coefficients");
    long jd = 0, jn = 0;
    c_jensen->add_option("d", jd)->required();
    c_jensen->add_option("n", jn)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*c_sweep) {
            SweepResult r =
                sweep_range(opt.d, from, to, sweep_method_from_string(opt.method), opt.jobs);
            emit(sweep_to_json(r), opt.out);
            return 0;
        }
        if (*c_find) {
            FindNResult r = find_n(opt.d, opt.s, resolve_epsilon(opt), opt.precision,
                                   sup_strategy_from_string(opt.sup),
                                   sweep_method_from_string(opt.method), opt.jobs);
            emit(find_n_to_json(r), opt.out);
            return 0;
        }
        if (*c_chen) {
            PartitionTable table(chen_to + 2);
            nlohmann::json j;
            j["direct_range"] = {{"from", 2}, {"to", chen_to}};
            long first_bad = 0;
            for (long n = 2; n <= chen_to; ++n)
                if (!ratio_inequality_exact(n, table, opt.precision)) {
                    first_bad = n;
                    break;
                }
            j["direct_ok"] = first_bad == 0;
            RatioInequalityCertificate cert = certify_ratio_inequality(
                chen_epsilon, chen_s, opt.precision, sup_strategy_from_string(opt.sup));
            j["certificate"] = certificate_to_json(cert);
            emit(j, opt.out);
            if (first_bad != 0) {
                std::cerr << "exact inequality fails at n=" << first_bad << "\n";
                return 1;
            }
            return cert.verified ? 0 : 1;
        }
        if (*c_bound) {
            GeneralBoundReport r = general_bound(opt.d, opt.precision);
            nlohmann::json j;
            j["d"] = r.d;
            j["log10_epsilon"] = jenhyp::detail::interval_json(r.log10_epsilon, 20);
            j["log10_n_bound"] = jenhyp::detail::interval_json(r.log10_n_bound, 20);
            j["log_term_count"] = jenhyp::detail::interval_json(r.log_term_count, 20);
            j["log_binomial_factor"] = jenhyp::detail::interval_json(r.log_binomial_factor, 20);
            j["log_taylor_error"] = jenhyp::detail::interval_json(r.log_taylor_error, 20);
            j["log_error_coefficient"] =
                jenhyp::detail::interval_json(r.log_error_coefficient, 20);
            j["hermite_hankel_floor"] = r.hermite_hankel_floor.get_str();
            j["chain_ok"] = r.chain_ok;
            emit(j, opt.out);
            return r.chain_ok ? 0 : 1;
        }
        if (*c_cert) {
            ThresholdCertificate cert =
                certify_threshold(opt.d, opt.s, resolve_epsilon(opt), opt.precision,
                                  sup_strategy_from_string(opt.sup));
            emit(certificate_to_json(cert), opt.out);
            return cert.verified ? 0 : 1;
        }
        if (*c_check) {
            std::ifstream f(cert_path);
            if (!f) {
                std::cerr << "cannot open " << cert_path << "\n";
                return 2;
            }
            nlohmann::json j;
            try {
                f >> j;
            } catch (const nlohmann::json::exception& ex) {
                std::cerr << "parse error: " << ex.what() << "\n";
                return 2;
            }
            std::string why;
            CertCheck r = check_certificate_json(j, &why);
            if (r != CertCheck::valid) std::cerr << "invalid certificate: " << why << "\n";
            return static_cast<int>(r);
        }
        if (*c_part) {
            PartitionTable table(n_arg);
            std::cout << table.at(n_arg).get_str() << "\n";
            return 0;
        }
        if (*c_jensen) {
            PartitionTable table(jn + jd);
            ExactPoly p = jensen_poly(JensenSpec(jd, jn), table);
            nlohmann::json j;
            j["d"] = jd;
            j["n"] = jn;
            j["coefficients"] = nlohmann::json::array();
            for (const auto& c : p.coeffs()) j["coefficients"].push_back(c.get_str());
            std::cout << j.dump(2) << "\n";
            return 0;
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}
