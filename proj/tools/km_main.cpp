// km: command-line surface for the Kim-Manturov group toolkit.
//
// Subcommands: present, h1, min-gens, rewrite, kernel-h1, chars, verify-all.
// Exit codes: 0 success, 1 check failure, 2 usage error.
#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

#include "km/families.hpp"
#include "km/homs.hpp"
#include "km/report.hpp"
#include "km/rewrite.hpp"
#include "km/schreier.hpp"
#include "km/symchar.hpp"
#include "km/verify.hpp"

namespace {

using Clock = std::chrono::steady_clock;

struct CommonFlags {
    std::string format = "text";
    std::string output;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--format", flags.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--output", flags.output, "Write output to a file instead of stdout");
}

int emit(const km::Report& report, const CommonFlags& flags) {
    std::string payload = flags.format == "json" ? report.to_json() : report.to_text();
    if (flags.output.empty()) {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
    } else {
        std::ofstream os(flags.output);
        if (!os) throw std::runtime_error("cannot open output file: " + flags.output);
        os << payload;
    }
    return report.all_passed() ? 0 : 1;
}

km::Presentation load_presentation(const std::string& family, int n, const std::string& mode,
                                   const std::string& input) {
    if (!input.empty()) {
        std::ifstream is(input);
        if (!is) throw std::runtime_error("cannot open presentation file: " + input);
        return km::presentation_from_text(is);
    }
    auto f = km::parse_family(family);
    if (!f || *f == km::Family::custom)
        throw CLI::ValidationError("--family", "expected gamma|gamma_hat|delta|delta_hat");
    auto m = km::parse_mode(mode);
    if (!m) throw CLI::ValidationError("--mode", "expected full|reduced");
    return km::build_family(*f, n, *m);
}

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with the Kim-Manturov pentagon-relation groups"};
    app.require_subcommand(1);

    auto* present = app.add_subcommand("present", "Build a family presentation and write it out");
    std::string p_family = "gamma", p_mode = "full";
    int p_n = 5;
    bool p_json_file = false;
    CommonFlags p_flags;
    present->add_option("--family", p_family, "gamma|gamma_hat|delta|delta_hat")->required();
    present->add_option("--n", p_n, "Number of points (n >= 4)")->required();
    present->add_option("--mode", p_mode, "full|reduced");
    present->add_flag("--json-file", p_json_file, "Write the presentation as JSON, not text");
    add_common(present, p_flags);

    auto* h1cmd = app.add_subcommand("h1", "Abelianization invariants of a presentation");
    std::string h_family = "gamma", h_mode = "full", h_input;
    int h_n = 5;
    CommonFlags h_flags;
    h1cmd->add_option("--family", h_family, "gamma|gamma_hat|delta|delta_hat");
    h1cmd->add_option("--n", h_n, "Number of points");
    h1cmd->add_option("--mode", h_mode, "full|reduced");
    h1cmd->add_option("--input", h_input, "Read a presentation file instead of building one");
    add_common(h1cmd, h_flags);

    auto* mingens = app.add_subcommand("min-gens", "Minimal generating set Lambda");
    std::string m_family = "gamma";
    int m_n = 5;
    CommonFlags m_flags;
    mingens->add_option("--family", m_family, "gamma|gamma_hat|delta|delta_hat")->required();
    mingens->add_option("--n", m_n, "Number of points")->required();
    add_common(mingens, m_flags);

    auto* rewrite = app.add_subcommand("rewrite", "Rewrite a generator over Lambda");
    std::string r_family = "gamma_hat", r_quad;
    int r_n = 5;
    bool r_all = false;
    CommonFlags r_flags;
    rewrite->add_option("--family", r_family, "gamma|gamma_hat|delta|delta_hat")->required();
    rewrite->add_option("--n", r_n, "Number of points")->required();
    rewrite->add_option("--quad", r_quad, "Generator label, e.g. \"(1345)\"");
    rewrite->add_flag("--all", r_all, "Rewrite every generator and verify all certificates");
    add_common(rewrite, r_flags);

    auto* kernel = app.add_subcommand("kernel-h1", "H1 of the kernel of a finite hom");
    std::string k_family = "gamma", k_mode = "reduced", k_hom = "nu", k_transversal, k_naming;
    std::string k_route = "auto";
    int k_n = 5;
    CommonFlags k_flags;
    kernel->add_option("--family", k_family, "gamma|gamma_hat|delta|delta_hat");
    kernel->add_option("--n", k_n, "Number of points");
    kernel->add_option("--mode", k_mode, "full|reduced");
    kernel->add_option("--hom", k_hom, "nu|eps_all_ones|abelianization")->required();
    kernel->add_option("--transversal", k_transversal,
                       "Override the Schreier transversal, e.g. \"1;(1234)\"");
    kernel->add_option("--naming-map", k_naming, "Write the Schreier generator names as JSON");
    kernel->add_option("--route", k_route, "auto|materialize|stream")
        ->check(CLI::IsMember({"auto", "materialize", "stream"}));
    bool k_progress = false;
    kernel->add_flag("--progress", k_progress, "Report elimination progress on stderr");
    add_common(kernel, k_flags);

    auto* chars = app.add_subcommand("chars", "Symmetric-group character computations");
    int c_n = 8;
    bool c_verify = false;
    CommonFlags c_flags;
    chars->add_option("--n", c_n, "Degree of the symmetric group")->required();
    chars->add_flag("--verify", c_verify, "Check the decomposition identities");
    add_common(chars, c_flags);

    auto* verify_all = app.add_subcommand("verify-all", "Run the whole verification suite");
    int v_nmin = 4, v_nmax = 6, v_threads = 1;
    bool v_slow = false;
    std::uint64_t v_seed = 20260810ull;
    CommonFlags v_flags;
    verify_all->add_option("--n-min", v_nmin, "Smallest n for the family checks");
    verify_all->add_option("--n-max", v_nmax, "Largest n for the family checks");
    verify_all->add_flag("--include-slow", v_slow,
                         "Also run the n=7 abelianizations and the 512-coset kernel");
    verify_all->add_option("--seed", v_seed, "Seed for the randomized property checks");
    verify_all->add_option("--threads", v_threads, "Worker cap for parallel sections");
    add_common(verify_all, v_flags);

    try {
        try {
            app.parse(argc, argv);
        } catch (const CLI::ParseError& e) {
            int code = app.exit(e);
            return code == 0 ? 0 : 2;
        }

        if (present->parsed()) {
            auto t0 = Clock::now();
            km::RelatorCounts counts;
            auto f = km::parse_family(p_family);
            auto m = km::parse_mode(p_mode);
            if (!f || *f == km::Family::custom)
                throw CLI::ValidationError("--family", "expected gamma|gamma_hat|delta|delta_hat");
            if (!m) throw CLI::ValidationError("--mode", "expected full|reduced");
            km::Presentation p = km::build_family(*f, p_n, *m, &counts);
            km::Report report;
            report.command = "present";
            report.inputs = {{"family", p_family}, {"n", std::to_string(p_n)}, {"mode", p_mode}};
            report.results = {
                {"generators", std::to_string(p.generator_count())},
                {"relators", std::to_string(p.relators.size())},
                {"involutive", std::to_string(counts.involutive)},
                {"dihedral", std::to_string(counts.dihedral)},
                {"commutative", std::to_string(counts.commutative)},
                {"pentagon", std::to_string(counts.pentagon)},
            };
            report.total_ms = ms_since(t0);
            if (!p_flags.output.empty()) {
                std::ofstream os(p_flags.output);
                if (!os) throw std::runtime_error("cannot open output file: " + p_flags.output);
                os << (p_json_file ? km::presentation_to_json(p) : km::presentation_to_text(p));
            } else if (p_json_file) {
                std::cout << km::presentation_to_json(p) << '\n';
            } else {
                std::cout << km::presentation_to_text(p);
            }
            std::cerr << report.to_text();
            return 0;
        }

        if (h1cmd->parsed()) {
            auto t0 = Clock::now();
            km::Presentation p = load_presentation(h_family, h_n, h_mode, h_input);
            km::Report report;
            std::vector<std::string> violations = km::validate(p);
            km::CheckLine valid;
            valid.name = "presentation.validates";
            valid.expected = "no violations";
            valid.actual = violations.empty() ? "no violations" : violations.front();
            valid.pass = violations.empty();
            report.checks.push_back(std::move(valid));
            km::AbelianInvariants inv = km::h1(p);
            report.command = "h1";
            report.inputs = {{"family", km::family_name(p.family)},
                            {"n", std::to_string(p.n)},
                            {"mode", km::mode_name(p.mode)}};
            report.results = {{"generators", std::to_string(p.generator_count())},
                             {"relators", std::to_string(p.relators.size())},
                             {"h1", inv.to_string()}};
            report.total_ms = ms_since(t0);
            return emit(report, h_flags);
        }

        if (mingens->parsed()) {
            auto t0 = Clock::now();
            auto f = km::parse_family(m_family);
            if (!f || *f == km::Family::custom)
                throw CLI::ValidationError("--family", "expected gamma|gamma_hat|delta|delta_hat");
            std::vector<km::Quad> lambda = km::lambda_generators(m_n, *f);
            std::string names;
            for (const km::Quad& q : lambda) {
                if (!names.empty()) names += " ";
                names += km::quad_name(q);
            }
            km::Report report;
            report.command = "min-gens";
            report.inputs = {{"family", m_family}, {"n", std::to_string(m_n)}};
            report.results = {{"size", std::to_string(lambda.size())},
                             {"closed_form", std::to_string(km::lambda_size_closed_form(m_n))},
                             {"binomial_form", std::to_string(km::lambda_size_binomial(m_n))},
                             {"generators", names}};
            report.total_ms = ms_since(t0);
            return emit(report, m_flags);
        }

        if (rewrite->parsed()) {
            auto t0 = Clock::now();
            auto f = km::parse_family(r_family);
            if (!f || *f == km::Family::custom)
                throw CLI::ValidationError("--family", "expected gamma|gamma_hat|delta|delta_hat");
            km::Presentation p = km::build_family(*f, r_n, km::EnumMode::full);
            km::LambdaRewriter rw(p);
            km::Report report;
            report.command = "rewrite";
            report.inputs = {{"family", r_family}, {"n", std::to_string(r_n)}};
            if (r_all) {
                long long failures = 0, total = 0;
                for (const km::Quad& q : km::generator_quads(p)) {
                    km::RewriteResult r = rw.rewrite(q);
                    ++total;
                    if (!km::verify_certificate(r.certificate, p)) ++failures;
                }
                km::CheckLine line;
                line.name = "rewrite.all_certificates_verify";
                line.expected = "failures=0";
                line.actual = "failures=" + std::to_string(failures);
                line.pass = failures == 0;
                report.results = {{"generators", std::to_string(total)}};
                report.checks.push_back(std::move(line));
            } else {
                auto q = km::parse_quad_name(r_quad);
                if (!q) throw CLI::ValidationError("--quad", "expected a label like \"(1345)\"");
                km::RewriteResult r = rw.rewrite(*q);
                bool ok = km::verify_certificate(r.certificate, p);
                report.results = {{"quad", km::quad_name(*q)},
                                 {"word", km::format_word(r.word, p.generators)},
                                 {"moves", std::to_string(r.certificate.moves.size())},
                                 {"certificate", ok ? "verified" : "INVALID"}};
                km::CheckLine line;
                line.name = "rewrite.certificate_verifies";
                line.expected = "verified";
                line.actual = ok ? "verified" : "INVALID";
                line.pass = ok;
                report.checks.push_back(std::move(line));
            }
            report.total_ms = ms_since(t0);
            return emit(report, r_flags);
        }

        if (kernel->parsed()) {
            auto t0 = Clock::now();
            km::Presentation p = load_presentation(k_family, k_n, k_mode, "");
            // The index-2 subgroup of delta_5 is defined through the
            // four-generator rewriting, where the all-ones map is well-defined.
            if (k_hom == "eps_all_ones" && p.family == km::Family::delta && p.n == 5)
                p = km::delta5_four_generator_presentation();
            km::AbelianHom hom = km::make_hom(k_hom, p);
            km::KernelH1Options opts;
            if (k_route == "materialize") opts.route = km::KernelRoute::materialize;
            if (k_route == "stream") opts.route = km::KernelRoute::stream;
            if (k_progress)
                opts.snf.progress = [](const std::string& stage, std::size_t done,
                                       std::size_t total) {
                    std::cerr << stage << " " << done << "/" << total << "\r" << std::flush;
                    return true;
                };
            km::CosetTable table = km::coset_table(p, hom);
            km::Transversal tr;
            if (!k_transversal.empty()) {
                tr = km::parse_transversal(k_transversal, p, table);
                opts.transversal = &tr;
            }
            km::KernelH1Result res = km::h1_kernel(p, hom, opts);
            if (!k_naming.empty()) {
                km::RsPresentation rs = km::rs_presentation(p, table, res.transversal);
                std::ofstream os(k_naming);
                if (!os) throw std::runtime_error("cannot open naming-map file: " + k_naming);
                os << km::naming_map_to_json(rs, p);
            }
            std::string transversal_text;
            if (res.num_cosets <= 64) {
                for (const km::Word& w : res.transversal.reps) {
                    if (!transversal_text.empty()) transversal_text += ";";
                    transversal_text += km::format_word(w, p.generators);
                }
            } else {
                transversal_text = "(" + std::to_string(res.num_cosets) + " representatives)";
            }
            km::Report report;
            report.command = "kernel-h1";
            report.inputs = {{"family", km::family_name(p.family)},
                            {"n", std::to_string(p.n)},
                            {"mode", km::mode_name(p.mode)},
                            {"hom", k_hom}};
            report.results = {
                {"cosets", std::to_string(res.num_cosets)},
                {"transversal", transversal_text},
                {"schreier_generators", std::to_string(res.rs_generators)},
                {"schreier_relators", std::to_string(res.rs_relators)},
                {"simplified_generators", std::to_string(res.simplified_generators)},
                {"simplified_relators", std::to_string(res.simplified_relators)},
                {"route", res.route_taken == km::KernelRoute::materialize ? "materialize"
                                                                          : "stream"},
                {"kernel_h1", res.invariants.to_string()},
            };
            report.total_ms = ms_since(t0);
            return emit(report, k_flags);
        }

        if (chars->parsed()) {
            auto t0 = Clock::now();
            km::Report report;
            report.command = "chars";
            report.inputs = {{"n", std::to_string(c_n)}};
            auto render = [](const km::ClassFunction& f) {
                std::string out;
                for (const mpz_class& v : f.values) {
                    if (!out.empty()) out += " ";
                    out += v.get_str();
                }
                return out;
            };
            km::ClassFunction chi2 = km::class_function_subsets(c_n, 2);
            km::ClassFunction chi3 = km::class_function_subsets(c_n, 3);
            std::string classes;
            for (const km::Partition& p : km::partitions(c_n)) {
                if (!classes.empty()) classes += " ";
                classes += km::partition_name(p);
            }
            report.results = {{"classes", classes},
                             {"chi_2", render(chi2)},
                             {"chi_3", render(chi3)}};
            for (auto label : {km::IrrepLabel::row_n, km::IrrepLabel::row_n1_1,
                               km::IrrepLabel::row_n2_2, km::IrrepLabel::row_n3_3}) {
                report.results.emplace_back("chi_" + km::irrep_label_name(label, c_n),
                                            render(km::class_function_irrep(label, c_n)));
            }
            if (c_verify) {
                km::ClassFunction t = km::class_function_irrep(km::IrrepLabel::row_n, c_n);
                km::ClassFunction v1 = km::class_function_irrep(km::IrrepLabel::row_n1_1, c_n);
                km::ClassFunction v2 = km::class_function_irrep(km::IrrepLabel::row_n2_2, c_n);
                km::ClassFunction v3 = km::class_function_irrep(km::IrrepLabel::row_n3_3, c_n);
                bool id2 = true, id3 = true;
                for (std::size_t i = 0; i < chi2.values.size(); ++i) {
                    id2 = id2 && chi2.values[i] == t.values[i] + v1.values[i] + v2.values[i];
                    id3 = id3 && chi3.values[i] ==
                                     t.values[i] + v1.values[i] + v2.values[i] + v3.values[i];
                }
                report.checks.push_back(
                    km::CheckLine{"chars.chi2_decomposition", id2, "holds",
                                  id2 ? "holds" : "broken", 0});
                report.checks.push_back(
                    km::CheckLine{"chars.chi3_decomposition", id3, "holds",
                                  id3 ? "holds" : "broken", 0});
                bool mn_ok = true;
                const std::pair<km::IrrepLabel, km::Partition> cases[4] = {
                    {km::IrrepLabel::row_n, km::Partition{{c_n}}},
                    {km::IrrepLabel::row_n1_1, km::Partition{{c_n - 1, 1}}},
                    {km::IrrepLabel::row_n2_2, km::Partition{{c_n - 2, 2}}},
                    {km::IrrepLabel::row_n3_3, km::Partition{{c_n - 3, 3}}},
                };
                for (const auto& [label, diagram] : cases)
                    mn_ok = mn_ok && km::class_function_irrep(label, c_n) ==
                                         km::class_function_mn(diagram, c_n);
                report.checks.push_back(
                    km::CheckLine{"chars.closed_forms_match_murnaghan_nakayama", mn_ok, "agree",
                                  mn_ok ? "agree" : "disagree", 0});
            }
            report.total_ms = ms_since(t0);
            return emit(report, c_flags);
        }

        if (verify_all->parsed()) {
            auto t0 = Clock::now();
            km::verify::Options opts;
            opts.n_min = v_nmin;
            opts.n_max = v_nmax;
            opts.include_slow = v_slow;
            opts.seed = v_seed;
            opts.threads = v_threads;
            km::Report report;
            report.command = "verify-all";
            report.inputs = {{"n_min", std::to_string(v_nmin)},
                            {"n_max", std::to_string(v_nmax)},
                            {"include_slow", v_slow ? "true" : "false"},
                            {"seed", std::to_string(v_seed)}};
            report.checks = km::verify::run_all(opts);
            long long passed = 0;
            for (const km::CheckLine& c : report.checks) passed += c.pass ? 1 : 0;
            report.results = {{"checks", std::to_string(report.checks.size())},
                             {"passed", std::to_string(passed)}};
            report.total_ms = ms_since(t0);
            return emit(report, v_flags);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
