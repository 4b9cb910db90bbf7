#include "km/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "km/families.hpp"
#include "km/homs.hpp"
#include "km/oracles.hpp"
#include "km/rewrite.hpp"
#include "km/schreier.hpp"
#include "km/symchar.hpp"

namespace km {
namespace verify {

namespace {

using Clock = std::chrono::steady_clock;

struct Suite {
    const Options& opts;
    std::vector<CheckLine> lines;

    template <typename Fn>
    void check(const std::string& name, double budget_ms, Fn&& fn) {
        CheckLine line;
        line.name = name;
        auto t0 = Clock::now();
        try {
            fn(line);
        } catch (const std::exception& e) {
            line.pass = false;
            line.actual = std::string("exception: ") + e.what();
        }
        line.ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        if (budget_ms > 0 && line.ms > budget_ms) {
            line.pass = false;
            std::ostringstream os;
            os << line.actual << " [over budget " << budget_ms / 1000.0 << "s]";
            line.actual = os.str();
        }
        if (opts.progress) opts.progress(line.name, line.pass ? 1 : 0, 1);
        lines.push_back(std::move(line));
    }
};

void expect_equal(CheckLine& line, const std::string& expected, const std::string& actual) {
    line.expected = expected;
    line.actual = actual;
    line.pass = (expected == actual);
}

// Chunked worker pool over [0, count); fn must be safe to call concurrently.
template <typename Fn>
void parallel_for(int threads, std::size_t count, Fn&& fn) {
    threads = std::max(1, threads);
    if (threads == 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&]() {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        });
    for (std::thread& t : pool) t.join();
}

std::string torsion2(long long k) {
    AbelianInvariants inv;
    inv.torsion.assign(static_cast<std::size_t>(k), mpz_class(2));
    return inv.to_string();
}

std::string free_part(long long k) {
    AbelianInvariants inv;
    inv.free_rank = k;
    return inv.to_string();
}

// one row per generator: [phi3_mod2 | phi2_mod2] images
SparseIntMatrix stacked_image_matrix(const Presentation& p) {
    AbelianHom h3 = make_hom("phi3_mod2", p);
    AbelianHom h2 = make_hom("phi2_mod2", p);
    SparseIntMatrix m(p.generator_count(), h3.target_dim + h2.target_dim);
    for (int g = 0; g < p.generator_count(); ++g) {
        for (int c = 0; c < h3.target_dim; ++c)
            if (h3.images[g][c]) m.set(g, c, 1);
        for (int c = 0; c < h2.target_dim; ++c)
            if (h2.images[g][c]) m.set(g, h3.target_dim + c, 1);
    }
    return m;
}

void criterion1_abelianizations(Suite& s) {
    const int lo = std::max(4, s.opts.n_min);
    const int hi = std::min(6, s.opts.n_max);
    for (int n = lo; n <= hi; ++n) {
        long long N = lambda_size_binomial(n);
        s.check("c1.h1.gamma.n" + std::to_string(n) + ".full", 60000, [&](CheckLine& line) {
            expect_equal(line, torsion2(N), h1(build_gamma(n, EnumMode::full)).to_string());
        });
        s.check("c1.h1.gamma_hat.n" + std::to_string(n) + ".full", 60000, [&](CheckLine& line) {
            expect_equal(line, free_part(N), h1(build_gamma_hat(n, EnumMode::full)).to_string());
        });
    }
    if (s.opts.include_slow) {
        s.check("c1.h1.gamma.n7.reduced", 600000, [&](CheckLine& line) {
            expect_equal(line, torsion2(lambda_size_binomial(7)),
                         h1(build_gamma(7, EnumMode::reduced)).to_string());
        });
        s.check("c1.h1.gamma_hat.n7.reduced", 600000, [&](CheckLine& line) {
            expect_equal(line, free_part(lambda_size_binomial(7)),
                         h1(build_gamma_hat(7, EnumMode::reduced)).to_string());
        });
    }
    for (int n = 4; n <= 8; ++n) {
        long long np = binomial(n - 1, 3);
        s.check("c1.h1.delta.n" + std::to_string(n), 60000, [&](CheckLine& line) {
            expect_equal(line, torsion2(np), h1(build_delta(n, false)).to_string());
        });
        s.check("c1.h1.delta_hat.n" + std::to_string(n), 60000, [&](CheckLine& line) {
            expect_equal(line, free_part(np), h1(build_delta(n, true)).to_string());
        });
    }
    s.check("c1.lambda_size.closed_forms.n4..12", 0, [&](CheckLine& line) {
        bool ok = true;
        for (int n = 4; n <= 12; ++n)
            ok = ok && lambda_size_closed_form(n) == lambda_size_binomial(n) &&
                 static_cast<long long>(lambda_generators(n, Family::gamma).size()) ==
                     lambda_size_binomial(n);
        expect_equal(line, "agree", ok ? "agree" : "disagree");
    });
    s.check("c1.reduced_mode_matches_full", 120000, [&](CheckLine& line) {
        bool ok = true;
        for (int n = lo; n <= hi; ++n) {
            ok = ok && h1(build_gamma(n, EnumMode::reduced)) == h1(build_gamma(n, EnumMode::full));
            ok = ok && h1(build_gamma_hat(n, EnumMode::reduced)) ==
                           h1(build_gamma_hat(n, EnumMode::full));
        }
        expect_equal(line, "equal", ok ? "equal" : "different");
    });
    s.check("c1.hat_to_unhat_h1_surjection", 60000, [&](CheckLine& line) {
        // The identity on generator symbols carries relations of the signed
        // family to relations of the unsigned one: mod 2, the signed row
        // space lies inside the unsigned one, and both H1 counts are N_n.
        bool ok = true;
        for (int n = lo; n <= hi; ++n) {
            Presentation hat = build_gamma_hat(n, EnumMode::full);
            Presentation unhat = build_gamma(n, EnumMode::full);
            AbelianInvariants ih = h1(hat), iu = h1(unhat);
            ok = ok && ih.free_rank == lambda_size_binomial(n) && ih.torsion.empty();
            ok = ok && iu.free_rank == 0 &&
                 static_cast<long long>(iu.torsion.size()) == lambda_size_binomial(n);
            SparseIntMatrix a = abelianized_relation_matrix(hat);
            SparseIntMatrix b = abelianized_relation_matrix(unhat);
            ok = ok && rank_mod_p(vstack(a, b), 2) == rank_mod_p(b, 2);
        }
        expect_equal(line, "surjection", ok ? "surjection" : "mismatch");
    });
}

void criterion2_lattice_images(Suite& s) {
    for (int n = 4; n <= 7; ++n) {
        s.check("c2.phi3_lattice.n" + std::to_string(n), 60000, [&](CheckLine& line) {
            std::vector<IntVec> vectors;
            for (const Quad& q : all_ordered_quads(n)) vectors.push_back(phi3(q, n));
            LatticeInvariants li = lattice_image_invariants(vectors, subset_basis(n, 3).size());
            std::ostringstream expected, actual;
            expected << "image=" << free_part(lambda_size_binomial(n));
            actual << "image=" << li.image.to_string();
            if (n == 4) {
                expected << " quotient=Z + (Z/2)^2";
                actual << " quotient=" << li.quotient.to_string();
            } else {
                expected << " quotient_torsion=nontrivial";
                actual << " quotient_torsion="
                       << (li.quotient.torsion.empty() ? "trivial" : "nontrivial");
            }
            expect_equal(line, expected.str(), actual.str());
        });
    }
}

void criterion3_mod2_ranks(Suite& s) {
    for (int n = 4; n <= 8; ++n) {
        s.check("c3.rank2.n" + std::to_string(n), 60000, [&](CheckLine& line) {
            Presentation g = build_gamma(n, EnumMode::full);
            long long r3 = rank_mod_p(hom_image_matrix(make_hom("phi3_mod2", g)), 2);
            long long rs = rank_mod_p(stacked_image_matrix(g), 2);
            long long rb = rank_mod_p(simplex_boundary_matrix(n, 3), 2);
            std::ostringstream expected, actual;
            expected << "phi3=" << binomial(n - 1, 3) << " stacked=" << lambda_size_binomial(n)
                     << " boundary=" << binomial(n - 1, 3);
            actual << "phi3=" << r3 << " stacked=" << rs << " boundary=" << rb;
            expect_equal(line, expected.str(), actual.str());
        });
    }
    s.check("c3.boundary_chain_complex.n4..8", 60000, [&](CheckLine& line) {
        bool ok = true;
        for (int n = 4; n <= 8; ++n)
            for (int k = 2; k <= n - 1; ++k)
                ok = ok && multiply(simplex_boundary_matrix(n, k - 1),
                                    simplex_boundary_matrix(n, k))
                                   .nnz() == 0;
        expect_equal(line, "zero", ok ? "zero" : "nonzero");
    });
}

void criterion4_reidemeister_schreier(Suite& s) {
    s.check("c4.kernel_nu", 10000, [&](CheckLine& line) {
        Presentation theta = build_gamma(5, EnumMode::reduced);
        AbelianHom nu_hom = make_hom("nu", theta);
        KernelH1Result res = h1_kernel(theta, nu_hom);
        std::string transversal;
        for (const Word& w : res.transversal.reps) {
            if (!transversal.empty()) transversal += ";";
            transversal += format_word(w, theta.generators);
        }
        std::ostringstream expected, actual;
        expected << "theta=15/27 transversal=1;(1234) rs=29/54 simplified=17/30 "
                 << "h1=Z^2 + (Z/2)^6";
        actual << "theta=" << theta.generator_count() << "/" << theta.relators.size()
               << " transversal=" << transversal << " rs=" << res.rs_generators << "/"
               << res.rs_relators << " simplified=" << res.simplified_generators << "/"
               << res.simplified_relators << " h1=" << res.invariants.to_string();
        expect_equal(line, expected.str(), actual.str());
    });
    if (!s.opts.include_slow) return;
    s.check("c4.kernel_commutator_subgroup.512cosets", 1800000, [&](CheckLine& line) {
        Presentation theta = build_gamma(5, EnumMode::reduced);
        AbelianHom ab = make_hom("abelianization", theta);
        KernelH1Options kopts;
        kopts.snf.progress = s.opts.progress;
        KernelH1Result res = h1_kernel(theta, ab, kopts);
        std::ostringstream expected, actual;
        expected << "cosets=512 h1=Z^145 + (Z/2)^18";
        actual << "cosets=" << res.num_cosets << " h1=" << res.invariants.to_string();
        expect_equal(line, expected.str(), actual.str());
    });
    s.check("c4.kernel_commutator_subgroup.rank_screen", 600000, [&](CheckLine& line) {
        // independent GF(p) ranks of the streamed kernel relation matrix:
        // rank_3 = 7169 - 145, and rank_2 drops by the 18 torsion factors
        Presentation theta = build_gamma(5, EnumMode::reduced);
        AbelianHom ab = make_hom("abelianization", theta);
        CosetTable t = coset_table(theta, ab);
        Transversal tr = schreier_transversal(t);
        SparseIntMatrix m = rs_abelianized_matrix(theta, t, tr);
        std::ostringstream expected, actual;
        expected << "rank2=7006 rank3=7024";
        actual << "rank2=" << rank_mod_p(m, 2) << " rank3=" << rank_mod_p(m, 3);
        expect_equal(line, expected.str(), actual.str());
    });
}

void criterion5_delta5(Suite& s) {
    s.check("c5.delta5_index2_subgroup", 60000, [&](CheckLine& line) {
        Presentation abc = delta5_index2_subgroup_presentation();
        Presentation rewritten = delta5_four_generator_presentation();
        AbelianHom eps = make_hom("eps_all_ones", rewritten);
        KernelH1Result res = h1_kernel(rewritten, eps);
        std::ostringstream expected, actual;
        expected << "h1(abc)=Z^2 + Z/2 kernel=Z^2 + Z/2 cosets=2 "
                 << "h1(delta5)=(Z/2)^4 h1(rewritten)=(Z/2)^4";
        actual << "h1(abc)=" << h1(abc).to_string() << " kernel=" << res.invariants.to_string()
               << " cosets=" << res.num_cosets
               << " h1(delta5)=" << h1(build_delta(5, false)).to_string()
               << " h1(rewritten)=" << h1(rewritten).to_string();
        expect_equal(line, expected.str(), actual.str());
    });
}

void criterion6_rewriting(Suite& s) {
    for (int n = 5; n <= 7; ++n) {
        for (Family family : {Family::gamma_hat, Family::gamma}) {
            std::string name = "c6.rewrite." + family_name(family) + ".n" + std::to_string(n);
            s.check(name, 300000, [&, n, family](CheckLine& line) {
                Presentation p = build_family(family, n, EnumMode::full);
                LambdaRewriter rw(p);
                std::vector<Quad> quads = generator_quads(p);
                std::set<Quad> lambda(rw.lambda().begin(), rw.lambda().end());
                const int modulus = (family == Family::gamma) ? 2 : 0;
                auto image = [&](const Word& w, bool three) {
                    IntVec acc((three ? subset_basis(n, 3) : subset_basis(n, 2)).size(), 0);
                    for (const Letter& l : w) {
                        IntVec v = three ? phi3(quads[l.gen], n) : phi2(quads[l.gen], n);
                        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += l.sign * v[i];
                    }
                    if (modulus)
                        for (long long& x : acc) x = ((x % modulus) + modulus) % modulus;
                    return acc;
                };
                std::atomic<long long> failures{0};
                parallel_for(s.opts.threads, quads.size(), [&](std::size_t gi) {
                    RewriteResult r = rw.rewrite(quads[gi]);
                    bool ok = verify_certificate(r.certificate, p);
                    for (const Letter& l : r.word) ok = ok && lambda.count(quads[l.gen]) == 1;
                    Word original{Letter{static_cast<int>(gi), +1}};
                    ok = ok && image(original, true) == image(r.word, true);
                    ok = ok && image(original, false) == image(r.word, false);
                    if (!ok) failures.fetch_add(1);
                });
                std::ostringstream expected, actual;
                expected << "generators=" << quads.size() << " failures=0 lambda="
                         << lambda_size_binomial(n);
                actual << "generators=" << quads.size() << " failures=" << failures.load()
                       << " lambda=" << rw.lambda().size();
                expect_equal(line, expected.str(), actual.str());
            });
        }
    }
}

void criterion7_characters(Suite& s) {
    s.check("c7.character_identities.n5..10", 10000, [&](CheckLine& line) {
        bool ok = true;
        for (int n = 5; n <= 10; ++n) {
            ClassFunction chi2 = class_function_subsets(n, 2);
            ClassFunction chi3 = class_function_subsets(n, 3);
            ClassFunction t = class_function_irrep(IrrepLabel::row_n, n);
            ClassFunction v1 = class_function_irrep(IrrepLabel::row_n1_1, n);
            ClassFunction v2 = class_function_irrep(IrrepLabel::row_n2_2, n);
            ClassFunction v3 = class_function_irrep(IrrepLabel::row_n3_3, n);
            for (std::size_t i = 0; i < chi2.values.size(); ++i) {
                ok = ok && chi2.values[i] == t.values[i] + v1.values[i] + v2.values[i];
                ok = ok &&
                     chi3.values[i] == t.values[i] + v1.values[i] + v2.values[i] + v3.values[i];
            }
            if (n == 5)
                for (const mpz_class& v : v3.values) ok = ok && v == 0;
        }
        expect_equal(line, "hold", ok ? "hold" : "broken");
    });
    s.check("c7.chi_irrep_equals_chi_mn.n5..9", 10000, [&](CheckLine& line) {
        bool ok = true;
        for (int n = 5; n <= 9; ++n) {
            const std::pair<IrrepLabel, Partition> cases[4] = {
                {IrrepLabel::row_n, Partition{{n}}},
                {IrrepLabel::row_n1_1, Partition{{n - 1, 1}}},
                {IrrepLabel::row_n2_2, Partition{{n - 2, 2}}},
                {IrrepLabel::row_n3_3, Partition{{n - 3, 3}}},
            };
            for (const auto& [label, diagram] : cases)
                ok = ok && class_function_irrep(label, n) == class_function_mn(diagram, n);
        }
        expect_equal(line, "agree", ok ? "agree" : "disagree");
    });
    s.check("c7.hook_dimensions", 10000, [&](CheckLine& line) {
        bool ok = true;
        for (int n = 5; n <= 10; ++n) {
            mpz_class d1 = hook_dim(Partition{{n - 1, 1}});
            mpz_class d2 = hook_dim(Partition{{n - 2, 2}});
            ok = ok && d1 == n - 1;
            ok = ok && d2 == n * (n - 3) / 2;
            if (n >= 6) {
                mpz_class d3 = hook_dim(Partition{{n - 3, 3}});
                ok = ok && d3 == n * (n - 1) * (n - 5) / 6;
                ok = ok && d1 + d2 + d3 == static_cast<long>(lambda_size_binomial(n));
            } else {
                ok = ok && d1 + d2 == static_cast<long>(lambda_size_binomial(5));
            }
        }
        expect_equal(line, "match", ok ? "match" : "mismatch");
    });
}

void criterion8_property_suites(Suite& s) {
    s.check("c8.snf_vs_minor_gcd_oracle.500", 120000, [&](CheckLine& line) {
        std::mt19937_64 rng(s.opts.seed);
        std::uniform_int_distribution<int> entry(-9, 9);
        std::uniform_int_distribution<int> dim(1, 5);
        long long failures = 0;
        for (int trial = 0; trial < 500; ++trial) {
            int r = dim(rng), c = dim(rng);
            SparseIntMatrix m(r, c);
            DenseIntMatrix d(r, std::vector<mpz_class>(c));
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < c; ++j) {
                    int v = entry(rng);
                    d[i][j] = v;
                    if (v) m.set(i, j, v);
                }
            if (smith_normal_form(m).factors != oracle::invariant_factors_via_minor_gcd(d))
                ++failures;
        }
        expect_equal(line, "failures=0", "failures=" + std::to_string(failures));
    });
    s.check("c8.tietze_preserves_h1.corpus", 300000, [&](CheckLine& line) {
        std::vector<Presentation> corpus;
        corpus.push_back(build_gamma(4, EnumMode::full));
        corpus.push_back(build_gamma(5, EnumMode::full));
        corpus.push_back(build_gamma(5, EnumMode::reduced));
        corpus.push_back(build_gamma(6, EnumMode::reduced));
        corpus.push_back(build_gamma_hat(4, EnumMode::full));
        corpus.push_back(build_gamma_hat(5, EnumMode::full));
        corpus.push_back(build_gamma_hat(6, EnumMode::reduced));
        for (int n = 4; n <= 7; ++n) {
            corpus.push_back(build_delta(n, false));
            corpus.push_back(build_delta(n, true));
        }
        corpus.push_back(delta5_four_generator_presentation());
        corpus.push_back(delta5_index2_subgroup_presentation());
        {
            Presentation theta = build_gamma(5, EnumMode::reduced);
            CosetTable t = coset_table(theta, make_hom("nu", theta));
            corpus.push_back(rs_presentation(theta, t, schreier_transversal(t)).presentation);
        }
        long long failures = 0;
        for (const Presentation& p : corpus) {
            TietzeResult t = tietze_simplify(p);
            if (!(h1(t.presentation) == h1(p)) ||
                t.presentation.generator_count() > p.generator_count())
                ++failures;
        }
        std::ostringstream actual;
        actual << "corpus=" << corpus.size() << " failures=" << failures;
        expect_equal(line, "corpus=" + std::to_string(corpus.size()) + " failures=0",
                     actual.str());
    });
    s.check("c8.free_reduction_properties.1000", 60000, [&](CheckLine& line) {
        std::mt19937_64 rng(s.opts.seed ^ 0x9e3779b97f4a7c15ull);
        std::uniform_int_distribution<int> gen(0, 5), sign(0, 1), len(0, 40);
        long long failures = 0;
        for (int trial = 0; trial < 1000; ++trial) {
            Word w;
            int length = len(rng);
            for (int i = 0; i < length; ++i) w.push_back(Letter{gen(rng), sign(rng) ? 1 : -1});
            Word r = free_reduce(w);
            bool ok = r.size() <= w.size() && free_reduce(r) == r && is_freely_reduced(r);
            ok = ok && concat(r, invert(r)).empty();
            auto cyc = cyclic_reduce(r);
            ok = ok && concat(concat(cyc.conjugator, cyc.core), invert(cyc.conjugator)) == r;
            if (!ok) ++failures;
        }
        expect_equal(line, "failures=0", "failures=" + std::to_string(failures));
    });
    s.check("c8.certificate_tamper_detection", 120000, [&](CheckLine& line) {
        Presentation p = build_gamma_hat(5, EnumMode::full);
        LambdaRewriter rw(p);
        long long tampered_accepted = 0, checked = 0;
        for (const Quad& q : generator_quads(p)) {
            RewriteResult r = rw.rewrite(q);
            if (r.certificate.moves.empty()) continue;
            Certificate bad = r.certificate;
            const Word& rel = p.relators[bad.moves[0].relator];
            bad.moves[0].rotation = (bad.moves[0].rotation + 1) % static_cast<int>(rel.size());
            ++checked;
            if (verify_certificate(bad, p)) ++tampered_accepted;
        }
        std::ostringstream actual;
        actual << "checked=" << checked << " accepted=" << tampered_accepted;
        expect_equal(line, "checked=" + std::to_string(checked) + " accepted=0", actual.str());
    });
}

}  // namespace

std::vector<CheckLine> run_all(const Options& opts) {
    Suite s{opts, {}};
    criterion1_abelianizations(s);
    criterion2_lattice_images(s);
    criterion3_mod2_ranks(s);
    criterion4_reidemeister_schreier(s);
    criterion5_delta5(s);
    criterion6_rewriting(s);
    criterion7_characters(s);
    criterion8_property_suites(s);
    return std::move(s.lines);
}

}  // namespace verify
}  // namespace km
