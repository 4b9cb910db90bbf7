#include "km/families.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace km {

std::vector<Quint> all_ordered_quints(int n) {
    std::vector<Quint> out;
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            for (int c = 1; c <= n; ++c)
                for (int d = 1; d <= n; ++d)
                    for (int e = 1; e <= n; ++e) {
                        if (a == b || a == c || a == d || a == e || b == c || b == d || b == e ||
                            c == d || c == e || d == e)
                            continue;
                        out.push_back(Quint{a, b, c, d, e});
                    }
    return out;
}

std::vector<Quint> increasing_quints(int n) {
    std::vector<Quint> out;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c)
                for (int d = c + 1; d <= n; ++d)
                    for (int e = d + 1; e <= n; ++e) out.push_back(Quint{a, b, c, d, e});
    return out;
}

std::array<std::pair<Quad, int>, 5> pentagon_letters(const Quint& t, bool signed_variant) {
    const int i = t[0], j = t[1], k = t[2], l = t[3], m = t[4];
    int s = signed_variant ? -1 : +1;
    return {std::pair<Quad, int>{Quad(i, j, k, l), +1}, {Quad(i, j, l, m), +1},
            {Quad(j, k, l, m), +1}, {Quad(i, j, k, m), s}, {Quad(i, k, l, m), s}};
}

namespace {

std::vector<int> sorted_entries(const Quad& q) {
    std::vector<int> s(q.e.begin(), q.e.end());
    std::sort(s.begin(), s.end());
    return s;
}

int overlap(const std::vector<int>& a, const std::vector<int>& b) {
    int cnt = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            ++cnt;
            ++i;
            ++j;
        } else if (a[i] < b[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    return cnt;
}

struct Builder {
    Presentation p;
    std::map<Quad, int> index;
    RelatorCounts counts;

    void set_generators(const std::vector<Quad>& quads) {
        for (const Quad& q : quads) {
            index.emplace(q, p.generator_count());
            p.generators.push_back(quad_name(q));
        }
    }

    Letter letter(const Quad& q, int sign, bool fold_signed) const {
        auto it = index.find(q);
        if (it != index.end()) return Letter{it->second, sign};
        // non-canonical symbol in reduced mode: fold onto its canonical quad
        CanonicalQuad c = canonical_quad(q, fold_signed);
        auto cit = index.find(c.quad);
        if (cit == index.end()) throw std::logic_error("builder: unindexed quad");
        return Letter{cit->second, sign * c.sign};
    }

    void involutive_relators() {
        for (int g = 0; g < p.generator_count(); ++g) {
            p.add_relator(Word{Letter{g, +1}, Letter{g, +1}});
            ++counts.involutive;
        }
    }

    // (ijkl)(jkli)^-1 and (ijkl)(lkji)^-1; in the signed families the images
    // are inverses, so the relators are (ijkl)(jkli) and (ijkl)(lkji).
    void dihedral_relators(const std::vector<Quad>& quads, bool signed_variant) {
        int s = signed_variant ? +1 : -1;
        for (const Quad& q : quads) {
            p.add_relator(Word{letter(q, +1, signed_variant), letter(shift_quad(q), s, signed_variant)});
            p.add_relator(Word{letter(q, +1, signed_variant), letter(reverse_quad(q), s, signed_variant)});
            counts.dihedral += 2;
        }
    }

    // One relator per unordered symbol pair whose underlying 4-sets meet in
    // at most two elements; self-pairs excluded.
    void commutative_relators(const std::vector<Quad>& quads, bool fold_signed) {
        std::vector<std::vector<int>> support;
        std::vector<std::vector<Quad>> by_subset;
        std::map<std::vector<int>, int> subset_index;
        for (const Quad& q : quads) {
            std::vector<int> s = sorted_entries(q);
            auto [it, fresh] = subset_index.emplace(s, static_cast<int>(support.size()));
            if (fresh) {
                support.push_back(s);
                by_subset.emplace_back();
            }
            by_subset[it->second].push_back(q);
        }
        for (std::size_t a = 0; a < support.size(); ++a) {
            for (std::size_t b = a + 1; b < support.size(); ++b) {
                if (overlap(support[a], support[b]) > 2) continue;
                for (const Quad& x : by_subset[a]) {
                    for (const Quad& y : by_subset[b]) {
                        Letter lx = letter(x, +1, fold_signed);
                        Letter ly = letter(y, +1, fold_signed);
                        p.add_relator(Word{lx, ly, inverse(lx), inverse(ly)});
                        ++counts.commutative;
                    }
                }
            }
        }
    }

    void pentagon_relators(const std::vector<Quint>& tuples, bool signed_variant,
                           bool fold_signed) {
        for (const Quint& t : tuples) {
            Word w;
            for (const auto& [q, s] : pentagon_letters(t, signed_variant))
                w.push_back(letter(q, s, fold_signed));
            p.add_relator(w);
            ++counts.pentagon;
        }
    }
};

// The 12 pentagon relators per 5-subset that survive the dihedral/involutive
// reduction in gamma; digits are positions into the sorted 5-subset.
constexpr int kReducedPentagonPatterns[12][5][4] = {
    {{1, 2, 3, 4}, {1, 2, 4, 5}, {2, 3, 4, 5}, {1, 2, 3, 5}, {1, 3, 4, 5}},  // (a)
    {{1, 2, 3, 5}, {1, 2, 5, 4}, {2, 3, 5, 4}, {1, 2, 3, 4}, {1, 3, 5, 4}},  // (b)
    {{1, 2, 4, 3}, {1, 2, 3, 5}, {2, 4, 3, 5}, {1, 2, 4, 5}, {1, 4, 3, 5}},  // (c)
    {{1, 2, 4, 5}, {1, 2, 5, 3}, {2, 3, 5, 4}, {1, 2, 4, 3}, {1, 3, 5, 4}},  // (d)
    {{1, 2, 5, 3}, {1, 2, 3, 4}, {2, 4, 3, 5}, {1, 2, 5, 4}, {1, 4, 3, 5}},  // (e)
    {{1, 2, 5, 4}, {1, 2, 4, 3}, {2, 3, 4, 5}, {1, 2, 5, 3}, {1, 3, 4, 5}},  // (f)
    {{1, 3, 2, 4}, {1, 3, 4, 5}, {2, 3, 5, 4}, {1, 3, 2, 5}, {1, 2, 4, 5}},  // (g)
    {{1, 3, 2, 5}, {1, 3, 5, 4}, {2, 3, 4, 5}, {1, 3, 2, 4}, {1, 2, 5, 4}},  // (h)
    {{1, 3, 2, 4}, {1, 4, 3, 5}, {2, 3, 5, 4}, {1, 4, 2, 5}, {1, 2, 3, 5}},  // (i)
    {{1, 4, 2, 5}, {1, 3, 5, 4}, {2, 4, 3, 5}, {1, 3, 2, 4}, {1, 2, 5, 3}},  // (j)
    {{1, 3, 2, 5}, {1, 4, 3, 5}, {2, 3, 4, 5}, {1, 4, 2, 5}, {1, 2, 3, 4}},  // (k)
    {{1, 4, 2, 5}, {1, 3, 4, 5}, {2, 4, 3, 5}, {1, 3, 2, 5}, {1, 2, 4, 3}},  // (l)
};

void reduced_gamma_pentagons(Builder& b, int n) {
    std::vector<int> subset;
    auto emit = [&](const std::vector<int>& s) {
        for (const auto& pattern : kReducedPentagonPatterns) {
            Word w;
            for (int li = 0; li < 5; ++li) {
                Quad q(s[pattern[li][0] - 1], s[pattern[li][1] - 1], s[pattern[li][2] - 1],
                       s[pattern[li][3] - 1]);
                w.push_back(b.letter(q, +1, false));
            }
            b.p.add_relator(w);
            ++b.counts.pentagon;
        }
    };
    for (const Quint& t : increasing_quints(n)) emit(std::vector<int>(t.begin(), t.end()));
}

}  // namespace

Presentation build_gamma(int n, EnumMode mode, RelatorCounts* counts) {
    if (n < 4) throw std::invalid_argument("build_gamma: n < 4");
    Builder b;
    b.p.family = Family::gamma;
    b.p.n = n;
    b.p.mode = mode;
    if (mode == EnumMode::full) {
        std::vector<Quad> quads = all_ordered_quads(n);
        b.set_generators(quads);
        b.involutive_relators();
        b.dihedral_relators(quads, false);
        b.commutative_relators(quads, false);
        b.pentagon_relators(all_ordered_quints(n), false, false);
    } else {
        std::vector<Quad> quads = canonical_quads(n);
        b.set_generators(quads);
        b.involutive_relators();
        b.commutative_relators(quads, false);
        reduced_gamma_pentagons(b, n);
    }
    if (counts) *counts = b.counts;
    return std::move(b.p);
}

Presentation build_gamma_hat(int n, EnumMode mode, RelatorCounts* counts) {
    if (n < 4) throw std::invalid_argument("build_gamma_hat: n < 4");
    Builder b;
    b.p.family = Family::gamma_hat;
    b.p.n = n;
    b.p.mode = mode;
    if (mode == EnumMode::full) {
        std::vector<Quad> quads = all_ordered_quads(n);
        b.set_generators(quads);
        b.dihedral_relators(quads, true);
        b.commutative_relators(quads, true);
        b.pentagon_relators(all_ordered_quints(n), true, false);
    } else {
        // The 12-relator pentagon reduction needs involutivity, so the signed
        // family keeps the pentagon set over all ordered 5-tuples, folded
        // through the signed dihedral identification.
        std::vector<Quad> quads = canonical_quads(n);
        b.set_generators(quads);
        b.commutative_relators(quads, true);
        b.pentagon_relators(all_ordered_quints(n), true, true);
    }
    if (counts) *counts = b.counts;
    return std::move(b.p);
}

Presentation build_delta(int n, bool hat, RelatorCounts* counts) {
    if (n < 4) throw std::invalid_argument("build_delta: n < 4");
    Builder b;
    b.p.family = hat ? Family::delta_hat : Family::delta;
    b.p.n = n;
    b.p.mode = EnumMode::full;
    std::vector<Quad> quads = increasing_quads(n);
    b.set_generators(quads);
    if (!hat) b.involutive_relators();
    b.commutative_relators(quads, false);
    b.pentagon_relators(increasing_quints(n), hat, false);
    if (counts) *counts = b.counts;
    return std::move(b.p);
}

Presentation build_family(Family f, int n, EnumMode mode, RelatorCounts* counts) {
    switch (f) {
        case Family::gamma: return build_gamma(n, mode, counts);
        case Family::gamma_hat: return build_gamma_hat(n, mode, counts);
        case Family::delta: return build_delta(n, false, counts);
        case Family::delta_hat: return build_delta(n, true, counts);
        case Family::custom: break;
    }
    throw std::invalid_argument("build_family: no builder for custom presentations");
}

std::vector<Quad> lambda_generators(int n, Family family) {
    if (n < 4) throw std::invalid_argument("lambda_generators: n < 4");
    std::vector<Quad> out;
    if (family == Family::delta || family == Family::delta_hat) {
        for (int j = 2; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l) out.push_back(Quad(1, j, k, l));
        return out;
    }
    for (int k = 4; k <= n; ++k) out.push_back(Quad(1, 2, 3, k));  // (G1)
    for (int i = 3; i <= n; ++i)
        for (int k = i + 1; k <= n; ++k) out.push_back(Quad(1, i, 2, k));  // (G2)
    for (int i = 2; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = i + 1; k < j; ++k) out.push_back(Quad(1, i, j, k));  // (G3)
    return out;
}

long long lambda_size_closed_form(int n) {
    return static_cast<long long>(n - 3) * (static_cast<long long>(n) * n + 2) / 6;
}

long long lambda_size_binomial(int n) { return binomial(n, 3) - 1; }

Presentation delta5_four_generator_presentation() {
    Presentation p;
    p.family = Family::custom;
    p.n = 5;
    p.generators = {"(1245)", "(1234)", "(1345)", "(1235)"};
    for (int g = 0; g < 4; ++g) p.add_relator(Word{Letter{g, +1}, Letter{g, +1}});
    Word pent;
    for (int rep = 0; rep < 2; ++rep)
        for (int g = 0; g < 4; ++g) pent.push_back(Letter{g, +1});
    p.add_relator(pent);
    return p;
}

Presentation delta5_index2_subgroup_presentation() {
    Presentation p;
    p.family = Family::custom;
    p.n = 5;
    p.generators = {"a", "b", "c"};
    const int a = 0, bb = 1, c = 2;
    p.add_relator(Word{Letter{a, +1}, Letter{c, +1}, Letter{a, +1}, Letter{c, +1}});
    Word w;
    for (int rep = 0; rep < 2; ++rep) {
        w.push_back(Letter{bb, +1});
        w.push_back(Letter{c, -1});
        w.push_back(Letter{bb, -1});
        w.push_back(Letter{a, -1});
    }
    p.add_relator(w);
    return p;
}

}  // namespace km
