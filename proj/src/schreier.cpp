#include "km/schreier.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace km {

namespace {

std::vector<uint8_t> mod2_vector(const IntVec& v) {
    std::vector<uint8_t> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = static_cast<uint8_t>(((v[i] % 2) + 2) % 2);
    return out;
}

std::string coset_prefix(int coset) {
    if (coset < 26) return std::string(1, static_cast<char>('a' + coset));
    return "t" + std::to_string(coset) + "_";
}

}  // namespace

CosetTable coset_table(const Presentation& p, const AbelianHom& h) {
    if (h.modulus == 0)
        throw std::invalid_argument("coset_table: target is infinite (modulus 0)");
    if (!check_well_defined(h, p).empty())
        throw std::invalid_argument("coset_table: hom is not well-defined on the presentation");

    const int g = p.generator_count();
    std::vector<std::vector<uint8_t>> images;
    images.reserve(g);
    for (const IntVec& img : h.images) images.push_back(mod2_vector(img));

    std::map<std::vector<uint8_t>, int> index;
    std::vector<std::vector<uint8_t>> elements;
    std::vector<uint8_t> zero(h.target_dim, 0);
    index.emplace(zero, 0);
    elements.push_back(zero);

    CosetTable t;
    t.num_generators = g;
    for (std::size_t c = 0; c < elements.size(); ++c) {
        t.action.emplace_back(g, -1);
        for (int x = 0; x < g; ++x) {
            std::vector<uint8_t> next = elements[c];
            for (std::size_t i = 0; i < next.size(); ++i) next[i] ^= images[x][i];
            auto [it, fresh] = index.emplace(next, static_cast<int>(elements.size()));
            if (fresh) elements.push_back(std::move(next));
            t.action[c][x] = it->second;
        }
    }
    t.num_cosets = static_cast<int>(elements.size());
    return t;
}

Transversal schreier_transversal(const CosetTable& t) {
    Transversal tr;
    tr.reps.assign(t.num_cosets, Word{});
    std::vector<char> seen(t.num_cosets, 0);
    seen[0] = 1;
    std::vector<int> queue{0};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int c = queue[qi];
        for (int x = 0; x < t.num_generators; ++x) {
            int c2 = t.action[c][x];
            if (!seen[c2]) {
                seen[c2] = 1;
                tr.reps[c2] = tr.reps[c];
                tr.reps[c2].push_back(Letter{x, +1});
                queue.push_back(c2);
            }
        }
    }
    if (queue.size() != static_cast<std::size_t>(t.num_cosets))
        throw std::logic_error("schreier_transversal: table not connected");
    return tr;
}

namespace {

int coset_of_word(const CosetTable& t, const Word& w) {
    int c = 0;
    for (const Letter& l : w) c = t.act(c, l.gen, l.sign);
    return c;
}

}  // namespace

Transversal parse_transversal(const std::string& text, const Presentation& p,
                              const CosetTable& t) {
    auto index = generator_index(p);
    auto lookup = [&index](const std::string& name) {
        auto it = index.find(name);
        return it == index.end() ? -1 : it->second;
    };
    std::vector<Word> words;
    std::string part;
    std::istringstream is(text);
    while (std::getline(is, part, ';')) words.push_back(parse_word(part, lookup));
    if (static_cast<int>(words.size()) != t.num_cosets)
        throw std::invalid_argument("transversal: expected " + std::to_string(t.num_cosets) +
                                    " representatives, got " + std::to_string(words.size()));

    Transversal tr;
    tr.reps.assign(t.num_cosets, Word{});
    std::vector<char> filled(t.num_cosets, 0);
    std::map<Word, char> members;
    for (const Word& w : words) members.emplace(w, 1);
    for (const Word& w : words) {
        int c = coset_of_word(t, w);
        if (filled[c]) throw std::invalid_argument("transversal: two representatives share a coset");
        filled[c] = 1;
        tr.reps[c] = w;
        for (std::size_t cut = 0; cut < w.size(); ++cut) {
            Word prefix(w.begin(), w.begin() + cut);
            if (!members.count(prefix))
                throw std::invalid_argument("transversal: not prefix-closed (Schreier property)");
        }
    }
    if (!tr.reps[0].empty())
        throw std::invalid_argument("transversal: the subgroup coset representative must be empty");
    return tr;
}

Word schreier_rewrite(const CosetTable& t, const Word& w, int start_coset) {
    Word out;
    out.reserve(w.size());
    int c = start_coset;
    for (const Letter& l : w) {
        if (l.sign > 0) {
            out.push_back(Letter{c * t.num_generators + l.gen, +1});
            c = t.act(c, l.gen, +1);
        } else {
            int c2 = t.act(c, l.gen, -1);
            out.push_back(Letter{c2 * t.num_generators + l.gen, -1});
            c = c2;
        }
    }
    return free_reduce(out);
}

RsPresentation rs_presentation(const Presentation& p, const CosetTable& t,
                               const Transversal& tr) {
    RsPresentation rs;
    rs.transversal = tr;
    const int g = t.num_generators;

    std::vector<int> pair_index(static_cast<std::size_t>(t.num_cosets) * g, -1);
    for (int c = 0; c < t.num_cosets; ++c) {
        for (int x = 0; x < g; ++x) {
            SchreierName entry;
            entry.coset = c;
            entry.gen = x;
            entry.name = coset_prefix(c) + p.generators[x];
            Word tx = tr.reps[c];
            tx.push_back(Letter{x, +1});
            entry.trivial = (free_reduce(tx) == tr.reps[t.action[c][x]]);
            if (!entry.trivial) {
                entry.presentation_index = rs.presentation.generator_count();
                pair_index[static_cast<std::size_t>(c) * g + x] = entry.presentation_index;
                rs.presentation.generators.push_back(entry.name);
            }
            rs.naming.push_back(std::move(entry));
        }
    }

    rs.presentation.family = Family::custom;
    rs.presentation.n = p.n;
    rs.presentation.mode = p.mode;

    for (int c = 0; c < t.num_cosets; ++c) {
        Word conj = tr.reps[c];
        for (const Word& r : p.relators) {
            Word w = concat(concat(conj, r), invert(conj));
            Word rewritten = schreier_rewrite(t, w, 0);
            Word mapped;
            mapped.reserve(rewritten.size());
            for (const Letter& l : rewritten) {
                int idx = pair_index[l.gen];
                if (idx >= 0) mapped.push_back(Letter{idx, l.sign});
            }
            rs.presentation.add_relator(mapped);
        }
    }
    return rs;
}

std::string naming_map_to_json(const RsPresentation& rs, const Presentation& p) {
    nlohmann::json j;
    nlohmann::json names = nlohmann::json::array();
    for (const SchreierName& e : rs.naming) {
        names.push_back({{"coset", e.coset},
                         {"generator", p.generators.at(e.gen)},
                         {"name", e.name},
                         {"trivial", e.trivial},
                         {"index", e.presentation_index}});
    }
    j["schreier_generators"] = std::move(names);
    nlohmann::json reps = nlohmann::json::array();
    for (const Word& w : rs.transversal.reps) reps.push_back(format_word(w, p.generators));
    j["transversal"] = std::move(reps);
    return j.dump(2);
}

SparseIntMatrix rs_abelianized_matrix(const Presentation& p, const CosetTable& t,
                                      const Transversal& tr) {
    const int g = t.num_generators;
    std::vector<int> pair_index(static_cast<std::size_t>(t.num_cosets) * g, -1);
    int next = 0;
    for (int c = 0; c < t.num_cosets; ++c) {
        for (int x = 0; x < g; ++x) {
            Word tx = tr.reps[c];
            tx.push_back(Letter{x, +1});
            if (free_reduce(tx) != tr.reps[t.action[c][x]])
                pair_index[static_cast<std::size_t>(c) * g + x] = next++;
        }
    }

    SparseIntMatrix m(t.num_cosets * static_cast<int>(p.relators.size()), next);
    int row = 0;
    for (int c = 0; c < t.num_cosets; ++c) {
        for (const Word& r : p.relators) {
            int cur = c;
            for (const Letter& l : r) {
                int at;
                if (l.sign > 0) {
                    at = cur;
                    cur = t.act(cur, l.gen, +1);
                } else {
                    cur = t.act(cur, l.gen, -1);
                    at = cur;
                }
                int idx = pair_index[static_cast<std::size_t>(at) * g + l.gen];
                if (idx >= 0) m.add(row, idx, mpz_class(l.sign));
            }
            ++row;
        }
    }
    return m;
}

KernelH1Result h1_kernel(const Presentation& p, const AbelianHom& h,
                         const KernelH1Options& opts) {
    CosetTable table = coset_table(p, h);
    Transversal tr = opts.transversal ? *opts.transversal : schreier_transversal(table);

    KernelH1Result out;
    out.num_cosets = table.num_cosets;
    out.schreier_pairs = static_cast<long long>(table.num_cosets) * table.num_generators;
    out.transversal = tr;

    KernelRoute route = opts.route;
    if (route == KernelRoute::automatic)
        route = (table.num_cosets <= 64) ? KernelRoute::materialize : KernelRoute::stream;
    out.route_taken = route;

    if (route == KernelRoute::materialize) {
        RsPresentation rs = rs_presentation(p, table, tr);
        out.rs_generators = rs.presentation.generator_count();
        out.rs_relators = static_cast<long long>(rs.presentation.relators.size());
        TietzeResult simplified = tietze_simplify(rs.presentation, opts.tietze_max_rounds);
        out.simplified_generators = simplified.presentation.generator_count();
        out.simplified_relators = static_cast<long long>(simplified.presentation.relators.size());
        out.invariants = h1(simplified.presentation, opts.snf);
    } else {
        SparseIntMatrix m = rs_abelianized_matrix(p, table, tr);
        out.rs_generators = m.cols();
        out.rs_relators = m.rows();
        out.invariants = cokernel_invariants(m, opts.snf);
    }
    return out;
}

}  // namespace km
