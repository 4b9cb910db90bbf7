#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "km/presentation.hpp"

namespace km {

namespace {

struct Candidate {
    long long growth = 0;
    int gen = -1;
    int relator = -1;
    Word replacement;  // substitute for gen^+1

    bool better_than(const Candidate& o) const {
        if (gen < 0) return false;
        if (o.gen < 0) return true;
        if (growth != o.growth) return growth < o.growth;
        if (gen != o.gen) return gen < o.gen;
        return relator < o.relator;
    }
};

std::string render(const Word& w, const std::vector<std::string>& names) {
    return format_word(w, names);
}

}  // namespace

TietzeResult tietze_simplify(const Presentation& p, int max_rounds) {
    if (max_rounds < 1) throw std::invalid_argument("tietze_simplify: max_rounds < 1");

    std::vector<std::string> names = p.generators;
    std::vector<Word> rels;
    rels.reserve(p.relators.size());
    for (const Word& r : p.relators) rels.push_back(free_reduce(r));

    std::vector<std::string> log;
    int rounds = 0;

    auto occurrence_counts = [&]() {
        std::vector<long long> occ(names.size(), 0);
        for (const Word& r : rels)
            for (const Letter& l : r) ++occ[l.gen];
        return occ;
    };

    auto normalize = [&]() {
        bool changed = false;
        std::vector<Word> next;
        next.reserve(rels.size());
        for (std::size_t i = 0; i < rels.size(); ++i) {
            Word r = free_reduce(rels[i]);
            CyclicReduction cr = cyclic_reduce(r);
            if (cr.core.size() != rels[i].size()) {
                changed = true;
                if (cr.core.empty()) {
                    std::ostringstream os;
                    os << "drop trivial relator " << render(rels[i], names);
                    log.push_back(os.str());
                    continue;
                }
                std::ostringstream os;
                os << "cyclically reduce relator " << render(rels[i], names) << " -> "
                   << render(cr.core, names);
                log.push_back(os.str());
            }
            next.push_back(std::move(cr.core));
        }
        rels = std::move(next);
        return changed;
    };

    auto dedupe = [&]() {
        bool changed = false;
        std::map<Word, int> seen;
        std::vector<Word> next;
        for (Word& r : rels) {
            Word key = cyclic_canonical_key(r);
            auto [it, fresh] = seen.emplace(std::move(key), static_cast<int>(next.size()));
            if (!fresh) {
                std::ostringstream os;
                os << "drop duplicate relator " << render(r, names) << " (same as relator "
                   << it->second << ")";
                log.push_back(os.str());
                changed = true;
                continue;
            }
            next.push_back(std::move(r));
        }
        rels = std::move(next);
        return changed;
    };

    auto find_candidate = [&]() {
        Candidate best;
        std::vector<long long> occ = occurrence_counts();
        for (std::size_t ri = 0; ri < rels.size(); ++ri) {
            const Word& core = rels[ri];
            for (int pass = 0; pass < 2; ++pass) {
                Word base = (pass == 0) ? core : invert(core);
                for (std::size_t rot = 0; rot < base.size(); ++rot) {
                    Word w = rotate(base, rot);
                    if (w[0].sign != +1) continue;
                    int g = w[0].gen;
                    bool clean = true;
                    for (std::size_t i = 1; i < w.size(); ++i)
                        if (w[i].gen == g) {
                            clean = false;
                            break;
                        }
                    if (!clean) continue;
                    long long len = static_cast<long long>(w.size());
                    long long growth = -len + (occ[g] - 1) * (len - 2);
                    if (growth >= 0) continue;
                    Candidate cand;
                    cand.growth = growth;
                    cand.gen = g;
                    cand.relator = static_cast<int>(ri);
                    cand.replacement = invert(Word(w.begin() + 1, w.end()));
                    if (cand.better_than(best)) best = std::move(cand);
                }
            }
        }
        return best;
    };

    auto eliminate = [&](const Candidate& cand) {
        std::ostringstream os;
        os << "eliminate " << names[cand.gen] << " := " << render(cand.replacement, names);
        log.push_back(os.str());

        std::vector<Word> next;
        next.reserve(rels.size());
        Word replacement_inv = invert(cand.replacement);
        for (std::size_t ri = 0; ri < rels.size(); ++ri) {
            if (static_cast<int>(ri) == cand.relator) continue;
            Word out;
            out.reserve(rels[ri].size());
            for (const Letter& l : rels[ri]) {
                if (l.gen == cand.gen) {
                    const Word& sub = (l.sign > 0) ? cand.replacement : replacement_inv;
                    out.insert(out.end(), sub.begin(), sub.end());
                } else {
                    out.push_back(l);
                }
            }
            out = cyclic_reduce(free_reduce(out)).core;
            if (!out.empty()) next.push_back(std::move(out));
        }
        rels = std::move(next);

        // drop the generator and compact indices
        names.erase(names.begin() + cand.gen);
        for (Word& r : rels)
            for (Letter& l : r)
                if (l.gen > cand.gen) --l.gen;
    };

    for (rounds = 1; rounds <= max_rounds; ++rounds) {
        bool changed = false;
        changed |= normalize();
        changed |= dedupe();
        for (;;) {
            Candidate cand = find_candidate();
            if (cand.gen < 0) break;
            eliminate(cand);
            changed = true;
        }
        if (!changed) break;
    }

    TietzeResult out;
    out.presentation.generators = std::move(names);
    out.presentation.relators = std::move(rels);
    out.presentation.family = Family::custom;
    out.presentation.n = p.n;
    out.presentation.mode = p.mode;
    out.log = std::move(log);
    out.rounds = rounds;
    return out;
}

}  // namespace km
