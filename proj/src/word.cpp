#include "km/word.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace km {

Word free_reduce(const Word& raw) {
    Word out;
    out.reserve(raw.size());
    for (const Letter& l : raw) {
        if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign) {
            out.pop_back();
        } else {
            out.push_back(l);
        }
    }
    return out;
}

bool is_freely_reduced(const Word& w) {
    for (std::size_t i = 1; i < w.size(); ++i) {
        if (w[i].gen == w[i - 1].gen && w[i].sign == -w[i - 1].sign) return false;
    }
    return true;
}

Word invert(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inverse(*it));
    return out;
}

Word concat(const Word& a, const Word& b) {
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return free_reduce(out);
}

CyclicReduction cyclic_reduce(const Word& w) {
    std::size_t lo = 0, hi = w.size();
    while (hi - lo >= 2 && w[lo].gen == w[hi - 1].gen && w[lo].sign == -w[hi - 1].sign) {
        ++lo;
        --hi;
    }
    CyclicReduction r;
    r.conjugator.assign(w.begin(), w.begin() + lo);
    r.core.assign(w.begin() + lo, w.begin() + hi);
    return r;
}

bool is_cyclically_reduced(const Word& w) {
    if (!is_freely_reduced(w)) return false;
    if (w.size() < 2) return true;
    return !(w.front().gen == w.back().gen && w.front().sign == -w.back().sign);
}

Word rotate(const Word& w, std::size_t amount) {
    if (w.empty()) return w;
    amount %= w.size();
    Word out;
    out.reserve(w.size());
    out.insert(out.end(), w.begin() + amount, w.end());
    out.insert(out.end(), w.begin(), w.begin() + amount);
    return out;
}

Word cyclic_canonical_key(const Word& w) {
    if (w.empty()) return w;
    Word best = w;
    auto consider = [&best](const Word& candidate) {
        if (candidate < best) best = candidate;
    };
    Word inv = invert(w);
    for (std::size_t i = 0; i < w.size(); ++i) {
        consider(rotate(w, i));
        consider(rotate(inv, i));
    }
    return best;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (const Letter& l : w) {
        std::size_t v = (static_cast<std::size_t>(l.gen) << 1) ^ (l.sign < 0 ? 1u : 0u);
        h ^= v;
        h *= 1099511628211ull;
    }
    return h;
}

std::string format_word(const Word& w, const std::vector<std::string>& names) {
    if (w.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const Letter& l : w) {
        if (!first) os << ' ';
        first = false;
        if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= names.size())
            throw std::invalid_argument("format_word: letter out of range");
        os << names[l.gen];
        if (l.sign < 0) os << "^-1";
    }
    return os.str();
}

Word parse_word(const std::string& text,
                const std::function<int(const std::string&)>& name_to_index) {
    Word out;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        if (tok == "1") continue;  // the empty-word token
        int sign = +1;
        if (tok.size() > 3 && tok.compare(tok.size() - 3, 3, "^-1") == 0) {
            sign = -1;
            tok.resize(tok.size() - 3);
        } else if (tok.size() > 2 && tok.compare(tok.size() - 2, 2, "^1") == 0) {
            tok.resize(tok.size() - 2);
        }
        int idx = name_to_index(tok);
        if (idx < 0) throw std::invalid_argument("parse_word: unknown generator '" + tok + "'");
        out.push_back(Letter{idx, sign});
    }
    return free_reduce(out);
}

}  // namespace km
