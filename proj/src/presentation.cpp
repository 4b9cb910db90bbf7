#include "km/presentation.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace km {

std::string family_name(Family f) {
    switch (f) {
        case Family::gamma: return "gamma";
        case Family::gamma_hat: return "gamma_hat";
        case Family::delta: return "delta";
        case Family::delta_hat: return "delta_hat";
        case Family::custom: return "custom";
    }
    return "custom";
}

std::optional<Family> parse_family(const std::string& s) {
    if (s == "gamma") return Family::gamma;
    if (s == "gamma_hat") return Family::gamma_hat;
    if (s == "delta") return Family::delta;
    if (s == "delta_hat") return Family::delta_hat;
    if (s == "custom") return Family::custom;
    return std::nullopt;
}

std::string mode_name(EnumMode m) { return m == EnumMode::full ? "full" : "reduced"; }

std::optional<EnumMode> parse_mode(const std::string& s) {
    if (s == "full") return EnumMode::full;
    if (s == "reduced") return EnumMode::reduced;
    return std::nullopt;
}

void Presentation::add_relator(const Word& w) {
    Word r = free_reduce(w);
    if (!r.empty()) relators.push_back(std::move(r));
}

std::unordered_map<std::string, int> generator_index(const Presentation& p) {
    std::unordered_map<std::string, int> m;
    m.reserve(p.generators.size());
    for (int i = 0; i < p.generator_count(); ++i) m.emplace(p.generators[i], i);
    return m;
}

std::vector<std::string> validate(const Presentation& p) {
    std::vector<std::string> out;
    const int g = p.generator_count();
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
        const Word& r = p.relators[i];
        for (const Letter& l : r) {
            if (l.gen < 0 || l.gen >= g) {
                std::ostringstream os;
                os << "relator " << i << " references undeclared symbol " << l.gen;
                out.push_back(os.str());
                break;
            }
        }
        if (free_reduce(r).empty()) {
            std::ostringstream os;
            os << "relator " << i << " freely reduces to the empty word (redundant)";
            out.push_back(os.str());
        } else if (!is_freely_reduced(r)) {
            std::ostringstream os;
            os << "relator " << i << " is not freely reduced";
            out.push_back(os.str());
        }
    }
    std::unordered_map<std::string, int> seen;
    for (int i = 0; i < g; ++i) {
        auto [it, fresh] = seen.emplace(p.generators[i], i);
        if (!fresh) {
            std::ostringstream os;
            os << "generator " << i << " duplicates the name of generator " << it->second;
            out.push_back(os.str());
        }
    }
    return out;
}

SparseIntMatrix abelianized_relation_matrix(const Presentation& p) {
    SparseIntMatrix m(static_cast<int>(p.relators.size()), p.generator_count());
    for (std::size_t i = 0; i < p.relators.size(); ++i)
        for (const Letter& l : p.relators[i])
            m.add(static_cast<int>(i), l.gen, mpz_class(l.sign));
    return m;
}

AbelianInvariants h1(const Presentation& p, const SnfOptions& opts) {
    return cokernel_invariants(abelianized_relation_matrix(p), opts);
}

std::string presentation_to_text(const Presentation& p) {
    std::ostringstream os;
    os << "# family=" << family_name(p.family) << " n=" << p.n << " mode=" << mode_name(p.mode)
       << '\n';
    for (const std::string& g : p.generators) os << "gen " << g << '\n';
    for (const Word& r : p.relators) os << "rel " << format_word(r, p.generators) << '\n';
    return os.str();
}

Presentation presentation_from_text(std::istream& is) {
    Presentation p;
    std::string line;
    std::unordered_map<std::string, int> index;
    auto lookup = [&index](const std::string& name) {
        auto it = index.find(name);
        return it == index.end() ? -1 : it->second;
    };
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream ls(line.substr(1));
            std::string tok;
            while (ls >> tok) {
                auto eq = tok.find('=');
                if (eq == std::string::npos) continue;
                std::string key = tok.substr(0, eq), value = tok.substr(eq + 1);
                if (key == "family") {
                    auto f = parse_family(value);
                    if (!f) throw std::invalid_argument("unknown family: " + value);
                    p.family = *f;
                } else if (key == "n") {
                    p.n = std::stoi(value);
                } else if (key == "mode") {
                    auto m = parse_mode(value);
                    if (!m) throw std::invalid_argument("unknown mode: " + value);
                    p.mode = *m;
                }
            }
            continue;
        }
        std::istringstream ls(line);
        std::string kind;
        ls >> kind;
        if (kind == "gen") {
            std::string name;
            ls >> name;
            if (name.empty()) throw std::invalid_argument("gen line without a name");
            index.emplace(name, p.generator_count());
            p.generators.push_back(name);
        } else if (kind == "rel") {
            std::string rest;
            std::getline(ls, rest);
            p.add_relator(parse_word(rest, lookup));
        } else {
            throw std::invalid_argument("unrecognized line: " + line);
        }
    }
    return p;
}

Presentation presentation_from_text(const std::string& text) {
    std::istringstream is(text);
    return presentation_from_text(is);
}

std::string presentation_to_json(const Presentation& p) {
    nlohmann::json j;
    j["family"] = family_name(p.family);
    j["n"] = p.n;
    j["mode"] = mode_name(p.mode);
    j["generators"] = p.generators;
    nlohmann::json rels = nlohmann::json::array();
    for (const Word& r : p.relators) {
        nlohmann::json rel = nlohmann::json::array();
        for (const Letter& l : r) rel.push_back({l.gen, l.sign});
        rels.push_back(std::move(rel));
    }
    j["relators"] = std::move(rels);
    return j.dump(2);
}

Presentation presentation_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Presentation p;
    auto f = parse_family(j.at("family").get<std::string>());
    if (!f) throw std::invalid_argument("unknown family in JSON");
    p.family = *f;
    p.n = j.at("n").get<int>();
    auto m = parse_mode(j.at("mode").get<std::string>());
    if (!m) throw std::invalid_argument("unknown mode in JSON");
    p.mode = *m;
    p.generators = j.at("generators").get<std::vector<std::string>>();
    for (const auto& rel : j.at("relators")) {
        Word w;
        for (const auto& letter : rel)
            w.push_back(Letter{letter.at(0).get<int>(), letter.at(1).get<int>()});
        p.add_relator(w);
    }
    return p;
}

}  // namespace km
