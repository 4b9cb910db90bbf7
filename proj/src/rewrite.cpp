#include "km/rewrite.hpp"

#include "km/homs.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace km {

Word apply_certificate_move(const Word& w, const CertMove& m, const Presentation& p) {
    if (m.kind == CertMove::Kind::free_reduce) return free_reduce(w);
    if (m.relator < 0 || static_cast<std::size_t>(m.relator) >= p.relators.size())
        throw std::out_of_range("certificate move: relator index out of range");
    if (m.position < 0 || static_cast<std::size_t>(m.position) > w.size())
        throw std::out_of_range("certificate move: splice position out of range");
    Word ins = p.relators[m.relator];
    if (m.invert_relator) ins = invert(ins);
    ins = rotate(ins, static_cast<std::size_t>(m.rotation));
    Word out;
    out.reserve(w.size() + ins.size());
    out.insert(out.end(), w.begin(), w.begin() + m.position);
    out.insert(out.end(), ins.begin(), ins.end());
    out.insert(out.end(), w.begin() + m.position, w.end());
    return free_reduce(out);
}

bool verify_certificate(const Certificate& c, const Presentation& p) {
    Word cur = c.start;
    for (const CertMove& m : c.moves) cur = apply_certificate_move(cur, m, p);
    return cur == c.end;
}

// ---------------------------------------------------------------------------

LambdaRewriter::LambdaRewriter(const Presentation& p) : p_(&p) {
    if (p.family == Family::custom)
        throw std::invalid_argument("LambdaRewriter: needs a family presentation");
    if (p.mode != EnumMode::full)
        throw std::invalid_argument("LambdaRewriter: needs the full-mode presentation");
    signed_family_ = (p.family == Family::gamma_hat || p.family == Family::delta_hat);
    delta_family_ = (p.family == Family::delta || p.family == Family::delta_hat);
    quads_ = generator_quads(p);
    for (int i = 0; i < p.generator_count(); ++i) gen_index_.emplace(quads_[i], i);
    for (std::size_t i = 0; i < p.relators.size(); ++i)
        relator_lookup_.emplace(p.relators[i], static_cast<int>(i));
    lambda_ = lambda_generators(p.n, p.family);
    lambda_set_.insert(lambda_.begin(), lambda_.end());
}

int LambdaRewriter::gen_of(const Quad& q) const {
    auto it = gen_index_.find(q);
    if (it == gen_index_.end()) throw std::invalid_argument("rewriter: quad is not a generator");
    return it->second;
}

int LambdaRewriter::relator_index(const Word& w) const {
    auto it = relator_lookup_.find(w);
    if (it == relator_lookup_.end())
        throw std::logic_error("rewriter: expected relator missing from the presentation");
    return it->second;
}

// Insertion (invert, rotation) of relator #idx whose first letter is `first`.
CertMove LambdaRewriter::insertion_at(int position, const Word& relator_word, int relator_idx,
                                      const Letter& first) const {
    for (int pass = 0; pass < 2; ++pass) {
        Word base = pass ? invert(relator_word) : relator_word;
        for (std::size_t rot = 0; rot < base.size(); ++rot) {
            if (base[rot] == first) {
                CertMove m;
                m.kind = CertMove::Kind::insert_relator;
                m.position = position;
                m.relator = relator_idx;
                m.invert_relator = (pass == 1);
                m.rotation = static_cast<int>(rot);
                return m;
            }
        }
    }
    throw std::logic_error("rewriter: relator has no rotation starting with the required letter");
}

CertMove LambdaRewriter::dihedral_move_at(int position, const Quad& t, int sign,
                                          DihedralMove mv) const {
    // Dihedral relator words as the builders emit them: (ijkl)(jkli) and
    // (ijkl)(lkji) in the signed families, second letters inverted otherwise.
    // An unshift is the shift relator of the predecessor tuple.
    const int second = signed_family_ ? +1 : -1;
    Word relator;
    switch (mv) {
        case DihedralMove::shift:
            relator = {Letter{gen_of(t), +1}, Letter{gen_of(shift_quad(t)), second}};
            break;
        case DihedralMove::unshift:
            relator = {Letter{gen_of(unshift_quad(t)), +1}, Letter{gen_of(t), second}};
            break;
        case DihedralMove::reverse:
            relator = {Letter{gen_of(t), +1}, Letter{gen_of(reverse_quad(t)), second}};
            break;
    }
    int idx = relator_index(relator);
    return insertion_at(position + 1, p_->relators[idx], idx, Letter{gen_of(t), -sign});
}

CertMove LambdaRewriter::pentagon_move_at(int position, const Quint& tuple5,
                                          const Letter& letter) const {
    Word relator;
    for (const auto& [q, s] : pentagon_letters(tuple5, signed_family_))
        relator.push_back(Letter{gen_of(q), s});
    int idx = relator_index(relator);
    return insertion_at(position + 1, p_->relators[idx], idx, inverse(letter));
}

std::vector<LambdaRewriter::DihedralMove> LambdaRewriter::dihedral_path(const Quad& from,
                                                                        const Quad& to) const {
    if (from == to) return {};
    struct Node {
        Quad q;
        int parent;
        DihedralMove via;
    };
    std::vector<Node> nodes{{from, -1, DihedralMove::shift}};
    std::set<Quad> seen{from};
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        Quad cur = nodes[i].q;
        const DihedralMove moves[3] = {DihedralMove::shift, DihedralMove::unshift,
                                       DihedralMove::reverse};
        for (DihedralMove m : moves) {
            Quad next = (m == DihedralMove::shift)     ? shift_quad(cur)
                        : (m == DihedralMove::unshift) ? unshift_quad(cur)
                                                       : reverse_quad(cur);
            if (!seen.insert(next).second) continue;
            nodes.push_back({next, static_cast<int>(i), m});
            if (next == to) {
                std::vector<DihedralMove> path;
                int at = static_cast<int>(nodes.size()) - 1;
                while (at > 0) {
                    path.push_back(nodes[at].via);
                    at = nodes[at].parent;
                }
                std::reverse(path.begin(), path.end());
                return path;
            }
        }
    }
    throw std::logic_error("rewriter: quads are not in the same dihedral orbit");
}

namespace {

int max_entry(const Quad& q) { return std::max({q.e[0], q.e[1], q.e[2], q.e[3]}); }

// The unique orbit element of the form (1,a,b,c) with a < c.
Quad upsilon_form(const Quad& q) {
    for (const Quad& o : dihedral_orbit(q))
        if (o.e[0] == 1 && o.e[1] < o.e[3]) return o;
    throw std::logic_error("upsilon_form: quad does not contain 1");
}

}  // namespace

RewriteResult LambdaRewriter::rewrite(const Quad& q) const {
    if (!valid_quad(q, p_->n)) throw std::invalid_argument("rewrite: invalid quad");
    if (delta_family_ && !std::is_sorted(q.e.begin(), q.e.end()))
        throw std::invalid_argument("rewrite: delta generators are increasing quads");
    if (gen_index_.find(q) == gen_index_.end())
        throw std::invalid_argument("rewrite: quad is not a generator of the family");

    Certificate cert;
    cert.start = Word{Letter{gen_of(q), +1}};
    Word cur = cert.start;

    auto apply = [&](const CertMove& m) {
        cur = apply_certificate_move(cur, m, *p_);
        cert.moves.push_back(m);
    };

    for (int guard = 0; guard < 100000; ++guard) {
        // leftmost letter not in Lambda
        int pos = -1;
        for (std::size_t i = 0; i < cur.size(); ++i) {
            if (!lambda_set_.count(quads_[cur[i].gen])) {
                pos = static_cast<int>(i);
                break;
            }
        }
        if (pos < 0) break;
        const Quad t = quads_[cur[pos].gen];
        const int sign = cur[pos].sign;

        if (t.contains(1)) {
            Quad target = upsilon_form(t);
            if (t != target) {
                apply(dihedral_move_at(pos, t, sign, dihedral_path(t, target)[0]));
                continue;
            }
            // t = (1,a,b,c) with a < c and not in Lambda: cases (I)/(III)
            // share the pentagon for (1,a,b,c,2); case (II) uses (1,2,j,k,3).
            const int a = t.e[1], b = t.e[2], c = t.e[3];
            Quint tuple5 = (a == 2) ? Quint{1, 2, b, c, 3} : Quint{1, a, b, c, 2};
            apply(pentagon_move_at(pos, tuple5, Letter{cur[pos].gen, sign}));
            continue;
        }

        // letters without 1
        if (!delta_family_ && t.contains(2)) {
            // the two orbit elements with 2 in second position
            Quad alpha_target{};
            bool have_alpha = false;
            Quad beta_target{};
            bool have_beta = false;
            for (const Quad& o : dihedral_orbit(t)) {
                if (o.e[1] == 2 && o.e[2] == max_entry(t)) {
                    alpha_target = o;
                    have_alpha = true;
                }
                if (o.e[0] == 2 && o.e[3] == 3) {
                    beta_target = o;
                    have_beta = true;
                }
            }
            if (have_alpha) {
                if (t != alpha_target) {
                    apply(dihedral_move_at(pos, t, sign, dihedral_path(t, alpha_target)[0]));
                } else {
                    Quint tuple5{t.e[0], 2, t.e[2], t.e[3], 1};
                    apply(pentagon_move_at(pos, tuple5, Letter{cur[pos].gen, sign}));
                }
                continue;
            }
            if (have_beta && t.contains(3)) {
                if (t != beta_target) {
                    apply(dihedral_move_at(pos, t, sign, dihedral_path(t, beta_target)[0]));
                } else {
                    Quint tuple5{2, 1, t.e[1], t.e[2], 3};
                    apply(pentagon_move_at(pos, tuple5, Letter{cur[pos].gen, sign}));
                }
                continue;
            }
        }
        // generic fallback (initial letters only): pentagon for (1, t), where
        // the letter occupies the third slot and the other four contain 1
        Quint tuple5{1, t.e[0], t.e[1], t.e[2], t.e[3]};
        apply(pentagon_move_at(pos, tuple5, Letter{cur[pos].gen, sign}));
    }

    for (const Letter& l : cur)
        if (!lambda_set_.count(quads_[l.gen]))
            throw std::logic_error("rewrite: did not terminate on a Lambda word");

    cert.end = cur;
    RewriteResult out;
    out.word = cur;
    out.certificate = std::move(cert);
    return out;
}

RewriteResult rewrite_in_lambda(const Quad& q, const Presentation& p) {
    return LambdaRewriter(p).rewrite(q);
}

RewriteResult rewrite_in_lambda(const Quad& q, int n, Family family) {
    Presentation p = build_family(family, n, EnumMode::full);
    return LambdaRewriter(p).rewrite(q);
}

}  // namespace km
