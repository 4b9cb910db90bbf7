#pragma once

#include <map>
#include <set>
#include <vector>

#include "km/families.hpp"
#include "km/presentation.hpp"
#include "km/quad.hpp"

namespace km {

struct CertMove {
    enum class Kind { free_reduce, insert_relator };
    Kind kind = Kind::insert_relator;
    int position = 0;   // splice index into the current word
    int relator = 0;    // index into the presentation's relator list
    bool invert_relator = false;
    int rotation = 0;   // left rotation applied after the optional inversion

    friend bool operator==(const CertMove&, const CertMove&) = default;
};

// Replayable derivation: applying the moves to `start` must yield `end`
// exactly. Mechanizes equation chains such as the case (I)/(II)/(III)
// rewritings.
struct Certificate {
    Word start;
    std::vector<CertMove> moves;
    Word end;
};

// Splices rotate(relator or its inverse, rotation) at `position`, then
// freely reduces; free_reduce moves reduce in place. Shared by the rewriter
// and the verifier.
Word apply_certificate_move(const Word& w, const CertMove& m, const Presentation& p);

// Replays the certificate against p; true iff the replay reproduces `end`.
// Throws std::out_of_range for a relator index outside p.
bool verify_certificate(const Certificate& c, const Presentation& p);

struct RewriteResult {
    Word word;  // over Lambda symbols (as letters of p)
    Certificate certificate;
};

// Rewrites generators of a family presentation as words over the minimal
// generating set Lambda (Lambda' for delta), emitting certificates that
// replay inside the full-mode presentation.
class LambdaRewriter {
public:
    // p must be a full-mode family presentation.
    explicit LambdaRewriter(const Presentation& p);

    RewriteResult rewrite(const Quad& q) const;

    const std::vector<Quad>& lambda() const { return lambda_; }
    const Presentation& presentation() const { return *p_; }

private:
    enum class DihedralMove { shift, unshift, reverse };

    int gen_of(const Quad& q) const;
    int relator_index(const Word& w) const;
    CertMove insertion_at(int position, const Word& relator_word, int relator_idx,
                          const Letter& first) const;
    CertMove dihedral_move_at(int position, const Quad& t, int sign, DihedralMove m) const;
    CertMove pentagon_move_at(int position, const Quint& tuple5, const Letter& letter) const;
    std::vector<DihedralMove> dihedral_path(const Quad& from, const Quad& to) const;

    const Presentation* p_;
    bool signed_family_ = false;
    bool delta_family_ = false;
    std::vector<Quad> quads_;              // generator index -> quad
    std::map<Quad, int> gen_index_;
    std::map<Word, int> relator_lookup_;
    std::vector<Quad> lambda_;
    std::set<Quad> lambda_set_;
};

RewriteResult rewrite_in_lambda(const Quad& q, const Presentation& p);
RewriteResult rewrite_in_lambda(const Quad& q, int n, Family family);

}  // namespace km
