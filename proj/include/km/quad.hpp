#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace km {

// Ordered 4-tuple of pairwise distinct indices in [1..n]: the label (ijkl) of
// a generator. The order-8 dihedral action is generated by the cyclic shift
// (ijkl) -> (jkli) and the reversal (ijkl) -> (lkji).
struct Quad {
    std::array<int, 4> e{};

    Quad() = default;
    Quad(int i, int j, int k, int l) : e{i, j, k, l} {}

    bool contains(int v) const { return e[0] == v || e[1] == v || e[2] == v || e[3] == v; }

    friend bool operator==(const Quad&, const Quad&) = default;
    friend auto operator<=>(const Quad&, const Quad&) = default;
};

bool valid_quad(const Quad& q, int n);

Quad shift_quad(const Quad& q);    // (ijkl) -> (jkli)
Quad unshift_quad(const Quad& q);  // (ijkl) -> (lijk)
Quad reverse_quad(const Quad& q);  // (ijkl) -> (lkji)

// The 8 distinct orbit elements (the action on distinct tuples is free).
std::array<Quad, 8> dihedral_orbit(const Quad& q);

struct CanonicalQuad {
    Quad quad;  // lexicographically least element of the orbit
    int sign;   // +1 unsigned; signed: q = quad^sign (shift and reversal each flip)
};

CanonicalQuad canonical_quad(const Quad& q, bool signed_action);

std::vector<Quad> all_ordered_quads(int n);  // lexicographic, n(n-1)(n-2)(n-3)
std::vector<Quad> canonical_quads(int n);    // lexicographic, 3*C(n,4)
std::vector<Quad> increasing_quads(int n);   // lexicographic, C(n,4)

// `(1234)` for single-digit entries, `(10,2,3,4)` once any entry exceeds 9.
std::string quad_name(const Quad& q);
std::optional<Quad> parse_quad_name(const std::string& name);

long long binomial(int n, int k);

}  // namespace km
