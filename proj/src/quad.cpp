#include "km/quad.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace km {

bool valid_quad(const Quad& q, int n) {
    if (n < 4) return false;
    for (int i = 0; i < 4; ++i) {
        if (q.e[i] < 1 || q.e[i] > n) return false;
        for (int j = i + 1; j < 4; ++j)
            if (q.e[i] == q.e[j]) return false;
    }
    return true;
}

Quad shift_quad(const Quad& q) { return Quad(q.e[1], q.e[2], q.e[3], q.e[0]); }
Quad unshift_quad(const Quad& q) { return Quad(q.e[3], q.e[0], q.e[1], q.e[2]); }
Quad reverse_quad(const Quad& q) { return Quad(q.e[3], q.e[2], q.e[1], q.e[0]); }

std::array<Quad, 8> dihedral_orbit(const Quad& q) {
    std::array<Quad, 8> orbit;
    Quad cur = q;
    for (int i = 0; i < 4; ++i) {
        orbit[i] = cur;
        orbit[4 + i] = reverse_quad(cur);
        cur = shift_quad(cur);
    }
    return orbit;
}

CanonicalQuad canonical_quad(const Quad& q, bool signed_action) {
    // Shift and reversal both carry sign -1 in the signed action; the sign of
    // an orbit element is the parity of moves applied. The action is free, so
    // the assignment is consistent.
    Quad best = q;
    int best_sign = +1;
    Quad cur = q;
    int cur_sign = +1;
    for (int i = 0; i < 4; ++i) {
        if (cur < best) {
            best = cur;
            best_sign = cur_sign;
        }
        Quad rev = reverse_quad(cur);
        if (rev < best) {
            best = rev;
            best_sign = -cur_sign;
        }
        cur = shift_quad(cur);
        cur_sign = -cur_sign;
    }
    return CanonicalQuad{best, signed_action ? best_sign : +1};
}

std::vector<Quad> all_ordered_quads(int n) {
    if (n < 4) throw std::invalid_argument("all_ordered_quads: n < 4");
    std::vector<Quad> out;
    out.reserve(static_cast<std::size_t>(n) * (n - 1) * (n - 2) * (n - 3));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                for (int l = 1; l <= n; ++l) {
                    Quad q(i, j, k, l);
                    if (valid_quad(q, n)) out.push_back(q);
                }
    return out;
}

std::vector<Quad> canonical_quads(int n) {
    std::vector<Quad> out;
    for (const Quad& q : all_ordered_quads(n))
        if (canonical_quad(q, false).quad == q) out.push_back(q);
    return out;
}

std::vector<Quad> increasing_quads(int n) {
    if (n < 4) throw std::invalid_argument("increasing_quads: n < 4");
    std::vector<Quad> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l) out.push_back(Quad(i, j, k, l));
    return out;
}

std::string quad_name(const Quad& q) {
    bool wide = std::any_of(q.e.begin(), q.e.end(), [](int v) { return v > 9; });
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < 4; ++i) {
        if (wide && i > 0) os << ',';
        os << q.e[i];
    }
    os << ')';
    return os.str();
}

std::optional<Quad> parse_quad_name(const std::string& name) {
    if (name.size() < 2 || name.front() != '(' || name.back() != ')') return std::nullopt;
    std::string body = name.substr(1, name.size() - 2);
    Quad q;
    if (body.find(',') != std::string::npos) {
        std::istringstream is(body);
        std::string part;
        int idx = 0;
        while (std::getline(is, part, ',')) {
            if (idx >= 4) return std::nullopt;
            try {
                q.e[idx++] = std::stoi(part);
            } catch (...) {
                return std::nullopt;
            }
        }
        if (idx != 4) return std::nullopt;
    } else {
        if (body.size() != 4) return std::nullopt;
        for (int i = 0; i < 4; ++i) {
            if (body[i] < '1' || body[i] > '9') return std::nullopt;
            q.e[i] = body[i] - '0';
        }
    }
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (q.e[i] == q.e[j]) return std::nullopt;
    return q;
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace km
