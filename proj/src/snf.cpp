#include "km/snf.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <tuple>

#include "km/subsets.hpp"

namespace km {

std::string AbelianInvariants::to_string() const {
    std::vector<std::string> parts;
    if (free_rank == 1) {
        parts.push_back("Z");
    } else if (free_rank > 1) {
        std::ostringstream os;
        os << "Z^" << free_rank;
        parts.push_back(os.str());
    }
    std::size_t i = 0;
    while (i < torsion.size()) {
        std::size_t j = i;
        while (j < torsion.size() && torsion[j] == torsion[i]) ++j;
        std::ostringstream os;
        if (j - i == 1)
            os << "Z/" << torsion[i];
        else
            os << "(Z/" << torsion[i] << ")^" << (j - i);
        parts.push_back(os.str());
        i = j;
    }
    if (parts.empty()) return "0";
    std::string out = parts[0];
    for (std::size_t k = 1; k < parts.size(); ++k) out += " + " + parts[k];
    return out;
}

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

namespace {

void report(const SnfOptions& opts, const char* stage, std::size_t done, std::size_t total) {
    if (opts.progress && !opts.progress(stage, done, total)) throw OperationCancelled{};
}

// q with |a - q*b| minimal (ties toward smaller |q|).
mpz_class balanced_quotient(const mpz_class& a, const mpz_class& b) {
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_class r2 = r * 2;
    if (mpz_cmpabs(r2.get_mpz_t(), b.get_mpz_t()) > 0) {
        if ((r < 0) == (b < 0)) {
            q += 1;
        } else {
            q -= 1;
        }
    }
    return q;
}

// ---------------------------------------------------------------------------
// Sparse elimination (invariant factors only).
//
// Phase A repeatedly eliminates +-1 pivots chosen by Markowitz fill count
// (rowlen-1)*(collen-1), tracked with a lazy priority queue. Phase B runs the
// classical Euclidean reduction on whatever small core survives; entries
// there may grow, hence arbitrary precision throughout.
// ---------------------------------------------------------------------------
struct SparseElim {
    int nrows = 0, ncols = 0;
    std::vector<std::map<int, mpz_class>> rows;
    std::vector<std::set<int>> colrows;
    std::vector<char> row_active, col_active;
    std::vector<mpz_class> factors;

    explicit SparseElim(const SparseIntMatrix& m)
        : nrows(m.rows()),
          ncols(m.cols()),
          rows(m.rows()),
          colrows(m.cols()),
          row_active(m.rows(), 1),
          col_active(m.cols(), 1) {
        for (const auto& [rc, v] : m.entries()) {
            rows[rc.first].emplace(rc.second, v);
            colrows[rc.second].insert(rc.first);
        }
    }

    void set_entry(int r, int c, const mpz_class& v) {
        auto it = rows[r].find(c);
        if (v == 0) {
            if (it != rows[r].end()) {
                rows[r].erase(it);
                colrows[c].erase(r);
            }
        } else if (it == rows[r].end()) {
            rows[r].emplace(c, v);
            colrows[c].insert(r);
        } else {
            it->second = v;
        }
    }

    // row[dst] -= q * row[src]; returns columns that changed.
    void row_axpy(int dst, int src, const mpz_class& q, std::vector<int>* touched) {
        if (q == 0) return;
        for (const auto& [c, v] : rows[src]) {
            mpz_class nv = (rows[dst].count(c) ? rows[dst][c] : mpz_class(0)) - q * v;
            set_entry(dst, c, nv);
            if (touched) touched->push_back(c);
        }
    }

    long long markowitz(int r, int c) const {
        return static_cast<long long>(rows[r].size() - 1) *
               static_cast<long long>(colrows[c].size() - 1);
    }

    void unit_pivot_phase(const SnfOptions& opts) {
        using Cand = std::tuple<long long, int, int>;  // (score, row, col)
        std::priority_queue<Cand, std::vector<Cand>, std::greater<Cand>> heap;
        auto push_units_of_row = [&](int r) {
            for (const auto& [c, v] : rows[r])
                if (mpz_cmpabs_ui(v.get_mpz_t(), 1) == 0) heap.emplace(markowitz(r, c), r, c);
        };
        for (int r = 0; r < nrows; ++r) push_units_of_row(r);

        std::size_t done = 0;
        const std::size_t total = static_cast<std::size_t>(std::min(nrows, ncols));
        report(opts, "snf/sparse", 0, total);
        while (!heap.empty()) {
            auto [score, r, c] = heap.top();
            heap.pop();
            if (!row_active[r] || !col_active[c]) continue;
            auto it = rows[r].find(c);
            if (it == rows[r].end() || mpz_cmpabs_ui(it->second.get_mpz_t(), 1) != 0) continue;
            long long cur = markowitz(r, c);
            if (cur != score) {  // stale; re-enqueue with the fresh score
                heap.emplace(cur, r, c);
                continue;
            }
            const int sgn = sgn_of(it->second);
            // clear column c
            std::vector<int> others(colrows[c].begin(), colrows[c].end());
            std::vector<int> touched_rows;
            for (int r2 : others) {
                if (r2 == r) continue;
                mpz_class q = rows[r2][c] * sgn;  // a / v with v = +-1
                row_axpy(r2, r, q, nullptr);
                touched_rows.push_back(r2);
            }
            // clear row r (each column op only affects row r now)
            row_active[r] = 0;
            col_active[c] = 0;
            for (const auto& [c2, v2] : rows[r]) colrows[c2].erase(r);
            rows[r].clear();
            factors.emplace_back(1);
            for (int r2 : touched_rows) push_units_of_row(r2);
            if ((++done & 0xff) == 0) report(opts, "snf/sparse", done, total);
        }
    }

    static int sgn_of(const mpz_class& v) { return mpz_sgn(v.get_mpz_t()); }

    bool find_min_entry(int& br, int& bc) const {
        bool found = false;
        mpz_class best;
        for (int r = 0; r < nrows; ++r) {
            if (!row_active[r]) continue;
            for (const auto& [c, v] : rows[r]) {
                if (!found || mpz_cmpabs(v.get_mpz_t(), best.get_mpz_t()) < 0) {
                    best = v;
                    br = r;
                    bc = c;
                    found = true;
                }
            }
        }
        return found;
    }

    void euclidean_phase(const SnfOptions& opts) {
        std::size_t done = 0;
        report(opts, "snf/core", 0, 0);
        int r = -1, c = -1;
        while (find_min_entry(r, c)) {
            for (;;) {
                mpz_class v = rows[r][c];
                // reduce the pivot column
                bool moved = false;
                std::vector<int> col_members(colrows[c].begin(), colrows[c].end());
                for (int r2 : col_members) {
                    if (r2 == r) continue;
                    mpz_class q = balanced_quotient(rows[r2][c], v);
                    row_axpy(r2, r, q, nullptr);
                    auto it = rows[r2].find(c);
                    if (it != rows[r2].end()) {  // nonzero remainder: smaller pivot
                        r = r2;
                        moved = true;
                        break;
                    }
                }
                if (moved) continue;
                // reduce the pivot row; column c holds only the pivot now, so
                // each column op touches row r alone
                for (auto it = rows[r].begin(); it != rows[r].end() && !moved;) {
                    int c2 = it->first;
                    if (c2 == c) {
                        ++it;
                        continue;
                    }
                    mpz_class rem = it->second - balanced_quotient(it->second, v) * v;
                    ++it;
                    set_entry(r, c2, rem);
                    if (rem != 0) {
                        c = c2;
                        moved = true;
                    }
                }
                if (moved) continue;
                // pivot is alone on its row and column; enforce divisibility
                int bad_row = -1;
                for (int r2 = 0; r2 < nrows && bad_row < 0; ++r2) {
                    if (!row_active[r2] || r2 == r) continue;
                    for (const auto& [c2, v2] : rows[r2]) {
                        if (!mpz_divisible_p(v2.get_mpz_t(), v.get_mpz_t())) {
                            bad_row = r2;
                            break;
                        }
                    }
                }
                if (bad_row >= 0) {
                    row_axpy(r, bad_row, mpz_class(-1), nullptr);
                    continue;
                }
                factors.push_back(abs(v));
                row_active[r] = 0;
                col_active[c] = 0;
                for (const auto& [c2, v2] : rows[r]) colrows[c2].erase(r);
                rows[r].clear();
                break;
            }
            if ((++done & 0x3f) == 0) report(opts, "snf/core", done, 0);
        }
    }
};

// ---------------------------------------------------------------------------
// Dense path with transform tracking (small matrices only).
// ---------------------------------------------------------------------------
struct DenseSnf {
    DenseIntMatrix a, u, v, vinv;
    int nrows, ncols;

    explicit DenseSnf(const SparseIntMatrix& m)
        : a(to_dense(m)),
          u(dense_identity(m.rows())),
          v(dense_identity(m.cols())),
          vinv(dense_identity(m.cols())),
          nrows(m.rows()),
          ncols(m.cols()) {}

    void row_op(int dst, int src, const mpz_class& q) {  // row dst += q * row src
        for (int j = 0; j < ncols; ++j) a[dst][j] += q * a[src][j];
        for (int j = 0; j < nrows; ++j) u[dst][j] += q * u[src][j];
    }
    void col_op(int dst, int src, const mpz_class& q) {  // col dst += q * col src
        for (int i = 0; i < nrows; ++i) a[i][dst] += q * a[i][src];
        for (int i = 0; i < ncols; ++i) v[i][dst] += q * v[i][src];
        for (int j = 0; j < ncols; ++j) vinv[src][j] -= q * vinv[dst][j];
    }
    void row_swap(int i, int j) {
        if (i == j) return;
        std::swap(a[i], a[j]);
        std::swap(u[i], u[j]);
    }
    void col_swap(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < nrows; ++r) std::swap(a[r][i], a[r][j]);
        for (int r = 0; r < ncols; ++r) std::swap(v[r][i], v[r][j]);
        std::swap(vinv[i], vinv[j]);
    }
    void row_negate(int i) {
        for (int j = 0; j < ncols; ++j) a[i][j] = -a[i][j];
        for (int j = 0; j < nrows; ++j) u[i][j] = -u[i][j];
    }

    std::vector<mpz_class> run() {
        int t = 0;
        const int steps = std::min(nrows, ncols);
        while (t < steps) {
            int br = -1, bc = -1;
            mpz_class best;
            for (int i = t; i < nrows; ++i)
                for (int j = t; j < ncols; ++j)
                    if (a[i][j] != 0 &&
                        (br < 0 || mpz_cmpabs(a[i][j].get_mpz_t(), best.get_mpz_t()) < 0)) {
                        best = a[i][j];
                        br = i;
                        bc = j;
                    }
            if (br < 0) break;
            row_swap(t, br);
            col_swap(t, bc);
            for (;;) {
                bool clean = true;
                for (int i = t + 1; i < nrows; ++i) {
                    if (a[i][t] == 0) continue;
                    mpz_class q = balanced_quotient(a[i][t], a[t][t]);
                    row_op(i, t, -q);
                    if (a[i][t] != 0) {
                        row_swap(t, i);
                        clean = false;
                    }
                }
                if (!clean) continue;
                for (int j = t + 1; j < ncols; ++j) {
                    if (a[t][j] == 0) continue;
                    mpz_class q = balanced_quotient(a[t][j], a[t][t]);
                    col_op(j, t, -q);
                    if (a[t][j] != 0) {
                        col_swap(t, j);
                        clean = false;
                    }
                }
                if (!clean) continue;
                int bad = -1;
                for (int i = t + 1; i < nrows && bad < 0; ++i)
                    for (int j = t + 1; j < ncols; ++j)
                        if (!mpz_divisible_p(a[i][j].get_mpz_t(), a[t][t].get_mpz_t())) {
                            bad = i;
                            break;
                        }
                if (bad >= 0) {
                    row_op(t, bad, mpz_class(1));
                    continue;
                }
                break;
            }
            if (a[t][t] < 0) row_negate(t);
            ++t;
        }
        std::vector<mpz_class> factors;
        for (int i = 0; i < t; ++i) factors.push_back(a[i][i]);
        return factors;
    }
};

void enforce_divisibility_chain(std::vector<mpz_class>& factors) {
    // sort ascending by absolute value, then gcd/lcm sweep on the non-units
    std::sort(factors.begin(), factors.end());
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
            for (std::size_t j = i + 1; j < factors.size(); ++j) {
                if (factors[i] == 1) break;
                if (!mpz_divisible_p(factors[j].get_mpz_t(), factors[i].get_mpz_t())) {
                    mpz_class g = gcd(factors[i], factors[j]);
                    mpz_class l = factors[i] / g * factors[j];
                    factors[i] = g;
                    factors[j] = l;
                    changed = true;
                }
            }
        }
        if (changed) std::sort(factors.begin(), factors.end());
    }
}

}  // namespace

SnfResult smith_normal_form(const SparseIntMatrix& m, const SnfOptions& opts) {
    SnfResult out;
    if (opts.with_transforms) {
        DenseSnf dense(m);
        out.factors = dense.run();
        out.row_transform = std::move(dense.u);
        out.col_transform = std::move(dense.v);
        out.col_transform_inv = std::move(dense.vinv);
        return out;
    }

    // Consistency screen for large inputs: GF(p) ranks must match the factor
    // counts coprime to p afterwards.
    std::vector<std::pair<long long, long long>> screen;
    if (m.nnz() > 200000) {
        report(opts, "snf/screen", 0, 2);
        screen.emplace_back(2, rank_mod_p(m, 2));
        report(opts, "snf/screen", 1, 2);
        screen.emplace_back(3, rank_mod_p(m, 3));
        report(opts, "snf/screen", 2, 2);
    }

    SparseElim elim(m);
    elim.unit_pivot_phase(opts);
    elim.euclidean_phase(opts);
    out.factors = std::move(elim.factors);
    enforce_divisibility_chain(out.factors);

    for (auto [p, rk] : screen) {
        long long coprime = 0;
        for (const auto& d : out.factors)
            if (!mpz_divisible_ui_p(d.get_mpz_t(), static_cast<unsigned long>(p))) ++coprime;
        if (coprime != rk)
            throw std::logic_error("smith_normal_form: GF(p) rank screen mismatch");
    }
    return out;
}

AbelianInvariants cokernel_invariants(const SparseIntMatrix& m, const SnfOptions& opts) {
    SnfResult snf = smith_normal_form(m, opts);
    AbelianInvariants inv;
    inv.free_rank = m.cols() - snf.rank();
    for (const auto& d : snf.factors)
        if (d > 1) inv.torsion.push_back(d);
    return inv;
}

long long rank_mod_p(const SparseIntMatrix& m, long long p) {
    if (!is_prime(p)) throw std::invalid_argument("rank_mod_p: p is not prime");
    auto mulmod = [p](long long a, long long b) -> long long {
        return static_cast<long long>((static_cast<__int128>(a) * b) % p);
    };
    auto powmod = [&](long long b, long long e) {
        long long r = 1;
        while (e) {
            if (e & 1) r = mulmod(r, b);
            b = mulmod(b, b);
            e >>= 1;
        }
        return r;
    };

    std::vector<std::map<int, long long>> rows(m.rows());
    std::vector<std::set<int>> colrows(m.cols());
    for (const auto& [rc, v] : m.entries()) {
        long long r = static_cast<long long>(
            mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(p)));
        if (r != 0) {
            rows[rc.first].emplace(rc.second, r);
            colrows[rc.second].insert(rc.first);
        }
    }

    // Markowitz-style pivoting, mirroring the sparse SNF phase: over a field
    // every nonzero entry is a unit pivot.
    using Cand = std::tuple<long long, int, int>;
    std::priority_queue<Cand, std::vector<Cand>, std::greater<Cand>> heap;
    auto score = [&](int r, int c) {
        return static_cast<long long>(rows[r].size() - 1) *
               static_cast<long long>(colrows[c].size() - 1);
    };
    std::vector<char> row_active(m.rows(), 1);
    for (int r = 0; r < m.rows(); ++r)
        for (const auto& [c, v] : rows[r]) heap.emplace(score(r, c), r, c);

    long long rank = 0;
    while (!heap.empty()) {
        auto [s, r, c] = heap.top();
        heap.pop();
        if (!row_active[r]) continue;
        auto pit = rows[r].find(c);
        if (pit == rows[r].end()) continue;
        if (score(r, c) != s) {
            heap.emplace(score(r, c), r, c);
            continue;
        }
        long long inv = powmod(pit->second, p - 2);
        std::vector<int> others(colrows[c].begin(), colrows[c].end());
        for (int r2 : others) {
            if (r2 == r) continue;
            long long f = mulmod(rows[r2][c], inv);
            for (const auto& [c2, v2] : rows[r]) {
                auto it2 = rows[r2].find(c2);
                long long nv = ((it2 == rows[r2].end() ? 0 : it2->second) - mulmod(f, v2)) % p;
                if (nv < 0) nv += p;
                if (nv == 0) {
                    if (it2 != rows[r2].end()) {
                        rows[r2].erase(it2);
                        colrows[c2].erase(r2);
                    }
                } else {
                    if (it2 == rows[r2].end()) {
                        rows[r2].emplace(c2, nv);
                        colrows[c2].insert(r2);
                        heap.emplace(score(r2, c2), r2, c2);
                    } else {
                        it2->second = nv;
                    }
                }
            }
        }
        row_active[r] = 0;
        for (const auto& [c2, v2] : rows[r]) colrows[c2].erase(r);
        rows[r].clear();
        ++rank;
    }
    return rank;
}

LatticeInvariants lattice_image_invariants(const SparseIntMatrix& m) {
    SnfResult snf = smith_normal_form(m);
    LatticeInvariants out;
    out.image.free_rank = snf.rank();
    out.quotient.free_rank = m.cols() - snf.rank();
    for (const auto& d : snf.factors)
        if (d > 1) out.quotient.torsion.push_back(d);
    return out;
}

LatticeInvariants lattice_image_invariants(const std::vector<std::vector<long long>>& vectors,
                                           int ambient_dim) {
    SparseIntMatrix m(static_cast<int>(vectors.size()), ambient_dim);
    for (std::size_t r = 0; r < vectors.size(); ++r) {
        if (static_cast<int>(vectors[r].size()) != ambient_dim)
            throw std::invalid_argument("lattice_image_invariants: dimension mismatch");
        for (int c = 0; c < ambient_dim; ++c)
            if (vectors[r][c] != 0) m.set(static_cast<int>(r), c, mpz_class(static_cast<long>(vectors[r][c])));
    }
    return lattice_image_invariants(m);
}

SparseIntMatrix simplex_boundary_matrix(int n, int k) {
    if (k < 1 || k > n - 1) throw std::invalid_argument("simplex_boundary_matrix: k out of range");
    SubsetBasis source = subset_basis(n, k + 1);
    SubsetBasis target = subset_basis(n, k);
    SparseIntMatrix m(target.size(), source.size());
    std::vector<int> face(k);
    for (int s = 0; s < source.size(); ++s) {
        const auto& simplex = source.sets[s];
        for (int t = 0; t <= k; ++t) {
            face.clear();
            for (int i = 0; i <= k; ++i)
                if (i != t) face.push_back(simplex[i]);
            m.set(target.index_of(face), s, (t % 2 == 0) ? mpz_class(1) : mpz_class(-1));
        }
    }
    return m;
}

}  // namespace km
