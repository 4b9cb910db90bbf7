#include "km/homs.hpp"

#include <mutex>
#include <algorithm>
#include <stdexcept>

namespace km {

namespace {

std::vector<int> sorted3(int a, int b, int c) {
    std::vector<int> s{a, b, c};
    std::sort(s.begin(), s.end());
    return s;
}

std::vector<int> sorted2(int a, int b) {
    if (a > b) std::swap(a, b);
    return {a, b};
}

const SubsetBasis& cached_basis(int n, int k) {
    static std::mutex mutex;
    static std::map<std::pair<int, int>, SubsetBasis> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto key = std::make_pair(n, k);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, subset_basis(n, k)).first;
    return it->second;
}

const SubsetBasis& basis3(int n) { return cached_basis(n, 3); }
const SubsetBasis& basis2(int n) { return cached_basis(n, 2); }

}  // namespace

IntVec phi3(const Quad& q, int n) {
    if (!valid_quad(q, n)) throw std::invalid_argument("phi3: invalid quad");
    const SubsetBasis& b = basis3(n);
    IntVec v(b.size(), 0);
    const int i = q.e[0], j = q.e[1], k = q.e[2], l = q.e[3];
    v[b.index_of(sorted3(i, j, k))] += 1;
    v[b.index_of(sorted3(i, j, l))] -= 1;
    v[b.index_of(sorted3(i, k, l))] += 1;
    v[b.index_of(sorted3(j, k, l))] -= 1;
    return v;
}

IntVec phi2(const Quad& q, int n) {
    if (!valid_quad(q, n)) throw std::invalid_argument("phi2: invalid quad");
    const SubsetBasis& b = basis2(n);
    IntVec v(b.size(), 0);
    v[b.index_of(sorted2(q.e[0], q.e[2]))] += 1;
    v[b.index_of(sorted2(q.e[1], q.e[3]))] -= 1;
    return v;
}

IntVec eta3(const IntVec& v, int n) {
    const SubsetBasis& b3 = basis3(n);
    const SubsetBasis& b2 = basis2(n);
    if (static_cast<int>(v.size()) != b3.size())
        throw std::invalid_argument("eta3: dimension mismatch");
    IntVec out(b2.size(), 0);
    for (int idx = 0; idx < b3.size(); ++idx) {
        if (v[idx] == 0) continue;
        const auto& s = b3.sets[idx];
        out[b2.index_of(sorted2(s[0], s[1]))] += v[idx];
        out[b2.index_of(sorted2(s[1], s[2]))] += v[idx];
        out[b2.index_of(sorted2(s[0], s[2]))] += v[idx];
    }
    return out;
}

int nu(const Quad& q) { return q.contains(1) ? 1 : 0; }

int nu_word(const Word& w, const std::vector<Quad>& quads) {
    int s = 0;
    for (const Letter& l : w) s ^= nu(quads.at(l.gen));
    return s;
}

IntVec AbelianHom::apply(const Word& w) const {
    IntVec out(target_dim, 0);
    for (const Letter& l : w) {
        const IntVec& img = images.at(l.gen);
        for (int i = 0; i < target_dim; ++i) out[i] += l.sign * img[i];
    }
    if (modulus == 2)
        for (long long& x : out) x = ((x % 2) + 2) % 2;
    return out;
}

std::vector<int> check_well_defined(const AbelianHom& h, const Presentation& p) {
    if (static_cast<int>(h.images.size()) != p.generator_count())
        throw std::invalid_argument("check_well_defined: image table size mismatch");
    std::vector<int> bad;
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
        IntVec v = h.apply(p.relators[i]);
        if (std::any_of(v.begin(), v.end(), [](long long x) { return x != 0; }))
            bad.push_back(static_cast<int>(i));
    }
    return bad;
}

std::vector<Quad> generator_quads(const Presentation& p) {
    std::vector<Quad> out;
    out.reserve(p.generators.size());
    for (const std::string& name : p.generators) {
        auto q = parse_quad_name(name);
        if (!q) throw std::invalid_argument("generator name is not a quad label: " + name);
        out.push_back(*q);
    }
    return out;
}

std::vector<std::string> hom_registry_names() {
    return {"phi3", "phi2", "phi3_mod2", "phi2_mod2", "nu", "eps_all_ones", "abelianization"};
}

namespace {

AbelianHom make_abelianization(const Presentation& p) {
    // Requires H1 elementary abelian of exponent 2; then the canonical map
    // onto H1 is computed from the GF(2) reduced row echelon form of the
    // relation matrix: non-pivot generators map to basis vectors, pivot
    // generators to the complementary combination their row prescribes.
    AbelianInvariants inv = h1(p);
    if (inv.free_rank != 0 ||
        std::any_of(inv.torsion.begin(), inv.torsion.end(),
                    [](const mpz_class& d) { return d != 2; }))
        throw std::invalid_argument(
            "abelianization hom: H1 is not an elementary abelian 2-group (target would be "
            "infinite or of higher exponent)");

    const int g = p.generator_count();
    std::vector<std::vector<uint8_t>> rows;
    for (const Word& r : p.relators) {
        std::vector<uint8_t> row(g, 0);
        for (const Letter& l : r) row[l.gen] ^= 1;
        if (std::any_of(row.begin(), row.end(), [](uint8_t x) { return x != 0; }))
            rows.push_back(std::move(row));
    }
    // RREF over GF(2)
    std::vector<int> pivot_col;
    std::size_t rank = 0;
    for (int c = 0; c < g && rank < rows.size(); ++c) {
        std::size_t sel = rank;
        while (sel < rows.size() && !rows[sel][c]) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[rank], rows[sel]);
        for (std::size_t r2 = 0; r2 < rows.size(); ++r2) {
            if (r2 != rank && rows[r2][c])
                for (int cc = 0; cc < g; ++cc) rows[r2][cc] ^= rows[rank][cc];
        }
        pivot_col.push_back(c);
        ++rank;
    }
    std::vector<int> free_cols;
    {
        std::vector<char> is_pivot(g, 0);
        for (int c : pivot_col) is_pivot[c] = 1;
        for (int c = 0; c < g; ++c)
            if (!is_pivot[c]) free_cols.push_back(c);
    }
    std::vector<int> free_index(g, -1);
    for (std::size_t i = 0; i < free_cols.size(); ++i) free_index[free_cols[i]] = static_cast<int>(i);

    AbelianHom h;
    h.name = "abelianization";
    h.modulus = 2;
    h.target_dim = static_cast<int>(free_cols.size());
    h.images.assign(g, IntVec(h.target_dim, 0));
    for (int c : free_cols) h.images[c][free_index[c]] = 1;
    for (std::size_t r = 0; r < rank; ++r) {
        int pc = pivot_col[r];
        for (int c = 0; c < g; ++c)
            if (c != pc && rows[r][c]) h.images[pc][free_index[c]] ^= 1;
    }
    return h;
}

}  // namespace

AbelianHom make_hom(const std::string& name, const Presentation& p) {
    AbelianHom h;
    h.name = name;
    if (name == "eps_all_ones") {
        h.modulus = 2;
        h.target_dim = 1;
        h.images.assign(p.generator_count(), IntVec{1});
        return h;
    }
    if (name == "abelianization") return make_abelianization(p);

    std::vector<Quad> quads = generator_quads(p);
    if (name == "nu") {
        if (!(p.family == Family::gamma && p.n == 5))
            throw std::invalid_argument("nu: defined on the gamma family with n = 5");
        h.modulus = 2;
        h.target_dim = 1;
        for (const Quad& q : quads) h.images.push_back(IntVec{nu(q)});
        return h;
    }
    if (name == "phi3" || name == "phi3_mod2") {
        h.modulus = (name == "phi3") ? 0 : 2;
        h.target_dim = basis3(p.n).size();
        for (const Quad& q : quads) h.images.push_back(phi3(q, p.n));
        if (h.modulus == 2)
            for (auto& img : h.images)
                for (long long& x : img) x = ((x % 2) + 2) % 2;
        return h;
    }
    if (name == "phi2" || name == "phi2_mod2") {
        h.modulus = (name == "phi2") ? 0 : 2;
        h.target_dim = basis2(p.n).size();
        for (const Quad& q : quads) h.images.push_back(phi2(q, p.n));
        if (h.modulus == 2)
            for (auto& img : h.images)
                for (long long& x : img) x = ((x % 2) + 2) % 2;
        return h;
    }
    throw std::invalid_argument("make_hom: unknown hom '" + name + "'");
}

SparseIntMatrix hom_image_matrix(const AbelianHom& h) {
    SparseIntMatrix m(static_cast<int>(h.images.size()), h.target_dim);
    for (std::size_t r = 0; r < h.images.size(); ++r)
        for (int c = 0; c < h.target_dim; ++c)
            if (h.images[r][c] != 0) m.set(static_cast<int>(r), c, mpz_class(static_cast<long>(h.images[r][c])));
    return m;
}

}  // namespace km
