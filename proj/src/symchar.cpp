#include "km/symchar.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace km {

int Partition::n() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::vector<int> Partition::multiplicities() const {
    std::vector<int> mult(n() + 1, 0);
    for (int p : parts) mult[p] += 1;
    return mult;
}

std::string partition_name(const Partition& p) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        if (i) os << ',';
        os << p.parts[i];
    }
    os << ']';
    return os.str();
}

std::vector<Partition> partitions(int n) {
    if (n < 1) throw std::invalid_argument("partitions: n < 1");
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(Partition{cur});
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

mpz_class factorial(int n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

mpz_class class_size(const Partition& cycle_type) {
    const int n = cycle_type.n();
    std::vector<int> mult = cycle_type.multiplicities();
    mpz_class denom = 1;
    for (int k = 1; k <= n; ++k) {
        for (int i = 0; i < mult[k]; ++i) denom *= k;
        mpz_class fac;
        mpz_fac_ui(fac.get_mpz_t(), static_cast<unsigned long>(mult[k]));
        denom *= fac;
    }
    return factorial(n) / denom;
}

mpz_class chi_subsets(const Partition& cycle_type, int k) {
    const int n = cycle_type.n();
    if (k < 0 || k > n) throw std::invalid_argument("chi_subsets: k out of range");
    // coefficient of x^k in prod over cycles (1 + x^len)
    std::vector<mpz_class> coeff(k + 1, 0);
    coeff[0] = 1;
    for (int len : cycle_type.parts)
        for (int d = k; d >= len; --d) coeff[d] += coeff[d - len];
    return coeff[k];
}

std::string irrep_label_name(IrrepLabel label, int n) {
    switch (label) {
        case IrrepLabel::row_n: return "[" + std::to_string(n) + "]";
        case IrrepLabel::row_n1_1: return "[" + std::to_string(n - 1) + ",1]";
        case IrrepLabel::row_n2_2: return "[" + std::to_string(n - 2) + ",2]";
        case IrrepLabel::row_n3_3: return "[" + std::to_string(n - 3) + ",3]";
    }
    return "?";
}

mpz_class chi_irrep(IrrepLabel label, const Partition& cycle_type, int n) {
    if (n < 4) throw std::invalid_argument("chi_irrep: n < 4");
    if (cycle_type.n() != n) throw std::invalid_argument("chi_irrep: cycle type of wrong n");
    std::vector<int> mult = cycle_type.multiplicities();
    mpz_class i1 = mult[1];
    mpz_class i2 = mult.size() > 2 ? mult[2] : 0;
    mpz_class i3 = mult.size() > 3 ? mult[3] : 0;
    auto choose2 = [](const mpz_class& m) -> mpz_class { return m * (m - 1) / 2; };
    auto choose3 = [](const mpz_class& m) -> mpz_class { return m * (m - 1) * (m - 2) / 6; };
    switch (label) {
        case IrrepLabel::row_n: return 1;
        case IrrepLabel::row_n1_1: return i1 - 1;
        case IrrepLabel::row_n2_2: return i2 + i1 * (i1 - 3) / 2;
        case IrrepLabel::row_n3_3: return i3 + i2 * (i1 - 1) + choose3(i1) - choose2(i1);
    }
    throw std::invalid_argument("chi_irrep: unknown label");
}

namespace {

// Murnaghan-Nakayama on beta-numbers: removing a border strip of length t is
// subtracting t from one beta-number while keeping them distinct; the height
// is the number of beta-numbers jumped over.
mpz_class mn_recurse(std::vector<int> beta, const std::vector<int>& cycles, std::size_t ci) {
    if (ci == cycles.size()) return 1;
    int t = cycles[ci];
    mpz_class total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        int target = beta[i] - t;
        if (target < 0) continue;
        bool clash = false;
        int jumped = 0;
        for (std::size_t j = 0; j < beta.size(); ++j) {
            if (j == i) continue;
            if (beta[j] == target) {
                clash = true;
                break;
            }
            if (beta[j] < beta[i] && beta[j] > target) ++jumped;
        }
        if (clash) continue;
        std::vector<int> next = beta;
        next[i] = target;
        mpz_class sub = mn_recurse(std::move(next), cycles, ci + 1);
        if (jumped % 2)
            total -= sub;
        else
            total += sub;
    }
    return total;
}

}  // namespace

mpz_class chi_mn(const Partition& diagram, const Partition& cycle_type) {
    if (diagram.n() != cycle_type.n())
        throw std::invalid_argument("chi_mn: partitions of different n");
    const int rows = static_cast<int>(diagram.parts.size());
    std::vector<int> beta(rows);
    for (int i = 0; i < rows; ++i) beta[i] = diagram.parts[i] + (rows - 1 - i);
    // degenerate row sequences (the [n-3,3] label at n=5) have a repeated
    // beta-number; the straightened character is identically zero
    std::vector<int> sorted_beta = beta;
    std::sort(sorted_beta.begin(), sorted_beta.end());
    if (std::adjacent_find(sorted_beta.begin(), sorted_beta.end()) != sorted_beta.end())
        return 0;
    std::vector<int> cycles = cycle_type.parts;  // largest first
    return mn_recurse(std::move(beta), cycles, 0);
}

ClassFunction class_function_subsets(int n, int k) {
    ClassFunction f;
    f.n = n;
    for (const Partition& p : partitions(n)) f.values.push_back(chi_subsets(p, k));
    return f;
}

ClassFunction class_function_irrep(IrrepLabel label, int n) {
    ClassFunction f;
    f.n = n;
    for (const Partition& p : partitions(n)) f.values.push_back(chi_irrep(label, p, n));
    return f;
}

ClassFunction class_function_mn(const Partition& diagram, int n) {
    if (diagram.n() != n) throw std::invalid_argument("class_function_mn: diagram of wrong n");
    ClassFunction f;
    f.n = n;
    for (const Partition& p : partitions(n)) f.values.push_back(chi_mn(diagram, p));
    return f;
}

mpq_class inner_product(const ClassFunction& f, const ClassFunction& g) {
    if (f.n != g.n || f.values.size() != g.values.size())
        throw std::invalid_argument("inner_product: mismatched class functions");
    mpz_class sum = 0;
    std::vector<Partition> parts = partitions(f.n);
    for (std::size_t i = 0; i < parts.size(); ++i)
        sum += class_size(parts[i]) * f.values[i] * g.values[i];
    mpq_class q(sum, factorial(f.n));
    q.canonicalize();
    return q;
}

mpz_class hook_dim(const Partition& diagram) {
    const int rows = static_cast<int>(diagram.parts.size());
    std::vector<int> conj(diagram.parts.empty() ? 0 : diagram.parts[0], 0);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < diagram.parts[i]; ++j) conj[j] += 1;
    mpz_class prod = 1;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < diagram.parts[i]; ++j)
            prod *= (diagram.parts[i] - j) + (conj[j] - i) - 1;
    return factorial(diagram.n()) / prod;
}

}  // namespace km
