#include "km/matrix.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace km {

SparseIntMatrix::SparseIntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("SparseIntMatrix: negative dimension");
}

void SparseIntMatrix::check(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("SparseIntMatrix: index out of range");
}

void SparseIntMatrix::add(int r, int c, const mpz_class& v) {
    check(r, c);
    if (v == 0) return;
    auto key = std::make_pair(r, c);
    auto it = entries_.find(key);
    if (it == entries_.end()) {
        entries_.emplace(key, v);
    } else {
        it->second += v;
        if (it->second == 0) entries_.erase(it);
    }
}

void SparseIntMatrix::set(int r, int c, mpz_class v) {
    check(r, c);
    auto key = std::make_pair(r, c);
    if (v == 0)
        entries_.erase(key);
    else
        entries_[key] = std::move(v);
}

mpz_class SparseIntMatrix::at(int r, int c) const {
    check(r, c);
    auto it = entries_.find(std::make_pair(r, c));
    return it == entries_.end() ? mpz_class(0) : it->second;
}

SparseIntMatrix multiply(const SparseIntMatrix& a, const SparseIntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("multiply: dimension mismatch");
    // row-major view of b
    std::vector<std::vector<std::pair<int, mpz_class>>> brows(b.rows());
    for (const auto& [rc, v] : b.entries()) brows[rc.first].emplace_back(rc.second, v);
    SparseIntMatrix out(a.rows(), b.cols());
    for (const auto& [rc, v] : a.entries()) {
        for (const auto& [c2, v2] : brows[rc.second]) out.add(rc.first, c2, v * v2);
    }
    return out;
}

SparseIntMatrix transpose(const SparseIntMatrix& a) {
    SparseIntMatrix out(a.cols(), a.rows());
    for (const auto& [rc, v] : a.entries()) out.set(rc.second, rc.first, v);
    return out;
}

SparseIntMatrix vstack(const SparseIntMatrix& a, const SparseIntMatrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column mismatch");
    SparseIntMatrix out(a.rows() + b.rows(), a.cols());
    for (const auto& [rc, v] : a.entries()) out.set(rc.first, rc.second, v);
    for (const auto& [rc, v] : b.entries()) out.set(a.rows() + rc.first, rc.second, v);
    return out;
}

void write_matrix_market(std::ostream& os, const SparseIntMatrix& m) {
    os << "%%MatrixMarket matrix coordinate integer general\n";
    os << m.rows() << ' ' << m.cols() << ' ' << m.nnz() << '\n';
    for (const auto& [rc, v] : m.entries())
        os << rc.first + 1 << ' ' << rc.second + 1 << ' ' << v << '\n';
}

SparseIntMatrix read_matrix_market(std::istream& is) {
    std::string line;
    bool header_seen = false;
    long rows = -1, cols = -1, count = -1;
    SparseIntMatrix out;
    long read = 0;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line[0] == '%') {
            if (!header_seen && line.rfind("%%MatrixMarket", 0) == 0) {
                if (line.find("coordinate") == std::string::npos ||
                    line.find("integer") == std::string::npos)
                    throw std::invalid_argument("read_matrix_market: unsupported format");
                header_seen = true;
            }
            continue;
        }
        std::istringstream ls(line);
        if (rows < 0) {
            if (!(ls >> rows >> cols >> count))
                throw std::invalid_argument("read_matrix_market: bad size line");
            out = SparseIntMatrix(static_cast<int>(rows), static_cast<int>(cols));
            continue;
        }
        long r, c;
        std::string v;
        if (!(ls >> r >> c >> v)) throw std::invalid_argument("read_matrix_market: bad entry");
        out.set(static_cast<int>(r - 1), static_cast<int>(c - 1), mpz_class(v));
        ++read;
    }
    if (rows < 0 || read != count)
        throw std::invalid_argument("read_matrix_market: truncated input");
    return out;
}

DenseIntMatrix dense_identity(int n) {
    DenseIntMatrix d(n, std::vector<mpz_class>(n, 0));
    for (int i = 0; i < n; ++i) d[i][i] = 1;
    return d;
}

DenseIntMatrix to_dense(const SparseIntMatrix& m) {
    DenseIntMatrix d(m.rows(), std::vector<mpz_class>(m.cols(), 0));
    for (const auto& [rc, v] : m.entries()) d[rc.first][rc.second] = v;
    return d;
}

SparseIntMatrix from_dense(const DenseIntMatrix& d, int rows, int cols) {
    SparseIntMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (d[r][c] != 0) m.set(r, c, d[r][c]);
    return m;
}

DenseIntMatrix dense_multiply(const DenseIntMatrix& a, const DenseIntMatrix& b) {
    if (a.empty() || b.empty()) return {};
    std::size_t n = a.size(), k = b.size(), m = b[0].size();
    DenseIntMatrix out(n, std::vector<mpz_class>(m, 0));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != k) throw std::invalid_argument("dense_multiply: shape");
        for (std::size_t j = 0; j < k; ++j) {
            if (a[i][j] == 0) continue;
            for (std::size_t c = 0; c < m; ++c) out[i][c] += a[i][j] * b[j][c];
        }
    }
    return out;
}

mpz_class dense_determinant(const DenseIntMatrix& a) {
    // Bareiss fraction-free elimination.
    std::size_t n = a.size();
    if (n == 0) return 1;
    DenseIntMatrix m = a;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_class q;
                mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = q;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace km
