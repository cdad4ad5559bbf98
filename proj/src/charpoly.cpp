#include "symcyc/charpoly.hpp"

#include <stdexcept>
#include <vector>

namespace symcyc {

IntPoly charpoly(const IntMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("charpoly requires a square matrix");
    const int n = static_cast<int>(m.rows());
    if (n == 0) return IntPoly{Int(1)};

    // Berkowitz: iterate over leading principal submatrices, combining
    // coefficient vectors through lower-triangular Toeplitz products.
    std::vector<Int> c{Int(1), -m(0, 0)};  // descending coefficients, monic
    std::vector<Int> t, w, next;
    for (int r = 2; r <= n; ++r) {
        t.assign(static_cast<size_t>(r) + 1, Int(0));
        t[0] = 1;
        t[1] = -m(r - 1, r - 1);
        w.assign(static_cast<size_t>(r) - 1, Int(0));
        for (int i = 0; i < r - 1; ++i) w[static_cast<size_t>(i)] = m(i, r - 1);
        for (int j = 2; j <= r; ++j) {
            Int dot = 0;
            for (int i = 0; i < r - 1; ++i) dot += m(r - 1, i) * w[static_cast<size_t>(i)];
            t[static_cast<size_t>(j)] = -dot;
            if (j < r) {
                next.assign(static_cast<size_t>(r) - 1, Int(0));
                for (int i = 0; i < r - 1; ++i) {
                    Int acc = 0;
                    for (int k = 0; k < r - 1; ++k) acc += m(i, k) * w[static_cast<size_t>(k)];
                    next[static_cast<size_t>(i)] = std::move(acc);
                }
                w.swap(next);
            }
        }
        std::vector<Int> out(static_cast<size_t>(r) + 1, Int(0));
        for (size_t i = 0; i < out.size(); ++i) {
            Int acc = 0;
            for (size_t j = 0; j < c.size(); ++j) {
                if (i >= j && i - j < t.size()) acc += t[i - j] * c[j];
            }
            out[i] = std::move(acc);
        }
        c.swap(out);
    }
    std::vector<Int> ascending(c.rbegin(), c.rend());
    return IntPoly(std::move(ascending));
}

Int matrix_power_entry(const IntMat& m, long n, int row, int col) {
    if (m.rows() != m.cols()) throw std::invalid_argument("matrix power requires a square matrix");
    if (row < 0 || col < 0 || row >= m.rows() || col >= m.cols())
        throw std::out_of_range("matrix entry index out of bounds");
    if (n < 0) throw std::invalid_argument("negative matrix power");
    return m.pow(static_cast<unsigned long>(n))(row, col);
}

}  // namespace symcyc
