#include "levilab/lattice.hpp"

#include <cstdlib>
#include <utility>

namespace levilab {

namespace {

// Row operations on `m` restricted to the first `active` columns decide the
// pivots; the remaining columns ride along.
void echelonize(IntMatrix& m, Eigen::Index active, Eigen::Index& rank)
{
    rank = 0;
    for (Eigen::Index col = 0; col < active && rank < m.rows(); ++col) {
        // Euclid on column `col` among rows rank..end until one nonzero remains
        for (;;) {
            Eigen::Index best = -1;
            for (Eigen::Index r = rank; r < m.rows(); ++r)
                if (m(r, col) != 0 && (best < 0 || std::llabs(m(r, col)) < std::llabs(m(best, col))))
                    best = r;
            if (best < 0)
                break;
            m.row(rank).swap(m.row(best));
            bool done = true;
            for (Eigen::Index r = rank + 1; r < m.rows(); ++r) {
                if (m(r, col) == 0)
                    continue;
                const std::int64_t q = m(r, col) / m(rank, col);
                m.row(r) -= q * m.row(rank);
                if (m(r, col) != 0)
                    done = false;
            }
            if (done)
                break;
        }
        if (m(rank, col) == 0)
            continue;
        if (m(rank, col) < 0)
            m.row(rank) *= -1;
        ++rank;
    }
}

} // namespace

IntMatrix hermite_normal_form(IntMatrix rows)
{
    Eigen::Index rank = 0;
    echelonize(rows, rows.cols(), rank);
    IntMatrix h = rows.topRows(rank);
    for (Eigen::Index r = 0; r < h.rows(); ++r) {
        Eigen::Index pivot = 0;
        while (h(r, pivot) == 0)
            ++pivot;
        for (Eigen::Index above = 0; above < r; ++above) {
            std::int64_t q = h(above, pivot) / h(r, pivot);
            if (h(above, pivot) - q * h(r, pivot) < 0)
                --q;
            h.row(above) -= q * h.row(r);
        }
    }
    return h;
}

IntMatrix integer_kernel(const IntMatrix& a)
{
    const Eigen::Index n = a.cols();
    // [A^T | I]: unimodular row operations keep the right block a basis change
    IntMatrix aug(n, a.rows() + n);
    aug.leftCols(a.rows()) = a.transpose();
    aug.rightCols(n) = IntMatrix::Identity(n, n);
    Eigen::Index rank = 0;
    echelonize(aug, a.rows(), rank);
    IntMatrix kernel = aug.bottomRows(n - rank).rightCols(n);
    return hermite_normal_form(std::move(kernel));
}

} // namespace levilab
