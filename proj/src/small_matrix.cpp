#include "scn/small_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace scn {

SmallMatrix::SmallMatrix(int order) : order_(order) {
    if (order < 1 || order > kMaxOrder)
        throw std::domain_error("SmallMatrix: order must be 1..8");
}

namespace {

// Recursive first-column cofactor expansion over the rows still alive.
SignedLog det_cofactor(const SmallMatrix& m, unsigned rows, int col) {
    const int n = m.order();
    if (col == n) return SignedLog::one();
    SignedLog acc = SignedLog::zero();
    int parity = 0;
    for (int i = 0; i < n; ++i) {
        if (!(rows & (1u << i))) continue;
        const SignedLog& entry = m.at(i, col);
        if (!entry.is_zero()) {
            SignedLog sub = det_cofactor(m, rows & ~(1u << i), col + 1);
            SignedLog term = entry * sub;
            if (parity & 1) term = -term;
            acc = signedlog_add(acc, term);
        }
        ++parity;
    }
    return acc;
}

SignedLog det_elimination(SmallMatrix m) {
    const int n = m.order();
    int swap_sign = 1;
    SignedLog result = SignedLog::one();
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int i = k; i < n; ++i) {
            if (m.at(i, k).is_zero()) continue;
            if (pivot < 0 || m.at(pivot, k).logmag < m.at(i, k).logmag) pivot = i;
        }
        if (pivot < 0) return SignedLog::zero();
        if (pivot != k) {
            for (int j = k; j < n; ++j) std::swap(m.at(k, j), m.at(pivot, j));
            swap_sign = -swap_sign;
        }
        result *= m.at(k, k);
        for (int i = k + 1; i < n; ++i) {
            if (m.at(i, k).is_zero()) continue;
            SignedLog f = m.at(i, k) / m.at(k, k);
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = signedlog_add(m.at(i, j), -(f * m.at(k, j)));
            m.at(i, k) = SignedLog::zero();
        }
    }
    if (swap_sign < 0) result = -result;
    return result;
}

}  // namespace

SignedLog det(const SmallMatrix& m) {
    if (m.order() <= 6) return det_cofactor(m, (1u << m.order()) - 1u, 0);
    return det_elimination(m);
}

SignedLog vandermonde(std::span<const double> nodes) {
    SignedLog r = SignedLog::one();
    for (size_t i = 0; i < nodes.size(); ++i)
        for (size_t k = i + 1; k < nodes.size(); ++k) {
            double d = nodes[k] - nodes[i];
            if (d == 0.0) return SignedLog::zero();
            r *= SignedLog::from_real(d);
        }
    return r;
}

}  // namespace scn
