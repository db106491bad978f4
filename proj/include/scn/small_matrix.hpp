#pragma once

#include <span>

#include "scn/signed_log.hpp"

namespace scn {

// Dense matrix of SignedLog entries, order 1..8.  Every determinant in
// the closed-form distribution expressions is (alpha+1) x (alpha+1) or
// alpha x alpha with small alpha, so a fixed-capacity grid suffices.
class SmallMatrix {
public:
    static constexpr int kMaxOrder = 8;

    explicit SmallMatrix(int order);

    int order() const { return order_; }
    SignedLog& at(int i, int j) { return e_[i * order_ + j]; }
    const SignedLog& at(int i, int j) const { return e_[i * order_ + j]; }

private:
    int order_;
    SignedLog e_[kMaxOrder * kMaxOrder];
};

// Determinant with exact sign handling.  Cofactor expansion over
// permutations up to order 6 (entries with sign 0 short-circuit their
// branch); Gaussian elimination with signed-log pivoting for orders 7-8.
// An order-0 determinant is 1 by the empty-product convention exposed
// through det_empty().
SignedLog det(const SmallMatrix& m);
inline SignedLog det_empty() { return SignedLog::one(); }

// Vandermonde product prod_{i<k} (x_k - x_i); exact zero for repeated
// nodes, 1 for fewer than two nodes.
SignedLog vandermonde(std::span<const double> nodes);

}  // namespace scn
