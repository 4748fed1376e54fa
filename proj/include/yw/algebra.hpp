// Lie-algebra layer: generator labels, the loop algebra of gl(n) with its two
// central pairings, pyramids (column partitions with a pivot), and the
// lower-triangular-block superalgebra attached to a pyramid.
#ifndef YW_ALGEBRA_HPP
#define YW_ALGEBRA_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "yw/scalar.hpp"

namespace yw {

enum class Kind : uint8_t {
    E = 0,    // matrix unit E[i,j] (or even generator e[i,j] of a super slot)
    Psi = 1,  // odd generator Psi[i,j] of a super slot
    C = 2,    // central element paired with the trace form
    Z = 3,    // central element paired with the rank form
};

struct Gen {
    Kind kind = Kind::E;
    int i = 0;
    int j = 0;
    auto operator<=>(const Gen&) const = default;

    static Gen E(int i, int j) { return Gen{Kind::E, i, j}; }
    static Gen Psi(int i, int j) { return Gen{Kind::Psi, i, j}; }
    static Gen C() { return Gen{Kind::C, 0, 0}; }
    static Gen Z() { return Gen{Kind::Z, 0, 0}; }
    bool odd() const { return kind == Kind::Psi; }
    std::string str() const;
};

// A pyramid: column sizes q_1..q_l with a pivot v such that the sizes are
// non-decreasing up to column v and non-increasing afterwards.  Box indices
// run 1..N column by column; rows are counted inside the window
// (qMax - q_col, qMax].
struct Pyramid {
    std::vector<int> q;  // 1-based access via q[s-1]
    int v = 1;
    int N = 0, l = 0, qMax = 0, qMin = 0;

    Pyramid() = default;
    Pyramid(std::vector<int> sizes, int pivot);

    int col(int i) const;
    int row(int i) const;
    // Box index with the given column and row, or 0 when outside the pyramid.
    int box(int c, int r) const;
    int hat(int i) const { return box(col(i) + 1, row(i)); }
    int tilde(int i) const { return box(col(i) - 1, row(i)); }

    Scalar alpha(int s) const { return Scalar::k() + Scalar::integer(N - q[s - 1]); }
    Scalar gamma(int a) const {
        Scalar g;
        for (int u = a + 1; u <= l; ++u) g += alpha(u);
        return g;
    }
    bool valid_e(int i, int j) const { return in_range(i, j) && col(i) >= col(j); }
    bool valid_psi(int i, int j) const { return in_range(i, j) && col(i) > col(j); }

private:
    bool in_range(int i, int j) const { return i >= 1 && i <= N && j >= 1 && j <= N; }
};

// One tensor slot: either the loop algebra of gl(n) (with the values of the
// two central pairings) or the superalgebra of a pyramid with its restricted
// form.  The central term of [u t^a, v t^-a] is a * pair(u, v) in both cases.
struct SlotCtx {
    bool super = false;
    int n = 0;           // matrix size (loop slot) or N (super slot)
    Scalar cpair;        // coefficient of delta_{i,q} delta_{j,p}
    Scalar zpair;        // coefficient of delta_{i,j} delta_{p,q}
    Pyramid pyr;         // populated for super slots only

    static SlotCtx loop_gl(int n, Scalar level, Scalar zval = Scalar::one()) {
        SlotCtx s;
        s.n = n;
        s.cpair = std::move(level);
        s.zpair = std::move(zval);
        return s;
    }
    static SlotCtx super_a(const Pyramid& p) {
        SlotCtx s;
        s.super = true;
        s.n = p.N;
        s.cpair = Scalar::k();
        s.zpair = Scalar::one();
        s.pyr = p;
        return s;
    }
    bool valid(const Gen& g) const;
};

using Ctx = std::vector<SlotCtx>;

// Lie bracket inside one slot, without the central contribution (which is
// mode-dependent and added by the module action).  Results whose label falls
// outside the slot's algebra are dropped.
struct BrTerm {
    Gen g;
    int sign;  // +1 or -1
};
std::vector<BrTerm> bracket(const SlotCtx& slot, const Gen& a, const Gen& b);

// Central pairing used in [u t^a, v t^-a]; zero whenever an odd generator is
// involved and for the central letters themselves.
Scalar central_pair(const SlotCtx& slot, const Gen& a, const Gen& b);

}  // namespace yw

#endif
