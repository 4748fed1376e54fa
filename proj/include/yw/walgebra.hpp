// W-algebra layer for a pyramid: generators on the BRST side (inside the
// vacuum module of the lower-triangular block algebra), the odd differential
// cutting out the W-algebra, and the free-field (Miura) images with their
// loop-mode formulas.
#ifndef YW_WALGEBRA_HPP
#define YW_WALGEBRA_HPP

#include "yw/series.hpp"

namespace yw {

// A consecutive run of pyramid columns viewed as its own W-algebra: column
// sizes q, first tensor slot, and the level of the underlying gl(N_b).
// Row labels of this block live in (qmax() - q_r, qmax()].
struct Block {
    std::vector<int> q;
    int slot0 = 0;
    Scalar level;

    int len() const { return (int)q.size(); }
    int nsum() const;
    int qmax() const;
    int qmin() const;
    int thr() const { return qmax() - qmin(); }
    Scalar alpha(int r) const { return level + Scalar::integer(nsum() - q[r - 1]); }
    Scalar gamma(int a) const;
    // ctx slot and local label of e^{(r)}_{a,b}; nullopt outside the window.
    std::optional<std::pair<int, Gen>> letter(int r, int a, int b) const;
};

Block full_block(const Pyramid& p);
// Split after column w into the two induced blocks: columns 1..w at level
// k + N_2 and columns w+1..l at level k + N_1 (slots keep their positions).
std::pair<Block, Block> split_blocks(const Pyramid& p, int w);

// One loop slot per column, slot r carrying the pairing (alpha_r, 1).
Ctx miura_ctx(const Pyramid& p);

// Free-field images of the generators as states, and the loop modes of the
// corresponding fields.
bool w1_admissible(const Pyramid& p, int i, int j);
State mu_w1(const Ctx& ctx, const Block& b, int i, int j);
State mu_w2(const Ctx& ctx, const Block& b, int i, int j);
Op mu_w1_mode(const Ctx& ctx, const Block& b, int i, int j, int s);
// Mode 1 of the weight-two field (the only nonzero positive mode used).
SeriesExpr mu_w2_mode1_expr(const Block& b, int i, int j, int mutation = 0);
// Normally ordered (-1)-product of two weight-one fields applied to the
// vacuum, with the first factor's letters restricted to slots <= the
// second's (the slot-ordering convention of the quadratic sums above).
State w1_pair_product(const Ctx& ctx, const Block& b, int i1, int j1, int i2,
                      int j2);

// BRST side: states in the vacuum module of the block superalgebra
// (ctx = {SlotCtx::super_a(p)}).
State b_w1(const Ctx& ctx, const Pyramid& p, int i, int j);
State b_w2(const Ctx& ctx, const Pyramid& p, int i, int j, int mutation = 0);

// The odd differential: derivation determined on e[-1] by the structure of
// the pyramid, commuting with translation, and killing the odd letters.
State d0(const Ctx& ctx, const Pyramid& p, const State& st);

}  // namespace yw

#endif
