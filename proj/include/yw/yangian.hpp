// The affine Yangian layer: images of the generating set under the various
// homomorphisms (evaluation, rank embedding, coproduct), derivation of the
// level-one generators from the minimalistic set, and mechanical verification
// of the defining relations on depth-truncated modules.
#ifndef YW_YANGIAN_HPP
#define YW_YANGIAN_HPP

#include "yw/series.hpp"

namespace yw {

// Images of the minimalistic generating set of the rank-n affine Yangian,
// realized as operators on some module: X^pm_{i,0} and H_{i,0} for all i,
// H_{i,1} for 1 <= i <= n-1 (index 0 of h1 is unused and derived).
struct YImages {
    int n = 0;
    Scalar eps_param;  // the epsilon of the presentation under test
    std::vector<Op> xp0, xm0, h0, h1;
};

// Level-one elements derived from the minimalistic set:
//   tilde H_{i,1} = H_{i,1} - (hbar/2) H_{i,0}^2,
//   X^+_{i,1} = (1/2)[tilde H_{i,1}, X^+_{i,0}]       (i >= 1),
//   X^+_{0,1} = -[tilde H_{1,1}, X^+_{0,0}],
//   H_{0,1} = [X^+_{0,1}, X^-_{0,0}],
// and the minus counterparts with flipped signs.
struct YDerived {
    std::vector<Op> h1t, xp1, xm1;
    Op h1_0;
};
YDerived derive_level_one(const YImages& im);

// Cartan matrix entry of the cyclic quiver with n nodes.
int cartan_a(int n, int i, int j);

// Check every defining relation on all basis words of depth <= dmax;
// returns a witness string naming the violated relation, or nullopt.
std::optional<std::string> verify_relations(const Ctx& ctx, const YImages& im, int dmax);

// Evaluation homomorphism into the loop algebra of gl(n) acting on `slot`.
// The slot's first central value must equal eps/hbar.  `a` is the shift
// parameter entering the level-one images.  mutation != 0 deliberately
// corrupts one term (used by the sensitivity suites).
YImages ev_images(const Ctx& ctx, int slot, int n, const Scalar& a, const Scalar& eps,
                  int mutation = 0);

// The rank embedding sl(m)-hat Yangian -> rank m+nadd Yangian, composed with
// the evaluation map of the big algebra on `slot`.  eps is the parameter of
// the big algebra; the images satisfy the rank-m relations at eps + nadd*hbar.
YImages psi_ev_images(const Ctx& ctx, int slot, int m, int nadd, const Scalar& a,
                      const Scalar& eps);

// Quadratic tail A_i^{sign} of the coproduct on tilde H_{i,1} (1 <= i <= n-1),
// acting across slots (slot_a, slot_b); sign = +1 or -1.
SeriesExpr coproduct_tail(int n, int i, int sign, int slot_a = 0, int slot_b = 1);
// Split tail: tilde A_i^{sign} for 1 <= i <= n (the difference
// tilde A_i - tilde A_{i+1} recovers the tail of the full coproduct).
SeriesExpr coproduct_tail_split(int n, int i, int sign, int slot_a = 0, int slot_b = 1);

// Coproduct images on a two-slot module whose slots both carry central value
// eps/hbar, evaluated with shift parameters a1, a2.
YImages coproduct_images(const Ctx& ctx, int n, const Scalar& a1, const Scalar& a2,
                         const Scalar& eps, int sign, int mutation = 0);

// Shift automorphism: H_{i,1} -> H_{i,1} + a H_{i,0}, everything else fixed.
YImages tau_shift(const YImages& im, const Scalar& a);

}  // namespace yw

#endif
