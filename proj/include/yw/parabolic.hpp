// Parabolic layer: the iterated coproduct composed with per-column evaluation
// maps, the free-field image of the Yangian-to-W-algebra homomorphism, the
// parabolic induction of the W-algebra, and the extended generators needed to
// compare the two coproducts.  Every map is realized as operators on the
// depth-truncated Miura module of a pyramid so that identities can be checked
// mechanically with exact coefficients.
#ifndef YW_PARABOLIC_HPP
#define YW_PARABOLIC_HPP

#include "yw/walgebra.hpp"
#include "yw/yangian.hpp"

namespace yw {

// Outcome of one verified instance inside a suite.
struct CheckResult {
    std::string id;
    bool ok = true;
    std::string witness;
};

// Iterated coproduct of the rank-qMin Yangian into the tensor product of one
// Yangian per pyramid column (ranks q_r), composed slotwise with the
// evaluation maps at shift (gamma_r + (q_r - qMin)/2) hbar and parameter
// eps - (q_r - qMin) hbar, where eps = hbar (k + N - qMin).  The ctx must be
// the Miura ctx of the pyramid (slot r-1 a loop gl(q_r) at level k + N - q_r).
YImages deltal_images(const Ctx& ctx, const Pyramid& p);

// Free-field image of the Yangian-to-W-algebra homomorphism of a block: the
// composition of the abstract homomorphism with the Miura-mode realization.
// mutation != 0 corrupts the one-loop coefficients of the weight-two modes.
YImages phi_mu_images(const Ctx& ctx, const Block& b, int mutation = 0);

// Compare the two constructions generator by generator on depth <= dmax.
// With diagnose set, additionally check the intermediate groupings of the
// quadratic terms (pyramid columns must be sorted non-increasingly for the
// grouping bookkeeping).
std::vector<CheckResult> verify_hojo(const Pyramid& p, int dmax, bool diagnose = false,
                                     int mutation = 0);

// Image of the weight-two generator under the parabolic induction that splits
// the pyramid after column w, realized on the Miura module of the full
// pyramid.  mutation != 0 flips the derivative coefficient gamma_w.
State delta_w_w2(const Ctx& ctx, const Pyramid& p, int w, int i, int j, int mutation = 0);

// Check mu = (mu_1 (x) mu_2) o Delta_W on every generator.
std::vector<CheckResult> verify_miura_factorization(const Pyramid& p, int w,
                                                    int mutation = 0);

// Quadratic series a^{m,m+n}_{i,j} / b^{m,m+n}_{i,j} appearing in the bracket
// relations of the extended generators E_{v,n+j} t^x (x fixed, v <= nadd),
// written in the compact two-branch form.
SeriesExpr ext_a_series(int nadd, int i, int j, int v, int x);
SeriesExpr ext_b_series(int nadd, int i, int j, int v, int x);

// Bracket relations between the level-one Cartan images of the embedded
// rank-m Yangian and the extension letters, checked on a single loop gl(m+n)
// slot at parameter eps - nadd hbar for all |x| <= dmax.  Side 'R' uses the
// raising letters E_{v,n+j}t^x with the a-series; side 'L' uses the lowering
// letters E_{n+j,v}t^{-x} with the b-series (in commutator order, which is
// the form valid on the vacuum module for every exponent).  mutation = 1
// flips the epsilon term of the wrap-pair relation.
std::vector<CheckResult> verify_extended_relations(char side, int m, int nadd, int dmax,
                                                   int mutation = 0);

// Compatibility of the Yangian coproduct with the parabolic induction across
// the split after column w (columns of equal height; the rank extension and
// the intermediate rank embedding are trivial there), checked on the Miura
// module of the full pyramid.
std::vector<CheckResult> verify_parabolic_compat(const Pyramid& p, int w, int dmax);

}  // namespace yw

#endif
