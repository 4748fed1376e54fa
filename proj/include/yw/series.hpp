// Operator expressions on vacuum-module states: finite words of mode letters
// plus quadratic series sum_{s>=0} A t^{p-s} B t^{q+s}, with exact
// coefficients.  Series terminate on depth-truncated states because the
// ascending letter eventually annihilates them.  Also provides generic
// operator combinators and equality-on-a-basis checks with witnesses.
#ifndef YW_SERIES_HPP
#define YW_SERIES_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "yw/state.hpp"

namespace yw {

struct ModeLetter {
    int slot = 0;
    Gen g;
    int mode = 0;
    auto operator<=>(const ModeLetter&) const = default;
    std::string str() const;
};

// A finite product of mode letters; the rightmost letter acts first.
using MWord = std::vector<ModeLetter>;

// coeff * sum_{s>=0} (des t^{des.mode - s}) (asc t^{asc.mode + s}),
// written with the descending letter first (acting last).
struct Template {
    ModeLetter des;
    ModeLetter asc;
    Scalar coeff;
};

struct SeriesExpr {
    std::map<MWord, Scalar> fin;
    std::vector<Template> tem;

    void add_word(const MWord& w, const Scalar& c);
    void add_letter(const ModeLetter& a, const Scalar& c) { add_word({a}, c); }
    // Descending-first series as written: des t^{p-s} asc t^{q+s}.
    void add_desc_first(const ModeLetter& des, const ModeLetter& asc, const Scalar& c);
    // Ascending-first series asc t^{q+s} des t^{p-s}; the two letters must
    // live in different slots so the product can be rewritten descending-first.
    void add_asc_first(const ModeLetter& asc, const ModeLetter& des, const Scalar& c);
    void add_expr(const SeriesExpr& o, const Scalar& c = Scalar::one());
    std::string str() const;
};

State apply_word(const Ctx& ctx, const MWord& w, const State& st);
State series_act(const Ctx& ctx, const SeriesExpr& e, const State& st);

// Canonical form for comparing series expressions symbolically: templates with
// the same letters and the same total exponent are aligned to a common head
// (peeling finite words off the front), and commuting cross-slot letters in
// finite words are sorted.  Two expressions are symbolically equal when the
// reduced difference is empty.
SeriesExpr sym_reduce(const SeriesExpr& e);
bool sym_equal(const SeriesExpr& a, const SeriesExpr& b);

using Op = std::function<State(const State&)>;

Op op_zero();
Op op_gen(const Ctx& ctx, int slot, const Gen& g, int mode);
Op op_series(const Ctx& ctx, SeriesExpr e);
Op op_scale(Op a, const Scalar& c);
Op op_sum(std::vector<Op> ops);
Op op_compose(Op a, Op b);  // state -> a(b(state))
Op op_comm(Op a, Op b);     // ab - ba
Op op_acomm(Op a, Op b);    // ab + ba

// Compare two operators on every basis word of depth <= dmax; returns a
// human-readable witness for the first disagreement, or nullopt on equality.
std::optional<std::string> op_eq_on_depth(const Ctx& ctx, const Op& a, const Op& b, int dmax);

}  // namespace yw

#endif
