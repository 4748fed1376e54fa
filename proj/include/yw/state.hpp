// Vacuum-module states: sorted PBW words of negative modes acting on the
// vacuum, one word per tensor slot, with exact coefficients.  Provides the
// mode action (creation, annihilation, contraction with the central pairing),
// straightening to the PBW order, the translation operator and basis
// enumeration up to a depth bound.
#ifndef YW_STATE_HPP
#define YW_STATE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "yw/algebra.hpp"

namespace yw {

struct Factor {
    int slot = 0;
    Gen g;
    int mode = -1;  // always <= -1 inside a state
    auto operator<=>(const Factor&) const = default;
};

// PBW order: modes ascending (deepest first), then slot, then generator label.
inline bool pbw_less(const Factor& a, const Factor& b) {
    if (a.mode != b.mode) return a.mode < b.mode;
    if (a.slot != b.slot) return a.slot < b.slot;
    return a.g < b.g;
}

using Mono = std::vector<Factor>;
using State = std::map<Mono, Scalar>;

inline int depth(const Mono& m) {
    int d = 0;
    for (const auto& f : m) d -= f.mode;
    return d;
}
int depth(const State& st);

void add_term(State& st, const Mono& m, const Scalar& c);
void add_state(State& st, const State& o, const Scalar& c = Scalar::one());
State scale(const State& st, const Scalar& c);
bool is_zero(const State& st);
State sub(const State& a, const State& b);

// Left-multiply a sorted word by one negative-mode factor, straightening to
// the PBW order (Koszul signs, odd squares vanish, brackets of negative modes
// never meet the central term).
void mul_factor(const Ctx& ctx, const Factor& x, const Mono& m, const Scalar& c, State& out);

// Canonicalize an arbitrarily ordered word (all modes negative).
State canon(const Ctx& ctx, const Mono& m, const Scalar& c);

// Action of the mode g t^mode on slot `slot`.  Negative modes create,
// non-negative modes annihilate through the commutation relations; central
// letters act by their slot value.
State act_gen(const Ctx& ctx, int slot, const Gen& g, int mode, const State& st);

// Translation operator: derivation with u[-n] -> n u[-n-1].
State translate(const Ctx& ctx, const State& st);

// All PBW basis words of total depth <= dmax (including the vacuum).
std::vector<Mono> basis_enum(const Ctx& ctx, int dmax);

std::string mono_str(const Ctx& ctx, const Mono& m);
std::string state_str(const Ctx& ctx, const State& st);

}  // namespace yw

#endif
