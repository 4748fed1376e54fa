#include "yw/state.hpp"

#include <algorithm>
#include <sstream>

namespace yw {

int depth(const State& st) {
    int d = 0;
    for (const auto& [m, c] : st) d = std::max(d, depth(m));
    return d;
}

void add_term(State& st, const Mono& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = st.find(m);
    if (it == st.end()) {
        st.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) st.erase(it);
    }
}

void add_state(State& st, const State& o, const Scalar& c) {
    for (const auto& [m, cc] : o) add_term(st, m, cc * c);
}

State scale(const State& st, const Scalar& c) {
    State out;
    for (const auto& [m, cc] : st) add_term(out, m, cc * c);
    return out;
}

bool is_zero(const State& st) { return st.empty(); }

State sub(const State& a, const State& b) {
    State out = a;
    add_state(out, b, -Scalar::one());
    return out;
}

void mul_factor(const Ctx& ctx, const Factor& x, const Mono& m, const Scalar& c, State& out) {
    if (c.is_zero()) return;
    if (m.empty() || pbw_less(x, m.front()) || x == m.front()) {
        if (!m.empty() && x == m.front() && x.g.odd()) return;  // odd square
        Mono r;
        r.reserve(m.size() + 1);
        r.push_back(x);
        r.insert(r.end(), m.begin(), m.end());
        add_term(out, r, c);
        return;
    }
    const Factor& h = m.front();
    Mono rest(m.begin() + 1, m.end());
    // x h = (-1)^{|x||h|} h x + [x, h]; negative modes never hit the center.
    int sgn = (x.g.odd() && h.g.odd()) ? -1 : 1;
    State xr;
    mul_factor(ctx, x, rest, sgn < 0 ? -c : c, xr);
    for (const auto& [mm, cc] : xr) mul_factor(ctx, h, mm, cc, out);
    if (x.slot == h.slot) {
        for (const auto& bt : bracket(ctx[x.slot], x.g, h.g)) {
            Factor nf{x.slot, bt.g, x.mode + h.mode};
            mul_factor(ctx, nf, rest, bt.sign < 0 ? -c : c, out);
        }
    }
}

State canon(const Ctx& ctx, const Mono& m, const Scalar& c) {
    State acc;
    add_term(acc, Mono{}, c);
    for (auto it = m.rbegin(); it != m.rend(); ++it) {
        State next;
        for (const auto& [mm, cc] : acc) mul_factor(ctx, *it, mm, cc, next);
        acc = std::move(next);
    }
    return acc;
}

// g t^mode (mode >= 0) applied to one word; annihilates the vacuum.
static void act_word(const Ctx& ctx, int slot, const Gen& g, int mode, const Mono& m,
                     const Scalar& c, State& out) {
    if (c.is_zero() || m.empty()) return;
    const Factor& h = m.front();
    Mono rest(m.begin() + 1, m.end());
    if (h.slot == slot) {
        int nm = mode + h.mode;
        for (const auto& bt : bracket(ctx[slot], g, h.g)) {
            Scalar cc = bt.sign < 0 ? -c : c;
            if (nm < 0)
                mul_factor(ctx, Factor{slot, bt.g, nm}, rest, cc, out);
            else
                act_word(ctx, slot, bt.g, nm, rest, cc, out);
        }
        if (nm == 0 && mode > 0) {
            Scalar cp = central_pair(ctx[slot], g, h.g);
            if (!cp.is_zero()) add_term(out, rest, c * cp.scaled(Rat(mode)));
        }
    }
    State tail;
    int sgn = (g.odd() && h.g.odd()) ? -1 : 1;
    act_word(ctx, slot, g, mode, rest, sgn < 0 ? -c : c, tail);
    for (const auto& [mm, cc] : tail) mul_factor(ctx, h, mm, cc, out);
}

State act_gen(const Ctx& ctx, int slot, const Gen& g, int mode, const State& st) {
    if (g.kind == Kind::C) return scale(st, ctx[slot].cpair);
    if (g.kind == Kind::Z) return scale(st, ctx[slot].zpair);
    State out;
    if (mode < 0) {
        Factor f{slot, g, mode};
        for (const auto& [m, c] : st) mul_factor(ctx, f, m, c, out);
    } else {
        for (const auto& [m, c] : st) act_word(ctx, slot, g, mode, m, c, out);
    }
    return out;
}

State translate(const Ctx& ctx, const State& st) {
    State out;
    for (const auto& [m, c] : st) {
        for (size_t i = 0; i < m.size(); ++i) {
            Mono w = m;
            w[i].mode -= 1;
            add_state(out, canon(ctx, w, c.scaled(Rat(-m[i].mode))));
        }
    }
    return out;
}

std::vector<Mono> basis_enum(const Ctx& ctx, int dmax) {
    std::vector<Factor> letters;
    for (size_t s = 0; s < ctx.size(); ++s) {
        const SlotCtx& sc = ctx[s];
        for (int d = dmax; d >= 1; --d) {
            for (int i = 1; i <= sc.n; ++i)
                for (int j = 1; j <= sc.n; ++j) {
                    Gen e = Gen::E(i, j);
                    if (sc.valid(e)) letters.push_back({(int)s, e, -d});
                    if (sc.super) {
                        Gen p = Gen::Psi(i, j);
                        if (sc.valid(p)) letters.push_back({(int)s, p, -d});
                    }
                }
        }
    }
    std::sort(letters.begin(), letters.end(), pbw_less);

    std::vector<Mono> out;
    Mono cur;
    auto rec = [&](auto&& self, size_t start, int rem) -> void {
        out.push_back(cur);
        for (size_t idx = start; idx < letters.size(); ++idx) {
            const Factor& f = letters[idx];
            if (-f.mode > rem) continue;
            cur.push_back(f);
            self(self, f.g.odd() ? idx + 1 : idx, rem + f.mode);
            cur.pop_back();
        }
    };
    rec(rec, 0, dmax);
    return out;
}

std::string mono_str(const Ctx& ctx, const Mono& m) {
    if (ctx.size() == 1) {
        std::string s;
        for (const auto& f : m) s += f.g.str() + "[" + std::to_string(f.mode) + "]";
        return s + "|0>";
    }
    std::string s;
    for (size_t slot = 0; slot < ctx.size(); ++slot) {
        if (slot) s += " (x) ";
        for (const auto& f : m)
            if (f.slot == (int)slot) s += f.g.str() + "[" + std::to_string(f.mode) + "]";
        s += "|0>";
    }
    return s;
}

std::string state_str(const Ctx& ctx, const State& st) {
    if (st.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : st) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ") * " << mono_str(ctx, m);
    }
    return os.str();
}

}  // namespace yw
