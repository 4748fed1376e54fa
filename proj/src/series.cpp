#include "yw/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace yw {

std::string ModeLetter::str() const {
    std::string s = g.str() + "t^" + std::to_string(mode);
    if (slot) s += "@" + std::to_string(slot);
    return s;
}

void SeriesExpr::add_word(const MWord& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = fin.find(w);
    if (it == fin.end()) {
        fin.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) fin.erase(it);
    }
}

void SeriesExpr::add_desc_first(const ModeLetter& des, const ModeLetter& asc, const Scalar& c) {
    if (c.is_zero()) return;
    tem.push_back({des, asc, c});
}

void SeriesExpr::add_asc_first(const ModeLetter& asc, const ModeLetter& des, const Scalar& c) {
    if (asc.slot == des.slot)
        throw std::logic_error("ascending-first series within one slot");
    add_desc_first(des, asc, c);
}

void SeriesExpr::add_expr(const SeriesExpr& o, const Scalar& c) {
    for (const auto& [w, cc] : o.fin) add_word(w, cc * c);
    for (const auto& t : o.tem) add_desc_first(t.des, t.asc, t.coeff * c);
}

std::string SeriesExpr::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : fin) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*";
        for (const auto& a : w) os << a.str() << " ";
    }
    for (const auto& t : tem) {
        if (!first) os << " + ";
        first = false;
        os << "(" << t.coeff.str() << ")*Sum_s " << t.des.g.str() << "t^(" << t.des.mode
           << "-s)@" << t.des.slot << " " << t.asc.g.str() << "t^(" << t.asc.mode << "+s)@"
           << t.asc.slot;
    }
    if (first) return "0";
    return os.str();
}

State apply_word(const Ctx& ctx, const MWord& w, const State& st) {
    State cur = st;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        if (cur.empty()) return cur;
        cur = act_gen(ctx, it->slot, it->g, it->mode, cur);
    }
    return cur;
}

State series_act(const Ctx& ctx, const SeriesExpr& e, const State& st) {
    State out;
    for (const auto& [w, c] : e.fin) add_state(out, apply_word(ctx, w, st), c);
    int d = depth(st);
    for (const auto& t : e.tem) {
        // asc t^{q+s} annihilates every state of depth <= d once q + s > d.
        for (int s = 0; t.asc.mode + s <= d; ++s) {
            State mid = act_gen(ctx, t.asc.slot, t.asc.g, t.asc.mode + s, st);
            if (mid.empty()) continue;
            add_state(out, act_gen(ctx, t.des.slot, t.des.g, t.des.mode - s, mid), t.coeff);
        }
    }
    return out;
}

// Sort commuting (cross-slot, even) adjacent letters; same-slot pairs keep
// their order.
static MWord word_canon(MWord w) {
    bool moved = true;
    while (moved) {
        moved = false;
        for (size_t i = 0; i + 1 < w.size(); ++i) {
            if (w[i].slot != w[i + 1].slot && !w[i].g.odd() && !w[i + 1].g.odd() &&
                w[i + 1] < w[i]) {
                std::swap(w[i], w[i + 1]);
                moved = true;
            }
        }
    }
    return w;
}

SeriesExpr sym_reduce(const SeriesExpr& e) {
    using Key = std::tuple<int, Gen, int, Gen, int>;  // slots, letters, total exponent
    std::map<Key, std::vector<Template>> groups;
    for (const auto& t : e.tem)
        groups[{t.des.slot, t.des.g, t.asc.slot, t.asc.g, t.des.mode + t.asc.mode}].push_back(t);

    SeriesExpr out;
    for (const auto& [w, c] : e.fin) out.add_word(word_canon(w), c);
    for (auto& [key, ts] : groups) {
        int qmax = ts.front().asc.mode;
        for (const auto& t : ts) qmax = std::max(qmax, t.asc.mode);
        Scalar total;
        for (const auto& t : ts) {
            // Peel heads: T(p, q) = des t^p asc t^q + T(p-1, q+1).
            for (int q = t.asc.mode; q < qmax; ++q) {
                int p = t.des.mode + t.asc.mode - q;
                MWord w = {{t.des.slot, t.des.g, p}, {t.asc.slot, t.asc.g, q}};
                out.add_word(word_canon(w), t.coeff);
            }
            total += t.coeff;
        }
        if (!total.is_zero()) {
            Template t0 = ts.front();
            t0.des.mode = std::get<4>(key) - qmax;
            t0.asc.mode = qmax;
            t0.coeff = total;
            out.tem.push_back(t0);
        }
    }
    return out;
}

bool sym_equal(const SeriesExpr& a, const SeriesExpr& b) {
    SeriesExpr d = a;
    d.add_expr(b, -Scalar::one());
    SeriesExpr r = sym_reduce(d);
    return r.fin.empty() && r.tem.empty();
}

Op op_zero() {
    return [](const State&) { return State{}; };
}

Op op_gen(const Ctx& ctx, int slot, const Gen& g, int mode) {
    return [&ctx, slot, g, mode](const State& st) { return act_gen(ctx, slot, g, mode, st); };
}

Op op_series(const Ctx& ctx, SeriesExpr e) {
    return [&ctx, e = std::move(e)](const State& st) { return series_act(ctx, e, st); };
}

Op op_scale(Op a, const Scalar& c) {
    return [a = std::move(a), c](const State& st) { return scale(a(st), c); };
}

Op op_sum(std::vector<Op> ops) {
    return [ops = std::move(ops)](const State& st) {
        State out;
        for (const auto& o : ops) add_state(out, o(st));
        return out;
    };
}

Op op_compose(Op a, Op b) {
    return [a = std::move(a), b = std::move(b)](const State& st) { return a(b(st)); };
}

Op op_comm(Op a, Op b) {
    return [a, b](const State& st) { return sub(a(b(st)), b(a(st))); };
}

Op op_acomm(Op a, Op b) {
    return [a, b](const State& st) {
        State out = a(b(st));
        add_state(out, b(a(st)));
        return out;
    };
}

std::optional<std::string> op_eq_on_depth(const Ctx& ctx, const Op& a, const Op& b, int dmax) {
    for (const auto& m : basis_enum(ctx, dmax)) {
        State st;
        add_term(st, m, Scalar::one());
        State d = sub(a(st), b(st));
        if (!is_zero(d)) {
            std::ostringstream os;
            os << "on " << mono_str(ctx, m) << ": lhs - rhs = " << state_str(ctx, d);
            return os.str();
        }
    }
    return std::nullopt;
}

}  // namespace yw
