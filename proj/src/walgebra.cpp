#include "yw/walgebra.hpp"

#include <algorithm>
#include <numeric>

namespace yw {

int Block::nsum() const { return std::accumulate(q.begin(), q.end(), 0); }
int Block::qmax() const { return *std::max_element(q.begin(), q.end()); }
int Block::qmin() const { return std::min(q.front(), q.back()); }

Scalar Block::gamma(int a) const {
    Scalar g;
    for (int u = a + 1; u <= len(); ++u) g += alpha(u);
    return g;
}

std::optional<std::pair<int, Gen>> Block::letter(int r, int a, int b) const {
    int off = qmax() - q[r - 1];
    if (a <= off || a > qmax() || b <= off || b > qmax()) return std::nullopt;
    return std::make_pair(slot0 + r - 1, Gen::E(a - off, b - off));
}

Block full_block(const Pyramid& p) { return Block{p.q, 0, Scalar::k()}; }

std::pair<Block, Block> split_blocks(const Pyramid& p, int w) {
    Block b1{std::vector<int>(p.q.begin(), p.q.begin() + w), 0, Scalar()};
    Block b2{std::vector<int>(p.q.begin() + w, p.q.end()), w, Scalar()};
    b1.level = Scalar::k() + Scalar::integer(b2.nsum());
    b2.level = Scalar::k() + Scalar::integer(b1.nsum());
    return {b1, b2};
}

Ctx miura_ctx(const Pyramid& p) {
    Ctx ctx;
    for (int r = 1; r <= p.l; ++r) ctx.push_back(SlotCtx::loop_gl(p.q[r - 1], p.alpha(r)));
    return ctx;
}

bool w1_admissible(const Pyramid& p, int i, int j) {
    if (i < 1 || i > p.qMax || j < 1 || j > p.qMax) return false;
    int thr = p.qMax - p.qMin;
    return (i > thr && j > p.qMax - p.q[p.l - 1]) || (i > p.qMax - p.q[0] && j > thr);
}

State mu_w1(const Ctx& ctx, const Block& b, int i, int j) {
    State out;
    for (int r = 1; r <= b.len(); ++r)
        if (auto lt = b.letter(r, i, j))
            add_state(out, canon(ctx, {{lt->first, lt->second, -1}}, Scalar::one()));
    return out;
}

State mu_w2(const Ctx& ctx, const Block& b, int i, int j) {
    State out;
    const int l = b.len(), qM = b.qmax(), thr = b.thr();
    for (int r = 1; r <= l; ++r)
        if (auto lt = b.letter(r, i, j))
            add_state(out, canon(ctx, {{lt->first, lt->second, -2}}, -b.gamma(r)));
    for (int r1 = 1; r1 <= l; ++r1)
        for (int r2 = r1 + 1; r2 <= l; ++r2)
            for (int u = thr + 1; u <= qM; ++u) {
                auto l1 = b.letter(r1, u, j), l2 = b.letter(r2, i, u);
                if (l1 && l2)
                    add_state(out, canon(ctx,
                                         {{l1->first, l1->second, -1},
                                          {l2->first, l2->second, -1}},
                                         Scalar::one()));
            }
    for (int r1 = 1; r1 <= l; ++r1)
        for (int r2 = 1; r2 <= r1; ++r2) {
            int lo = qM - std::min(b.q[r1 - 1], b.q[r2 - 1]);
            for (int u = lo + 1; u <= thr; ++u) {
                auto l1 = b.letter(r1, u, j), l2 = b.letter(r2, i, u);
                if (l1 && l2)
                    add_state(out, canon(ctx,
                                         {{l1->first, l1->second, -1},
                                          {l2->first, l2->second, -1}},
                                         -Scalar::one()));
            }
        }
    return out;
}

Op mu_w1_mode(const Ctx& ctx, const Block& b, int i, int j, int s) {
    SeriesExpr e;
    for (int r = 1; r <= b.len(); ++r)
        if (auto lt = b.letter(r, i, j)) e.add_letter({lt->first, lt->second, s}, Scalar::one());
    return op_series(ctx, std::move(e));
}

SeriesExpr mu_w2_mode1_expr(const Block& b, int i, int j, int mutation) {
    SeriesExpr e;
    const int l = b.len(), qM = b.qmax(), thr = b.thr();
    for (int r = 1; r <= l; ++r)
        if (auto lt = b.letter(r, i, j)) {
            Scalar g = -b.gamma(r);
            if (mutation == 1) g = -g;
            e.add_letter({lt->first, lt->second, 0}, g);
        }
    // Cross-slot sums over all integers split into the two one-sided halves.
    for (int r1 = 1; r1 <= l; ++r1)
        for (int r2 = r1 + 1; r2 <= l; ++r2) {
            for (int u = thr + 1; u <= qM; ++u) {
                auto l1 = b.letter(r1, u, j), l2 = b.letter(r2, i, u);
                if (l1 && l2) {
                    e.add_desc_first({l1->first, l1->second, 0}, {l2->first, l2->second, 0},
                                     Scalar::one());
                    e.add_asc_first({l1->first, l1->second, 1}, {l2->first, l2->second, -1},
                                    Scalar::one());
                }
            }
            int lo = qM - std::min(b.q[r1 - 1], b.q[r2 - 1]);
            for (int u = lo + 1; u <= thr; ++u) {
                auto l1 = b.letter(r1, i, u), l2 = b.letter(r2, u, j);
                if (l1 && l2) {
                    e.add_desc_first({l1->first, l1->second, 0}, {l2->first, l2->second, 0},
                                     -Scalar::one());
                    e.add_asc_first({l1->first, l1->second, 1}, {l2->first, l2->second, -1},
                                    -Scalar::one());
                }
            }
        }
    for (int r = 1; r <= l; ++r)
        for (int u = qM - b.q[r - 1] + 1; u <= thr; ++u) {
            auto l1 = b.letter(r, u, j), l2 = b.letter(r, i, u);
            if (l1 && l2) {
                e.add_desc_first({l1->first, l1->second, -1}, {l2->first, l2->second, 1},
                                 -Scalar::one());
                e.add_desc_first({l2->first, l2->second, 0}, {l1->first, l1->second, 0},
                                 -Scalar::one());
            }
        }
    return e;
}

State w1_pair_product(const Ctx& ctx, const Block& b, int i1, int j1, int i2, int j2) {
    State out;
    for (int r1 = 1; r1 <= b.len(); ++r1) {
        auto l1 = b.letter(r1, i1, j1);
        if (!l1) continue;
        for (int r2 = r1; r2 <= b.len(); ++r2) {
            auto l2 = b.letter(r2, i2, j2);
            if (!l2) continue;
            add_state(out, canon(ctx, {{l1->first, l1->second, -1}, {l2->first, l2->second, -1}},
                                 Scalar::one()));
        }
    }
    return out;
}

State b_w1(const Ctx& ctx, const Pyramid& p, int i, int j) {
    State out;
    for (int c = 1; c <= p.l; ++c) {
        int bi = p.box(c, i), bj = p.box(c, j);
        if (bi && bj) add_state(out, canon(ctx, {{0, Gen::E(bi, bj), -1}}, Scalar::one()));
    }
    return out;
}

State b_w2(const Ctx& ctx, const Pyramid& p, int i, int j, int mutation) {
    State out;
    const int l = p.l, qM = p.qMax, thr = p.qMax - p.qMin;
    // Current along the next column: col(i') = col(j') + 1.
    for (int c = 1; c < l; ++c) {
        int bi = p.box(c + 1, i), bj = p.box(c, j);
        if (bi && bj) add_state(out, canon(ctx, {{0, Gen::E(bi, bj), -1}}, Scalar::one()));
    }
    for (int r = 1; r <= l; ++r) {
        int bi = p.box(r, i), bj = p.box(r, j);
        Scalar g = p.gamma(r);
        if (mutation == 1) g = -g;
        if (bi && bj) add_state(out, canon(ctx, {{0, Gen::E(bi, bj), -2}}, -g));
    }
    for (int r1 = 1; r1 <= l; ++r1)
        for (int r2 = r1 + 1; r2 <= l; ++r2)
            for (int u = thr + 1; u <= qM; ++u) {
                int a = p.box(r1, u), bq = p.box(r1, j), c2 = p.box(r2, i), d = p.box(r2, u);
                if (a && bq && c2 && d)
                    add_state(out,
                              canon(ctx, {{0, Gen::E(a, bq), -1}, {0, Gen::E(c2, d), -1}},
                                    Scalar::one()));
            }
    for (int r1 = 1; r1 <= l; ++r1)
        for (int r2 = 1; r2 <= r1; ++r2) {
            int lo = qM - std::min(p.q[r1 - 1], p.q[r2 - 1]);
            for (int u = lo + 1; u <= thr; ++u) {
                int a = p.box(r1, u), bq = p.box(r1, j), c2 = p.box(r2, i), d = p.box(r2, u);
                if (a && bq && c2 && d)
                    add_state(out,
                              canon(ctx, {{0, Gen::E(a, bq), -1}, {0, Gen::E(c2, d), -1}},
                                    -Scalar::one()));
            }
        }
    return out;
}

// d0 of the single generator e_{i,j}[-1]|0>.
static State d0_e1(const Ctx& ctx, const Pyramid& p, int i, int j) {
    State out;
    for (int r = 1; r <= p.N; ++r) {
        if (p.col(i) > p.col(r) && p.col(r) >= p.col(j))
            add_state(out, canon(ctx, {{0, Gen::E(r, j), -1}, {0, Gen::Psi(i, r), -1}},
                                 Scalar::one()));
        if (p.col(j) < p.col(r) && p.col(r) <= p.col(i))
            add_state(out, canon(ctx, {{0, Gen::Psi(r, j), -1}, {0, Gen::E(i, r), -1}},
                                 -Scalar::one()));
    }
    if (p.col(i) > p.col(j))
        add_state(out, canon(ctx, {{0, Gen::Psi(i, j), -2}}, p.alpha(p.col(i))));
    if (int ih = p.hat(i))
        add_state(out, canon(ctx, {{0, Gen::Psi(ih, j), -1}}, Scalar::one()));
    if (int jt = p.tilde(j))
        add_state(out, canon(ctx, {{0, Gen::Psi(i, jt), -1}}, -Scalar::one()));
    return out;
}

// d0 of e_{i,j}[-a]|0>, via e[-a] = translate(e[-a+1]) / (a-1) and
// commutation of d0 with the translation operator.
static State d0_ea(const Ctx& ctx, const Pyramid& p, int i, int j, int a) {
    State s = d0_e1(ctx, p, i, j);
    for (int m = 2; m <= a; ++m) s = scale(translate(ctx, s), Scalar(Rat(1, m - 1)));
    return s;
}

State d0(const Ctx& ctx, const Pyramid& p, const State& st) {
    State out;
    for (const auto& [m, c] : st) {
        int odd_before = 0;
        for (size_t idx = 0; idx < m.size(); ++idx) {
            const Factor& f = m[idx];
            if (f.g.odd()) {
                ++odd_before;
                continue;
            }
            State piece = d0_ea(ctx, p, f.g.i, f.g.j, -f.mode);
            Scalar cc = (odd_before % 2) ? -c : c;
            for (const auto& [w, pc] : piece) {
                Mono full(m.begin(), m.begin() + idx);
                full.insert(full.end(), w.begin(), w.end());
                full.insert(full.end(), m.begin() + idx + 1, m.end());
                add_state(out, canon(ctx, full, cc * pc));
            }
        }
    }
    return out;
}

}  // namespace yw
