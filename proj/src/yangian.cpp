#include "yw/yangian.hpp"

#include <sstream>

namespace yw {

namespace {
Scalar hbar() { return Scalar::h(1); }
Scalar half_h() { return Scalar::h(1).scaled(Rat(1, 2)); }
}  // namespace

int cartan_a(int n, int i, int j) {
    if (i == j) return 2;
    int d = (i - j) % n;
    if (d < 0) d += n;
    if (d == 1 || d == n - 1) return -1;
    return 0;
}

YDerived derive_level_one(const YImages& im) {
    const int n = im.n;
    YDerived d;
    d.h1t.resize(n);
    d.xp1.resize(n);
    d.xm1.resize(n);
    for (int i = 1; i < n; ++i)
        d.h1t[i] = op_sum({im.h1[i], op_scale(op_compose(im.h0[i], im.h0[i]), -half_h())});
    for (int i = 1; i < n; ++i) {
        d.xp1[i] = op_scale(op_comm(d.h1t[i], im.xp0[i]), Scalar(Rat(1, 2)));
        d.xm1[i] = op_scale(op_comm(d.h1t[i], im.xm0[i]), Scalar(Rat(-1, 2)));
    }
    d.xp1[0] = op_scale(op_comm(d.h1t[1], im.xp0[0]), -Scalar::one());
    d.xm1[0] = op_comm(d.h1t[1], im.xm0[0]);
    d.h1_0 = op_comm(d.xp1[0], im.xm0[0]);
    d.h1t[0] = op_sum({d.h1_0, op_scale(op_compose(im.h0[0], im.h0[0]), -half_h())});
    return d;
}

std::optional<std::string> verify_relations(const Ctx& ctx, const YImages& im, int dmax) {
    const int n = im.n;
    YDerived der = derive_level_one(im);
    auto h1f = [&](int i) { return i == 0 ? der.h1_0 : im.h1[i]; };
    auto hgen = [&](int i, int r) { return r == 0 ? im.h0[i] : h1f(i); };
    auto xgen = [&](int sgn, int i, int r) {
        if (r == 0) return sgn > 0 ? im.xp0[i] : im.xm0[i];
        return sgn > 0 ? der.xp1[i] : der.xm1[i];
    };
    Scalar wrap = im.eps_param + Scalar::h(1).scaled(Rat(n, 2));

    struct Check {
        std::string name;
        Op l, r;
    };
    std::vector<Check> cs;
    auto name = [](const char* rel, int i, int j, int extra = -1) {
        std::ostringstream os;
        os << rel << " i=" << i << " j=" << j;
        if (extra >= 0) os << " r=" << extra;
        return os.str();
    };

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            for (int r = 0; r < 2; ++r)
                for (int s = r; s < 2; ++s)
                    if (!(i == j && r == s))
                        cs.push_back({name("[H,H]=0", i, j, 2 * r + s),
                                      op_comm(hgen(i, r), hgen(j, s)), op_zero()});
            cs.push_back({name("[X+0,X-0]", i, j), op_comm(im.xp0[i], im.xm0[j]),
                          i == j ? im.h0[i] : op_zero()});
            cs.push_back({name("[X+1,X-0]", i, j), op_comm(der.xp1[i], im.xm0[j]),
                          i == j ? h1f(i) : op_zero()});
            cs.push_back({name("[X+0,X-1]", i, j), op_comm(im.xp0[i], der.xm1[j]),
                          i == j ? h1f(i) : op_zero()});
            int a = cartan_a(n, i, j);
            for (int sgn : {1, -1})
                for (int r = 0; r < 2; ++r)
                    cs.push_back({name(sgn > 0 ? "[H0,X+r]" : "[H0,X-r]", i, j, r),
                                  op_comm(im.h0[i], xgen(sgn, j, r)),
                                  op_scale(xgen(sgn, j, r), Scalar::integer(sgn * a))});
            bool wrap_pair = (i == 0 && j == n - 1) || (i == n - 1 && j == 0);
            for (int sgn : {1, -1}) {
                if (!wrap_pair) {
                    cs.push_back({name(sgn > 0 ? "[Ht1,X+0]" : "[Ht1,X-0]", i, j),
                                  op_comm(der.h1t[i], xgen(sgn, j, 0)),
                                  op_scale(xgen(sgn, j, 1), Scalar::integer(sgn * a))});
                } else if (i == 0) {
                    // [Ht_{0,1}, X_{n-1,0}] = -+ (X_{n-1,1} + wrap X_{n-1,0})
                    Scalar c = Scalar::integer(-sgn);
                    cs.push_back({name(sgn > 0 ? "wrap[Ht01,X+]" : "wrap[Ht01,X-]", i, j),
                                  op_comm(der.h1t[0], xgen(sgn, n - 1, 0)),
                                  op_sum({op_scale(xgen(sgn, n - 1, 1), c),
                                          op_scale(xgen(sgn, n - 1, 0), c * wrap)})});
                } else {
                    // [Ht_{n-1,1}, X_{0,0}] = -+ (X_{0,1} - wrap X_{0,0})
                    Scalar c = Scalar::integer(-sgn);
                    cs.push_back({name(sgn > 0 ? "wrap[Htn1,X+]" : "wrap[Htn1,X-]", i, j),
                                  op_comm(der.h1t[n - 1], xgen(sgn, 0, 0)),
                                  op_sum({op_scale(xgen(sgn, 0, 1), c),
                                          op_scale(xgen(sgn, 0, 0), -c * wrap)})});
                }
                if (!wrap_pair) {
                    Op lhs = op_sum({op_comm(xgen(sgn, i, 1), xgen(sgn, j, 0)),
                                     op_scale(op_comm(xgen(sgn, i, 0), xgen(sgn, j, 1)),
                                              -Scalar::one())});
                    Op rhs = op_scale(op_acomm(xgen(sgn, i, 0), xgen(sgn, j, 0)),
                                      half_h().scaled(Rat(sgn * a)));
                    cs.push_back({name(sgn > 0 ? "deg1[X+,X+]" : "deg1[X-,X-]", i, j),
                                  std::move(lhs), std::move(rhs)});
                } else if (i == 0) {
                    Op lhs = op_sum({op_comm(xgen(sgn, 0, 1), xgen(sgn, n - 1, 0)),
                                     op_scale(op_comm(xgen(sgn, 0, 0), xgen(sgn, n - 1, 1)),
                                              -Scalar::one())});
                    Op rhs = op_sum(
                        {op_scale(op_acomm(xgen(sgn, 0, 0), xgen(sgn, n - 1, 0)),
                                  half_h().scaled(Rat(-sgn))),
                         op_scale(op_comm(xgen(sgn, 0, 0), xgen(sgn, n - 1, 0)), wrap)});
                    cs.push_back({name(sgn > 0 ? "wrapdeg1[X+,X+]" : "wrapdeg1[X-,X-]", i, j),
                                  std::move(lhs), std::move(rhs)});
                }
            }
            if (i != j) {
                for (int sgn : {1, -1}) {
                    Op xi = xgen(sgn, i, 0), xj = xgen(sgn, j, 0);
                    Op ad = op_comm(xi, xj);
                    for (int t = 0; t < std::abs(a); ++t) ad = op_comm(xi, ad);
                    cs.push_back({name(sgn > 0 ? "serre X+" : "serre X-", i, j),
                                  std::move(ad), op_zero()});
                }
            }
        }

    auto basis = basis_enum(ctx, dmax);
    for (const auto& c : cs) {
        for (const auto& m : basis) {
            State st;
            add_term(st, m, Scalar::one());
            State d = sub(c.l(st), c.r(st));
            if (!is_zero(d)) {
                std::ostringstream os;
                os << c.name << ": on " << mono_str(ctx, m)
                   << ": lhs - rhs = " << state_str(ctx, d);
                return os.str();
            }
        }
    }
    return std::nullopt;
}

// The quadratic series of ev(H_{i,1}) for 1 <= i <= n-1, including the finite
// diagonal terms, as one expression on the given slot.
static SeriesExpr ev_h1_expr(int slot, int n, int i, const Scalar& a, int mutation) {
    SeriesExpr e;
    Scalar sh = a - Scalar::h(1).scaled(Rat(i, 2));
    e.add_letter({slot, Gen::E(i, i), 0}, sh);
    e.add_letter({slot, Gen::E(i + 1, i + 1), 0}, -sh);
    Scalar diag = -hbar();
    if (mutation == 1) diag = hbar();
    e.add_word({{slot, Gen::E(i, i), 0}, {slot, Gen::E(i + 1, i + 1), 0}}, diag);
    for (int k = 1; k <= i; ++k) {
        e.add_desc_first({slot, Gen::E(i, k), 0}, {slot, Gen::E(k, i), 0}, hbar());
        e.add_desc_first({slot, Gen::E(i + 1, k), 0}, {slot, Gen::E(k, i + 1), 0}, -hbar());
    }
    for (int k = i + 1; k <= n; ++k) {
        e.add_desc_first({slot, Gen::E(i, k), -1}, {slot, Gen::E(k, i), 1}, hbar());
        e.add_desc_first({slot, Gen::E(i + 1, k), -1}, {slot, Gen::E(k, i + 1), 1}, -hbar());
    }
    return e;
}

YImages ev_images(const Ctx& ctx, int slot, int n, const Scalar& a, const Scalar& eps,
                  int mutation) {
    YImages im;
    im.n = n;
    im.eps_param = eps;
    im.xp0.resize(n);
    im.xm0.resize(n);
    im.h0.resize(n);
    im.h1.resize(n);
    im.xp0[0] = op_gen(ctx, slot, Gen::E(n, 1), 1);
    im.xm0[0] = op_gen(ctx, slot, Gen::E(1, n), -1);
    for (int i = 1; i < n; ++i) {
        im.xp0[i] = op_gen(ctx, slot, Gen::E(i, i + 1), 0);
        im.xm0[i] = op_gen(ctx, slot, Gen::E(i + 1, i), 0);
    }
    for (int i = 0; i < n; ++i) {
        SeriesExpr e;
        if (i == 0) {
            e.add_letter({slot, Gen::E(n, n), 0}, Scalar::one());
            e.add_letter({slot, Gen::E(1, 1), 0}, -Scalar::one());
            e.add_word({}, eps.mul_h_pow(-1));  // central value of c-tilde
        } else {
            e.add_letter({slot, Gen::E(i, i), 0}, Scalar::one());
            e.add_letter({slot, Gen::E(i + 1, i + 1), 0}, -Scalar::one());
        }
        im.h0[i] = op_series(ctx, std::move(e));
    }
    for (int i = 1; i < n; ++i)
        im.h1[i] = op_series(ctx, ev_h1_expr(slot, n, i, a, i == 1 ? mutation : 0));
    return im;
}

YImages psi_ev_images(const Ctx& ctx, int slot, int m, int nadd, const Scalar& a,
                      const Scalar& eps) {
    const int N = m + nadd;
    YImages im;
    im.n = m;
    im.eps_param = eps + Scalar::h(1).scaled(Rat(nadd));
    im.xp0.resize(m);
    im.xm0.resize(m);
    im.h0.resize(m);
    im.h1.resize(m);
    im.xp0[0] = op_gen(ctx, slot, Gen::E(N, nadd + 1), 1);
    im.xm0[0] = op_gen(ctx, slot, Gen::E(nadd + 1, N), -1);
    for (int i = 1; i < m; ++i) {
        im.xp0[i] = op_gen(ctx, slot, Gen::E(nadd + i, nadd + i + 1), 0);
        im.xm0[i] = op_gen(ctx, slot, Gen::E(nadd + i + 1, nadd + i), 0);
    }
    for (int i = 0; i < m; ++i) {
        SeriesExpr e;
        if (i == 0) {
            e.add_letter({slot, Gen::E(N, N), 0}, Scalar::one());
            e.add_letter({slot, Gen::E(nadd + 1, nadd + 1), 0}, -Scalar::one());
            e.add_word({}, eps.mul_h_pow(-1));
        } else {
            e.add_letter({slot, Gen::E(nadd + i, nadd + i), 0}, Scalar::one());
            e.add_letter({slot, Gen::E(nadd + i + 1, nadd + i + 1), 0}, -Scalar::one());
        }
        im.h0[i] = op_series(ctx, std::move(e));
    }
    for (int i = 1; i < m; ++i) {
        SeriesExpr e = ev_h1_expr(slot, N, nadd + i, a, 0);
        for (int k = 1; k <= nadd; ++k) {
            e.add_desc_first({slot, Gen::E(k, nadd + i), -1}, {slot, Gen::E(nadd + i, k), 1},
                             hbar());
            e.add_desc_first({slot, Gen::E(k, nadd + i + 1), -1},
                             {slot, Gen::E(nadd + i + 1, k), 1}, -hbar());
        }
        im.h1[i] = op_series(ctx, std::move(e));
    }
    return im;
}

SeriesExpr coproduct_tail(int n, int i, int sign, int slot_a, int slot_b) {
    SeriesExpr e;
    e.add_word({{slot_a, Gen::E(i, i), 0}, {slot_b, Gen::E(i + 1, i + 1), 0}}, -hbar());
    e.add_word({{slot_a, Gen::E(i + 1, i + 1), 0}, {slot_b, Gen::E(i, i), 0}}, -hbar());
    // Row pairs (row index r vs r+1) enter with opposite overall sign.
    for (int off : {0, 1}) {
        int r = i + off;
        Scalar sg = off == 0 ? hbar() : -hbar();
        for (int u = 1; u <= i; ++u) {
            if (sign > 0) {
                e.add_desc_first({slot_a, Gen::E(u, r), -1}, {slot_b, Gen::E(r, u), 1}, -sg);
                e.add_desc_first({slot_a, Gen::E(r, u), 0}, {slot_b, Gen::E(u, r), 0}, sg);
            } else {
                e.add_asc_first({slot_a, Gen::E(r, u), 1}, {slot_b, Gen::E(u, r), -1}, -sg);
                e.add_asc_first({slot_a, Gen::E(u, r), 0}, {slot_b, Gen::E(r, u), 0}, sg);
            }
        }
        for (int u = i + 1; u <= n; ++u) {
            if (sign > 0) {
                e.add_desc_first({slot_a, Gen::E(u, r), 0}, {slot_b, Gen::E(r, u), 0}, -sg);
                e.add_desc_first({slot_a, Gen::E(r, u), -1}, {slot_b, Gen::E(u, r), 1}, sg);
            } else {
                e.add_asc_first({slot_a, Gen::E(r, u), 0}, {slot_b, Gen::E(u, r), 0}, -sg);
                e.add_asc_first({slot_a, Gen::E(u, r), 1}, {slot_b, Gen::E(r, u), -1}, sg);
            }
        }
    }
    return e;
}

SeriesExpr coproduct_tail_split(int n, int i, int sign, int slot_a, int slot_b) {
    SeriesExpr e;
    for (int u = 1; u <= i - 1; ++u) {
        if (sign > 0) {
            e.add_desc_first({slot_a, Gen::E(u, i), -1}, {slot_b, Gen::E(i, u), 1}, -hbar());
            e.add_desc_first({slot_a, Gen::E(i, u), 0}, {slot_b, Gen::E(u, i), 0}, hbar());
        } else {
            e.add_asc_first({slot_a, Gen::E(i, u), 1}, {slot_b, Gen::E(u, i), -1}, -hbar());
            e.add_asc_first({slot_a, Gen::E(u, i), 0}, {slot_b, Gen::E(i, u), 0}, hbar());
        }
    }
    for (int u = i + 1; u <= n; ++u) {
        if (sign > 0) {
            e.add_desc_first({slot_a, Gen::E(u, i), 0}, {slot_b, Gen::E(i, u), 0}, -hbar());
            e.add_desc_first({slot_a, Gen::E(i, u), -1}, {slot_b, Gen::E(u, i), 1}, hbar());
        } else {
            e.add_asc_first({slot_a, Gen::E(i, u), 0}, {slot_b, Gen::E(u, i), 0}, -hbar());
            e.add_asc_first({slot_a, Gen::E(u, i), 1}, {slot_b, Gen::E(i, u), -1}, hbar());
        }
    }
    return e;
}

YImages coproduct_images(const Ctx& ctx, int n, const Scalar& a1, const Scalar& a2,
                         const Scalar& eps, int sign, int mutation) {
    YImages s0 = ev_images(ctx, 0, n, a1, eps);
    YImages s1 = ev_images(ctx, 1, n, a2, eps);
    YDerived d0 = derive_level_one(s0);
    YDerived d1 = derive_level_one(s1);
    YImages im;
    im.n = n;
    im.eps_param = eps;
    im.xp0.resize(n);
    im.xm0.resize(n);
    im.h0.resize(n);
    im.h1.resize(n);
    for (int i = 0; i < n; ++i) {
        im.xp0[i] = op_sum({s0.xp0[i], s1.xp0[i]});
        im.xm0[i] = op_sum({s0.xm0[i], s1.xm0[i]});
        im.h0[i] = op_sum({s0.h0[i], s1.h0[i]});
    }
    for (int i = 1; i < n; ++i) {
        // The tail of the coproduct on tilde H_{i,1} is the split difference
        // tilde A_i - tilde A_{i+1}; the quadratic tail written with the
        // diagonal product terms belongs to H_{i,1} and differs from it by
        // hbar h_i (x) h_i, which the relation check detects.
        SeriesExpr tail = coproduct_tail_split(n, i, sign);
        tail.add_expr(coproduct_tail_split(n, i + 1, sign), -Scalar::one());
        if (mutation == 1 && i == 1)
            tail.add_word({{0, Gen::E(i, i), 0}, {1, Gen::E(i + 1, i + 1), 0}}, hbar());
        // H_{i,1} = Delta(tilde H_{i,1}) + (hbar/2) Delta(H_{i,0})^2.
        im.h1[i] = op_sum({d0.h1t[i], d1.h1t[i], op_series(ctx, std::move(tail)),
                           op_scale(op_compose(im.h0[i], im.h0[i]), half_h())});
    }
    return im;
}

YImages tau_shift(const YImages& im, const Scalar& a) {
    YImages out = im;
    for (int i = 1; i < im.n; ++i) out.h1[i] = op_sum({im.h1[i], op_scale(im.h0[i], a)});
    return out;
}

}  // namespace yw
