#include "yw/suites.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

namespace yw {

namespace {

Scalar hbar() { return Scalar::h(1); }

std::string join_q(const std::vector<int>& q) {
    std::string s;
    for (size_t i = 0; i < q.size(); ++i) s += (i ? "," : "") + std::to_string(q[i]);
    return s;
}

Pyramid make_pyramid(const SuiteOptions& opt) {
    if (opt.q.empty()) throw std::invalid_argument("suite needs --q");
    return Pyramid(opt.q, opt.v);
}

void run_yang_ev(const SuiteOptions& opt, SuiteReport& rep) {
    if (opt.n < 2) throw std::invalid_argument("yang-ev: need n >= 2");
    Ctx ctx = {SlotCtx::loop_gl(opt.n, Scalar::eps().mul_h_pow(-1))};
    // symbolic shift parameter a = hbar*k keeps every coefficient symbolic
    const Scalar a = Scalar::monomial(1, 1, 0, 1);
    YImages im = ev_images(ctx, 0, opt.n, a, Scalar::eps(), opt.mutation);
    auto w = verify_relations(ctx, im, opt.depth);
    rep.instances.push_back({"relations[n=" + std::to_string(opt.n) + ",a=h*k]",
                             !w.has_value(), w.value_or("")});
}

void run_yang_psi(const SuiteOptions& opt, SuiteReport& rep) {
    if (opt.m < 3 || opt.add < 1) throw std::invalid_argument("yang-psi: need m >= 3, add >= 1");
    Ctx ctx = {SlotCtx::loop_gl(opt.m + opt.add, Scalar::eps().mul_h_pow(-1))};
    YImages im = psi_ev_images(ctx, 0, opt.m, opt.add, Scalar::zero(), Scalar::eps());
    auto w = verify_relations(ctx, im, opt.depth);
    rep.instances.push_back({"relations[m=" + std::to_string(opt.m) + ",add=" +
                                 std::to_string(opt.add) + ",eps+" + std::to_string(opt.add) + "h]",
                             !w.has_value(), w.value_or("")});
}

void run_yang_coproduct(const SuiteOptions& opt, SuiteReport& rep) {
    if (opt.n < 2) throw std::invalid_argument("yang-coproduct: need n >= 2");
    const Scalar eps = Scalar::eps();
    Ctx ctx = {SlotCtx::loop_gl(opt.n, eps.mul_h_pow(-1)),
               SlotCtx::loop_gl(opt.n, eps.mul_h_pow(-1))};
    for (int sign : {1, -1}) {
        const std::string tag = sign > 0 ? "+" : "-";
        YImages im = coproduct_images(ctx, opt.n, Scalar::zero(), Scalar::zero(), eps, sign,
                                      opt.mutation);
        auto w = verify_relations(ctx, im, opt.depth);
        rep.instances.push_back({"relations[sign" + tag + "]", !w.has_value(), w.value_or("")});
        // split identity for the quadratic tail:
        //   A_i = Atilde_i - Atilde_{i+1} + hbar h_i (x) h_i
        for (int i = 1; i < opt.n; ++i) {
            Op lhs = op_series(ctx, coproduct_tail(opt.n, i, sign));
            SeriesExpr split = coproduct_tail_split(opt.n, i, sign);
            split.add_expr(coproduct_tail_split(opt.n, i + 1, sign), -Scalar::one());
            auto cartan = [&](int slot) {
                return op_sum({op_gen(ctx, slot, Gen::E(i, i), 0),
                               op_scale(op_gen(ctx, slot, Gen::E(i + 1, i + 1), 0),
                                        -Scalar::one())});
            };
            Op rhs = op_sum({op_series(ctx, std::move(split)),
                             op_scale(op_compose(cartan(0), cartan(1)), hbar())});
            auto w2 = op_eq_on_depth(ctx, lhs, rhs, opt.depth);
            rep.instances.push_back({"tail-split[sign" + tag + ",i=" + std::to_string(i) + "]",
                                     !w2.has_value(), w2.value_or("")});
        }
    }
}

void run_d0_kernel(const SuiteOptions& opt, SuiteReport& rep) {
    Pyramid p = make_pyramid(opt);
    Ctx ctx = {SlotCtx::super_a(p)};
    const int thr = p.qMax - p.qMin;
    for (int i = 1; i <= p.qMax; ++i)
        for (int j = 1; j <= p.qMax; ++j) {
            if (w1_admissible(p, i, j)) {
                State d = d0(ctx, p, b_w1(ctx, p, i, j));
                rep.instances.push_back({"w1[" + std::to_string(i) + "," + std::to_string(j) + "]",
                                         is_zero(d), is_zero(d) ? "" : state_str(ctx, d)});
            }
            if (i > thr && j > thr) {
                State d = d0(ctx, p, b_w2(ctx, p, i, j, opt.mutation));
                rep.instances.push_back({"w2[" + std::to_string(i) + "," + std::to_string(j) + "]",
                                         is_zero(d), is_zero(d) ? "" : state_str(ctx, d)});
            }
        }
}

void run_ope_lemma(const SuiteOptions& opt, SuiteReport& rep) {
    Pyramid p = make_pyramid(opt);
    Ctx ctx = miura_ctx(p);
    Block b = full_block(p);
    const int thr = p.qMax - p.qMin;
    for (int i = 1; i <= p.qMax; ++i)
        for (int j = 1; j <= p.qMax; ++j) {
            const bool lo = i <= thr && j > thr, hi = i > thr && j <= thr;
            if (!lo && !hi) continue;
            for (int pp = thr + 1; pp <= p.qMax; ++pp)
                for (int qq = thr + 1; qq <= p.qMax; ++qq) {
                    if (i == qq || j == pp) continue;
                    const std::string sfx = "[" + std::to_string(i) + "," + std::to_string(j) +
                                            ";" + std::to_string(pp) + "," + std::to_string(qq) +
                                            "]";
                    State w2 = mu_w2(ctx, b, pp, qq);
                    State l0 = mu_w1_mode(ctx, b, i, j, 0)(w2);
                    State r0 = w1_pair_product(ctx, b, i, qq, pp, j);
                    if (hi) r0 = scale(r0, -Scalar::one());
                    bool ok0 = l0 == r0;
                    rep.instances.push_back(
                        {"prod0" + sfx, ok0, ok0 ? "" : state_str(ctx, l0)});
                    State l1 = mu_w1_mode(ctx, b, i, j, 1)(w2);
                    State r1;
                    if (hi && pp == qq) r1 = scale(mu_w1(ctx, b, i, j), -Scalar::one());
                    bool ok1 = l1 == r1;
                    rep.instances.push_back(
                        {"prod1" + sfx, ok1, ok1 ? "" : state_str(ctx, l1)});
                    for (int r = 2; r <= 3; ++r) {
                        State lr = mu_w1_mode(ctx, b, i, j, r)(w2);
                        rep.instances.push_back({"prod" + std::to_string(r) + sfx, is_zero(lr),
                                                 is_zero(lr) ? "" : state_str(ctx, lr)});
                    }
                }
        }
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "yang-ev",   "yang-psi",    "yang-coproduct", "yang-deltal",     "d0-kernel",
        "ope-lemma", "hojo",        "miura-split",    "extended",        "parabolic-compat"};
    return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opt) {
    SuiteReport rep;
    rep.suite = name;
    {
        std::ostringstream ps;
        if (!opt.q.empty()) ps << "q=" << join_q(opt.q) << " v=" << opt.v << " ";
        ps << "w=" << opt.w << " n=" << opt.n << " m=" << opt.m << " add=" << opt.add
           << " depth=" << opt.depth << " side=" << opt.side << " diagnose=" << opt.diagnose
           << " mutation=" << opt.mutation;
        if (!opt.q.empty())
            ps << " eps=h*(k+N-qMin)";  // central substitution used by pyramid suites
        else if (name == "yang-psi" || name == "extended")
            ps << " eps_embed=e-" << opt.add << "*h";
        rep.params = ps.str();
    }
    const auto t0 = std::chrono::steady_clock::now();
    if (name == "yang-ev") {
        run_yang_ev(opt, rep);
    } else if (name == "yang-psi") {
        run_yang_psi(opt, rep);
    } else if (name == "yang-coproduct") {
        run_yang_coproduct(opt, rep);
    } else if (name == "yang-deltal") {
        Pyramid p = make_pyramid(opt);
        Ctx ctx = miura_ctx(p);
        auto w = verify_relations(ctx, deltal_images(ctx, p), opt.depth);
        rep.instances.push_back({"relations[q=" + join_q(opt.q) + "]", !w.has_value(),
                                 w.value_or("")});
    } else if (name == "d0-kernel") {
        run_d0_kernel(opt, rep);
    } else if (name == "ope-lemma") {
        run_ope_lemma(opt, rep);
    } else if (name == "hojo") {
        Pyramid p = make_pyramid(opt);
        if (p.qMin < 3)
            throw std::invalid_argument("hojo: shortest column must be >= 3");
        rep.instances = verify_hojo(p, opt.depth, opt.diagnose, opt.mutation);
    } else if (name == "miura-split") {
        rep.instances = verify_miura_factorization(make_pyramid(opt), opt.w, opt.mutation);
    } else if (name == "extended") {
        rep.instances =
            verify_extended_relations(opt.side, opt.m, opt.add, opt.depth, opt.mutation);
    } else if (name == "parabolic-compat") {
        rep.instances = verify_parabolic_compat(make_pyramid(opt), opt.w, opt.depth);
    } else {
        throw std::invalid_argument("unknown suite: " + name);
    }
    const auto t1 = std::chrono::steady_clock::now();
    rep.wall_time = std::chrono::duration<double>(t1 - t0).count();
    return rep;
}

}  // namespace yw
