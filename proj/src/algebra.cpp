#include "yw/algebra.hpp"

#include <numeric>
#include <sstream>

namespace yw {

std::string Gen::str() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::E: os << "E[" << i << "," << j << "]"; break;
        case Kind::Psi: os << "Psi[" << i << "," << j << "]"; break;
        case Kind::C: os << "ctilde"; break;
        case Kind::Z: os << "z"; break;
    }
    return os.str();
}

Pyramid::Pyramid(std::vector<int> sizes, int pivot) : q(std::move(sizes)), v(pivot) {
    l = static_cast<int>(q.size());
    if (l == 0 || v < 1 || v > l) throw std::invalid_argument("pyramid: bad pivot");
    for (int s = 1; s < v; ++s)
        if (q[s - 1] > q[s]) throw std::invalid_argument("pyramid: not increasing up to pivot");
    for (int s = v + 1; s < l; ++s)
        if (q[s - 1] < q[s]) throw std::invalid_argument("pyramid: not decreasing after pivot");
    N = std::accumulate(q.begin(), q.end(), 0);
    qMax = (v < l) ? std::max(q[v - 1], q[v]) : q[v - 1];
    qMin = std::min(q.front(), q.back());
}

int Pyramid::col(int i) const {
    int acc = 0;
    for (int s = 1; s <= l; ++s) {
        acc += q[s - 1];
        if (i <= acc) return s;
    }
    throw std::out_of_range("pyramid col");
}

int Pyramid::row(int i) const {
    const int c = col(i);
    int before = 0;
    for (int s = 1; s < c; ++s) before += q[s - 1];
    return i - before + qMax - q[c - 1];
}

int Pyramid::box(int c, int r) const {
    if (c < 1 || c > l) return 0;
    if (r <= qMax - q[c - 1] || r > qMax) return 0;
    int before = 0;
    for (int s = 1; s < c; ++s) before += q[s - 1];
    return before + r - (qMax - q[c - 1]);
}

bool SlotCtx::valid(const Gen& g) const {
    switch (g.kind) {
        case Kind::C:
        case Kind::Z:
            return !super;
        case Kind::E:
            return super ? pyr.valid_e(g.i, g.j)
                         : (g.i >= 1 && g.i <= n && g.j >= 1 && g.j <= n);
        case Kind::Psi:
            return super && pyr.valid_psi(g.i, g.j);
    }
    return false;
}

std::vector<BrTerm> bracket(const SlotCtx& slot, const Gen& a, const Gen& b) {
    std::vector<BrTerm> out;
    if (a.kind == Kind::C || a.kind == Kind::Z || b.kind == Kind::C || b.kind == Kind::Z)
        return out;
    if (a.odd() && b.odd()) return out;  // [psi, psi] = 0
    auto push = [&](Gen g, int sign) {
        if (slot.valid(g)) out.push_back(BrTerm{g, sign});
    };
    if (!a.odd() && !b.odd()) {
        // [E_{i,j}, E_{p,q}] = d_{j,p} E_{i,q} - d_{i,q} E_{p,j}
        if (a.j == b.i) push(Gen{Kind::E, a.i, b.j}, +1);
        if (a.i == b.j) push(Gen{Kind::E, b.i, a.j}, -1);
        return out;
    }
    // Mixed even/odd: [e_{i,j}, psi_{p,q}] = d_{j,p} psi_{i,q} - d_{i,q} psi_{p,j}.
    const Gen& e = a.odd() ? b : a;
    const Gen& p = a.odd() ? a : b;
    const int flip = a.odd() ? -1 : +1;  // [psi, e] = -[e, psi]
    if (e.j == p.i) push(Gen{Kind::Psi, e.i, p.j}, flip);
    if (e.i == p.j) push(Gen{Kind::Psi, p.i, e.j}, -flip);
    return out;
}

Scalar central_pair(const SlotCtx& slot, const Gen& a, const Gen& b) {
    if (a.kind != Kind::E || b.kind != Kind::E) return Scalar::zero();
    Scalar out;
    if (a.i == b.j && a.j == b.i) out += slot.cpair;
    if (a.i == a.j && b.i == b.j) out += slot.zpair;
    return out;
}

}  // namespace yw
