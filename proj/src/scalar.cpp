#include "yw/scalar.hpp"

#include <sstream>

namespace yw {

Scalar Scalar::subst_eps(long c) const {
    Scalar out;
    for (const auto& [key, coeff] : terms_) {
        // e^b -> h^b * (k + c)^b = h^b * sum_t C(b,t) c^(b-t) k^t
        const int b = key.ee;
        Rat binom = 1;  // C(b, t), updated incrementally
        Int cpow = 1;   // c^(b-t) built from t = b downward, so precompute c^0..c^b
        std::vector<Int> cpows(b + 1);
        cpows[0] = 1;
        for (int t = 1; t <= b; ++t) cpows[t] = cpows[t - 1] * c;
        for (int t = 0; t <= b; ++t) {
            out.add_term(ParamKey{key.eh + b, 0, key.ek + t}, coeff * binom * Rat(cpows[b - t]));
            binom = binom * (b - t) / (t + 1);
        }
        (void)cpow;
    }
    return out;
}

std::string Scalar::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        Rat ac = c;
        if (first) {
            if (c < 0) {
                os << "-";
                ac = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) ac = -c;
        }
        first = false;
        bool printed = false;
        if (ac != 1 || (key.eh == 0 && key.ee == 0 && key.ek == 0)) {
            os << ac;
            printed = true;
        }
        auto part = [&](const char* name, int e) {
            if (e == 0) return;
            if (printed) os << "*";
            os << name;
            if (e != 1) os << "^" << e;
            printed = true;
        };
        part("h", key.eh);
        part("e", key.ee);
        part("k", key.ek);
    }
    return os.str();
}

}  // namespace yw
