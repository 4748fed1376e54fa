// Exact coefficient ring for the verification engine: Laurent polynomials in
// the deformation parameter h, polynomial in the auxiliary parameters e and k,
// with arbitrary-precision rational coefficients.  Division is only ever
// needed by powers of h, which keeps the ring closed under every operation
// used by the engine.
#ifndef YW_SCALAR_HPP
#define YW_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <map>
#include <string>

namespace yw {

using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

// Exponent triple of a monomial h^eh * e^ee * k^ek.  eh may be negative.
struct ParamKey {
    int eh = 0;
    int ee = 0;
    int ek = 0;
    auto operator<=>(const ParamKey&) const = default;
};

class Scalar {
public:
    Scalar() = default;
    explicit Scalar(const Rat& r) {
        if (r != 0) terms_[ParamKey{}] = r;
    }
    Scalar(long num, long den) : Scalar(Rat(num, den)) {}

    static Scalar zero() { return Scalar(); }
    static Scalar one() { return Scalar(Rat(1)); }
    static Scalar integer(long v) { return Scalar(Rat(v)); }
    static Scalar monomial(const Rat& coeff, int eh, int ee, int ek) {
        Scalar s;
        if (coeff != 0) s.terms_[ParamKey{eh, ee, ek}] = coeff;
        return s;
    }
    static Scalar h(int pow = 1) { return monomial(1, pow, 0, 0); }
    static Scalar eps() { return monomial(1, 0, 1, 0); }
    static Scalar k() { return monomial(1, 0, 0, 1); }

    bool is_zero() const { return terms_.empty(); }
    bool operator==(const Scalar& o) const { return terms_ == o.terms_; }

    Scalar& operator+=(const Scalar& o) {
        for (const auto& [key, c] : o.terms_) add_term(key, c);
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        for (const auto& [key, c] : o.terms_) add_term(key, -c);
        return *this;
    }
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    Scalar operator-() const {
        Scalar r;
        for (const auto& [key, c] : terms_) r.terms_[key] = -c;
        return r;
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        Scalar r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                r.add_term(ParamKey{ka.eh + kb.eh, ka.ee + kb.ee, ka.ek + kb.ek},
                           ca * cb);
        return r;
    }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar scaled(const Rat& r) const {
        Scalar out;
        if (r == 0) return out;
        for (const auto& [key, c] : terms_) out.terms_[key] = c * r;
        return out;
    }
    // Multiply by h^pow; pow may be negative (the only division the engine needs).
    Scalar mul_h_pow(int pow) const {
        Scalar out;
        for (const auto& [key, c] : terms_)
            out.terms_[ParamKey{key.eh + pow, key.ee, key.ek}] = c;
        return out;
    }

    // Substitute e -> h*(k + c) for an integer shift c, expanding binomially.
    Scalar subst_eps(long c) const;

    // Canonical textual form, e.g. "3/2*h^-1*e^2*k"; "0" when empty.
    std::string str() const;

    const std::map<ParamKey, Rat>& terms() const { return terms_; }

private:
    void add_term(const ParamKey& key, const Rat& c) {
        if (c == 0) return;
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_[key] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::map<ParamKey, Rat> terms_;
};

}  // namespace yw

#endif
