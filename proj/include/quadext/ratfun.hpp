#pragma once

#include <string>
#include <utility>

#include "quadext/poly.hpp"

namespace quadext {

/// Element of F_q(x), kept in reduced canonical form: numerator and
/// denominator coprime, denominator monic and nonzero.  Zero is (0, 1).
class RationalFunction {
public:
    RationalFunction() = default;
    explicit RationalFunction(Polynomial num)
        : num_(std::move(num)), den_(Polynomial::one(num_.field())) {}
    RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw DomainError("zero denominator");
        reduce();
    }

    static RationalFunction zero(const FieldPtr& f) {
        return RationalFunction(Polynomial::zero(f));
    }
    static RationalFunction one(const FieldPtr& f) { return RationalFunction(Polynomial::one(f)); }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    const FieldPtr& field() const { return num_.field(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }

    RationalFunction operator+(const RationalFunction& o) const {
        return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RationalFunction operator-(const RationalFunction& o) const {
        return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    RationalFunction operator*(const RationalFunction& o) const {
        return RationalFunction(num_ * o.num_, den_ * o.den_);
    }
    RationalFunction operator/(const RationalFunction& o) const {
        if (o.is_zero()) throw DomainError("division by the zero function");
        return RationalFunction(num_ * o.den_, den_ * o.num_);
    }
    RationalFunction operator-() const { return RationalFunction(-num_, den_); }

    RationalFunction inverse() const {
        if (is_zero()) throw DomainError("inverse of the zero function");
        return RationalFunction(den_, num_);
    }

    RationalFunction pow(int k) const {
        if (k < 0) return inverse().pow(-k);
        RationalFunction r = one(field()), b = *this;
        unsigned e = static_cast<unsigned>(k);
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    std::string str() const {
        if (is_polynomial()) return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

    bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }
    bool operator<(const RationalFunction& o) const {
        if (den_ != o.den_) return den_ < o.den_;
        return num_ < o.num_;
    }

private:
    void reduce() {
        if (num_.is_zero()) {
            den_ = Polynomial::one(num_.field());
            return;
        }
        Polynomial g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        FieldElement lead = den_.leading();
        if (!lead.is_one()) {
            num_ = num_.scaled(lead.inverse());
            den_ = den_.scaled(lead.inverse());
        }
    }

    Polynomial num_, den_;
};

}  // namespace quadext
