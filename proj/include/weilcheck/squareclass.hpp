#pragma once

// Elements of Q*/(Q*)^2 plus a distinct zero sentinel, represented by the
// signed squarefree integer of a class. Zero stays separate so that parity
// verdicts can tell "vacuously true" apart from "verified".

#include "weilcheck/factor.hpp"
#include "weilcheck/numeric.hpp"

#include <stdexcept>
#include <string>

namespace weilcheck {

class SquareClass {
public:
    SquareClass() : zero_(true), rep_(0) {}
    static SquareClass zero() { return SquareClass(); }
    static SquareClass of_squarefree(const BigInt& s) {
        SquareClass c;
        c.zero_ = false;
        c.rep_ = s;
        return c;
    }

    bool is_zero() const { return zero_; }

    const BigInt& representative() const {
        if (zero_) throw std::logic_error("SquareClass: zero class has no representative");
        return rep_;
    }

    bool is_one() const { return !zero_ && rep_ == 1; }

    friend bool operator==(const SquareClass& a, const SquareClass& b) {
        return a.zero_ == b.zero_ && (a.zero_ || a.rep_ == b.rep_);
    }
    friend bool operator!=(const SquareClass& a, const SquareClass& b) { return !(a == b); }

    // class of a product; zero absorbs
    friend SquareClass operator*(const SquareClass& a, const SquareClass& b) {
        if (a.zero_ || b.zero_) return zero();
        return of_squarefree(squarefree_part(a.rep_ * b.rep_));
    }

    std::string str() const { return zero_ ? "zero" : rep_.str(); }

private:
    bool zero_;
    BigInt rep_;
};

inline SquareClass square_class(const Rat& x) {
    if (x == 0) return SquareClass::zero();
    return SquareClass::of_squarefree(squarefree_part(num(x) * den(x)));
}

inline SquareClass square_class(const BigInt& x) { return square_class(Rat(x)); }

// x/s with s = class representative is a square; expose the witness root for reports
inline Rat square_witness(const Rat& x) {
    if (x == 0) return 0;
    Rat ratio = x / Rat(square_class(x).representative());
    BigInt n = num(ratio), d = den(ratio);
    return Rat(isqrt_floor(n), isqrt_floor(d));
}

}  // namespace weilcheck
