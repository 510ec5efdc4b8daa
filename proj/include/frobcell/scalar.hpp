#pragma once

// Exact field arithmetic: arbitrary-precision rationals and prime fields F_p.
// All values are immutable after construction and safe to share across threads.

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/miller_rabin.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace frobcell {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

struct FrobcellError : std::runtime_error {
    explicit FrobcellError(const std::string& msg) : std::runtime_error(msg) {}
};

struct FieldMismatchError : FrobcellError {
    explicit FieldMismatchError(const std::string& msg) : FrobcellError(msg) {}
};

struct DivisionByZeroError : FrobcellError {
    explicit DivisionByZeroError(const std::string& msg) : FrobcellError(msg) {}
};

struct ParseError : FrobcellError {
    explicit ParseError(const std::string& msg) : FrobcellError(msg) {}
};

namespace detail {

inline bool is_prime(const BigInt& p) {
    if (p < 2) return false;
    for (int q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
        if (p == q) return true;
        if (p % q == 0) return false;
    }
    if (p < 37 * 37) return true;
    return boost::multiprecision::miller_rabin_test(p, 32);
}

}  // namespace detail

// Field descriptor: the rationals, or F_p for a validated prime p.
class Field {
public:
    Field() : p_(0) {}

    static Field rationals() { return Field(); }

    static Field prime(const BigInt& p) {
        if (!detail::is_prime(p))
            throw FrobcellError("field modulus " + p.str() + " is not prime");
        Field f;
        f.p_ = p;
        return f;
    }

    bool is_rational() const { return p_ == 0; }
    bool is_prime_field() const { return p_ != 0; }
    const BigInt& modulus() const { return p_; }

    BigInt characteristic() const { return p_; }

    bool operator==(const Field& o) const { return p_ == o.p_; }
    bool operator!=(const Field& o) const { return p_ != o.p_; }

    std::string to_string() const { return is_rational() ? "q" : "fp:" + p_.str(); }

    // Accepts "q", "Q", "fp:<p>" (also "f<p>" shorthand).
    static Field parse(const std::string& s) {
        if (s == "q" || s == "Q") return rationals();
        if (s.rfind("fp:", 0) == 0) return prime(BigInt(s.substr(3)));
        if (s.size() > 1 && (s[0] == 'f' || s[0] == 'F')) return prime(BigInt(s.substr(1)));
        throw ParseError("unrecognized field descriptor: '" + s + "'");
    }

private:
    BigInt p_;  // 0 means the rationals
};

// One exact scalar. Rationals are kept in lowest terms with positive
// denominator (cpp_rational invariant); prime-field values are canonical
// residues in [0, p).
class FieldElement {
public:
    FieldElement() = default;
    explicit FieldElement(Field f) : f_(std::move(f)) { canonicalize(); }

    FieldElement(Field f, BigRat v) : f_(std::move(f)), v_(std::move(v)) { canonicalize(); }
    FieldElement(Field f, long v) : f_(std::move(f)), v_(v) { canonicalize(); }

    static FieldElement zero(const Field& f) { return FieldElement(f, 0); }
    static FieldElement one(const Field& f) { return FieldElement(f, 1); }

    const Field& field() const { return f_; }
    const BigRat& value() const { return v_; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    FieldElement operator+(const FieldElement& o) const {
        require_same(o);
        return FieldElement(f_, v_ + o.v_);
    }
    FieldElement operator-(const FieldElement& o) const {
        require_same(o);
        return FieldElement(f_, v_ - o.v_);
    }
    FieldElement operator*(const FieldElement& o) const {
        require_same(o);
        return FieldElement(f_, v_ * o.v_);
    }
    FieldElement operator/(const FieldElement& o) const {
        require_same(o);
        return *this * o.inverse();
    }
    FieldElement operator-() const { return FieldElement(f_, -v_); }

    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

    FieldElement inverse() const {
        if (is_zero()) throw DivisionByZeroError("inverse of zero");
        if (f_.is_rational()) return FieldElement(f_, 1 / v_);
        // Fermat: a^(p-2) mod p.
        const BigInt a = boost::multiprecision::numerator(v_);
        const BigInt e = f_.modulus() - 2;
        const BigInt r = boost::multiprecision::powm(a, e, f_.modulus());
        return FieldElement(f_, BigRat(r));
    }

    bool operator==(const FieldElement& o) const { return f_ == o.f_ && v_ == o.v_; }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    // Canonical text form: "n" or "n/d" over Q, decimal residue over F_p.
    std::string to_string() const {
        const BigInt num = boost::multiprecision::numerator(v_);
        const BigInt den = boost::multiprecision::denominator(v_);
        if (den == 1) return num.str();
        return num.str() + "/" + den.str();
    }

    // Parses "n", "-n", or "n/d" and reduces into the field.
    static FieldElement parse(const Field& f, const std::string& s) {
        if (s.empty()) throw ParseError("empty scalar");
        const auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return FieldElement(f, BigRat(BigInt(s)));
            BigInt num(s.substr(0, slash));
            BigInt den(s.substr(slash + 1));
            if (den == 0) throw DivisionByZeroError("scalar '" + s + "' has zero denominator");
            return FieldElement(f, BigRat(num, den));
        } catch (const std::exception& e) {
            if (dynamic_cast<const FrobcellError*>(&e)) throw;
            throw ParseError("bad scalar '" + s + "'");
        }
    }

private:
    void require_same(const FieldElement& o) const {
        if (f_ != o.f_)
            throw FieldMismatchError("operands live in different fields (" + f_.to_string() +
                                     " vs " + o.f_.to_string() + ")");
    }

    void canonicalize() {
        if (f_.is_rational()) return;
        const BigInt& p = f_.modulus();
        BigInt num = boost::multiprecision::numerator(v_);
        BigInt den = boost::multiprecision::denominator(v_);
        num %= p;
        if (num < 0) num += p;
        if (den != 1) {
            den %= p;
            if (den < 0) den += p;
            if (den == 0) throw DivisionByZeroError("denominator vanishes in F_" + p.str());
            const BigInt e = p - 2;
            const BigInt den_inv = boost::multiprecision::powm(den, e, p);
            num = num * den_inv % p;
        }
        v_ = BigRat(num);
    }

    Field f_;
    BigRat v_ = 0;
};

}  // namespace frobcell
