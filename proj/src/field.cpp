#include "schober/field.hpp"

namespace schober {

Field Field::prime(std::uint32_t p) {
    if (p < 2) throw std::invalid_argument("field characteristic must be >= 2");
    for (std::uint32_t d = 2; (std::uint64_t)d * d <= p; ++d)
        if (p % d == 0) throw std::invalid_argument("field characteristic must be prime");
    return Field{p};
}

Scalar Scalar::from_int(Field f, long long v) {
    Scalar s(f);
    if (f.is_rational()) {
        s.q_ = BigRational(v);
    } else {
        long long m = v % (long long)f.p;
        if (m < 0) m += f.p;
        s.r_ = (std::uint64_t)m;
    }
    return s;
}

Scalar Scalar::from_rational(Field f, const BigRational& v) {
    Scalar s(f);
    if (f.is_rational()) {
        s.q_ = v;
        return s;
    }
    BigInt num = boost::multiprecision::numerator(v);
    BigInt den = boost::multiprecision::denominator(v);
    BigInt p(f.p);
    BigInt nm = num % p; if (nm < 0) nm += p;
    BigInt dm = den % p; if (dm < 0) dm += p;
    if (dm == 0) throw std::invalid_argument("denominator vanishes in F_" + std::to_string(f.p));
    Scalar n = from_int(f, nm.convert_to<long long>());
    Scalar d = from_int(f, dm.convert_to<long long>());
    return n / d;
}

Scalar Scalar::parse(Field f, const std::string& text) {
    std::string t = text;
    auto mod = t.find(" mod ");
    if (mod != std::string::npos) t = t.substr(0, mod);
    auto slash = t.find('/');
    BigInt num, den = 1;
    if (slash == std::string::npos) {
        num = BigInt(t);
    } else {
        num = BigInt(t.substr(0, slash));
        den = BigInt(t.substr(slash + 1));
    }
    if (den == 0) throw std::invalid_argument("scalar with zero denominator: " + text);
    return from_rational(f, BigRational(num, den));
}

bool Scalar::is_zero() const { return p_ == 0 ? q_.is_zero() : r_ == 0; }

void Scalar::check_same(const Scalar& o) const {
    if (p_ != o.p_) throw std::logic_error("scalar field mismatch");
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same(o);
    Scalar s(field());
    if (p_ == 0) s.q_ = q_ + o.q_;
    else s.r_ = (r_ + o.r_) % p_;
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same(o);
    Scalar s(field());
    if (p_ == 0) s.q_ = q_ - o.q_;
    else s.r_ = (r_ + p_ - o.r_) % p_;
    return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same(o);
    Scalar s(field());
    if (p_ == 0) s.q_ = q_ * o.q_;
    else s.r_ = (r_ * o.r_) % p_;
    return s;
}

Scalar Scalar::inv() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    Scalar s(field());
    if (p_ == 0) {
        s.q_ = 1 / q_;
        return s;
    }
    // extended Euclid on (r_, p)
    long long a = (long long)r_, b = (long long)p_;
    long long x0 = 1, x1 = 0;
    while (b) {
        long long q = a / b;
        long long t = a - q * b; a = b; b = t;
        t = x0 - q * x1; x0 = x1; x1 = t;
    }
    long long x = x0 % (long long)p_;
    if (x < 0) x += p_;
    s.r_ = (std::uint64_t)x;
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

Scalar Scalar::operator-() const {
    Scalar s(field());
    if (p_ == 0) s.q_ = -q_;
    else s.r_ = r_ == 0 ? 0 : p_ - r_;
    return s;
}

bool Scalar::operator==(const Scalar& o) const {
    check_same(o);
    return p_ == 0 ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::str() const {
    if (p_ != 0) return std::to_string(r_) + " mod " + std::to_string(p_);
    std::string n = boost::multiprecision::numerator(q_).str();
    BigInt d = boost::multiprecision::denominator(q_);
    if (d == 1) return n;
    return n + "/" + d.str();
}

}  // namespace schober
