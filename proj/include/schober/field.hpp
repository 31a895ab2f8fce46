#pragma once

// Exact field scalars: arbitrary-precision rationals (default) or a prime
// field F_p selected at construction time.  All arithmetic is exact; mixing
// scalars from different fields is a caller bug and asserts.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace schober {

using BigRational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Field descriptor. p == 0 means the rationals, otherwise F_p with p prime.
struct Field {
    std::uint32_t p = 0;

    bool is_rational() const { return p == 0; }
    bool operator==(const Field& o) const { return p == o.p; }
    bool operator!=(const Field& o) const { return p != o.p; }

    std::string name() const { return p == 0 ? "Q" : "F" + std::to_string(p); }

    static Field rationals() { return Field{0}; }
    static Field prime(std::uint32_t p);
};

class Scalar {
  public:
    Scalar() : p_(0), q_(0) {}
    explicit Scalar(Field f) : p_(f.p), q_(0), r_(0) {}

    static Scalar zero(Field f) { return Scalar(f); }
    static Scalar one(Field f) { return from_int(f, 1); }
    static Scalar from_int(Field f, long long v);
    static Scalar from_rational(Field f, const BigRational& v);
    // Parses "a/b" (rationals) or decimal residue (prime field).
    static Scalar parse(Field f, const std::string& text);

    Field field() const { return Field{p_}; }
    bool is_zero() const;
    bool is_one() const { return *this == one(field()); }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inv() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Exact serialization: "num/den" over Q (den omitted when 1),
    // "r mod p" over F_p.
    std::string str() const;

    const BigRational& rational() const { return q_; }
    std::uint64_t residue() const { return r_; }

  private:
    std::uint32_t p_;
    BigRational q_;        // used when p_ == 0
    std::uint64_t r_ = 0;  // used when p_ != 0, in [0, p)

    void check_same(const Scalar& o) const;
};

}  // namespace schober
