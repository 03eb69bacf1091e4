// Exact arithmetic over the field Q(sqrt(3)) and exact inertia of symmetric
// matrices over it.  All values are immutable after construction and every
// operation is pure, so they can be shared freely between threads.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace coxforge {

// Arbitrary-precision rational.  mpq_class keeps the value canonical
// (reduced, positive denominator), which is exactly the invariant we need.
using Rational = mpq_class;

// Element a + b*sqrt(3) of Q(sqrt(3)), with the real embedding sqrt(3) > 0.
struct QS3 {
    Rational a;  // rational part
    Rational b;  // coefficient of sqrt(3)

    QS3() : a(0), b(0) {}
    QS3(long v) : a(v), b(0) {}
    QS3(const Rational& ra) : a(ra), b(0) {}
    QS3(const Rational& ra, const Rational& rb) : a(ra), b(rb) {}

    static QS3 sqrt3() { return QS3(Rational(0), Rational(1)); }

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_rational() const { return b == 0; }

    QS3 operator-() const { return QS3(-a, -b); }
    QS3 operator+(const QS3& o) const { return QS3(a + o.a, b + o.b); }
    QS3 operator-(const QS3& o) const { return QS3(a - o.a, b - o.b); }
    QS3 operator*(const QS3& o) const {
        return QS3(a * o.a + 3 * b * o.b, a * o.b + b * o.a);
    }
    QS3 inverse() const {
        // 1/(a+b*s) = (a-b*s)/(a^2-3b^2); the norm vanishes only at 0
        // because 3 is not a rational square.
        Rational norm = a * a - 3 * b * b;
        if (norm == 0) throw std::domain_error("QS3: division by zero");
        return QS3(a / norm, -b / norm);
    }
    QS3 operator/(const QS3& o) const { return *this * o.inverse(); }

    QS3& operator+=(const QS3& o) { return *this = *this + o; }
    QS3& operator-=(const QS3& o) { return *this = *this - o; }
    QS3& operator*=(const QS3& o) { return *this = *this * o; }

    bool operator==(const QS3& o) const { return a == o.a && b == o.b; }
    bool operator!=(const QS3& o) const { return !(*this == o); }

    double to_double() const {
        return a.get_d() + b.get_d() * 1.7320508075688772;
    }

    // Human-readable form such as "0", "-1/2", "s3", "-s3/2", "1+s3".
    std::string str() const;
};

// Exact sign of a + b*sqrt(3) under the real embedding: -1, 0 or +1.
int sign_qs3(const QS3& v);

// Total order induced by the real embedding.
inline bool operator<(const QS3& x, const QS3& y) {
    return sign_qs3(x - y) < 0;
}

// Symmetric matrix over Q(sqrt(3)); stored densely, kept symmetric by
// construction (set() writes both triangles).
class SymMatrix {
  public:
    explicit SymMatrix(int dim) : dim_(dim), e_(dim * dim) {}

    int dim() const { return dim_; }
    const QS3& at(int i, int j) const { return e_[i * dim_ + j]; }
    void set(int i, int j, const QS3& v) {
        e_[i * dim_ + j] = v;
        e_[j * dim_ + i] = v;
    }

  private:
    int dim_;
    std::vector<QS3> e_;
};

// Inertia (p, n, z) of a symmetric matrix, p + n + z = dim.
struct Signature {
    int positive = 0;
    int negative = 0;
    int zero = 0;

    bool operator==(const Signature& o) const {
        return positive == o.positive && negative == o.negative &&
               zero == o.zero;
    }
};

// Exact inertia via symmetric congruence elimination.  A zero diagonal pivot
// with a nonzero row is resolved by the symmetric two-step (add the partner
// row/column to create a pivot), which contributes one positive and one
// negative index per hyperbolic pair.
Signature signature(const SymMatrix& m);

}  // namespace coxforge
