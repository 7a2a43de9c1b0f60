#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cyccover/gf.hpp"

namespace cyccover {

/// Polynomial over a field: ascending coefficient codes, no trailing zeros.
/// The zero polynomial has an empty coefficient vector.
struct Poly {
    FieldPtr field;
    std::vector<int> coeffs;

    int deg() const { return int(coeffs.size()) - 1; }
    bool is_zero() const { return coeffs.empty(); }
    bool operator==(const Poly& o) const {
        return field->same(*o.field) && coeffs == o.coeffs;
    }
};

Poly make_poly(FieldPtr field, std::vector<int> coeffs);
Poly poly_zero(FieldPtr field);
Poly poly_one(FieldPtr field);
/// X^e with coefficient c.
Poly poly_monomial(FieldPtr field, int e, int c = 1);

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
/// (quotient, remainder) with deg r < deg b. Throws DivisorZero.
std::pair<Poly, Poly> poly_divrem(const Poly& a, const Poly& b);
/// Horner evaluation. x may live in an extension field if all coefficients
/// of a lie in the prime subfield.
FieldElem poly_eval(const Poly& a, const FieldElem& x);
/// g = gcd(a,b) monic, with g = s*a + t*b.
Poly poly_egcd(const Poly& a, const Poly& b, Poly* s, Poly* t);

/// Coefficient code string, ascending; digits concatenated for q <= 10,
/// comma-separated otherwise. Zero polynomial prints "0".
std::string poly_str(const Poly& a);

/// An element of R_n = F_q[X]/(X^n - 1), equivalently a vector of F_q^n:
/// coordinate v(i) is the coefficient of X^(i-1), stored at coeffs[i-1].
struct RingElement {
    FieldPtr field;
    int n = 0;
    std::vector<int> coeffs;

    bool operator==(const RingElement& o) const {
        return n == o.n && field->same(*o.field) && coeffs == o.coeffs;
    }
};

RingElement make_ring(FieldPtr field, std::vector<int> coeffs);
RingElement ring_zero(FieldPtr field, int n);
/// X^r * v mod (X^n - 1): the cyclic shift sigma^r. r taken mod n.
RingElement shift(const RingElement& v, long r);
/// Product in R_n.
RingElement ring_mul(const RingElement& a, const RingElement& b);
RingElement ring_add(const RingElement& a, const RingElement& b);
/// Degree-<n lift of v as a Poly.
Poly ring_lift(const RingElement& v);
/// Reduction of p modulo X^n - 1 into R_n.
RingElement ring_reduce(FieldPtr field, int n, const Poly& p);
/// Remainder of the lift of v modulo f. Throws DivisorZero.
Poly residue(const RingElement& v, const Poly& f);

/// Vectors print as n digit codes (comma-separated for q > 10).
std::string ring_str(const RingElement& v);
RingElement ring_parse(FieldPtr field, int n, const std::string& s);

/// Big-endian vector code: coordinate 1 is the most significant digit, so
/// numeric order on codes is lexicographic order on coordinate strings.
long long ring_code(const RingElement& v);
RingElement ring_from_code(FieldPtr field, int n, long long code);

}  // namespace cyccover
