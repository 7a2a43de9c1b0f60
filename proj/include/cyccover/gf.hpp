#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cyccover/errors.hpp"

namespace cyccover {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// The finite field GF(p^m). Elements are integer codes in [0, q-1] whose
/// base-p digits are the coordinates in the polynomial basis (constant term
/// in the least significant digit). Construction is deterministic: the
/// modulus is the lexicographically least monic irreducible of degree m over
/// GF(p), coefficient tuple ordered constant-term first.
///
/// Immutable after construction; safe to share across threads.
class Field {
public:
    long p() const { return p_; }
    long m() const { return m_; }
    long q() const { return q_; }

    /// Degree-m modulus as codes over GF(p), constant term first, length m+1.
    /// Empty when m == 1 (no modulus needed).
    const std::vector<int>& modulus() const { return modulus_; }

    int add(int a, int b) const;
    int sub(int a, int b) const;
    int neg(int a) const;
    int mul(int a, int b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[(log_[a] + log_[b]) % (q_ - 1)];
    }
    int inv(int a) const {
        if (a == 0) throw DivisionByZero("inverse of zero");
        return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    }
    int pow(int a, long long e) const;

    /// Multiplicative order of a nonzero element; divides q-1.
    long order(int a) const;

    /// Least integer code that generates the multiplicative group.
    int generator() const { return gen_; }

    bool same(const Field& other) const { return p_ == other.p_ && m_ == other.m_; }

    /// Serialized as "p^m" ("p" when m == 1).
    std::string name() const;

    friend FieldPtr make_field(long p, long m);

private:
    Field() = default;

    long p_ = 0, m_ = 0, q_ = 0;
    std::vector<int> modulus_;
    std::vector<int> exp_;  // exp_[i] = generator^i, i in [0, q-1)
    std::vector<int> log_;  // log_[exp_[i]] = i; log_[0] unused
    int gen_ = 0;
};

/// Builds the deterministic GF(p^m). Throws NonPrime / DegreeZero.
FieldPtr make_field(long p, long m);

/// GF(q) for a prime power q = p^m. Throws NonPrime when q is not one.
FieldPtr field_from_order(long q);

/// A field element together with its owning field, for API boundaries where
/// cross-field misuse must be detected. Internal code paths work on raw codes.
struct FieldElem {
    FieldPtr field;
    int code = 0;
};

FieldElem fe_add(const FieldElem& a, const FieldElem& b);
FieldElem fe_mul(const FieldElem& a, const FieldElem& b);
FieldElem fe_inv(const FieldElem& a);
FieldElem fe_pow(const FieldElem& a, long long e);

/// Least t >= 1 with a^t = 1. Throws ZeroElement.
long element_order(const FieldElem& a);

/// The canonical generator of F*, as an element.
FieldElem find_generator(const FieldPtr& f);

/// Decodes elements of the subfield GF(sub.q()) inside big = GF(big.q()),
/// where sub.q()^t = big.q() for some t. The embedding sends the class of X
/// in sub to the least-code root of sub's modulus in big. decode() throws
/// CoefficientEscape if the element does not lie in the subfield.
class SubfieldMap {
public:
    SubfieldMap(FieldPtr big, FieldPtr sub);
    int decode(int code_in_big) const;
    int encode(int code_in_sub) const;

private:
    FieldPtr big_, sub_;
    std::vector<int> basis_;   // images of 1, X, X^2, ... in big
    std::vector<int> decode_tbl_;  // -1 where not in subfield
};

}  // namespace cyccover
