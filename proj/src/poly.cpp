#include "cyccover/poly.hpp"

#include <sstream>

namespace cyccover {

namespace {
void check_same(const FieldPtr& a, const FieldPtr& b) {
    if (!a->same(*b)) throw FieldMismatch("operands from different fields");
}

void normalize(std::vector<int>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}
}  // namespace

Poly make_poly(FieldPtr field, std::vector<int> coeffs) {
    normalize(coeffs);
    return {std::move(field), std::move(coeffs)};
}

Poly poly_zero(FieldPtr field) { return {std::move(field), {}}; }

Poly poly_one(FieldPtr field) { return {std::move(field), {1}}; }

Poly poly_monomial(FieldPtr field, int e, int c) {
    if (c == 0) return poly_zero(std::move(field));
    std::vector<int> v(e + 1, 0);
    v[e] = c;
    return {std::move(field), std::move(v)};
}

Poly poly_add(const Poly& a, const Poly& b) {
    check_same(a.field, b.field);
    std::vector<int> c(std::max(a.coeffs.size(), b.coeffs.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) {
        int x = i < a.coeffs.size() ? a.coeffs[i] : 0;
        int y = i < b.coeffs.size() ? b.coeffs[i] : 0;
        c[i] = a.field->add(x, y);
    }
    normalize(c);
    return {a.field, std::move(c)};
}

Poly poly_sub(const Poly& a, const Poly& b) {
    check_same(a.field, b.field);
    std::vector<int> c(std::max(a.coeffs.size(), b.coeffs.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) {
        int x = i < a.coeffs.size() ? a.coeffs[i] : 0;
        int y = i < b.coeffs.size() ? b.coeffs[i] : 0;
        c[i] = a.field->sub(x, y);
    }
    normalize(c);
    return {a.field, std::move(c)};
}

Poly poly_mul(const Poly& a, const Poly& b) {
    check_same(a.field, b.field);
    if (a.is_zero() || b.is_zero()) return poly_zero(a.field);
    std::vector<int> c(a.coeffs.size() + b.coeffs.size() - 1, 0);
    const Field& F = *a.field;
    for (size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs.size(); ++j)
            c[i + j] = F.add(c[i + j], F.mul(a.coeffs[i], b.coeffs[j]));
    }
    normalize(c);
    return {a.field, std::move(c)};
}

std::pair<Poly, Poly> poly_divrem(const Poly& a, const Poly& b) {
    check_same(a.field, b.field);
    if (b.is_zero()) throw DivisorZero("division by zero polynomial");
    const Field& F = *a.field;
    std::vector<int> rem = a.coeffs;
    int db = b.deg();
    int lead_inv = F.inv(b.coeffs[db]);
    std::vector<int> quot(a.deg() >= db ? a.deg() - db + 1 : 0, 0);
    for (int d = int(rem.size()) - 1; d >= db; --d) {
        if (rem[d] == 0) continue;
        int f = F.mul(rem[d], lead_inv);
        quot[d - db] = f;
        for (int j = 0; j <= db; ++j)
            rem[d - db + j] = F.sub(rem[d - db + j], F.mul(f, b.coeffs[j]));
    }
    normalize(rem);
    normalize(quot);
    return {Poly{a.field, std::move(quot)}, Poly{a.field, std::move(rem)}};
}

FieldElem poly_eval(const Poly& a, const FieldElem& x) {
    const FieldPtr& xf = x.field;
    bool same = a.field->same(*xf);
    if (!same) {
        // Coefficients must embed via the prime subfield.
        if (a.field->p() != xf->p())
            throw FieldMismatch("evaluation point in unrelated field");
        for (int c : a.coeffs)
            if (c >= a.field->p())
                throw FieldMismatch("coefficients outside GF(p) require matching field");
    }
    int acc = 0;
    for (size_t i = a.coeffs.size(); i-- > 0;)
        acc = xf->add(xf->mul(acc, x.code), a.coeffs[i]);
    return {xf, acc};
}

Poly poly_egcd(const Poly& a, const Poly& b, Poly* s, Poly* t) {
    // Iterative extended Euclid; result made monic.
    Poly r0 = a, r1 = b;
    Poly s0 = poly_one(a.field), s1 = poly_zero(a.field);
    Poly t0 = poly_zero(a.field), t1 = poly_one(a.field);
    while (!r1.is_zero()) {
        auto [q, r] = poly_divrem(r0, r1);
        Poly s2 = poly_sub(s0, poly_mul(q, s1));
        Poly t2 = poly_sub(t0, poly_mul(q, t1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    if (!r0.is_zero() && r0.coeffs.back() != 1) {
        int c = a.field->inv(r0.coeffs.back());
        Poly scale = make_poly(a.field, {c});
        r0 = poly_mul(r0, scale);
        s0 = poly_mul(s0, scale);
        t0 = poly_mul(t0, scale);
    }
    if (s) *s = s0;
    if (t) *t = t0;
    return r0;
}

namespace {
std::string codes_str(const FieldPtr& f, const std::vector<int>& codes) {
    std::ostringstream os;
    bool commas = f->q() > 10;
    for (size_t i = 0; i < codes.size(); ++i) {
        if (commas && i) os << ',';
        os << codes[i];
    }
    return os.str();
}
}  // namespace

std::string poly_str(const Poly& a) {
    if (a.is_zero()) return "0";
    return codes_str(a.field, a.coeffs);
}

RingElement make_ring(FieldPtr field, std::vector<int> coeffs) {
    int n = int(coeffs.size());
    return {std::move(field), n, std::move(coeffs)};
}

RingElement ring_zero(FieldPtr field, int n) {
    return {std::move(field), n, std::vector<int>(n, 0)};
}

RingElement shift(const RingElement& v, long r) {
    r %= v.n;
    if (r < 0) r += v.n;
    std::vector<int> c(v.n);
    for (int i = 0; i < v.n; ++i) c[(i + r) % v.n] = v.coeffs[i];
    return {v.field, v.n, std::move(c)};
}

RingElement ring_add(const RingElement& a, const RingElement& b) {
    check_same(a.field, b.field);
    if (a.n != b.n) throw DimensionMismatch("ring lengths differ");
    std::vector<int> c(a.n);
    for (int i = 0; i < a.n; ++i) c[i] = a.field->add(a.coeffs[i], b.coeffs[i]);
    return {a.field, a.n, std::move(c)};
}

RingElement ring_mul(const RingElement& a, const RingElement& b) {
    check_same(a.field, b.field);
    if (a.n != b.n) throw DimensionMismatch("ring lengths differ");
    const Field& F = *a.field;
    std::vector<int> c(a.n, 0);
    for (int i = 0; i < a.n; ++i) {
        if (a.coeffs[i] == 0) continue;
        for (int j = 0; j < b.n; ++j) {
            int k = (i + j) % a.n;
            c[k] = F.add(c[k], F.mul(a.coeffs[i], b.coeffs[j]));
        }
    }
    return {a.field, a.n, std::move(c)};
}

Poly ring_lift(const RingElement& v) { return make_poly(v.field, v.coeffs); }

RingElement ring_reduce(FieldPtr field, int n, const Poly& p) {
    std::vector<int> c(n, 0);
    for (size_t i = 0; i < p.coeffs.size(); ++i)
        c[i % n] = field->add(c[i % n], p.coeffs[i]);
    return {std::move(field), n, std::move(c)};
}

Poly residue(const RingElement& v, const Poly& f) {
    if (f.is_zero()) throw DivisorZero("residue modulo zero polynomial");
    return poly_divrem(ring_lift(v), f).second;
}

std::string ring_str(const RingElement& v) { return codes_str(v.field, v.coeffs); }

RingElement ring_parse(FieldPtr field, int n, const std::string& s) {
    std::vector<int> c;
    if (field->q() > 10) {
        std::istringstream is(s);
        std::string tok;
        while (std::getline(is, tok, ',')) c.push_back(std::stoi(tok));
    } else {
        for (char ch : s) {
            if (ch < '0' || ch > '9') throw ParseError("bad vector digit: " + s);
            c.push_back(ch - '0');
        }
    }
    if (int(c.size()) != n) throw ParseError("vector length mismatch: " + s);
    for (int x : c)
        if (x < 0 || x >= field->q()) throw ParseError("code out of range: " + s);
    return {std::move(field), n, std::move(c)};
}

long long ring_code(const RingElement& v) {
    long long code = 0;
    for (int i = 0; i < v.n; ++i) code = code * v.field->q() + v.coeffs[i];
    return code;
}

RingElement ring_from_code(FieldPtr field, int n, long long code) {
    std::vector<int> c(n);
    long q = field->q();
    for (int i = n; i-- > 0;) {
        c[i] = int(code % q);
        code /= q;
    }
    return {std::move(field), n, std::move(c)};
}

}  // namespace cyccover
