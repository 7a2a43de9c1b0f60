#include "cyccover/gf.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace cyccover {

namespace {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<int> code_digits(long code, long p, long m) {
    std::vector<int> d(m, 0);
    for (long i = 0; i < m; ++i) {
        d[i] = int(code % p);
        code /= p;
    }
    return d;
}

long digits_code(const std::vector<int>& d, long p) {
    long code = 0;
    for (size_t i = d.size(); i-- > 0;) code = code * p + d[i];
    return code;
}

// Dense polynomials over GF(p) as ascending coefficient vectors.
int pdeg(const std::vector<int>& a) {
    int d = int(a.size()) - 1;
    while (d >= 0 && a[d] == 0) --d;
    return d;
}

std::vector<int> pmul(const std::vector<int>& a, const std::vector<int>& b, long p) {
    int da = pdeg(a), db = pdeg(b);
    if (da < 0 || db < 0) return {};
    std::vector<int> c(da + db + 1, 0);
    for (int i = 0; i <= da; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j <= db; ++j) c[i + j] = int((c[i + j] + long(a[i]) * b[j]) % p);
    }
    return c;
}

// Remainder of a modulo monic b.
std::vector<int> pmod(std::vector<int> a, const std::vector<int>& b, long p) {
    int db = pdeg(b);
    for (int d = pdeg(a); d >= db; d = pdeg(a)) {
        int c = a[d];
        if (c != 0) {
            for (int j = 0; j <= db; ++j) {
                long v = a[d - db + j] - long(c) * b[j] % p;
                a[d - db + j] = int(((v % p) + p) % p);
            }
        }
        a.resize(d);
    }
    return a;
}

bool poly_is_zero(const std::vector<int>& a) { return pdeg(a) < 0; }

// Exhaustive irreducibility test for a monic polynomial: trial division by
// every monic polynomial of degree 1..deg/2.
bool irreducible(const std::vector<int>& f, long p) {
    int d = pdeg(f);
    if (d < 1) return false;
    for (int e = 1; 2 * e <= d; ++e) {
        long count = 1;
        for (int i = 0; i < e; ++i) count *= p;
        for (long code = 0; code < count; ++code) {
            std::vector<int> g = code_digits(code, p, e);
            g.push_back(1);  // monic
            if (poly_is_zero(pmod(f, g, p))) return false;
        }
    }
    return true;
}

// Lexicographically least monic irreducible of degree m over GF(p),
// coefficient tuple ordered constant-term first.
std::vector<int> least_irreducible(long p, long m) {
    long count = 1;
    for (long i = 0; i < m; ++i) count *= p;
    for (long idx = 0; idx < count; ++idx) {
        // idx enumerates (c_0, ..., c_{m-1}) in lex order, c_0 varying slowest.
        std::vector<int> f(m, 0);
        long t = idx;
        for (long i = m; i-- > 0;) {
            f[i] = int(t % p);
            t /= p;
        }
        f.push_back(1);  // monic, coefficients ascending
        if (irreducible(f, p)) return f;
    }
    throw Error("no irreducible polynomial found");  // unreachable
}

std::vector<long> prime_factors(long n) {
    std::vector<long> fs;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

}  // namespace

int Field::add(int a, int b) const {
    if (m_ == 1) return int((a + b) % p_);
    long code = 0, pw = 1;
    for (long i = 0; i < m_; ++i) {
        code += pw * ((a + b) % p_);
        a /= int(p_);
        b /= int(p_);
        pw *= p_;
    }
    return int(code);
}

int Field::neg(int a) const {
    if (m_ == 1) return int((p_ - a) % p_);
    long code = 0, pw = 1;
    for (long i = 0; i < m_; ++i) {
        code += pw * ((p_ - a % p_) % p_);
        a /= int(p_);
        pw *= p_;
    }
    return int(code);
}

int Field::sub(int a, int b) const { return add(a, neg(b)); }

int Field::pow(int a, long long e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    long long r = (long long)log_[a] % (q_ - 1) * (e % (q_ - 1)) % (q_ - 1);
    return exp_[(r + (q_ - 1)) % (q_ - 1)];
}

long Field::order(int a) const {
    if (a == 0) throw ZeroElement("order of zero element");
    long t = q_ - 1;
    for (long f : prime_factors(q_ - 1)) {
        while (t % f == 0 && pow(a, t / f) == 1) t /= f;
    }
    return t;
}

std::string Field::name() const {
    if (m_ == 1) return std::to_string(p_);
    return std::to_string(p_) + "^" + std::to_string(m_);
}

FieldPtr make_field(long p, long m) {
    if (m < 1) throw DegreeZero("extension degree must be >= 1");
    if (!is_prime(p)) throw NonPrime("p = " + std::to_string(p) + " is not prime");

    // Cache: construction is deterministic, so sharing is sound.
    static std::mutex mu;
    static std::map<std::pair<long, long>, FieldPtr> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({p, m});
        if (it != cache.end()) return it->second;
    }

    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = p;
    f->m_ = m;
    f->q_ = 1;
    for (long i = 0; i < m; ++i) f->q_ *= p;
    if (m > 1) f->modulus_ = least_irreducible(p, m);

    // Bootstrap multiplication on codes, then build generator-based tables.
    auto raw_mul = [&](int a, int b) -> int {
        if (f->m_ == 1) return int(long(a) * b % p);
        std::vector<int> pa = code_digits(a, p, m), pb = code_digits(b, p, m);
        std::vector<int> c = pmod(pmul(pa, pb, p), f->modulus_, p);
        c.resize(m, 0);
        return int(digits_code(c, p));
    };
    auto raw_order = [&](int a) -> long {
        long t = 1;
        int x = a;
        while (x != 1) {
            x = raw_mul(x, a);
            ++t;
        }
        return t;
    };
    int gen = 1;
    if (f->q_ > 2) {
        for (int g = 2; g < f->q_; ++g) {
            if (raw_order(g) == f->q_ - 1) {
                gen = g;
                break;
            }
        }
    }
    f->gen_ = gen;
    f->exp_.assign(f->q_ - 1, 1);
    f->log_.assign(f->q_, 0);
    int x = 1;
    for (long i = 0; i < f->q_ - 1; ++i) {
        f->exp_[i] = x;
        f->log_[x] = int(i);
        x = raw_mul(x, gen);
    }

    FieldPtr result = f;
    std::lock_guard<std::mutex> lock(mu);
    cache.insert({{p, m}, result});
    return result;
}

FieldPtr field_from_order(long q) {
    if (q < 2) throw NonPrime("q = " + std::to_string(q) + " is not a prime power");
    long p = q;
    for (long d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    long m = 0, t = q;
    while (t > 1 && t % p == 0) {
        t /= p;
        ++m;
    }
    if (t != 1) throw NonPrime("q = " + std::to_string(q) + " is not a prime power");
    return make_field(p, m);
}

namespace {
void check_same(const FieldElem& a, const FieldElem& b) {
    if (!a.field || !b.field || !a.field->same(*b.field))
        throw FieldMismatch("elements from different fields");
}
}  // namespace

FieldElem fe_add(const FieldElem& a, const FieldElem& b) {
    check_same(a, b);
    return {a.field, a.field->add(a.code, b.code)};
}

FieldElem fe_mul(const FieldElem& a, const FieldElem& b) {
    check_same(a, b);
    return {a.field, a.field->mul(a.code, b.code)};
}

FieldElem fe_inv(const FieldElem& a) { return {a.field, a.field->inv(a.code)}; }

FieldElem fe_pow(const FieldElem& a, long long e) { return {a.field, a.field->pow(a.code, e)}; }

long element_order(const FieldElem& a) { return a.field->order(a.code); }

FieldElem find_generator(const FieldPtr& f) { return {f, f->generator()}; }

SubfieldMap::SubfieldMap(FieldPtr big, FieldPtr sub) : big_(std::move(big)), sub_(std::move(sub)) {
    if (big_->p() != sub_->p() || big_->m() % sub_->m() != 0)
        throw FieldMismatch("not a subfield: " + sub_->name() + " in " + big_->name());
    long p = big_->p(), sm = sub_->m();

    // Image of the class of X: least-code root of sub's modulus in big.
    int beta = 0;
    if (sm == 1) {
        beta = 1;  // unused beyond basis_[0]
    } else {
        bool found = false;
        for (int x = 0; x < big_->q() && !found; ++x) {
            // Horner over big; modulus coefficients are prime-subfield codes.
            int acc = 0;
            for (size_t i = sub_->modulus().size(); i-- > 0;)
                acc = big_->add(big_->mul(acc, x), sub_->modulus()[i]);
            if (acc == 0) {
                beta = x;
                found = true;
            }
        }
        if (!found) throw Error("subfield modulus has no root in " + big_->name());
    }

    basis_.assign(sm, 1);
    for (long j = 1; j < sm; ++j) basis_[j] = big_->mul(basis_[j - 1], beta);

    decode_tbl_.assign(big_->q(), -1);
    for (int c = 0; c < sub_->q(); ++c) {
        std::vector<int> d = code_digits(c, p, sm);
        int img = 0;
        for (long j = 0; j < sm; ++j) img = big_->add(img, big_->mul(d[j], basis_[j]));
        decode_tbl_[img] = c;
    }
}

int SubfieldMap::decode(int code_in_big) const {
    int c = decode_tbl_[code_in_big];
    if (c < 0)
        throw CoefficientEscape("element of " + big_->name() + " not in subfield " + sub_->name());
    return c;
}

int SubfieldMap::encode(int code_in_sub) const {
    std::vector<int> d = code_digits(code_in_sub, sub_->p(), sub_->m());
    int img = 0;
    for (long j = 0; j < sub_->m(); ++j) img = big_->add(img, big_->mul(d[j], basis_[j]));
    return img;
}

}  // namespace cyccover
