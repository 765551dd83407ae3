#include "pglab/field.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pglab {
namespace {

// Polynomials over GF(p): coefficient vectors, constant term first,
// no trailing zero coefficients (the zero polynomial is the empty vector).

using Poly = std::vector<int>;

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int pdeg(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly pmul(const Poly& a, const Poly& b, int p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    trim(c);
    return c;
}

int sinv(int a, int p) {
    // scalar inverse mod a prime via Fermat
    long long r = 1, base = a % p;
    for (int e = p - 2; e; e >>= 1) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
    }
    return static_cast<int>(r);
}

Poly pmod(Poly a, const Poly& m, int p) {
    trim(a);
    // gcd remainders are not monic, so divide the leading coefficient out
    const int mi = sinv(m.back(), p);
    while (pdeg(a) >= pdeg(m)) {
        int shift = pdeg(a) - pdeg(m);
        int lead = a.back() * mi % p;
        for (std::size_t i = 0; i < m.size(); ++i) {
            int& t = a[i + shift];
            t = ((t - lead * m[i]) % p + p) % p;
        }
        trim(a);
    }
    return a;
}

Poly psub(Poly a, const Poly& b, int p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = ((a[i] - b[i]) % p + p) % p;
    trim(a);
    return a;
}

Poly pgcd(Poly a, Poly b, int p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = pmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Poly x_pow_mod(unsigned long long e, const Poly& m, int p) {
    Poly result{1};
    Poly base{0, 1};
    base = pmod(base, m, p);
    while (e) {
        if (e & 1ULL) result = pmod(pmul(result, base, p), m, p);
        base = pmod(pmul(base, base, p), m, p);
        e >>= 1ULL;
    }
    return result;
}

bool poly_irreducible(const Poly& f, int p) {
    int d = pdeg(f);
    if (d < 1) return false;
    if (d == 1) return true;
    if (d <= 3) {
        // a reducible quadratic or cubic has a linear factor, so a root
        for (int x = 0; x < p; ++x) {
            long long v = 0;
            for (int i = d; i >= 0; --i) v = (v * x + f[i]) % p;
            if (v == 0) return false;
        }
        return true;
    }
    // f irreducible iff gcd(f, X^(p^i) - X) = 1 for all i <= d/2
    for (int i = 1; i <= d / 2; ++i) {
        unsigned long long e = 1;
        for (int j = 0; j < i; ++j) e *= static_cast<unsigned long long>(p);
        Poly g = psub(x_pow_mod(e, f, p), Poly{0, 1}, p);
        Poly gg = pgcd(f, g, p);
        if (pdeg(gg) != 0) return false;
    }
    return true;
}

Poly default_modulus(int p, int h) {
    // Monic degree-h candidates ordered by the coefficient sequence compared
    // most significant first; the leading coefficient is always 1.
    long long count = 1;
    for (int i = 0; i < h; ++i) count *= p;
    for (long long u = 0; u < count; ++u) {
        Poly f(h + 1, 0);
        f[h] = 1;
        long long t = u;
        for (int j = 0; j < h; ++j) {
            f[j] = static_cast<int>(t % p);
            t /= p;
        }
        if (poly_irreducible(f, p)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");
}

} // namespace

bool Field::is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field Field::make(int p, int h, const std::vector<int>& modulus) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    if (h < 1) throw std::invalid_argument("extension degree must be at least 1");
    long long q = 1;
    for (int i = 0; i < h; ++i) {
        q *= p;
        if (q > (1LL << 20)) throw std::invalid_argument("field too large");
    }
    Field f;
    f.p_ = p;
    f.h_ = h;
    f.q_ = static_cast<int>(q);
    if (h > 1) {
        if (modulus.empty()) {
            f.modulus_ = default_modulus(p, h);
        } else {
            Poly m = modulus;
            for (int& c : m) {
                if (c < 0 || c >= p) throw std::invalid_argument("modulus coefficient out of range");
            }
            trim(m);
            if (pdeg(m) != h) throw std::invalid_argument("modulus degree must equal h");
            if (m.back() != 1) throw std::invalid_argument("modulus must be monic");
            if (!poly_irreducible(m, p)) throw std::invalid_argument("modulus is reducible");
            f.modulus_ = std::move(m);
        }
    }
    if (f.q_ <= 256) f.build_tables();
    return f;
}

std::string Field::modulus_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < modulus_.size(); ++i) {
        if (i) os << ',';
        os << modulus_[i];
    }
    return os.str();
}

std::vector<int> Field::digits(Fel a) const {
    std::vector<int> d(h_);
    for (int i = 0; i < h_; ++i) {
        d[i] = static_cast<int>(a % p_);
        a /= p_;
    }
    return d;
}

Fel Field::from_digits(const std::vector<int>& d) const {
    if (static_cast<int>(d.size()) > h_) throw std::invalid_argument("too many digits");
    Fel a = 0;
    for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) {
        if (d[i] < 0 || d[i] >= p_) throw std::invalid_argument("digit out of range");
        a = a * p_ + static_cast<Fel>(d[i]);
    }
    return a;
}

Fel Field::from_residue(long long r) const {
    r %= p_;
    if (r < 0) r += p_;
    return static_cast<Fel>(r);
}

int Field::as_residue(Fel a) const {
    if (!in_prime_subfield(a)) throw std::domain_error("element outside the prime subfield");
    return static_cast<int>(a);
}

Fel Field::add_raw(Fel a, Fel b) const {
    if (h_ == 1) return (a + b) % q_;
    Fel out = 0;
    Fel mult = 1;
    for (int i = 0; i < h_; ++i) {
        Fel s = (a % p_ + b % p_) % p_;
        out += s * mult;
        mult *= p_;
        a /= p_;
        b /= p_;
    }
    return out;
}

Fel Field::mul_raw(Fel a, Fel b) const {
    if (h_ == 1) return static_cast<Fel>((static_cast<unsigned long long>(a) * b) % q_);
    // schoolbook product of digit vectors, then reduction by the modulus
    std::vector<int> da = digits(a), db = digits(b);
    std::vector<long long> c(2 * h_ - 1, 0);
    for (int i = 0; i < h_; ++i)
        for (int j = 0; j < h_; ++j) c[i + j] += static_cast<long long>(da[i]) * db[j];
    for (int i = 2 * h_ - 2; i >= h_; --i) {
        long long t = c[i] % p_;
        if (t) {
            // x^h = -(m_{h-1} x^{h-1} + ... + m_0)
            for (int j = 0; j < h_; ++j) c[i - h_ + j] += t * (p_ - modulus_[j]);
        }
        c[i] = 0;
    }
    Fel out = 0;
    Fel mult = 1;
    for (int i = 0; i < h_; ++i) {
        out += static_cast<Fel>(c[i] % p_) * mult;
        mult *= p_;
    }
    return out;
}

void Field::build_tables() {
    const int q = q_;
    add_tab_.resize(static_cast<std::size_t>(q) * q);
    mul_tab_.resize(static_cast<std::size_t>(q) * q);
    inv_tab_.assign(q, 0);
    for (int a = 0; a < q; ++a) {
        for (int b = 0; b < q; ++b) {
            Fel s = add_raw(a, b);
            Fel m = mul_raw(a, b);
            add_tab_[static_cast<std::size_t>(a) * q + b] = static_cast<std::uint16_t>(s);
            mul_tab_[static_cast<std::size_t>(a) * q + b] = static_cast<std::uint16_t>(m);
            if (m == 1) inv_tab_[a] = static_cast<std::uint16_t>(b);
        }
    }
    tables_ = true;
}

Fel Field::add(Fel a, Fel b) const {
    if (tables_) return add_tab_[static_cast<std::size_t>(a) * q_ + b];
    return add_raw(a, b);
}

Fel Field::neg(Fel a) const {
    if (h_ == 1) return a ? static_cast<Fel>(q_ - a) : 0;
    Fel out = 0;
    Fel mult = 1;
    for (int i = 0; i < h_; ++i) {
        Fel d = a % p_;
        out += (d ? static_cast<Fel>(p_ - d) : 0) * mult;
        mult *= p_;
        a /= p_;
    }
    return out;
}

Fel Field::sub(Fel a, Fel b) const { return add(a, neg(b)); }

Fel Field::mul(Fel a, Fel b) const {
    if (tables_) return mul_tab_[static_cast<std::size_t>(a) * q_ + b];
    return mul_raw(a, b);
}

Fel Field::inv(Fel a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    if (tables_) return inv_tab_[a];
    return pow(a, q_ - 2);
}

Fel Field::pow(Fel a, long long n) const {
    if (n < 0) {
        if (a == 0) throw std::domain_error("negative power of zero");
        a = inv(a);
        n = -n;
    }
    Fel result = 1;
    Fel base = a;
    while (n) {
        if (n & 1LL) result = mul(result, base);
        base = mul(base, base);
        n >>= 1LL;
    }
    return result;
}

} // namespace pglab
