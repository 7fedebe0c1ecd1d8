#include "topgen/gf/field.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace topgen::gf {

namespace {

bool is_prime(std::uint64_t p) {
    if (p < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

// --- minimal prime-field polynomial helpers for the modulus search ---
// Polynomials over GF(p) as coefficient vectors, low degree first,
// trailing zeros trimmed.

using PPoly = std::vector<std::uint64_t>;

void ptrim(PPoly& f) {
    while (!f.empty() && f.back() == 0)
        f.pop_back();
}

PPoly pmulmod(const PPoly& a, const PPoly& b, const PPoly& mod, std::uint64_t p) {
    if (a.empty() || b.empty())
        return {};
    PPoly prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i])
            continue;
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
    // reduce by monic mod
    size_t m = mod.size() - 1;
    for (size_t i = prod.size(); i-- > m;) {
        std::uint64_t c = prod[i];
        if (!c)
            continue;
        prod[i] = 0;
        for (size_t j = 0; j < m; ++j)
            prod[i - m + j] = (prod[i - m + j] + c * (p - mod[j] % p)) % p;
    }
    prod.resize(m);
    ptrim(prod);
    return prod;
}

PPoly ppowmod(PPoly base, std::uint64_t e, const PPoly& mod, std::uint64_t p) {
    PPoly r{1};
    while (e) {
        if (e & 1)
            r = pmulmod(r, base, mod, p);
        base = pmulmod(base, base, mod, p);
        e >>= 1;
    }
    return r;
}

PPoly pgcd(PPoly a, PPoly b, std::uint64_t p) {
    auto inv_mod_p = [p](std::uint64_t x) {
        // p prime, x != 0
        std::uint64_t r = 1, e = p - 2, base = x % p;
        while (e) {
            if (e & 1)
                r = r * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return r;
    };
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        // a mod b
        std::uint64_t lead_inv = inv_mod_p(b.back());
        while (a.size() >= b.size() && !a.empty()) {
            std::uint64_t c = a.back() * lead_inv % p;
            size_t shift = a.size() - b.size();
            for (size_t j = 0; j < b.size(); ++j)
                a[shift + j] = (a[shift + j] + c * (p - b[j] % p)) % p;
            ptrim(a);
            if (a.size() < b.size())
                break;
        }
        std::swap(a, b);
    }
    return a;
}

// Deterministic irreducibility over GF(p): a reducible monic f of degree
// k has an irreducible factor of degree d <= k/2, and that factor divides
// gcd(x^(p^d) - x, f).  Walking d upward rejects reducible candidates at
// their smallest factor degree; surviving to k/2 certifies irreducibility.
bool irreducible_over_prime_field(const PPoly& f, std::uint64_t p) {
    const size_t k = f.size() - 1;
    if (k == 1)
        return true;
    PPoly h{0, 1};
    for (size_t d = 1; d <= k / 2; ++d) {
        h = ppowmod(h, p, f, p);
        PPoly diff = h;
        if (diff.size() < 2)
            diff.resize(2, 0);
        diff[1] = (diff[1] + p - 1) % p;
        ptrim(diff);
        PPoly g = pgcd(diff, f, p);
        if (g.size() != 1)
            return false;
    }
    return true;
}

// Lexicographically least monic irreducible of degree k over GF(p),
// coefficients compared low degree first.
std::vector<std::uint32_t> least_irreducible(std::uint64_t p, unsigned k) {
    if (k == 1)
        return {0, 1}; // x
    std::vector<std::uint32_t> c(k, 0);
    for (;;) {
        PPoly f(k + 1, 0);
        for (unsigned i = 0; i < k; ++i)
            f[i] = c[i];
        f[k] = 1;
        if (c[0] != 0 && irreducible_over_prime_field(f, p)) {
            std::vector<std::uint32_t> out(k + 1);
            for (unsigned i = 0; i < k; ++i)
                out[i] = c[i];
            out[k] = 1;
            return out;
        }
        // next candidate in lex order (c0 most significant)
        int i = static_cast<int>(k) - 1;
        while (i >= 0) {
            if (++c[static_cast<unsigned>(i)] < p)
                break;
            c[static_cast<unsigned>(i)] = 0;
            --i;
        }
        if (i < 0)
            throw std::logic_error("no irreducible polynomial found"); // unreachable
    }
}

} // namespace

FieldPtr Field::make(std::uint64_t p, unsigned k, bool internal) {
    if (!is_prime(p))
        throw std::invalid_argument("field characteristic must be prime, got " +
                                    std::to_string(p));
    if (p >= (1u << 16))
        throw std::invalid_argument("field characteristic capped below 2^16");
    if (k < 1)
        throw std::invalid_argument("extension degree must be at least 1");
    if (!internal && k > 16)
        throw std::invalid_argument("extension degree capped at 16");
    // require p^k <= 2^64 (element fits one word)
    std::uint64_t q = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (q > (~0ull) / p)
            throw std::invalid_argument("field too large: p^k must fit in 64 bits");
        q *= p;
    }

    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = p;
    f->k_ = k;
    f->q_ = q;
    f->modulus_ = least_irreducible(p, k);
    unsigned w = 1;
    std::uint64_t top = q - 1;
    while (top > 0xffu) {
        top >>= 8;
        ++w;
    }
    f->width_ = w;
    if (q <= 256) {
        f->tabled_ = true;
        f->mul_table_.assign(q * q, 0);
        for (std::uint64_t a = 0; a < q; ++a)
            for (std::uint64_t b = a; b < q; ++b) {
                std::uint64_t m = f->mul_generic(a, b);
                f->mul_table_[a * q + b] = static_cast<std::uint16_t>(m);
                f->mul_table_[b * q + a] = static_cast<std::uint16_t>(m);
            }
        f->inv_table_.assign(q, 0);
        for (std::uint64_t a = 1; a < q; ++a) {
            if (f->inv_table_[a])
                continue;
            for (std::uint64_t b = 1; b < q; ++b)
                if (f->mul_table_[a * q + b] == 1) {
                    f->inv_table_[a] = static_cast<std::uint16_t>(b);
                    f->inv_table_[b] = static_cast<std::uint16_t>(a);
                    break;
                }
        }
    }
    return f;
}

FieldPtr Field::gf(std::uint64_t p, unsigned k) { return make(p, k, false); }
FieldPtr Field::gf_internal(std::uint64_t p, unsigned k) { return make(p, k, true); }

std::vector<std::uint32_t> Field::unpack(std::uint64_t a) const {
    std::vector<std::uint32_t> c(k_);
    for (unsigned i = 0; i < k_; ++i) {
        c[i] = static_cast<std::uint32_t>(a % p_);
        a /= p_;
    }
    return c;
}

std::uint64_t Field::pack(const std::vector<std::uint32_t>& coeffs) const {
    std::uint64_t a = 0;
    for (unsigned i = k_; i-- > 0;) {
        std::uint32_t c = i < coeffs.size() ? coeffs[i] : 0;
        a = a * p_ + c % p_;
    }
    return a;
}

std::uint64_t Field::add(std::uint64_t a, std::uint64_t b) const {
    if (k_ == 1)
        return (a + b) % p_;
    if (p_ == 2)
        return a ^ b;
    std::uint64_t out = 0, mult = 1;
    for (unsigned i = 0; i < k_; ++i) {
        std::uint64_t da = a % p_, db = b % p_;
        a /= p_;
        b /= p_;
        out += (da + db) % p_ * mult;
        mult *= p_;
    }
    return out;
}

std::uint64_t Field::neg(std::uint64_t a) const {
    if (k_ == 1)
        return (p_ - a % p_) % p_;
    if (p_ == 2)
        return a;
    std::uint64_t out = 0, mult = 1;
    for (unsigned i = 0; i < k_; ++i) {
        std::uint64_t da = a % p_;
        a /= p_;
        out += (p_ - da) % p_ * mult;
        mult *= p_;
    }
    return out;
}

std::uint64_t Field::sub(std::uint64_t a, std::uint64_t b) const {
    return add(a, neg(b));
}

std::uint64_t Field::mul_generic(std::uint64_t a, std::uint64_t b) const {
    if (k_ == 1)
        return a * b % p_;
    // schoolbook product of coefficient vectors, reduce by modulus
    std::uint32_t ca[64], cb[64];
    std::uint64_t prod[128] = {0};
    std::uint64_t x = a;
    for (unsigned i = 0; i < k_; ++i) {
        ca[i] = static_cast<std::uint32_t>(x % p_);
        x /= p_;
    }
    x = b;
    for (unsigned i = 0; i < k_; ++i) {
        cb[i] = static_cast<std::uint32_t>(x % p_);
        x /= p_;
    }
    for (unsigned i = 0; i < k_; ++i) {
        if (!ca[i])
            continue;
        for (unsigned j = 0; j < k_; ++j)
            prod[i + j] += static_cast<std::uint64_t>(ca[i]) * cb[j];
    }
    for (unsigned i = 0; i < 2 * k_ - 1; ++i)
        prod[i] %= p_;
    // reduction: x^k = -(m_0 + m_1 x + ... + m_{k-1} x^{k-1})
    for (unsigned i = 2 * k_ - 1; i-- > k_;) {
        std::uint64_t c = prod[i];
        if (!c)
            continue;
        prod[i] = 0;
        for (unsigned j = 0; j < k_; ++j)
            prod[i - k_ + j] = (prod[i - k_ + j] + c * (p_ - modulus_[j] % p_)) % p_;
    }
    std::uint64_t out = 0;
    for (unsigned i = k_; i-- > 0;)
        out = out * p_ + prod[i];
    return out;
}

std::uint64_t Field::mul(std::uint64_t a, std::uint64_t b) const {
    if (tabled_)
        return mul_table_[a * q_ + b];
    return mul_generic(a, b);
}

std::uint64_t Field::pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    std::uint64_t base = a;
    while (e) {
        if (e & 1)
            r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

std::uint64_t Field::inv(std::uint64_t a) const {
    if (a == 0)
        throw std::domain_error("inverse of zero");
    if (tabled_)
        return inv_table_[a];
    return pow(a, q_ - 2);
}

std::string Field::element_str(std::uint64_t a) const {
    auto c = unpack(a);
    std::string s;
    for (unsigned i = 0; i < k_; ++i) {
        if (i)
            s += ',';
        s += std::to_string(c[i]);
    }
    return s;
}

std::uint64_t Field::element_from_str(const std::string& s) const {
    std::vector<std::uint32_t> c;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty())
            continue;
        c.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
    }
    if (c.empty())
        throw std::invalid_argument("empty field element string");
    if (c.size() > k_) {
        for (size_t i = k_; i < c.size(); ++i)
            if (c[i])
                throw std::invalid_argument("field element string has degree >= k");
        c.resize(k_);
    }
    for (auto v : c)
        if (v >= p_)
            throw std::invalid_argument("field element coefficient out of range");
    return pack(c);
}

} // namespace topgen::gf
