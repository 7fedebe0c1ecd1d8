#include "topgen/gf/factor.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace topgen::gf {

namespace {

Poly random_poly_below(const FieldPtr& F, int degree_bound, Rng& rng) {
    std::vector<std::uint64_t> c(static_cast<size_t>(degree_bound));
    for (auto& v : c)
        v = rng.below(F->q());
    return Poly(F, std::move(c));
}

// f monic squarefree, all irreducible factors of degree d; split into the
// irreducible factors.
void equal_degree_split(const Poly& f, int d, Rng& rng, std::vector<Poly>& out) {
    const FieldPtr& F = f.field();
    if (f.degree() == d) {
        out.push_back(f);
        return;
    }
    const std::uint64_t q = F->q();
    Poly h = Poly::constant(F, 1);
    for (int tries = 0; tries < 1000; ++tries) {
        Poly a = random_poly_below(F, f.degree(), rng);
        if (a.degree() < 1)
            continue;
        Poly g = gcd(a, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            h = g;
            break;
        }
        if (F->p() == 2) {
            // trace map over GF(2): a + a^2 + a^4 + ... (d * log2(q) terms)
            unsigned m = F->degree();
            Poly t = a % f;
            Poly acc = t;
            for (unsigned i = 1; i < static_cast<unsigned>(d) * m; ++i) {
                t = (t * t) % f;
                acc = acc + t;
            }
            Poly g2 = gcd(acc, f);
            if (g2.degree() > 0 && g2.degree() < f.degree()) {
                h = g2;
                break;
            }
        } else {
            // q odd: a^((q^d - 1)/2) - 1 splits the factors by quadratic
            // residuosity of a mod each factor
            // exponent fits 64 bits because q^d is bounded by the element
            // representation cap
            std::uint64_t e = 1;
            bool overflow = false;
            for (int i = 0; i < d; ++i) {
                if (e > (~0ull) / q) {
                    overflow = true;
                    break;
                }
                e *= q;
            }
            if (overflow)
                throw std::runtime_error("equal-degree split: q^d exceeds 64 bits");
            e = (e - 1) / 2;
            Poly b = powmod(a, e, f);
            b = b - Poly::constant(F, 1);
            Poly g2 = gcd(b, f);
            if (g2.degree() > 0 && g2.degree() < f.degree()) {
                h = g2;
                break;
            }
        }
    }
    if (h.degree() == 0)
        throw std::runtime_error("equal-degree splitting failed to converge");
    equal_degree_split(h, d, rng, out);
    equal_degree_split((f / h).monic(), d, rng, out);
}

// f monic squarefree; returns pairs (product of factors of degree d, d).
void distinct_degree_split(const Poly& f, Rng& rng, std::vector<Poly>& out) {
    const FieldPtr& F = f.field();
    Poly rest = f;
    Poly h = Poly::x(F);            // x^(q^i) mod rest, iterated
    const Poly x = Poly::x(F);
    for (int d = 1; rest.degree() >= 2 * d; ++d) {
        h = powmod(h, F->q(), rest);
        Poly g = gcd(h - x, rest);
        if (g.degree() > 0) {
            equal_degree_split(g, d, rng, out);
            rest = (rest / g).monic();
            h = h % rest;
        }
    }
    if (rest.degree() > 0)
        out.push_back(rest);
}

// p-th root of f when f = g(x^p) (all exponents divisible by p); the
// coefficient p-th roots are c^(q/p).
Poly pth_root(const Poly& f) {
    const FieldPtr& F = f.field();
    const std::uint64_t p = F->p();
    std::uint64_t root_exp = F->q() / p; // c -> c^(q/p) inverts Frobenius
    std::vector<std::uint64_t> out(static_cast<size_t>(f.degree() / static_cast<int>(p)) + 1, 0);
    for (size_t i = 0; i < out.size(); ++i)
        out[i] = F->pow(f.coeff(i * p), root_exp);
    return Poly(F, std::move(out));
}

// monic f -> multiset of (monic squarefree part, multiplicity)
void squarefree_decompose(const Poly& f, int mult, std::map<int, Poly>& parts) {
    const FieldPtr& F = f.field();
    if (f.degree() == 0)
        return;
    Poly df = f.derivative();
    if (df.is_zero()) {
        // f = g(x^p)
        squarefree_decompose(pth_root(f), mult * static_cast<int>(F->p()), parts);
        return;
    }
    Poly c = gcd(f, df);
    Poly w = (f / c).monic();
    int i = 1;
    while (w.degree() > 0) {
        Poly y = gcd(w, c);
        Poly piece = (w / y).monic();
        if (piece.degree() > 0) {
            auto it = parts.find(mult * i);
            if (it == parts.end())
                parts.emplace(mult * i, piece);
            else
                it->second = it->second * piece;
        }
        w = y;
        c = (c / y).monic();
        ++i;
    }
    if (c.degree() > 0) {
        // leftover factors have multiplicity divisible by p
        squarefree_decompose(pth_root(c), mult * static_cast<int>(F->p()), parts);
    }
}

} // namespace

Factorization factor_poly(const Poly& f, std::uint64_t seed) {
    if (f.is_zero())
        throw std::invalid_argument("cannot factor the zero polynomial");
    Factorization out;
    out.unit = f.leading();
    if (f.degree() == 0)
        return out;
    Rng rng(Rng::mix(seed, 0x6a7));

    std::map<int, Poly> parts;
    squarefree_decompose(f.monic(), 1, parts);
    for (const auto& [mult, part] : parts) {
        std::vector<Poly> irreducibles;
        distinct_degree_split(part, rng, irreducibles);
        for (auto& g : irreducibles)
            out.factors.push_back({std::move(g), mult});
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const FactorPower& a, const FactorPower& b) {
                  if (a.factor.degree() != b.factor.degree())
                      return a.factor.degree() < b.factor.degree();
                  return a.factor.coeffs() < b.factor.coeffs();
              });
    return out;
}

bool is_irreducible(const Poly& f) {
    if (f.degree() < 1)
        return false;
    if (f.degree() == 1)
        return true;
    const FieldPtr& F = f.field();
    const Poly m = f.monic();
    const Poly x = Poly::x(F);
    const int k = m.degree();
    // x^(q^k) == x mod m, and no coincidence at proper prime-quotient levels
    Poly h = x;
    for (int i = 0; i < k; ++i)
        h = powmod(h, F->q(), m);
    if (!((h - x) % m).is_zero())
        return false;
    for (int d = 2; d <= k; ++d) {
        if (k % d != 0)
            continue;
        bool prime = true;
        for (int t = 2; t * t <= d; ++t)
            if (d % t == 0) {
                prime = false;
                break;
            }
        if (!prime)
            continue;
        Poly hh = x;
        for (int i = 0; i < k / d; ++i)
            hh = powmod(hh, F->q(), m);
        if (gcd(hh - x, m).degree() != 0)
            return false;
    }
    return true;
}

std::vector<std::uint64_t> roots_in_field(const Poly& f, std::uint64_t seed) {
    std::vector<std::uint64_t> roots;
    for (const auto& fp : factor_poly(f, seed).factors) {
        if (fp.factor.degree() != 1)
            continue;
        // monic x + c -> root = -c
        std::uint64_t r = f.field()->neg(fp.factor.coeff(0));
        for (int i = 0; i < fp.multiplicity; ++i)
            roots.push_back(r);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

Embedding::Embedding(FieldPtr from, FieldPtr into)
    : from_(std::move(from)), into_(std::move(into)) {
    if (from_->p() != into_->p())
        throw std::invalid_argument("embedding requires equal characteristic");
    if (into_->degree() % from_->degree() != 0)
        throw std::invalid_argument("embedding requires divisible extension degrees");
    if (from_->degree() == 1) {
        gen_image_ = 0; // constants map to constants; generator unused
        return;
    }
    // image of the generator: lexicographically least root of the small
    // modulus inside the big field
    std::vector<std::uint64_t> coeffs;
    for (std::uint32_t c : from_->modulus())
        coeffs.push_back(into_->from_int(c));
    Poly m(into_, std::move(coeffs));
    auto rs = roots_in_field(m, 0xe00bedull);
    if (rs.empty())
        throw std::logic_error("small modulus has no root in the big field");
    gen_image_ = rs.front();
}

std::uint64_t Embedding::map(std::uint64_t a) const {
    if (from_->degree() == 1)
        return into_->from_int(a);
    auto c = from_->unpack(a);
    std::uint64_t acc = 0;
    for (size_t i = c.size(); i-- > 0;) {
        acc = into_->mul(acc, gen_image_);
        acc = into_->add(acc, into_->from_int(c[i]));
    }
    return acc;
}

Poly Embedding::map(const Poly& f) const {
    std::vector<std::uint64_t> c(f.coeffs().size());
    for (size_t i = 0; i < c.size(); ++i)
        c[i] = map(f.coeffs()[i]);
    return Poly(into_, std::move(c));
}

} // namespace topgen::gf
