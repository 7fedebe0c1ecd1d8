#include "topgen/gf/poly.hpp"

#include <stdexcept>

namespace topgen::gf {

Poly Poly::constant(FieldPtr field, std::uint64_t v) {
    Poly p(field);
    if (v)
        p.c_ = {v};
    return p;
}

Poly Poly::x(FieldPtr field) { return Poly(std::move(field), {0, 1}); }

Poly Poly::linear_root(FieldPtr field, std::uint64_t r) {
    std::uint64_t nr = field->neg(r);
    return Poly(std::move(field), {nr, 1});
}

Poly Poly::operator+(const Poly& o) const {
    const Field& F = *field_;
    std::vector<std::uint64_t> out(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < out.size(); ++i)
        out[i] = F.add(coeff(i), o.coeff(i));
    return Poly(field_, std::move(out));
}

Poly Poly::operator-(const Poly& o) const {
    const Field& F = *field_;
    std::vector<std::uint64_t> out(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < out.size(); ++i)
        out[i] = F.sub(coeff(i), o.coeff(i));
    return Poly(field_, std::move(out));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero())
        return Poly(field_);
    const Field& F = *field_;
    std::vector<std::uint64_t> out(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i])
            continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            if (o.c_[j])
                out[i + j] = F.add(out[i + j], F.mul(c_[i], o.c_[j]));
    }
    return Poly(field_, std::move(out));
}

Poly Poly::scaled(std::uint64_t s) const {
    const Field& F = *field_;
    std::vector<std::uint64_t> out(c_.size());
    for (size_t i = 0; i < c_.size(); ++i)
        out[i] = F.mul(c_[i], s);
    return Poly(field_, std::move(out));
}

Poly Poly::monic() const {
    if (is_zero())
        throw std::domain_error("cannot normalize the zero polynomial");
    if (is_monic())
        return *this;
    return scaled(field_->inv(leading()));
}

Poly::DivMod Poly::divmod(const Poly& divisor) const {
    if (divisor.is_zero())
        throw std::domain_error("polynomial division by zero");
    const Field& F = *field_;
    std::vector<std::uint64_t> rem = c_;
    std::vector<std::uint64_t> quot;
    const int dd = divisor.degree();
    if (degree() >= dd)
        quot.assign(static_cast<size_t>(degree() - dd) + 1, 0);
    std::uint64_t lead_inv = F.inv(divisor.leading());
    for (int i = degree(); i >= dd; --i) {
        std::uint64_t c = rem[static_cast<size_t>(i)];
        if (!c)
            continue;
        std::uint64_t f = F.mul(c, lead_inv);
        quot[static_cast<size_t>(i - dd)] = f;
        for (int j = 0; j <= dd; ++j) {
            auto& slot = rem[static_cast<size_t>(i - dd + j)];
            slot = F.sub(slot, F.mul(f, divisor.c_[static_cast<size_t>(j)]));
        }
    }
    DivMod out{Poly(field_, std::move(quot)), Poly(field_, std::move(rem))};
    return out;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1)
        return Poly(field_);
    const Field& F = *field_;
    std::vector<std::uint64_t> out(c_.size() - 1, 0);
    for (size_t i = 1; i < c_.size(); ++i) {
        std::uint64_t k = F.from_int(i % F.p());
        out[i - 1] = F.mul(c_[i], k);
    }
    return Poly(field_, std::move(out));
}

std::uint64_t Poly::eval(std::uint64_t x) const {
    const Field& F = *field_;
    std::uint64_t acc = 0;
    for (size_t i = c_.size(); i-- > 0;)
        acc = F.add(F.mul(acc, x), c_[i]);
    return acc;
}

std::string Poly::str() const {
    if (is_zero())
        return "0";
    const Field& F = *field_;
    std::string s;
    for (size_t i = c_.size(); i-- > 0;) {
        if (!c_[i])
            continue;
        if (!s.empty())
            s += "+";
        std::string cs = F.degree() == 1 ? std::to_string(c_[i])
                                         : "(" + F.element_str(c_[i]) + ")";
        if (i == 0)
            s += cs;
        else {
            if (c_[i] != 1)
                s += cs + "*";
            s += (i == 1) ? "x" : "x^" + std::to_string(i);
        }
    }
    return s;
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero())
        return a;
    return a.monic();
}

Poly powmod(Poly base, std::uint64_t e, const Poly& mod) {
    Poly r = Poly::constant(base.field(), 1);
    base = base % mod;
    while (e) {
        if (e & 1)
            r = (r * base) % mod;
        base = (base * base) % mod;
        e >>= 1;
    }
    return r;
}

} // namespace topgen::gf
