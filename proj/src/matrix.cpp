#include "topgen/gf/matrix.hpp"

#include <stdexcept>

namespace topgen::gf {

Matrix Matrix::identity(FieldPtr field, int n) {
    Matrix m(std::move(field), n, n);
    for (int i = 0; i < n; ++i)
        m.set(i, i, 1);
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_)
        throw std::invalid_argument("matrix shape mismatch in product");
    const Field& F = *field_;
    Matrix out(field_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            std::uint64_t v = at(i, k);
            if (!v)
                continue;
            for (int j = 0; j < o.cols_; ++j) {
                std::uint64_t w = o.at(k, j);
                if (w)
                    out.a_[out.idx(i, j)] = F.add(out.a_[out.idx(i, j)], F.mul(v, w));
            }
        }
    return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix shape mismatch in sum");
    Matrix out(field_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i)
        out.a_[i] = field_->add(a_[i], o.a_[i]);
    return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix shape mismatch in difference");
    Matrix out(field_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i)
        out.a_[i] = field_->sub(a_[i], o.a_[i]);
    return out;
}

Matrix Matrix::scaled(std::uint64_t s) const {
    Matrix out(field_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i)
        out.a_[i] = field_->mul(a_[i], s);
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            out.set(j, i, at(i, j));
    return out;
}

Matrix Matrix::pow(std::uint64_t e) const {
    if (!square())
        throw std::invalid_argument("matrix power needs a square matrix");
    Matrix r = identity(field_, rows_);
    Matrix base = *this;
    while (e) {
        if (e & 1)
            r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

bool Matrix::is_identity() const {
    if (!square())
        return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1u : 0u))
                return false;
    return true;
}

namespace {

// Row echelon elimination; returns rank, optionally tracking an
// augmented inverse or recording pivot columns.
struct Echelon {
    Matrix m;
    std::vector<int> pivot_cols;
    int rank = 0;
    std::uint64_t det = 1; // product of pivots with row-swap signs, square case
    bool det_valid = true;
};

Echelon echelonize(Matrix m) {
    const Field& F = *m.field();
    Echelon e{m, {}, 0, 1, true};
    Matrix& A = e.m;
    int r = 0;
    for (int c = 0; c < A.cols() && r < A.rows(); ++c) {
        int piv = -1;
        for (int i = r; i < A.rows(); ++i)
            if (A.at(i, c)) {
                piv = i;
                break;
            }
        if (piv < 0) {
            e.det_valid = false; // a pivotless column: singular if square
            continue;
        }
        if (piv != r) {
            for (int j = 0; j < A.cols(); ++j) {
                std::uint64_t t = A.at(r, j);
                A.set(r, j, A.at(piv, j));
                A.set(piv, j, t);
            }
            e.det = F.neg(e.det);
        }
        std::uint64_t pv = A.at(r, c);
        e.det = F.mul(e.det, pv);
        std::uint64_t pinv = F.inv(pv);
        for (int j = c; j < A.cols(); ++j)
            A.set(r, j, F.mul(A.at(r, j), pinv));
        for (int i = 0; i < A.rows(); ++i) {
            if (i == r)
                continue;
            std::uint64_t f = A.at(i, c);
            if (!f)
                continue;
            for (int j = c; j < A.cols(); ++j)
                A.set(i, j, F.sub(A.at(i, j), F.mul(f, A.at(r, j))));
        }
        e.pivot_cols.push_back(c);
        ++r;
    }
    e.rank = r;
    return e;
}

} // namespace

int Matrix::rank() const { return echelonize(*this).rank; }

std::uint64_t Matrix::determinant() const {
    if (!square())
        throw std::invalid_argument("determinant needs a square matrix");
    Echelon e = echelonize(*this);
    if (e.rank < rows_)
        return 0;
    return e.det;
}

std::optional<Matrix> Matrix::inverse() const {
    if (!square())
        throw std::invalid_argument("inverse needs a square matrix");
    // eliminate [A | I]
    Matrix aug(field_, rows_, 2 * cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j)
            aug.set(i, j, at(i, j));
        aug.set(i, cols_ + i, 1);
    }
    Echelon e = echelonize(std::move(aug));
    if (e.rank < rows_)
        return std::nullopt;
    // the pivots of the left block must be the leading columns
    for (int i = 0; i < rows_; ++i)
        if (e.pivot_cols[static_cast<size_t>(i)] != i)
            return std::nullopt;
    Matrix inv(field_, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            inv.set(i, j, e.m.at(i, cols_ + j));
    return inv;
}

Matrix Matrix::kernel_basis() const {
    Echelon e = echelonize(*this);
    const Field& F = *field_;
    std::vector<bool> is_pivot(static_cast<size_t>(cols_), false);
    for (int c : e.pivot_cols)
        is_pivot[static_cast<size_t>(c)] = true;
    int nullity = cols_ - e.rank;
    Matrix basis(field_, cols_, nullity);
    int col = 0;
    for (int fc = 0; fc < cols_; ++fc) {
        if (is_pivot[static_cast<size_t>(fc)])
            continue;
        basis.set(fc, col, 1);
        // pivot rows give the dependent coordinates
        for (int r = 0; r < e.rank; ++r) {
            int pc = e.pivot_cols[static_cast<size_t>(r)];
            std::uint64_t v = e.m.at(r, fc);
            if (v)
                basis.set(pc, col, F.neg(v));
        }
        ++col;
    }
    return basis;
}

std::vector<std::uint8_t> Matrix::canonical_bytes() const {
    const unsigned w = field_->encoded_width();
    std::vector<std::uint8_t> out;
    out.reserve(1 + a_.size() * w);
    out.push_back(static_cast<std::uint8_t>(rows_));
    for (std::uint64_t v : a_)
        for (unsigned b = 0; b < w; ++b)
            out.push_back(static_cast<std::uint8_t>((v >> (8 * b)) & 0xff));
    return out;
}

int Matrix::key_bits_per_entry(const Field& f) {
    int bits = 0;
    std::uint64_t top = f.q() - 1;
    while (top) {
        ++bits;
        top >>= 1;
    }
    return bits == 0 ? 1 : bits;
}

std::optional<std::uint64_t> Matrix::packed_key() const {
    const int bits = key_bits_per_entry(*field_);
    if (static_cast<size_t>(bits) * a_.size() > 64)
        return std::nullopt;
    std::uint64_t key = 0;
    for (size_t i = a_.size(); i-- > 0;)
        key = (key << bits) | a_[i];
    return key;
}

Matrix Matrix::from_packed_key(const FieldPtr& field, int n, std::uint64_t key) {
    const int bits = key_bits_per_entry(*field);
    const std::uint64_t mask = (bits == 64) ? ~0ull : ((1ull << bits) - 1);
    Matrix m(field, n, n);
    for (size_t i = 0; i < m.a_.size(); ++i) {
        m.a_[i] = key & mask;
        key >>= bits;
    }
    return m;
}

std::string Matrix::str() const {
    std::string s;
    for (int i = 0; i < rows_; ++i) {
        s += '[';
        for (int j = 0; j < cols_; ++j) {
            if (j)
                s += ' ';
            s += field_->degree() == 1 ? std::to_string(at(i, j)) : field_->element_str(at(i, j));
        }
        s += "]\n";
    }
    return s;
}

Poly char_poly(const Matrix& a) {
    if (!a.square())
        throw std::invalid_argument("characteristic polynomial needs a square matrix");
    const FieldPtr& Fp = a.field();
    const Field& F = *Fp;
    const int n = a.rows();
    if (n == 0)
        return Poly::constant(Fp, 1);

    // Iterated Toeplitz recurrence on leading principal submatrices.
    // Coefficients kept high degree first: c[0] x^r + ... + c[r].
    std::vector<std::uint64_t> c{1, F.neg(a.at(0, 0))};
    for (int r = 1; r < n; ++r) {
        // s[0] = 1, s[1] = -A[r][r], s[j] = -(R . M^(j-2) . C) with
        // M the leading r x r block, R the row below it, C the column
        // beside it.
        std::vector<std::uint64_t> s(static_cast<size_t>(r) + 2, 0);
        s[0] = 1;
        s[1] = F.neg(a.at(r, r));
        std::vector<std::uint64_t> u(static_cast<size_t>(r));
        for (int i = 0; i < r; ++i)
            u[static_cast<size_t>(i)] = a.at(i, r);
        for (int j = 2; j <= r + 1; ++j) {
            std::uint64_t dot = 0;
            for (int i = 0; i < r; ++i)
                dot = F.add(dot, F.mul(a.at(r, i), u[static_cast<size_t>(i)]));
            s[static_cast<size_t>(j)] = F.neg(dot);
            if (j <= r) {
                std::vector<std::uint64_t> nu(static_cast<size_t>(r), 0);
                for (int i = 0; i < r; ++i) {
                    std::uint64_t acc = 0;
                    for (int t = 0; t < r; ++t)
                        acc = F.add(acc, F.mul(a.at(i, t), u[static_cast<size_t>(t)]));
                    nu[static_cast<size_t>(i)] = acc;
                }
                u = std::move(nu);
            }
        }
        // prefix of the convolution s * c
        std::vector<std::uint64_t> nc(static_cast<size_t>(r) + 2, 0);
        for (size_t i = 0; i < nc.size(); ++i) {
            std::uint64_t acc = 0;
            for (size_t j = 0; j < c.size() && j <= i; ++j) {
                size_t k = i - j;
                if (k < s.size() && s[k] && c[j])
                    acc = F.add(acc, F.mul(s[k], c[j]));
            }
            nc[i] = acc;
        }
        c = std::move(nc);
    }
    // to low-degree-first
    std::vector<std::uint64_t> low(c.rbegin(), c.rend());
    return Poly(Fp, std::move(low));
}

Matrix eval_poly_at(const Poly& f, const Matrix& a) {
    if (!a.square())
        throw std::invalid_argument("polynomial evaluation needs a square matrix");
    const int n = a.rows();
    Matrix acc = Matrix::zero(a.field(), n, n);
    const auto& c = f.coeffs();
    for (size_t i = c.size(); i-- > 0;) {
        acc = acc * a;
        if (c[i])
            for (int d = 0; d < n; ++d)
                acc.set(d, d, a.field()->add(acc.at(d, d), c[i]));
    }
    return acc;
}

} // namespace topgen::gf
