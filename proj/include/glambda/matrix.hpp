#pragma once

// Minimal dense square matrices over an exact scalar type. Used for the
// integer-lambda principal-embedding oracle (K = Rational) and the
// gl(infinity) window (K = Rational or SScalar).

#include <stdexcept>
#include <vector>

namespace glambda {

template <typename K>
class SquareMatrix {
public:
    explicit SquareMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * static_cast<size_t>(n), K(0)) {
        if (n < 1) throw std::invalid_argument("matrix size must be >= 1");
    }

    static SquareMatrix identity(int n) {
        SquareMatrix m(n);
        for (int i = 0; i < n; ++i) m.at(i, i) = K(1);
        return m;
    }

    static SquareMatrix diagonal(const std::vector<K>& d) {
        SquareMatrix m(static_cast<int>(d.size()));
        for (int i = 0; i < m.n_; ++i) m.at(i, i) = d[static_cast<size_t>(i)];
        return m;
    }

    int size() const { return n_; }

    K& at(int i, int j) { return a_[static_cast<size_t>(i) * static_cast<size_t>(n_) + static_cast<size_t>(j)]; }
    const K& at(int i, int j) const {
        return a_[static_cast<size_t>(i) * static_cast<size_t>(n_) + static_cast<size_t>(j)];
    }

    friend SquareMatrix operator+(const SquareMatrix& x, const SquareMatrix& y) {
        x.require_same_size(y);
        SquareMatrix r(x.n_);
        for (size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = x.a_[i] + y.a_[i];
        return r;
    }
    friend SquareMatrix operator-(const SquareMatrix& x, const SquareMatrix& y) {
        x.require_same_size(y);
        SquareMatrix r(x.n_);
        for (size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = x.a_[i] - y.a_[i];
        return r;
    }
    friend SquareMatrix operator*(const SquareMatrix& x, const SquareMatrix& y) {
        x.require_same_size(y);
        SquareMatrix r(x.n_);
        for (int i = 0; i < x.n_; ++i)
            for (int k = 0; k < x.n_; ++k) {
                const K& v = x.at(i, k);
                if (v == K(0)) continue;
                for (int j = 0; j < x.n_; ++j) {
                    const K& w = y.at(k, j);
                    if (w == K(0)) continue;
                    r.at(i, j) += v * w;
                }
            }
        return r;
    }
    friend SquareMatrix operator*(const SquareMatrix& x, const K& c) {
        SquareMatrix r(x.n_);
        for (size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = x.a_[i] * c;
        return r;
    }
    friend SquareMatrix operator*(const K& c, const SquareMatrix& x) { return x * c; }

    bool operator==(const SquareMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }
    bool operator!=(const SquareMatrix& o) const { return !(*this == o); }

    SquareMatrix pow(unsigned e) const {
        SquareMatrix acc = identity(n_);
        SquareMatrix b = *this;
        while (e) {
            if (e & 1u) acc = acc * b;
            b = b * b;
            e >>= 1u;
        }
        return acc;
    }

    K trace() const {
        K acc(0);
        for (int i = 0; i < n_; ++i) acc += at(i, i);
        return acc;
    }

    bool is_zero() const {
        for (const auto& v : a_)
            if (!(v == K(0))) return false;
        return true;
    }

    friend SquareMatrix commutator(const SquareMatrix& x, const SquareMatrix& y) { return x * y - y * x; }

private:
    void require_same_size(const SquareMatrix& o) const {
        if (n_ != o.n_) throw std::invalid_argument("matrix size mismatch");
    }

    int n_;
    std::vector<K> a_;
};

}  // namespace glambda
