#include "coverhfk/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace coverhfk {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::logic_error("matrix product shape mismatch");
    IntMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& x = at(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
        }
    return r;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool IntMatrix::operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
}

Int IntMatrix::det() const {
    if (rows_ != cols_) throw std::logic_error("determinant of non-square matrix");
    std::size_t n = rows_;
    if (n == 0) return 1;
    IntMatrix m = *this;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && m.at(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            m.swap_rows(k, piv);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m.at(i, j) = int_divexact(m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j), prev);
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : Int(-m.at(n - 1, n - 1));
}

std::vector<Int> IntMatrix::char_poly() const {
    if (rows_ != cols_) throw std::logic_error("char_poly of non-square matrix");
    std::size_t n = rows_;
    // Faddeev-LeVerrier: M_1 = A, c_{n-1} = -tr(M_1),
    // M_k = A(M_{k-1} + c_{n-k+1} I), c_{n-k} = -tr(M_k)/k. All divisions exact.
    std::vector<Int> c(n + 1, Int(0));
    c[n] = 1;
    IntMatrix M = *this;
    for (std::size_t k = 1; k <= n; ++k) {
        if (k > 1) {
            IntMatrix Mc = M;
            for (std::size_t i = 0; i < n; ++i) Mc.at(i, i) += c[n - k + 1];
            M = (*this) * Mc;
        }
        Int tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += M.at(i, i);
        c[n - k] = int_divexact(-tr, Int(static_cast<long>(k)));
    }
    return c;
}

namespace {

bool is_isolated(const IntMatrix& D, std::size_t t) {
    for (std::size_t i = t + 1; i < D.rows(); ++i)
        if (D.at(i, t) != 0) return false;
    for (std::size_t j = t + 1; j < D.cols(); ++j)
        if (D.at(t, j) != 0) return false;
    return true;
}

// Smallest nonzero |entry| in the trailing submatrix; false if all zero.
bool locate_pivot(const IntMatrix& D, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int best = 0;
    for (std::size_t i = t; i < D.rows(); ++i)
        for (std::size_t j = t; j < D.cols(); ++j) {
            if (D.at(i, j) == 0) continue;
            Int a = int_abs(D.at(i, j));
            if (!found || a < best) {
                best = a;
                pi = i;
                pj = j;
                found = true;
            }
        }
    return found;
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& M) {
    SmithResult r{M, IntMatrix::identity(M.rows()), IntMatrix::identity(M.cols())};
    IntMatrix& D = r.D;
    IntMatrix& U = r.U;
    IntMatrix& V = r.V;
    const std::size_t n = std::min(M.rows(), M.cols());

    for (std::size_t t = 0; t < n; ++t) {
        std::size_t pi = t, pj = t;
        if (!locate_pivot(D, t, pi, pj)) break;
        D.swap_rows(t, pi);
        U.swap_rows(t, pi);
        D.swap_cols(t, pj);
        V.swap_cols(t, pj);

        while (!is_isolated(D, t)) {
            for (std::size_t i = t + 1; i < D.rows(); ++i) {
                if (D.at(i, t) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), D.at(i, t).get_mpz_t(), D.at(t, t).get_mpz_t());
                if (q != 0)
                    for (std::size_t k = 0; k < D.cols(); ++k) D.at(i, k) -= q * D.at(t, k);
                for (std::size_t k = 0; k < U.cols(); ++k) {
                    if (q != 0) U.at(i, k) -= q * U.at(t, k);
                }
                if (D.at(i, t) != 0) {
                    // Remainder smaller than pivot; promote it and restart.
                    D.swap_rows(t, i);
                    U.swap_rows(t, i);
                }
            }
            for (std::size_t j = t + 1; j < D.cols(); ++j) {
                if (D.at(t, j) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), D.at(t, j).get_mpz_t(), D.at(t, t).get_mpz_t());
                if (q != 0)
                    for (std::size_t k = 0; k < D.rows(); ++k) D.at(k, j) -= q * D.at(k, t);
                for (std::size_t k = 0; k < V.rows(); ++k) {
                    if (q != 0) V.at(k, j) -= q * V.at(k, t);
                }
                if (D.at(t, j) != 0) {
                    D.swap_cols(t, j);
                    V.swap_cols(t, j);
                }
            }
        }

        if (D.at(t, t) < 0) {
            for (std::size_t k = 0; k < D.cols(); ++k) D.at(t, k) = -D.at(t, k);
            for (std::size_t k = 0; k < U.cols(); ++k) U.at(t, k) = -U.at(t, k);
        }

        // Enforce divisibility d_t | entries below-right; on failure fold the
        // offending column into column t and redo this step.
        bool redo = false;
        for (std::size_t i = t + 1; i < D.rows() && !redo; ++i)
            for (std::size_t j = t + 1; j < D.cols() && !redo; ++j)
                if (D.at(i, j) % D.at(t, t) != 0) {
                    for (std::size_t k = 0; k < D.rows(); ++k) D.at(k, t) += D.at(k, j);
                    for (std::size_t k = 0; k < V.rows(); ++k) V.at(k, t) += V.at(k, j);
                    redo = true;
                }
        if (redo) --t;
    }
    return r;
}

long signature_symmetric(const IntMatrix& A) {
    std::vector<Int> c = A.char_poly();
    auto sign_changes = [](const std::vector<Int>& v) {
        long changes = 0;
        int last = 0;
        for (const Int& x : v) {
            int s = int_sign(x);
            if (s == 0) continue;
            if (last != 0 && s != last) ++changes;
            last = s;
        }
        return changes;
    };
    long pos = sign_changes(c);
    std::vector<Int> cneg = c;
    for (std::size_t i = 1; i < cneg.size(); i += 2) cneg[i] = -cneg[i];
    long neg = sign_changes(cneg);
    return pos - neg;
}

long signature_tridiagonal_unit(const std::vector<Int>& diag) {
    long sig = 0;
    std::size_t n = diag.size();
    mpq_class t;
    bool fresh = true;
    for (std::size_t k = 0; k < n; ++k) {
        if (fresh)
            t = diag[k];
        else
            t = mpq_class(diag[k]) - 1 / t;
        fresh = false;
        int s = sgn(t);
        if (s != 0) {
            sig += s;
            continue;
        }
        if (k + 1 == n) break;  // trailing zero pivot: one zero eigenvalue
        // Zero pivot: take the 2x2 block [[0,1],[1,a]], signature 0; its
        // Schur complement leaves the next diagonal entry untouched.
        ++k;
        fresh = true;
    }
    return sig;
}

Int resultant(const std::vector<Int>& p, const std::vector<Int>& q) {
    auto trim = [](std::vector<Int> v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
        return v;
    };
    std::vector<Int> a = trim(p), b = trim(q);
    if (a.empty() || b.empty()) return 0;
    std::size_t m = a.size() - 1, n = b.size() - 1;
    if (m == 0) {
        Int r;
        mpz_pow_ui(r.get_mpz_t(), a[0].get_mpz_t(), static_cast<unsigned long>(n));
        return r;
    }
    if (n == 0) {
        Int r;
        mpz_pow_ui(r.get_mpz_t(), b[0].get_mpz_t(), static_cast<unsigned long>(m));
        return r;
    }
    IntMatrix S(m + n, m + n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= m; ++j) S.at(i, i + j) = a[m - j];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= n; ++j) S.at(n + i, i + j) = b[n - j];
    return S.det();
}

}  // namespace coverhfk
