#include "postlie/lie_algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace postlie {

GVector gvec_zero(int dim) { return GVector(dim, Rational(0)); }

GVector gvec_add(const GVector& a, const GVector& b) {
    GVector r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

GVector gvec_sub(const GVector& a, const GVector& b) {
    GVector r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

GVector gvec_scale(const Rational& c, const GVector& a) {
    GVector r = a;
    for (auto& v : r) v *= c;
    return r;
}

bool gvec_is_zero(const GVector& a) {
    for (const auto& v : a)
        if (v != 0) return false;
    return true;
}

LieAlgebraSpec::LieAlgebraSpec(int dim, std::vector<std::string> labels)
    : dim_(dim), labels_(std::move(labels)), c_(static_cast<size_t>(dim) * dim * dim, Rational(0)) {
    if (dim <= 0) throw std::invalid_argument("dimension must be positive");
    if (labels_.empty()) {
        for (int i = 0; i < dim; ++i) labels_.push_back("e" + std::to_string(i));
    }
    if (static_cast<int>(labels_.size()) != dim) {
        throw std::invalid_argument("label count does not match dimension");
    }
}

void LieAlgebraSpec::set_c(int i, int j, int k, Rational v) {
    c_[(i * dim_ + j) * dim_ + k] = std::move(v);
}

GVector LieAlgebraSpec::bracket_basis(int i, int j) const {
    GVector r = gvec_zero(dim_);
    for (int k = 0; k < dim_; ++k) r[k] = c(i, j, k);
    return r;
}

GVector LieAlgebraSpec::bracket(const GVector& x, const GVector& y) const {
    if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_) {
        throw std::invalid_argument("bracket: dimension mismatch");
    }
    GVector r = gvec_zero(dim_);
    for (int i = 0; i < dim_; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < dim_; ++j) {
            if (y[j] == 0) continue;
            Rational cij = x[i] * y[j];
            for (int k = 0; k < dim_; ++k) {
                if (c(i, j, k) != 0) r[k] += cij * c(i, j, k);
            }
        }
    }
    return r;
}

Report LieAlgebraSpec::validate() const {
    Report rep;
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            for (int k = 0; k < dim_; ++k)
                if (c(i, j, k) != -c(j, i, k)) {
                    std::ostringstream os;
                    os << "antisymmetry fails at (" << labels_[i] << "," << labels_[j] << ") -> "
                       << labels_[k];
                    rep.fail(os.str());
                }
    for (int i = 0; i < dim_; ++i)
        for (int j = i + 1; j < dim_; ++j)
            for (int k = j + 1; k < dim_; ++k) {
                // [[i,j],k] + [[k,i],j] + [[j,k],i] = 0
                GVector ek = gvec_zero(dim_), ej = gvec_zero(dim_), ei = gvec_zero(dim_);
                ek[k] = 1;
                ej[j] = 1;
                ei[i] = 1;
                GVector jac = gvec_add(
                    gvec_add(bracket(bracket_basis(i, j), ek), bracket(bracket_basis(k, i), ej)),
                    bracket(bracket_basis(j, k), ei));
                if (!gvec_is_zero(jac)) {
                    std::ostringstream os;
                    os << "Jacobi fails at (" << labels_[i] << "," << labels_[j] << "," << labels_[k]
                       << ")";
                    rep.fail(os.str());
                }
            }
    return rep;
}

LieAlgebraSpec LieAlgebraSpec::gl(int n) {
    std::vector<std::string> labels;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            labels.push_back("E" + std::to_string(a + 1) + std::to_string(b + 1));
    LieAlgebraSpec L(n * n, std::move(labels));
    // [E_ab, E_cd] = delta_bc E_ad - delta_da E_cb
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c2 = 0; c2 < n; ++c2)
                for (int d = 0; d < n; ++d) {
                    int i = a * n + b, j = c2 * n + d;
                    if (b == c2) {
                        int k = a * n + d;
                        L.set_c(i, j, k, L.c(i, j, k) + 1);
                    }
                    if (d == a) {
                        int k = c2 * n + b;
                        L.set_c(i, j, k, L.c(i, j, k) - 1);
                    }
                }
    return L;
}

LieAlgebraSpec LieAlgebraSpec::sl2() {
    LieAlgebraSpec L(3, {"h", "e", "f"});
    L.set_c(0, 1, 1, 2);
    L.set_c(1, 0, 1, -2);
    L.set_c(0, 2, 2, -2);
    L.set_c(2, 0, 2, 2);
    L.set_c(1, 2, 0, 1);
    L.set_c(2, 1, 0, -1);
    return L;
}

LieAlgebraSpec LieAlgebraSpec::abelian(int dim) {
    return LieAlgebraSpec(dim, {});
}

namespace {

// Solves M a = v exactly by Gaussian elimination; M is cols basis vectors.
std::vector<Rational> solve_in_span(const std::vector<std::vector<Rational>>& cols,
                                    std::vector<Rational> v) {
    const int rows = static_cast<int>(v.size());
    const int n = static_cast<int>(cols.size());
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(n + 1, Rational(0)));
    for (int r = 0; r < rows; ++r) {
        for (int cI = 0; cI < n; ++cI) m[r][cI] = cols[cI][r];
        m[r][n] = v[r];
    }
    std::vector<int> pivot_col(rows, -1);
    int rank = 0;
    for (int col = 0; col < n && rank < rows; ++col) {
        int p = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][col] != 0) {
                p = r;
                break;
            }
        if (p < 0) continue;
        std::swap(m[rank], m[p]);
        Rational inv = 1 / m[rank][col];
        for (auto& x : m[rank]) x *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][col] == 0) continue;
            Rational f = m[r][col];
            for (int cc = col; cc <= n; ++cc) m[r][cc] -= f * m[rank][cc];
        }
        pivot_col[rank] = col;
        ++rank;
    }
    for (int r = rank; r < rows; ++r)
        if (m[r][n] != 0) throw std::invalid_argument("commutator not in span of basis");
    std::vector<Rational> a(n, Rational(0));
    for (int r = 0; r < rank; ++r) a[pivot_col[r]] = m[r][n];
    return a;
}

}  // namespace

LieAlgebraSpec LieAlgebraSpec::from_matrices(const std::vector<std::vector<Rational>>& basis, int n,
                                             std::vector<std::string> labels) {
    const int d = static_cast<int>(basis.size());
    LieAlgebraSpec L(d, std::move(labels));
    auto commutator = [n](const std::vector<Rational>& A, const std::vector<Rational>& B) {
        std::vector<Rational> C(n * n, Rational(0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Rational s = 0;
                for (int k = 0; k < n; ++k)
                    s += A[i * n + k] * B[k * n + j] - B[i * n + k] * A[k * n + j];
                C[i * n + j] = s;
            }
        return C;
    };
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            auto coords = solve_in_span(basis, commutator(basis[i], basis[j]));
            for (int k = 0; k < d; ++k) L.set_c(i, j, k, coords[k]);
        }
    return L;
}

}  // namespace postlie
