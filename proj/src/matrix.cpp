#include "ybe/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace ybe {

MatRF::MatRF(int rows, int cols, VarSetPtr vars)
    : rows_(rows), cols_(cols), vars_(std::move(vars)),
      data_(static_cast<std::size_t>(rows) * cols, RatFunc::zero(vars_)) {}

MatRF MatRF::identity(int n, const VarSetPtr& vars) {
    MatRF m(n, n, vars);
    RatFunc one = RatFunc::one(vars);
    for (int i = 0; i < n; ++i) m.at(i, i) = one;
    return m;
}

MatRF MatRF::operator+(const MatRF& o) const {
    MatRF r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i)
        if (!o.data_[i].is_zero()) r.data_[i] = r.data_[i] + o.data_[i];
    return r;
}

MatRF MatRF::operator-(const MatRF& o) const {
    MatRF r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i)
        if (!o.data_[i].is_zero()) r.data_[i] = r.data_[i] - o.data_[i];
    return r;
}

MatRF MatRF::operator*(const MatRF& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
    MatRF r(rows_, o.cols_, vars_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const RatFunc& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const RatFunc& b = o.at(k, j);
                if (b.is_zero()) continue;
                r.at(i, j) = r.at(i, j) + a * b;
            }
        }
    return r;
}

MatRF MatRF::operator*(const RatFunc& c) const {
    MatRF r(rows_, cols_, vars_);
    if (c.is_zero()) return r;
    for (std::size_t i = 0; i < data_.size(); ++i)
        if (!data_[i].is_zero()) r.data_[i] = data_[i] * c;
    return r;
}

MatRF MatRF::operator*(const Rational& c) const { return *this * RatFunc::constant(vars_, c); }

bool MatRF::operator==(const MatRF& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < data_.size(); ++i)
        if (data_[i] != o.data_[i]) return false;
    return true;
}

bool MatRF::is_zero() const {
    for (const auto& e : data_)
        if (!e.is_zero()) return false;
    return true;
}

bool MatRF::is_identity() const {
    if (rows_ != cols_) return false;
    RatFunc one = RatFunc::one(vars_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            if (i == j && at(i, j) != one) return false;
            if (i != j && !at(i, j).is_zero()) return false;
        }
    return true;
}

MatRF MatRF::transpose() const {
    MatRF r(cols_, rows_, vars_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

MatRF MatRF::kron(const MatRF& o) const {
    MatRF r(rows_ * o.rows_, cols_ * o.cols_, vars_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            if (at(i, j).is_zero()) continue;
            for (int k = 0; k < o.rows_; ++k)
                for (int l = 0; l < o.cols_; ++l) {
                    if (o.at(k, l).is_zero()) continue;
                    r.at(i * o.rows_ + k, j * o.cols_ + l) = at(i, j) * o.at(k, l);
                }
        }
    return r;
}

MatRF MatRF::subst(const std::map<std::string, RatFunc>& bindings, const VarSetPtr& target) const {
    MatRF r(rows_, cols_, target);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) r.at(i, j) = at(i, j).subst(bindings, target);
    return r;
}

MatRF MatRF::lifted(const VarSetPtr& bigger) const {
    MatRF r(rows_, cols_, bigger);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) r.at(i, j) = at(i, j).lifted(bigger);
    return r;
}

MatRF MatRF::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
    const int n = rows_;
    // clear denominators per row: row_i * d_i is polynomial
    std::vector<Poly> M(static_cast<std::size_t>(n) * n, Poly(vars_));
    std::vector<RatFunc> row_scale(n);
    for (int i = 0; i < n; ++i) {
        // lcm of the row's denominator factors
        std::map<Poly, int> lcm;
        for (int j = 0; j < n; ++j)
            for (const auto& [f, e] : at(i, j).den_factors()) {
                auto it = lcm.find(f);
                if (it == lcm.end()) lcm[f] = e;
                else it->second = std::max(it->second, e);
            }
        RatFunc scale = RatFunc::one(vars_);
        for (const auto& [f, e] : lcm) scale = scale * RatFunc(f).pow(e);
        row_scale[i] = scale;
        for (int j = 0; j < n; ++j) {
            RatFunc cleared = at(i, j) * scale;
            if (!cleared.is_polynomial())
                throw std::logic_error("denominator clearing failed");
            M[static_cast<std::size_t>(i) * n + j] = cleared.num();
        }
    }
    // fraction-free Bareiss on [M | diag(row_scale)] — the augmented part is
    // carried as rational functions to keep the row scales exact
    std::vector<std::vector<RatFunc>> aug(n, std::vector<RatFunc>(n, RatFunc::zero(vars_)));
    for (int i = 0; i < n; ++i) aug[i][i] = row_scale[i];

    auto Mat = [&](int i, int j) -> Poly& { return M[static_cast<std::size_t>(i) * n + j]; };
    Poly prev = Poly::constant(vars_, 1);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int i = k; i < n; ++i)
            if (!Mat(i, k).is_zero()) { pivot = i; break; }
        if (pivot < 0) throw std::domain_error("singular matrix");
        if (pivot != k) {
            for (int j = 0; j < n; ++j) std::swap(Mat(pivot, j), Mat(k, j));
            std::swap(aug[pivot], aug[k]);
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Poly t = Mat(k, k) * Mat(i, j) - Mat(i, k) * Mat(k, j);
                auto q = t.divided_exactly_by(prev);
                if (!q) throw std::logic_error("Bareiss exact division failed");
                Mat(i, j) = *q;
            }
            RatFunc prev_inv = RatFunc(prev).inverse();
            for (int j = 0; j < n; ++j)
                aug[i][j] = (RatFunc(Mat(k, k)) * aug[i][j] - RatFunc(Mat(i, k)) * aug[k][j]) * prev_inv;
            Mat(i, k) = Poly(vars_);
        }
        prev = Mat(k, k);
    }
    // back substitution over the field
    MatRF inv(n, n, vars_);
    for (int col = 0; col < n; ++col) {
        std::vector<RatFunc> x(n, RatFunc::zero(vars_));
        for (int i = n - 1; i >= 0; --i) {
            RatFunc acc = aug[i][col];
            for (int j = i + 1; j < n; ++j)
                if (!Mat(i, j).is_zero() && !x[j].is_zero()) acc = acc - RatFunc(Mat(i, j)) * x[j];
            x[i] = acc / RatFunc(Mat(i, i));
        }
        for (int i = 0; i < n; ++i) inv.at(i, col) = x[i];
    }
    return inv;
}

bool MatRF::is_nilpotent() const {
    MatRF p = *this;
    for (int k = 1; k <= rows_; ++k) {
        if (p.is_zero()) return true;
        p = p * *this;
    }
    return p.is_zero();
}

std::string MatRF::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << "[ ";
        for (int j = 0; j < cols_; ++j) os << at(i, j).to_string() << (j + 1 < cols_ ? ", " : "");
        os << " ]\n";
    }
    return os.str();
}

MatRF place_on_legs(const MatRF& m2, int legs_total, int leg_a, int leg_b, int N) {
    // m2 acts on C^N ⊗ C^N placed on legs (leg_a, leg_b), identity elsewhere
    int dim = 1;
    for (int i = 0; i < legs_total; ++i) dim *= N;
    MatRF r(dim, dim, m2.vars());
    std::vector<int> idx(legs_total), jdx(legs_total);
    for (int row = 0; row < dim; ++row) {
        int t = row;
        for (int leg = legs_total - 1; leg >= 0; --leg) {
            idx[leg] = t % N;
            t /= N;
        }
        for (int ra = 0; ra < N; ++ra)
            for (int rb = 0; rb < N; ++rb) {
                const RatFunc& e = m2.at(idx[leg_a] * N + idx[leg_b], ra * N + rb);
                if (e.is_zero()) continue;
                jdx = idx;
                jdx[leg_a] = ra;
                jdx[leg_b] = rb;
                int col = 0;
                for (int leg = 0; leg < legs_total; ++leg) col = col * N + jdx[leg];
                r.at(row, col) = r.at(row, col) + e;
            }
    }
    return r;
}

MatRF place_on_leg(const MatRF& m1, int legs_total, int leg, int N) {
    int dim = 1;
    for (int i = 0; i < legs_total; ++i) dim *= N;
    MatRF r(dim, dim, m1.vars());
    std::vector<int> idx(legs_total), jdx(legs_total);
    for (int row = 0; row < dim; ++row) {
        int t = row;
        for (int l = legs_total - 1; l >= 0; --l) {
            idx[l] = t % N;
            t /= N;
        }
        for (int c = 0; c < N; ++c) {
            const RatFunc& e = m1.at(idx[leg], c);
            if (e.is_zero()) continue;
            jdx = idx;
            jdx[leg] = c;
            int col = 0;
            for (int l = 0; l < legs_total; ++l) col = col * N + jdx[l];
            r.at(row, col) = r.at(row, col) + e;
        }
    }
    return r;
}

MatRF permutation_matrix(int N, const VarSetPtr& vars) {
    MatRF p(N * N, N * N, vars);
    RatFunc one = RatFunc::one(vars);
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) p.at(a * N + b, b * N + a) = one;
    return p;
}

MatRF partial_trace_first(const MatRF& m, int N, int rest_dim) {
    MatRF r(rest_dim, rest_dim, m.vars());
    for (int a = 0; a < N; ++a)
        for (int i = 0; i < rest_dim; ++i)
            for (int j = 0; j < rest_dim; ++j) {
                const RatFunc& e = m.at(a * rest_dim + i, a * rest_dim + j);
                if (!e.is_zero()) r.at(i, j) = r.at(i, j) + e;
            }
    return r;
}

std::optional<LinearSolution> solve_linear(const MatRF& A, const std::vector<RatFunc>& b) {
    const int m = A.rows(), n = A.cols();
    const VarSetPtr& vars = A.vars();
    std::vector<std::vector<RatFunc>> M(m, std::vector<RatFunc>(n + 1, RatFunc::zero(vars)));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) M[i][j] = A.at(i, j);
        M[i][n] = b[i];
    }
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < n && row < m; ++col) {
        int p = -1;
        for (int i = row; i < m; ++i)
            if (!M[i][col].is_zero()) { p = i; break; }
        if (p < 0) continue;
        std::swap(M[p], M[row]);
        RatFunc inv = M[row][col].inverse();
        for (int j = col; j <= n; ++j)
            if (!M[row][j].is_zero()) M[row][j] = M[row][j] * inv;
        for (int i = 0; i < m; ++i) {
            if (i == row || M[i][col].is_zero()) continue;
            RatFunc f = M[i][col];
            for (int j = col; j <= n; ++j)
                if (!M[row][j].is_zero()) M[i][j] = M[i][j] - f * M[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (int i = row; i < m; ++i)
        if (!M[i][n].is_zero()) return std::nullopt;

    LinearSolution sol;
    sol.particular.assign(n, RatFunc::zero(vars));
    std::vector<bool> is_pivot(n, false);
    for (int r = 0; r < static_cast<int>(pivot_col.size()); ++r) {
        sol.particular[pivot_col[r]] = M[r][n];
        is_pivot[pivot_col[r]] = true;
    }
    for (int free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<RatFunc> k(n, RatFunc::zero(vars));
        k[free] = RatFunc::one(vars);
        for (int r = 0; r < static_cast<int>(pivot_col.size()); ++r)
            k[pivot_col[r]] = -M[r][free];
        sol.kernel.push_back(std::move(k));
    }
    return sol;
}

int rank_of_rows(const std::vector<std::vector<RatFunc>>& rows, const VarSetPtr& vars) {
    if (rows.empty()) return 0;
    std::vector<std::vector<RatFunc>> M = rows;
    const int m = static_cast<int>(M.size());
    const int n = static_cast<int>(M[0].size());
    int rank = 0;
    for (int col = 0; col < n && rank < m; ++col) {
        int p = -1;
        for (int i = rank; i < m; ++i)
            if (!M[i][col].is_zero()) { p = i; break; }
        if (p < 0) continue;
        std::swap(M[p], M[rank]);
        RatFunc inv = M[rank][col].inverse();
        for (int j = col; j < n; ++j)
            if (!M[rank][j].is_zero()) M[rank][j] = M[rank][j] * inv;
        for (int i = rank + 1; i < m; ++i) {
            if (M[i][col].is_zero()) continue;
            RatFunc f = M[i][col];
            for (int j = col; j < n; ++j)
                if (!M[rank][j].is_zero()) M[i][j] = M[i][j] - f * M[rank][j];
        }
        ++rank;
    }
    return rank;
}

} // namespace ybe
