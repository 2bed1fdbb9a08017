#include "ela/exactla.hpp"

#include <algorithm>
#include <tuple>

#include "ela/errors.hpp"

namespace ela {

std::string to_string(const Q& q) {
    Q c = q;
    c.canonicalize();
    return c.get_str();
}

Q parse_rational(const std::string& s) {
    Q q;
    if (s.empty() || q.set_str(s, 10) != 0) throw ParseError("bad rational '" + s + "'");
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

namespace sv {

SparseVec unit(int i, const Q& c) {
    if (c == 0) return {};
    return {{i, c}};
}

Q get(const SparseVec& v, int i) {
    auto it = std::lower_bound(v.begin(), v.end(), i,
                               [](const std::pair<int, Q>& e, int k) { return e.first < k; });
    if (it != v.end() && it->first == i) return it->second;
    return 0;
}

static SparseVec merge(const SparseVec& x, const Q& a, const SparseVec& y, const Q& b) {
    SparseVec out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    Q t;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            t = a * x[i].second;
            if (t != 0) out.emplace_back(x[i].first, t);
            ++i;
        } else if (i == x.size() || y[j].first < x[i].first) {
            t = b * y[j].second;
            if (t != 0) out.emplace_back(y[j].first, t);
            ++j;
        } else {
            t = a * x[i].second + b * y[j].second;
            if (t != 0) out.emplace_back(x[i].first, t);
            ++i;
            ++j;
        }
    }
    return out;
}

void axpy(SparseVec& y, const Q& a, const SparseVec& x) {
    if (a == 0 || x.empty()) return;
    y = merge(y, Q(1), x, a);
}

SparseVec add(const SparseVec& x, const SparseVec& y) { return merge(x, Q(1), y, Q(1)); }
SparseVec sub(const SparseVec& x, const SparseVec& y) { return merge(x, Q(1), y, Q(-1)); }

SparseVec scaled(const SparseVec& x, const Q& a) {
    SparseVec out;
    if (a == 0) return out;
    out.reserve(x.size());
    for (const auto& [i, v] : x) out.emplace_back(i, a * v);
    return out;
}

SparseVec from_dense(const std::vector<Q>& d) {
    SparseVec out;
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] != 0) out.emplace_back(static_cast<int>(i), d[i]);
    return out;
}

std::vector<Q> to_dense(const SparseVec& v, std::size_t n) {
    std::vector<Q> d(n);
    for (const auto& [i, x] : v) {
        if (i < 0 || static_cast<std::size_t>(i) >= n) throw DimensionMismatch("sparse index out of range");
        d[i] = x;
    }
    return d;
}

std::string to_string(const SparseVec& v) {
    std::string s = "{";
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k) s += ", ";
        s += std::to_string(v[k].first) + ": " + ela::to_string(v[k].second);
    }
    return s + "}";
}

}  // namespace sv

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape");
    RationalMatrix p(rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Q& a = (*this)(r, k);
            if (a == 0) continue;
            for (std::size_t c = 0; c < o.cols_; ++c)
                if (o(k, c) != 0) p(r, c) += a * o(k, c);
        }
    return p;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape");
    RationalMatrix s(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] + o.a_[i];
    return s;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference shape");
    RationalMatrix s(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] - o.a_[i];
    return s;
}

bool RationalMatrix::operator==(const RationalMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

bool RationalMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Q& q) { return q == 0; });
}

void SparseMatrix::add(int r, int c, const Q& v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw DimensionMismatch("entry out of range");
    sv::axpy(data_[r], Q(1), sv::unit(c, v));
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape");
    SparseMatrix p(rows_, o.cols_);
    std::map<int, Q> acc;
    for (int r = 0; r < rows_; ++r) {
        acc.clear();
        for (const auto& [k, a] : data_[r])
            for (const auto& [c, b] : o.data_[k]) acc[c] += a * b;
        for (auto& [c, v] : acc)
            if (v != 0) p.data_[r].emplace_back(c, v);
    }
    return p;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape");
    SparseMatrix s(rows_, cols_);
    for (int r = 0; r < rows_; ++r) s.data_[r] = sv::add(data_[r], o.data_[r]);
    return s;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference shape");
    SparseMatrix s(rows_, cols_);
    for (int r = 0; r < rows_; ++r) s.data_[r] = sv::sub(data_[r], o.data_[r]);
    return s;
}

SparseMatrix SparseMatrix::scaled(const Q& a) const {
    SparseMatrix s(rows_, cols_);
    for (int r = 0; r < rows_; ++r) s.data_[r] = sv::scaled(data_[r], a);
    return s;
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : data_[r]) t.data_[c].emplace_back(r, v);
    return t;
}

bool SparseMatrix::operator==(const SparseMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

bool SparseMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const SparseVec& r) { return r.empty(); });
}

std::size_t SparseMatrix::nnz() const {
    std::size_t n = 0;
    for (const auto& r : data_) n += r.size();
    return n;
}

SparseVec SparseMatrix::flatten() const {
    SparseVec f;
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : data_[r]) f.emplace_back(r * cols_ + c, v);
    return f;
}

RationalMatrix SparseMatrix::to_dense() const {
    RationalMatrix d(rows_, cols_);
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : data_[r]) d(r, c) = v;
    return d;
}

SparseMatrix SparseMatrix::from_dense(const RationalMatrix& m) {
    SparseMatrix s(static_cast<int>(m.rows()), static_cast<int>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m(r, c) != 0) s.data_[r].emplace_back(static_cast<int>(c), m(r, c));
    return s;
}

SparseMatrix SparseMatrix::block_diag(const SparseMatrix& a, const SparseMatrix& b) {
    SparseMatrix s(a.rows_ + b.rows_, a.cols_ + b.cols_);
    for (int r = 0; r < a.rows_; ++r) s.data_[r] = a.data_[r];
    for (int r = 0; r < b.rows_; ++r)
        for (const auto& [c, v] : b.data_[r]) s.data_[a.rows_ + r].emplace_back(a.cols_ + c, v);
    return s;
}

std::vector<std::tuple<int, int, Q>> SparseMatrix::triplets() const {
    std::vector<std::tuple<int, int, Q>> t;
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : data_[r]) t.emplace_back(r, c, v);
    return t;
}

SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b) { return a * b - b * a; }

std::size_t rank(const RationalMatrix& m) {
    const std::size_t R = m.rows(), C = m.cols();
    if (R == 0 || C == 0) return 0;
    std::vector<std::vector<mpz_class>> a(R, std::vector<mpz_class>(C));
    for (std::size_t r = 0; r < R; ++r) {
        mpz_class l = 1;
        for (std::size_t c = 0; c < C; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
        for (std::size_t c = 0; c < C; ++c) a[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
    }
    mpz_class prev = 1;
    std::size_t rk = 0;
    for (std::size_t col = 0; col < C && rk < R; ++col) {
        std::size_t p = rk;
        while (p < R && a[p][col] == 0) ++p;
        if (p == R) continue;
        std::swap(a[p], a[rk]);
        for (std::size_t r = rk + 1; r < R; ++r) {
            for (std::size_t c = col + 1; c < C; ++c) {
                a[r][c] = a[rk][col] * a[r][c] - a[r][col] * a[rk][c];
                mpz_divexact(a[r][c].get_mpz_t(), a[r][c].get_mpz_t(), prev.get_mpz_t());
            }
            a[r][col] = 0;
        }
        prev = a[rk][col];
        ++rk;
    }
    return rk;
}

std::optional<std::vector<Q>> solve_in_span(const std::vector<std::vector<Q>>& vectors,
                                            const std::vector<Q>& target) {
    for (const auto& v : vectors)
        if (v.size() != target.size()) throw DimensionMismatch("solve_in_span: length mismatch");
    std::vector<SparseVec> rows;
    rows.reserve(vectors.size());
    for (const auto& v : vectors) rows.push_back(sv::from_dense(v));
    SpanBasis basis(rows);
    auto c = basis.coordinates(sv::from_dense(target));
    if (!c) return std::nullopt;
    return sv::to_dense(*c, vectors.size());
}

std::vector<std::vector<Q>> nullspace(const RationalMatrix& m) {
    const std::size_t R = m.rows(), C = m.cols();
    RationalMatrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < C && row < R; ++col) {
        std::size_t p = row;
        while (p < R && a(p, col) == 0) ++p;
        if (p == R) continue;
        for (std::size_t c = 0; c < C; ++c) std::swap(a(p, c), a(row, c));
        Q inv = 1 / a(row, col);
        for (std::size_t c = 0; c < C; ++c) a(row, c) *= inv;
        for (std::size_t r = 0; r < R; ++r) {
            if (r == row || a(r, col) == 0) continue;
            Q f = a(r, col);
            for (std::size_t c = 0; c < C; ++c) a(r, c) -= f * a(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    std::vector<bool> is_pivot(C, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Q>> basis;
    for (std::size_t f = 0; f < C; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Q> v(C);
        v[f] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -a(k, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

SpanBasis::SpanBasis(const std::vector<SparseVec>& rows) {
    for (const auto& r : rows) push(r);
}

bool SpanBasis::push(const SparseVec& row) {
    SparseVec v = row;
    SparseVec t = sv::unit(static_cast<int>(inputs_));
    ++inputs_;
    std::vector<std::pair<std::size_t, Q>> hits;
    for (const auto& [i, x] : row) {
        auto it = where_.find(i);
        if (it != where_.end()) hits.emplace_back(it->second, x);
    }
    for (const auto& [k, x] : hits) {
        sv::axpy(v, -x, reduced_[k]);
        sv::axpy(t, -x, combo_[k]);
    }
    if (v.empty()) return false;
    const int p = v.front().first;
    const Q inv = 1 / v.front().second;
    v = sv::scaled(v, inv);
    t = sv::scaled(t, inv);
    for (std::size_t k = 0; k < reduced_.size(); ++k) {
        Q f = sv::get(reduced_[k], p);
        if (f == 0) continue;
        sv::axpy(reduced_[k], -f, v);
        sv::axpy(combo_[k], -f, t);
    }
    where_[p] = reduced_.size();
    pivot_.push_back(p);
    reduced_.push_back(std::move(v));
    combo_.push_back(std::move(t));
    return true;
}

std::optional<SparseVec> SpanBasis::coordinates(const SparseVec& target) const {
    SparseVec residual = target;
    SparseVec coeff;
    for (const auto& [i, x] : target) {
        auto it = where_.find(i);
        if (it == where_.end()) continue;
        sv::axpy(residual, -x, reduced_[it->second]);
        sv::axpy(coeff, x, combo_[it->second]);
    }
    if (!residual.empty()) return std::nullopt;
    return coeff;
}

bool SpanBasis::contains(const SparseVec& target) const { return coordinates(target).has_value(); }

}  // namespace ela
