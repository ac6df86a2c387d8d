#include "quivinv/polyring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace quivinv {

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    long long r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

std::string rat_str(const Rat& c) {
    std::ostringstream os;
    os << numerator(c);
    if (denominator(c) != 1) os << "/" << denominator(c);
    return os.str();
}

std::string VarId::str() const {
    std::ostringstream os;
    os << (kind == Kind::Coordinate ? 'a' : 'u') << owner << '[' << row << ',' << col << ']';
    return os.str();
}

Monomial Monomial::var(VarId v, int exp) {
    Monomial m;
    if (exp < 0) throw std::invalid_argument("negative exponent");
    if (exp > 0) {
        m.factors_.emplace_back(v, exp);
        m.degree_ = exp;
    }
    return m;
}

Monomial Monomial::from_factors(std::vector<std::pair<VarId, int>> factors) {
    std::sort(factors.begin(), factors.end());
    Monomial m;
    for (const auto& [v, e] : factors) {
        if (e < 0) throw std::invalid_argument("negative exponent");
        if (e == 0) continue;
        if (!m.factors_.empty() && m.factors_.back().first == v)
            m.factors_.back().second += e;
        else
            m.factors_.emplace_back(v, e);
        m.degree_ += e;
    }
    return m;
}

int Monomial::exponent(VarId v) const {
    for (const auto& [w, e] : factors_)
        if (w == v) return e;
    return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.factors_.reserve(factors_.size() + o.factors_.size());
    auto a = factors_.begin(), b = o.factors_.begin();
    while (a != factors_.end() && b != o.factors_.end()) {
        if (a->first < b->first)
            r.factors_.push_back(*a++);
        else if (b->first < a->first)
            r.factors_.push_back(*b++);
        else {
            r.factors_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    r.factors_.insert(r.factors_.end(), a, factors_.end());
    r.factors_.insert(r.factors_.end(), b, o.factors_.end());
    r.degree_ = degree_ + o.degree_;
    return r;
}

Monomial Monomial::divide_once(VarId v) const {
    Monomial r;
    r.factors_.reserve(factors_.size());
    bool found = false;
    for (const auto& [w, e] : factors_) {
        if (w == v) {
            found = true;
            if (e > 1) r.factors_.emplace_back(w, e - 1);
        } else {
            r.factors_.emplace_back(w, e);
        }
    }
    if (!found) throw std::invalid_argument("monomial not divisible by variable");
    r.degree_ = degree_ - 1;
    return r;
}

bool Monomial::operator<(const Monomial& o) const {
    auto a = factors_.begin(), b = o.factors_.begin();
    while (a != factors_.end() && b != o.factors_.end()) {
        if (a->first < b->first) return false;  // this has positive exp on earlier var
        if (b->first < a->first) return true;
        if (a->second != b->second) return a->second < b->second;
        ++a;
        ++b;
    }
    if (a != factors_.end()) return false;
    return b != o.factors_.end();
}

std::string Monomial::str() const {
    if (factors_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, e] : factors_) {
        if (!first) os << '*';
        first = false;
        os << v.str();
        if (e != 1) os << '^' << e;
    }
    return os.str();
}

Polynomial::Polynomial(const Rat& c) {
    if (c != 0) terms_.emplace(Monomial{}, c);
}

Polynomial Polynomial::variable(VarId v) { return term(Rat(1), Monomial::var(v)); }

Polynomial Polynomial::term(const Rat& c, const Monomial& m) {
    Polynomial p;
    if (c != 0) p.terms_.emplace(m, c);
    return p;
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

Rat Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return false;
    return true;
}

std::vector<VarId> Polynomial::variables() const {
    std::vector<VarId> vs;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.factors()) vs.push_back(v);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

Polynomial Polynomial::coefficient_of(VarId v, int k) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
        if (m.exponent(v) != k) continue;
        Monomial q = m;
        for (int i = 0; i < k; ++i) q = q.divide_once(v);
        r.add_term(q, c);
    }
    return r;
}

void Polynomial::add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    r += o;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r = *this;
    r -= o;
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial r;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
    return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
}

Polynomial Polynomial::operator*(const Rat& c) const {
    Polynomial r;
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

Polynomial Polynomial::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative power");
    Polynomial r(1L);
    for (int i = 0; i < e; ++i) r *= *this;
    return r;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rat a = c;
        if (first) {
            if (a < 0) {
                os << '-';
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (m.is_one()) {
            os << rat_str(a);
        } else {
            if (a != 1) os << rat_str(a) << '*';
            os << m.str();
        }
    }
    return os.str();
}

void Substitution::set(VarId v, Polynomial image) { images_[v] = std::move(image); }

const Polynomial* Substitution::image(VarId v) const {
    auto it = images_.find(v);
    return it == images_.end() ? nullptr : &it->second;
}

Polynomial Substitution::operator()(const Polynomial& f) const {
    Polynomial out;
    for (const auto& [m, c] : f.terms_) {
        // untouched factors stay a monomial; touched ones expand
        Monomial fixed;
        Polynomial expanded(1L);
        bool any = false;
        for (const auto& [v, e] : m.factors()) {
            if (const Polynomial* img = image(v)) {
                expanded *= img->pow(e);
                any = true;
            } else {
                fixed = fixed * Monomial::var(v, e);
            }
        }
        if (!any) {
            out.add_term(fixed, c);
        } else {
            for (const auto& [m2, c2] : expanded.terms_) out.add_term(fixed * m2, c * c2);
        }
    }
    return out;
}

void Derivation::set(VarId v, Polynomial image) {
    if (image.is_zero())
        images_.erase(v);
    else
        images_[v] = std::move(image);
}

Polynomial Derivation::operator()(const Polynomial& f) const {
    Polynomial out;
    for (const auto& [m, c] : f.terms_) {
        for (const auto& [v, e] : m.factors()) {
            auto it = images_.find(v);
            if (it == images_.end()) continue;
            Monomial rest = m.divide_once(v);
            Rat k = c * e;
            for (const auto& [m2, c2] : it->second.terms_) out.add_term(rest * m2, k * c2);
        }
    }
    return out;
}

PolyMatrix::PolyMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(rows * cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("bad matrix shape");
}

PolyMatrix PolyMatrix::identity(int n) {
    PolyMatrix m(n, n);
    for (int i = 1; i <= n; ++i) m.at(i, i) = Polynomial(1L);
    return m;
}

Polynomial& PolyMatrix::at(int r, int c) {
    if (r < 1 || r > rows_ || c < 1 || c > cols_) throw std::out_of_range("matrix index");
    return e_[(r - 1) * cols_ + (c - 1)];
}

const Polynomial& PolyMatrix::at(int r, int c) const {
    if (r < 1 || r > rows_ || c < 1 || c > cols_) throw std::out_of_range("matrix index");
    return e_[(r - 1) * cols_ + (c - 1)];
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix dimension mismatch");
    PolyMatrix r(rows_, o.cols_);
    for (int i = 1; i <= rows_; ++i)
        for (int k = 1; k <= o.cols_; ++k) {
            Polynomial s;
            for (int j = 1; j <= cols_; ++j) s += at(i, j) * o.at(j, k);
            r.at(i, k) = std::move(s);
        }
    return r;
}

namespace {

Polynomial det_recurse(const PolyMatrix& a, const std::vector<int>& rows,
                       const std::vector<int>& cols) {
    const std::size_t n = rows.size();
    if (n == 0) return Polynomial(1L);
    if (n == 1) return a.at(rows[0], cols[0]);
    Polynomial det;
    std::vector<int> sub(rows.begin() + 1, rows.end());
    std::vector<int> subc;
    subc.reserve(n - 1);
    for (std::size_t j = 0; j < n; ++j) {
        const Polynomial& pivot = a.at(rows[0], cols[j]);
        if (pivot.is_zero()) continue;
        subc.clear();
        for (std::size_t k = 0; k < n; ++k)
            if (k != j) subc.push_back(cols[k]);
        Polynomial minor = det_recurse(a, sub, subc);
        if (j % 2 == 0)
            det += pivot * minor;
        else
            det -= pivot * minor;
    }
    return det;
}

void check_indices(const std::vector<int>& idx, int limit, const char* what) {
    std::vector<int> s = idx;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw std::invalid_argument(std::string("repeated ") + what + " index");
    for (int i : idx)
        if (i < 1 || i > limit)
            throw std::invalid_argument(std::string(what) + " index out of range");
}

} // namespace

Polynomial det_of_minor(const PolyMatrix& a, const std::vector<int>& rows,
                        const std::vector<int>& cols) {
    if (rows.size() != cols.size())
        throw std::invalid_argument("row and column selections differ in length");
    check_indices(rows, a.rows(), "row");
    check_indices(cols, a.cols(), "column");
    return det_recurse(a, rows, cols);
}

std::vector<Monomial> monomials_of_degree(const std::vector<VarId>& vars, int d) {
    if (d < 0) throw std::invalid_argument("negative degree");
    std::vector<Monomial> out;
    if (d == 0) {
        out.emplace_back();
        return out;
    }
    if (vars.empty()) return out;
    // multisets of variable indices, nondecreasing; lex order of index
    // tuples = descending lex order of monomials
    std::vector<int> pick(d, 0);
    const int nv = static_cast<int>(vars.size());
    while (true) {
        std::vector<std::pair<VarId, int>> fs;
        for (int i : pick) {
            if (!fs.empty() && fs.back().first == vars[i])
                fs.back().second++;
            else
                fs.emplace_back(vars[i], 1);
        }
        out.push_back(Monomial::from_factors(std::move(fs)));
        int pos = d - 1;
        while (pos >= 0 && pick[pos] == nv - 1) --pos;
        if (pos < 0) break;
        int v = pick[pos] + 1;
        for (int k = pos; k < d; ++k) pick[k] = v;
    }
    return out;
}

std::vector<Monomial> monomials_up_to_degree(const std::vector<VarId>& vars, int d) {
    std::vector<Monomial> out;
    for (int e = 0; e <= d; ++e) {
        auto part = monomials_of_degree(vars, e);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

} // namespace quivinv
