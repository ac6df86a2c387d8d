#ifndef QUIVINV_POLYRING_HPP
#define QUIVINV_POLYRING_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace quivinv {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

long long binomial(int n, int k);

/// A ring generator. Coordinate variables are entries of the generic
/// matrix attached to an arrow; parameter variables are entries of a
/// group element (the u of a one-parameter subgroup, or the b_ij of a
/// generic upper-triangular matrix, so row <= col).
///
/// Variables are totally ordered by (kind, owner, row, col); coordinates
/// sort before parameters. Monomial canonical forms rest on this order.
struct VarId {
    enum class Kind : std::uint8_t { Coordinate = 0, Parameter = 1 };

    Kind kind = Kind::Coordinate;
    std::int32_t owner = 0; // arrow index (coordinate) or vertex id (parameter)
    std::int32_t row = 1;
    std::int32_t col = 1;

    static VarId coord(int arrow, int row, int col) {
        return VarId{Kind::Coordinate, arrow, row, col};
    }
    static VarId param(int vertex, int row, int col) {
        return VarId{Kind::Parameter, vertex, row, col};
    }

    auto operator<=>(const VarId&) const = default;

    /// Canonical text: a<owner>[r,c] for coordinates, u<owner>[r,c] for parameters.
    std::string str() const;
};

/// Product of variable powers in canonical form: factors sorted by VarId,
/// no zero exponents stored.
class Monomial {
public:
    Monomial() = default; // the monomial 1

    static Monomial var(VarId v, int exp = 1);
    static Monomial from_factors(std::vector<std::pair<VarId, int>> factors);

    int degree() const { return degree_; }
    bool is_one() const { return factors_.empty(); }
    int exponent(VarId v) const;
    const std::vector<std::pair<VarId, int>>& factors() const { return factors_; }

    Monomial operator*(const Monomial& o) const;
    /// Quotient with one power of v removed; exponent must be positive.
    Monomial divide_once(VarId v) const;

    bool operator==(const Monomial& o) const { return factors_ == o.factors_; }
    /// Lexicographic: compare exponents along increasing VarId; first
    /// difference decides, larger exponent sorts later.
    bool operator<(const Monomial& o) const;

    std::string str() const;

private:
    std::vector<std::pair<VarId, int>> factors_;
    int degree_ = 0;
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Canonical form: map keyed by monomial order, zero coefficients erased,
/// so equal polynomials have identical stored form.
class Polynomial {
public:
    Polynomial() = default; // zero
    Polynomial(long v) { *this = Polynomial(Rat(v)); }
    explicit Polynomial(const Rat& c);

    static Polynomial variable(VarId v);
    static Polynomial term(const Rat& c, const Monomial& m);

    bool is_zero() const { return terms_.empty(); }
    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Rat>& terms() const { return terms_; }
    Rat coeff(const Monomial& m) const;
    bool is_homogeneous() const;

    std::vector<VarId> variables() const;

    /// Terms whose exponent of v equals k, with v^k divided out.
    Polynomial coefficient_of(VarId v, int k) const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rat& c) const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial pow(int e) const;

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

    /// Canonical text form "c1*v[r,c]^e*... + ...", terms in descending
    /// monomial order, rationals as p/q.
    std::string str() const;

private:
    void add_term(const Monomial& m, const Rat& c);
    std::map<Monomial, Rat> terms_;

    friend class Substitution;
    friend class Derivation;
};

inline Polynomial operator*(const Rat& c, const Polynomial& p) { return p * c; }

/// Ring endomorphism determined by images of generators; variables
/// without an explicit image map to themselves.
class Substitution {
public:
    void set(VarId v, Polynomial image);
    const Polynomial* image(VarId v) const;
    bool touches(VarId v) const { return images_.count(v) != 0; }
    const std::map<VarId, Polynomial>& images() const { return images_; }

    Polynomial operator()(const Polynomial& f) const;

private:
    std::map<VarId, Polynomial> images_;
};

inline Polynomial substitute(const Polynomial& f, const Substitution& s) { return s(f); }

/// Derivation of the polynomial ring: determined by images of generators
/// (unmapped generators go to zero), extended by linearity and Leibniz.
class Derivation {
public:
    void set(VarId v, Polynomial image);
    const std::map<VarId, Polynomial>& images() const { return images_; }

    Polynomial operator()(const Polynomial& f) const;

private:
    std::map<VarId, Polynomial> images_;
};

inline Polynomial apply_derivation(const Derivation& d, const Polynomial& f) { return d(f); }

/// Dense matrix of polynomials. Indices are 1-based throughout, matching
/// the row/column conventions of the math this implements.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(int rows, int cols);
    static PolyMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Polynomial& at(int r, int c);
    const Polynomial& at(int r, int c) const;

    PolyMatrix operator*(const PolyMatrix& o) const;
    bool operator==(const PolyMatrix& o) const = default;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Polynomial> e_;
};

/// Determinant of the square submatrix selected by equal-length lists of
/// distinct 1-based row and column indices, by cofactor expansion.
/// The empty selection yields 1.
Polynomial det_of_minor(const PolyMatrix& a, const std::vector<int>& rows,
                        const std::vector<int>& cols);

/// All monomials of total degree exactly d in the given variables,
/// in canonical (descending lexicographic) order.
std::vector<Monomial> monomials_of_degree(const std::vector<VarId>& vars, int d);

/// All monomials of total degree <= d, ascending by degree, canonical
/// order within each degree. Count is C(|vars| + d, d).
std::vector<Monomial> monomials_up_to_degree(const std::vector<VarId>& vars, int d);

std::string rat_str(const Rat& c);

} // namespace quivinv

#endif
