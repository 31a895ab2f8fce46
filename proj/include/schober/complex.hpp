#pragma once

// Bounded cochain complexes of based finite-dimensional spaces, with the
// differential raising degree by one.  Conventions used throughout:
//   shift      (c[n])^i = c^{n+i},  d_{c[n]} = (-1)^n d_c
//   cone(f)^n  = src^{n+1} (+) tgt^n,  d = [[-d_src, 0], [f, d_tgt]]
//   tensor     d(a (x) b) = da (x) b + (-1)^{|a|} a (x) db
//   dual       (c^v)^n = (c^{-n})^v,  (d l)(x) = -(-1)^{|l|} l(dx)

#include "schober/matrix.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace schober {

class Complex {
  public:
    Complex() : field_(), lo_(0) {}
    Complex(Field f, int lo, std::vector<std::vector<std::string>> labels);

    static Complex zero(Field f) { return Complex(f, 0, {}); }
    // One-dimensional space in the given degree.
    static Complex point(Field f, int deg = 0, const std::string& label = "e");

    Field field() const { return field_; }
    int lo() const { return lo_; }
    int hi() const { return lo_ + (int)labels_.size() - 1; }  // lo-1 when empty
    bool empty_window() const { return labels_.empty(); }

    std::size_t dim(int n) const;
    std::size_t total_dim() const;
    const std::vector<std::string>& labels(int n) const;
    // Differential out of degree n, shaped dim(n+1) x dim(n).
    Matrix d(int n) const;
    void set_d(int n, Matrix m);

    bool d_squared_zero() const;
    void require_valid(const std::string& who) const;

    // Dimension of H^n for every n in the window (keys with zero dim kept out).
    std::map<int, std::size_t> homology_dims() const;

    Complex shifted(int n) const;
    Complex dual() const;
    Complex tensor(const Complex& o) const;
    Complex direct_sum(const Complex& o) const;

    bool same_shape(const Complex& o) const;

  private:
    Field field_;
    int lo_;
    std::vector<std::vector<std::string>> labels_;
    std::vector<Matrix> d_;  // d_[k] : degree lo_+k -> lo_+k+1
};

// An element of fixed degree, as a coordinate column in C^deg.
struct Elt {
    int deg = 0;
    Matrix v;  // dim(deg) x 1

    bool is_zero() const { return v.is_zero(); }
};

// Degree-r map of complexes: components f_n : src^n -> tgt^{n+r} with
// d f = (-1)^r f d.
class ChainMap {
  public:
    ChainMap() = default;
    ChainMap(Complex src, Complex tgt, int deg);

    static ChainMap zero(const Complex& src, const Complex& tgt, int deg = 0);
    static ChainMap identity(const Complex& c);

    const Complex& src() const { return src_; }
    const Complex& tgt() const { return tgt_; }
    int deg() const { return deg_; }

    Matrix component(int n) const;  // dim(tgt, n+deg) x dim(src, n)
    void set_component(int n, Matrix m);

    bool is_chain_map() const;
    ChainMap compose(const ChainMap& inner) const;  // this o inner
    ChainMap operator+(const ChainMap& o) const;
    ChainMap operator-(const ChainMap& o) const;
    ChainMap operator*(const Scalar& s) const;
    Elt apply(const Elt& e) const;

    // Transpose components into a map dual(tgt) -> dual(src) (degree 0 maps).
    ChainMap dual() const;
    ChainMap shifted(int n) const;  // src[n] -> tgt[n], same components

  private:
    Complex src_, tgt_;
    int deg_ = 0;
    std::map<int, Matrix> comps_;
};

// h_n : src^n -> tgt^{n-1} witnessing f - g = d h + h d for degree-0 f, g.
struct Homotopy {
    Complex src, tgt;
    std::map<int, Matrix> comps;

    Matrix component(int n) const;
};

struct Cone {
    Complex cx;
    ChainMap from_tgt;   // tgt -> cone
    ChainMap to_src_s1;  // cone -> src[1]
};

Cone cone(const ChainMap& f);

// Cached homology of a complex: dimensions, representative cycles, and
// coordinates of cycles in the chosen basis of H.
class HomologyData {
  public:
    explicit HomologyData(const Complex& c);

    const Complex& complex() const { return cx_; }
    std::size_t dim(int n) const;
    std::map<int, std::size_t> dims() const;
    // Columns are representative cycles spanning H^n.
    Matrix representatives(int n) const;
    // Coordinates of a cycle in H^n; throws if v is not a cycle.
    Matrix coords(int n, const Matrix& v) const;

  private:
    Complex cx_;
    std::map<int, Matrix> reps_;
    std::map<int, Matrix> bnd_;
};

// Matrices of the induced map H(src) -> H(tgt) per degree.
std::map<int, Matrix> homology_map(const ChainMap& f);

struct QuasiIsoReport {
    bool verdict = false;
    std::map<int, Matrix> induced;     // homology matrices per degree
    std::optional<int> failure_degree;
};

QuasiIsoReport is_quasi_iso(const ChainMap& f);

struct NullhomotopyResult {
    std::optional<Homotopy> homotopy;
    // When absent: degree and H-coordinates of the obstructing class.
    std::optional<int> obstruction_degree;
    Matrix obstruction_class;
};

// Searches h with f = d h + h d.  Succeeds iff the linear system is
// consistent; the induced homology map vanishing is necessary.
NullhomotopyResult find_nullhomotopy(const ChainMap& f);

// Euler characteristic (alternating sum of dimensions).
long long euler_characteristic(const Complex& c);

}  // namespace schober
