#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nlsa/linalg.hpp"
#include "nlsa/super_basis.hpp"

namespace nlsa {

enum class ElemParity { Zero, Even, Odd, Mixed };

/// Parity of a coefficient vector: Even/Odd if the support lies in one
/// block, Mixed if it meets both, Zero if empty.
ElemParity element_parity(const Vec& v, const GradedDim& dims);

using BracketTable = std::map<CanonicalMonomial, Vec>;

/// table[tuple] += value after normalizing the tuple; the sign is applied
/// to the value and entries cancelling to zero are dropped.
void accumulate_bracket(BracketTable& table, std::span<const int> tuple, const Vec& value,
                        const GradedDim& dims);

/// A finite-dimensional n-Lie superalgebra presented by structure constants
/// on canonical monomials. Values on all other tuples follow from graded
/// antisymmetry, so antisymmetry holds by construction. Immutable.
class NLieSuperalgebra {
public:
    NLieSuperalgebra(int arity, GradedDim dims, BracketTable constants = {},
                     std::vector<std::string> basis_names = {});

    int arity() const { return arity_; }
    const GradedDim& dims() const { return dims_; }
    int dim() const { return dims_.total(); }
    const BracketTable& constants() const { return constants_; }
    const std::vector<std::string>& basis_names() const { return basis_names_; }

    /// Bracket of basis vectors e_{t_1},...,e_{t_n} (any order, repeats allowed).
    Vec bracket_basis(std::span<const int> tuple) const;

    /// Full multilinear expansion over the supports of the arguments.
    Vec bracket(std::span<const Vec> args) const;

    friend bool operator==(const NLieSuperalgebra&, const NLieSuperalgebra&) = default;

private:
    int arity_;
    GradedDim dims_;
    BracketTable constants_;
    std::vector<std::string> basis_names_;
};

struct GradingViolation {
    CanonicalMonomial mono;
    std::string describe(const GradedDim& dims) const;
};

struct JacobiViolation {
    CanonicalMonomial xs;  // (n-1)-tuple
    CanonicalMonomial ys;  // n-tuple
    Vec residual;
    std::string describe(const GradedDim& dims) const;
};

/// Empty iff every stored constant is homogeneous of the parity forced by
/// its monomial. Violations are data, not errors.
std::vector<GradingViolation> validate_grading(const NLieSuperalgebra& alg);

/// Checks the graded n-ary Jacobi identity on all pairs of a canonical
/// (n-1)-monomial and a canonical n-monomial; multilinearity plus the
/// antisymmetry normal form make basis-tuple checking sufficient.
std::vector<JacobiViolation> validate_jacobi(const NLieSuperalgebra& alg);

NLieSuperalgebra make_abelian(int arity, GradedDim dims);

/// Dimension n+1, single relation [e_1,...,e_n] = e_{n+1}.
NLieSuperalgebra make_heisenberg_nlie(int arity);

/// Dimension m > n, relations [e_1,...,e_{n-1},e_i] = e_{i+1} for n <= i <= m-1
/// (1-based); nilpotent of maximal class m-n+1.
NLieSuperalgebra make_filiform(int arity, int m);

/// Componentwise graded sum; brackets mixing the summands vanish.
NLieSuperalgebra direct_sum(const NLieSuperalgebra& a, const NLieSuperalgebra& b);

/// Even/odd dimensions of a graded subspace, or nullopt if s is not graded.
/// A subspace is graded iff each reduced basis row is homogeneous.
std::optional<GradedDim> graded_split(const Subspace& s, const GradedDim& ambient);

// --- serialization ---------------------------------------------------------

NLieSuperalgebra algebra_from_json(const std::string& text);
std::string algebra_to_json(const NLieSuperalgebra& alg);

NLieSuperalgebra load_algebra(const std::filesystem::path& file);
void save_algebra(const NLieSuperalgebra& alg, const std::filesystem::path& file);

}  // namespace nlsa
