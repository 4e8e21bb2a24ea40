#pragma once

#include <optional>
#include <utility>

#include "nlsa/algebra.hpp"

namespace nlsa {

/// Span of all structure constants; a graded ideal.
Subspace derived_subalgebra(const NLieSuperalgebra& alg);

/// Lower central series L^1 = L, L^{i+1} = [L^i, L, ..., L].
struct SeriesReport {
    std::vector<Subspace> terms;            // L^1, L^2, ... up to 0 or stabilization
    std::optional<int> nilpotency_class;    // c with L^{c+1} = 0, L^c != 0; 0 for the zero algebra

    bool nilpotent() const { return nilpotency_class.has_value(); }
    /// dim L^i for any i >= 1 (terms repeat once the series stabilizes).
    int term_dim(int i) const;
};

SeriesReport lower_central_series(const NLieSuperalgebra& alg);

/// Elements bracketing to zero against every (n-1)-tuple; a graded ideal.
Subspace center(const NLieSuperalgebra& alg);

/// Matrix of x -> [x_1,...,x_{n-1},x] in the algebra basis.
Matrix ad_map(const NLieSuperalgebra& alg, std::span<const Vec> xs);

/// True iff [s, e_{j_2},...,e_{j_n}] lies in s for every basis vector of s.
/// Throws ParameterError when s is not graded.
bool is_graded_ideal(const NLieSuperalgebra& alg, const Subspace& s);

/// Quotient by a graded ideal. The quotient basis is the set of coordinates
/// outside the ideal's pivot set, keeping the even-before-odd convention.
NLieSuperalgebra quotient(const NLieSuperalgebra& alg, const Subspace& ideal);

/// Graded size (s, t) of a minimal homogeneous generating set: dims of L/L^2
/// when nilpotent, the full graded dimension otherwise.
std::pair<int, int> minimal_generators(const NLieSuperalgebra& alg);

/// Maximal-class nilpotency predicate for purely even algebras: m >= n and
/// dim L^i = m-n-i+2 for 2 <= i <= m-n+2. Throws NotApplicable when the odd
/// dimension is nonzero.
bool is_filiform(const NLieSuperalgebra& alg);

}  // namespace nlsa
