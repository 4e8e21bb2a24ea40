#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "nlsa/errors.hpp"

namespace nlsa {

/// Graded dimension (m|k). Basis convention: indices 0..m-1 are even,
/// m..m+k-1 are odd, so the parity of an index is derivable from the
/// index alone.
struct GradedDim {
    int even = 0;
    int odd = 0;

    int total() const { return even + odd; }
    friend bool operator==(const GradedDim&, const GradedDim&) = default;
};

/// 0 for even indices, 1 for odd. Throws InvalidIndex when out of range.
int parity(int index, const GradedDim& dims);

/// A sorted bracket monomial: strictly increasing even indices followed by
/// weakly increasing odd indices. Even indices never repeat; odd ones may.
struct CanonicalMonomial {
    std::vector<int> idx;

    int arity() const { return static_cast<int>(idx.size()); }
    auto operator<=>(const CanonicalMonomial&) const = default;
};

int total_parity(const CanonicalMonomial& m, const GradedDim& dims);

bool is_canonical(std::span<const int> tuple, const GradedDim& dims);

/// Outcome of sorting a tuple into canonical order. sign == 0 means the
/// monomial vanishes identically (a repeated even index); mono is empty then.
struct Normalized {
    int sign = 0;
    CanonicalMonomial mono;
};

/// Sort a tuple by adjacent transpositions, each swap of entries a,b
/// multiplying the sign by -(-1)^{|a||b|}. Swapping two equal odd indices
/// contributes +1, so such tuples survive.
Normalized normalize_tuple(std::vector<int> tuple, const GradedDim& dims);

/// All canonical monomials of the given arity, in lexicographic order.
std::vector<CanonicalMonomial> enumerate_monomials(int arity, const GradedDim& dims);

/// "e1".."em" for even indices, "y1".."yk" for odd ones.
std::string index_label(int index, const GradedDim& dims);
std::string monomial_label(const CanonicalMonomial& m, const GradedDim& dims);

}  // namespace nlsa
