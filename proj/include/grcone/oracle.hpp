#pragma once

#include "grcone/bundle.hpp"
#include "grcone/numeric.hpp"

#include <vector>

namespace grcone {

/// Outcome of the desk-scale effectivity check for one split bundle: the
/// formula and brute-force values of the boundary slope, and section counts
/// at and just beyond the boundary twist.
struct OracleReport {
    int r = 1;
    Rational lambda_formula;
    Rational lambda_oracle;
    Int h0_at_boundary;
    Int h0_beyond_boundary;
    bool verdict = false;

    friend bool operator==(const OracleReport&, const OracleReport&) = default;
};

/// Maximum r-element subset sum, by exhaustive enumeration. This is the
/// brute-force counterpart of lambda_char0 and deliberately shares no code
/// with it.
Int max_subset_sum(const std::vector<Int>& exponents, int r);
Int max_subset_sum(const SplitBundle& e, int r);

/// Sections of a degree-d line bundle on a genus-zero curve: max(0, d + 1).
Int h0_line_genus0(const Int& degree);

/// Sections of the tautological bundle twisted by a degree-b pullback, on
/// the genus-zero split model: sums h0 over the degrees of the rank-r
/// quotient determinants.
Int h0_taut_twist(const SplitBundle& e, int r, const Int& twist);

/// Checks that the boundary class is effective and tight: the formula and
/// oracle slopes agree, h0 at twist -lambda is positive, and h0 at twist
/// -(lambda + 1) vanishes.
OracleReport verify_theorem_split(const SplitBundle& e, int r);

} // namespace grcone
