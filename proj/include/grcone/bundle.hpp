#pragma once

#include "grcone/numeric.hpp"

#include <variant>
#include <vector>

namespace grcone {

/// One semistable subquotient of a Harder-Narasimhan filtration,
/// recorded by its numerical data.
struct HNBlock {
    int rank = 1; // >= 1
    Int degree;

    friend bool operator==(const HNBlock&, const HNBlock&) = default;
};

/// degree/rank, exact.
Rational slope(const HNBlock& b);

/// The numerical type of a Harder-Narasimhan filtration: a non-empty list
/// of blocks with strictly decreasing slopes. Immutable after construction;
/// a malformed filtration is rejected, never re-sorted.
class HNType {
  public:
    explicit HNType(std::vector<HNBlock> blocks);

    const std::vector<HNBlock>& blocks() const { return blocks_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    int total_rank() const;
    Int total_degree() const;

    friend bool operator==(const HNType&, const HNType&) = default;

  private:
    std::vector<HNBlock> blocks_;
};

/// A direct sum of powers of a fixed degree-one line bundle, encoded by the
/// exponent multiset. Exponents are kept in the order given; the canonical
/// descending order is computed on demand.
class SplitBundle {
  public:
    explicit SplitBundle(std::vector<Int> exponents);

    const std::vector<Int>& exponents() const { return exponents_; }
    std::vector<Int> sorted_exponents() const; // descending
    int rank() const { return static_cast<int>(exponents_.size()); }
    Int total_degree() const;

    friend bool operator==(const SplitBundle&, const SplitBundle&) = default;

  private:
    std::vector<Int> exponents_;
};

/// Positive-characteristic presentation: the HN type of the delta-fold
/// Frobenius pullback, at an exponent where the filtration has stabilized
/// (all subquotients strongly semistable). delta is trusted input.
class StrongHNData {
  public:
    StrongHNData(Int characteristic, int delta, HNType hn);

    const Int& characteristic() const { return characteristic_; }
    int delta() const { return delta_; }
    const HNType& hn() const { return hn_; }

    friend bool operator==(const StrongHNData&, const StrongHNData&) = default;

  private:
    Int characteristic_;
    int delta_;
    HNType hn_;
};

/// A vector bundle on a curve given by one of three numerical presentations.
/// Construction enforces rank >= 2: this is where a value starts denoting
/// the bundle E itself rather than derived data.
class BundleDescriptor {
  public:
    struct CharZero {
        HNType hn;
        friend bool operator==(const CharZero&, const CharZero&) = default;
    };
    struct Split {
        SplitBundle bundle;
        Int characteristic; // 0 or prime
        friend bool operator==(const Split&, const Split&) = default;
    };
    struct Strong {
        StrongHNData data;
        friend bool operator==(const Strong&, const Strong&) = default;
    };

    static BundleDescriptor char_zero(HNType hn);
    static BundleDescriptor split(SplitBundle bundle, Int characteristic);
    static BundleDescriptor strong(StrongHNData data);

    bool is_char_zero() const { return std::holds_alternative<CharZero>(value_); }
    bool is_split() const { return std::holds_alternative<Split>(value_); }
    bool is_strong() const { return std::holds_alternative<Strong>(value_); }

    const CharZero& as_char_zero() const { return std::get<CharZero>(value_); }
    const Split& as_split() const { return std::get<Split>(value_); }
    const Strong& as_strong() const { return std::get<Strong>(value_); }

    int total_rank() const;
    Int characteristic() const; // 0 in characteristic zero

    /// The boundary-slope invariant of the quotient Grassmannian in
    /// dimension r, dispatching on the presentation.
    Rational lambda(int r) const;

    friend bool operator==(const BundleDescriptor&, const BundleDescriptor&) = default;

  private:
    explicit BundleDescriptor(std::variant<CharZero, Split, Strong> value)
        : value_(std::move(value)) {}

    std::variant<CharZero, Split, Strong> value_;
};

/// HN type of a split bundle: isotypic groups of equal exponents, ordered by
/// strictly descending degree.
HNType hn_of_split(const SplitBundle& e);

/// Boundary slope in characteristic zero: with E_l the first filtration step
/// of rank >= r, this is deg E_{l-1} + (r - rk E_{l-1}) * slope(E_l/E_{l-1}).
/// Admits 1 <= r <= rank; the Grassmann range additionally needs r < rank.
Rational lambda_char0(const HNType& hn, int r);

/// Boundary slope in characteristic p: the char-zero formula on the
/// stabilized filtration, divided by p^delta. Independent of the chosen
/// delta (see shift_strong).
Rational lambda_strong(const StrongHNData& d, int r);

/// Frobenius pullback of a split bundle: every exponent scaled by p^j.
SplitBundle frobenius_split(const SplitBundle& e, const Int& p, int j);

/// Re-present StrongHNData at stabilization exponent delta + j; block
/// degrees scale by p^j, lambda is unchanged.
StrongHNData shift_strong(const StrongHNData& d, int j);

/// Dual bundle: exponents negated.
SplitBundle dual_split(const SplitBundle& e);

/// r-th exterior power of a split bundle: one exponent per r-element subset,
/// the subset sum. Subsets are enumerated in lexicographic order over the
/// descending exponent list.
SplitBundle exterior_power_split(const SplitBundle& e, int r);

} // namespace grcone
