#include "grcone/bundle.hpp"

#include "grcone/errors.hpp"
#include "subsets.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <utility>

namespace grcone {

namespace {

std::string block_label(std::size_t index_zero_based) {
    return "block " + std::to_string(index_zero_based + 1);
}

void require_rank_at_least_two(int total_rank) {
    if (total_rank < 2) {
        throw ValidationError("bundle must have rank at least two, got rank " +
                              std::to_string(total_rank));
    }
}

void require_char_zero_or_prime(const Int& p) {
    if (p != 0 && !is_prime(p)) {
        throw ValidationError("characteristic must be 0 or a prime, got " + p.str());
    }
}

} // namespace

Rational slope(const HNBlock& b) { return make_rational(b.degree, b.rank); }

HNType::HNType(std::vector<HNBlock> blocks) : blocks_(std::move(blocks)) {
    if (blocks_.empty()) {
        throw ValidationError("HN type must contain at least one block");
    }
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (blocks_[i].rank < 1) {
            throw ValidationError(block_label(i) + ": rank must be positive, got " +
                                  std::to_string(blocks_[i].rank));
        }
    }
    for (std::size_t i = 1; i < blocks_.size(); ++i) {
        const Rational prev = slope(blocks_[i - 1]);
        const Rational cur = slope(blocks_[i]);
        if (prev <= cur) {
            throw ValidationError("blocks: slopes must be strictly decreasing, but " +
                                  block_label(i - 1) + " has slope " + format_rational(prev) +
                                  " and " + block_label(i) + " has slope " +
                                  format_rational(cur));
        }
    }
}

int HNType::total_rank() const {
    int total = 0;
    for (const auto& b : blocks_) {
        total += b.rank;
    }
    return total;
}

Int HNType::total_degree() const {
    Int total = 0;
    for (const auto& b : blocks_) {
        total += b.degree;
    }
    return total;
}

SplitBundle::SplitBundle(std::vector<Int> exponents) : exponents_(std::move(exponents)) {
    if (exponents_.empty()) {
        throw ValidationError("split bundle must have at least one exponent");
    }
}

std::vector<Int> SplitBundle::sorted_exponents() const {
    std::vector<Int> sorted = exponents_;
    std::stable_sort(sorted.begin(), sorted.end(), std::greater<Int>());
    return sorted;
}

Int SplitBundle::total_degree() const {
    Int total = 0;
    for (const auto& a : exponents_) {
        total += a;
    }
    return total;
}

StrongHNData::StrongHNData(Int characteristic, int delta, HNType hn)
    : characteristic_(std::move(characteristic)), delta_(delta), hn_(std::move(hn)) {
    if (!is_prime(characteristic_)) {
        throw ValidationError("characteristic must be prime, got " + characteristic_.str());
    }
    if (delta_ < 0) {
        throw ValidationError("delta must be non-negative, got " + std::to_string(delta_));
    }
}

BundleDescriptor BundleDescriptor::char_zero(HNType hn) {
    require_rank_at_least_two(hn.total_rank());
    return BundleDescriptor(CharZero{std::move(hn)});
}

BundleDescriptor BundleDescriptor::split(SplitBundle bundle, Int characteristic) {
    require_rank_at_least_two(bundle.rank());
    require_char_zero_or_prime(characteristic);
    return BundleDescriptor(Split{std::move(bundle), std::move(characteristic)});
}

BundleDescriptor BundleDescriptor::strong(StrongHNData data) {
    require_rank_at_least_two(data.hn().total_rank());
    return BundleDescriptor(Strong{std::move(data)});
}

int BundleDescriptor::total_rank() const {
    if (is_char_zero()) {
        return as_char_zero().hn.total_rank();
    }
    if (is_split()) {
        return as_split().bundle.rank();
    }
    return as_strong().data.hn().total_rank();
}

Int BundleDescriptor::characteristic() const {
    if (is_char_zero()) {
        return 0;
    }
    if (is_split()) {
        return as_split().characteristic;
    }
    return as_strong().data.characteristic();
}

Rational BundleDescriptor::lambda(int r) const {
    if (is_char_zero()) {
        return lambda_char0(as_char_zero().hn, r);
    }
    if (is_split()) {
        // Each isotypic summand is strongly semistable, so the filtration is
        // already stable and the characteristic drops out (delta = 0).
        return lambda_char0(hn_of_split(as_split().bundle), r);
    }
    return lambda_strong(as_strong().data, r);
}

HNType hn_of_split(const SplitBundle& e) {
    const std::vector<Int> sorted = e.sorted_exponents();
    std::vector<HNBlock> blocks;
    std::size_t i = 0;
    while (i < sorted.size()) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) {
            ++j;
        }
        const int multiplicity = static_cast<int>(j - i);
        blocks.push_back(HNBlock{multiplicity, sorted[i] * multiplicity});
        i = j;
    }
    return HNType(std::move(blocks));
}

Rational lambda_char0(const HNType& hn, int r) {
    const int total = hn.total_rank();
    if (r < 1 || r > total) {
        throw RangeError("r = " + std::to_string(r) + " is outside 1.." +
                         std::to_string(total));
    }
    Int degree_below = 0;
    int rank_below = 0;
    for (const auto& block : hn.blocks()) {
        if (r <= rank_below + block.rank) {
            return Rational(degree_below) + Rational(r - rank_below) * slope(block);
        }
        rank_below += block.rank;
        degree_below += block.degree;
    }
    throw Error("unreachable: r within total rank but no block found");
}

Rational lambda_strong(const StrongHNData& d, int r) {
    const Rational upstairs = lambda_char0(d.hn(), r);
    const Int scale = pow_int(d.characteristic(), static_cast<unsigned>(d.delta()));
    return upstairs / Rational(scale);
}

SplitBundle frobenius_split(const SplitBundle& e, const Int& p, int j) {
    if (!is_prime(p)) {
        throw ValidationError("characteristic must be prime, got " + p.str());
    }
    if (j < 0) {
        throw RangeError("Frobenius iteration count must be non-negative, got " +
                         std::to_string(j));
    }
    const Int factor = pow_int(p, static_cast<unsigned>(j));
    std::vector<Int> exponents;
    exponents.reserve(e.exponents().size());
    for (const auto& a : e.exponents()) {
        exponents.push_back(a * factor);
    }
    return SplitBundle(std::move(exponents));
}

StrongHNData shift_strong(const StrongHNData& d, int j) {
    if (j < 0) {
        throw RangeError("shift amount must be non-negative, got " + std::to_string(j));
    }
    if (static_cast<long long>(d.delta()) + j > std::numeric_limits<int>::max()) {
        throw RangeError("shifted delta exceeds the supported range");
    }
    const Int factor = pow_int(d.characteristic(), static_cast<unsigned>(j));
    std::vector<HNBlock> blocks;
    blocks.reserve(d.hn().blocks().size());
    for (const auto& block : d.hn().blocks()) {
        blocks.push_back(HNBlock{block.rank, block.degree * factor});
    }
    return StrongHNData(d.characteristic(), d.delta() + j, HNType(std::move(blocks)));
}

SplitBundle dual_split(const SplitBundle& e) {
    std::vector<Int> exponents;
    exponents.reserve(e.exponents().size());
    for (const auto& a : e.exponents()) {
        exponents.push_back(-a);
    }
    return SplitBundle(std::move(exponents));
}

SplitBundle exterior_power_split(const SplitBundle& e, int r) {
    const int n = e.rank();
    if (r < 1 || r > n) {
        throw RangeError("exterior power r = " + std::to_string(r) + " is outside 1.." +
                         std::to_string(n));
    }
    const std::vector<Int> sorted = e.sorted_exponents();
    std::vector<Int> sums;
    for_each_subset_sum(sorted, r, [&](const Int& sum) { sums.push_back(sum); });
    return SplitBundle(std::move(sums));
}

} // namespace grcone
