#include "grcone/oracle.hpp"

#include "grcone/errors.hpp"

#include <string>
#include <vector>

namespace grcone {

namespace {

void require_subset_size(int r, int n) {
    if (r < 1 || r > n) {
        throw RangeError("subset size r = " + std::to_string(r) + " is outside 1.." +
                         std::to_string(n));
    }
}

// Enumerates every r-element index subset of {0, ..., n-1} in lexicographic
// order and folds the corresponding exponent sums with `fold`. Kept local so
// the oracle stays independent of the library's other enumeration code.
template <typename Fold>
void enumerate_sums(const std::vector<Int>& values, int r, Fold&& fold) {
    const int n = static_cast<int>(values.size());
    std::vector<int> pick(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) {
        pick[static_cast<std::size_t>(i)] = i;
    }
    while (true) {
        Int sum = 0;
        for (int i : pick) {
            sum += values[static_cast<std::size_t>(i)];
        }
        fold(sum);

        int pos = r - 1;
        while (pos >= 0 && pick[static_cast<std::size_t>(pos)] == n - r + pos) {
            --pos;
        }
        if (pos < 0) {
            return;
        }
        ++pick[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < r; ++i) {
            pick[static_cast<std::size_t>(i)] = pick[static_cast<std::size_t>(i - 1)] + 1;
        }
    }
}

} // namespace

Int max_subset_sum(const std::vector<Int>& exponents, int r) {
    require_subset_size(r, static_cast<int>(exponents.size()));
    bool first = true;
    Int best = 0;
    enumerate_sums(exponents, r, [&](const Int& sum) {
        if (first || sum > best) {
            best = sum;
            first = false;
        }
    });
    return best;
}

Int max_subset_sum(const SplitBundle& e, int r) {
    return max_subset_sum(e.sorted_exponents(), r);
}

Int h0_line_genus0(const Int& degree) {
    if (degree < 0) {
        return 0;
    }
    return degree + 1;
}

Int h0_taut_twist(const SplitBundle& e, int r, const Int& twist) {
    const std::vector<Int> sorted = e.sorted_exponents();
    require_subset_size(r, static_cast<int>(sorted.size()));
    Int total = 0;
    enumerate_sums(sorted, r, [&](const Int& sum) { total += h0_line_genus0(sum + twist); });
    return total;
}

OracleReport verify_theorem_split(const SplitBundle& e, int r) {
    const int n = e.rank();
    if (r < 1 || r > n - 1) {
        throw RangeError("r = " + std::to_string(r) + " is outside the Grassmann range 1.." +
                         std::to_string(n - 1));
    }

    OracleReport report;
    report.r = r;
    report.lambda_formula = lambda_char0(hn_of_split(e), r);
    const Int lambda = max_subset_sum(e, r);
    report.lambda_oracle = Rational(lambda);
    // For split bundles the boundary slope is an integer, so the boundary
    // class itself is a lattice point whose effectivity h0 can decide.
    report.h0_at_boundary = h0_taut_twist(e, r, -lambda);
    report.h0_beyond_boundary = h0_taut_twist(e, r, -lambda - 1);
    report.verdict = report.lambda_formula == report.lambda_oracle &&
                     report.h0_at_boundary >= 1 && report.h0_beyond_boundary == 0;
    return report;
}

} // namespace grcone
