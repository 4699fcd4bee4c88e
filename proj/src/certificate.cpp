#include "grcone/certificate.hpp"

#include "grcone/cone.hpp"
#include "grcone/errors.hpp"
#include "grcone/oracle.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace grcone {

CoverModel::CoverModel(Int cover_degree, Int l_degree, SplitBundle exponents)
    : cover_degree_(std::move(cover_degree)), l_degree_(std::move(l_degree)),
      exponents_(std::move(exponents)) {
    if (cover_degree_ < 1) {
        throw ValidationError("cover degree must be positive, got " + cover_degree_.str());
    }
}

void check_cover_consistency(const StrongHNData& d, const CoverModel& cm) {
    const int total_rank = d.hn().total_rank();
    if (cm.exponents().rank() != total_rank) {
        throw ValidationError("cover has " + std::to_string(cm.exponents().rank()) +
                              " exponents but the bundle has rank " +
                              std::to_string(total_rank));
    }
    const std::vector<Int> sorted = cm.exponents().sorted_exponents();
    std::size_t offset = 0;
    for (std::size_t i = 0; i < d.hn().blocks().size(); ++i) {
        const HNBlock& block = d.hn().blocks()[i];
        const std::string label = "block " + std::to_string(i + 1);
        const Int& value = sorted[offset];
        for (int k = 1; k < block.rank; ++k) {
            if (sorted[offset + static_cast<std::size_t>(k)] != value) {
                throw ValidationError(
                    label + ": exponents within a block must be equal, found " + value.str() +
                    " and " + sorted[offset + static_cast<std::size_t>(k)].str());
            }
        }
        // Slope matching, cleared of denominators:
        // l_degree * a * rank == cover_degree * degree.
        if (cm.l_degree() * value * block.rank != cm.cover_degree() * block.degree) {
            throw ValidationError(
                label + ": slope mismatch: l_degree * exponent = " +
                format_rational(Rational(cm.l_degree() * value)) +
                " but cover_degree * slope = " +
                format_rational(Rational(cm.cover_degree()) * slope(block)));
        }
        offset += static_cast<std::size_t>(block.rank);
    }
}

EffectivityCertificate build_certificate(const StrongHNData& d, const CoverModel& cm, int r) {
    check_cover_consistency(d, cm);
    const int total_rank = d.hn().total_rank();
    if (r < 1 || r > total_rank - 1) {
        throw RangeError("r = " + std::to_string(r) + " is outside the Grassmann range 1.." +
                         std::to_string(total_rank - 1));
    }

    const std::vector<Int> sorted = cm.exponents().sorted_exponents();

    // Locate the block containing filtration step r.
    int ell = 0;
    int rank_below = 0;
    for (const auto& block : d.hn().blocks()) {
        ++ell;
        if (r <= rank_below + block.rank) {
            break;
        }
        rank_below += block.rank;
    }

    // The canonical selection: everything below block ell, then r - n copies
    // of the block-ell exponent (all equal by consistency).
    EffectivityCertificate cert;
    cert.r = r;
    cert.ell = ell;
    cert.n = rank_below;
    cert.selected_exponents.assign(sorted.begin(), sorted.begin() + r);

    Int selected_sum = 0;
    for (const auto& a : cert.selected_exponents) {
        selected_sum += a;
    }
    cert.tilde_l_degree = cm.l_degree() * selected_sum;
    cert.total_map_degree =
        pow_int(d.characteristic(), static_cast<unsigned>(d.delta())) * cm.cover_degree();

    // The selected summand must have the maximal degree among all rank-r
    // quotient determinants of the split pullback.
    const Int max_sum = max_subset_sum(cm.exponents(), r);
    const Int min_sum = -max_subset_sum(dual_split(cm.exponents()), r);
    const Int max_degree = cm.l_degree() >= 0 ? cm.l_degree() * max_sum : cm.l_degree() * min_sum;
    cert.checks.summand_ok = cert.tilde_l_degree == max_degree;

    const Rational lambda = lambda_strong(d, r);
    cert.checks.degree_identity_ok =
        Rational(cert.tilde_l_degree) == lambda * Rational(cert.total_map_degree);

    const NSClass boundary{Rational(1), -lambda};
    const NSClass pulled = pullback_class(boundary, cert.total_map_degree);
    cert.checks.pullback_identity_ok =
        pulled == NSClass{Rational(1), -Rational(cert.tilde_l_degree)};

    return cert;
}

bool verify_certificate(const EffectivityCertificate& cert, const StrongHNData& d,
                        const CoverModel& cm) {
    EffectivityCertificate rebuilt;
    try {
        rebuilt = build_certificate(d, cm, cert.r);
    } catch (const Error&) {
        return false;
    }

    auto as_multiset = [](std::vector<Int> values) {
        std::sort(values.begin(), values.end());
        return values;
    };
    return cert.r == rebuilt.r && cert.ell == rebuilt.ell && cert.n == rebuilt.n &&
           as_multiset(cert.selected_exponents) == as_multiset(rebuilt.selected_exponents) &&
           cert.tilde_l_degree == rebuilt.tilde_l_degree &&
           cert.total_map_degree == rebuilt.total_map_degree &&
           cert.checks == rebuilt.checks && rebuilt.checks.all();
}

} // namespace grcone
