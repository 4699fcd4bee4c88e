#pragma once

#include "grcone/bundle.hpp"
#include "grcone/numeric.hpp"

#include <vector>

namespace grcone {

/// Numerical stand-in for a finite cover that splits the pulled-back bundle:
/// the degree of the covering map, the degree of the splitting line bundle,
/// and the exponent multiset of the decomposition. The cover is input data,
/// never constructed; consistency against StrongHNData is checked separately.
class CoverModel {
  public:
    CoverModel(Int cover_degree, Int l_degree, SplitBundle exponents);

    const Int& cover_degree() const { return cover_degree_; }
    const Int& l_degree() const { return l_degree_; }
    const SplitBundle& exponents() const { return exponents_; }

    friend bool operator==(const CoverModel&, const CoverModel&) = default;

  private:
    Int cover_degree_;
    Int l_degree_;
    SplitBundle exponents_;
};

struct CertificateChecks {
    bool summand_ok = false;
    bool degree_identity_ok = false;
    bool pullback_identity_ok = false;

    bool all() const { return summand_ok && degree_identity_ok && pullback_identity_ok; }

    friend bool operator==(const CertificateChecks&, const CertificateChecks&) = default;
};

/// Machine-checkable record that the boundary class of the pseudo-effective
/// cone is effective: the selection of cover exponents realizing the top of
/// the filtration, the degree of the resulting line bundle upstairs, and the
/// three identities tying it back to the boundary slope downstairs.
struct EffectivityCertificate {
    int r = 1;
    int ell = 1;                       // 1-based index of the block containing step r
    int n = 0;                         // rank of the filtration below block ell
    std::vector<Int> selected_exponents;
    Int tilde_l_degree;                // degree of the selected summand's line bundle
    Int total_map_degree;              // p^delta * cover degree
    CertificateChecks checks;

    friend bool operator==(const EffectivityCertificate&, const EffectivityCertificate&) = default;
};

/// Throws ValidationError, naming the violated block, unless the cover's
/// exponents reproduce the strong HN data: one constant run per block (after
/// descending sort, cut at the cumulative ranks) with
/// l_degree * exponent == cover_degree * block slope.
void check_cover_consistency(const StrongHNData& d, const CoverModel& cm);

/// Replays the boundary-effectivity construction for the given bundle,
/// cover, and r, computing all identities with exact arithmetic.
EffectivityCertificate build_certificate(const StrongHNData& d, const CoverModel& cm, int r);

/// Recomputes the certificate and compares field by field; any tampering or
/// failed check yields false.
bool verify_certificate(const EffectivityCertificate& cert, const StrongHNData& d,
                        const CoverModel& cm);

} // namespace grcone
