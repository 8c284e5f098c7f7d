#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scheme_atlas/multi_index.hpp"
#include "scheme_atlas/spectral.hpp"

namespace atlas {

enum class Family { hamming, johnson, bilinear, grassmann, nonbinary_johnson, attenuated };

[[nodiscard]] std::string_view to_string(Family family);
/// Accepts the names printed by to_string plus "nbj".
[[nodiscard]] std::optional<Family> parse_family(std::string_view name);

/// Family tag plus the integer parameters it uses; unused fields stay 0.
struct FamilyParams {
    Family family = Family::hamming;
    int n = 0;
    int k = 0;
    int q = 0;
    int r = 0;
    int m = 0;
    int l = 0;

    static FamilyParams hamming(int n, int q) { return {Family::hamming, n, 0, q, 0, 0, 0}; }
    static FamilyParams johnson(int n, int k) { return {Family::johnson, n, k, 0, 0, 0, 0}; }
    static FamilyParams bilinear(int n, int l, int q) { return {Family::bilinear, n, 0, q, 0, 0, l}; }
    static FamilyParams grassmann(int n, int m, int q) { return {Family::grassmann, n, 0, q, 0, m, 0}; }
    static FamilyParams nonbinary_johnson(int r, int n, int k) { return {Family::nonbinary_johnson, n, k, 0, r, 0, 0}; }
    static FamilyParams attenuated(int n, int m, int l, int q) { return {Family::attenuated, n, 0, q, 0, m, l}; }

    /// Throws std::invalid_argument when the parameters do not define a scheme
    /// of the family. Boundary cases with a reduction are accepted.
    void validate() const;

    /// Boundary reduction implied by the parameters (after validate()).
    [[nodiscard]] Reduction reduction() const;

    /// e.g. "nonbinary_johnson(r=3,n=4,k=2)".
    [[nodiscard]] std::string str() const;

    friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

/// {(i,j): i+j <= k, j <= min(k,n-k)}, with i = 0 only when r = 2.
/// i counts positions sharing support but not value, j the support change.
[[nodiscard]] Domain nonbinary_johnson_domain(int r, int n, int k);

/// {(a,b): a+b <= m, a <= l, b <= n-m}. a is the bilinear-forms part and b
/// the Grassmann part of a relation.
[[nodiscard]] Domain attenuated_domain(int n, int m, int l);

// Table constructors. Each throws std::invalid_argument on bad parameters.

[[nodiscard]] SpectralTable hamming_table(int n, int q);
[[nodiscard]] SpectralTable johnson_table(int n, int k);
[[nodiscard]] SpectralTable bilinear_table(int n, int l, int q);
[[nodiscard]] SpectralTable grassmann_table(int n, int m, int q);
[[nodiscard]] SpectralTable nonbinary_johnson_table(int r, int n, int k);
[[nodiscard]] SpectralTable attenuated_table(int n, int m, int l, int q);

[[nodiscard]] SpectralTable make_table(const FamilyParams& params);

/// The classical family a boundary case collapses to: johnson(n,k) for r = 2,
/// hamming(k, r-1) for n = k, bilinear(n,l,q) for m = n. Empty otherwise.
[[nodiscard]] std::optional<FamilyParams> reduced_family(const FamilyParams& params);

/// Compares make_table(params) with the table of reduced_family(params),
/// reading each index of the larger domain through its one coordinate that
/// is not identically zero. Covers |X|, the domains, P, Q, valencies and
/// multiplicities. Throws std::invalid_argument when there is no reduction.
[[nodiscard]] std::vector<Discrepancy> reduction_mismatches(const FamilyParams& params);

/// Number of points of the scheme, without building the table.
[[nodiscard]] Integer point_count(const FamilyParams& params);

} // namespace atlas
