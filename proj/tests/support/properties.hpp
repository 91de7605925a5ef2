#pragma once
// Randomised property suites shared by the doctest binaries and the acceptance runner.
// Every suite is deterministic for a given seed.

#include <cstdint>
#include <string>

namespace props {

struct Outcome {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first_failure;

    void fail(const std::string& why)
    {
        if (failures++ == 0)
            first_failure = why;
    }
    bool ok() const { return cases > 0 && failures == 0; }
    std::string summary() const;
};

/// HNF canonical form and row lattice, SNF factorisation, unimodularity and invariant factors.
Outcome snf_hnf(std::uint64_t seed, std::size_t count);
/// Saturation: contains L, same rank, idempotent, monotone, span membership, torsion index.
Outcome saturation(std::uint64_t seed, std::size_t count);
/// L_G inside L_F iff g_i -> f_i extends to a homomorphism, on explicit finite groups.
Outcome specialization_vs_group_maps(std::uint64_t seed, std::size_t count);
/// Meet/join universal properties, finest gradings, positivity witnesses.
Outcome grading_algebra(std::uint64_t seed, std::size_t count);
/// Exact simplex against Fourier-Motzkin elimination.
Outcome lp_vs_fourier_motzkin(std::uint64_t seed, std::size_t count);

/// Accumulates gamma <= delta over every complex the complex suites build.
struct GammaDelta {
    Outcome outcome{"gamma <= delta on generated complexes"};
};

/// D_G^G inside D_F^G inside D_O^G, D_O^G a simplex, F-homogeneous subcomplexes are simplices,
/// both cone(N) paths agree, and all circuits pass the cover conditions.
Outcome complex_chain(std::uint64_t seed, std::size_t count, GammaDelta& gd);
/// delta by set cover equals the minimum disjoint face partition; gamma matches brute force.
Outcome delta_vs_partition(std::uint64_t seed, std::size_t count, GammaDelta& gd);

} // namespace props
