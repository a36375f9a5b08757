#pragma once

#include <map>
#include <string>
#include <vector>

#include "weylchar/fiw_module.hpp"

namespace weylchar {

/// Reflection arrangement of W_n: hyperplane normals with integer entries,
/// canonically oriented (first nonzero coordinate positive).
struct Arrangement {
    Family family = Family::BC;
    int n = 0;
    std::vector<std::vector<int>> normals;

    int num_hyperplanes() const { return static_cast<int>(normals.size()); }
};

Arrangement build_arrangement(Family f, int n);

/// Maximum n handled by the cohomology pipelines (per-n linear algebra cap).
int pipeline_cap_n();

/// Equivariant character of H^m of the arrangement complement, m <= 2.
/// Family A carries the S_n action; the BC and D arrangements both carry the
/// B_n action, so those return class functions on B_n. Throws CapExceeded.
ClassFunction os_character_ambient(Family f, int n, int m);

/// Same, with the D result restricted to D_n (character on W_n proper).
ClassFunction os_cohomology_character(Family f, int n, int m);

/// B_n-equivariant character of H^m(PSigma_n) via the presentation by
/// degree-one generators a*_{i,j} (i != j) with relations
/// a*_{ij}^a*_{ji} = 0 and a*_{lj}^a*_{ji} - a*_{lj}^a*_{li} + a*_{ij}^a*_{li} = 0,
/// the group acting by (i,j) -> (|w(i)|,|w(j)|) with a sign when w(j) < 0.
ClassFunction psigma_cohomology_character(int n, int m);

enum class PipelineSource { os, psigma };

PipelineSource parse_pipeline(const std::string& s);

struct AnalyzeReport {
    PipelineSource source = PipelineSource::os;
    Family family = Family::BC;
    int m = 0;
    int degree = 0;
    std::vector<int> range;
    CharacterPolynomial poly;
    RecoverResult recovered;
    std::map<int, Decomposition> components;  // degree a -> irreducibles of U_a
    CharacterPolynomial sym_restriction;
    std::vector<std::pair<int, Rat>> dimensions;
};

/// End-to-end pipeline: per-n characters, unique polynomial fit, inductive
/// M_W(U) decomposition, S_n restriction, dimension table.
AnalyzeReport analyze(PipelineSource source, Family f, int m, int degree, int n_lo, int n_hi);

std::string report_to_json(const AnalyzeReport& r);
std::string report_to_latex(const AnalyzeReport& r);

}  // namespace weylchar
