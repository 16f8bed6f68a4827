#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bq/plane_curve.hpp"

namespace bq {

struct InvolutionCatalogEntry {
    std::string group_label;
    std::vector<ProjectiveTransformation> involutions;
    std::vector<std::string> names;  // bracket notation, parallel to involutions
    NumberField field;
};

const std::vector<std::string>& catalog_labels();
InvolutionCatalogEntry catalog(const std::string& group_label);

std::optional<int> order_in_pgl3(const ProjectiveTransformation& M, int max_order = 16);

// breadth-first product closure; throws LimitExceeded above `limit` elements
std::vector<ProjectiveTransformation> closure(const std::vector<ProjectiveTransformation>& generators, size_t limit = 400);

struct Diagonalization {
    ProjectiveTransformation P;  // columns: axis basis, then the isolated fixed point
    ProjectiveTransformation D;  // P^-1 M P, normalized to diag(1,1,-1)
};
Diagonalization diagonalize_involution(const ProjectiveTransformation& M);

struct FixedLocusReport {
    std::string axis_restriction;                    // binary form in s, t on the axis s*v1 + t*v2
    std::vector<std::pair<ProjPoint, int>> axis_points;  // base-field points with multiplicity (Q only)
    int axis_count = 0;                              // with multiplicity over the closure
    ProjPoint isolated_point;
    bool isolated_point_on_curve = false;
    int total_count = 0;
    std::string verdict;  // "bielliptic", "hyperelliptic" or "neither"
};
FixedLocusReport fixed_locus(const PlaneCurve& C, const ProjectiveTransformation& M);

struct KleinConstruction {
    std::vector<ProjectiveTransformation> subgroup;    // <d, h>, order 21
    ProjectiveTransformation t;                        // order-2 generator
    std::vector<ProjectiveTransformation> involutions; // conjugates of t
};
KleinConstruction klein_construction();

// the verbatim g, h, s, phi0 matrices and what they produce
struct KleinVerbatimDiagnostics {
    size_t closure_gh = 0;
    size_t product_involutions = 0;  // psi * (phi0 s phi0^-1) of order 2, deduplicated
    size_t conjugate_involutions = 0;
    size_t invariant_products = 0;
    bool s_order_two = false;
    bool s_squared_is_49 = false;
    bool g_invariant = false;
    bool s_invariant = false;
    bool phi0_invariant = false;
};
KleinVerbatimDiagnostics klein_verbatim_diagnostics();
ProjectiveTransformation klein_verbatim_s();

}  // namespace bq
