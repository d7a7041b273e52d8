#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pointconfig.hpp"
#include "separations.hpp"

namespace crofton::embedding {

struct PerturbationStep {
    int moved;  // point index
    double from_x, from_y;
    double to_x, to_y;
    long long triples_before;
    long long triples_after;
    double clearance;  // Euclidean distance to the nearest forbidden line
};

struct PerturbationReport {
    double epsilon = 0.0;
    long long step_budget = 0;  // n^3
    std::vector<PerturbationStep> steps;
    long long final_triples = 0;
    double max_displacement = 0.0;  // model distance, per point, start to finish
    double max_distance_drift = 0.0;
};

// Moves one point at a time, each by a model distance below eps/(2 n^3),
// until no collinear triple remains. The triple count strictly decreases at
// every step. Deterministic for a fixed seed. Throws InvariantError if the
// step budget is exhausted.
std::pair<PointConfig, PerturbationReport> perturb_to_general_position(const PointConfig& cfg,
                                                                       double eps,
                                                                       std::uint64_t seed);

struct Cut {
    std::vector<int> side;  // canonical side: contains index 0, sorted
    double weight;          // lambda = sigma / 2
};

struct ResidualSummary {
    double max_abs = 0.0;
    double max_rel = 0.0;
};

// Explicit member of the cut cone realizing the configuration's metric:
// weighted bipartitions plus the induced l1 coordinates (one coordinate per
// cut; point i gets the weight when it lies in the cut's canonical side).
struct CutDecomposition {
    std::vector<Cut> cuts;
    std::vector<std::vector<double>> coords;  // n rows, one column per cut
    ResidualSummary residual;
    // Full class data behind `cuts` (never filtered, unlike cuts when
    // zero-weight cuts are dropped). Empty for parsed decompositions.
    std::vector<separations::SeparationClass> classes;

    // l1 distance between the coordinate rows of i and j.
    double l1_distance(int i, int j) const;
};

struct EmbedOptions {
    double sigma_floor = separations::kDefaultSigmaFloor;
    bool drop_zero_cuts = false;
    // Hard cap on the relative reconstruction residual; defaults to the
    // model's recommended tolerance when NaN.
    double residual_hard_rel_tol = std::numeric_limits<double>::quiet_NaN();
};

// The cut decomposition with weights sigma_t / 2 over all separation
// classes. Requires general position. Throws InvariantError when the
// reconstruction residual exceeds the hard tolerance.
CutDecomposition crofton_embed(const PointConfig& cfg, const EmbedOptions& opts = {});

struct PairResidual {
    int i, j;
    double distance;  // d(p_i, p_j) in the model
    double cut_sum;   // sum of weights over separating cuts
    double abs_err;
    double rel_err;
};

struct VerifyReport {
    std::vector<PairResidual> pairs;
    ResidualSummary summary;
};

// Recomputes both sides of the reconstruction identity for every pair.
VerifyReport verify_crofton(const PointConfig& cfg, const CutDecomposition& dec);

struct EmbedAnyStage {
    double eps;
    PerturbationReport perturbation;
    ResidualSummary residual_vs_input;  // decomposition metric vs the unperturbed distances
};

struct EmbedAnyResult {
    CutDecomposition decomposition;  // of the finest perturbation
    std::vector<EmbedAnyStage> stages;  // empty when the input was already in general position
};

// General-position inputs embed directly; otherwise each epsilon in the
// schedule produces a perturbed embedding and the last one is returned.
EmbedAnyResult embed_any(const PointConfig& cfg, std::span<const double> schedule,
                         std::uint64_t seed, const EmbedOptions& opts = {});

// Default schedule: {1e-2, 1e-4, 1e-6} of the configuration diameter.
std::vector<double> default_schedule(const PointConfig& cfg);

}  // namespace crofton::embedding
