#pragma once

#include <vector>

#include "swarmsim/formation.hpp"

namespace swarmsim {

// Geometric cooling schedule for the annealed correspondence solver.
// t0 <= 0 means "start at the maximum pairwise squared distance";
// t_final <= 0 means "stop at t_final_ratio * t0".
struct AnnealSchedule {
    double t0 = 0.0;
    double t_final = 0.0;
    double t_final_ratio = 1e-3;
    double decay = 0.93;
    int max_sinkhorn_iterations = 200;
    double sinkhorn_tolerance = 1e-6;

    void validate() const;
};

// Permutation mapping agent index -> slot index, with its total cost.
struct Assignment {
    std::vector<int> slot_of;
    double cost = 0.0;
};

struct TpsParams {
    double lambda = 0.0;  // smoothness weight; 0 keeps only the displacement term
};

// Soft correspondence state: row-major n x n, non-negative, approximately
// doubly stochastic after each Sinkhorn pass.
struct CorrespondenceMatrix {
    int n = 0;
    double temperature = 0.0;
    std::vector<double> entries;

    double at(int i, int j) const { return entries[static_cast<std::size_t>(i) * n + j]; }
};

struct AnnealStep {
    double temperature = 0.0;
    int sinkhorn_iterations = 0;
    double max_row_sum_error = 0.0;
    double max_col_sum_error = 0.0;
    double max_entry = 0.0;       // global maximum of the matrix
    double min_row_max = 0.0;     // weakest row's best entry
};

struct AnnealTrace {
    std::vector<AnnealStep> steps;
    CorrespondenceMatrix final_matrix;
};

// Pairwise squared distances: cost[i][j] = |c[i] - t[j]|^2.
std::vector<std::vector<double>> squared_distance_cost(const ShapePointSet& cshape,
                                                       const ShapePointSet& tshape);

// Registration energy for a given correspondence. With lambda = 0 this is the
// plain sum of squared displacements. With lambda > 0 it adds lambda times the
// bending energy of the exact thin-plate interpolant through the corresponded
// pairs (w' K w form of the bending integral).
double tps_energy(const ShapePointSet& X, const ShapePointSet& V, const Assignment& assignment,
                  const TpsParams& params);

// Deterministic-annealing correspondence (softassign): entries proportional to
// exp(-cost/T), balanced to doubly stochastic at each temperature (log-domain
// Sinkhorn), cooled geometrically, then rounded to a permutation by greedy
// largest-entry extraction. Throws if a Sinkhorn pass fails to converge,
// naming the temperature.
Assignment anneal_assignment(const ShapePointSet& cshape, const ShapePointSet& tshape,
                             const AnnealSchedule& schedule, AnnealTrace* trace = nullptr);

// Minimum-cost assignment for an arbitrary square cost matrix (Hungarian
// method with potentials). Ties resolve to the lexicographically smallest
// permutation for n <= 32; beyond that the solver's deterministic optimum is
// returned unrefined.
Assignment exact_assignment(const std::vector<std::vector<double>>& cost);

// Brute-force enumeration over all permutations, n <= 12. Keeps the first
// (lexicographically smallest) optimum.
Assignment exhaustive_assignment(const std::vector<std::vector<double>>& cost);

// Waypoints for the reformation flight: agent i heads to its assigned slot.
std::vector<Vec2> turn_back_waypoints(const WorldState& world, const ShapePointSet& tshape,
                                      const Assignment& assignment);

// True when every agent sits within tol of its assigned slot.
bool shapes_match(const ShapePointSet& cshape, const ShapePointSet& tshape,
                  const Assignment& assignment, double tol);

}  // namespace swarmsim
