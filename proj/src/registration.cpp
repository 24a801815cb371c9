#include "swarmsim/registration.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace swarmsim {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_square(const std::vector<std::vector<double>>& cost) {
    const std::size_t n = cost.size();
    if (n == 0) throw std::invalid_argument("assignment: empty cost matrix");
    for (const auto& row : cost)
        if (row.size() != n) throw std::invalid_argument("assignment: cost matrix must be square");
}

double permutation_cost(const std::vector<std::vector<double>>& cost,
                        const std::vector<int>& slot_of) {
    double total = 0.0;
    for (std::size_t i = 0; i < slot_of.size(); ++i)
        total += cost[i][static_cast<std::size_t>(slot_of[i])];
    return total;
}

// Hungarian method with row/column potentials, O(n^3). Returns row -> column.
std::vector<int> hungarian(const std::vector<std::vector<double>>& cost) {
    const int n = static_cast<int>(cost.size());
    std::vector<double> u(static_cast<std::size_t>(n) + 1, 0.0);
    std::vector<double> v(static_cast<std::size_t>(n) + 1, 0.0);
    std::vector<int> p(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> way(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<double> minv(static_cast<std::size_t>(n) + 1, kInf);
        std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
        do {
            used[static_cast<std::size_t>(j0)] = 1;
            const int i0 = p[static_cast<std::size_t>(j0)];
            int j1 = 0;
            double delta = kInf;
            for (int j = 1; j <= n; ++j) {
                if (used[static_cast<std::size_t>(j)]) continue;
                const double cur = cost[static_cast<std::size_t>(i0 - 1)][static_cast<std::size_t>(j - 1)] -
                                   u[static_cast<std::size_t>(i0)] - v[static_cast<std::size_t>(j)];
                if (cur < minv[static_cast<std::size_t>(j)]) {
                    minv[static_cast<std::size_t>(j)] = cur;
                    way[static_cast<std::size_t>(j)] = j0;
                }
                if (minv[static_cast<std::size_t>(j)] < delta) {
                    delta = minv[static_cast<std::size_t>(j)];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[static_cast<std::size_t>(j)]) {
                    u[static_cast<std::size_t>(p[static_cast<std::size_t>(j)])] += delta;
                    v[static_cast<std::size_t>(j)] -= delta;
                } else {
                    minv[static_cast<std::size_t>(j)] -= delta;
                }
            }
            j0 = j1;
        } while (p[static_cast<std::size_t>(j0)] != 0);
        do {
            const int j1 = way[static_cast<std::size_t>(j0)];
            p[static_cast<std::size_t>(j0)] = p[static_cast<std::size_t>(j1)];
            j0 = j1;
        } while (j0 != 0);
    }
    std::vector<int> slot_of(static_cast<std::size_t>(n), -1);
    for (int j = 1; j <= n; ++j)
        if (p[static_cast<std::size_t>(j)] != 0)
            slot_of[static_cast<std::size_t>(p[static_cast<std::size_t>(j)] - 1)] = j - 1;
    return slot_of;
}

// Smallest-index optimum: fix rows in order to the smallest column that keeps
// the remaining subproblem at the optimal total.
std::vector<int> lexicographic_refine(const std::vector<std::vector<double>>& cost,
                                      double optimal_cost) {
    const int n = static_cast<int>(cost.size());
    const double eps = 1e-9 * (1.0 + std::abs(optimal_cost));
    std::vector<int> chosen(static_cast<std::size_t>(n), -1);
    std::vector<int> free_cols(static_cast<std::size_t>(n));
    std::iota(free_cols.begin(), free_cols.end(), 0);
    double fixed_cost = 0.0;
    for (int i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < free_cols.size(); ++k) {
            const int j = free_cols[k];
            double remainder = 0.0;
            const int m = n - i - 1;
            if (m > 0) {
                std::vector<std::vector<double>> sub(static_cast<std::size_t>(m));
                for (int r = 0; r < m; ++r) {
                    sub[static_cast<std::size_t>(r)].reserve(static_cast<std::size_t>(m));
                    for (std::size_t c = 0; c < free_cols.size(); ++c) {
                        if (c == k) continue;
                        sub[static_cast<std::size_t>(r)].push_back(
                            cost[static_cast<std::size_t>(i + 1 + r)]
                                [static_cast<std::size_t>(free_cols[c])]);
                    }
                }
                remainder = permutation_cost(sub, hungarian(sub));
            }
            if (fixed_cost + cost[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +
                    remainder <= optimal_cost + eps) {
                chosen[static_cast<std::size_t>(i)] = j;
                fixed_cost += cost[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                free_cols.erase(free_cols.begin() + static_cast<std::ptrdiff_t>(k));
                break;
            }
        }
        if (chosen[static_cast<std::size_t>(i)] < 0)
            return {};  // numerical slack too tight; caller keeps the unrefined optimum
    }
    return chosen;
}

double logsumexp(const std::vector<double>& terms) {
    double m = -kInf;
    for (double t : terms) m = std::max(m, t);
    if (m == -kInf) return m;
    double s = 0.0;
    for (double t : terms) s += std::exp(t - m);
    return m + std::log(s);
}

}  // namespace

void AnnealSchedule::validate() const {
    if (!(decay > 0.0 && decay < 1.0))
        throw std::invalid_argument("anneal: decay must lie in (0, 1)");
    if (!(t_final_ratio > 0.0 && t_final_ratio < 1.0))
        throw std::invalid_argument("anneal: t_final_ratio must lie in (0, 1)");
    if (max_sinkhorn_iterations < 1)
        throw std::invalid_argument("anneal: max_sinkhorn_iterations must be >= 1");
    if (!(sinkhorn_tolerance > 0.0))
        throw std::invalid_argument("anneal: sinkhorn_tolerance must be positive");
    if (t0 > 0.0 && t_final > 0.0 && !(t0 > t_final))
        throw std::invalid_argument("anneal: t0 must exceed t_final");
}

std::vector<std::vector<double>> squared_distance_cost(const ShapePointSet& cshape,
                                                       const ShapePointSet& tshape) {
    if (cshape.size() != tshape.size())
        throw std::invalid_argument("registration: point sets differ in size");
    const std::size_t n = cshape.size();
    std::vector<std::vector<double>> cost(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) cost[i][j] = (cshape[i] - tshape[j]).norm2();
    return cost;
}

double tps_energy(const ShapePointSet& X, const ShapePointSet& V, const Assignment& assignment,
                  const TpsParams& params) {
    const std::size_t n = X.size();
    if (V.size() != n || assignment.slot_of.size() != n)
        throw std::invalid_argument("tps_energy: size mismatch");
    if (params.lambda < 0.0) throw std::invalid_argument("tps_energy: lambda must be >= 0");

    double data = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        data += (X[i] - V[static_cast<std::size_t>(assignment.slot_of[i])]).norm2();
    if (params.lambda == 0.0 || n < 3) return data;

    // Bending energy of the exact interpolant v_i -> x_i with kernel
    // U(r) = r^2 log r, computed as sum over dimensions of w' K w.
    const int ni = static_cast<int>(n);
    Eigen::MatrixXd K(ni, ni);
    Eigen::MatrixXd P(ni, 3);
    for (int i = 0; i < ni; ++i) {
        const Vec2 vi = V[static_cast<std::size_t>(assignment.slot_of[static_cast<std::size_t>(i)])];
        P(i, 0) = 1.0;
        P(i, 1) = vi.x;
        P(i, 2) = vi.y;
        for (int j = 0; j < ni; ++j) {
            const Vec2 vj =
                V[static_cast<std::size_t>(assignment.slot_of[static_cast<std::size_t>(j)])];
            const double r2 = (vi - vj).norm2();
            K(i, j) = r2 > 0.0 ? 0.5 * r2 * std::log(r2) : 0.0;
        }
    }
    Eigen::MatrixXd system = Eigen::MatrixXd::Zero(ni + 3, ni + 3);
    system.topLeftCorner(ni, ni) = K;
    system.topRightCorner(ni, 3) = P;
    system.bottomLeftCorner(3, ni) = P.transpose();
    Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(ni + 3, 2);
    for (int i = 0; i < ni; ++i) {
        rhs(i, 0) = X[static_cast<std::size_t>(i)].x;
        rhs(i, 1) = X[static_cast<std::size_t>(i)].y;
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(system);
    if (!lu.isInvertible()) return data;  // collinear sites: affine interpolant, zero bending
    const Eigen::MatrixXd sol = lu.solve(rhs);
    const Eigen::MatrixXd w = sol.topRows(ni);
    double bending = 0.0;
    for (int d = 0; d < 2; ++d) bending += (w.col(d).transpose() * K * w.col(d))(0, 0);
    bending = std::max(bending, 0.0);  // clip fp noise; the quadratic form is PSD on this subspace
    return data + params.lambda * bending;
}

Assignment anneal_assignment(const ShapePointSet& cshape, const ShapePointSet& tshape,
                             const AnnealSchedule& schedule, AnnealTrace* trace) {
    schedule.validate();
    if (cshape.size() != tshape.size())
        throw std::invalid_argument("anneal_assignment: point sets differ in size");
    const int n = static_cast<int>(cshape.size());
    if (n < 1) throw std::invalid_argument("anneal_assignment: empty point sets");
    for (const Vec2& p : cshape.points)
        if (!p.finite()) throw std::invalid_argument("anneal_assignment: non-finite point");
    for (const Vec2& p : tshape.points)
        if (!p.finite()) throw std::invalid_argument("anneal_assignment: non-finite point");

    const auto cost = squared_distance_cost(cshape, tshape);
    double max_cost = 0.0;
    for (const auto& row : cost)
        for (double c : row) max_cost = std::max(max_cost, c);

    Assignment result;
    if (n == 1 || max_cost == 0.0) {
        result.slot_of.resize(static_cast<std::size_t>(n));
        std::iota(result.slot_of.begin(), result.slot_of.end(), 0);
        result.cost = permutation_cost(cost, result.slot_of);
        return result;
    }

    const double t0 = schedule.t0 > 0.0 ? schedule.t0 : max_cost;
    const double t_final = schedule.t_final > 0.0 ? schedule.t_final : schedule.t_final_ratio * t0;
    if (!(t0 > t_final && t_final > 0.0))
        throw std::invalid_argument("anneal_assignment: schedule requires t0 > t_final > 0");

    // Log-domain Sinkhorn with warm-started potentials across temperatures.
    std::vector<double> u(static_cast<std::size_t>(n), 0.0);
    std::vector<double> v(static_cast<std::size_t>(n), 0.0);
    CorrespondenceMatrix matrix;
    matrix.n = n;
    matrix.entries.assign(static_cast<std::size_t>(n) * n, 0.0);
    std::vector<double> terms(static_cast<std::size_t>(n), 0.0);

    auto entry = [&](int i, int j, double T) {
        return std::exp((u[static_cast<std::size_t>(i)] + v[static_cast<std::size_t>(j)] -
                         cost[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) /
                        T);
    };

    for (double T = t0;; T *= schedule.decay) {
        int iterations = 0;
        double row_err = kInf, col_err = kInf;
        while (iterations < schedule.max_sinkhorn_iterations) {
            ++iterations;
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j)
                    terms[static_cast<std::size_t>(j)] =
                        (v[static_cast<std::size_t>(j)] -
                         cost[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) /
                        T;
                u[static_cast<std::size_t>(i)] = -T * logsumexp(terms);
            }
            for (int j = 0; j < n; ++j) {
                for (int i = 0; i < n; ++i)
                    terms[static_cast<std::size_t>(i)] =
                        (u[static_cast<std::size_t>(i)] -
                         cost[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) /
                        T;
                v[static_cast<std::size_t>(j)] = -T * logsumexp(terms);
            }
            row_err = 0.0;
            col_err = 0.0;
            for (int i = 0; i < n; ++i) {
                double s = 0.0;
                for (int j = 0; j < n; ++j) s += entry(i, j, T);
                row_err = std::max(row_err, std::abs(s - 1.0));
            }
            for (int j = 0; j < n; ++j) {
                double s = 0.0;
                for (int i = 0; i < n; ++i) s += entry(i, j, T);
                col_err = std::max(col_err, std::abs(s - 1.0));
            }
            if (row_err < schedule.sinkhorn_tolerance && col_err < schedule.sinkhorn_tolerance)
                break;
        }
        if (row_err >= schedule.sinkhorn_tolerance || col_err >= schedule.sinkhorn_tolerance)
            throw std::runtime_error("anneal_assignment: Sinkhorn did not converge at temperature " +
                                     std::to_string(T));

        matrix.temperature = T;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                matrix.entries[static_cast<std::size_t>(i) * n + j] = entry(i, j, T);

        if (trace) {
            AnnealStep step;
            step.temperature = T;
            step.sinkhorn_iterations = iterations;
            step.max_row_sum_error = row_err;
            step.max_col_sum_error = col_err;
            step.max_entry = 0.0;
            step.min_row_max = kInf;
            for (int i = 0; i < n; ++i) {
                double row_max = 0.0;
                for (int j = 0; j < n; ++j) row_max = std::max(row_max, matrix.at(i, j));
                step.max_entry = std::max(step.max_entry, row_max);
                step.min_row_max = std::min(step.min_row_max, row_max);
            }
            trace->steps.push_back(step);
        }
        if (T <= t_final) break;
    }
    if (trace) trace->final_matrix = matrix;

    // Greedy largest-entry extraction; ties resolve to the smallest (i, j).
    result.slot_of.assign(static_cast<std::size_t>(n), -1);
    std::vector<char> row_used(static_cast<std::size_t>(n), 0);
    std::vector<char> col_used(static_cast<std::size_t>(n), 0);
    for (int k = 0; k < n; ++k) {
        int bi = -1, bj = -1;
        double best = -1.0;
        for (int i = 0; i < n; ++i) {
            if (row_used[static_cast<std::size_t>(i)]) continue;
            for (int j = 0; j < n; ++j) {
                if (col_used[static_cast<std::size_t>(j)]) continue;
                if (matrix.at(i, j) > best) {
                    best = matrix.at(i, j);
                    bi = i;
                    bj = j;
                }
            }
        }
        result.slot_of[static_cast<std::size_t>(bi)] = bj;
        row_used[static_cast<std::size_t>(bi)] = 1;
        col_used[static_cast<std::size_t>(bj)] = 1;
    }
    result.cost = permutation_cost(cost, result.slot_of);
    return result;
}

Assignment exact_assignment(const std::vector<std::vector<double>>& cost) {
    check_square(cost);
    const int n = static_cast<int>(cost.size());
    Assignment result;
    result.slot_of = hungarian(cost);
    result.cost = permutation_cost(cost, result.slot_of);
    if (n <= 32) {
        std::vector<int> refined = lexicographic_refine(cost, result.cost);
        if (!refined.empty()) {
            result.slot_of = std::move(refined);
            result.cost = permutation_cost(cost, result.slot_of);
        }
    }
    return result;
}

Assignment exhaustive_assignment(const std::vector<std::vector<double>>& cost) {
    check_square(cost);
    const int n = static_cast<int>(cost.size());
    if (n > 12) throw std::invalid_argument("exhaustive_assignment: n must be <= 12");
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    Assignment best;
    best.slot_of = perm;
    best.cost = permutation_cost(cost, perm);
    while (std::next_permutation(perm.begin(), perm.end())) {
        const double c = permutation_cost(cost, perm);
        if (c < best.cost) {
            best.cost = c;
            best.slot_of = perm;
        }
    }
    return best;
}

std::vector<Vec2> turn_back_waypoints(const WorldState& world, const ShapePointSet& tshape,
                                      const Assignment& assignment) {
    const std::size_t n = world.agents.size();
    if (tshape.size() != n || assignment.slot_of.size() != n)
        throw std::invalid_argument("turn_back_waypoints: size mismatch");
    std::vector<Vec2> waypoints(n);
    for (std::size_t i = 0; i < n; ++i)
        waypoints[i] = tshape[static_cast<std::size_t>(assignment.slot_of[i])];
    return waypoints;
}

bool shapes_match(const ShapePointSet& cshape, const ShapePointSet& tshape,
                  const Assignment& assignment, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("shapes_match: tol must be positive");
    const std::size_t n = cshape.size();
    if (tshape.size() != n || assignment.slot_of.size() != n)
        throw std::invalid_argument("shapes_match: size mismatch");
    for (std::size_t i = 0; i < n; ++i) {
        const double err =
            (cshape[i] - tshape[static_cast<std::size_t>(assignment.slot_of[i])]).norm();
        if (err > tol) return false;
    }
    return true;
}

}  // namespace swarmsim
