#pragma once

#include <functional>

namespace levylab {

struct QuadBudget {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    int max_intervals = 4000;
};

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
    bool converged = false;
};

// Adaptive Gauss-Kronrod (G7,K15) on a finite interval.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     const QuadBudget& budget = {});

// Same, but throws QuadratureError when the error estimate misses the budget.
double integrate_or_throw(const std::function<double(double)>& f, double a, double b,
                          const QuadBudget& budget = {});

}  // namespace levylab
