#include "fbp/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fbp/errors.hpp"

namespace fbp {

namespace {

struct Vertex {
  std::vector<double> x;
  double f = 0.0;
};

double diameter(const std::vector<Vertex>& simplex) {
  double d = 0.0;
  const std::vector<double>& best = simplex.front().x;
  for (std::size_t i = 1; i < simplex.size(); ++i)
    for (std::size_t j = 0; j < best.size(); ++j)
      d = std::max(d, std::abs(simplex[i].x[j] - best[j]));
  return d;
}

}  // namespace

NelderMeadResult nelder_mead(
    const std::function<double(const std::vector<double>&)>& fn,
    const std::vector<double>& x0, const NelderMeadOptions& opts) {
  const std::size_t nd = x0.size();
  if (nd == 0) throw Error("empty starting point");
  if (opts.initial_step <= 0.0) throw Error("initial_step must be positive");
  if (opts.max_evals < static_cast<long>(nd) + 1)
    throw Error("evaluation budget below the initial simplex size");

  long evals = 0;
  auto eval = [&](const std::vector<double>& x) {
    ++evals;
    return fn(x);
  };

  std::vector<Vertex> simplex(nd + 1);
  simplex[0] = {x0, eval(x0)};
  for (std::size_t j = 0; j < nd; ++j) {
    std::vector<double> x = x0;
    x[j] += opts.initial_step;
    simplex[j + 1] = {std::move(x), 0.0};
    simplex[j + 1].f = eval(simplex[j + 1].x);
  }

  auto by_value = [](const Vertex& a, const Vertex& b) { return a.f < b.f; };
  std::sort(simplex.begin(), simplex.end(), by_value);

  NelderMeadResult result;
  std::vector<double> centroid(nd), xr(nd), xe(nd), xc(nd);

  while (evals < opts.max_evals) {
    if (diameter(simplex) < opts.diameter_tol) {
      result.converged = true;
      break;
    }

    // Centroid of all vertices but the worst.
    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i < nd; ++i)
      for (std::size_t j = 0; j < nd; ++j) centroid[j] += simplex[i].x[j];
    for (double& c : centroid) c /= static_cast<double>(nd);

    Vertex& worst = simplex[nd];
    for (std::size_t j = 0; j < nd; ++j)
      xr[j] = centroid[j] + (centroid[j] - worst.x[j]);
    const double fr = eval(xr);

    if (fr < simplex[0].f) {
      for (std::size_t j = 0; j < nd; ++j)
        xe[j] = centroid[j] + 2.0 * (centroid[j] - worst.x[j]);
      const double fe = eval(xe);
      if (fe < fr) {
        worst = {xe, fe};
      } else {
        worst = {xr, fr};
      }
    } else if (fr < simplex[nd - 1].f) {
      worst = {xr, fr};
    } else if (fr < worst.f) {
      // Outside contraction.
      for (std::size_t j = 0; j < nd; ++j)
        xc[j] = centroid[j] + 0.5 * (xr[j] - centroid[j]);
      const double fc = eval(xc);
      if (fc <= fr) {
        worst = {xc, fc};
      } else {
        for (std::size_t i = 1; i <= nd; ++i) {
          for (std::size_t j = 0; j < nd; ++j)
            simplex[i].x[j] =
                simplex[0].x[j] + 0.5 * (simplex[i].x[j] - simplex[0].x[j]);
          simplex[i].f = eval(simplex[i].x);
          if (evals >= opts.max_evals) break;
        }
      }
    } else {
      // Inside contraction.
      for (std::size_t j = 0; j < nd; ++j)
        xc[j] = centroid[j] - 0.5 * (centroid[j] - worst.x[j]);
      const double fc = eval(xc);
      if (fc < worst.f) {
        worst = {xc, fc};
      } else {
        for (std::size_t i = 1; i <= nd; ++i) {
          for (std::size_t j = 0; j < nd; ++j)
            simplex[i].x[j] =
                simplex[0].x[j] + 0.5 * (simplex[i].x[j] - simplex[0].x[j]);
          simplex[i].f = eval(simplex[i].x);
          if (evals >= opts.max_evals) break;
        }
      }
    }

    std::sort(simplex.begin(), simplex.end(), by_value);
  }

  result.x = simplex[0].x;
  result.value = simplex[0].f;
  result.evals = evals;
  return result;
}

}  // namespace fbp
