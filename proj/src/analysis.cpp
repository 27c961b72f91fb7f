#include "rwf/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

namespace rwf {

SquareMatrix SquareMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  SquareMatrix m(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size()) throw InvalidInput("matrix is not square");
    for (std::size_t c = 0; c < rows.size(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

SquareMatrix SquareMatrix::transposed() const {
  SquareMatrix t(n_);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

SquareMatrix SquareMatrix::symmetric_part() const {
  SquareMatrix s(n_);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) s(r, c) = 0.5 * ((*this)(r, c) + (*this)(c, r));
  return s;
}

SquareMatrix SquareMatrix::gram() const {
  SquareMatrix g(n_);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = r; c < n_; ++c) {
      double acc = 0.0;
      for (std::size_t k = 0; k < n_; ++k) acc += (*this)(k, r) * (*this)(k, c);
      g(r, c) = acc;
      g(c, r) = acc;
    }
  return g;
}

bool SquareMatrix::is_symmetric() const {
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = r + 1; c < n_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

namespace {

// Strongly connected components of the sparsity graph (edge r -> c when
// a(r, c) > 0). The spectrum of a reducible matrix is the union of the
// spectra of its irreducible diagonal blocks.
std::vector<std::vector<std::size_t>> irreducible_blocks(const SquareMatrix& a) {
  const std::size_t n = a.size();
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> blocks;
  int counter = 0;

  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (std::size_t w = 0; w < n; ++w) {
      if (!(a(v, w) > 0.0)) continue;
      if (index[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<std::size_t> block;
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        block.push_back(w);
      } while (w != v);
      blocks.push_back(std::move(block));
    }
  };
  for (std::size_t v = 0; v < n; ++v)
    if (index[v] < 0) visit(v);
  return blocks;
}

double perron_root_irreducible(const SquareMatrix& a, const std::vector<std::size_t>& block,
                               double tol) {
  const std::size_t n = block.size();
  if (n == 1) return a(block[0], block[0]);

  double shift = 0.0;
  for (std::size_t r : block)
    for (std::size_t c : block) shift += a(r, c);
  shift /= static_cast<double>(n);

  std::vector<double> x(n, 1.0), ax(n);
  for (int it = 0; it < kPowerIterMax; ++it) {
    double lower = std::numeric_limits<double>::infinity();
    double upper = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
      double acc = 0.0;
      for (std::size_t c = 0; c < n; ++c) acc += a(block[r], block[c]) * x[c];
      ax[r] = acc;
      const double ratio = acc / x[r];
      lower = std::min(lower, ratio);
      upper = std::max(upper, ratio);
    }
    if (upper - lower <= tol * upper) return 0.5 * (lower + upper);
    double top = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
      x[r] = ax[r] + shift * x[r];
      top = std::max(top, x[r]);
    }
    for (double& v : x) v /= top;
  }
  throw SolverFailure("spectral_radius: power iteration did not converge in " +
                      std::to_string(kPowerIterMax) + " steps");
}

}  // namespace

double spectral_radius(const SquareMatrix& a, double tol) {
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < a.size(); ++c)
      if (!std::isfinite(a(r, c)) || a(r, c) < 0.0)
        throw InvalidInput("spectral_radius expects a finite nonnegative matrix");
  double rho = 0.0;
  for (const auto& block : irreducible_blocks(a))
    rho = std::max(rho, perron_root_irreducible(a, block, tol));
  return rho;
}

double operator_norm_l2(const SquareMatrix& a, double tol) {
  return std::sqrt(spectral_radius(a.gram(), tol));
}

double frobenius_norm(const SquareMatrix& a) {
  double acc = 0.0;
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < a.size(); ++c) acc += a(r, c) * a(r, c);
  return std::sqrt(acc);
}

SquareMatrix channel_ratio_matrix(const NetworkScenario& scn, std::size_t k) {
  const std::size_t m = scn.num_users();
  SquareMatrix s(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j) s(i, j) = scn.gain(j, i, k) / scn.gain(i, i, k);
  return s;
}

SquareMatrix max_ratio_matrix(const NetworkScenario& scn) {
  const std::size_t m = scn.num_users();
  SquareMatrix s(m);
  for (std::size_t k = 0; k < scn.num_channels(); ++k)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (i != j) s(i, j) = std::max(s(i, j), scn.gain(j, i, k) / scn.gain(i, i, k));
  return s;
}

ConditionReport check_uniqueness(const NetworkScenario& scn, const UncertaintySpec& unc) {
  ConditionReport out;
  const std::size_t m = scn.num_users();
  out.per_channel_lhs.resize(scn.num_channels());
  out.uniqueness_holds = true;
  for (std::size_t k = 0; k < scn.num_channels(); ++k) {
    const SquareMatrix s = channel_ratio_matrix(scn, k);
    const double coupling =
        std::min(spectral_radius(s.symmetric_part()), operator_norm_l2(s));
    double eps_sq = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      const double e = unc.effective_epsilon(i, k);
      eps_sq += e * e;
    }
    out.per_channel_lhs[k] = coupling + std::sqrt(eps_sq);
    if (!(out.per_channel_lhs[k] < 1.0)) out.uniqueness_holds = false;
  }
  return out;
}

ConditionReport check_convergence(const NetworkScenario& scn, const UncertaintySpec& unc,
                                  const std::vector<std::vector<double>>& s_bar_bound) {
  const std::size_t m = scn.num_users();
  if (s_bar_bound.size() != m) throw InvalidInput("s_bar_bound needs one row per user");
  ConditionReport out;
  double s_max_sq = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    if (s_bar_bound[i].size() != scn.num_channels())
      throw InvalidInput("s_bar_bound rows need one entry per channel");
    double s_max = 0.0;
    for (std::size_t k = 0; k < scn.num_channels(); ++k)
      s_max = std::max(s_max, s_bar_bound[i][k] * unc.effective_epsilon(i, k));
    s_max_sq += s_max * s_max;
  }
  out.convergence_lhs = operator_norm_l2(max_ratio_matrix(scn)) +
                        std::sqrt(static_cast<double>(m)) * std::sqrt(s_max_sq);
  out.convergence_holds = out.convergence_lhs < 1.0;
  return out;
}

std::vector<std::vector<double>> interference_upper_bound(const NetworkScenario& scn) {
  PowerProfile at_mask(scn.num_users(), scn.num_channels());
  for (std::size_t i = 0; i < scn.num_users(); ++i)
    for (std::size_t k = 0; k < scn.num_channels(); ++k) at_mask(i, k) = scn.p_mask(k);
  std::vector<std::vector<double>> out;
  out.reserve(scn.num_users());
  for (std::size_t i = 0; i < scn.num_users(); ++i)
    out.push_back(normalized_interference(scn, at_mask, i));
  return out;
}

ConditionReport check_conditions(const NetworkScenario& scn, const UncertaintySpec& unc) {
  ConditionReport out = check_uniqueness(scn, unc);
  const ConditionReport conv = check_convergence(scn, unc, interference_upper_bound(scn));
  out.convergence_lhs = conv.convergence_lhs;
  out.convergence_holds = conv.convergence_holds;
  return out;
}

double orthogonality_index(const PowerProfile& profile, double activity_tol) {
  const std::size_t kk = profile.num_channels();
  if (kk == 0) return 1.0;
  std::size_t exclusive = 0;
  for (std::size_t k = 0; k < kk; ++k) {
    std::size_t active = 0;
    for (std::size_t i = 0; i < profile.num_users(); ++i)
      if (profile(i, k) > activity_tol) ++active;
    if (active <= 1) ++exclusive;
  }
  return static_cast<double>(exclusive) / static_cast<double>(kk);
}

double social_utility(const NetworkScenario& scn, const PowerProfile& profile,
                      const UncertaintySpec& unc_for_evaluation) {
  double total = 0.0;
  for (std::size_t i = 0; i < scn.num_users(); ++i)
    total += user_utility(scn, profile, i, unc_for_evaluation);
  return total;
}

nlohmann::json to_json(const ConditionReport& report) {
  return {{"per_channel_lhs", report.per_channel_lhs},
          {"uniqueness_holds", report.uniqueness_holds},
          {"convergence_lhs", report.convergence_lhs},
          {"convergence_holds", report.convergence_holds}};
}

}  // namespace rwf
