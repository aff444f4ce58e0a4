#include "wenolab/solver.hpp"

#include <algorithm>
#include <cmath>

namespace wenolab {

bool FluxModel::admissible(std::span<const double> u) const {
  return std::all_of(u.begin(), u.end(), [](double v) { return std::isfinite(v); });
}

void FluxModel::eigensystem(std::span<const double>, std::span<double>, std::span<double>) const {
  throw std::logic_error("flux model has no eigensystem");
}

void FluxModel::source_average(const SourceSamples&, std::span<double> out) const {
  std::fill(out.begin(), out.end(), 0.0);
}

void llf_flux(const FluxModel& model, std::span<const double> uL, std::span<const double> uR, std::span<double> F) {
  if (!model.admissible(uL) || !model.admissible(uR)) throw InadmissibleState("inadmissible interface state");
  const int m = model.components();
  double fl[8], fr[8];
  model.flux(uL, {fl, static_cast<std::size_t>(m)});
  model.flux(uR, {fr, static_cast<std::size_t>(m)});
  const double alpha = std::max(model.max_wavespeed(uL), model.max_wavespeed(uR));
  for (int c = 0; c < m; ++c) F[c] = 0.5 * (fl[c] + fr[c]) - 0.5 * alpha * (uR[c] - uL[c]);
}

void SolverConfig::validate() const {
  if (!(cfl > 0.0 && cfl < 1.0)) throw std::invalid_argument("cfl must lie in (0, 1)");
  if (!(t_end > 0.0)) throw std::invalid_argument("t_end must be positive");
  if (tableau) tableau->validate();
}

SemiDiscrete::SemiDiscrete(const FluxModel& model, const Grid& grid, const SchemeConfig& scheme,
                           BoundaryCondition bc, bool characteristic)
    : model_(model), grid_(grid), scheme_(scheme), bc_(bc), characteristic_(characteristic), m_(model.components()) {
  const int r = scheme_.r();
  if (grid_.ghost() < r) throw std::invalid_argument("grid needs at least r ghost cells");
  if (m_ > 8) throw std::invalid_argument("at most 8 components are supported");
  if (characteristic_ && !model_.has_eigensystem())
    throw std::invalid_argument("characteristic reconstruction needs an eigensystem");
  std::vector<double> nodes{-0.5, 0.5};
  if (model_.has_source()) {
    if (scheme_.family() == Family::weno)
      throw std::invalid_argument("source quadrature needs a single reconstruction polynomial (cweno or cwenoz)");
    level_ = source_level(scheme_.order());
    const int n = 1 << level_;
    nodes.clear();
    for (int i = 0; i <= n; ++i) nodes.push_back(-0.5 + static_cast<double>(i) / n);
  }
  kernel_ = std::make_unique<ReconKernel>(scheme_, nodes);
  const std::size_t cells = grid_.cells() + 2;
  const std::size_t w = 2 * r - 1;
  recon_.resize(static_cast<std::size_t>(m_) * nodes.size() * cells);
  flux_.resize(static_cast<std::size_t>(m_) * (grid_.cells() + 1));
  source_.assign(static_cast<std::size_t>(m_) * grid_.cells(), 0.0);
  if (characteristic_) {
    window_.resize(static_cast<std::size_t>(m_) * cells * w);
    eig_.resize(cells * 2 * m_ * m_);
  }
}

// Reconstructs cells -1..M at every node into recon_.
void SemiDiscrete::reconstruct_states(const CellField& u) {
  const int r = scheme_.r();
  const int w = 2 * r - 1;
  const int M = grid_.cells();
  const std::size_t cells = M + 2;
  const std::size_t nn = kernel_->nodes().size();
  const double h = grid_.h();
  const std::size_t block = nn * cells;

  if (!characteristic_) {
    for (int c = 0; c < m_; ++c) {
      const WindowView view{&u.at(c, -1 - (r - 1)), 1, cells};
      kernel_->run(view, h, std::span<double>(recon_).subspan(c * block, block));
    }
    return;
  }

  const std::size_t mm = static_cast<std::size_t>(m_) * m_;
  double ubar[8];
  for (std::size_t jj = 0; jj < cells; ++jj) {
    const int j = static_cast<int>(jj) - 1;
    for (int c = 0; c < m_; ++c) ubar[c] = u.at(c, j);
    const std::span<const double> us(ubar, m_);
    if (!model_.admissible(us)) throw InadmissibleState("inadmissible cell average at cell " + std::to_string(j));
    double* L = &eig_[jj * 2 * mm];
    double* R = L + mm;
    model_.eigensystem(us, {L, mm}, {R, mm});
    for (int mIdx = 0; mIdx < w; ++mIdx) {
      const int src = j - (r - 1) + mIdx;
      for (int c = 0; c < m_; ++c) {
        double v = 0.0;
        for (int d = 0; d < m_; ++d) v += L[c * m_ + d] * u.at(d, src);
        window_[(c * cells + jj) * w + mIdx] = v;
      }
    }
  }
  std::vector<double> tmp(static_cast<std::size_t>(m_) * block);
  for (int c = 0; c < m_; ++c) {
    const WindowView view{&window_[c * cells * w], w, cells};
    kernel_->run(view, h, std::span<double>(tmp).subspan(c * block, block));
  }
  for (std::size_t jj = 0; jj < cells; ++jj) {
    const double* R = &eig_[jj * 2 * mm + mm];
    for (std::size_t n = 0; n < nn; ++n)
      for (int d = 0; d < m_; ++d) {
        double v = 0.0;
        for (int c = 0; c < m_; ++c) v += R[d * m_ + c] * tmp[c * block + n * cells + jj];
        recon_[d * block + n * cells + jj] = v;
      }
  }
}

void SemiDiscrete::rhs(CellField& u, CellField& dudt) {
  fill_ghosts(u, bc_);
  reconstruct_states(u);
  const int M = grid_.cells();
  const std::size_t cells = M + 2;
  const std::size_t nn = kernel_->nodes().size();
  const std::size_t block = nn * cells;
  const double h = grid_.h();
  double uL[8], uR[8], F[8];
  const std::size_t m = m_;
  for (int i = 0; i <= M; ++i) {
    // x_{i-1/2}: right node of cell i-1 (index i), left node of cell i (index i+1)
    for (int c = 0; c < m_; ++c) {
      uL[c] = recon_[c * block + (nn - 1) * cells + i];
      uR[c] = recon_[c * block + i + 1];
    }
    llf_flux(model_, {uL, m}, {uR, m}, {F, m});
    for (int c = 0; c < m_; ++c) flux_[c * (M + 1) + i] = F[c];
  }
  if (model_.has_source()) {
    std::vector<double> samples(nn * m);
    double s[8];
    for (int j = 0; j < M; ++j) {
      for (std::size_t n = 0; n < nn; ++n)
        for (int c = 0; c < m_; ++c) samples[n * m + c] = recon_[c * block + n * cells + j + 1];
      model_.source_average({grid_.cell_lo(j), h, level_, m_, samples}, {s, m});
      for (int c = 0; c < m_; ++c) source_[c * M + j] = s[c];
    }
  }
  for (int c = 0; c < m_; ++c) {
    const double* f = &flux_[c * (M + 1)];
    const double* src = &source_[c * M];
    for (int j = 0; j < M; ++j) dudt.at(c, j) = -(f[j + 1] - f[j]) / h + src[j];
  }
}

CellField semidiscrete_rhs(const FluxModel& model, CellField& field, const SolverConfig& config) {
  SemiDiscrete op(model, field.grid(), config.scheme, config.bc, config.characteristic);
  CellField out(field.grid(), field.components());
  op.rhs(field, out);
  return out;
}

namespace {

double max_speed(const FluxModel& model, const CellField& u) {
  const int m = u.components();
  double s = 0.0, v[8];
  for (int j = 0; j < u.grid().cells(); ++j) {
    for (int c = 0; c < m; ++c) v[c] = u.at(c, j);
    s = std::max(s, model.max_wavespeed({v, static_cast<std::size_t>(m)}));
  }
  return s;
}

void check_state(const FluxModel& model, const CellField& u, std::size_t step) {
  const int m = u.components();
  double v[8];
  for (int j = 0; j < u.grid().cells(); ++j) {
    for (int c = 0; c < m; ++c) v[c] = u.at(c, j);
    if (!model.admissible({v, static_cast<std::size_t>(m)}))
      throw BlowUp(step, "inadmissible or non-finite state in cell " + std::to_string(j));
  }
}

}  // namespace

SolveResult advance(const FluxModel& model, const CellField& field0, const SolverConfig& config) {
  config.validate();
  const RKTableau tab = config.tableau ? *config.tableau : tableau_for_order(config.scheme.order);
  SemiDiscrete op(model, field0.grid(), config.scheme, config.bc, config.characteristic);
  const Grid& grid = field0.grid();
  const int m = field0.components();
  const int M = grid.cells();

  SolveResult res{field0, {}};
  CellField& u = res.field;
  CellField stage(grid, m);
  std::vector<CellField> k(tab.stages, CellField(grid, m));
  double t = 0.0;
  std::size_t step = 0;
  while (t < config.t_end) {
    if (step >= config.max_steps) throw BlowUp(step, "step limit reached");
    const double speed = max_speed(model, u);
    if (!std::isfinite(speed)) throw BlowUp(step, "non-finite wave speed");
    double dt = speed > 0.0 ? config.cfl * grid.h() / speed : config.t_end - t;
    bool last = false;
    if (t + dt >= config.t_end) {
      dt = config.t_end - t;
      last = true;
    }
    try {
      for (int i = 0; i < tab.stages; ++i) {
        for (int c = 0; c < m; ++c)
          for (int j = 0; j < M; ++j) {
            double v = u.at(c, j);
            for (int l = 0; l < i; ++l)
              if (tab.A(i, l) != 0.0) v += dt * tab.A(i, l) * k[l].at(c, j);
            stage.at(c, j) = v;
          }
        if (i > 0) check_state(model, stage, step);
        op.rhs(stage, k[i]);
      }
    } catch (const InadmissibleState& e) {
      throw BlowUp(step, e.what());
    }
    for (int c = 0; c < m; ++c)
      for (int j = 0; j < M; ++j) {
        double v = u.at(c, j);
        for (int l = 0; l < tab.stages; ++l)
          if (tab.b[l] != 0.0) v += dt * tab.b[l] * k[l].at(c, j);
        u.at(c, j) = v;
      }
    check_state(model, u, step);
    res.log.push_back({t, dt, speed});
    t = last ? config.t_end : t + dt;
    ++step;
  }
  fill_ghosts(u, config.bc);
  return res;
}

}  // namespace wenolab
