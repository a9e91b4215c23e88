#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "afc1d/assembly.hpp"
#include "afc1d/fields.hpp"

namespace afc {

// Per-edge flux data, stored once per undirected edge in the i < j
// orientation. Directed quantities for (j, i) are the negatives, which
// makes conservation structural. Edges with d_ij = 0 are flagged
// degenerate, carry no antidiffusion, and are skipped by the limiter.
struct EdgeFluxSet {
  std::vector<double> fD;             // d_ij (u_i - u_j)
  std::vector<double> fM;             // m_ij (udot_i - udot_j)
  std::vector<double> barIJ, barJI;   // bar states of the edge
  std::vector<double> fStar;          // first-pass limited flux
  std::vector<double> fDotPre;        // prelimited mass-antidiffusion flux
  std::vector<double> fDotStar;       // limited mass-antidiffusion flux
  std::vector<double> fFinal;         // flux entering the scheme
  std::vector<double> alpha;          // diffusive correction factor
  std::vector<double> alphaDot;       // mass correction factor
  std::vector<double> alphaDotMinus;  // per-edge sign-split mass factor
  std::vector<std::uint8_t> degenerate;
  double alphaPlus = 1.0;             // global factors set by the limiter
  double alphaMinus = 1.0;

  void resize(std::size_t n);
  std::size_t size() const { return fD.size(); }
};

EdgeFluxSet make_edge_flux_set(const SystemOperators& ops);

// Advective flux potential: udotA_i = (b_i - sum_j a_ij u_j) / m_i.
NodalField advective_potential(const NodalField& u, const SystemOperators& ops,
                               std::span<const double> b);

// Low-order dissipative potential:
// udotD_i = (omega / m_i) sum_{j != i} d_ij (u_j - u_i).
NodalField dissipative_potential_loworder(const NodalField& u,
                                          const SystemOperators& ops, double omega);

// Mass-weighted average of discrete Laplacians with dimensionally consistent
// scaling factors beta_l; its lumped reduction coincides with the low-order
// potential on uniform meshes with constant velocity.
NodalField dissipative_potential_biharmonic(const NodalField& u,
                                            const SystemOperators& ops,
                                            double omega);

std::vector<double> biharmonic_beta(const SystemOperators& ops);

// Fills fD, fM and the degeneracy flags.
void raw_fluxes(const NodalField& u, const NodalField& udot,
                const SystemOperators& ops, EdgeFluxSet& edges);

// bar_ij = (u_i + u_j)/2 - a_ij (u_j - u_i) / (2 d_ij); for the Rusanov
// diffusion every bar state lies between u_i and u_j.
void bar_states(const NodalField& u, const SystemOperators& ops, EdgeFluxSet& edges);

// Stencil min/max of u; at inflow nodes the bounds also admit the inflow
// datum value.
LocalBounds local_bounds(const NodalField& u, const SystemOperators& ops,
                         double uin_value);

}  // namespace afc
