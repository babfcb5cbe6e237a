#pragma once

#include <iosfwd>
#include <string>

#include "wavecone/dimension.hpp"
#include "wavecone/functionals.hpp"
#include "wavecone/nonlinear.hpp"
#include "wavecone/radiation.hpp"
#include "wavecone/state.hpp"

namespace wavecone {

/// Shortest decimal string that reads back to exactly `x`.
std::string format_double(double x);

/// eta,G,g
void write_profile_csv(std::ostream& os, const RadiationProfile& profile);
/// Reads eta,G[,g]; eta must be uniformly spaced. The primitive is recomputed
/// when the g column is absent.
RadiationProfile read_profile_csv(std::istream& is, Dimension dim);

/// r,u,ut for one state.
void write_state_csv(std::ostream& os, const RadialState& state);
/// Reads r,u,ut with r = 0, dr, 2 dr, ...
RadialState read_state_csv(std::istream& is);

/// t,r,u,ut for every snapshot, subsampling nodes by `node_stride`.
void write_snapshots_csv(std::ostream& os, const Trajectory& traj, std::size_t node_stride = 1);

/// t,identity,lhs,rhs,residual
void write_virial_csv(std::ostream& os, const VirialReport& report);

}  // namespace wavecone
