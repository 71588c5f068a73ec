#pragma once

#include "zec/channel.hpp"

namespace zec {

/// Noiseless channel on a d-dimensional space.
KrausChannel identity_channel(int dim);

/// Channel mapping every state to the maximally mixed state I/d.
KrausChannel completely_mixing_channel(int dim);

/// Five-dimensional channel with three Kraus operators parameterized by
/// alpha and beta. Each computational-basis input is confusable with exactly
/// its cyclic neighbors, so the characteristic graph under the canonical
/// basis pair is a 5-cycle for every alpha, beta strictly inside (0, 0.5).
/// At the boundary the operator entries degenerate and the graph changes,
/// so the open interval is enforced (ParameterOutOfRangeError).
KrausChannel pentagon_channel(double alpha = 0.35, double beta = 0.35);

}  // namespace zec
