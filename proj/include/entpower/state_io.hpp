#pragma once

#include <iosfwd>
#include <string>

#include "entpower/types.hpp"

namespace entpower::io
{

/// Amplitude file: one complex per line as "re im", 2^N lines, big-endian
/// basis order. Blank lines and lines starting with '#' are skipped. The norm
/// may be off by at most `norm_tol`; the state is then renormalized.
PureState read_amplitudes(std::istream& in, double norm_tol = 1e-6);

/// "ghz", "w", "plus" or "product" (|0...0>).
PureState named_state(const std::string& name, int num_qubits);

} // namespace entpower::io
