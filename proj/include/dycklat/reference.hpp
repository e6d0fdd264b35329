#pragma once

// Serial reference implementations mirroring kernels.hpp.

#include "dycklat/kernels.hpp"

namespace dycklat::reference {

DegreeHistogram upper_cover_histogram(int n, FamilyParam p);
DegreeHistogram lower_cover_histogram(int n, FamilyParam p);

/// Ordered-pair loop over F_n^p filtered by kind (is_boolean / is_linear).
IntervalHistogram count_intervals(int n, FamilyParam p, IntervalKind kind);

/// mobius_bruteforce vs mobius over every interval, plus row sums.
MobiusSweep mobius_sweep(int n, FamilyParam p);

}  // namespace dycklat::reference
