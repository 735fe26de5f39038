#pragma once

#include "posetcodes/code_builder.hpp"
#include "posetcodes/distribution.hpp"
#include "posetcodes/poset.hpp"

namespace posetcodes::oracle {

// Exhaustive weight distributions, two independent routes.
//
// direct:  every message u, every g in D, literal inner products u.g.
// charsum: every message u != 0, wt(c_u) = (|D| + H(signs(u))) / 2 with H
//          the generating polynomial of I(P); never touches D.
//
// The unsuffixed versions partition the message range across OpenMP
// threads and merge per-thread histograms by addition. The *_serial
// versions are single-loop references kept for testing and benchmarks.

WeightDistribution direct_distribution(const DefiningSet& d);
WeightDistribution direct_distribution_serial(const DefiningSet& d);

WeightDistribution charsum_distribution(const TwoChainPoset& p, const IdealSpec& ideal);
WeightDistribution charsum_distribution_serial(const TwoChainPoset& p, const IdealSpec& ideal);

}  // namespace posetcodes::oracle
