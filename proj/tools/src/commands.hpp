#pragma once

#include "config.hpp"
#include "report.hpp"

namespace fusionkit::cli {

/// Classification, C_S(T), C_S(E) by both pipelines, hyp(C_F(T)), Z(F)
/// and normalized chains for every --pair and --spec.
Report cmd_analyze(RunConfig const& config);
/// Suites: theorem-a, theorem-b, local, op-containment, gross,
/// hyperfocal, zstar, example.  ParseError on an unknown suite.
Report cmd_verify(RunConfig const& config);
/// which = 5.2 or 5.3, over --pair entries or (S_n, A_n) for n in
/// --n-range.
Report cmd_conjecture(RunConfig const& config);

}  // namespace fusionkit::cli
