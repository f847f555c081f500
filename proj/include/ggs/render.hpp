#pragma once

#include <string>

#include "ggs/cancel.hpp"
#include "ggs/chain.hpp"
#include "ggs/spectral.hpp"

namespace ggs {

// Boundary matrix in the style of the paper's tables: labeled rows/columns.
std::string render_matrix(const ChainComplex& cc);

// Aligned positions-by-pages grid plus the differential arrows.
std::string render_pages(const ChainComplex& cc, const std::vector<Page>& pages,
                         const std::vector<DifferentialRecord>& diffs);

std::string render_homology(const HomologyResult& h);

std::string render_report(const ValidationReport& rep);

// Step-by-step cancellation narrative with per-step matrices.
std::string render_trace(const ReductionTrace& trace);

// Event DAG of a reduction (consumed singularities -> successor).
std::string trace_dot(const ReductionTrace& trace);

}  // namespace ggs
