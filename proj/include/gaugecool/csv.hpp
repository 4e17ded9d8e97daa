#pragma once

#include "gaugecool/experiments.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace gaugecool::csv {

/// 12 significant digits, '.' decimal separator.
std::string number(double x);

/// Comma-joined fields terminated by '\n'.
std::string line(const std::vector<std::string>& fields);

void write_evolution(std::ostream& out, const std::vector<EvolutionRow>& rows);
void write_convergence(std::ostream& out, const std::vector<ConvergenceRow>& rows);
/// Section-tagged rows: section,label,v1..v4.
void write_kl_audit(std::ostream& out);

}  // namespace gaugecool::csv
