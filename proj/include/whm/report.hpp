#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "whm/bounds.hpp"

namespace whm {

/// Header `d,singleton,hamming,gv,plotkin,lp`; plotkin left empty when the
/// bound does not apply.
std::string bounds_csv(const std::vector<BoundReport>& rows);
std::string bounds_json(const std::vector<BoundReport>& rows);

/// Bound table for blocks (7,7), scalings (1,2), d = 1..21 with an extra
/// `construction` column holding the dimension of the two-block distance-5
/// construction at d = 5 (binary for q = 2, MDS rows otherwise).
std::string figure1_csv(std::uint32_t q);

/// Writes fig1a_q2.csv and fig1b_q7.csv into `out_dir`.
void figure1(const std::filesystem::path& out_dir);

}  // namespace whm
