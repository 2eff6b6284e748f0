#include "whm/report.hpp"

#include "json.hpp"
#include "whm/code_io.hpp"
#include "whm/constructions.hpp"

namespace whm {

namespace {

std::string row_prefix(const BoundReport& r) {
  std::string line = std::to_string(r.d) + ',' + std::to_string(r.singleton_k) + ',' +
                     std::to_string(r.hamming_k) + ',' + std::to_string(r.gv_k) + ',';
  if (r.plotkin_k) line += std::to_string(*r.plotkin_k);
  line += ',' + std::to_string(r.lp_k);
  return line;
}

}  // namespace

std::string bounds_csv(const std::vector<BoundReport>& rows) {
  std::string out = "d,singleton,hamming,gv,plotkin,lp\n";
  for (const BoundReport& r : rows) out += row_prefix(r) + '\n';
  return out;
}

std::string bounds_json(const std::vector<BoundReport>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const BoundReport& r : rows) {
    nlohmann::json blocks = nlohmann::json::array();
    for (const Block& b : r.bs.blocks()) blocks.push_back({{"n", b.length}, {"lambda", b.scaling}});
    arr.push_back({{"q", r.q},
                   {"blocks", blocks},
                   {"d", r.d},
                   {"singleton_k", r.singleton_k},
                   {"hamming_k", r.hamming_k},
                   {"gv_k", r.gv_k},
                   {"plotkin_k", r.plotkin_k ? nlohmann::json(*r.plotkin_k) : nlohmann::json(nullptr)},
                   {"lp_k", r.lp_k},
                   {"lp_value", r.lp_value.get_str()}});
  }
  return arr.dump(2) + "\n";
}

std::string figure1_csv(std::uint32_t q) {
  const BlockStructure bs({{7, 1}, {7, 2}});
  const Field field(q);
  const ConstructedCode cc =
      ConstructedCode::build(field, 7, 7, q == 2 ? Family::Binary : Family::Mds);
  std::string out = "d,singleton,hamming,gv,plotkin,lp,construction\n";
  for (const BoundReport& r : bounds_table(q, bs, 1, bs.max_weight())) {
    out += row_prefix(r) + ',';
    if (r.d == 5) out += std::to_string(cc.code().k());
    out += '\n';
  }
  return out;
}

void figure1(const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);
  write_file_atomic(out_dir / "fig1a_q2.csv", figure1_csv(2));
  write_file_atomic(out_dir / "fig1b_q7.csv", figure1_csv(7));
}

}  // namespace whm
