#include "whm/code_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "whm/error.hpp"

namespace whm {

using nlohmann::json;

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::MalformedInput, what); }

Matrix matrix_from_json(const json& j, std::size_t cols, const char* what) {
  if (!j.is_array()) malformed(std::string(what) + " must be a list of rows");
  std::vector<std::vector<Elem>> rows;
  for (const json& row : j) {
    if (!row.is_array()) malformed(std::string(what) + " rows must be lists");
    std::vector<Elem> r;
    for (const json& e : row) {
      if (!e.is_number_integer() || e.get<std::int64_t>() < 0 || e.get<std::int64_t>() > 65535) {
        malformed(std::string(what) + " entries must be integers in [0, q)");
      }
      r.push_back(static_cast<Elem>(e.get<std::int64_t>()));
    }
    rows.push_back(std::move(r));
  }
  return Matrix::from_rows(rows, cols);
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(json(std::vector<Elem>(m.row(r).begin(), m.row(r).end())));
  return rows;
}

json code_json(const LinearCode& code) {
  json blocks = json::array();
  for (const Block& b : code.blocks().blocks()) blocks.push_back({{"n", b.length}, {"lambda", b.scaling}});
  return json{{"q", code.field().q()}, {"blocks", blocks}, {"generator", matrix_to_json(code.generator())}};
}

std::uint32_t get_uint(const json& obj, const char* key) {
  if (!obj.contains(key) || !obj[key].is_number_unsigned()) {
    malformed(std::string("field '") + key + "' must be a non-negative integer");
  }
  return obj[key].get<std::uint32_t>();
}

}  // namespace

CodeFile parse_code_file(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) malformed("code file must be a JSON object");
  const Field field(get_uint(doc, "q"));
  if (!doc.contains("blocks") || !doc["blocks"].is_array()) malformed("'blocks' must be a list");
  std::vector<Block> blocks;
  for (const json& b : doc["blocks"]) {
    if (!b.is_object()) malformed("each block must be an object {n, lambda}");
    blocks.push_back({get_uint(b, "n"), get_uint(b, "lambda")});
  }
  const BlockStructure bs(std::move(blocks));

  const bool has_g = doc.contains("generator");
  const bool has_h = doc.contains("parity_check");
  if (has_g == has_h) malformed("exactly one of 'generator' and 'parity_check' must be present");
  LinearCode code = has_g ? LinearCode::from_generator(field, bs, matrix_from_json(doc["generator"], bs.n(), "generator"))
                          : LinearCode::from_parity_check(field, bs, matrix_from_json(doc["parity_check"], bs.n(), "parity_check"));

  std::optional<ConstructedCode> construction;
  if (doc.contains("construction")) {
    const json& c = doc["construction"];
    if (!c.is_object() || !c.contains("family") || !c["family"].is_string()) {
      malformed("'construction' needs a string 'family'");
    }
    for (const char* key : {"h1", "h2", "h3"}) {
      if (!c.contains(key)) malformed(std::string("'construction' lacks '") + key + "'");
    }
    if (bs.m() != 2) malformed("constructed codes have exactly two blocks");
    const std::size_t n1 = bs.block(0).length, n2 = bs.block(1).length;
    ConstructedCode cc = ConstructedCode::from_parts(
        field, parse_family(c["family"].get<std::string>()), matrix_from_json(c["h1"], n1, "h1"),
        matrix_from_json(c["h2"], n2, "h2"), matrix_from_json(c["h3"], n1, "h3"));
    if (!(cc.code().generator() == code.generator()) || !(cc.code().blocks() == bs)) {
      malformed("construction matrices do not describe the stored code");
    }
    construction = std::move(cc);
  }
  return CodeFile{std::move(code), std::move(construction)};
}

CodeFile read_code_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot read code file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_code_file(buf.str());
}

std::string code_file_json(const LinearCode& code) { return code_json(code).dump() + "\n"; }

std::string code_file_json(const ConstructedCode& cc) {
  json doc = code_json(cc.code());
  doc["construction"] = {{"family", family_name(cc.family())},
                         {"h1", matrix_to_json(cc.h1())},
                         {"h2", matrix_to_json(cc.h2())},
                         {"h3", matrix_to_json(cc.h3())}};
  return doc.dump() + "\n";
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
    if (!out.flush()) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace whm
