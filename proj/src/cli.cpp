#include "whm/cli.hpp"

#include <charconv>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "whm/ball.hpp"
#include "whm/bounds.hpp"
#include "whm/channel.hpp"
#include "whm/code_io.hpp"
#include "whm/constructions.hpp"
#include "whm/error.hpp"
#include "whm/report.hpp"

namespace whm::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class T>
std::vector<T> parse_list(const std::string& text, const char* what) {
  std::vector<T> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    T v{};
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc{} || ptr != item.data() + item.size() || item.empty()) {
      throw UsageError(std::string("bad ") + what + " entry '" + item + "'");
    }
    out.push_back(v);
  }
  if (out.empty()) throw UsageError(std::string("empty ") + what + " list");
  return out;
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto v = parse_list<std::uint64_t>(text, "distance");
    if (v.size() != 1) throw UsageError("distance must be 'a' or 'a..b'");
    return {v[0], v[0]};
  }
  const auto lo = parse_list<std::uint64_t>(text.substr(0, dots), "range start");
  const auto hi = parse_list<std::uint64_t>(text.substr(dots + 2), "range end");
  if (lo.size() != 1 || hi.size() != 1) throw UsageError("malformed range '" + text + "'");
  return {lo[0], hi[0]};
}

std::string join(std::span<const Elem> v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

std::string enumerator_text(const TWeightEnumerator& en, std::size_t m, const std::string& format) {
  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [t, c] : en.counts()) arr.push_back({{"t_weight", t.w}, {"count", c.get_str()}});
    return arr.dump(2) + "\n";
  }
  std::string out;
  for (std::size_t l = 0; l < m; ++l) out += "w" + std::to_string(l + 1) + ',';
  out += "count\n";
  for (const auto& [t, c] : en.counts()) {
    for (std::uint32_t w : t.w) out += std::to_string(w) + ',';
    out += c.get_str() + '\n';
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weighted-Hamming metric toolkit for parallel q-ary symmetric channels", "whm"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  std::string out_path;
  app.add_option("--out", out_path, "Write the result to this file instead of stdout");

  // Shared option storage.
  std::uint32_t q = 0;
  std::string blocks_text, code_path, format = "csv", rho_text, range_text;

  auto* bounds = app.add_subcommand("bounds", "Tabulate all bounds on the dimension");
  bounds->add_option("--q", q)->required();
  bounds->add_option("--blocks", blocks_text, "n1:l1,n2:l2,...")->required();
  bounds->add_option("--d", range_text, "Distance or inclusive range a..b")->required();
  bounds->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

  std::uint64_t radius = 0;
  bool per_sphere = false;
  auto* ball = app.add_subcommand("ball", "Size of a weighted-Hamming ball");
  ball->add_option("--q", q)->required();
  ball->add_option("--blocks", blocks_text)->required();
  ball->add_option("--radius", radius)->required();
  ball->add_flag("--per-sphere", per_sphere, "Print 's,count' per sphere instead");

  std::string method = "auto";
  bool witness = false;
  auto* mind = app.add_subcommand("min-distance", "Exact minimum weighted-Hamming distance");
  mind->add_option("--code", code_path)->required();
  mind->add_option("--method", method)->check(CLI::IsMember({"auto", "codebook", "support-enum"}));
  mind->add_flag("--witness", witness, "Also print a minimum-weight codeword");

  bool oracle = false;
  auto* tau_cmd = app.add_subcommand("tau", "Guaranteed error-correction capability");
  tau_cmd->add_option("--code", code_path)->required();
  tau_cmd->add_flag("--oracle", oracle, "Evaluate the definition over the whole ambient space");

  auto* enumer = app.add_subcommand("enumerator", "T-weight enumerator");
  enumer->add_option("--code", code_path)->required();
  enumer->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

  std::string dual_out;
  auto* dual = app.add_subcommand("dual", "T-weight enumerator of the dual code via MacWilliams");
  dual->add_option("--code", code_path)->required();
  dual->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  dual->add_option("--code-out", dual_out, "Also write the dual code file here");

  std::string family = "binary";
  std::uint32_t n1 = 0, n2 = 0;
  auto* construct = app.add_subcommand("construct", "Build the two-block distance-5 code");
  construct->add_option("--family", family)->check(CLI::IsMember({"binary", "mds"}));
  construct->add_option("--q", q)->required();
  construct->add_option("--n1", n1)->required();
  construct->add_option("--n2", n2)->required();

  std::string received_text;
  auto* decode = app.add_subcommand("decode", "Decode a received word");
  decode->add_option("--code", code_path)->required();
  decode->add_option("--received", received_text, "Comma-separated symbols")->required();

  std::string decoder = "ml", lambda_text;
  std::uint64_t trials = 0, seed = 1;
  auto* sim = app.add_subcommand("simulate", "Monte Carlo over parallel q-ary symmetric channels");
  sim->add_option("--code", code_path)->required();
  sim->add_option("--rho", rho_text)->required();
  sim->add_option("--decoder", decoder)->check(CLI::IsMember({"ml", "wh-real", "wh-int"}));
  sim->add_option("--lambda", lambda_text, "Integer weights for wh-int (default: code scalings)");
  sim->add_option("--trials", trials)->required();
  sim->add_option("--seed", seed);
  sim->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  double threshold = 0.0;
  auto* coverage = app.add_subcommand("coverage", "Do all likely error patterns lie within tau?");
  coverage->add_option("--code", code_path)->required();
  coverage->add_option("--rho", rho_text)->required();
  coverage->add_option("--threshold", threshold)->required();

  std::size_t k = 0;
  std::uint64_t d_target = 0;
  auto* gv = app.add_subcommand("gv-experiment", "Distances of random linear codes");
  gv->add_option("--q", q)->required();
  gv->add_option("--blocks", blocks_text)->required();
  gv->add_option("--k", k)->required();
  gv->add_option("--d", d_target)->required();
  gv->add_option("--trials", trials)->required();
  gv->add_option("--seed", seed);

  std::uint32_t cap = 64;
  auto* scalings = app.add_subcommand("scalings", "Decoder weights from crossover probabilities");
  scalings->add_option("--q", q)->required();
  scalings->add_option("--rho", rho_text)->required();
  scalings->add_option("--cap", cap);

  std::string out_dir = ".";
  auto* fig = app.add_subcommand("figure1", "Write the bound tables for blocks 7:1,7:2 at q = 2 and 7");
  fig->add_option("--out-dir", out_dir);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "UsageError: " << e.what() << '\n';
    return 2;
  }

  std::ostringstream result;
  try {
    CLI::App* cmd = app.get_subcommands().front();
    const std::string name = cmd->get_name();
    // The counting formulas accept any alphabet size; the tool works over prime fields.
    if (name == "bounds" || name == "ball") Field{q};
    if (name == "bounds") {
      const auto [lo, hi] = parse_range(range_text);
      const auto rows = bounds_table(q, BlockStructure::parse(blocks_text), lo, hi);
      result << (format == "json" ? bounds_json(rows) : bounds_csv(rows));
    } else if (name == "ball") {
      const BlockStructure bs = BlockStructure::parse(blocks_text);
      if (per_sphere) {
        const auto dist = weight_distribution(q, bs, radius);
        for (std::size_t s = 0; s < dist.size(); ++s) result << s << ',' << dist[s].get_str() << '\n';
      } else {
        result << ball_size(q, bs, radius).get_str() << '\n';
      }
    } else if (name == "min-distance") {
      const CodeFile cf = read_code_file(code_path);
      const DistanceMethod dm = method == "codebook"       ? DistanceMethod::Codebook
                                : method == "support-enum" ? DistanceMethod::SupportEnum
                                                           : DistanceMethod::Auto;
      const DistanceResult res = min_wh_distance(cf.code, dm);
      result << res.distance << '\n';
      if (witness) result << join(res.witness) << '\n';
    } else if (name == "tau") {
      const CodeFile cf = read_code_file(code_path);
      result << (oracle ? tau_oracle(cf.code) : whm::tau(cf.code)) << '\n';
    } else if (name == "enumerator") {
      const CodeFile cf = read_code_file(code_path);
      result << enumerator_text(t_weight_enumerator(cf.code), cf.code.blocks().m(), format);
    } else if (name == "dual") {
      const CodeFile cf = read_code_file(code_path);
      const TWeightEnumerator a = t_weight_enumerator(cf.code);
      const TWeightEnumerator b =
          macwilliams_transform(a, cf.code.field().q(), cf.code.blocks(), a.total());
      result << enumerator_text(b, cf.code.blocks().m(), format);
      if (!dual_out.empty()) write_file_atomic(dual_out, code_file_json(cf.code.dual()));
    } else if (name == "construct") {
      const ConstructedCode cc = ConstructedCode::build(Field(q), n1, n2, parse_family(family));
      result << code_file_json(cc);
    } else if (name == "decode") {
      const CodeFile cf = read_code_file(code_path);
      const auto r = parse_list<Elem>(received_text, "received symbol");
      for (Elem e : r) {
        if (e >= cf.code.field().q()) throw UsageError("received symbol out of range");
      }
      std::optional<Vector> decoded;
      if (cf.construction) {
        decoded = cf.construction->decode(r);
      } else {
        const auto sc = cf.code.blocks().scalings();
        const std::vector<double> weights(sc.begin(), sc.end());
        auto set = wh_decode(cf.code, r, weights);
        if (set.size() == 1) decoded = set.front();
      }
      result << (decoded ? join(*decoded) : std::string("FAIL")) << '\n';
    } else if (name == "simulate") {
      const CodeFile cf = read_code_file(code_path);
      const ChannelSpec spec(cf.code.field().q(), parse_list<double>(rho_text, "rho"), cf.code.blocks());
      DecoderChoice dc;
      dc.kind = decoder == "ml" ? DecoderKind::Ml : decoder == "wh-real" ? DecoderKind::WhReal
                                                                         : DecoderKind::WhInteger;
      dc.integer_weights = lambda_text.empty() ? cf.code.blocks().scalings()
                                               : parse_list<std::uint32_t>(lambda_text, "lambda");
      const SimulationStats st = simulate(cf.code, spec, dc, trials, seed);
      if (format == "text") {
        result << "trials=" << st.trials << "\nword_errors=" << st.word_errors
               << "\ndecode_failures=" << st.decode_failures << "\nempirical_wer=" << st.empirical_wer
               << "\nseed=" << st.seed << '\n';
      } else {
        nlohmann::json j{{"trials", st.trials},
                         {"word_errors", st.word_errors},
                         {"decode_failures", st.decode_failures},
                         {"empirical_wer", st.empirical_wer},
                         {"per_block_symbol_error_rate", st.per_block_symbol_error_rate},
                         {"seed", st.seed}};
        result << j.dump(2) << '\n';
      }
    } else if (name == "coverage") {
      const CodeFile cf = read_code_file(code_path);
      const ChannelSpec spec(cf.code.field().q(), parse_list<double>(rho_text, "rho"), cf.code.blocks());
      const CoverageResult cr = coverage_check(cf.code, spec, threshold);
      result << (cr.holds ? "true" : "false") << '\n';
      if (cr.witness) result << join(*cr.witness) << '\n';
    } else if (name == "gv-experiment") {
      const GvExperiment ex = gv_experiment(Field(q), BlockStructure::parse(blocks_text), k, d_target,
                                            trials, seed);
      nlohmann::json j{{"success_fraction", ex.success_fraction}, {"distances", ex.distances}};
      result << j.dump() << '\n';
    } else if (name == "scalings") {
      const ScalingFit fit = optimal_scalings(parse_list<double>(rho_text, "rho"), q, cap);
      nlohmann::json j{{"real_weights", fit.real_weights},
                       {"integer_weights", fit.integer_weights},
                       {"scale_error", fit.scale_error}};
      result << j.dump() << '\n';
    } else if (name == "figure1") {
      figure1(out_dir);
      result << "wrote " << (std::filesystem::path(out_dir) / "fig1a_q2.csv").string() << " and "
             << (std::filesystem::path(out_dir) / "fig1b_q7.csv").string() << '\n';
    }
  } catch (const UsageError& e) {
    err << "UsageError: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    // Bad block strings and code files are the caller's input, not a domain failure.
    err << e.name() << ": " << e.what() << '\n';
    return e.kind() == ErrorKind::MalformedInput ? 2 : 1;
  } catch (const std::exception& e) {
    err << "IoError: " << e.what() << '\n';
    return 1;
  }

  if (out_path.empty()) {
    out << result.str();
  } else {
    try {
      write_file_atomic(out_path, result.str());
    } catch (const std::exception& e) {
      err << "IoError: " << e.what() << '\n';
      return 1;
    }
  }
  return 0;
}

}  // namespace whm::cli
