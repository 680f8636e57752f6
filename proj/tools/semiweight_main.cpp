// Command-line front end. All computation goes through the shared-library C
// API in semiweight.h; this file only parses arguments and moves bytes.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "semiweight.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct StringHolder {
  char* ptr = nullptr;
  ~StringHolder() { sw_string_free(ptr); }
  std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

struct SemigroupHolder {
  sw_semigroup* ptr = nullptr;
  ~SemigroupHolder() { sw_semigroup_free(ptr); }
};

[[noreturn]] void die_usage(const std::string& msg) {
  std::cerr << "semiweight: " << msg << "\n";
  std::exit(kExitUsage);
}

[[noreturn]] void die_status(sw_status status) {
  std::cerr << "semiweight: " << sw_status_name(status) << ": "
            << sw_last_error() << "\n";
  std::exit(status == SW_ERR_ARGUMENT ? kExitUsage : kExitDomain);
}

void check(sw_status status) {
  if (status != SW_OK) die_status(status);
}

// Comma-separated strictly ascending positive integers.
std::vector<int64_t> parse_list(const std::string& text, const char* flag) {
  std::vector<int64_t> out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    try {
      size_t pos = 0;
      const int64_t v = std::stoll(token, &pos);
      if (pos != token.size() || v < 1) throw std::invalid_argument(token);
      if (!out.empty() && v <= out.back())
        die_usage(std::string(flag) + ": token '" + token +
                  "' breaks ascending order");
      out.push_back(v);
    } catch (const std::exception&) {
      die_usage(std::string(flag) + ": invalid token '" + token + "'");
    }
  }
  if (out.empty()) die_usage(std::string(flag) + ": empty list");
  return out;
}

void emit(const std::string& data, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << data;
    if (data.empty() || data.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream f(output_path, std::ios::binary);
  if (!f) die_usage("cannot open output file '" + output_path + "'");
  f << data;
  if (data.empty() || data.back() != '\n') f << "\n";
  if (!f) {
    std::cerr << "semiweight: IoError: failed writing '" << output_path << "'\n";
    std::exit(kExitDomain);
  }
}

uint64_t effective_node_cap(uint64_t flag_value) {
  if (const char* env = std::getenv("SEMIWEIGHT_NODE_CAP")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      die_usage("SEMIWEIGHT_NODE_CAP is not a valid integer");
    }
  }
  return flag_value;
}

SemigroupHolder build_semigroup(const std::vector<int64_t>& gens,
                                const std::vector<int64_t>& gaps) {
  SemigroupHolder s;
  if (!gens.empty())
    check(sw_semigroup_from_generators(gens.data(), gens.size(), &s.ptr));
  else
    check(sw_semigroup_from_gaps(gaps.data(), gaps.size(), &s.ptr));
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weight computations and exhaustive searches over numerical semigroups"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::simple);

  std::string output_path;
  int workers = 1;
  uint64_t node_cap = 0;  // 0 = library default
  app.add_option("--output", output_path, "write data to a file instead of stdout");
  app.add_option("--workers", workers, "worker threads for tree searches")
      ->check(CLI::PositiveNumber);
  app.add_option("--node-cap", node_cap, "tree node budget per query");

  // construct
  auto* cmd_construct = app.add_subcommand("construct", "build a closed-form family semigroup");
  std::string kind;
  int64_t N = 3, g = 0, gamma = 0;
  cmd_construct->add_option("--kind", kind, "ct | bc | sn | snstar")->required();
  cmd_construct->add_option("-N", N, "cover degree (default 3)");
  cmd_construct->add_option("-g", g, "genus")->required();
  cmd_construct->add_option("--gamma", gamma, "base genus")->required();

  // weight
  auto* cmd_weight = app.add_subcommand("weight", "weight report for a semigroup");
  std::string gens_text, gaps_text;
  cmd_weight->add_option("--gens", gens_text, "comma-separated generators");
  cmd_weight->add_option("--gaps", gaps_text, "comma-separated gaps");

  // enumerate
  auto* cmd_enum = app.add_subcommand("enumerate", "stream semigroups of a genus as JSON lines");
  int64_t en_g = 0, en_N = 3, en_gamma = 0;
  bool en_hyper = false;
  cmd_enum->add_option("-g", en_g, "genus")->required();
  cmd_enum->add_flag("--hyper", en_hyper, "restrict to the (N, gamma) family");
  cmd_enum->add_option("-N", en_N, "cover degree for --hyper");
  cmd_enum->add_option("--gamma", en_gamma, "base genus for --hyper");

  // search-max
  auto* cmd_search = app.add_subcommand("search-max", "exhaustive maximal-weight search");
  int64_t sm_N = 3, sm_gamma = 0, sm_g = 0;
  cmd_search->add_option("-N", sm_N, "cover degree")->required();
  cmd_search->add_option("--gamma", sm_gamma, "base genus")->required();
  cmd_search->add_option("-g", sm_g, "genus")->required();

  // threshold
  auto* cmd_threshold = app.add_subcommand(
      "threshold",
      "compare brute-force maxima against the reference construction over a genus range");
  int64_t th_N = 3, th_gamma = 0, th_lo = 0, th_hi = 0;
  std::string th_format = "text";
  cmd_threshold->add_option("-N", th_N, "cover degree")->required();
  cmd_threshold->add_option("--gamma", th_gamma, "base genus")->required();
  cmd_threshold->add_option("--g-lo", th_lo, "first genus")->required();
  cmd_threshold->add_option("--g-hi", th_hi, "last genus")->required();
  cmd_threshold->add_option("--format", th_format, "text | json");

  // buchweitz
  auto* cmd_buch = app.add_subcommand("buchweitz", "realizability criterion per n");
  std::string bu_gens_text;
  bool bu_sn = false;
  int64_t bu_N = 3, bu_g = 0, bu_gamma = 0, bu_nmax = 5;
  cmd_buch->add_option("--gens", bu_gens_text, "comma-separated generators");
  cmd_buch->add_flag("--sn", bu_sn, "use the S_N construction");
  cmd_buch->add_option("-N", bu_N, "cover degree for --sn");
  cmd_buch->add_option("-g", bu_g, "genus for --sn");
  cmd_buch->add_option("--gamma", bu_gamma, "base genus for --sn");
  cmd_buch->add_option("--n-max", bu_nmax, "largest n to check (default 5)");

  // bounds
  auto* cmd_bounds = app.add_subcommand("bounds", "family weight bounds at (N, gamma, g)");
  int64_t bo_N = 3, bo_gamma = 0, bo_g = 0;
  cmd_bounds->add_option("-N", bo_N, "cover degree")->required();
  cmd_bounds->add_option("--gamma", bo_gamma, "base genus")->required();
  cmd_bounds->add_option("-g", bo_g, "genus")->required();

  // dyck
  auto* cmd_dyck = app.add_subcommand("dyck", "lattice-path rendering whose area is the weight");
  std::string dy_gens_text, dy_gaps_text, dy_format = "ascii";
  cmd_dyck->add_option("--gens", dy_gens_text, "comma-separated generators");
  cmd_dyck->add_option("--gaps", dy_gaps_text, "comma-separated gaps");
  cmd_dyck->add_option("--format", dy_format, "ascii | svg");

  // sweep
  auto* cmd_sweep = app.add_subcommand("sweep", "CSV sweep over a parameter grid");
  std::string sweep_spec_path;
  cmd_sweep->add_option("--spec", sweep_spec_path, "JSON grid spec file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "semiweight: " << e.what() << "\n";
    return kExitUsage;
  }

  const uint64_t cap = effective_node_cap(node_cap);

  if (*cmd_construct) {
    StringHolder out;
    check(sw_construct_json(kind.c_str(), N, g, gamma, &out.ptr));
    emit(out.str(), output_path);
  } else if (*cmd_weight) {
    if (gens_text.empty() == gaps_text.empty())
      die_usage("weight needs exactly one of --gens or --gaps");
    const auto gens = gens_text.empty() ? std::vector<int64_t>{}
                                        : parse_list(gens_text, "--gens");
    const auto gaps = gaps_text.empty() ? std::vector<int64_t>{}
                                        : parse_list(gaps_text, "--gaps");
    SemigroupHolder s = build_semigroup(gens, gaps);
    StringHolder out;
    check(sw_weight_report_json(s.ptr, &out.ptr));
    emit(out.str(), output_path);
  } else if (*cmd_enum) {
    if (en_hyper && (!cmd_enum->count("-N") || !cmd_enum->count("--gamma")))
      die_usage("enumerate --hyper needs -N and --gamma");
    std::ostringstream lines;
    auto cb = [](const char* line, void* user) -> int {
      *static_cast<std::ostringstream*>(user) << line << "\n";
      return 0;
    };
    check(sw_enumerate(en_g, en_hyper ? 1 : 0, en_N, en_gamma, cap, workers,
                       cb, &lines));
    emit(lines.str(), output_path);
  } else if (*cmd_search) {
    StringHolder out;
    check(sw_search_max_json(sm_N, sm_gamma, sm_g, cap, workers, &out.ptr));
    emit(out.str(), output_path);
  } else if (*cmd_threshold) {
    if (th_format != "text" && th_format != "json")
      die_usage("threshold --format must be text or json");
    StringHolder out;
    if (th_format == "json")
      check(sw_threshold_scan_json(th_N, th_gamma, th_lo, th_hi, cap, workers,
                                   &out.ptr));
    else
      check(sw_threshold_scan_table(th_N, th_gamma, th_lo, th_hi, cap, workers,
                                    &out.ptr));
    emit(out.str(), output_path);
  } else if (*cmd_buch) {
    if (bu_sn == !bu_gens_text.empty())
      die_usage("buchweitz needs exactly one of --gens or --sn");
    if (bu_nmax > 8)
      std::cerr << "semiweight: note: n-max " << bu_nmax
                << " grows the n-fold sumsets quickly; expect a slow run\n";
    StringHolder out;
    if (bu_sn) {
      check(sw_buchweitz_sn_json(bu_N, bu_g, bu_gamma, bu_nmax, &out.ptr));
    } else {
      const auto gens = parse_list(bu_gens_text, "--gens");
      SemigroupHolder s;
      check(sw_semigroup_from_generators(gens.data(), gens.size(), &s.ptr));
      check(sw_buchweitz_json(s.ptr, bu_nmax, &out.ptr));
    }
    emit(out.str(), output_path);
  } else if (*cmd_bounds) {
    StringHolder out;
    check(sw_bounds_json(bo_N, bo_gamma, bo_g, &out.ptr));
    emit(out.str(), output_path);
  } else if (*cmd_dyck) {
    if (dy_gens_text.empty() == dy_gaps_text.empty())
      die_usage("dyck needs exactly one of --gens or --gaps");
    if (dy_format != "ascii" && dy_format != "svg")
      die_usage("dyck --format must be ascii or svg");
    const auto gens = dy_gens_text.empty() ? std::vector<int64_t>{}
                                           : parse_list(dy_gens_text, "--gens");
    const auto gaps = dy_gaps_text.empty() ? std::vector<int64_t>{}
                                           : parse_list(dy_gaps_text, "--gaps");
    SemigroupHolder s = build_semigroup(gens, gaps);
    StringHolder out;
    check(sw_dyck_render(s.ptr, dy_format.c_str(), &out.ptr));
    emit(out.str(), output_path);
  } else if (*cmd_sweep) {
    std::ifstream f(sweep_spec_path, std::ios::binary);
    if (!f) {
      std::cerr << "semiweight: IoError: cannot read spec file '"
                << sweep_spec_path << "'\n";
      return kExitDomain;
    }
    std::ostringstream buf;
    buf << f.rdbuf();
    StringHolder csv, notes;
    check(sw_sweep_csv(buf.str().c_str(), cap, workers, &csv.ptr, &notes.ptr));
    if (!notes.str().empty()) std::cerr << notes.str();
    emit(csv.str(), output_path);
  }
  return kExitOk;
}
