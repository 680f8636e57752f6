#include "semiweight/sweep.hpp"

#include <sstream>

#include "semiweight/buchweitz.hpp"
#include "semiweight/emit.hpp"
#include "semiweight/errors.hpp"

namespace semiweight {

namespace {

ConstructionResult dispatch(ConstructionKind kind, std::int64_t N,
                            std::int64_t g, std::int64_t gamma) {
  switch (kind) {
    case ConstructionKind::ct:
      if (N != 3)
        fail(ErrorCode::construction_out_of_domain, "kind ct is defined for N = 3");
      return construct_ct(g, gamma);
    case ConstructionKind::bc:
      if (N != 3)
        fail(ErrorCode::construction_out_of_domain, "kind bc is defined for N = 3");
      return construct_bc(g, gamma);
    case ConstructionKind::sn:
      return construct_sn(N, g, gamma);
    case ConstructionKind::snstar:
      return construct_snstar(N, g, gamma);
  }
  fail(ErrorCode::invalid_argument, "unknown construction kind");
}

}  // namespace

SweepOutput run_sweep(const std::string& spec_json, const ExploreOptions& options) {
  Json spec;
  try {
    spec = Json::parse(spec_json);
  } catch (const std::exception& e) {
    fail(ErrorCode::io_error, std::string("sweep spec is not valid JSON: ") + e.what());
  }
  for (const char* key : {"N", "gamma", "g", "kinds"})
    if (!spec.contains(key))
      fail(ErrorCode::invalid_argument,
           std::string("sweep spec is missing key '") + key + "'");

  std::vector<std::int64_t> ns, gammas;
  try {
    ns = spec.at("N").get<std::vector<std::int64_t>>();
    gammas = spec.at("gamma").get<std::vector<std::int64_t>>();
  } catch (const std::exception&) {
    fail(ErrorCode::invalid_argument, "sweep spec: 'N' and 'gamma' must be integer arrays");
  }
  if (!spec.at("g").is_object() || !spec.at("g").contains("lo") ||
      !spec.at("g").contains("hi"))
    fail(ErrorCode::invalid_argument, "sweep spec: 'g' must be {\"lo\": int, \"hi\": int}");
  const std::int64_t g_lo = spec.at("g").at("lo").get<std::int64_t>();
  const std::int64_t g_hi = spec.at("g").at("hi").get<std::int64_t>();
  const std::int64_t n_max = spec.value("n_max", std::int64_t{5});
  const bool with_search = spec.value("search_max", false);

  std::vector<ConstructionKind> kinds;
  for (const auto& k : spec.at("kinds")) {
    const auto kind = kind_from_string(k.get<std::string>());
    if (!kind)
      fail(ErrorCode::invalid_argument,
           "sweep spec: unknown kind '" + k.get<std::string>() + "'");
    kinds.push_back(*kind);
  }

  std::vector<SweepRow> rows;
  std::ostringstream notes;
  for (std::int64_t N : ns) {
    for (std::int64_t gamma : gammas) {
      for (std::int64_t g = g_lo; g <= g_hi; ++g) {
        for (ConstructionKind kind : kinds) {
          SweepRow row;
          row.N = N;
          row.gamma = gamma;
          row.g = g;
          row.kind = kind_name(kind);
          if (N >= 2) row.ct_lower_bound = ct_lower_bound({N, gamma, g});
          try {
            const ConstructionResult r = dispatch(kind, N, g, gamma);
            row.direct_weight = r.direct_weight;
            row.closed_form_weight = r.closed_form;
            row.agree = r.weights_agree;
            if (r.semigroup.genus() >= 2)
              row.buchweitz_pass = buchweitz_check(r.semigroup, n_max).overall_pass;
            if (with_search) {
              const SearchResult sr = search_max_weight({N, gamma, g}, options);
              row.family_size = sr.family_size;
              row.max_weight = sr.max_weight;
            }
          } catch (const Error& e) {
            if (e.code() != ErrorCode::construction_out_of_domain &&
                e.code() != ErrorCode::precondition_violated)
              throw;
            notes << row.N << ',' << row.gamma << ',' << row.g << ','
                  << row.kind << ": " << error_code_name(e.code()) << ": "
                  << e.what() << "\n";
          }
          rows.push_back(std::move(row));
        }
      }
    }
  }

  std::ostringstream csv;
  write_sweep(rows, csv);
  return {csv.str(), notes.str()};
}

}  // namespace semiweight
