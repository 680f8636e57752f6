#include "semiweight.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "semiweight/buchweitz.hpp"
#include "semiweight/constructions.hpp"
#include "semiweight/emit.hpp"
#include "semiweight/errors.hpp"
#include "semiweight/explorer.hpp"
#include "semiweight/hyperelliptic.hpp"
#include "semiweight/semigroup.hpp"
#include "semiweight/sweep.hpp"

using namespace semiweight;

struct sw_semigroup {
  Semigroup value;
};

namespace {

thread_local std::string g_last_error;

sw_status map_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return SW_ERR_ARGUMENT;
    case ErrorCode::empty_generators: return SW_ERR_EMPTY_GENERATORS;
    case ErrorCode::non_coprime_generators: return SW_ERR_NON_COPRIME;
    case ErrorCode::not_closed: return SW_ERR_NOT_CLOSED;
    case ErrorCode::wrong_cardinality: return SW_ERR_WRONG_CARDINALITY;
    case ErrorCode::genus_mismatch: return SW_ERR_GENUS_MISMATCH;
    case ErrorCode::no_nonzero_residue_element: return SW_ERR_NO_NONZERO_RESIDUE;
    case ErrorCode::hypothesis_violated: return SW_ERR_HYPOTHESIS_VIOLATED;
    case ErrorCode::construction_out_of_domain: return SW_ERR_OUT_OF_DOMAIN;
    case ErrorCode::precondition_violated: return SW_ERR_PRECONDITION;
    case ErrorCode::genus_too_small: return SW_ERR_GENUS_TOO_SMALL;
    case ErrorCode::empty_gap_set: return SW_ERR_EMPTY_GAP_SET;
    case ErrorCode::resource_limit: return SW_ERR_RESOURCE_LIMIT;
    case ErrorCode::io_error: return SW_ERR_IO;
  }
  return SW_ERR_INTERNAL;
}

template <class F>
sw_status guarded(F&& fn) {
  try {
    fn();
    g_last_error.clear();
    return SW_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SW_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return SW_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::vector<std::int64_t> to_vec(const int64_t* data, size_t count) {
  if (!data && count > 0)
    fail(ErrorCode::invalid_argument, "null array with nonzero length");
  return std::vector<std::int64_t>(data, data + count);
}

ExploreOptions make_options(uint64_t node_cap, int workers) {
  ExploreOptions opt;
  if (node_cap > 0) opt.node_cap = node_cap;
  if (workers > 0) opt.workers = workers;
  return opt;
}

DyckFormat parse_format(const char* format) {
  const std::string f = format ? format : "";
  if (f == "ascii") return DyckFormat::ascii;
  if (f == "svg") return DyckFormat::svg;
  fail(ErrorCode::invalid_argument, "format must be 'ascii' or 'svg'");
}

const Semigroup& deref(const sw_semigroup* s) {
  if (!s) fail(ErrorCode::invalid_argument, "null semigroup handle");
  return s->value;
}

}  // namespace

extern "C" {

const char* sw_version(void) { return "0.1.0"; }

const char* sw_status_name(sw_status status) {
  switch (status) {
    case SW_OK: return "Ok";
    case SW_ERR_ARGUMENT: return "InvalidArgument";
    case SW_ERR_EMPTY_GENERATORS: return "EmptyGenerators";
    case SW_ERR_NON_COPRIME: return "NonCoprimeGenerators";
    case SW_ERR_NOT_CLOSED: return "NotClosed";
    case SW_ERR_WRONG_CARDINALITY: return "WrongCardinality";
    case SW_ERR_GENUS_MISMATCH: return "GenusMismatch";
    case SW_ERR_NO_NONZERO_RESIDUE: return "NoNonzeroResidueElement";
    case SW_ERR_HYPOTHESIS_VIOLATED: return "HypothesisViolated";
    case SW_ERR_OUT_OF_DOMAIN: return "ConstructionOutOfDomain";
    case SW_ERR_PRECONDITION: return "PreconditionViolated";
    case SW_ERR_GENUS_TOO_SMALL: return "GenusTooSmall";
    case SW_ERR_EMPTY_GAP_SET: return "EmptyGapSet";
    case SW_ERR_RESOURCE_LIMIT: return "ResourceLimit";
    case SW_ERR_IO: return "IoError";
    case SW_ERR_INTERNAL: return "InternalError";
  }
  return "UnknownStatus";
}

const char* sw_last_error(void) { return g_last_error.c_str(); }

void sw_string_free(char* text) { std::free(text); }

sw_status sw_semigroup_from_generators(const int64_t* gens, size_t count,
                                       sw_semigroup** out) {
  return guarded([&] {
    *out = new sw_semigroup{Semigroup::from_generators(to_vec(gens, count))};
  });
}

sw_status sw_semigroup_from_truncation(const int64_t* trunc, size_t count,
                                       int64_t genus, sw_semigroup** out) {
  return guarded([&] {
    *out = new sw_semigroup{
        Semigroup::from_truncation(to_vec(trunc, count), genus)};
  });
}

sw_status sw_semigroup_from_gaps(const int64_t* gaps, size_t count,
                                 sw_semigroup** out) {
  return guarded([&] {
    *out = new sw_semigroup{Semigroup::from_gaps(to_vec(gaps, count))};
  });
}

void sw_semigroup_free(sw_semigroup* s) { delete s; }

int64_t sw_semigroup_genus(const sw_semigroup* s) { return s->value.genus(); }
int64_t sw_semigroup_weight(const sw_semigroup* s) { return s->value.weight(); }
int64_t sw_semigroup_inflection(const sw_semigroup* s) {
  return s->value.inflection();
}
int64_t sw_semigroup_conductor(const sw_semigroup* s) {
  return s->value.conductor();
}
int64_t sw_semigroup_multiplicity(const sw_semigroup* s) {
  return s->value.multiplicity();
}
int sw_semigroup_contains(const sw_semigroup* s, int64_t x) {
  return s->value.contains(x) ? 1 : 0;
}

sw_status sw_semigroup_to_json(const sw_semigroup* s, char** out_json) {
  return guarded([&] { *out_json = dup_string(semigroup_json(deref(s)).dump()); });
}

sw_status sw_weight_report_json(const sw_semigroup* s, char** out_json) {
  return guarded(
      [&] { *out_json = dup_string(weight_report_json(deref(s)).dump()); });
}

sw_status sw_sumset_json(const int64_t* a, size_t a_count, const int64_t* b,
                         size_t b_count, int64_t cap, char** out_json) {
  return guarded([&] {
    const auto result =
        sumset(to_vec(a, a_count), to_vec(b, b_count),
               cap < 0 ? std::nullopt : std::optional<std::int64_t>(cap));
    *out_json = dup_string(Json(result).dump());
  });
}

sw_status sw_is_hyperelliptic(const sw_semigroup* s, int64_t N, int64_t gamma,
                              int* out) {
  return guarded([&] {
    const Semigroup& sg = deref(s);
    *out = is_hyperelliptic(sg, HyperParams{N, gamma, sg.genus()}) ? 1 : 0;
  });
}

sw_status sw_residue_classes_json(const sw_semigroup* s, int64_t modulus,
                                  char** out_json) {
  return guarded([&] {
    *out_json =
        dup_string(residue_classes_json(residue_classes(deref(s), modulus)).dump());
  });
}

sw_status sw_analyze_json(const sw_semigroup* s, int64_t N, int64_t gamma,
                          char** out_json) {
  return guarded([&] {
    const Semigroup& sg = deref(s);
    *out_json = dup_string(
        analysis_json(analyze(sg, HyperParams{N, gamma, sg.genus()})).dump());
  });
}

sw_status sw_bounds_json(int64_t N, int64_t gamma, int64_t g, char** out_json) {
  return guarded([&] {
    *out_json = dup_string(bounds_json(HyperParams{N, gamma, g}).dump());
  });
}

sw_status sw_construct_json(const char* kind, int64_t N, int64_t g,
                            int64_t gamma, char** out_json) {
  return guarded([&] {
    const auto k = kind_from_string(kind ? kind : "");
    if (!k)
      fail(ErrorCode::invalid_argument,
           "kind must be one of ct, bc, sn, snstar");
    ConstructionResult r = [&] {
      switch (*k) {
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
    }();
    *out_json = dup_string(construction_json(r).dump());
  });
}

sw_status sw_sn_gap_classes_json(int64_t N, int64_t g, int64_t gamma,
                                 char** out_json) {
  return guarded(
      [&] { *out_json = dup_string(sn_gap_classes_json(N, g, gamma).dump()); });
}

sw_status sw_n_fold_gap_sums_json(const sw_semigroup* s, int64_t n,
                                  char** out_json) {
  return guarded([&] {
    *out_json = dup_string(Json(n_fold_gap_sums(deref(s), n)).dump());
  });
}

sw_status sw_buchweitz_json(const sw_semigroup* s, int64_t n_max,
                            char** out_json) {
  return guarded([&] {
    *out_json = dup_string(buchweitz_json(buchweitz_check(deref(s), n_max)).dump());
  });
}

sw_status sw_buchweitz_sn_json(int64_t N, int64_t g, int64_t gamma,
                               int64_t n_max, char** out_json) {
  return guarded([&] {
    *out_json =
        dup_string(buchweitz_json(buchweitz_check_sn(N, g, gamma, n_max)).dump());
  });
}

sw_status sw_sn_closed_form_card(int64_t N, int64_t g, int64_t gamma,
                                 int64_t n, int64_t* out) {
  return guarded([&] { *out = sn_closed_form_card(N, g, gamma, n); });
}

sw_status sw_enumerate(int64_t g, int hyper, int64_t N, int64_t gamma,
                       uint64_t node_cap, int workers, sw_emit_cb cb,
                       void* user) {
  return guarded([&] {
    if (!cb) fail(ErrorCode::invalid_argument, "null callback");
    const ExploreOptions opt = make_options(node_cap, workers);
    const std::vector<Semigroup> result =
        hyper ? enumerate_hyperelliptic(HyperParams{N, gamma, g}, opt)
              : enumerate_genus(g, opt);
    for (const Semigroup& s : result) {
      const std::string line = semigroup_json(s).dump();
      if (cb(line.c_str(), user) != 0) return;
    }
  });
}

sw_status sw_search_max_json(int64_t N, int64_t gamma, int64_t g,
                             uint64_t node_cap, int workers, char** out_json) {
  return guarded([&] {
    const SearchResult res =
        search_max_weight(HyperParams{N, gamma, g}, make_options(node_cap, workers));
    *out_json = dup_string(search_result_json(res).dump());
  });
}

sw_status sw_threshold_scan_json(int64_t N, int64_t gamma, int64_t g_lo,
                                 int64_t g_hi, uint64_t node_cap, int workers,
                                 char** out_json) {
  return guarded([&] {
    const ThresholdScan scan =
        threshold_scan(N, gamma, g_lo, g_hi, make_options(node_cap, workers));
    *out_json = dup_string(threshold_json(scan).dump());
  });
}

sw_status sw_threshold_scan_table(int64_t N, int64_t gamma, int64_t g_lo,
                                  int64_t g_hi, uint64_t node_cap, int workers,
                                  char** out_text) {
  return guarded([&] {
    const ThresholdScan scan =
        threshold_scan(N, gamma, g_lo, g_hi, make_options(node_cap, workers));
    *out_text = dup_string(threshold_table(scan));
  });
}

sw_status sw_dyck_render(const sw_semigroup* s, const char* format,
                         char** out_art) {
  return guarded([&] {
    *out_art = dup_string(render_dyck(deref(s), parse_format(format)).art);
  });
}

sw_status sw_dyck_json(const sw_semigroup* s, const char* format,
                       char** out_json) {
  return guarded([&] {
    *out_json =
        dup_string(dyck_json(render_dyck(deref(s), parse_format(format))).dump());
  });
}

sw_status sw_sweep_csv(const char* spec_json, uint64_t node_cap, int workers,
                       char** out_csv, char** out_notes) {
  return guarded([&] {
    if (!spec_json) fail(ErrorCode::invalid_argument, "null sweep spec");
    const SweepOutput out = run_sweep(spec_json, make_options(node_cap, workers));
    *out_csv = dup_string(out.csv);
    if (out_notes) *out_notes = dup_string(out.notes);
  });
}

}  // extern "C"
