#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "semiweight/buchweitz.hpp"
#include "semiweight/constructions.hpp"
#include "semiweight/explorer.hpp"
#include "semiweight/hyperelliptic.hpp"
#include "semiweight/numutil.hpp"
#include "semiweight/semigroup.hpp"

namespace semiweight {

using Json = nlohmann::ordered_json;

enum class DyckFormat { ascii, svg };

// Lattice-path view of the truncation: scan n = 1..2g and step East on a
// member, North on a gap. The row of the i-th North step shades gap_i - i
// cells, so the shaded area equals the weight.
struct DyckRendering {
  std::int64_t grid_size = 0;
  std::string path;  // 'E'/'N', 2g steps
  std::int64_t shaded_cells = 0;
  DyckFormat format = DyckFormat::ascii;
  std::string art;  // ASCII grid or SVG document
};

DyckRendering render_dyck(const Semigroup& s, DyckFormat format);

struct SweepRow {
  std::int64_t N = 0;
  std::int64_t gamma = 0;
  std::int64_t g = 0;
  std::string kind;
  std::optional<std::int64_t> direct_weight;
  std::optional<Rational> closed_form_weight;
  std::optional<bool> agree;
  std::optional<Rational> ct_lower_bound;
  std::optional<bool> buchweitz_pass;
  std::optional<std::int64_t> family_size;
  std::optional<std::int64_t> max_weight;

  bool operator==(const SweepRow&) const = default;
};

inline constexpr const char* kSweepHeader =
    "N,gamma,g,kind,direct_weight,closed_form_weight,agree,ct_lower_bound,"
    "buchweitz_pass,family_size,max_weight";

void write_sweep(const std::vector<SweepRow>& rows, std::ostream& out);
std::vector<SweepRow> read_sweep(std::istream& in);

Json semigroup_json(const Semigroup& s);
Json weight_report_json(const Semigroup& s);
Json residue_classes_json(const ResidueClasses& rc);
Json analysis_json(const HyperAnalysis& a);
Json bounds_json(const HyperParams& p);
Json construction_json(const ConstructionResult& r);
Json sn_gap_classes_json(std::int64_t N, std::int64_t g, std::int64_t gamma);
Json buchweitz_json(const BuchweitzReport& rep);
Json search_result_json(const SearchResult& res);
Json threshold_json(const ThresholdScan& scan);
Json dyck_json(const DyckRendering& d);

std::string threshold_table(const ThresholdScan& scan);

}  // namespace semiweight
