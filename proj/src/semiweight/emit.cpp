#include "semiweight/emit.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "semiweight/errors.hpp"

namespace semiweight {

Rational rational_from_string(const std::string& text) {
  const auto parse_int = [&](std::string_view sv) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), v);
    if (ec != std::errc{} || ptr != sv.data() + sv.size())
      fail(ErrorCode::invalid_argument, "bad rational literal '" + text + "'");
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  return Rational(parse_int(text.substr(0, slash)),
                  parse_int(text.substr(slash + 1)));
}

DyckRendering render_dyck(const Semigroup& s, DyckFormat format) {
  const std::int64_t g = s.genus();
  DyckRendering d;
  d.grid_size = g;
  d.format = format;

  std::vector<std::int64_t> shade;  // shade[i] = cells in the row of gap i+1
  for (std::int64_t n = 1; n <= 2 * g; ++n) {
    if (s.contains(n)) {
      d.path += 'E';
    } else {
      d.path += 'N';
      const std::int64_t i = static_cast<std::int64_t>(shade.size()) + 1;
      shade.push_back(n - i);
      d.shaded_cells += n - i;
    }
  }

  if (format == DyckFormat::ascii) {
    std::string art;
    for (std::int64_t row = g; row >= 1; --row) {
      for (std::int64_t x = 0; x < g; ++x)
        art += x < shade[static_cast<std::size_t>(row - 1)] ? '#' : '.';
      if (row > 1) art += '\n';
    }
    d.art = std::move(art);
  } else {
    const std::int64_t cell = 16;
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
        << g * cell << "\" height=\"" << g * cell << "\" viewBox=\"0 0 "
        << g * cell << " " << g * cell << "\">\n";
    svg << "<rect x=\"0\" y=\"0\" width=\"" << g * cell << "\" height=\""
        << g * cell << "\" fill=\"white\" stroke=\"black\"/>\n";
    for (std::int64_t row = 1; row <= g; ++row) {
      for (std::int64_t x = 0; x < shade[static_cast<std::size_t>(row - 1)]; ++x) {
        svg << "<rect x=\"" << x * cell << "\" y=\"" << (g - row) * cell
            << "\" width=\"" << cell << "\" height=\"" << cell
            << "\" fill=\"#c0c0c0\" stroke=\"#808080\"/>\n";
      }
    }
    svg << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"";
    std::int64_t px = 0, py = 0;
    svg << px * cell << "," << (g - py) * cell;
    for (char step : d.path) {
      if (step == 'E') ++px; else ++py;
      svg << " " << px * cell << "," << (g - py) * cell;
    }
    svg << "\"/>\n</svg>\n";
    d.art = svg.str();
  }
  return d;
}

namespace {

std::string opt_int(const std::optional<std::int64_t>& v) {
  return v ? std::to_string(*v) : std::string();
}

std::string opt_bool(const std::optional<bool>& v) {
  return v ? (*v ? "true" : "false") : std::string();
}

std::string opt_rat(const std::optional<Rational>& v) {
  return v ? v->str() : std::string();
}

}  // namespace

void write_sweep(const std::vector<SweepRow>& rows, std::ostream& out) {
  out << kSweepHeader << "\n";
  for (const SweepRow& r : rows) {
    out << r.N << ',' << r.gamma << ',' << r.g << ',' << r.kind << ','
        << opt_int(r.direct_weight) << ',' << opt_rat(r.closed_form_weight)
        << ',' << opt_bool(r.agree) << ',' << opt_rat(r.ct_lower_bound) << ','
        << opt_bool(r.buchweitz_pass) << ',' << opt_int(r.family_size) << ','
        << opt_int(r.max_weight) << "\n";
  }
  if (!out) fail(ErrorCode::io_error, "failed writing sweep CSV");
}

std::vector<SweepRow> read_sweep(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kSweepHeader)
    fail(ErrorCode::io_error, "sweep CSV header mismatch");
  std::vector<SweepRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::size_t start = 0;
    for (;;) {
      const auto comma = line.find(',', start);
      cells.push_back(line.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (cells.size() != 11)
      fail(ErrorCode::io_error, "sweep CSV row with " +
                                    std::to_string(cells.size()) + " fields");
    SweepRow r;
    r.N = std::stoll(cells[0]);
    r.gamma = std::stoll(cells[1]);
    r.g = std::stoll(cells[2]);
    r.kind = cells[3];
    if (!cells[4].empty()) r.direct_weight = std::stoll(cells[4]);
    if (!cells[5].empty()) r.closed_form_weight = rational_from_string(cells[5]);
    if (!cells[6].empty()) r.agree = cells[6] == "true";
    if (!cells[7].empty()) r.ct_lower_bound = rational_from_string(cells[7]);
    if (!cells[8].empty()) r.buchweitz_pass = cells[8] == "true";
    if (!cells[9].empty()) r.family_size = std::stoll(cells[9]);
    if (!cells[10].empty()) r.max_weight = std::stoll(cells[10]);
    rows.push_back(std::move(r));
  }
  return rows;
}

Json semigroup_json(const Semigroup& s) {
  Json j;
  j["genus"] = s.genus();
  j["gaps"] = s.gaps();
  j["truncation"] = s.truncation();
  j["generators"] = s.generators();
  return j;
}

Json weight_report_json(const Semigroup& s) {
  const WeightReport r = s.weight_report();
  Json j;
  j["genus"] = r.genus;
  j["weight"] = r.weight;
  j["inflection"] = r.inflection;
  j["gaps"] = r.gaps;
  return j;
}

Json residue_classes_json(const ResidueClasses& rc) {
  Json j;
  j["modulus"] = rc.modulus;
  j["classes"] = rc.classes;
  return j;
}

Json analysis_json(const HyperAnalysis& a) {
  Json j;
  j["u1"] = a.u1;
  j["u1_family_min"] = a.u1_family_min ? Json(*a.u1_family_min) : Json(nullptr);
  j["chi"] = a.chi ? Json(*a.chi) : Json(nullptr);
  j["first_elements"] = a.first_elements;
  return j;
}

Json bounds_json(const HyperParams& p) {
  Json j;
  j["N"] = p.N;
  j["gamma"] = p.gamma;
  j["g"] = p.genus;
  const Rational lb = ct_lower_bound(p);
  j["ct_lower_bound"] = {{"num", lb.num}, {"den", lb.den}, {"text", lb.str()}};
  if (p.N == 2 && p.genus >= 2 * p.gamma) {
    const auto [lo, hi] = torres_bounds(p.gamma, p.genus);
    j["torres_lower"] = lo;
    j["torres_upper"] = hi;
  }
  return j;
}

Json construction_json(const ConstructionResult& r) {
  Json j;
  j["kind"] = kind_name(r.kind);
  j["N"] = r.N;
  j["g"] = r.g;
  j["gamma"] = r.gamma;
  j["u1"] = r.u1;
  if (r.tau) j["tau"] = *r.tau;
  if (r.nu) j["nu"] = *r.nu;
  if (r.class_sizes)
    j["class_sizes"] = std::vector<std::int64_t>(r.class_sizes->begin(),
                                                 r.class_sizes->end());
  j["semigroup"] = semigroup_json(r.semigroup);
  j["direct_weight"] = r.direct_weight;
  j["closed_form_weight"] =
      r.closed_form.integral() ? Json(r.closed_form.num) : Json(r.closed_form.str());
  j["weights_agree"] = r.weights_agree;
  j["notes"] = r.notes;
  return j;
}

Json sn_gap_classes_json(std::int64_t N, std::int64_t g, std::int64_t gamma) {
  const auto classes = sn_gap_classes(N, g, gamma);
  Json j;
  j["N"] = N;
  j["g"] = g;
  j["gamma"] = gamma;
  j["gap_classes"] = classes;
  std::vector<std::int64_t> sizes;
  std::int64_t total = 0;
  for (const auto& c : classes) {
    sizes.push_back(static_cast<std::int64_t>(c.size()));
    total += static_cast<std::int64_t>(c.size());
  }
  j["class_sizes"] = sizes;
  j["total"] = total;
  return j;
}

Json buchweitz_json(const BuchweitzReport& rep) {
  Json j;
  j["genus"] = rep.genus;
  j["n_max"] = rep.n_max;
  Json rows = Json::array();
  for (const BuchweitzRow& r : rep.per_n) {
    Json row;
    row["n"] = r.n;
    row["card"] = r.card;
    row["bound"] = r.bound;
    row["pass"] = r.pass;
    if (r.closed_form) row["closed_form"] = *r.closed_form;
    rows.push_back(std::move(row));
  }
  j["per_n"] = std::move(rows);
  j["overall_pass"] = rep.overall_pass;
  return j;
}

Json search_result_json(const SearchResult& res) {
  Json j;
  j["N"] = res.params.N;
  j["gamma"] = res.params.gamma;
  j["g"] = res.params.genus;
  j["family_size"] = res.family_size;
  j["max_weight"] = res.max_weight ? Json(*res.max_weight) : Json(nullptr);
  Json arg = Json::array();
  for (const Semigroup& s : res.argmax) arg.push_back(semigroup_json(s));
  j["argmax"] = std::move(arg);
  if (res.matches_bc) j["matches_bc"] = *res.matches_bc;
  return j;
}

Json threshold_json(const ThresholdScan& scan) {
  Json j;
  j["N"] = scan.N;
  j["gamma"] = scan.gamma;
  j["g_lo"] = scan.g_lo;
  j["g_hi"] = scan.g_hi;
  j["reference"] = scan.reference;
  Json rows = Json::array();
  for (const ThresholdRow& r : scan.rows) {
    Json row;
    row["g"] = r.g;
    row["family_size"] = r.family_size;
    row["max_weight"] = r.max_weight ? Json(*r.max_weight) : Json(nullptr);
    row["ref_weight"] = r.ref_weight ? Json(*r.ref_weight) : Json(nullptr);
    row["equal"] = r.equal ? Json(*r.equal) : Json(nullptr);
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  j["g_star"] = scan.g_star ? Json(*scan.g_star) : Json(nullptr);
  return j;
}

Json dyck_json(const DyckRendering& d) {
  Json j;
  j["grid_size"] = d.grid_size;
  j["path"] = d.path;
  j["shaded_cells"] = d.shaded_cells;
  j["format"] = d.format == DyckFormat::ascii ? "ascii" : "svg";
  j["art"] = d.art;
  return j;
}

std::string threshold_table(const ThresholdScan& scan) {
  std::ostringstream out;
  out << "g,max_weight,ref_weight,equal\n";
  for (const ThresholdRow& r : scan.rows) {
    out << r.g << ',' << opt_int(r.max_weight) << ',' << opt_int(r.ref_weight)
        << ',' << opt_bool(r.equal) << "\n";
  }
  out << "g_star=" << opt_int(scan.g_star) << "\n";
  return out.str();
}

}  // namespace semiweight
