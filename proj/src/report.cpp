#include "nfmin/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "nfmin/constants.hpp"

namespace nfmin {

namespace {

std::string signature_string(Signature sig) {
  return "(" + std::to_string(sig.s) + "," + std::to_string(sig.t) + ")";
}

std::string comparison_name(Comparison c) {
  switch (c) {
    case Comparison::below: return "below";
    case Comparison::above: return "above";
    case Comparison::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::string irreducibility_name(IrreducibilityResult::Verdict v) {
  switch (v) {
    case IrreducibilityResult::Verdict::irreducible: return "irreducible";
    case IrreducibilityResult::Verdict::reducible: return "reducible";
    case IrreducibilityResult::Verdict::beyond_reach: return "assumed (beyond subset budget)";
  }
  return "unknown";
}

std::string number_text(double x, int precision) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, x);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string scalar_text(const Document& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

void render_text(const Document& v, int indent, std::ostringstream& os) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, value] : v.items()) {
    if (value.is_object()) {
      os << pad << key << ":\n";
      render_text(value, indent + 2, os);
    } else if (value.is_array() && !value.empty() && (value.front().is_object() || value.front().is_array())) {
      os << pad << key << ":\n";
      for (const auto& item : value) {
        if (item.is_object()) {
          os << pad << "  -\n";
          render_text(item, indent + 4, os);
        } else {
          os << pad << "  - " << item.dump() << "\n";
        }
      }
    } else if (value.is_array()) {
      os << pad << key << ": ";
      for (std::size_t i = 0; i < value.size(); ++i) os << (i ? ", " : "") << scalar_text(value[i]);
      os << "\n";
    } else {
      os << pad << key << ": " << scalar_text(value) << "\n";
    }
  }
}

void render_csv(const Document& v, const std::string& prefix, std::ostringstream& os) {
  if (v.is_object() || v.is_array()) {
    for (const auto& [key, value] : v.items()) {
      render_csv(value, prefix.empty() ? key : prefix + "." + key, os);
    }
    return;
  }
  os << csv_field(prefix) << "," << csv_field(scalar_text(v)) << "\n";
}

Document profile_json(const SizeProfile& p, int precision) {
  Document d;
  d["R"] = rounded(p.R, precision);
  d["C"] = rounded(p.C, precision);
  d["abs_square_size"] = rounded(p.abs_square_size, precision);
  d["m"] = rounded(p.m, precision);
  d["norm"] = p.norm_abs.get_str();
  d["mahler_measure"] = rounded(p.mahler, precision);
  d["discriminant"] = p.discriminant ? Document(p.discriminant->get_str()) : Document(nullptr);
  return d;
}

Document roots_json(const ConjugateSet& cs, int precision) {
  Document d;
  Document reals = Document::array();
  for (double r : cs.real_roots) reals.push_back(rounded(r, precision));
  Document complexes = Document::array();
  for (const auto& z : cs.complex_reps) complexes.push_back({rounded(z.real(), precision), rounded(z.imag(), precision)});
  d["real"] = reals;
  d["complex"] = complexes;
  return d;
}

Document check_json(const CheckRecord& r, int precision) {
  Document d;
  d["check_id"] = r.check_id;
  Document params = Document::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  d["parameters"] = params;
  Document obs = Document::array(), pred = Document::array();
  for (double x : r.observed) obs.push_back(std::isfinite(x) ? Document(rounded(x, precision)) : Document(nullptr));
  for (double x : r.predicted) pred.push_back(std::isfinite(x) ? Document(rounded(x, precision)) : Document(nullptr));
  d["observed"] = obs;
  d["predicted"] = pred;
  d["residual"] = rounded(r.residual, precision);
  d["scaled_residual"] = rounded(r.scaled_residual, precision);
  d["verdict"] = verdict_name(r.verdict);
  if (!r.note.empty()) d["note"] = r.note;
  return d;
}

std::string parameter_text(const CheckRecord& r) {
  std::string s;
  for (const auto& [k, v] : r.parameters) s += (s.empty() ? "" : " ") + k + "=" + v;
  return s;
}

}  // namespace

std::optional<Format> parse_format(std::string_view name) {
  if (name == "text") return Format::text;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  return std::nullopt;
}

double rounded(double x, int precision) {
  if (!std::isfinite(x)) return x;
  return std::strtod(number_text(x, precision).c_str(), nullptr);
}

Document analysis_document(const IntPoly& f, const std::optional<ExtensionSignature>& ext, int precision) {
  auto irr = irreducibility(f);
  if (irr.verdict == IrreducibilityResult::Verdict::reducible) throw Error("polynomial is reducible");
  ConjugateSet cs = find_roots(f);
  SizeProfile p = size_profile(cs);
  const int n = cs.degree();

  Document d;
  d["polynomial"] = f.to_string();
  d["degree"] = n;
  d["signature"] = signature_string(p.signature);
  d["irreducibility"] = irreducibility_name(irr.verdict);
  d["roots"] = roots_json(cs, precision);
  d["profile"] = profile_json(p, precision);

  Document b;
  const double floor = constants::universal_m_floor();
  const double sig_bound = m_lower_bound_signature(p.signature);
  b["universal_floor"] = rounded(floor, precision);
  b["signature_bound"] = rounded(sig_bound, precision);
  if (p.norm_abs >= 1) {
    b["square_size_norm_bound"] = rounded(norm_lower_bound(n, p.signature.s, p.norm_abs), precision);
    b["unit_gate_excludes_m_below_1"] = unit_necessity_gate(n, p.norm_abs);
  }
  b["m_vs_1"] = comparison_name(compare_guarded(p.m, 1.0));
  b["m_vs_universal_floor"] = comparison_name(compare_guarded(p.m, floor));
  b["m_vs_signature_bound"] = comparison_name(compare_guarded(p.m, sig_bound));
  d["bounds"] = b;

  if (ext) {
    Document r;
    r["extension_signature"] = "(" + std::to_string(ext->s2) + "," + std::to_string(ext->t2) + ")";
    r["compositum_signature"] = signature_string(compositum_signature(p.signature, *ext));
    r["relative_square_size"] = rounded(relative_square_size(p, *ext), precision);
    r["relative_m"] = rounded(relative_m(p, *ext), precision);
    try {
      r["criterion_m_below_1"] = mk_lt_one_criterion(p, *ext) ? "yes" : "no";
    } catch (const InconclusiveError&) {
      r["criterion_m_below_1"] = "inconclusive";
    } catch (const Error& e) {
      r["criterion_m_below_1"] = std::string("not applicable: ") + e.what();
    }
    r["hypothesis"] = kDisjointnessHypothesis;
    d["relative"] = r;
  }
  return d;
}

Document search_document(const SearchReport& report, int precision) {
  Document d;
  d["degree"] = report.degree;
  d["pruned"] = report.pruned;
  d["total"] = report.total();
  Document groups = Document::array();
  for (const auto& g : report.groups) {
    Document gd;
    gd["signature"] = signature_string(g.signature);
    gd["lower_bound"] = rounded(g.lower_bound, precision);
    gd["count"] = g.count();
    Document entries = Document::array();
    for (const auto& e : g.entries) entries.push_back({{"polynomial", e.polynomial.to_string()}, {"m", rounded(e.m, precision)}});
    gd["entries"] = entries;
    if (!g.inconclusive.empty()) {
      Document inc = Document::array();
      for (const auto& e : g.inconclusive)
        inc.push_back({{"polynomial", e.polynomial.to_string()}, {"m", rounded(e.m, precision)}});
      gd["inconclusive"] = inc;
    }
    groups.push_back(gd);
  }
  d["groups"] = groups;
  Document st;
  st["generated"] = report.stats.generated;
  st["passed_bounds"] = report.stats.passed_bounds;
  st["passed_prescreen"] = report.stats.passed_prescreen;
  st["passed_irreducibility"] = report.stats.passed_irreducibility;
  st["passed_m"] = report.stats.passed_m;
  d["stats"] = st;
  return d;
}

Document lattice_document(const IntPoly& f, const LatticeRequest& request, int precision) {
  auto irr = irreducibility(f);
  if (irr.verdict == IrreducibilityResult::Verdict::reducible) throw Error("polynomial is reducible");
  ConjugateSet cs = find_roots(f);
  EmbeddedLattice lat = build_embedding(cs, request.basis);
  ShortestVectorResult sv = shortest_vector(lat);

  Document d;
  d["polynomial"] = f.to_string();
  d["order"] = request.basis ? "supplied basis" : "power basis";
  d["dimension"] = lat.dimension;
  d["signature"] = signature_string(lat.signature);
  d["determinant"] = rounded(lat.determinant, precision);
  d["order_discriminant"] = lat.order_disc.get_str();
  d["determinant_from_discriminant"] =
      rounded(std::exp2(-lat.signature.t) * std::sqrt(std::abs(lat.order_disc.get_d())), precision);
  d["d_squared"] = rounded(sv.squared_length, precision);
  d["m"] = rounded(sv.m_value, precision);
  Document coords = Document::array();
  for (auto c : sv.coordinates) coords.push_back(c);
  d["minimizer_coordinates"] = coords;
  Document elem = Document::array();
  for (const auto& c : sv.element) elem.push_back(c.get_str());
  d["minimizer_power_basis"] = elem;
  d["minimizer_minimal_polynomial"] = sv.minimal_polynomial.to_string();
  d["minimizer_degree"] = sv.minimizer_degree;
  d["method"] = "enumeration";
  if (request.brute_force_check) {
    ShortestVectorResult bf = brute_force_shortest(lat, sv.squared_length * (1.0 + 1e-6) + 1e-9);
    d["brute_force_d_squared"] = rounded(bf.squared_length, precision);
    d["brute_force_agrees"] = std::abs(bf.squared_length - sv.squared_length) <= 1e-9 * std::max(1.0, sv.squared_length);
  }
  d["caveat"] = kOrderCaveat;
  return d;
}

Document family_document(Family family, int n, int precision) {
  IntPoly f = make_family({family, n});
  Document d;
  d["family"] = family_name(family);
  d["n"] = n;
  d["polynomial"] = f.to_string();
  d["degree"] = f.degree();
  d["real_roots"] = is_squarefree(f) ? Document(sturm_real_count(f)) : Document("not squarefree");
  auto irr = irreducibility(f);
  d["irreducibility"] = irreducibility_name(irr.verdict);
  if (irr.factor) d["factor"] = irr.factor->to_string();
  if (irr.verdict != IrreducibilityResult::Verdict::reducible && f.is_monic()) {
    ConjugateSet cs = find_roots(f);
    SizeProfile p = size_profile(cs);
    d["signature"] = signature_string(p.signature);
    d["profile"] = profile_json(p, precision);
  }
  Document checks = Document::array();
  switch (family) {
    case Family::multinacci:
      checks.push_back(check_json(check_multinacci_location(n), precision));
      checks.push_back(check_json(check_pisot_multinacci(n), precision));
      break;
    case Family::multinacci_cofactor:
      checks.push_back(check_json(check_erdos_turan(f, constants::ganelius_rounded_up()), precision));
      break;
    case Family::truncated_geom:
      if (n >= 3) checks.push_back(check_json(check_sum_asymptotic(n, 2.0), precision));
      checks.push_back(check_json(check_truncated_geom_size(n), precision));
      break;
    case Family::even_spread:
      checks.push_back(check_json(check_even_spread_structure((n - 2) / 4), precision));
      checks.push_back(check_json(check_even_spread_size((n - 2) / 4), precision));
      break;
    case Family::root_power:
      checks.push_back(check_json(check_root_power(n), precision));
      break;
  }
  d["checks"] = checks;
  return d;
}

Document verify_document(const std::vector<CheckRecord>& records, int precision) {
  Document d;
  std::size_t pass = 0, fail = 0, inconclusive = 0;
  Document arr = Document::array();
  for (const auto& r : records) {
    if (r.verdict == Verdict::pass) ++pass;
    else if (r.verdict == Verdict::fail) ++fail;
    else ++inconclusive;
    arr.push_back(check_json(r, precision));
  }
  d["summary"] = {{"checks", records.size()}, {"pass", pass}, {"fail", fail}, {"inconclusive", inconclusive}};
  d["records"] = arr;
  return d;
}

std::string render(const Document& doc, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::json: os << doc.dump(2) << "\n"; break;
    case Format::text: render_text(doc, 0, os); break;
    case Format::csv:
      os << "field,value\n";
      render_csv(doc, "", os);
      break;
  }
  return os.str();
}

std::string search_csv(const SearchReport& report, int precision) {
  std::ostringstream os;
  os << "signature,polynomial,m,lower_bound\n";
  for (const auto& g : report.groups)
    for (const auto& e : g.entries)
      os << csv_field(signature_string(g.signature)) << "," << e.polynomial.to_string() << ","
         << number_text(e.m, precision) << "," << number_text(g.lower_bound, precision) << "\n";
  return os.str();
}

std::string search_text(const SearchReport& report, int precision) {
  std::ostringstream os;
  os << "degree " << report.degree << (report.pruned ? "" : " (raw box)") << ": " << report.total()
     << " polynomials with m < 1\n";
  for (const auto& g : report.groups) {
    os << "signature " << signature_string(g.signature) << "  lower bound " << number_text(g.lower_bound, precision)
       << "  count " << g.count() << "\n";
    for (const auto& e : g.entries) os << "  " << e.polynomial.to_string() << "  " << number_text(e.m, precision) << "\n";
    for (const auto& e : g.inconclusive)
      os << "  " << e.polynomial.to_string() << "  " << number_text(e.m, precision) << "  (inconclusive)\n";
  }
  return os.str();
}

std::string verify_csv(const std::vector<CheckRecord>& records, int precision) {
  std::ostringstream os;
  os << "check_id,parameters,observed,predicted,residual,scaled_residual,verdict,note\n";
  auto join = [&](const std::vector<double>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + number_text(v[i], precision);
    return s;
  };
  for (const auto& r : records)
    os << r.check_id << "," << csv_field(parameter_text(r)) << "," << csv_field(join(r.observed)) << ","
       << csv_field(join(r.predicted)) << "," << number_text(r.residual, precision) << ","
       << number_text(r.scaled_residual, precision) << "," << verdict_name(r.verdict) << "," << csv_field(r.note)
       << "\n";
  return os.str();
}

std::string verify_text(const std::vector<CheckRecord>& records, int precision) {
  std::ostringstream os;
  std::size_t fail = 0;
  for (const auto& r : records) {
    if (r.verdict == Verdict::fail) ++fail;
    os << verdict_name(r.verdict) << "  " << r.check_id << "  " << parameter_text(r) << "  residual "
       << number_text(r.residual, precision) << "  scaled " << number_text(r.scaled_residual, precision);
    if (!r.note.empty()) os << "  [" << r.note << "]";
    os << "\n";
  }
  os << records.size() << " checks, " << fail << " failed\n";
  return os.str();
}

}  // namespace nfmin
