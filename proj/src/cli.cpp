#include "nfmin/cli.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "nfmin/report.hpp"

namespace nfmin {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::pair<int, int> parse_pair(const std::string& text, const char* what) {
  std::istringstream is(text);
  int a = 0, b = 0;
  char comma = 0;
  if (!(is >> a >> comma >> b) || comma != ',' || !is.eof() || a < 0 || b < 0)
    throw UsageError(std::string("invalid ") + what + " '" + text + "', expected s,t");
  return {a, b};
}

RationalBasis parse_basis(const std::string& text, int n) {
  RationalBasis basis;
  std::istringstream rows(text);
  std::string row;
  while (std::getline(rows, row, ';')) {
    std::vector<mpq_class> r;
    std::istringstream cells(row);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      cell.erase(std::remove_if(cell.begin(), cell.end(), ::isspace), cell.end());
      mpq_class q;
      if (cell.empty() || q.set_str(cell, 10) != 0) throw UsageError("invalid basis entry '" + cell + "'");
      q.canonicalize();
      r.push_back(q);
    }
    if (static_cast<int>(r.size()) != n) throw UsageError("basis rows must have one entry per power of alpha");
    basis.push_back(std::move(r));
  }
  return basis;
}

IntPoly parse_polynomial(const std::string& text) {
  try {
    return IntPoly::parse(text);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Small normalized square sizes of algebraic integers"};
  app.require_subcommand(1);

  std::string format_name = "text";
  int precision = 9;
  int threads = 1;
  app.add_option("--format", format_name, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--precision", precision, "significant digits in reports")->check(CLI::Range(1, 17));
  app.add_option("--threads", threads, "search workers")->check(CLI::Range(1, 256));

  std::string poly_text, ext_text, basis_text, family_text, signature_text, suite_name = "all";
  int degree = 0, family_n = 0;
  bool no_prune = false, brute = false;

  auto* analyze = app.add_subcommand("analyze", "roots, signature, size profile and bounds");
  analyze->add_option("polynomial", poly_text, "coefficients (constant first) or expression in x")->required();
  analyze->add_option("--ext", ext_text, "auxiliary extension signature s2,t2 for relative sizes");

  auto* search = app.add_subcommand("search", "monic irreducible polynomials with m < 1");
  search->add_option("degree", degree, "degree")->required();
  search->add_option("--signature", signature_text, "restrict to signature s,t");
  search->add_flag("--no-prune", no_prune, "raw coefficient box, degree <= 4");

  auto* lattice = app.add_subcommand("lattice", "embedded lattice and its shortest vector");
  lattice->add_option("polynomial", poly_text, "coefficients (constant first) or expression in x")->required();
  lattice->add_option("--basis", basis_text, "order basis rows in the power basis, e.g. 1,0;0,1/2");
  lattice->add_flag("--brute-force", brute, "cross-check with box enumeration");

  auto* family = app.add_subcommand("family", "family member and its structural checks");
  family->add_option("kind", family_text, "multinacci, multinacci-cofactor, truncated-geom, even-spread, root-power")
      ->required();
  family->add_option("n", family_n, "family parameter")->required();

  auto* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_option("--suite", suite_name, "all or fast")->check(CLI::IsMember({"all", "fast"}));

  for (auto* sub : {analyze, search, lattice, family, verify}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  const Format format = *parse_format(format_name);
  try {
    if (*analyze) {
      IntPoly f = parse_polynomial(poly_text);
      std::optional<ExtensionSignature> ext;
      if (!ext_text.empty()) {
        auto [s2, t2] = parse_pair(ext_text, "extension signature");
        if (s2 + t2 < 1) throw UsageError("extension signature must be nonzero");
        ext = ExtensionSignature{s2, t2};
      }
      out << render(analysis_document(f, ext, precision), format);
    } else if (*search) {
      if (degree < 2 || degree > kMaxSearchDegree) throw UsageError("search degree must lie in [2, 8]");
      if (no_prune && degree > kMaxRawSearchDegree) throw UsageError("--no-prune is limited to degree 4");
      SearchOptions opts;
      opts.threads = threads;
      opts.prune = !no_prune;
      if (!signature_text.empty()) {
        auto [s, t] = parse_pair(signature_text, "signature");
        if (s + 2 * t != degree) throw UsageError("signature does not match the degree");
        opts.signature = Signature{s, t};
      }
      SearchReport report = enumerate_m_lt_one(degree, opts);
      switch (format) {
        case Format::text: out << search_text(report, precision); break;
        case Format::csv: out << search_csv(report, precision); break;
        case Format::json: out << render(search_document(report, precision), format); break;
      }
    } else if (*lattice) {
      IntPoly f = parse_polynomial(poly_text);
      LatticeRequest req;
      req.brute_force_check = brute;
      if (!basis_text.empty()) req.basis = parse_basis(basis_text, f.degree());
      out << render(lattice_document(f, req, precision), format);
    } else if (*family) {
      auto kind = parse_family(family_text);
      if (!kind) throw UsageError("unknown family '" + family_text + "'");
      out << render(family_document(*kind, family_n, precision), format);
    } else if (*verify) {
      auto records = run_suite(suite_name == "fast" ? Suite::fast : Suite::all);
      switch (format) {
        case Format::text: out << verify_text(records, precision); break;
        case Format::csv: out << verify_csv(records, precision); break;
        case Format::json: out << render(verify_document(records, precision), format); break;
      }
      bool failed = std::any_of(records.begin(), records.end(), [](const CheckRecord& r) { return r.verdict == Verdict::fail; });
      return failed ? 1 : 0;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace nfmin
