#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "planarlab/classify.hpp"
#include "planarlab/cyclo.hpp"
#include "planarlab/mub.hpp"
#include "planarlab/search.hpp"
#include "planarlab/serialize.hpp"

namespace planarlab::cli {

namespace {

struct FieldArgs {
  unsigned p = 0;
  unsigned r = 1;
};

void add_field_options(CLI::App* cmd, FieldArgs& f) {
  cmd->add_option("--p", f.p, "Field characteristic (odd prime)")->required();
  cmd->add_option("--r", f.r, "Extension degree")->default_val(1);
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

std::string digits_text(const BasePDigits& d) {
  std::string s = "[";
  for (std::size_t i = 0; i < d.digits.size(); ++i) s += (i ? "," : "") + std::to_string(d.digits[i]);
  return s + "]";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IOError, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("PLANARLAB_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, std::string("PLANARLAB_BUDGET is not an integer: ") + env);
    }
  }
  return SearchOptions::kDefaultBudget;
}

Poly random_additive(const Field& field, std::mt19937_64& rng) {
  Poly m(field);
  std::uint64_t e = 1;
  for (unsigned i = 0; i < field.r(); ++i, e *= field.p()) m.add_term(e, static_cast<Elem>(rng() % field.q()));
  return m;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite-field planar and Alltop function toolkit", "planarlab"};
  app.require_subcommand(1);

  FieldArgs field_args;
  std::string format;
  std::string poly_text;
  std::string mode_text;
  bool canonical = false;
  unsigned workers = 1;
  std::uint64_t seed = 20240611;

  // field-info
  bool with_table = false;
  auto* field_info = app.add_subcommand("field-info", "Describe GF(p^r) and its canonical modulus");
  add_field_options(field_info, field_args);
  field_info->add_flag("--table", with_table, "Print the multiplication table (q <= 49)");
  field_info->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  // test
  auto* test = app.add_subcommand("test", "Classify a polynomial");
  add_field_options(test, field_args);
  test->add_option("--poly", poly_text)->required();
  test->add_option("--mode", mode_text)->required()->check(CLI::IsMember({"permutation", "additive", "planar", "alltop"}));
  test->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  // delta
  Elem a_enc = 0;
  std::optional<Elem> b_enc;
  auto* delta_cmd = app.add_subcommand("delta", "Print the difference polynomial f(x+a) - f(x)");
  add_field_options(delta_cmd, field_args);
  delta_cmd->add_option("--poly", poly_text)->required();
  delta_cmd->add_option("--a", a_enc)->required();
  delta_cmd->add_option("--b", b_enc, "Second shift; prints the double difference");
  delta_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  // search
  std::string family_text;
  unsigned max_deg = 0;
  std::optional<std::uint64_t> budget;
  std::optional<std::uint64_t> op_budget;
  double spot_fraction = 0.0;
  auto* search = app.add_subcommand("search", "Exhaustive search over a candidate family");
  add_field_options(search, field_args);
  search->add_option("--family", family_text)
      ->required()
      ->check(CLI::IsMember({"monomials", "all-reduced", "shifted-cubics", "do-monomials"}));
  search->add_option("--max-deg", max_deg, "Degree bound for all-reduced");
  search->add_option("--mode", mode_text)->required()->check(CLI::IsMember({"planar", "alltop"}));
  search->add_option("--budget", budget, "Candidate budget (overrides PLANARLAB_BUDGET)");
  search->add_option("--op-budget", op_budget, "Estimated table-operation budget");
  search->add_option("--workers", workers)->check(CLI::PositiveNumber);
  search->add_option("--spot-check", spot_fraction, "Re-test this fraction of candidates after the run")
      ->check(CLI::Range(0.0, 1.0));
  search->add_option("--seed", seed);
  search->add_flag("--canonical", canonical, "Omit timing so output is byte-stable");
  search->add_option("--format", format)->check(CLI::IsMember({"json"}));

  // verify
  std::string theorem;
  auto* verify = app.add_subcommand("verify", "Check a theorem exhaustively on one field");
  add_field_options(verify, field_args);
  verify->add_option("--theorem", theorem)->required()->check(CLI::IsMember({"char3", "degree", "cubic-scope"}));
  verify->add_option("--family", family_text)
      ->check(CLI::IsMember({"monomials", "all-reduced", "shifted-cubics", "do-monomials"}));
  verify->add_option("--max-deg", max_deg);
  verify->add_option("--budget", budget);
  verify->add_option("--op-budget", op_budget);
  verify->add_option("--workers", workers)->check(CLI::PositiveNumber);
  verify->add_flag("--canonical", canonical);

  // mubs
  std::string construction_text;
  std::string pi_text;
  std::string action;
  std::string in_path;
  std::string out_path;
  auto* mubs = app.add_subcommand("mubs", "Build, export or verify a complete set of MUBs");
  add_field_options(mubs, field_args);
  mubs->add_option("--construction", construction_text)->required()->check(CLI::IsMember({"planar", "alltop"}));
  mubs->add_option("--pi", pi_text, "Planar polynomial for the planar construction")->default_val("x^2");
  mubs->add_option("--action", action)->required()->check(CLI::IsMember({"build", "verify", "export"}));
  mubs->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "float-json"}));
  mubs->add_option("--in", in_path, "Verify this export instead of building");
  mubs->add_option("--out", out_path, "Write the export here instead of standard output");
  mubs->add_option("--workers", workers)->check(CLI::PositiveNumber);
  mubs->add_flag("--canonical", canonical);

  // charsum
  auto* charsum = app.add_subcommand("charsum", "Exact squared magnitude of sum_x w^tr(f(x))");
  add_field_options(charsum, field_args);
  charsum->add_option("--poly", poly_text)->required();
  charsum->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  // binom
  std::uint64_t bn = 0;
  std::uint64_t bk = 0;
  unsigned bp = 0;
  auto* binom = app.add_subcommand("binom", "binom(n, k) mod p via base-p digits");
  binom->add_option("--n", bn)->required();
  binom->add_option("--k", bk)->required();
  binom->add_option("--p", bp)->required();
  binom->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  // equiv
  unsigned trials = 100;
  auto* equiv = app.add_subcommand("equiv", "Apply seeded random equivalence transforms and re-test planarity");
  add_field_options(equiv, field_args);
  equiv->add_option("--poly", poly_text)->required();
  equiv->add_option("--trials", trials)->default_val(100);
  equiv->add_option("--seed", seed);
  equiv->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> argv_store{"planarlab"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n' << app.help();
    return kUsage;
  }

  auto fmt = [&](std::string_view dflt) { return format.empty() ? std::string(dflt) : format; };

  try {
    if (*field_info) {
      const Field field = make_field(field_args.p, field_args.r);
      if (with_table && field.q() > 49) throw Error(ErrorCode::InvalidArgument, "--table needs q <= 49");
      if (fmt("text") == "json") {
        Json j = field_to_json(field);
        j["q"] = field.q();
        j["modulus_text"] = field.modulus_string();
        if (with_table) {
          Json rows = Json::array();
          for (Elem a = 0; a < field.q(); ++a) {
            Json row = Json::array();
            for (Elem b = 0; b < field.q(); ++b) row.push_back(field.mul(a, b));
            rows.push_back(std::move(row));
          }
          j["mul_table"] = std::move(rows);
        }
        emit(out, j);
      } else {
        out << "p=" << field.p() << " r=" << field.r() << " q=" << field.q() << " modulus=" << field.modulus_string()
            << '\n';
        if (with_table)
          for (Elem a = 0; a < field.q(); ++a) {
            for (Elem b = 0; b < field.q(); ++b) out << (b ? " " : "") << field.mul(a, b);
            out << '\n';
          }
      }
      return kOk;
    }

    if (*test) {
      const Field field = make_field(field_args.p, field_args.r);
      const Poly f = parse_poly(poly_text, field);
      const auto table = value_table(f);
      TableClassifier classifier(field);
      std::optional<Witness> w;
      if (mode_text == "permutation") w = classifier.permutation_violation(table.values);
      if (mode_text == "additive") w = additive_violation(f);
      if (mode_text == "planar") w = classifier.planar_violation(table.values);
      if (mode_text == "alltop") w = classifier.alltop_violation(table.values);
      if (fmt("json") == "json") {
        Json j;
        j["poly"] = f.to_string();
        j["mode"] = mode_text;
        j["verdict"] = !w.has_value();
        j["witness"] = w ? witness_to_json(*w) : Json(nullptr);
        emit(out, j);
      } else {
        out << (w ? "false" : "true") << '\n';
      }
      return kOk;
    }

    if (*delta_cmd) {
      const Field field = make_field(field_args.p, field_args.r);
      const Poly f = parse_poly(poly_text, field);
      bool degenerate = false;
      const Poly d = b_enc ? double_delta(f, field.element(a_enc), field.element(*b_enc))
                           : delta(f, field.element(a_enc), &degenerate);
      if (degenerate) err << "warning: shift a = 0 gives the zero polynomial\n";
      if (fmt("text") == "json") {
        Json j;
        j["poly"] = d.to_string();
        j["degree"] = d.degree() ? Json(*d.degree()) : Json(nullptr);
        emit(out, j);
      } else {
        out << d.to_string() << '\n';
      }
      return kOk;
    }

    SearchOptions options;
    options.workers = workers;
    options.budget = budget ? *budget : default_budget();
    if (op_budget) options.op_budget = *op_budget;
    const FamilySpec family{family_text.empty() ? FamilyKind::Monomials : family_kind_from_string(family_text),
                            max_deg};

    if (*search) {
      const Field field = make_field(field_args.p, field_args.r);
      const SearchReport report = run_search(field, family, search_mode_from_string(mode_text), options);
      Json j = search_report_to_json(report, canonical);
      if (spot_fraction > 0.0) {
        const SpotCheck sc = spot_check(report, spot_fraction, seed);
        j["spot_check"] = {{"sampled", sc.sampled}, {"mismatches", sc.mismatches}};
      }
      emit(out, j);
      return kOk;
    }

    if (*verify) {
      const Field field = make_field(field_args.p, field_args.r);
      Json j;
      j["theorem"] = theorem;
      bool holds = false;
      if (theorem == "degree") {
        const auto rep = verify_monomial_degree_theorem(field);
        holds = rep.holds;
        j["field"] = field_to_json(field);
        j["checked"] = rep.checked;
        Json mism = Json::array();
        for (const auto& m : rep.mismatches)
          mism.push_back({{"n", m.n}, {"a", m.a}, {"predicted", m.predicted},
                          {"found", m.found ? Json(*m.found) : Json(nullptr)}});
        j["mismatches"] = std::move(mism);
      } else if (theorem == "char3") {
        const auto rep = verify_char3_theorem(field, family, options);
        holds = rep.holds;
        j["report"] = search_report_to_json(rep.report, canonical);
      } else {
        const auto rep = verify_cubic_scope(field, family, options);
        holds = rep.holds;
        j["report"] = search_report_to_json(rep.search, canonical);
        Json viol = Json::array();
        for (const auto& v : rep.violations)
          viol.push_back({{"poly", v.poly.to_string()}, {"in_do_class", v.in_do_class},
                          {"cubic_equivalent", v.cubic_equivalent}});
        j["violations"] = std::move(viol);
      }
      j["holds"] = holds;
      emit(out, j);
      return holds ? kOk : kVerifyFailed;
    }

    if (*mubs) {
      const Field field = make_field(field_args.p, field_args.r);
      const Construction construction = construction_from_string(construction_text);
      auto build = [&] {
        return construction == Construction::Planar ? build_planar_mubs(field, parse_poly(pi_text, field))
                                                    : build_alltop_mubs(field);
      };
      if (action == "verify") {
        std::optional<MubSet> m;
        if (in_path.empty()) {
          m.emplace(build());
        } else if (fmt("json") == "csv") {
          const std::string poly = construction == Construction::Planar ? pi_text : "x^3";
          m.emplace(import_mubs_csv(read_file(in_path), field, construction, poly));
        } else {
          m.emplace(import_mubs_json(read_file(in_path)));
          require_same_field(field, m->field);
        }
        const MubReport report = verify_mub_set(*m, workers);
        Json j;
        j["field"] = field_to_json(field);
        j["construction"] = to_string(m->construction);
        j["poly"] = m->poly;
        j["report"] = mub_report_to_json(report);
        emit(out, j);
        return report.pass ? kOk : kVerifyFailed;
      }
      const MubSet m = build();
      const ExportFormat ef = export_format_from_string(fmt("json"));
      if (out_path.empty()) {
        export_mubs(m, ef, out);
      } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) throw Error(ErrorCode::IOError, "cannot write " + out_path);
        export_mubs(m, ef, file);
      }
      return kOk;
    }

    if (*charsum) {
      const Field field = make_field(field_args.p, field_args.r);
      const Poly f = parse_poly(poly_text, field);
      const CycVec v = char_sum(field, f);
      const MagSqResult mag = mag_sq(v);
      if (fmt("text") == "json") {
        Json j;
        j["poly"] = f.to_string();
        Json counts = Json::array();
        for (const auto& c : v.counts()) counts.push_back(static_cast<std::int64_t>(c));
        j["counts"] = std::move(counts);
        j["mag_sq"] = mag_sq_to_json(mag);
        emit(out, j);
      } else {
        out << "counts:";
        for (const auto& c : v.counts()) out << ' ' << c;
        out << "\nd:";
        for (const auto& d : mag.autocorrelation) out << ' ' << d;
        out << '\n';
        if (mag.is_rational_integer)
          out << "|S|^2 = " << mag.value << '\n';
        else
          out << "|S|^2 is not a rational integer\n";
      }
      return kOk;
    }

    if (*binom) {
      const unsigned residue = binom_mod_p(bn, bk, bp);
      const BasePDigits nd = base_p_digits(bn, bp);
      const BasePDigits kd = base_p_digits(bk, bp);
      bool dominated = bk <= bn;
      for (std::size_t i = 0; i < kd.digits.size() && dominated; ++i)
        dominated = i < nd.digits.size() && kd.digits[i] <= nd.digits[i];
      if (fmt("text") == "json") {
        Json j;
        j["n"] = bn;
        j["k"] = bk;
        j["p"] = bp;
        j["residue"] = residue;
        j["n_digits"] = nd.digits;
        j["k_digits"] = kd.digits;
        j["dominated"] = dominated;
        emit(out, j);
      } else {
        out << residue << '\n'
            << "n=" << bn << " base-" << bp << " digits (low first) " << digits_text(nd) << '\n'
            << "k=" << bk << " base-" << bp << " digits (low first) " << digits_text(kd) << '\n'
            << (dominated ? "every digit of k is at most the matching digit of n: nonzero mod p\n"
                          : "some digit of k exceeds the matching digit of n: divisible by p\n");
      }
      return kOk;
    }

    if (*equiv) {
      const Field field = make_field(field_args.p, field_args.r);
      const Poly f = parse_poly(poly_text, field);
      const bool base_planar = is_planar(f);
      std::mt19937_64 rng(seed);
      auto nonzero = [&] { return field.element(static_cast<Elem>(1 + rng() % (field.q() - 1))); };
      auto any = [&] { return field.element(static_cast<Elem>(rng() % field.q())); };
      unsigned preserved = 0;
      Json failures = Json::array();
      for (unsigned i = 0; i < trials; ++i) {
        const FieldElement c = nonzero();
        const FieldElement s = nonzero();
        const FieldElement t = any();
        const Poly m = random_additive(field, rng);
        const FieldElement d = any();
        const Poly g = apply_equiv_transform(f, c, s, t, m, d);
        if (is_planar(g) == base_planar)
          ++preserved;
        else
          failures.push_back(g.to_string());
      }
      const bool ok = preserved == trials;
      if (fmt("json") == "json") {
        Json j;
        j["poly"] = f.to_string();
        j["planar"] = base_planar;
        j["trials"] = trials;
        j["seed"] = seed;
        j["preserved"] = preserved;
        j["failures"] = std::move(failures);
        emit(out, j);
      } else {
        out << preserved << '/' << trials << " transforms preserved planarity=" << (base_planar ? "true" : "false")
            << '\n';
      }
      return ok ? kOk : kVerifyFailed;
    }
  } catch (const Error& e) {
    err << e.what() << '\n';
    return e.code() == ErrorCode::BudgetExceeded ? kBudget : kUsage;
  }
  return kUsage;
}

}  // namespace planarlab::cli
