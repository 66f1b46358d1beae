#include "planarlab/mub.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "planarlab/classify.hpp"
#include "planarlab/serialize.hpp"

namespace planarlab {

std::string_view to_string(Construction c) noexcept {
  return c == Construction::Planar ? "planar" : "alltop";
}

Construction construction_from_string(std::string_view s) {
  if (s == "planar") return Construction::Planar;
  if (s == "alltop") return Construction::Alltop;
  throw Error(ErrorCode::InvalidArgument, "unknown construction '" + std::string(s) + "'");
}

ExportFormat export_format_from_string(std::string_view s) {
  if (s == "json") return ExportFormat::Json;
  if (s == "csv") return ExportFormat::Csv;
  if (s == "float-json") return ExportFormat::FloatJson;
  throw Error(ErrorCode::InvalidArgument, "unknown export format '" + std::string(s) + "'");
}

namespace {

MubBasis standard_basis() { return MubBasis{true, 0, {}}; }

// Shared shape of both constructions: V_a holds, for each b, the vector with
// exponents tr(g_a(x) + b * h_a(x)).
template <class Fn>
MubSet build(const Field& field, Construction construction, std::string poly, Fn&& phase) {
  MubSet out{field, construction, std::move(poly), {}};
  out.bases.reserve(field.q() + 1);
  out.bases.push_back(standard_basis());
  for (Elem a = 0; a < field.q(); ++a) {
    MubBasis basis{false, a, {}};
    basis.vectors.reserve(field.q());
    for (Elem b = 0; b < field.q(); ++b) {
      PhaseVector v;
      v.exponents.resize(field.q());
      for (Elem x = 0; x < field.q(); ++x) v.exponents[x] = static_cast<std::uint16_t>(field.trace(phase(a, b, x)));
      basis.vectors.push_back(std::move(v));
    }
    out.bases.push_back(std::move(basis));
  }
  return out;
}

}  // namespace

MubSet build_planar_mubs(const Field& field, const Poly& pi) {
  require_same_field(field, pi.field());
  const ValueTable t = value_table(pi);
  if (!TableClassifier(field).is_planar(t.values))
    throw Error(ErrorCode::NotPlanar, pi.to_string() + " is not planar over GF(" + std::to_string(field.q()) + ")");
  return build(field, Construction::Planar, pi.to_string(),
               [&](Elem a, Elem b, Elem x) { return field.add(field.mul(a, t[x]), field.mul(b, x)); });
}

MubSet build_alltop_mubs(const Field& field) {
  if (field.p() < 5)
    throw Error(ErrorCode::CharacteristicTooSmall, "the cubic construction needs characteristic at least 5");
  const Poly cube = Poly::monomial(field, 3);
  const ValueTable t = value_table(cube);
  return build(field, Construction::Alltop, cube.to_string(), [&](Elem a, Elem b, Elem x) {
    const Elem y = field.add(x, a);
    return field.add(t[y], field.mul(b, y));
  });
}

namespace {

struct PairTask {
  std::size_t i;
  std::size_t j;
};

struct TaskResult {
  std::uint64_t pairs = 0;
  std::uint64_t violations = 0;
  std::vector<MubViolation> listed;
};

TaskResult check_pair(const MubSet& m, PairTask task) {
  const unsigned p = m.field.p();
  const BigInt q = m.field.q();
  TaskResult out;
  const auto& b1 = m.bases[task.i].vectors;
  const auto& b2 = m.bases[task.j].vectors;
  for (std::size_t v = 0; v < b1.size(); ++v) {
    for (std::size_t w = task.i == task.j ? v : 0; w < b2.size(); ++w) {
      const BigInt expected = task.i != task.j ? q : (v == w ? BigInt(q * q) : BigInt(0));
      MagSqResult found = mag_sq(phase_inner_counts(b1[v].exponents, b2[w].exponents, p));
      ++out.pairs;
      if (found.is_rational_integer && found.value == expected) continue;
      ++out.violations;
      if (out.listed.size() < MubReport::kMaxListed)
        out.listed.push_back({task.i, v, task.j, w, expected, std::move(found)});
    }
  }
  return out;
}

}  // namespace

MubReport verify_mub_set(const MubSet& m, unsigned workers) {
  const Elem q = m.field.q();
  const unsigned p = m.field.p();
  MubReport report;
  report.bases = m.bases.size();

  std::size_t standard_count = 0;
  std::vector<std::size_t> phase;
  bool entries_ok = true;
  for (std::size_t i = 0; i < m.bases.size(); ++i) {
    const auto& basis = m.bases[i];
    if (basis.standard) {
      ++standard_count;
      continue;
    }
    if (basis.vectors.size() != q)
      report.structural_errors.push_back("basis " + std::to_string(i) + " has " +
                                         std::to_string(basis.vectors.size()) + " vectors, expected " +
                                         std::to_string(q));
    for (std::size_t v = 0; v < basis.vectors.size(); ++v) {
      const auto& e = basis.vectors[v].exponents;
      if (e.size() != q) {
        report.structural_errors.push_back("basis " + std::to_string(i) + " vector " + std::to_string(v) +
                                           " has length " + std::to_string(e.size()));
        entries_ok = false;
      }
      for (const auto x : e)
        if (x >= p) entries_ok = false;
    }
    phase.push_back(i);
  }
  if (m.bases.size() != static_cast<std::size_t>(q) + 1)
    report.structural_errors.push_back("expected " + std::to_string(q + 1) + " bases, found " +
                                       std::to_string(m.bases.size()));
  if (standard_count != 1)
    report.structural_errors.push_back("expected exactly one standard basis, found " +
                                       std::to_string(standard_count));
  if (!entries_ok) report.structural_errors.push_back("phase exponents must lie in [0, p) with length q");
  report.standard_basis_unbiased = entries_ok;
  if (!entries_ok) {
    report.pass = false;
    return report;
  }

  std::vector<PairTask> tasks;
  for (std::size_t a = 0; a < phase.size(); ++a)
    for (std::size_t b = a; b < phase.size(); ++b) tasks.push_back({phase[a], phase[b]});

  std::vector<TaskResult> results(tasks.size());
  const unsigned n = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(tasks.size())));
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < n; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t t = w; t < tasks.size(); t += n) results[t] = check_pair(m, tasks[t]);
      });
  }

  for (auto& r : results) {
    report.pairs_checked += r.pairs;
    report.violation_count += r.violations;
    for (auto& v : r.listed)
      if (report.violations.size() < MubReport::kMaxListed) report.violations.push_back(std::move(v));
  }
  report.pass = report.structural_errors.empty() && report.violation_count == 0;
  return report;
}

void export_mubs(const MubSet& m, ExportFormat format, std::ostream& out) {
  const Elem q = m.field.q();
  if (format == ExportFormat::Csv) {
    out << "basis,b";
    for (Elem x = 0; x < q; ++x) out << ",x" << x;
    out << '\n';
    for (const auto& basis : m.bases) {
      if (basis.standard) continue;
      for (std::size_t b = 0; b < basis.vectors.size(); ++b) {
        out << basis.a << ',' << b;
        for (const auto e : basis.vectors[b].exponents) out << ',' << e;
        out << '\n';
      }
    }
  } else {
    const bool lossy = format == ExportFormat::FloatJson;
    nlohmann::ordered_json j;
    j["field"] = field_to_json(m.field);
    j["construction"] = to_string(m.construction);
    j["poly"] = m.poly;
    if (lossy) j["lossy"] = true;
    auto bases = nlohmann::ordered_json::array();
    const double amp = 1.0 / std::sqrt(static_cast<double>(q));
    const double step = 2.0 * std::numbers::pi / m.field.p();
    for (const auto& basis : m.bases) {
      if (basis.standard) {
        bases.push_back({{"standard", true}});
        continue;
      }
      nlohmann::ordered_json jb;
      jb["a"] = basis.a;
      if (!lossy) {
        auto vectors = nlohmann::ordered_json::array();
        for (const auto& v : basis.vectors) vectors.push_back(v.exponents);
        jb["vectors"] = std::move(vectors);
      } else {
        auto entries = nlohmann::ordered_json::array();
        for (const auto& v : basis.vectors) {
          auto vec = nlohmann::ordered_json::array();
          for (const auto e : v.exponents) vec.push_back({amp * std::cos(step * e), amp * std::sin(step * e)});
          entries.push_back(std::move(vec));
        }
        jb["entries"] = std::move(entries);
      }
      bases.push_back(std::move(jb));
    }
    j["bases"] = std::move(bases);
    out << j.dump() << '\n';
  }
  if (!out) throw Error(ErrorCode::IOError, "failed writing MUB export");
}

std::string export_mubs(const MubSet& m, ExportFormat format) {
  std::ostringstream os;
  export_mubs(m, format, os);
  return os.str();
}

MubSet import_mubs_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::SyntaxError, std::string("MUB JSON: ") + e.what());
  }
  try {
    if (j.contains("lossy")) throw Error(ErrorCode::InvalidArgument, "float-json exports cannot be imported");
    MubSet m{field_from_json(j.at("field")), construction_from_string(j.at("construction").get<std::string>()),
             j.at("poly").get<std::string>(), {}};
    for (const auto& jb : j.at("bases")) {
      if (jb.value("standard", false)) {
        m.bases.push_back(standard_basis());
        continue;
      }
      MubBasis basis{false, jb.at("a").get<Elem>(), {}};
      if (basis.a >= m.field.q()) throw Error(ErrorCode::CoefficientOutOfRange, "basis label outside field");
      for (const auto& jv : jb.at("vectors")) basis.vectors.push_back({jv.get<std::vector<std::uint16_t>>()});
      m.bases.push_back(std::move(basis));
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::SyntaxError, std::string("MUB JSON: ") + e.what());
  }
}

MubSet import_mubs_csv(std::string_view text, const Field& field, Construction construction, std::string poly) {
  MubSet m{field, construction, std::move(poly), {standard_basis()}};
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line.rfind("basis,b", 0) != 0)
    throw Error(ErrorCode::SyntaxError, "CSV header must start with 'basis,b'");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<unsigned long> cells;
    std::istringstream row(line);
    std::string cell;
    while (std::getline(row, cell, ',')) {
      try {
        std::size_t used = 0;
        cells.push_back(std::stoul(cell, &used));
        if (used != cell.size()) throw std::invalid_argument(cell);
      } catch (const std::exception&) {
        throw Error(ErrorCode::SyntaxError, "bad CSV cell '" + cell + "'");
      }
    }
    if (cells.size() != 2 + static_cast<std::size_t>(field.q()))
      throw Error(ErrorCode::LengthMismatch, "CSV row has " + std::to_string(cells.size()) + " cells");
    const auto a = static_cast<Elem>(cells[0]);
    if (m.bases.back().standard || m.bases.back().a != a) m.bases.push_back(MubBasis{false, a, {}});
    PhaseVector v;
    for (std::size_t x = 2; x < cells.size(); ++x) {
      if (cells[x] > 0xFFFF) throw Error(ErrorCode::CoefficientOutOfRange, "exponent too large");
      v.exponents.push_back(static_cast<std::uint16_t>(cells[x]));
    }
    m.bases.back().vectors.push_back(std::move(v));
  }
  return m;
}

}  // namespace planarlab
