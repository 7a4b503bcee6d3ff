#include "qfib/sweep.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <exception>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qfib {

std::string_view to_string(CellStatus status) {
  switch (status) {
    case CellStatus::pass: return "pass";
    case CellStatus::fail: return "fail";
    case CellStatus::fitted: return "fitted";
  }
  return "fail";
}

CellStatus parse_status(std::string_view text) {
  if (text == "pass") return CellStatus::pass;
  if (text == "fail") return CellStatus::fail;
  if (text == "fitted") return CellStatus::fitted;
  throw std::invalid_argument("unknown cell status '" + std::string(text) + "'");
}

ReportSummary VerificationReport::summary() const {
  ReportSummary s;
  for (const auto& c : cells) {
    switch (c.status) {
      case CellStatus::pass: ++s.pass; break;
      case CellStatus::fail: ++s.fail; break;
      case CellStatus::fitted: ++s.fitted; break;
    }
  }
  return s;
}

bool VerificationReport::all_pass(bool fitted_ok) const {
  const ReportSummary s = summary();
  return s.fail == 0 && (fitted_ok || s.fitted == 0);
}

std::vector<SweepCell> plan_sweep(const std::vector<const IdentityEntry*>& entries, const SweepOptions& options) {
  std::vector<SweepCell> cells;
  for (const IdentityEntry* entry : entries) {
    std::vector<IntRange> ranges;
    for (const auto& name : entry->params) {
      IntRange r{0, -1};
      if (auto it = options.ranges.find(name); it != options.ranges.end()) {
        r = it->second;
      } else if (auto d = entry->default_grid.find(name); d != entry->default_grid.end()) {
        r = d->second;
      }
      if (name == "k" && options.max_k) r.hi = std::min(r.hi, *options.max_k);
      if (name == "ell" && options.max_ell) r.hi = std::min(r.hi, *options.max_ell);
      ranges.push_back(r);
    }
    if (std::any_of(ranges.begin(), ranges.end(), [](const IntRange& r) { return r.empty(); })) continue;

    // Odometer over the ranges, last parameter fastest.
    std::vector<int> current;
    for (const auto& r : ranges) current.push_back(r.lo);
    bool done = false;
    while (!done) {
      Params p;
      for (std::size_t i = 0; i < ranges.size(); ++i) p[entry->params[i]] = current[i];
      if (!entry->in_domain || entry->in_domain(p)) {
        cells.push_back({entry, std::move(p), options.fit || entry->fit_by_default});
      }
      std::size_t i = ranges.size();
      while (true) {
        if (i == 0) {
          done = true;
          break;
        }
        --i;
        if (current[i] < ranges[i].hi) {
          ++current[i];
          break;
        }
        current[i] = ranges[i].lo;
      }
    }
  }
  return cells;
}

CellRecord run_cell(const SweepCell& cell, const SweepOptions& options) {
  CellRecord rec;
  rec.id = cell.entry->id;
  for (const auto& name : cell.entry->params) rec.params.emplace_back(name, cell.params.at(name));

  const auto start = std::chrono::steady_clock::now();
  try {
    IdentitySides sides = build_sides(*cell.entry, cell.params);
    Poly r = sides.residual();
    if (r.is_zero()) {
      rec.status = CellStatus::pass;
    } else {
      rec.status = CellStatus::fail;
      if (cell.fit) {
        try {
          SignedMonomial m = fit_monomial_correction(sides.lhs, sides.rhs);
          rec.status = CellStatus::fitted;
          rec.correction = m.to_string();
        } catch (const NotProportional&) {
        }
      }
      if (rec.status == CellStatus::fail) {
        std::string text = to_canonical_string(r);
        if (text.size() > options.max_residual_chars) {
          text.resize(options.max_residual_chars);
          text += "...";
        }
        rec.residual = std::move(text);
      }
    }
  } catch (const std::exception& e) {
    rec.status = CellStatus::fail;
    rec.error = e.what();
  }
  if (options.timings) {
    rec.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return rec;
}

VerificationReport sweep_serial(const std::vector<const IdentityEntry*>& entries, const SweepOptions& options) {
  VerificationReport report;
  for (const auto& cell : plan_sweep(entries, options)) report.cells.push_back(run_cell(cell, options));
  return report;
}

VerificationReport sweep(const std::vector<const IdentityEntry*>& entries, const SweepOptions& options) {
  if (options.workers < 1) throw std::invalid_argument("sweep: worker count must be at least 1");
  const std::vector<SweepCell> cells = plan_sweep(entries, options);
  VerificationReport report;
  report.cells.resize(cells.size());
  const auto count = static_cast<long long>(cells.size());
  // run_cell never throws; each slot is written by exactly one iteration.
#pragma omp parallel for schedule(dynamic, 1) num_threads(options.workers)
  for (long long i = 0; i < count; ++i) {
    report.cells[static_cast<std::size_t>(i)] = run_cell(cells[static_cast<std::size_t>(i)], options);
  }
  return report;
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

using ojson = nlohmann::ordered_json;
constexpr int kReportVersion = 1;

}  // namespace

std::string report_to_json(const VerificationReport& report) {
  ojson cells = ojson::array();
  for (const auto& c : report.cells) {
    ojson cell;
    cell["id"] = c.id;
    ojson params = ojson::object();
    for (const auto& [name, value] : c.params) params[name] = value;
    cell["params"] = std::move(params);
    cell["status"] = std::string(to_string(c.status));
    if (c.residual) cell["residual"] = *c.residual;
    if (c.correction) cell["correction"] = *c.correction;
    if (c.error) cell["error"] = *c.error;
    if (c.ms) cell["ms"] = *c.ms;
    cells.push_back(std::move(cell));
  }
  const ReportSummary s = report.summary();
  ojson doc;
  doc["version"] = kReportVersion;
  doc["command"] = report.command;
  doc["cells"] = std::move(cells);
  doc["summary"] = {{"pass", s.pass}, {"fail", s.fail}, {"fitted", s.fitted}};
  return doc.dump(2) + "\n";
}

VerificationReport report_from_json(std::string_view text) {
  const ojson doc = ojson::parse(text);
  if (doc.at("version").get<int>() != kReportVersion) throw std::invalid_argument("unsupported report version");
  VerificationReport report;
  report.command = doc.at("command").get<std::string>();
  for (const auto& cell : doc.at("cells")) {
    CellRecord c;
    c.id = cell.at("id").get<std::string>();
    for (const auto& [name, value] : cell.at("params").items()) c.params.emplace_back(name, value.get<int>());
    c.status = parse_status(cell.at("status").get<std::string>());
    if (cell.contains("residual")) c.residual = cell["residual"].get<std::string>();
    if (cell.contains("correction")) c.correction = cell["correction"].get<std::string>();
    if (cell.contains("error")) c.error = cell["error"].get<std::string>();
    if (cell.contains("ms")) c.ms = cell["ms"].get<double>();
    report.cells.push_back(std::move(c));
  }
  const ReportSummary s = report.summary();
  const auto& js = doc.at("summary");
  if (js.at("pass").get<std::size_t>() != s.pass || js.at("fail").get<std::size_t>() != s.fail ||
      js.at("fitted").get<std::size_t>() != s.fitted) {
    throw std::invalid_argument("report summary does not match its cells");
  }
  return report;
}

std::string report_to_text(const VerificationReport& report) {
  std::ostringstream out;
  for (const auto& c : report.cells) {
    std::string status(to_string(c.status));
    std::transform(status.begin(), status.end(), status.begin(), [](unsigned char ch) { return std::toupper(ch); });
    out << status << ' ' << c.id;
    for (const auto& [name, value] : c.params) out << ' ' << name << '=' << value;
    if (c.correction) out << "  correction: " << *c.correction;
    if (c.error) out << "  error: " << *c.error;
    if (c.residual) out << "  residual: " << *c.residual;
    if (c.ms) out << "  (" << *c.ms << " ms)";
    out << '\n';
  }
  const ReportSummary s = report.summary();
  out << "summary: " << s.pass << " pass, " << s.fail << " fail, " << s.fitted << " fitted\n";
  return out.str();
}

}  // namespace qfib
