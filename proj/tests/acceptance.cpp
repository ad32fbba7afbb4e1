// Acceptance run: one PASS/FAIL line per criterion, expected values written out here.

#include "nilkur/catalog.hpp"
#include "nilkur/groebner.hpp"
#include "nilkur/kuranishi.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <thread>

using namespace nilkur;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  enum { pass, fail } status = fail;
  std::string detail;
};

int failures = 0;

void criterion(int number, const std::string& title, double budget_seconds, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {Outcome::fail, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (secs > budget_seconds) {
    o.status = Outcome::fail;
    o.detail += "; over the time budget";
  }
  if (o.status == Outcome::fail) ++failures;
  std::cout << (o.status == Outcome::pass ? "PASS" : "FAIL") << "  criterion " << number << ": " << title << " ("
            << o.detail << ") [" << std::fixed << std::setprecision(2) << secs << "s / " << budget_seconds << "s]"
            << std::endl;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : ", ") + p;
  return out;
}

Deadline after(double seconds) {
  return Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(seconds));
}

IdealGens gens(std::initializer_list<const char*> texts) {
  std::vector<Polynomial> v;
  for (const char* t : texts) v.push_back(parse_polynomial(t));
  return IdealGens(v);
}

const char* kH7 = "dim 7\ndw6 = w1^w2\ndw7 = w3^w4 + cw1^w5\n";

// the non-abelian algebras up to dimension 5: nu, h^1(Theta), smooth
struct Row {
  const char* algebra;
  std::size_t nu, h1;
  bool smooth;
};
const Row kTable1[] = {
    {"(0,0,12)", 2, 6, true},          {"(0,0,0,12)", 2, 12, false},       {"(0,0,12,13)", 3, 8, false},
    {"(0,0,0,12,13)", 2, 15, false},   {"(0,0,0,0,12+34)", 2, 20, false},  {"(0,0,12,13,23)", 3, 10, true},
    {"(0,0,0,12,13+24)", 3, 15, false}, {"(0,0,12,13,14)", 4, 10, false}, {"(0,0,12,13,14+23)", 4, 10, false},
};

// the singular algebras of dimension 5: d and the embedded decomposition
struct Singular {
  const char* algebra;
  std::size_t d;
  const char* stem;
};
const Singular kTable2[] = {
    {"(0,0,0,12,13)", 9, "0_0_0_12_13"},
    {"(0,0,0,12,13+24)", 12, "0_0_0_12_13p24"},
    {"(0,0,12,13,14)", 8, "0_0_12_13_14"},
    {"(0,0,12,13,14+23)", 8, "0_0_12_13_14p23"},
    {"(0,0,0,0,12+34)", 16, "0_0_0_0_12p34"},
};

// abelian a_1..a_5, h^1(Theta) as printed
const std::size_t kAbelianPrinted[] = {1, 6, 18, 40, 75};

enum class Match { equal, differs, timeout };

// intersection of the printed components (trying every recorded reading) against the computed ideal
Match compare_printed(const PrintedIdeal& printed, const IdealGens& computed, double timeout, std::size_t& reading) {
  const auto readings = printed.readings();
  try {
    for (reading = 0; reading < readings.size(); ++reading) {
      const Deadline dl = after(timeout);
      IdealGens meet = readings[reading][0];
      for (std::size_t c = 1; c < readings[reading].size(); ++c) meet = ideal_intersect(meet, readings[reading][c], dl);
      if (ideal_equal(meet, computed, dl)) return Match::equal;
    }
  } catch (const Timeout&) {
    return Match::timeout;
  }
  return Match::differs;
}

}  // namespace

int main() {
  std::cout << std::unitbuf;

  criterion(1, "nu, h1(Theta) and smoothness up to dimension 5", 60, [] {
    std::vector<std::string> bad;
    for (const Row& row : kTable1) {
      const KuranishiReport r = analyze(parse_salamon(row.algebra));
      if (r.nu != row.nu || r.theta_dims.at(1) != row.h1 || r.smooth != row.smooth)
        bad.push_back(std::string(row.algebra) + ": nu " + std::to_string(r.nu) + " h1 " +
                      std::to_string(r.theta_dims.at(1)) + (r.smooth ? " smooth" : " singular"));
    }
    if (bad.empty()) return Outcome{Outcome::pass, "9 of 9 non-abelian algebras match"};
    return Outcome{Outcome::fail, "mismatch: " + join(bad)};
  });

  criterion(2, "exact generators of (0,0,0,12) and (0,0,12,13)", 10, [] {
    const auto start = Clock::now();
    const bool a = ideal_equal(IdealGens(analyze(parse_salamon("(0,0,0,12)")).generators),
                               gens({"t1_1*t3_2 - t1_2*t3_1", "t2_1*t3_2 - t2_2*t3_1"}));
    const double ta = std::chrono::duration<double>(Clock::now() - start).count();
    const bool b = ideal_equal(IdealGens(analyze(parse_salamon("(0,0,12,13)")).generators),
                               gens({"t2_1*(t1_1*t2_2 - t1_2*t2_1)"}));
    const double tb = std::chrono::duration<double>(Clock::now() - start).count() - ta;
    std::ostringstream d;
    d << std::fixed << std::setprecision(2) << "two 2x2 minors " << (a ? "equal" : "differ") << " in " << ta
      << "s, cubic " << (b ? "equal" : "differs") << " in " << tb << "s";
    return Outcome{a && b && ta < 5 && tb < 5 ? Outcome::pass : Outcome::fail, d.str()};
  });

  criterion(3, "cylinder dimension d of the singular dimension-5 algebras", 5, [] {
    std::vector<std::string> got;
    bool ok = true;
    for (const Singular& s : kTable2) {
      const std::size_t d = KuranishiProblem(parse_salamon(s.algebra)).parallelisable_directions().cylinder_dim;
      got.push_back(std::to_string(d));
      ok = ok && d == s.d;
    }
    return Outcome{ok ? Outcome::pass : Outcome::fail, "d = " + join(got) + ", expected 9, 12, 8, 8, 16"};
  });

  criterion(4, "singular dimension-5 ideals as intersections of the printed components", 60 + 4 * 300, [] {
    std::vector<std::string> notes;
    bool ok = true;
    for (const Singular& s : kTable2) {
      const bool small = std::string(s.stem) == "0_0_0_12_13";
      const auto start = Clock::now();
      const IdealGens computed(analyze(parse_salamon(s.algebra)).generators);
      const PrintedIdeal printed = parse_printed_ideal(embedded_ideal_text(s.stem));
      std::size_t reading = 0;
      const Match m = compare_printed(printed, computed, small ? 60 : 300, reading);
      const double secs = std::chrono::duration<double>(Clock::now() - start).count();
      std::ostringstream d;
      d << s.algebra << " ";
      if (m == Match::equal) {
        d << "equal";
        if (reading) d << " (alternate reading of " << join(printed.alternates_used(reading)) << ")";
      } else if (m == Match::timeout) {
        d << "SKIP unverified";
        ok = ok && !small;
      } else {
        d << "MISMATCH";
        ok = false;
      }
      d << std::fixed << std::setprecision(1) << " " << secs << "s";
      if (small && secs > 60) ok = false;
      notes.push_back(d.str());
    }
    return Outcome{ok ? Outcome::pass : Outcome::fail, join(notes)};
  });

  criterion(5, "general-structure example h7", 5, [] {
    const KuranishiProblem P(parse_complex_structure(kH7));
    const unsigned n = P.exterior().n();
    PolyVector phi1(P.theta().dim(1));
    phi1[2 * n + 0] = 1;  // cw3 (x) X1
    phi1[3 * n + 1] = 1;  // cw4 (x) X2
    const PhiSeries s = P.phi_recursion(3, phi1);
    const bool h2 = is_zero(s.harmonic[2]);
    const std::string phi2 = P.theta().vector_form(s.phi[2], 1).to_string();
    const ObstructionResult o = P.obstruction(s);
    std::vector<std::string> support;
    std::string coeff;
    for (std::size_t i = 0; i < o.labels.size(); ++i)
      if (!o.harmonic_coefficients[i].is_zero()) {
        support.push_back(o.labels[i]);
        coeff = o.harmonic_coefficients[i].to_string();
      }
    const bool ok = h2 && phi2 == "2*(cw7)*X6" && support == std::vector<std::string>{"(cw3^cw5)*X6"};
    return Outcome{ok ? Outcome::pass : Outcome::fail,
                   std::string("H S_2 ") + (h2 ? "= 0" : "!= 0") + ", Phi_2 = " + phi2 + ", degree-3 support {" +
                       join(support) + "} with coefficient " + coeff};
  });

  criterion(6, "free algebras are smooth", 120, [] {
    std::vector<std::string> bad;
    for (const char* s : {"(0,0,12)", "(0,0,0,12,13,23)", "(0,0,12,13,23,14,25,24+15)"})
      if (!analyze(parse_salamon(s)).smooth) bad.push_back(s);
    return Outcome{bad.empty() ? Outcome::pass : Outcome::fail,
                   bad.empty() ? "b_2, b_3 and the free 4-step algebra have obs = 0" : "obstructed: " + join(bad)};
  });

  criterion(7, "property suite over the catalog", 600, [] {
    const std::set<std::string> properties = {"d-squared", "mc-residual", "degree-bound", "bracket-filtration",
                                              "closed-form", "central-directions", "freecond", "groebner"};
    std::vector<const CatalogEntry*> entries;
    for (const auto& e : catalog()) entries.push_back(&e);
    VerifyOptions opt;
    opt.jobs = std::max(1u, std::thread::hardware_concurrency());
    std::map<std::string, std::pair<int, int>> tally;  // check -> (passed, run)
    std::vector<std::string> failed, residual_in_ideal;
    for (const auto& r : verify(entries, opt)) {
      if (r.check == "mc-residual-mod-obs" && r.status == CheckStatus::pass) residual_in_ideal.push_back(r.entry);
      if (!properties.count(r.check)) continue;
      auto& t = tally[r.check];
      ++t.second;
      if (r.status == CheckStatus::pass) ++t.first;
      else failed.push_back(r.entry + " " + r.check + " [" + r.detail + "]");
    }
    std::vector<std::string> counts;
    for (const auto& [check, t] : tally) counts.push_back(check + " " + std::to_string(t.first) + "/" + std::to_string(t.second));
    std::string detail = join(counts);
    if (!failed.empty())
      detail += "; failing: " + join(failed) + "; residual lies in the obstruction ideal for " +
                std::to_string(residual_in_ideal.size()) + " algebras";
    return Outcome{failed.empty() ? Outcome::pass : Outcome::fail, detail};
  });

  criterion(8, "documented discrepancies are tagged", 30, [] {
    std::vector<std::string> bad, seen;
    auto tagged = [](const KuranishiReport& r, const std::string& q, long long computed, long long paper) {
      for (const auto& d : r.discrepancies)
        if (d.tag == "paper-discrepancy" && d.quantity == q && d.computed == computed && d.paper == paper) return true;
      return false;
    };
    for (std::size_t k = 1; k <= 5; ++k) {
      const KuranishiReport r = analyze(LieAlgebra::abelian(k));
      const long long h1 = (long long)(k * k);
      const long long printed = (long long)kAbelianPrinted[k - 1];
      if (r.theta_dims.at(1) != std::size_t(h1)) bad.push_back("a_" + std::to_string(k) + " h1 is not k^2");
      if (h1 == printed) continue;
      if (tagged(r, "h1_theta", h1, printed))
        seen.push_back("a_" + std::to_string(k) + " " + std::to_string(h1) + " vs " + std::to_string(printed));
      else
        bad.push_back("a_" + std::to_string(k) + " untagged");
    }
    for (long long m : {2, 3}) {
      const KuranishiReport r = analyze(LieAlgebra::free_two_step(std::size_t(m)));
      const long long dim = m * (m + 1) / 2, kur = m * dim;
      if (tagged(r, "dim", dim, m * (m + 3) / 2) && tagged(r, "dim_kur", kur, m * m * (m + 3) / 2))
        seen.push_back("b_" + std::to_string(m) + " dim " + std::to_string(dim) + ", dim Kur " + std::to_string(kur));
      else
        bad.push_back("b_" + std::to_string(m) + " untagged");
    }
    return Outcome{bad.empty() ? Outcome::pass : Outcome::fail,
                   bad.empty() ? "tagged: " + join(seen) : "missing: " + join(bad)};
  });

  std::cout << (failures ? "FAILED " : "ALL PASSED ") << 8 - failures << "/8 criteria" << std::endl;
  return failures ? 1 : 0;
}
