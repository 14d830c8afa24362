#include "hh1/selftest.hpp"

#include <sstream>

#include "hh1/errors.hpp"

namespace hh1 {

std::vector<CorpusEntry> builtin_corpus() {
  const Field Q = Field::rationals();
  const Field F2 = Field::prime(2), F3 = Field::prime(3), F5 = Field::prime(5),
              F7 = Field::prime(7);
  std::vector<CorpusEntry> out;
  auto add = [&](const std::string& text, const Field& f) {
    BoundQuiverPresentation p = parse_presentation(text);
    std::string label = p.name + "@" + (f.is_rationals() ? "Q" : "F" + std::to_string(f.characteristic()));
    out.push_back({label, text});
  };
  add(gen_kronecker(Q), Q);
  add(gen_kronecker(F2), F2);
  for (int n : {2, 3, 4, 6}) add(gen_trunc_poly(n, Q), Q);
  add(gen_trunc_poly(3, F3), F3);
  add(gen_trunc_poly(5, F5), F5);
  add(gen_trunc_poly(7, F7), F7);
  add(gen_rad_square_zero(2, {{0, 1}}, Q), Q);
  add(gen_rad_square_zero(3, {{0, 1}, {1, 2}, {2, 0}}, Q), Q);
  add(gen_rad_square_zero(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, Q), Q);
  add(gen_rad_square_zero(4, {{0, 1}, {0, 2}, {0, 3}}, Q), Q);
  for (const Field& f : {Q, F5}) {
    add(gen_nakayama(2, 3, f), f);
    add(gen_nakayama(3, 5, f), f);
    add(gen_nakayama(4, 9, f), f);
    add(gen_nakayama(2, 7, f), f);
  }
  return out;
}

namespace {

struct EntrySummary {
  std::string label;
  int hh1_dim = 0;
  int arrows = 0, simples = 0, loewy = 0, dim = 0;
  bool solvable = false, abelian = false, has_loops = false;
  std::string sl2 = "n/a", witt = "n/a";
  bool probe_simple = false;
  const TheoremReport* report = nullptr;
};

const char* rstr(Recognition r) {
  switch (r) {
    case Recognition::Yes: return "yes";
    case Recognition::No: return "no";
    default: return "inconclusive";
  }
}

Verdict check_verdict(const TheoremReport& r, const std::string& id, bool* applicable = nullptr) {
  for (const auto& c : r.checks)
    if (c.id == id) {
      if (applicable) *applicable = c.applicable;
      return c.verdict;
    }
  throw Error("unknown check id " + id);
}

}  // namespace

SelftestResult run_selftest(std::uint64_t seed) {
  SelftestResult res;
  res.seed = seed;
  auto corpus = builtin_corpus();
  std::vector<EntrySummary> sums;

  HarnessOptions opt;
  opt.seed = seed;
  for (const auto& entry : corpus) {
    AlgebraAnalysis an = analyze_presentation(entry.text, seed);
    res.labels.push_back(entry.label);
    res.reports.push_back(run_all(an, opt));
    EntrySummary s;
    s.label = entry.label;
    s.hh1_dim = an.h.dim();
    s.arrows = an.A().arrow_count();
    s.simples = an.A().simple_count();
    s.loewy = an.A().loewy_length();
    s.dim = an.A().dim();
    s.solvable = an.series.solvable;
    s.abelian = an.series.abelian;
    s.has_loops = an.qclass.has_loops;
    if (an.sl2) s.sl2 = rstr(an.sl2->verdict);
    if (an.witt) s.witt = rstr(an.witt->verdict);
    if (s.label == "kronecker@Q") s.probe_simple = is_simple_probe(an.h.lie(), seed).probably_simple;
    sums.push_back(std::move(s));
  }
  for (std::size_t i = 0; i < sums.size(); ++i) sums[i].report = &res.reports[i];

  auto find = [&](const std::string& label) -> const EntrySummary& {
    for (const auto& s : sums)
      if (s.label == label) return s;
    throw Error("corpus entry missing: " + label);
  };
  auto add_criterion = [&](int num, const std::string& title, bool pass, std::string detail) {
    res.criteria.push_back({num, title, pass, std::move(detail)});
  };

  {
    const auto& k = find("kronecker@Q");
    bool pass = k.hh1_dim == 3 && k.sl2 == "yes" && k.probe_simple;
    add_criterion(1, "Kronecker over Q: HH1 = sl2", pass,
                  "dim " + std::to_string(k.hh1_dim) + ", sl2 " + k.sl2 + ", probe " +
                      (k.probe_simple ? "probably-yes" : "no"));
  }
  {
    const auto& k = find("kronecker@F2");
    add_criterion(2, "Kronecker over F2: HH1 solvable", k.solvable,
                  k.solvable ? "solvable" : "not solvable");
  }
  {
    bool pass = true;
    std::ostringstream d;
    for (int p : {3, 5, 7}) {
      const auto& s = find("trunc-poly-" + std::to_string(p) + "@F" + std::to_string(p));
      bool here = s.hh1_dim == p && s.witt == "yes" && (p != 3 || s.sl2 == "yes");
      pass = pass && here;
      d << "p=" << p << ": dim " << s.hh1_dim << ", witt " << s.witt;
      if (p == 3) d << ", sl2 " << s.sl2;
      d << "; ";
    }
    add_criterion(3, "k[x]/(x^p) over F_p: Witt algebra", pass, d.str());
  }
  {
    bool pass = false;
    std::string detail;
    try {
      LieSC w5 = gen_witt_lie(5);
      Subspace span(5, w5.field());
      for (int i = 0; i < 3; ++i) {  // f_{-1}, f_0, f_1
        Vec v = zero_vec(5, w5.field());
        v[(std::size_t)i] = w5.field().one();
        span.insert(v);
      }
      Subspace closure = subalgebra_bracket(w5, span, span);
      bool closed = span.contains(closure);
      LieSC sub = lie_subalgebra(w5, span);
      Sl2Result s = recognize_sl2(sub, seed);
      pass = closed && s.verdict == Recognition::Yes;
      detail = std::string("closed ") + (closed ? "yes" : "no") + ", sl2 " + rstr(s.verdict);
    } catch (const Error& e) {
      detail = e.what();
    }
    add_criterion(4, "span{f_-1,f_0,f_1} in W_5 is sl2", pass, detail);
  }
  {
    bool pass = true;
    std::ostringstream d;
    for (int n : {2, 3, 4, 6}) {
      const auto& s = find("trunc-poly-" + std::to_string(n) + "@Q");
      bool oracle = check_verdict(*s.report, "oracle-equivalence") == Verdict::Pass;
      bool here = s.hh1_dim == n - 1 && s.solvable && oracle;
      pass = pass && here;
      d << "n=" << n << ": dim " << s.hh1_dim << (s.solvable ? " solvable" : " NOT solvable")
        << "; ";
    }
    add_criterion(5, "k[x]/(x^n) over Q: dim n-1, solvable", pass, d.str());
  }
  {
    bool pass = true;
    std::ostringstream d;
    for (const auto* label : {"rad-sq-zero-01@Q", "rad-sq-zero-01-12-20@Q",
                              "rad-sq-zero-01-12-23-30@Q", "rad-sq-zero-01-02-03@Q"}) {
      const auto& s = find(label);
      int expect = s.arrows - s.simples + 1;
      bool oracle = check_verdict(*s.report, "oracle-equivalence") == Verdict::Pass;
      bool here = s.hh1_dim == expect && s.abelian && oracle;
      pass = pass && here;
      d << s.label << ": dim " << s.hh1_dim << " (expect " << expect << "); ";
    }
    add_criterion(6, "radical-square-zero dimension formula", pass, d.str());
  }
  {
    bool pass = true;
    std::ostringstream d;
    for (const auto* f : {"Q", "F5"})
      for (const auto* el : {"2-3", "3-5", "4-9", "2-7"}) {
        const auto& s = find(std::string("nakayama-") + el + "@" + f);
        bool harness = check_verdict(*s.report, "simple-digraph-theorem") == Verdict::Pass;
        bool here = harness && s.solvable && !s.has_loops;
        pass = pass && here;
        if (!here) d << s.label << " failed; ";
      }
    if (pass) d << "all 8 instances within the Loewy bounds, Ext1(S,S) = 0 everywhere";
    add_criterion(7, "Nakayama family: solvable within Loewy bounds", pass, d.str());
  }
  auto all_checks_pass = [&](const std::string& id, bool require_applicable) {
    bool pass = true;
    std::ostringstream d;
    int applicable_count = 0;
    for (const auto& s : sums) {
      bool app = false;
      Verdict v = check_verdict(*s.report, id, &app);
      if (app) ++applicable_count;
      if (v == Verdict::Fail || (require_applicable && app && v != Verdict::Pass)) {
        pass = false;
        d << s.label << " " << verdict_str(v) << "; ";
      }
    }
    if (pass) d << applicable_count << " applicable instances pass";
    return std::make_pair(pass, d.str());
  };
  {
    auto [pass, detail] = all_checks_pass("filtration-props", true);
    add_criterion(8, "D-filtration and truncation-kernel properties", pass, detail);
  }
  {
    auto [pass, detail] = all_checks_pass("oracle-equivalence", true);
    add_criterion(9, "brute-force oracle equivalence (dim <= 30)", pass, detail);
  }
  {
    auto [pass, detail] = all_checks_pass("lie-validation", true);
    add_criterion(10, "Lie axioms and Killing invariance", pass, detail);
  }
  {
    auto [pass, detail] = all_checks_pass("schur-maps", true);
    add_criterion(11, "Schur corner maps", pass, detail);
  }

  bool no_fail = true;
  for (const auto& r : res.reports) no_fail = no_fail && r.worst() != Verdict::Fail;
  res.all_pass = no_fail;
  for (const auto& c : res.criteria) res.all_pass = res.all_pass && c.pass;
  return res;
}

Json SelftestResult::to_json() const {
  Json j;
  j["seed"] = seed;
  j["criteria"] = Json::array();
  for (const auto& c : criteria)
    j["criteria"].push_back(Json{{"number", c.number},
                                 {"title", c.title},
                                 {"pass", c.pass},
                                 {"detail", c.detail}});
  j["entries"] = Json::array();
  for (std::size_t i = 0; i < reports.size(); ++i) {
    Json e;
    e["label"] = labels[i];
    e["report"] = report_json(reports[i]);
    j["entries"].push_back(std::move(e));
  }
  j["all_pass"] = all_pass;
  return j;
}

std::string SelftestResult::table() const {
  std::ostringstream out;
  out << "corpus (" << labels.size() << " algebras, seed " << seed << ")\n";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    out << "  " << labels[i] << ": " << verdict_str(r.worst());
    int na = 0;
    for (const auto& c : r.checks)
      if (!c.applicable) ++na;
    out << " (" << r.checks.size() - (std::size_t)na << " checks";
    if (na) out << ", " << na << " n/a";
    out << ")\n";
  }
  out << "acceptance criteria\n";
  for (const auto& c : criteria)
    out << "  " << (c.pass ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title
        << " [" << c.detail << "]\n";
  out << (all_pass ? "selftest: all criteria pass\n" : "selftest: FAILURES present\n");
  return out.str();
}

}  // namespace hh1
