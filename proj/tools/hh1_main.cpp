#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hh1/harness.hpp"
#include "hh1/selftest.hpp"

namespace {

using namespace hh1;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Field parse_field_arg(const std::string& s) {
  if (s == "Q" || s == "q") return Field::rationals();
  std::string t = s;
  if (t.size() > 1 && (t[0] == 'F' || t[0] == 'f')) {
    std::string num = t.substr(1);
    if (!num.empty() && num[0] == ' ') num = num.substr(1);
    try {
      return Field::prime((std::uint64_t)std::stoull(num));
    } catch (const BadField&) {
      throw;
    } catch (const std::exception&) {
    }
  }
  throw Error("bad field '" + s + "': expected Q, F<p> or 'F <p>'");
}

AlgebraAnalysis load_analysis(const std::string& path, const std::string& field_override,
                              std::uint64_t seed) {
  BoundQuiverPresentation pres = parse_presentation(read_file(path));
  if (!field_override.empty()) pres = with_field(pres, parse_field_arg(field_override));
  return analyze_presentation(pres, seed);
}

std::string rstr(Recognition r) {
  switch (r) {
    case Recognition::Yes: return "yes";
    case Recognition::No: return "no";
    default: return "inconclusive";
  }
}

std::string tstr(Ternary t) {
  switch (t) {
    case Ternary::Yes: return "yes";
    case Ternary::No: return "no";
    default: return "inconclusive";
  }
}

Json analyze_json(const AlgebraAnalysis& an) {
  Json j;
  j["algebra"] = Json{{"name", an.A().presentation().name},
                      {"hash", an.hash},
                      {"field", an.A().field().str()},
                      {"dim", an.A().dim()},
                      {"simples", an.A().simple_count()},
                      {"arrows", an.A().arrow_count()},
                      {"loewy_length", an.A().loewy_length()}};
  j["quiver"] = Json{{"loops", an.qclass.has_loops},
                     {"max_parallel", an.qclass.max_parallel},
                     {"simple_digraph", an.qclass.is_simple_digraph}};
  j["center_dim"] = an.A().sc().center().dim();
  j["symmetric"] = Json{{"verdict", tstr(an.symmetric.verdict)}, {"method", an.symmetric.method}};
  Json h;
  h["dim"] = an.h.dim();
  h["solvable"] = an.series.solvable;
  h["abelian"] = an.series.abelian;
  h["nilpotent"] = an.series.nilpotent;
  h["derived_length"] = an.series.derived_length;
  h["derived_nilpotency_class"] = an.series.nilpotency_class_of_derived;
  h["derived_series_dims"] = an.series.derived_dims;
  h["lower_central_dims"] = an.series.lower_central_dims;
  j["hh1"] = h;
  j["recognizers"] = Json{{"sl2", an.sl2 ? rstr(an.sl2->verdict) : "n/a"},
                          {"witt", an.witt ? rstr(an.witt->verdict) : "n/a"}};
  j["seed"] = an.seed;
  return j;
}

void print_analysis(const AlgebraAnalysis& an) {
  const auto& A = an.A();
  std::string name = A.presentation().name.empty() ? "(unnamed)" : A.presentation().name;
  std::cout << "algebra " << name << " over " << A.field().str() << ": dim " << A.dim()
            << ", simples " << A.simple_count() << ", arrows " << A.arrow_count() << ", loewy "
            << A.loewy_length() << "\n";
  std::cout << "quiver: loops " << (an.qclass.has_loops ? "yes" : "no") << "; max parallel "
            << an.qclass.max_parallel << "; simple digraph "
            << (an.qclass.is_simple_digraph ? "yes" : "no") << "\n";
  std::cout << "center dim " << A.sc().center().dim() << "; symmetric: "
            << tstr(an.symmetric.verdict) << " (" << an.symmetric.method << ")\n";
  std::cout << "HH1 dim " << an.h.dim() << "; solvable: " << (an.series.solvable ? "yes" : "no")
            << "; abelian: " << (an.series.abelian ? "yes" : "no");
  if (an.series.solvable) std::cout << "; derived length " << an.series.derived_length;
  if (an.series.derived_nilpotent && !an.series.abelian)
    std::cout << "; derived class " << an.series.nilpotency_class_of_derived;
  std::cout << "; sl2: " << (an.sl2 ? rstr(an.sl2->verdict) : "n/a")
            << "; witt: " << (an.witt ? rstr(an.witt->verdict) : "n/a") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact HH^1 Lie-algebra toolkit for bound quiver algebras"};
  app.require_subcommand(1);

  std::string file, field_override, inject_fault;
  std::uint64_t seed = 0;
  bool as_json = false;

  auto* analyze = app.add_subcommand("analyze", "analyze one presentation file");
  analyze->add_option("file", file)->required();
  analyze->add_flag("--json", as_json);
  analyze->add_option("--seed", seed);
  analyze->add_option("--field-override", field_override,
                      "recompute over another field (changes the algebra)");

  auto* verify = app.add_subcommand("verify", "run the theorem checks on a presentation file");
  verify->add_option("file", file)->required();
  verify->add_flag("--json", as_json);
  verify->add_option("--seed", seed);
  verify->add_option("--field-override", field_override);
  verify->add_option("--inject-fault", inject_fault)->group("");  // testing hook

  auto* gen = app.add_subcommand("gen", "emit a canonical presentation");
  std::string family;
  std::vector<std::string> params;
  std::string gen_field = "Q";
  gen->add_option("family", family, "kronecker | trunc-poly | nakayama | rad-sq-zero")->required();
  gen->add_option("params", params);
  gen->add_option("--field", gen_field);

  auto* selftest = app.add_subcommand("selftest", "run the acceptance corpus");
  selftest->add_flag("--json", as_json);
  selftest->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*analyze) {
      AlgebraAnalysis an = load_analysis(file, field_override, seed);
      if (as_json)
        std::cout << analyze_json(an).dump(2) << "\n";
      else
        print_analysis(an);
      return 0;
    }
    if (*verify) {
      AlgebraAnalysis an = load_analysis(file, field_override, seed);
      HarnessOptions opt;
      opt.seed = seed;
      opt.inject_fault = inject_fault;
      TheoremReport rep = run_all(an, opt);
      if (as_json) {
        std::cout << report_json(rep).dump(2) << "\n";
      } else {
        for (const auto& c : rep.checks) {
          std::cout << verdict_str(c.verdict) << "  " << c.id;
          if (!c.applicable) std::cout << " (n/a: " << c.reason << ")";
          if (!c.note.empty()) std::cout << " -- " << c.note;
          std::cout << "\n";
        }
      }
      if (rep.worst() == Verdict::Fail) return 1;
      return 0;
    }
    if (*gen) {
      Field f = parse_field_arg(gen_field);
      auto need = [&](std::size_t n) {
        if (params.size() != n) throw Error("wrong number of parameters for " + family);
      };
      if (family == "kronecker") {
        need(0);
        std::cout << gen_kronecker(f);
      } else if (family == "trunc-poly") {
        need(1);
        std::cout << gen_trunc_poly(std::stoi(params[0]), f);
      } else if (family == "nakayama") {
        need(2);
        std::cout << gen_nakayama(std::stoi(params[0]), std::stoi(params[1]), f);
      } else if (family == "rad-sq-zero") {
        need(1);
        std::vector<std::pair<int, int>> edges;
        int maxv = 0;
        std::istringstream ss(params[0]);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
          auto dash = tok.find('-');
          if (dash == std::string::npos) throw Error("edge '" + tok + "' is not <src>-<dst>");
          int s = std::stoi(tok.substr(0, dash)), t = std::stoi(tok.substr(dash + 1));
          edges.emplace_back(s, t);
          maxv = std::max({maxv, s, t});
        }
        if (edges.empty()) throw Error("rad-sq-zero needs at least one edge");
        std::cout << gen_rad_square_zero(maxv + 1, edges, f);
      } else {
        throw Error("unknown family '" + family + "'");
      }
      return 0;
    }
    if (*selftest) {
      SelftestResult res = run_selftest(seed);
      if (as_json)
        std::cout << res.to_json().dump(2) << "\n";
      else
        std::cout << res.table();
      return res.all_pass ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
