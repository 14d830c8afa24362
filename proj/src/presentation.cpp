#include "hh1/presentation.hpp"

#include <cctype>
#include <sstream>

#include "hh1/errors.hpp"

namespace hh1 {

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream iss(s);
  std::string tok;
  while (iss >> tok) out.push_back(tok);
  return out;
}

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha((unsigned char)s[0]) && s[0] != '_') return false;
  for (char c : s)
    if (!std::isalnum((unsigned char)c) && c != '_') return false;
  return true;
}

long long parse_int(const std::string& s, int line, const char* what) {
  try {
    std::size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, std::string("expected ") + what + ", got '" + s + "'");
  }
}

Rat parse_coeff(const std::string& s, int line) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(parse_int(s, line, "coefficient"));
  long long num = parse_int(s.substr(0, slash), line, "numerator");
  long long den = parse_int(s.substr(slash + 1), line, "denominator");
  if (den == 0) throw ParseError(line, "coefficient denominator is zero");
  return Rat(num, den);
}

}  // namespace

BoundQuiverPresentation parse_presentation(const std::string& text) {
  BoundQuiverPresentation p;
  bool have_field = false, have_vertices = false, have_truncate = false;
  bool seen_directive = false;

  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = raw;
    auto hash = s.find('#');
    if (hash != std::string::npos) {
      if (hash == 0 && !seen_directive && p.name.empty()) {
        std::string n = s.substr(1);
        std::size_t b = n.find_first_not_of(" \t");
        if (b != std::string::npos) p.name = n.substr(b);
      }
      s = s.substr(0, hash);
    }
    auto toks = split_ws(s);
    if (toks.empty()) continue;
    seen_directive = true;
    const std::string& kw = toks[0];

    if (kw == "field") {
      if (have_field) throw ParseError(line, "duplicate field line");
      if (toks.size() == 2 && toks[1] == "Q") {
        p.field = Field::rationals();
      } else if (toks.size() == 3 && toks[1] == "F") {
        long long q = parse_int(toks[2], line, "prime modulus");
        if (q < 2 || q > 0x7fffffffLL) throw BadField(toks[2] + " is not a usable prime modulus");
        p.field = Field::prime((std::uint64_t)q);  // throws BadField if not prime
      } else {
        throw ParseError(line, "expected 'field Q' or 'field F <p>'");
      }
      have_field = true;
    } else if (kw == "vertices") {
      if (have_vertices) throw ParseError(line, "duplicate vertices line");
      if (toks.size() != 2) throw ParseError(line, "expected 'vertices <n>'");
      long long n = parse_int(toks[1], line, "vertex count");
      if (n < 1) throw ParseError(line, "vertex count must be >= 1");
      p.quiver.vertex_count = (int)n;
      have_vertices = true;
    } else if (kw == "arrow") {
      if (!have_vertices) throw ParseError(line, "arrow before vertices");
      if (toks.size() != 4) throw ParseError(line, "expected 'arrow <name> <src> <dst>'");
      if (!valid_identifier(toks[1])) throw ParseError(line, "bad arrow name '" + toks[1] + "'");
      if (p.quiver.arrow_index(toks[1]) >= 0)
        throw ParseError(line, "duplicate arrow name '" + toks[1] + "'");
      long long s0 = parse_int(toks[2], line, "source vertex");
      long long t0 = parse_int(toks[3], line, "target vertex");
      if (s0 < 0 || s0 >= p.quiver.vertex_count || t0 < 0 || t0 >= p.quiver.vertex_count)
        throw ParseError(line, "arrow endpoint out of range");
      p.quiver.arrows.push_back({toks[1], (int)s0, (int)t0});
    } else if (kw == "truncate") {
      if (have_truncate) throw ParseError(line, "duplicate truncate line");
      if (toks.size() != 2) throw ParseError(line, "expected 'truncate <N>'");
      long long n = parse_int(toks[1], line, "truncation degree");
      if (n < 2) throw ParseError(line, "truncation degree must be >= 2");
      p.truncation = (int)n;
      have_truncate = true;
    } else if (kw == "rel") {
      if (!have_field) throw ParseError(line, "rel before field");
      if (!have_truncate) throw ParseError(line, "rel before truncate");
      if (toks.size() < 3 || (toks.size() - 1) % 2 != 0)
        throw ParseError(line, "expected 'rel <coeff> <path> [<coeff> <path>]...'");
      PathVector pv;
      for (std::size_t i = 1; i + 1 < toks.size(); i += 2) {
        Rat c = parse_coeff(toks[i], line);
        FieldElem coeff;
        try {
          coeff = p.field.from_rat(c);
        } catch (const BadField& e) {
          throw ParseError(line, e.what());
        }
        // split the path on '*'
        std::vector<int> arrows;
        const std::string& path = toks[i + 1];
        std::size_t pos = 0;
        while (pos <= path.size()) {
          auto star = path.find('*', pos);
          std::string nm = path.substr(pos, star == std::string::npos ? std::string::npos
                                                                      : star - pos);
          int ai = p.quiver.arrow_index(nm);
          if (ai < 0) throw ParseError(line, "unknown arrow '" + nm + "' in relation");
          arrows.push_back(ai);
          if (star == std::string::npos) break;
          pos = star + 1;
        }
        if ((int)arrows.size() < 2)
          throw InvalidRelation(line, "relation term has length < 2");
        if ((int)arrows.size() >= p.truncation)
          throw InvalidRelation(line, "relation term has length >= truncation degree");
        for (std::size_t k = 0; k + 1 < arrows.size(); ++k)
          if (p.quiver.arrows[arrows[k]].target != p.quiver.arrows[arrows[k + 1]].source)
            throw InvalidRelation(line, "relation term is not a composable path");
        if (!coeff.is_zero()) pv.terms.push_back({coeff, std::move(arrows)});
      }
      if (!pv.terms.empty()) p.relations.push_back(std::move(pv));
    } else {
      throw ParseError(line, "unknown directive '" + kw + "'");
    }
  }
  if (!have_field) throw ParseError(line, "missing field line");
  if (!have_vertices) throw ParseError(line, "missing vertices line");
  if (!have_truncate) throw ParseError(line, "missing truncate line");
  return p;
}

std::string emit_presentation(const BoundQuiverPresentation& p) {
  std::ostringstream out;
  if (!p.name.empty()) out << "# " << p.name << "\n";
  out << "field " << p.field.str() << "\n";
  out << "vertices " << p.quiver.vertex_count << "\n";
  for (const auto& a : p.quiver.arrows)
    out << "arrow " << a.name << " " << a.source << " " << a.target << "\n";
  out << "truncate " << p.truncation << "\n";
  for (const auto& r : p.relations) {
    out << "rel";
    for (const auto& t : r.terms) {
      out << " " << t.coeff.str() << " ";
      for (std::size_t i = 0; i < t.arrows.size(); ++i) {
        if (i) out << "*";
        out << p.quiver.arrows[t.arrows[i]].name;
      }
    }
    out << "\n";
  }
  return out.str();
}

BoundQuiverPresentation with_field(const BoundQuiverPresentation& p, const Field& f) {
  BoundQuiverPresentation q(p);
  q.field = f;
  q.relations.clear();
  for (const auto& r : p.relations) {
    PathVector pv;
    for (const auto& t : r.terms) {
      Rat raw = t.coeff.is_rational_kind() ? t.coeff.rat() : Rat((long long)t.coeff.residue());
      FieldElem c = f.from_rat(raw);
      if (!c.is_zero()) pv.terms.push_back({c, t.arrows});
    }
    if (!pv.terms.empty()) q.relations.push_back(std::move(pv));
  }
  return q;
}

}  // namespace hh1
