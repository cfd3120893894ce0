#include "systema/textio.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "systema/errors.hpp"
#include "systema/instances.hpp"

namespace systema {

namespace {

struct Token {
  std::string text;
  std::size_t line;
  std::size_t column;
};

// Whitespace separated tokens with positions; '#' comments are skipped.
std::vector<std::vector<Token>> tokenizeLines(std::string_view text) {
  std::vector<std::vector<Token>> lines;
  std::size_t line = 1;
  std::size_t i = 0;
  while (i <= text.size()) {
    const std::size_t end = std::min(text.find('\n', i), text.size());
    std::string_view body = text.substr(i, end - i);
    if (auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
    std::vector<Token> toks;
    std::size_t j = 0;
    while (j < body.size()) {
      if (std::isspace(static_cast<unsigned char>(body[j]))) {
        ++j;
        continue;
      }
      std::size_t k = j;
      while (k < body.size() && !std::isspace(static_cast<unsigned char>(body[k]))) ++k;
      toks.push_back({std::string(body.substr(j, k - j)), line, j + 1});
      j = k;
    }
    if (!toks.empty()) lines.push_back(std::move(toks));
    ++line;
    i = end + 1;
  }
  return lines;
}

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::size_t parseCount(const Token& t, const char* what) {
  std::size_t used = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(t.text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != t.text.size() || t.text.empty() || t.text.front() == '-')
    throw ParseError(std::string("expected ") + what + ", got '" + t.text + "'", t.line, t.column);
  return v;
}

struct Envelope {
  std::size_t rows;
  std::size_t cols;
  std::string system;
  Token systemToken;
  std::vector<Token> entries;
  std::size_t endLine;
};

Envelope readEnvelope(std::string_view text) {
  auto lines = tokenizeLines(text);
  if (lines.empty()) throw ParseError("empty matrix file", 1, 1);
  const auto& head = lines.front();
  if (head.size() != 3) throw ParseError("header must be 'rows cols system-name'", head.front().line, 1);
  Envelope env{parseCount(head[0], "row count"), parseCount(head[1], "column count"), head[2].text, head[2], {}, 1};
  for (std::size_t l = 1; l < lines.size(); ++l)
    for (auto& t : lines[l]) env.entries.push_back(t);
  env.endLine = lines.back().front().line;
  const std::size_t want = env.rows * env.cols;
  if (env.entries.size() < want)
    throw ParseError("expected " + std::to_string(want) + " entries, found " + std::to_string(env.entries.size()),
                     env.endLine + 1, 1);
  if (env.entries.size() > want) {
    const auto& extra = env.entries[want];
    throw ParseError("unexpected entry '" + extra.text + "' after " + std::to_string(want) + " entries", extra.line,
                     extra.column);
  }
  return env;
}

Element parseElementAt(const System& s, std::string_view token, std::size_t line, std::size_t column) {
  try {
    return s->parse(token);
  } catch (const std::exception& e) {
    throw ParseError(e.what(), line, column);
  }
}

// Split at `sep` outside (), [], {}.
std::vector<std::pair<std::string, std::size_t>> splitTopLevel(std::string_view text, char sep) {
  std::vector<std::pair<std::string, std::size_t>> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '(' || c == '[' || c == '{') ++depth;
    if (c == ')' || c == ']' || c == '}') --depth;
    if (c == sep && depth == 0) {
      out.emplace_back(std::string(text.substr(start, i - start)), start);
      start = i + 1;
    }
  }
  out.emplace_back(std::string(text.substr(start)), start);
  return out;
}

struct RawTerm {
  std::optional<std::string> coefficient;
  std::vector<std::uint32_t> exponents;
};

struct RawPolynomial {
  std::string system;
  std::size_t vars;
  std::vector<std::pair<RawTerm, std::size_t>> terms;  // term and its column
};

[[noreturn]] void polyError(const std::string& what, std::size_t offset) { throw ParseError(what, 1, offset + 1); }

std::optional<std::size_t> variableIndex(std::string_view name) {
  if (name.empty() || name.front() != 'x') return std::nullopt;
  name.remove_prefix(1);
  if (!name.empty() && name.front() == '_') name.remove_prefix(1);
  if (name.empty()) return std::nullopt;
  for (char c : name)
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
  return std::stoul(std::string(name));
}

RawTerm parseTerm(std::string_view term, std::size_t offset, std::size_t vars) {
  RawTerm raw{std::nullopt, std::vector<std::uint32_t>(vars, 0)};
  for (const auto& [factorText, at] : splitTopLevel(term, '*')) {
    const std::size_t pos = offset + at;
    std::string factor = trim(factorText);
    if (factor.empty()) polyError("empty factor", pos);
    if (factor.front() == '[') {
      if (factor.back() != ']') polyError("unbalanced '['", pos);
      if (raw.coefficient) polyError("second coefficient in one term", pos);
      raw.coefficient = trim(std::string_view(factor).substr(1, factor.size() - 2));
      continue;
    }
    std::string_view base = factor;
    std::uint32_t power = 1;
    if (auto caret = factor.find('^'); caret != std::string::npos && variableIndex(base.substr(0, caret))) {
      base = base.substr(0, caret);
      const std::string e = factor.substr(caret + 1);
      if (e.empty() || !std::all_of(e.begin(), e.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        polyError("bad exponent '" + e + "'", pos);
      power = static_cast<std::uint32_t>(std::stoul(e));
    }
    if (auto var = variableIndex(base)) {
      if (*var < 1 || *var > vars) polyError("variable " + std::string(base) + " outside 1..vars", pos);
      raw.exponents[*var - 1] += power;
      continue;
    }
    if (raw.coefficient) polyError("second coefficient in one term", pos);
    raw.coefficient = factor;
  }
  return raw;
}

RawPolynomial readRawPolynomial(std::string_view text) {
  auto parts = splitTopLevel(text, ';');
  if (parts.size() != 3) polyError("expected 'system; vars=n; terms'", 0);
  RawPolynomial out;
  out.system = trim(parts[0].first);
  const std::string varsPart = trim(parts[1].first);
  if (varsPart.rfind("vars=", 0) != 0) polyError("expected vars=n", parts[1].second);
  try {
    std::size_t used = 0;
    out.vars = std::stoul(varsPart.substr(5), &used);
    if (used != varsPart.size() - 5) throw std::invalid_argument("vars");
  } catch (const std::exception&) {
    polyError("bad variable count '" + varsPart + "'", parts[1].second);
  }
  const std::string_view body = parts[2].first;
  const std::size_t bodyOffset = parts[2].second;
  if (trim(body).empty()) return out;
  for (const auto& [termText, at] : splitTopLevel(body, '+')) {
    if (trim(termText).empty()) polyError("empty term", bodyOffset + at);
    out.terms.emplace_back(parseTerm(termText, bodyOffset + at, out.vars), bodyOffset + at);
  }
  return out;
}

std::string monomialText(const std::vector<std::uint32_t>& exps, const std::string& coefficient) {
  std::string out = "[" + coefficient + "]";
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    out += "*x" + std::to_string(i + 1);
    if (exps[i] != 1) out += "^" + std::to_string(exps[i]);
  }
  return out;
}

std::string escape(std::string_view v) {
  std::string out;
  for (char c : v) {
    if (c == '\\') out += "\\\\";
    else if (c == '\n') out += "\\n";
    else out += c;
  }
  return out;
}

std::string unescape(std::string_view v, std::size_t line) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != '\\') {
      out += v[i];
      continue;
    }
    if (++i == v.size()) throw ParseError("dangling escape", line, i);
    if (v[i] == 'n') out += '\n';
    else if (v[i] == '\\') out += '\\';
    else throw ParseError("unknown escape", line, i);
  }
  return out;
}

}  // namespace

Matrix parseMatrix(std::string_view text) {
  const Envelope env = readEnvelope(text);
  System s;
  try {
    s = resolveInstance(env.system);
  } catch (const Error& e) {
    throw ParseError(e.what(), env.systemToken.line, env.systemToken.column);
  }
  std::vector<Element> entries;
  for (const auto& t : env.entries) entries.push_back(parseElementAt(s, t.text, t.line, t.column));
  return Matrix(s, env.rows, env.cols, std::move(entries));
}

std::string formatMatrix(const Matrix& a) {
  std::ostringstream out;
  out << a.rows() << ' ' << a.cols() << ' ' << a.system()->name << '\n';
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out << (j ? " " : "") << a.system()->show(a(i, j));
    out << '\n';
  }
  return out.str();
}

Vector matrixAsVector(const Matrix& a) {
  if (a.cols() == 1) return a.col(0);
  if (a.rows() == 1) return a.row(0);
  throw PreconditionError("a vector file must hold an n x 1 or 1 x n matrix");
}

SeriesMatrix parseSeriesMatrix(std::string_view text) {
  const Envelope env = readEnvelope(text);
  if (env.system != "puiseux")
    throw ParseError("series matrix must name the system 'puiseux'", env.systemToken.line, env.systemToken.column);
  SeriesMatrix a(env.rows, std::vector<PuiseuxSeries>(env.cols));
  for (std::size_t k = 0; k < env.entries.size(); ++k) {
    const auto& t = env.entries[k];
    try {
      a[k / env.cols][k % env.cols] = PuiseuxSeries::parse(t.text);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), t.line, t.column + e.column() - 1);
    }
  }
  return a;
}

std::string formatSeriesMatrix(const SeriesMatrix& a) {
  std::ostringstream out;
  out << a.size() << ' ' << (a.empty() ? 0 : a[0].size()) << " puiseux\n";
  for (const auto& row : a) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j].str();
    out << '\n';
  }
  return out.str();
}

Polynomial parsePolynomial(std::string_view text) {
  const RawPolynomial raw = readRawPolynomial(text);
  System s;
  try {
    s = resolveInstance(raw.system);
  } catch (const Error& e) {
    throw ParseError(e.what(), 1, 1);
  }
  std::vector<Monomial> terms;
  for (const auto& [t, at] : raw.terms) {
    Element c;
    if (t.coefficient) {
      c = parseElementAt(s, *t.coefficient, 1, at + 1);
    } else {
      if (!s->unital()) polyError("omitted coefficient needs a unital system", at);
      c = s->unit();
    }
    if (!s->isTangible(c)) polyError("coefficient '" + s->show(c) + "' is not tangible", at);
    terms.push_back({t.exponents, c});
  }
  try {
    return Polynomial(s, raw.vars, std::move(terms));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what(), 1, 1);
  }
}

std::string formatPolynomial(const Polynomial& f) {
  std::string out = f.system()->name + "; vars=" + std::to_string(f.vars()) + ";";
  for (std::size_t i = 0; i < f.terms().size(); ++i) {
    const auto& t = f.terms()[i];
    out += (i ? " + " : " ") + monomialText(t.exponents, f.system()->show(t.coefficient));
  }
  return out;
}

SeriesPolynomial parseSeriesPolynomial(std::string_view text) {
  const RawPolynomial raw = readRawPolynomial(text);
  if (raw.system != "puiseux") polyError("series polynomial must name the system 'puiseux'", 0);
  std::map<std::vector<std::uint32_t>, PuiseuxSeries> terms;
  for (const auto& [t, at] : raw.terms) {
    PuiseuxSeries c = PuiseuxSeries::constant(Rational(1));
    if (t.coefficient) {
      try {
        c = PuiseuxSeries::parse(*t.coefficient);
      } catch (const ParseError& e) {
        throw ParseError(e.what(), 1, at + 1);
      }
    }
    auto& slot = terms[t.exponents];
    slot = slot + c;
  }
  return SeriesPolynomial(raw.vars, std::move(terms));
}

std::string formatSeriesPolynomial(const SeriesPolynomial& p) {
  std::string out = "puiseux; vars=" + std::to_string(p.vars()) + ";";
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    out += (first ? " " : " + ") + monomialText(e, c.str());
    first = false;
  }
  return out;
}

Point parsePoint(const System& s, std::string_view text, std::size_t vars) {
  auto items = splitTopLevel(text, ',');
  if (items.size() != vars)
    throw ParseError("point has " + std::to_string(items.size()) + " entries, expected " + std::to_string(vars), 1, 1);
  Point p;
  for (const auto& [item, at] : items) p.push_back(parseElementAt(s, trim(item), 1, at + 1));
  return p;
}

std::string formatPoint(const System& s, const Point& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "," : "") + s->show(p[i]);
  return out;
}

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Report& Report::add(std::string key, std::string value) {
  for (char c : key)
    if (std::isspace(static_cast<unsigned char>(c))) throw PreconditionError("report keys cannot contain spaces");
  if (key.empty()) throw PreconditionError("report keys cannot be empty");
  fields.emplace_back(std::move(key), std::move(value));
  return *this;
}

std::optional<std::string> Report::get(std::string_view key) const {
  for (const auto& [k, v] : fields)
    if (k == key) return v;
  return std::nullopt;
}

std::vector<std::string> Report::getAll(std::string_view key) const {
  std::vector<std::string> out;
  for (const auto& [k, v] : fields)
    if (k == key) out.push_back(v);
  return out;
}

std::string Report::str() const {
  std::string out = "systema-report " + std::to_string(kVersion) + "\nkind " + escape(kind) + "\n";
  for (const auto& [k, v] : fields) out += k + " " + escape(v) + "\n";
  out += "end\n";
  return out;
}

Report Report::parse(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t i = 0;
  while (i < text.size()) {
    const std::size_t end = std::min(text.find('\n', i), text.size());
    lines.push_back(text.substr(i, end - i));
    i = end + 1;
  }
  if (lines.empty() || lines[0] != "systema-report " + std::to_string(kVersion))
    throw ParseError("missing 'systema-report " + std::to_string(kVersion) + "' header", 1, 1);
  if (lines.size() < 2 || lines[1].rfind("kind ", 0) != 0) throw ParseError("missing kind line", 2, 1);
  Report r;
  r.kind = unescape(lines[1].substr(5), 2);
  for (std::size_t l = 2; l < lines.size(); ++l) {
    if (lines[l] == "end") {
      for (std::size_t rest = l + 1; rest < lines.size(); ++rest)
        if (!trim(lines[rest]).empty()) throw ParseError("content after 'end'", rest + 1, 1);
      return r;
    }
    const auto space = lines[l].find(' ');
    if (space == std::string_view::npos || space == 0) throw ParseError("expected 'key value'", l + 1, 1);
    r.fields.emplace_back(std::string(lines[l].substr(0, space)), unescape(lines[l].substr(space + 1), l + 1));
  }
  throw ParseError("missing 'end'", lines.size() + 1, 1);
}

}  // namespace systema
