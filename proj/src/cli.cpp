#include "systema/cli.hpp"

#include <CLI11.hpp>

#include <functional>
#include <ostream>
#include <random>
#include <sstream>

#include "systema/core.hpp"
#include "systema/errors.hpp"
#include "systema/instances.hpp"
#include "systema/linalg.hpp"
#include "systema/polysys.hpp"
#include "systema/textio.hpp"
#include "systema/tropicalize.hpp"

namespace systema {

namespace {

constexpr std::uint64_t kDefaultSeed = 20240601;

struct Outcome {
  Report report;
  int status = kComputed;
};

std::string yesNo(bool b) { return b ? "true" : "false"; }

std::string joinElements(const System& s, const std::vector<Element>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? " " : "") + s->show(xs[i]);
  return out;
}

std::string joinIndices(const std::vector<std::size_t>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? " " : "") + std::to_string(xs[i] + 1);
  return out;
}

std::string renderHuman(const Report& r) {
  std::ostringstream out;
  out << r.kind << '\n';
  for (const auto& [k, v] : r.fields) {
    if (v.find('\n') == std::string::npos) {
      out << "  " << k << ": " << v << '\n';
      continue;
    }
    out << "  " << k << ":\n";
    std::istringstream lines(v);
    for (std::string line; std::getline(lines, line);) out << "    " << line << '\n';
  }
  return out.str();
}

// 1-based comma list → sorted 0-based indices.
std::vector<std::size_t> parseIndexList(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || v < 1) throw ParseError("bad index '" + item + "' in '" + text + "'", 1, 1);
    out.push_back(static_cast<std::size_t>(v - 1));
  }
  return out;
}

std::pair<std::int64_t, std::int64_t> parseWindow(const std::string& text) {
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument("window");
    return {std::stoll(text.substr(0, comma)), std::stoll(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw ParseError("window must be 'lo,hi', got '" + text + "'", 1, 1);
  }
}

Matrix loadMatrix(const System& s, const std::string& path) {
  Matrix a = parseMatrix(readFile(path));
  if (a.system() != s)
    throw PreconditionError("'" + path + "' is over " + a.system()->name + ", but the command names " + s->name);
  return a;
}

Polynomial loadPolynomial(const System& s, const std::string& path) {
  Polynomial f = parsePolynomial(readFile(path));
  if (f.system() != s)
    throw PreconditionError("'" + path + "' is over " + f.system()->name + ", but the command names " + s->name);
  return f;
}

// Candidate tangibles for searches over an infinite system.
std::optional<std::vector<Element>> windowCandidates(const System& s, const std::string& window) {
  if (window.empty()) return std::nullopt;
  if (!s->tangibleWindow) throw PreconditionError(s->name + " has no tangible window");
  auto [lo, hi] = parseWindow(window);
  return s->tangibleWindow(lo, hi);
}

Domain pickDomain(const System& s, std::size_t vars, const std::string& window) {
  if (window.empty()) return fullDomain(s, vars);
  auto [lo, hi] = parseWindow(window);
  return windowDomain(s, vars, lo, hi);
}

// ---------------------------------------------------------------- commands

Outcome runClassify(const std::string& instance) {
  const System s = resolveInstance(instance);
  const auto& S = *s;
  const AxiomReport audit = auditAxioms(S);
  Report r;
  r.kind = "classify";
  r.add("system", S.name)
      .add("classification", audit.classification())
      .add("sampled", yesNo(audit.sampled))
      .add("domain-size", std::to_string(audit.domainSize));
  for (const auto& c : audit.checks) {
    std::string v = c.name + (c.passed ? " pass" : " fail");
    if (!c.passed) v += " " + joinElements(s, c.counterexample);
    r.add("axiom", v);
  }
  r.add("t-module", yesNo(audit.isTModule))
      .add("pseudo-triple", yesNo(audit.isPseudoTriple))
      .add("triple", yesNo(audit.isTriple))
      .add("system-axioms", yesNo(audit.isSystem))
      .add("meta-tangible", yesNo(audit.isMetaTangible))
      .add("minus-bipotent", yesNo(audit.isMinusBipotent))
      .add("reversible", audit.isReversible ? yesNo(*audit.isReversible) : "n/a")
      .add("uniquely-negated", audit.isUniquelyNegated ? yesNo(*audit.isUniquelyNegated) : "n/a")
      .add("negation-kind", audit.negationKind ? std::string(toString(*audit.negationKind)) : "n/a")
      .add("characteristic", audit.characteristic.str())
      .add("max-height", audit.maxHeightObserved ? std::to_string(*audit.maxHeightObserved) : "exceeds bound");
  if (S.unital()) {
    const auto special = specialElements(S);
    r.add("e", S.show(special.e)).add("e-prime", S.show(special.ePrime)).add("e-circ", S.show(special.eCirc));
  }
  if (auto tri = tangibleSumTrichotomy(S)) {
    r.add("trichotomy", tri->holds ? "holds" : "fails " + joinElements(s, tri->counterexample));
  } else {
    r.add("trichotomy", "n/a");
  }
  const HeightTwoEquivalence p = heightTwoEquivalence(S);
  r.add("height-two-equivalence", yesNo(p.tangiblesAndQuasiTangiblesCover) + " " + yesNo(p.metaTangibleHeightTwo) + " " +
                       yesNo(p.metaTangibleUnitShape) + (p.agree() ? " agree" : " disagree"));
  return {r, kComputed};
}

Outcome runDet(const std::string& instance, const std::string& path) {
  const System s = resolveInstance(instance);
  const Matrix a = loadMatrix(s, path);
  Report r;
  r.kind = "det";
  r.add("system", s->name).add("value", s->show(detMinus(a))).add("nonsingular", yesNo(isNonsingular(a)));
  return {r, kComputed};
}

Outcome runAdj(const std::string& instance, const std::string& path) {
  const System s = resolveInstance(instance);
  const Matrix a = loadMatrix(s, path);
  Report r;
  r.kind = "adj";
  r.add("system", s->name).add("matrix", formatMatrix(adjMinus(a)));
  return {r, kComputed};
}

Outcome runLaplace(const std::string& instance, const std::string& path, const std::string& rows) {
  const System s = resolveInstance(instance);
  const Matrix a = loadMatrix(s, path);
  const auto rowSet = parseIndexList(rows);
  const Element viaLaplace = laplaceDet(a, rowSet);
  const Element direct = detMinus(a);
  Report r;
  r.kind = "laplace";
  r.add("system", s->name)
      .add("rows", joinIndices(rowSet))
      .add("value", s->show(viaLaplace))
      .add("det", s->show(direct))
      .add("equal", yesNo(viaLaplace == direct));
  return {r, viaLaplace == direct ? kComputed : kViolated};
}

Outcome runSolve(const std::string& instance, const std::string& matrixPath, const std::string& vectorPath,
              const std::string& window) {
  const System s = resolveInstance(instance);
  const Matrix a = loadMatrix(s, matrixPath);
  const Vector v = matrixAsVector(loadMatrix(s, vectorPath));
  const CramerResult c = cramerCertify(a, v);
  Report r;
  r.kind = "solve";
  r.add("system", s->name)
      .add("det", s->show(c.det))
      .add("form", c.scaled ? "inverse-det" : "det-scaled")
      .add("y", joinElements(s, c.y.entries()))
      .add("holds", yesNo(c.holds));
  const auto candidates = windowCandidates(s, window);
  if (s->finite() || candidates) {
    const SolveResult t = tangibleSolve(a, v, candidates ? &*candidates : nullptr);
    r.add("tangible-solution", t.x ? joinElements(s, t.x->entries()) : "none")
        .add("examined", std::to_string(t.scope.examined))
        .add("sampled", yesNo(t.scope.sampled));
  }
  return {r, c.holds ? kComputed : kViolated};
}

Outcome runRank(const std::string& instance, const std::string& path, const std::string& window) {
  const System s = resolveInstance(instance);
  const Matrix a = loadMatrix(s, path);
  const auto candidates = windowCandidates(s, window);
  const RankReport rr = rankReport(a, candidates ? &*candidates : nullptr);
  auto opt = [](const std::optional<std::size_t>& x) { return x ? std::to_string(*x) : std::string("not computed"); };
  Report r;
  r.kind = "rank";
  r.add("system", s->name)
      .add("row-rank", opt(rr.rowRank))
      .add("column-rank", opt(rr.columnRank))
      .add("submatrix-rank", std::to_string(rr.submatrixRank))
      .add("independent-rows", joinIndices(rr.independentRows))
      .add("independent-cols", joinIndices(rr.independentCols))
      .add("submatrix-rows", joinIndices(rr.submatrixRows))
      .add("submatrix-cols", joinIndices(rr.submatrixCols))
      .add("sampled", yesNo(rr.sampled));
  return {r, kComputed};
}

Outcome runWitnessSearch(const std::string& instance, std::size_t rows, std::size_t cols) {
  const System s = resolveInstance(instance);
  const RankGapResult q = rankGapWitnessSearch(s, rows, cols);
  Report r;
  r.kind = "witness-search";
  r.add("system", s->name)
      .add("shape", std::to_string(rows) + "x" + std::to_string(cols))
      .add("examined", std::to_string(q.examined))
      .add("found", yesNo(q.witness.has_value()));
  if (q.witness) {
    r.add("matrix", formatMatrix(*q.witness))
        .add("row-rank", std::to_string(*q.ranks->rowRank))
        .add("column-rank", std::to_string(*q.ranks->columnRank))
        .add("submatrix-rank", std::to_string(q.ranks->submatrixRank));
  }
  return {r, kComputed};
}

Outcome runCayley(const std::string& instance, const std::string& path) {
  const System s = resolveInstance(instance);
  const Matrix a = loadMatrix(s, path);
  const CayleyHamiltonResult c = cayleyHamiltonCheck(a);
  Report r;
  r.kind = "cayley";
  r.add("system", s->name)
      .add("coefficients", joinElements(s, c.coefficients))
      .add("value", formatMatrix(c.value))
      .add("ghost", yesNo(c.ghost));
  return {r, c.ghost ? kComputed : kViolated};
}

Outcome polyEval(const std::string& instance, const std::string& path, const std::string& at) {
  const System s = resolveInstance(instance);
  const Polynomial f = loadPolynomial(s, path);
  const Point p = parsePoint(s, at, f.vars());
  const Element v = evalPoly(f, p);
  Report r;
  r.kind = "poly-eval";
  r.add("system", s->name)
      .add("point", formatPoint(s, p))
      .add("value", s->show(v))
      .add("tangible", yesNo(s->isTangible(v)))
      .add("preceq-root", yesNo(isPreceqRoot(f, p)));
  return {r, kComputed};
}

Outcome polyPoints(const std::string& kind, const std::string& instance, const std::string& path,
                   const std::string& window) {
  const System s = resolveInstance(instance);
  const Polynomial f = loadPolynomial(s, path);
  const Domain d = pickDomain(s, f.vars(), window);
  const auto pts = kind == "poly-supp" ? circSupp(f, d) : preceqRoots(f, d);
  Report r;
  r.kind = kind;
  r.add("system", s->name)
      .add("domain-size", std::to_string(d.points.size()))
      .add("sampled", yesNo(d.sampled))
      .add("count", std::to_string(pts.size()));
  for (const auto& p : pts) r.add("point", formatPoint(s, p));
  return {r, kComputed};
}

Outcome polyBend(const std::string& instance, const std::string& fPath, const std::string& gPath,
                 const std::string& window, std::size_t chainDepth) {
  const System s = resolveInstance(instance);
  const Polynomial f = loadPolynomial(s, fPath);
  const Polynomial g = loadPolynomial(s, gPath);
  const Domain d = pickDomain(s, f.vars(), window);
  const EquivalenceResult e = bendEquivalent(f, g, d);
  Report r;
  r.kind = "poly-bend";
  r.add("system", s->name).add("equivalent", yesNo(e.equivalent)).add("sampled", yesNo(e.sampled));
  if (e.witness) r.add("witness", formatPoint(s, *e.witness));
  if (chainDepth > 0) {
    ChainSearchOptions opt;
    opt.maxDepth = chainDepth;
    opt.maxDegree = std::max(f.degree(), g.degree());
    const ChainResult c = bendChainSearch(f, g, d, opt);
    r.add("chain", std::string(toString(c.outcome))).add("chain-states", std::to_string(c.statesVisited));
    for (const auto& step : c.path) r.add("chain-step", formatPolynomial(step));
  }
  return {r, e.equivalent ? kComputed : kViolated};
}

Outcome polyIdeal(const std::string& instance, const std::vector<std::string>& paths, const std::string& window) {
  const System s = resolveInstance(instance);
  std::vector<Polynomial> fs;
  for (const auto& p : paths) fs.push_back(loadPolynomial(s, p));
  const Domain d = pickDomain(s, fs.front().vars(), window);
  const IdealResult res = tropicalIdealCheck(fs, d);
  Report r;
  r.kind = "poly-ideal";
  r.add("system", s->name).add("holds", yesNo(res.holds)).add("sampled", yesNo(res.sampled));
  if (res.violation) {
    r.add("first", std::to_string(res.violation->first + 1))
        .add("second", std::to_string(res.violation->second + 1))
        .add("point", formatPoint(s, res.violation->point));
  }
  return {r, res.holds ? kComputed : kViolated};
}

std::string showVal(const std::optional<Rational>& v) { return v ? v->str() : "inf"; }

Outcome tropVal(const std::string& path) {
  std::string text = readFile(path);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
  const PuiseuxSeries p = PuiseuxSeries::parse(text);
  Report r;
  r.kind = "trop-val";
  r.add("series", p.str()).add("denominator", p.denominator().get_str()).add("value", showVal(puiseuxVal(p)));
  return {r, kComputed};
}

Outcome tropPolyCommand(const std::string& path, bool super) {
  const SeriesPolynomial p = parseSeriesPolynomial(readFile(path));
  const Polynomial image = super ? supertropicalizePoly(p) : tropPoly(p);
  Report r;
  r.kind = super ? "trop-strop" : "trop-trop";
  r.add("input", formatSeriesPolynomial(p)).add("polynomial", formatPolynomial(image));
  return {r, kComputed};
}

void addMatroidResult(Report& r, const ValuatedMatroidTable& table, const MatroidCheck& c) {
  r.add("valid", yesNo(c.valid));
  if (c.violation) {
    r.add("violated", c.violation->axiom).add("tuple", joinIndices(c.violation->tuple));
    if (!c.violation->other.empty()) r.add("other", joinIndices(c.violation->other));
  }
  for (const auto& [t, v] : table.values) {
    std::vector<std::size_t> sorted = t;
    std::sort(sorted.begin(), sorted.end());
    if (sorted == t) r.add("value", joinIndices(t) + " = " + v.str());
  }
}

Outcome tropMatroid(const std::string& path, std::size_t rank) {
  const SeriesMatrix a = parseSeriesMatrix(readFile(path));
  const ValuatedMatroidTable table = matroidFromMinors(a, rank);
  const MatroidCheck c = valuatedMatroidCheck(table);
  Report r;
  r.kind = "trop-matroid";
  r.add("rank", std::to_string(rank)).add("ground", std::to_string(table.ground.size()));
  addMatroidResult(r, table, c);
  return {r, c.valid ? kComputed : kViolated};
}

// ---------------------------------------------------------------- randomized suite

PuiseuxSeries randomSeries(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> terms(0, 3), coef(-4, 4), num(-6, 6), den(1, 4);
  PuiseuxSeries p;
  for (int i = terms(rng); i > 0; --i) p = p + PuiseuxSeries::monomial(Rational(coef(rng)), Rational(num(rng), den(rng)));
  return p;
}

Outcome checkSuite(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  Report r;
  r.kind = "check";
  r.add("seed", std::to_string(seed)).add("count", std::to_string(count));
  int status = kComputed;
  auto record = [&](const std::string& name, std::size_t failures, std::size_t total) {
    r.add("suite", name + " " + std::to_string(total - failures) + "/" + std::to_string(total));
    if (failures) status = kViolated;
  };

  std::size_t bad = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const auto p = randomSeries(rng), q = randomSeries(rng);
    const auto vp = puiseuxVal(p), vq = puiseuxVal(q);
    const auto prod = puiseuxVal(p * q);
    if (vp && vq ? prod != *vp + *vq : prod.has_value()) ++bad;
    if (vp && vq && *vp != *vq && puiseuxVal(p + q) != std::min(*vp, *vq)) ++bad;
  }
  record("valuation", bad, count);

  const System st = resolveInstance("supertropical:maxplus");
  const auto window = st->tangibleWindow(-3, 3);
  std::uniform_int_distribution<std::size_t> pick(0, window.size() - 1);
  bad = 0;
  for (std::size_t i = 0; i < count; ++i) {
    Matrix a(st, 3, 3);
    for (std::size_t k = 0; k < 9; ++k) a(k / 3, k % 3) = window[pick(rng)];
    Vector v(st, 3);
    for (std::size_t k = 0; k < 3; ++k) v[k] = window[pick(rng)];
    if (laplaceDet(a, {0}) != detMinus(a) || laplaceDet(a, {0, 2}) != detMinus(a)) ++bad;
    if (!cramerCertify(a, v).holds) ++bad;
  }
  record("laplace-cramer", bad, count);

  bad = 0;
  const std::size_t matrices = std::max<std::size_t>(1, count / 10);
  for (std::size_t i = 0; i < matrices; ++i) {
    SeriesMatrix a(2, std::vector<PuiseuxSeries>(4));
    for (auto& row : a)
      for (auto& x : row) x = randomSeries(rng);
    if (!valuatedMatroidCheck(matroidFromMinors(a, 2)).valid) ++bad;
  }
  record("matroid", bad, matrices);
  return {r, status};
}

}  // namespace

int runCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Computations in triples and systems over semirings, hyperfields and tropical structures."};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "human";
  app.add_option("--format", format, "human or machine")->check(CLI::IsMember({"human", "machine"}));
  app.footer("Instances: " + instanceNameHelp() +
             "\nSYSTEMA_BUDGET overrides search limits (search=N,det=N,height=N,characteristic=N)."
             "\nExit status: 0 computed, 1 property violated (counterexample in the report), 2 usage or parse error.");

  std::function<Outcome()> action;
  std::string instance, fileA, fileB, rows, window, at;
  std::vector<std::string> files;
  std::size_t nRows = 0, nCols = 0, rank = 0, chainDepth = 0, count = 200;
  std::uint64_t seed = kDefaultSeed;

  auto* classifyCmd = app.add_subcommand("classify", "audit the axioms and structure of an instance");
  classifyCmd->add_option("instance", instance)->required();
  classifyCmd->callback([&] { action = [&] { return runClassify(instance); }; });

  auto matrixCommand = [&](const char* name, const char* help, std::function<Outcome()> run) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("instance", instance)->required();
    cmd->add_option("matrix", fileA, "matrix file")->required();
    cmd->callback([&action, run] { action = run; });
    return cmd;
  };
  matrixCommand("det", "(-)-determinant", [&] { return runDet(instance, fileA); });
  matrixCommand("adj", "(-)-adjoint", [&] { return runAdj(instance, fileA); });
  matrixCommand("laplace", "Laplace expansion along a row set", [&] { return runLaplace(instance, fileA, rows); })
      ->add_option("--rows", rows, "1-based rows, e.g. 1,2")
      ->required();
  auto* solveCmd = matrixCommand("solve", "Cramer certificate and tangible solutions",
                                 [&] { return runSolve(instance, fileA, fileB, window); });
  solveCmd->add_option("vector", fileB, "vector file (n x 1 or 1 x n)")->required();
  solveCmd->add_option("--window", window, "tangible candidates lo,hi for infinite systems");
  matrixCommand("rank", "row, column and submatrix ranks", [&] { return runRank(instance, fileA, window); })
      ->add_option("--window", window, "tangible candidates lo,hi for infinite systems");
  matrixCommand("cayley", "supertropical Cayley-Hamilton ghostness", [&] { return runCayley(instance, fileA); });

  auto* witnessCmd = app.add_subcommand("witness-search", "search for a matrix whose row rank exceeds its submatrix rank");
  witnessCmd->add_option("instance", instance)->required();
  witnessCmd->add_option("rows", nRows)->required();
  witnessCmd->add_option("cols", nCols)->required();
  witnessCmd->callback([&] { action = [&] { return runWitnessSearch(instance, nRows, nCols); }; });

  auto* poly = app.add_subcommand("poly", "polynomials as functions");
  poly->require_subcommand(1);
  auto polyCommand = [&](const char* name, const char* help) {
    auto* cmd = poly->add_subcommand(name, help);
    cmd->add_option("instance", instance)->required();
    cmd->add_option("--window", window, "evaluate over tangibles with payload in lo,hi");
    return cmd;
  };
  auto* evalCmd = polyCommand("eval", "evaluate at a point");
  evalCmd->add_option("poly", fileA)->required();
  evalCmd->add_option("--at", at, "comma separated point")->required();
  evalCmd->callback([&] { action = [&] { return polyEval(instance, fileA, at); }; });
  auto* suppCmd = polyCommand("supp", "points where the value is tangible");
  suppCmd->add_option("poly", fileA)->required();
  suppCmd->callback([&] { action = [&] { return polyPoints("poly-supp", instance, fileA, window); }; });
  auto* rootsCmd = polyCommand("roots", "points where the value surpasses zero");
  rootsCmd->add_option("poly", fileA)->required();
  rootsCmd->callback([&] { action = [&] { return polyPoints("poly-roots", instance, fileA, window); }; });
  auto* bendCmd = polyCommand("bend", "bend / circ equivalence of two polynomials");
  bendCmd->add_option("f", fileA)->required();
  bendCmd->add_option("g", fileB)->required();
  bendCmd->add_option("--chain", chainDepth, "also run the bend chain search to this depth");
  bendCmd->callback([&] { action = [&] { return polyBend(instance, fileA, fileB, window, chainDepth); }; });
  auto* idealCmd = polyCommand("ideal", "systemic tropical ideal condition");
  idealCmd->add_option("polys", files)->required();
  idealCmd->callback([&] { action = [&] { return polyIdeal(instance, files, window); }; });

  auto* trop = app.add_subcommand("trop", "Puiseux series and tropicalization");
  trop->require_subcommand(1);
  auto* valCmd = trop->add_subcommand("val", "valuation of a series");
  valCmd->add_option("series", fileA)->required();
  valCmd->callback([&] { action = [&] { return tropVal(fileA); }; });
  auto* tropCmd = trop->add_subcommand("trop", "tropicalize into minplus");
  tropCmd->add_option("poly", fileA)->required();
  tropCmd->callback([&] { action = [&] { return tropPolyCommand(fileA, false); }; });
  auto* stropCmd = trop->add_subcommand("strop", "tropicalize into supertropical:minplus");
  stropCmd->add_option("poly", fileA)->required();
  stropCmd->callback([&] { action = [&] { return tropPolyCommand(fileA, true); }; });
  auto* matroidCmd = trop->add_subcommand("matroid", "valuated matroid of the maximal minors");
  matroidCmd->add_option("matrix", fileA)->required();
  matroidCmd->add_option("--rank", rank)->required();
  matroidCmd->callback([&] { action = [&] { return tropMatroid(fileA, rank); }; });

  auto* check = app.add_subcommand("check", "seeded randomized self-check");
  check->add_option("--seed", seed, "random seed")->capture_default_str();
  check->add_option("--count", count, "cases per suite")->capture_default_str();
  check->callback([&] { action = [&] { return checkSuite(seed, count); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kComputed : kUsage;
  }

  try {
    const Outcome o = action();
    out << (format == "machine" ? o.report.str() : renderHuman(o.report));
    return o.status;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kUsage;
}

}  // namespace systema
