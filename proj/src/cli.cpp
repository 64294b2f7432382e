#include "qsd/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <variant>

#include "CLI11.hpp"
#include "json.hpp"
#include "qsd/designs.hpp"

namespace qsd::cli {

namespace {

using nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { Json, Csv, Table };

Format resolve_format(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "table") return Format::Table;
  throw UsageError("unknown output format '" + name + "' (expected json, csv, or table)");
}

Int parse_int_arg(const std::string& flag, const std::string& text) {
  if (text.empty()) throw UsageError(flag + ": empty integer");
  size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) throw UsageError(flag + ": invalid integer '" + text + "'");
  for (; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw UsageError(flag + ": invalid integer '" + text + "'");
    }
  }
  return Int(text);
}

Rat parse_rat_arg(const std::string& flag, const std::string& text) {
  try {
    return parse_rat(text);
  } catch (const Error& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void emit_csv_row(std::ostream& out, const std::vector<std::string>& row) {
  for (size_t i = 0; i < row.size(); ++i) {
    if (i) out << ',';
    out << csv_field(row[i]);
  }
  out << '\n';
}

void emit_aligned(std::ostream& out, const std::vector<std::string>& header,
                  const std::vector<std::vector<std::string>>& rows) {
  std::vector<size_t> width(header.size());
  for (size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size() && i < width.size(); ++i) {
      width[i] = std::max(width[i], row[i].size());
    }
  }
  const auto line = [&](const std::vector<std::string>& row) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out << "  ";
      out << row[i];
      if (i + 1 < row.size()) out << std::string(width[i] - row[i].size(), ' ');
    }
    out << '\n';
  };
  line(header);
  for (const auto& row : rows) line(row);
}

ordered_json params_json(const DesignParams& d) {
  ordered_json j;
  j["b"] = to_string(d.b);
  j["v"] = to_string(d.v);
  j["r"] = to_string(d.r);
  j["k"] = to_string(d.k);
  j["lambda"] = to_string(d.lambda);
  j["lambda1"] = to_string(d.lambda1);
  j["lambda2"] = to_string(d.lambda2);
  j["mu"] = to_string(d.mu());
  j["nu"] = to_string(d.order());
  return j;
}

ordered_json conditions_json(const std::vector<ConditionResult>& conditions) {
  ordered_json arr = ordered_json::array();
  for (const auto& c : conditions) {
    ordered_json j;
    j["label"] = c.label;
    j["passed"] = c.passed;
    j["witness"] = c.witness;
    arr.push_back(std::move(j));
  }
  return arr;
}

// Shared report rendering for check, derive, and symmetric.
void emit_report(std::ostream& out, Format fmt, const ordered_json& query,
                 const std::string& verdict, const std::vector<ConditionResult>& conditions,
                 const std::optional<std::pair<DesignParams, DesignParams>>& params) {
  switch (fmt) {
    case Format::Json: {
      ordered_json j;
      j["query"] = query;
      j["verdict"] = verdict;
      j["conditions"] = conditions_json(conditions);
      if (params) {
        j["parameters"] = ordered_json::array({params_json(params->first),
                                               params_json(params->second)});
      } else {
        j["parameters"] = nullptr;
      }
      out << j.dump(2) << '\n';
      break;
    }
    case Format::Csv: {
      emit_csv_row(out, {"label", "passed", "witness"});
      for (const auto& c : conditions) {
        emit_csv_row(out, {c.label, c.passed ? "true" : "false", c.witness});
      }
      emit_csv_row(out, {"_verdict", verdict, ""});
      if (params) {
        emit_csv_row(out, {"_params_canonical", "", to_string(params->first)});
        emit_csv_row(out, {"_params_complement", "", to_string(params->second)});
      }
      break;
    }
    case Format::Table: {
      out << "verdict: " << verdict << '\n';
      std::vector<std::vector<std::string>> rows;
      for (const auto& c : conditions) {
        rows.push_back({c.label, c.passed ? "pass" : "FAIL", c.witness});
      }
      emit_aligned(out, {"condition", "result", "witness"}, rows);
      if (params) {
        out << "canonical:  " << to_string(params->first) << '\n';
        out << "complement: " << to_string(params->second) << '\n';
      }
      break;
    }
  }
}

// ---------------------------------------------------------------------------
// check / derive

struct CheckArgs {
  std::string family, rho, sigma, f, g, m, n, d, q, mu;
};

struct ResolvedCheck {
  std::optional<SpectralParams> sp;  // raw-spectrum form
  std::optional<GraphFamily> fam;    // family form
  Int mu;
  ordered_json query;
};

ResolvedCheck resolve_check(const std::string& command, const CheckArgs& a) {
  ResolvedCheck rc;
  rc.query["command"] = command;
  const bool raw_given = !a.rho.empty() || !a.sigma.empty() || !a.f.empty() || !a.g.empty();
  if (a.family.empty() && !raw_given) {
    throw UsageError("give either --family or the raw spectrum --rho --sigma --f --g");
  }
  if (!a.family.empty() && raw_given) {
    throw UsageError("--family and raw spectrum flags are mutually exclusive");
  }
  if (a.family.empty()) {
    if (a.rho.empty() || a.sigma.empty() || a.f.empty() || a.g.empty()) {
      throw UsageError("raw spectrum needs all of --rho --sigma --f --g");
    }
    rc.sp.emplace(parse_int_arg("--rho", a.rho), parse_int_arg("--sigma", a.sigma),
                  parse_int_arg("--f", a.f), parse_int_arg("--g", a.g));
    rc.query["rho"] = a.rho;
    rc.query["sigma"] = a.sigma;
    rc.query["f"] = a.f;
    rc.query["g"] = a.g;
  } else {
    const auto need = [&](const char* flag, const std::string& value) {
      if (value.empty()) {
        throw UsageError("family '" + a.family + "' needs " + flag);
      }
      return value;
    };
    if (a.family == "multipartite") {
      rc.fam = Multipartite{parse_int_arg("--m", need("--m", a.m)),
                            parse_int_arg("--n", need("--n", a.n))};
    } else if (a.family == "cotriangular") {
      rc.fam = CoTriangular{parse_int_arg("--n", need("--n", a.n))};
    } else if (a.family == "symplectic") {
      rc.fam = Symplectic{parse_int_arg("--d", need("--d", a.d)),
                          a.q.empty() ? Int(2) : parse_int_arg("--q", a.q)};
    } else if (a.family == "steiner") {
      rc.fam = Steiner{parse_int_arg("--n", need("--n", a.n)),
                       parse_int_arg("--m", need("--m", a.m))};
    } else if (a.family == "triangular") {
      rc.fam = Triangular{parse_int_arg("--m", need("--m", a.m))};
    } else if (a.family == "conference") {
      rc.fam = Conference{parse_int_arg("--q", need("--q", a.q))};
    } else {
      throw UsageError("unknown family '" + a.family +
                       "' (expected multipartite, cotriangular, symplectic, steiner, "
                       "triangular, or conference)");
    }
    rc.query["family"] = family_name(*rc.fam);
  }
  rc.mu = parse_int_arg("--mu", a.mu);
  rc.query["mu"] = a.mu;
  return rc;
}

struct CheckOutcome {
  FeasibilityReport rep;
  std::string verdict;
  std::string note;  // stderr diagnostic, empty if none
};

bool triangular_block_graph(const GraphFamily& fam) {
  if (std::holds_alternative<Triangular>(fam)) return true;
  if (const auto* s = std::get_if<Steiner>(&fam)) return s->n == 2;
  return false;
}

CheckOutcome run_check_logic(const ResolvedCheck& rc, bool with_padic) {
  CheckOutcome oc;
  std::optional<SpectralParams> sp;
  if (rc.sp) {
    sp = *rc.sp;
  } else {
    try {
      sp = family_spectral(*rc.fam);
    } catch (const ConferenceError& e) {
      oc.rep.feasible = false;
      oc.rep.conditions.push_back({"2.3(a)", false, e.what()});
      oc.verdict = "infeasible";
      return oc;
    }
  }
  oc.rep = feasibility(*sp, rc.mu);
  if (!oc.rep.feasible) {
    oc.verdict = "infeasible";
    return oc;
  }
  oc.verdict = "feasible";
  if (!with_padic || !rc.fam) return oc;

  if (triangular_block_graph(*rc.fam) && rc.mu >= 2) {
    oc.rep.conditions.push_back(
        {"Cor 2.9", false,
         "no quasi-symmetric design with a triangular block graph has mu >= 2"});
    oc.rep.feasible = false;
    oc.verdict = "rejected";
    return oc;
  }
  try {
    const GraphInvariants inv = family_invariants(*rc.fam);
    oc.rep.merge(main_test(*sp, inv, rc.mu));
    oc.verdict = oc.rep.feasible ? "feasible" : "rejected";
  } catch (const NoClosedFormError& e) {
    oc.note = std::string("p-adic test skipped: ") + e.what();
  }
  return oc;
}

int handle_check(const CheckArgs& args, bool with_padic, Format fmt, std::ostream& out,
                 std::ostream& err) {
  const ResolvedCheck rc = resolve_check(with_padic ? "check" : "derive", args);
  const CheckOutcome oc = run_check_logic(rc, with_padic);
  if (!oc.note.empty()) err << "note: " << oc.note << '\n';
  emit_report(out, fmt, rc.query, oc.verdict, oc.rep.conditions, oc.rep.params);
  return oc.verdict == "feasible" ? 0 : 1;
}

// ---------------------------------------------------------------------------
// symmetric

int handle_symmetric(const std::string& v_s, const std::string& k_s, const std::string& l_s,
                     const std::string& nu_s, Format fmt, std::ostream& out) {
  if (v_s.empty() || l_s.empty()) throw UsageError("symmetric needs --v and --lambda");
  const Int v = parse_int_arg("--v", v_s);
  const Int lambda = parse_int_arg("--lambda", l_s);
  Int nu;
  ordered_json query;
  query["command"] = "symmetric";
  query["v"] = v_s;
  if (!k_s.empty()) {
    if (!nu_s.empty()) throw UsageError("give either --k or --nu, not both");
    const Int k = parse_int_arg("--k", k_s);
    if (k * (k - 1) != lambda * (v - 1)) {
      throw UsageError("inconsistent symmetric design: k(k-1) = " + to_string(Int(k * (k - 1))) +
                       " but lambda(v-1) = " + to_string(Int(lambda * (v - 1))));
    }
    nu = k - lambda;
    query["k"] = k_s;
  } else if (!nu_s.empty()) {
    nu = parse_int_arg("--nu", nu_s);
  } else {
    throw UsageError("symmetric needs --k or --nu");
  }
  query["lambda"] = l_s;
  query["nu"] = to_string(nu);

  const bool even = mpz_even_p(v.get_mpz_t()) != 0;
  const SymmetricResult res = even ? schutzenberger(v, nu) : chowla_ryser(v, lambda, nu);
  const std::string label = even ? "1.1" : "1.2";
  const bool passed = res.verdict == TriState::Pass;
  const std::string verdict = passed ? "pass" : "reject";
  emit_report(out, fmt, query, verdict, {{label, passed, res.witness}}, std::nullopt);
  return passed ? 0 : 1;
}

// ---------------------------------------------------------------------------
// table1

int handle_table1(const std::string& max_n, const std::string& max_mu, const std::string& max_v,
                  Format fmt, std::ostream& out) {
  const Int n_max = parse_int_arg("--max-n", max_n);
  const Int mu_max = parse_int_arg("--max-mu", max_mu);
  const Int v_cap = parse_int_arg("--max-v", max_v);
  const std::vector<TableRow> rows = feasible_table(n_max, mu_max, v_cap);
  switch (fmt) {
    case Format::Json: {
      ordered_json j;
      j["query"] = {{"command", "table1"}, {"max_n", max_n}, {"max_mu", max_mu},
                    {"max_v", max_v}};
      ordered_json arr = ordered_json::array();
      for (const TableRow& r : rows) {
        ordered_json row;
        row["number"] = r.number;
        row["n"] = to_string(r.n);
        row["m"] = to_string(r.m);
        row["mu"] = to_string(r.mu);
        row["parameters"] = params_json(r.params);
        row["verdict"] = r.rejected ? "no" : "open";
        row["reject_label"] = r.rejected ? ordered_json(r.reject_label) : ordered_json(nullptr);
        arr.push_back(std::move(row));
      }
      j["rows"] = std::move(arr);
      out << j.dump(2) << '\n';
      break;
    }
    case Format::Csv: {
      emit_csv_row(out, {"number", "n", "m", "v", "k", "lambda", "lambda1", "lambda2",
                         "verdict"});
      for (const TableRow& r : rows) {
        emit_csv_row(out, {std::to_string(r.number), to_string(r.n), to_string(r.m),
                           to_string(r.params.v), to_string(r.params.k),
                           to_string(r.params.lambda), to_string(r.params.lambda1),
                           to_string(r.params.lambda2), r.rejected ? "no" : "open"});
      }
      break;
    }
    case Format::Table: {
      std::vector<std::vector<std::string>> trows;
      for (const TableRow& r : rows) {
        trows.push_back({std::to_string(r.number), to_string(r.n), to_string(r.m),
                         to_string(r.mu), to_string(r.params.v), to_string(r.params.k),
                         to_string(r.params.lambda), to_string(r.params.lambda1),
                         to_string(r.params.lambda2), r.rejected ? "no" : "open",
                         r.reject_label});
      }
      emit_aligned(out, {"number", "n", "m", "mu", "v", "k", "lambda", "lambda1", "lambda2",
                         "verdict", "condition"},
                   trows);
      break;
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// sieve

int handle_sieve(const std::string& family, const std::map<std::string, std::string>& args,
                 Format fmt, std::ostream& out, std::ostream& err) {
  const auto arg = [&](const char* name) { return args.at(name); };
  ordered_json query;
  query["command"] = "sieve";
  query["family"] = family;

  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  ordered_json entries = ordered_json::array();

  if (family == "multipartite") {
    const Int amax = parse_int_arg("--alpha-max", arg("alpha-max"));
    const Int smax = parse_int_arg("--sum-max", arg("sum-max"));
    const Int tmax = parse_int_arg("--t-max", arg("t-max"));
    query["alpha_max"] = arg("alpha-max");
    query["sum_max"] = arg("sum-max");
    query["t_max"] = arg("t-max");
    header = {"alpha", "l", "lstar", "t", "n", "m", "mu", "b", "v", "r", "k", "lambda",
              "lambda1", "lambda2", "conjectural"};
    for (const MultipartiteEntry& e : enum_multipartite(amax, smax, tmax)) {
      const DesignParams& d = e.params.first;
      rows.push_back({to_string(e.quad.alpha), to_string(e.quad.l), to_string(e.quad.lstar),
                      to_string(e.quad.t), to_string(e.n), to_string(e.m), to_string(e.mu),
                      to_string(d.b), to_string(d.v), to_string(d.r), to_string(d.k),
                      to_string(d.lambda), to_string(d.lambda1), to_string(d.lambda2),
                      e.conjectural_flag ? "true" : "false"});
      ordered_json je;
      je["quadruple"] = {{"alpha", to_string(e.quad.alpha)}, {"l", to_string(e.quad.l)},
                         {"lstar", to_string(e.quad.lstar)}, {"t", to_string(e.quad.t)}};
      je["n"] = to_string(e.n);
      je["m"] = to_string(e.m);
      je["mu"] = to_string(e.mu);
      je["parameters"] =
          ordered_json::array({params_json(e.params.first), params_json(e.params.second)});
      je["conjectural"] = e.conjectural_flag;
      entries.push_back(std::move(je));
    }
  } else if (family == "cotriangular") {
    const Int mu = parse_int_arg("--mu", arg("mu"));
    const Int bound = parse_int_arg("--bound", arg("bound"));
    query["mu"] = arg("mu");
    query["bound"] = arg("bound");
    header = {"l", "lstar", "n", "mu", "b", "v", "r", "k", "lambda", "lambda1", "lambda2"};
    for (const CoTriangularEntry& e : enum_cotriangular(mu, bound)) {
      const DesignParams& d = e.params;
      rows.push_back({to_string(e.l), to_string(e.lstar), to_string(e.n), to_string(mu),
                      to_string(d.b), to_string(d.v), to_string(d.r), to_string(d.k),
                      to_string(d.lambda), to_string(d.lambda1), to_string(d.lambda2)});
      ordered_json je;
      je["l"] = to_string(e.l);
      je["lstar"] = to_string(e.lstar);
      je["n"] = to_string(e.n);
      je["mu"] = to_string(mu);
      je["parameters"] = params_json(d);
      entries.push_back(std::move(je));
    }
  } else if (family == "steiner") {
    const Int n = parse_int_arg("--n", arg("n"));
    const Int mu = parse_int_arg("--mu", arg("mu"));
    const Int mmax = parse_int_arg("--max-m", arg("max-m"));
    query["n"] = arg("n");
    query["mu"] = arg("mu");
    query["max_m"] = arg("max-m");
    if (n == 2 && mu >= 2) {
      err << "note: no quasi-symmetric design with a triangular block graph has mu >= 2 "
             "(Cor 2.9); the enumeration is empty\n";
    }
    header = {"n", "m", "mu", "b", "v", "r", "k", "lambda", "lambda1", "lambda2"};
    for (const SteinerEntry& e : enum_steiner(n, mu, mmax)) {
      const DesignParams& d = e.params.first;
      rows.push_back({to_string(n), to_string(e.m), to_string(mu), to_string(d.b),
                      to_string(d.v), to_string(d.r), to_string(d.k), to_string(d.lambda),
                      to_string(d.lambda1), to_string(d.lambda2)});
      ordered_json je;
      je["n"] = to_string(n);
      je["m"] = to_string(e.m);
      je["mu"] = to_string(mu);
      je["parameters"] =
          ordered_json::array({params_json(e.params.first), params_json(e.params.second)});
      entries.push_back(std::move(je));
    }
  } else if (family == "symplectic") {
    const Int qmax = parse_int_arg("--max-q", arg("max-q"));
    const Int dmax = parse_int_arg("--max-d", arg("max-d"));
    query["max_q"] = arg("max-q");
    query["max_d"] = arg("max-d");
    header = {"q", "d", "mu", "congruence", "square", "feasible"};
    for (Int q = 3; q <= qmax; ++q) {
      if (factorize(q).primes.size() != 1) continue;
      for (Int d = 2; d <= dmax; ++d) {
        const SymplecticCheck chk = check_symplectic(q, d);
        rows.push_back({to_string(q), to_string(d), to_string(chk.mu),
                        chk.congruence_ok ? "pass" : "fail",
                        chk.square_ok ? "pass" : "fail",
                        chk.feasible() ? "true" : "false"});
        ordered_json je;
        je["q"] = to_string(q);
        je["d"] = to_string(d);
        je["mu"] = to_string(chk.mu);
        je["conditions"] = conditions_json(chk.conditions);
        je["feasible"] = chk.feasible();
        entries.push_back(std::move(je));
      }
    }
  } else {
    throw UsageError("unknown sieve family '" + family +
                     "' (expected multipartite, cotriangular, steiner, or symplectic)");
  }

  switch (fmt) {
    case Format::Json: {
      ordered_json j;
      j["query"] = std::move(query);
      j["entries"] = std::move(entries);
      out << j.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      emit_csv_row(out, header);
      for (const auto& row : rows) emit_csv_row(out, row);
      break;
    case Format::Table:
      emit_aligned(out, header, rows);
      break;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// graph

int handle_graph(const std::string& path, const std::string& format_flag, Format fmt,
                 std::ostream& out) {
  if (path.empty()) throw UsageError("graph needs a file path");
  std::string gfmt = format_flag;
  if (gfmt.empty()) {
    gfmt = path.size() >= 3 && path.compare(path.size() - 3, 3, ".g6") == 0 ? "graph6"
                                                                            : "matrix";
  }
  ordered_json query;
  query["command"] = "graph";
  query["path"] = path;
  query["format"] = gfmt;

  const AdjacencyMatrix a = read_graph(path, gfmt);
  std::optional<SpectralParams> sp;
  std::string verdict, reason;
  try {
    sp = srg_recognize(a);
  } catch (const ConferenceError& e) {
    // Strongly regular, but with the non-integral spectrum the invariants
    // are not defined for.
    verdict = "conference";
    reason = e.what();
  } catch (const SrgError& e) {
    verdict = "not strongly regular";
    reason = e.what();
  }
  if (!sp) {
    switch (fmt) {
      case Format::Json: {
        ordered_json j;
        j["query"] = std::move(query);
        j["verdict"] = verdict;
        j["reason"] = reason;
        out << j.dump(2) << '\n';
        break;
      }
      case Format::Csv:
        emit_csv_row(out, {"label", "passed", "witness"});
        emit_csv_row(out, {"srg", "false", reason});
        emit_csv_row(out, {"_verdict", verdict, ""});
        break;
      case Format::Table:
        out << verdict << ": " << reason << '\n';
        break;
    }
    return 1;
  }

  const GraphInvariants inv = graph_invariants_direct(a);
  switch (fmt) {
    case Format::Json: {
      ordered_json j;
      j["query"] = std::move(query);
      j["verdict"] = "strongly regular";
      j["vertices"] = to_string(sp->vertices());
      j["degree"] = to_string(sp->degree());
      j["spectrum"] = {{"rho", to_string(sp->rho)}, {"sigma", to_string(sp->sigma)},
                       {"f", to_string(sp->f)}, {"g", to_string(sp->g)}};
      j["delta"] = to_string(inv.delta.rep());
      ordered_json eps = ordered_json::array();
      for (const auto& [p, s] : inv.hasse) {
        eps.push_back({{"p", to_string(p)}, {"value", s}});
      }
      j["eps"] = std::move(eps);
      out << j.dump(2) << '\n';
      break;
    }
    case Format::Csv: {
      emit_csv_row(out, {"field", "value"});
      emit_csv_row(out, {"vertices", to_string(sp->vertices())});
      emit_csv_row(out, {"degree", to_string(sp->degree())});
      emit_csv_row(out, {"rho", to_string(sp->rho)});
      emit_csv_row(out, {"sigma", to_string(sp->sigma)});
      emit_csv_row(out, {"f", to_string(sp->f)});
      emit_csv_row(out, {"g", to_string(sp->g)});
      emit_csv_row(out, {"delta", to_string(inv.delta.rep())});
      for (const auto& [p, s] : inv.hasse) {
        emit_csv_row(out, {"eps_" + to_string(p), s > 0 ? "1" : "-1"});
      }
      break;
    }
    case Format::Table: {
      out << "strongly regular: " << to_string(sp->vertices()) << " vertices, degree "
          << to_string(sp->degree()) << ", spectrum rho=" << to_string(sp->rho)
          << " sigma=" << to_string(sp->sigma) << " f=" << to_string(sp->f)
          << " g=" << to_string(sp->g) << '\n';
      out << "delta: " << to_string(inv.delta.rep()) << '\n';
      out << "eps:";
      for (const auto& [p, s] : inv.hasse) {
        out << " p=" << to_string(p) << ":" << (s > 0 ? "+1" : "-1");
      }
      out << " (+1 at all other primes)\n";
      break;
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// hilbert

int handle_hilbert(const std::string& a_s, const std::string& b_s, const std::string& p_s,
                   Format fmt, std::ostream& out) {
  if (a_s.empty() || b_s.empty()) throw UsageError("hilbert needs --a and --b");
  const Rat a = parse_rat_arg("--a", a_s);
  const Rat b = parse_rat_arg("--b", b_s);
  if (a == 0 || b == 0) throw UsageError("hilbert: arguments must be nonzero");
  ordered_json query;
  query["command"] = "hilbert";
  query["a"] = a_s;
  query["b"] = b_s;

  if (!p_s.empty()) {
    const Int p = parse_int_arg("--p", p_s);
    const int v = hilbert_symbol(a, b, p);
    query["p"] = p_s;
    switch (fmt) {
      case Format::Json: {
        ordered_json j;
        j["query"] = std::move(query);
        j["value"] = v;
        out << j.dump(2) << '\n';
        break;
      }
      case Format::Csv:
        emit_csv_row(out, {"p", "value"});
        emit_csv_row(out, {to_string(p), v > 0 ? "1" : "-1"});
        break;
      case Format::Table:
        out << "(" << to_string(a) << ", " << to_string(b) << ")_" << to_string(p) << " = "
            << (v > 0 ? "+1" : "-1") << '\n';
        break;
    }
    return 0;
  }

  const std::vector<Int> primes = relevant_primes({a, b});
  const int real = real_symbol(a, b);
  int product = real;
  std::vector<std::pair<Int, int>> values;
  for (const Int& p : primes) {
    const int v = hilbert_symbol(a, b, p);
    values.emplace_back(p, v);
    product *= v;
  }
  switch (fmt) {
    case Format::Json: {
      ordered_json j;
      j["query"] = std::move(query);
      ordered_json arr = ordered_json::array();
      for (const auto& [p, v] : values) arr.push_back({{"p", to_string(p)}, {"value", v}});
      j["symbols"] = std::move(arr);
      j["real"] = real;
      j["product"] = product;
      out << j.dump(2) << '\n';
      break;
    }
    case Format::Csv: {
      emit_csv_row(out, {"p", "value"});
      for (const auto& [p, v] : values) {
        emit_csv_row(out, {to_string(p), v > 0 ? "1" : "-1"});
      }
      emit_csv_row(out, {"real", real > 0 ? "1" : "-1"});
      emit_csv_row(out, {"product", product > 0 ? "1" : "-1"});
      break;
    }
    case Format::Table: {
      std::vector<std::vector<std::string>> rows;
      for (const auto& [p, v] : values) {
        rows.push_back({to_string(p), v > 0 ? "+1" : "-1"});
      }
      rows.push_back({"real", real > 0 ? "+1" : "-1"});
      emit_aligned(out, {"place", "symbol"}, rows);
      out << "product over all places: " << (product > 0 ? "+1" : "-1") << '\n';
      break;
    }
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact feasibility and p-adic nonexistence tests for quasi-symmetric "
               "2-designs and their strongly regular block graphs"};
  app.name("qsd");
  app.require_subcommand(1);

  std::string format_name = "table";
  if (const char* env = std::getenv("QSD_FORMAT")) format_name = env;
  app.add_option("--format", format_name, "output format: json, csv, or table")
      ->capture_default_str();

  CheckArgs check_args, derive_args;
  const auto add_check_options = [](CLI::App* sub, CheckArgs& a) {
    sub->add_option("--family", a.family,
                    "graph family: multipartite, cotriangular, symplectic, steiner, "
                    "triangular, conference");
    sub->add_option("--rho", a.rho, "positive eigenvalue of the block graph");
    sub->add_option("--sigma", a.sigma, "negative eigenvalue of the block graph");
    sub->add_option("--f", a.f, "multiplicity of rho");
    sub->add_option("--g", a.g, "multiplicity of sigma");
    sub->add_option("--m", a.m, "family parameter m");
    sub->add_option("--n", a.n, "family parameter n");
    sub->add_option("--d", a.d, "symplectic dimension parameter d");
    sub->add_option("--q", a.q, "field-order parameter q");
    sub->add_option("--mu", a.mu, "intersection-number difference lambda2 - lambda1")
        ->required();
  };
  CLI::App* check_sub = app.add_subcommand(
      "check", "decide feasibility of (block graph, mu), with the p-adic test for "
               "families with closed-form invariants");
  add_check_options(check_sub, check_args);
  CLI::App* derive_sub = app.add_subcommand(
      "derive", "derive the complementary pair of design parameter sets from the block "
                "graph spectrum and mu");
  add_check_options(derive_sub, derive_args);

  std::string sieve_family;
  std::map<std::string, std::string> sieve_args{
      {"alpha-max", "6"}, {"sum-max", "24"}, {"t-max", "6"}, {"mu", ""}, {"bound", "20"},
      {"n", ""},          {"max-m", "500"},  {"max-q", "29"}, {"max-d", "6"}};
  CLI::App* sieve_sub =
      app.add_subcommand("sieve", "enumerate feasible parameter sets for one family");
  sieve_sub->add_option("--family", sieve_family,
                        "multipartite, cotriangular, steiner, or symplectic")
      ->required();
  sieve_sub->add_option("--alpha-max", sieve_args["alpha-max"],
                        "multipartite: largest alpha");
  sieve_sub->add_option("--sum-max", sieve_args["sum-max"],
                        "multipartite: largest l + lstar");
  sieve_sub->add_option("--t-max", sieve_args["t-max"], "multipartite: largest t");
  sieve_sub->add_option("--mu", sieve_args["mu"], "cotriangular/steiner: the defect mu");
  sieve_sub->add_option("--bound", sieve_args["bound"],
                        "cotriangular with mu = 1: largest l + lstar");
  sieve_sub->add_option("--n", sieve_args["n"], "steiner: block size n");
  sieve_sub->add_option("--max-m", sieve_args["max-m"], "steiner: largest replication m");
  sieve_sub->add_option("--max-q", sieve_args["max-q"], "symplectic: largest prime power q");
  sieve_sub->add_option("--max-d", sieve_args["max-d"], "symplectic: largest dimension d");

  std::string t1_max_n = "6", t1_max_mu = "4", t1_max_v = "500";
  CLI::App* table1_sub = app.add_subcommand(
      "table1", "the table of small feasible Steiner-block-graph parameter sets with "
                "mu >= 2 and the p-adic verdict per row");
  table1_sub->add_option("--max-n", t1_max_n, "largest block size n")->capture_default_str();
  table1_sub->add_option("--max-mu", t1_max_mu, "largest defect mu")->capture_default_str();
  table1_sub->add_option("--max-v", t1_max_v, "largest point count v")->capture_default_str();

  std::string sym_v, sym_k, sym_lambda, sym_nu;
  CLI::App* symmetric_sub = app.add_subcommand(
      "symmetric", "classical nonexistence tests for symmetric 2-designs, dispatched on "
                   "the parity of v");
  symmetric_sub->add_option("--v", sym_v, "number of points");
  symmetric_sub->add_option("--k", sym_k, "block size");
  symmetric_sub->add_option("--lambda", sym_lambda, "pair count lambda");
  symmetric_sub->add_option("--nu", sym_nu, "order k - lambda (alternative to --k)");

  std::string graph_path, graph_format;
  CLI::App* graph_sub = app.add_subcommand(
      "graph", "recognize a strongly regular graph file and compute its invariants");
  graph_sub->add_option("file", graph_path, "path to the graph file");
  graph_sub->add_option("--input-format", graph_format,
                        "matrix or graph6 (default: by file extension, .g6 = graph6)");

  std::string h_a, h_b, h_p;
  CLI::App* hilbert_sub = app.add_subcommand(
      "hilbert", "Hilbert symbols of a rational pair, at one prime or over every "
                 "relevant place");
  hilbert_sub->add_option("--a", h_a, "first argument, an integer or fraction");
  hilbert_sub->add_option("--b", h_b, "second argument, an integer or fraction");
  hilbert_sub->add_option("--p", h_p, "prime (omit to list all relevant places)");

  // Let --format appear either before or after the subcommand name.
  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    const Format fmt = resolve_format(format_name);
    if (*check_sub) return handle_check(check_args, true, fmt, out, err);
    if (*derive_sub) return handle_check(derive_args, false, fmt, out, err);
    if (*sieve_sub) return handle_sieve(sieve_family, sieve_args, fmt, out, err);
    if (*table1_sub) return handle_table1(t1_max_n, t1_max_mu, t1_max_v, fmt, out);
    if (*symmetric_sub) return handle_symmetric(sym_v, sym_k, sym_lambda, sym_nu, fmt, out);
    if (*graph_sub) return handle_graph(graph_path, graph_format, fmt, out);
    if (*hilbert_sub) return handle_hilbert(h_a, h_b, h_p, fmt, out);
    err << "no command given\n";
    return 2;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const SrgError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace qsd::cli
