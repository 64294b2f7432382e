#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <vector>

#include "qsd/cli.hpp"
#include "qsd/designs.hpp"

namespace py = pybind11;

namespace {

qsd::Int to_int(py::handle h) { return qsd::Int(py::str(h).cast<std::string>()); }

qsd::Rat to_rat(py::handle h) { return qsd::parse_rat(py::str(h).cast<std::string>()); }

// Arbitrary-precision values cross the boundary as Python ints.
py::object big(const qsd::Int& x) {
  return py::module_::import("builtins").attr("int")(qsd::to_string(x));
}

py::dict params_dict(const qsd::DesignParams& d) {
  py::dict out;
  out["b"] = big(d.b);
  out["v"] = big(d.v);
  out["r"] = big(d.r);
  out["k"] = big(d.k);
  out["lambda"] = big(d.lambda);
  out["lambda1"] = big(d.lambda1);
  out["lambda2"] = big(d.lambda2);
  out["mu"] = big(d.mu());
  out["nu"] = big(d.order());
  return out;
}

py::dict report_dict(const qsd::FeasibilityReport& rep) {
  py::dict out;
  out["feasible"] = rep.feasible;
  py::list conds;
  for (const auto& c : rep.conditions) {
    py::dict jc;
    jc["label"] = c.label;
    jc["passed"] = c.passed;
    jc["witness"] = c.witness;
    conds.append(jc);
  }
  out["conditions"] = conds;
  if (rep.params) {
    py::list pair;
    pair.append(params_dict(rep.params->first));
    pair.append(params_dict(rep.params->second));
    out["parameters"] = pair;
  } else {
    out["parameters"] = py::none();
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(qsd, m) {
  m.doc() =
      "exact feasibility and p-adic nonexistence tests for quasi-symmetric 2-designs "
      "and their strongly regular block graphs";

  m.def(
      "cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = qsd::cli::run(args, out, err);
        py::dict r;
        r["exit"] = code;
        r["stdout"] = out.str();
        r["stderr"] = err.str();
        return r;
      },
      py::arg("args"),
      "run one CLI command in-process; returns exit code and captured streams");

  m.def(
      "hilbert_symbol",
      [](py::handle a, py::handle b, py::handle p) {
        return qsd::hilbert_symbol(to_rat(a), to_rat(b), to_int(p));
      },
      py::arg("a"), py::arg("b"), py::arg("p"));

  m.def(
      "legendre_eq_solvable",
      [](py::handle a, py::handle b) {
        const qsd::Solvability s = qsd::legendre_eq_solvable(to_rat(a), to_rat(b));
        py::dict out;
        out["solvable"] = s.solvable;
        py::list failing;
        for (const auto& p : s.failing) failing.append(big(p));
        out["failing"] = failing;
        return out;
      },
      py::arg("a"), py::arg("b"));

  m.def(
      "square_class", [](py::handle x) { return big(qsd::square_class(to_rat(x)).rep()); },
      py::arg("x"), "signed squarefree representative of the rational square class");

  m.def(
      "feasibility",
      [](py::handle rho, py::handle sigma, py::handle f, py::handle g, py::handle mu) {
        const qsd::SpectralParams sp(to_int(rho), to_int(sigma), to_int(f), to_int(g));
        return report_dict(qsd::feasibility(sp, to_int(mu)));
      },
      py::arg("rho"), py::arg("sigma"), py::arg("f"), py::arg("g"), py::arg("mu"));

  m.def(
      "derive",
      [](py::handle rho, py::handle sigma, py::handle f, py::handle g, py::handle mu) {
        const qsd::SpectralParams sp(to_int(rho), to_int(sigma), to_int(f), to_int(g));
        const auto pair = qsd::derive_params(sp, to_int(mu));
        py::list out;
        out.append(params_dict(pair.first));
        out.append(params_dict(pair.second));
        return out;
      },
      py::arg("rho"), py::arg("sigma"), py::arg("f"), py::arg("g"), py::arg("mu"));

  m.def(
      "symmetric",
      [](py::handle v, py::handle k, py::handle lam) {
        const qsd::Int vi = to_int(v), ki = to_int(k), li = to_int(lam);
        if (ki * (ki - 1) != li * (vi - 1)) {
          throw std::invalid_argument("symmetric: k(k-1) != lambda(v-1)");
        }
        const qsd::Int nu = ki - li;
        const qsd::SymmetricResult res = mpz_even_p(vi.get_mpz_t())
                                             ? qsd::schutzenberger(vi, nu)
                                             : qsd::chowla_ryser(vi, li, nu);
        py::dict out;
        out["verdict"] = res.verdict == qsd::TriState::Pass ? "pass" : "reject";
        out["witness"] = res.witness;
        return out;
      },
      py::arg("v"), py::arg("k"), py::arg("lam"));

  m.def(
      "table1",
      [](py::handle max_n, py::handle max_mu, py::handle max_v) {
        py::list out;
        for (const qsd::TableRow& r :
             qsd::feasible_table(to_int(max_n), to_int(max_mu), to_int(max_v))) {
          py::dict row;
          row["number"] = r.number;
          row["n"] = big(r.n);
          row["m"] = big(r.m);
          row["mu"] = big(r.mu);
          row["parameters"] = params_dict(r.params);
          row["verdict"] = r.rejected ? "no" : "open";
          row["reject_label"] = r.rejected ? py::cast(r.reject_label) : py::none();
          out.append(row);
        }
        return out;
      },
      py::arg("max_n") = 6, py::arg("max_mu") = 4, py::arg("max_v") = 500);

  m.def(
      "graph_invariants",
      [](const std::string& text, const std::string& format) {
        const qsd::AdjacencyMatrix a = qsd::parse_graph(text, format);
        const qsd::SpectralParams sp = qsd::srg_recognize(a);
        const qsd::GraphInvariants inv = qsd::graph_invariants_direct(a);
        py::dict out;
        out["rho"] = big(sp.rho);
        out["sigma"] = big(sp.sigma);
        out["f"] = big(sp.f);
        out["g"] = big(sp.g);
        out["delta"] = big(inv.delta.rep());
        py::dict eps;
        for (const auto& [p, s] : inv.hasse) eps[py::str(qsd::to_string(p))] = s;
        out["eps"] = eps;
        return out;
      },
      py::arg("text"), py::arg("format") = "matrix");
}
