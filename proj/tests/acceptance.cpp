// Acceptance harness: one line per criterion, PASS or FAIL, with the worst
// observed residual and elapsed time.  Exits nonzero when any criterion
// fails.  Tolerances are pinned here on purpose; loosening them is a red
// flag, not a fix.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "kauffman.hpp"
#include "ribbonlab/catalog.hpp"
#include "ribbonlab/drinfeld.hpp"
#include "ribbonlab/invariants.hpp"
#include "ribbonlab/numerics.hpp"
#include "ribbonlab/ribbon.hpp"
#include "ribbonlab/verify.hpp"

using namespace ribbonlab;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double kQ = 1.2;

struct Entry {
  std::string name;
  ModelFile file;
};

ModelFile make_jimbo(char type, int rank, Complex q, Complex eta = 1.0) {
  JimboParams p;
  p.type = type;
  p.rank = rank;
  p.eta = eta;
  if (type == 'B')
    p.q_sqrt = std::sqrt(q);
  else
    p.q = q;
  return jimbo_model(p);
}

ModelFile make_sos(int n, int level) {
  SOSParams p;
  p.n = n;
  p.level = level;
  return sos_model(p);
}

std::vector<Entry> catalog_nine() {
  std::vector<Entry> out;
  out.push_back({"A1", make_jimbo('A', 1, kQ)});
  out.push_back({"A2", make_jimbo('A', 2, kQ)});
  out.push_back({"A3", make_jimbo('A', 3, kQ)});
  out.push_back({"B2", make_jimbo('B', 2, 1.21)});
  out.push_back({"C2", make_jimbo('C', 2, kQ)});
  out.push_back({"D2", make_jimbo('D', 2, kQ)});
  out.push_back({"SOS(2,2)", make_sos(2, 2)});
  out.push_back({"SOS(2,3)", make_sos(2, 3)});
  out.push_back({"SOS(3,2)", make_sos(3, 2)});
  return out;
}

EdgeOperator diag_op(const GraphPtr& g, const std::vector<Complex>& d) {
  SpacePtr s1 = PathSpace::enumerate(g, 1);
  Matrix m = Matrix::Zero(s1->dim(), s1->dim());
  for (int i = 0; i < s1->dim(); ++i) m(i, i) = d[static_cast<std::size_t>(i)];
  return EdgeOperator(s1, m);
}

int g_failures = 0;

void criterion(int number, const std::string& title,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  auto start = Clock::now();
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double secs =
      std::chrono::duration_cast<std::chrono::duration<double>>(Clock::now() -
                                                                start)
          .count();
  std::printf("[%s] criterion %d: %s (%s; %.2fs)\n", ok ? "PASS" : "FAIL",
              number, title.c_str(), detail.c_str(), secs);
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

}  // namespace

int main() {
  auto models = catalog_nine();

  // -------------------------------------------------------------------- 1
  criterion(1, "all nine catalog models satisfy the braid relation", [&](
                   std::string& detail) {
    auto start = Clock::now();
    double worst = 0.0;
    bool ok = true;
    for (auto& e : models) {
      CheckReport rep = check_star_triangular(e.file.model, 1e-9);
      worst = std::max(worst, rep.residual);
      ok = ok && rep.pass;
    }
    double secs = std::chrono::duration_cast<std::chrono::duration<double>>(
                      Clock::now() - start)
                      .count();
    detail = "worst residual " + fmt(worst);
    return ok && worst < 1e-9 && secs < 10.0;
  });

  // -------------------------------------------------------------------- 2
  std::map<std::string, LyubashenkoDouble> doubles;
  criterion(2, "every model closes and the doubled model still braids", [&](
                   std::string& detail) {
    double worst = 0.0;
    bool ok = true;
    for (auto& e : models) {
      doubles.emplace(e.name, build_lyubashenko_double(e.file.model));
      CheckReport rep =
          check_double_star_triangular(doubles.at(e.name), 1e-9);
      worst = std::max(worst, rep.residual);
      ok = ok && rep.pass;
    }
    detail = "worst doubled residual " + fmt(worst);
    return ok && worst < 1e-9;
  });

  // -------------------------------------------------------------------- 3
  criterion(3, "quadratic relations for series A, full cubic skein algebra "
               "and three-point spectrum for series B/C/D",
            [&](std::string& detail) {
    double worst = 0.0;
    bool ok = true;
    for (const char* name : {"A1", "A2", "A3"}) {
      for (auto& e : models) {
        if (e.name != name) continue;
        const auto& md = *e.file.metadata;
        CheckReport rep =
            check_hecke(e.file.model, *md.hecke_a, *md.hecke_b, 1e-9);
        worst = std::max(worst, rep.residual);
        ok = ok && rep.pass;
      }
    }
    for (const char* name : {"B2", "C2", "D2"}) {
      for (auto& e : models) {
        if (e.name != name) continue;
        const auto& md = *e.file.metadata;
        Complex q = md.params.at("q");
        for (const auto& rep : check_bmw(e.file.model, *md.lambda, q, 1e-9)) {
          worst = std::max(worst, rep.residual);
          ok = ok && rep.pass;
        }
        auto s2 = PathSpace::enumerate(e.file.model.graph_ptr(), 2);
        SpectralData sd = spectral(e.file.model.as_operator(s2));
        if (sd.representatives.size() != 3) {
          ok = false;
          continue;
        }
        std::vector<Complex> expected = {Complex(1.0) / *md.lambda, -q,
                                         Complex(1.0) / q};
        for (Complex want : expected) {
          double best = 1e300;
          for (Complex got : sd.representatives)
            best = std::min(best, std::abs(got - want));
          worst = std::max(worst, best);
          ok = ok && best < 1e-8;
        }
      }
    }
    detail = "worst residual " + fmt(worst);
    return ok;
  });

  // -------------------------------------------------------------------- 4
  criterion(4, "closure forms of B2/C2 reproduce the diagonal power table at "
               "two deformation values",
            [&](std::string& detail) {
    double worst_rel = 0.0, worst_res = 0.0;
    bool ok = true;
    for (char type : {'B', 'C'}) {
      for (double qr : {type == 'B' ? 1.21 : 1.2, type == 'B' ? 0.81 : 0.9}) {
        ModelFile mf = make_jimbo(type, 2, qr);
        LyubashenkoDouble dbl = build_lyubashenko_double(mf.model);
        DrinfeldOperators ops = drinfeld_operators(mf.model, dbl);
        Complex q = mf.metadata->params.at("q");
        int n = jimbo_dimension(type, 2);
        int nu = jimbo_nu(type);
        double rel = std::abs(ops.u1.entry(0, 0) - q) / std::abs(q);
        worst_rel = std::max(worst_rel, rel);
        ok = ok && rel < 1e-10;
        Matrix expect = Matrix::Zero(n, n);
        for (int i = 1; i <= n; ++i) {
          double half = (n + 1) / 2.0 - i;
          int sigma = (half > 0) - (half < 0);
          expect(i - 1, i - 1) =
              std::pow(q, Complex(n + nu + 2 * i - n - 1 - sigma * nu));
        }
        double res = normalized_residual(ops.u1.matrix(), expect);
        worst_res = std::max(worst_res, res);
        ok = ok && res < 1e-9;
      }
    }
    detail = "corner rel err " + fmt(worst_rel) + ", table residual " +
             fmt(worst_res);
    return ok;
  });

  // -------------------------------------------------------------------- 5
  std::map<std::string, std::vector<RibbonSolution>> solutions;
  criterion(5, "both ribbon solutions square to their targets and the "
               "modified operator passes every symmetry criterion",
            [&](std::string& detail) {
    double worst = 0.0;
    bool ok = true;
    for (auto& e : models) {
      DrinfeldOperators ops =
          drinfeld_operators(e.file.model, doubles.at(e.name));
      auto sols = ribbon_solve(ops);
      ok = ok && sols.size() == 2;
      for (const auto& sol : sols) {
        worst = std::max({worst, sol.v2_residual, sol.m2_residual});
        ok = ok && sol.v2_residual < 1e-8 && sol.m2_residual < 1e-8;
        CheckReport glf = check_glf_commutant(e.file.model, sol.m, 1e-8);
        worst = std::max(worst, glf.residual);
        ok = ok && glf.pass;
        for (const auto& rep :
             mcrit_check(sol.m, *e.file.metadata->s2, 1e-8)) {
          worst = std::max(worst, rep.residual);
          ok = ok && rep.pass;
        }
      }
      solutions.emplace(e.name, std::move(sols));
    }
    detail = "worst residual " + fmt(worst);
    return ok;
  });

  // -------------------------------------------------------------------- 6
  criterion(6, "determinant pairing: sign parity for series A, vertex-count "
               "multiple for height models",
            [&](std::string& detail) {
    // the solver's principal branch may land on either global sign, so the
    // two solutions are compared against the expected value pair as a set
    auto match_pair = [](std::vector<Complex> got, Complex a, Complex b,
                         double& worst) {
      double direct = std::max(std::abs(got[0] - a), std::abs(got[1] - b));
      double swapped = std::max(std::abs(got[0] - b), std::abs(got[1] - a));
      worst = std::max(worst, std::min(direct, swapped));
      return std::min(direct, swapped) < 1e-8;
    };
    double worst = 0.0;
    bool ok = true;
    for (const char* name : {"A1", "A2"}) {
      for (auto& e : models) {
        if (e.name != name) continue;
        int n = static_cast<int>(e.file.metadata->ints.at("dimension"));
        std::vector<Complex> vals;
        for (const auto& sol : solutions.at(e.name))
          vals.push_back(evaluate_glf(sol.m, *e.file.metadata->det));
        // +M gives +1, -M gives (-1)^N
        ok = ok &&
             match_pair(vals, 1.0, n % 2 == 0 ? 1.0 : -1.0, worst);
      }
    }
    int even_descend = 0, odd_descend = 0;
    for (const char* name : {"SOS(2,2)", "SOS(3,2)"}) {
      for (auto& e : models) {
        if (e.name != name) continue;
        int n = static_cast<int>(e.file.metadata->ints.at("n"));
        double card = e.file.model.graph().vertex_count();
        GroupLikeVector ideal =
            glv_minus(*e.file.metadata->det, unit_vector(e.file.model.graph()));
        std::vector<Complex> vals;
        for (const auto& sol : solutions.at(e.name)) {
          Complex val = evaluate_glf(sol.m, ideal);
          vals.push_back(val);
          if (std::abs(val) < 1e-8) (n % 2 == 0 ? even_descend : odd_descend)++;
        }
        // +M pairs to zero; -M to Card(V)((-1)^N - 1)
        Complex minus_want = card * ((n % 2 == 0 ? 1.0 : -1.0) - 1.0);
        ok = ok && match_pair(vals, 0.0, minus_want, worst);
      }
    }
    ok = ok && even_descend == 2 && odd_descend == 1;
    detail = "worst deviation " + fmt(worst) + "; descending operators: " +
             std::to_string(even_descend) + " even, " +
             std::to_string(odd_descend) + " odd";
    return ok;
  });

  // -------------------------------------------------------------------- 7
  criterion(7, "framed invariants: trefoil matches an independent planar "
               "state sum and Markov moves leave values fixed",
            [&](std::string& detail) {
    double worst = 0.0;
    bool ok = true;
    BraidWord trefoil = parse_braid_word("1 1 1", 2);
    for (Complex q : {Complex(1.2, 0.0), Complex(1.7, 0.0),
                      Complex(0.8, 0.3)}) {
      ModelFile mf = make_jimbo('A', 1, q);
      EdgeOperator mp = diag_op(mf.model.graph_ptr(), *mf.metadata->m_plus);
      Complex ours = link_invariant(mf.model, mp, trefoil).normalized.at(0);
      Complex oracle = kauffman::bracket_invariant(
          trefoil.letters, 2, std::sqrt(Complex(1.0) / q));
      worst = std::max(worst, std::abs(ours - oracle));
      ok = ok && std::abs(ours - oracle) < 1e-8;
    }
    ModelFile mf = make_jimbo('A', 1, kQ);
    EdgeOperator mp = diag_op(mf.model.graph_ptr(), *mf.metadata->m_plus);
    Complex unknot =
        link_invariant(mf.model, mp, parse_braid_word("1", 2)).normalized.at(0);
    worst = std::max(worst, std::abs(unknot - Complex(1.0)));
    ok = ok && std::abs(unknot - Complex(1.0)) < 1e-10;
    Complex tre = link_invariant(mf.model, mp, trefoil).normalized.at(0);
    ok = ok && std::abs(tre - unknot) > 1e-3;  // the invariant distinguishes
    CheckReport suite = markov_move_suite(mf.model, mp, trefoil, 20);
    worst = std::max(worst, suite.residual);
    ok = ok && suite.pass && suite.residual < 1e-8;
    detail = "worst deviation " + fmt(worst);
    return ok;
  });

  // -------------------------------------------------------------------- 8
  criterion(8, "double commutant of the braid operator has the expected "
               "dimension in under five seconds per model",
            [&](std::string& detail) {
    bool ok = true;
    std::string dims;
    for (auto& [name, want] :
         std::vector<std::pair<std::string, int>>{{"A1", 2},
                                                  {"A2", 2},
                                                  {"B2", 3},
                                                  {"C2", 3},
                                                  {"D2", 3}}) {
      for (auto& e : models) {
        if (e.name != name) continue;
        auto start = Clock::now();
        auto s2 = PathSpace::enumerate(e.file.model.graph_ptr(), 2);
        int dim = double_commutant_dimension(e.file.model.as_operator(s2));
        double secs =
            std::chrono::duration_cast<std::chrono::duration<double>>(
                Clock::now() - start)
                .count();
        ok = ok && dim == want && secs < 5.0;
        dims += name + std::string(":") + std::to_string(dim) + " ";
      }
    }
    detail = dims + "(expected 2 2 3 3 3)";
    return ok;
  });

  if (g_failures == 0) {
    std::printf("all acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d acceptance criteria FAILED\n", g_failures);
  return 1;
}
