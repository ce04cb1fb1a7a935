#include "ribbonlab/invariants.hpp"

#include <random>
#include <sstream>

#include "ribbonlab/numerics.hpp"

namespace ribbonlab {

namespace {

Complex cpow_int(Complex base, int e) {
  if (e < 0) {
    if (base == Complex(0.0, 0.0))
      throw Error(ErrorKind::Internal, "zero raised to a negative power");
    return Complex(1.0, 0.0) / cpow_int(base, -e);
  }
  Complex acc(1.0, 0.0);
  for (int k = 0; k < e; ++k) acc *= base;
  return acc;
}

std::string word_to_string(const BraidWord& beta) {
  std::ostringstream os;
  os << "[" << beta.strands << " strands:";
  for (int l : beta.letters) os << " " << l;
  os << "]";
  return os.str();
}

}  // namespace

int BraidWord::exp_plus() const {
  int n = 0;
  for (int l : letters) n += l > 0;
  return n;
}

int BraidWord::exp_minus() const {
  int n = 0;
  for (int l : letters) n += l < 0;
  return n;
}

BraidWord parse_braid_word(const std::string& text, int strands) {
  if (strands < 1)
    throw Error(ErrorKind::BadParams, "strand count must be at least 1");
  BraidWord beta;
  beta.strands = strands;
  std::string cleaned = text;
  for (char& c : cleaned)
    if (c == ',') c = ' ';
  std::istringstream is(cleaned);
  std::string tok;
  while (is >> tok) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw Error(ErrorKind::Parse, "bad braid letter '" + tok + "'");
    }
    if (used != tok.size())
      throw Error(ErrorKind::Parse, "bad braid letter '" + tok + "'");
    if (value == 0 || std::abs(value) > strands - 1)
      throw Error(ErrorKind::Parse,
                  "braid letter " + std::to_string(value) +
                      " out of range for " + std::to_string(strands) +
                      " strands");
    beta.letters.push_back(value);
  }
  return beta;
}

namespace {

// Exact degree-n path count from saturating powers of the vertex adjacency
// count matrix, so oversized spaces are refused before enumeration.
long count_paths(const OrientedGraph& g, int degree) {
  constexpr long kCap = (1L << 62);
  int nv = g.vertex_count();
  std::vector<long> adj(nv * nv, 0);
  for (int e = 0; e < g.edge_count(); ++e)
    adj[g.edge_src(e) * nv + g.edge_dst(e)] += 1;
  std::vector<long> acc(nv * nv, 0);
  for (int v = 0; v < nv; ++v) acc[v * nv + v] = 1;
  auto sat_muladd = [](long a, long b, long c) {
    if (a == 0 || b == 0) return c;
    if (a > kCap / b) return kCap;
    long p = a * b;
    return p > kCap - c ? kCap : c + p;
  };
  for (int step = 0; step < degree; ++step) {
    std::vector<long> next(nv * nv, 0);
    for (int i = 0; i < nv; ++i)
      for (int k = 0; k < nv; ++k)
        for (int j = 0; j < nv; ++j)
          next[i * nv + j] =
              sat_muladd(acc[i * nv + k], adj[k * nv + j], next[i * nv + j]);
    acc = std::move(next);
  }
  long total = 0;
  for (long v : acc) total = std::min(kCap, total + v);
  return total;
}

}  // namespace

BraidRep braid_representation(const FaceModel& m, int strands, double tol,
                              long max_dense) {
  if (strands < 1)
    throw Error(ErrorKind::BadParams, "strand count must be at least 1");
  GraphPtr g = m.graph_ptr();
  long dim = count_paths(*g, strands);
  if (dim > max_dense / std::max(dim, 1L))
    throw Error(ErrorKind::BadParams,
                "path space of degree " + std::to_string(strands) +
                    " is too large for a dense representation (" +
                    std::to_string(dim) +
                    " paths); sparse mode (weights applied on the fly) "
                    "would be required");
  auto space = PathSpace::enumerate(g, strands);
  BraidRep rep;
  rep.space = space;
  if (strands >= 2) {
    auto s2 = PathSpace::enumerate(g, 2);
    BlockOperator w = m.as_operator(s2);
    BlockOperator winv = invert(w, tol);
    for (int i = 0; i + 1 < strands; ++i) {
      rep.gens.push_back(embed_slot(w, i, strands - 2 - i));
      rep.gens_inv.push_back(embed_slot(winv, i, strands - 2 - i));
    }
  }
  return rep;
}

BlockOperator braid_image(const BraidRep& rep, const BraidWord& beta) {
  if (rep.space->degree() != beta.strands)
    throw Error(ErrorKind::DimensionMismatch,
                "braid word strand count does not match the representation");
  BlockOperator acc = BlockOperator::identity(rep.space);
  for (int letter : beta.letters) {
    int k = std::abs(letter) - 1;
    if (k < 0 || k >= static_cast<int>(rep.gens.size()))
      throw Error(ErrorKind::BadParams,
                  "braid letter " + std::to_string(letter) + " out of range");
    acc = acc * (letter > 0 ? rep.gens[k] : rep.gens_inv[k]);
  }
  return acc;
}

std::map<int, Complex> markov_trace(const BlockOperator& f,
                                    const EdgeOperator& m_op) {
  const PathSpace& sp = f.space();
  GraphPtr g = sp.graph_ptr();
  int n = sp.degree();

  std::map<int, Complex> out;
  for (int v = 0; v < g->vertex_count(); ++v) out[v] = Complex(0.0, 0.0);

  if (n == 0) {
    for (int i = 0; i < sp.dim(); ++i) out[sp.source(i)] += f.entry(i, i);
    return out;
  }

  BlockOperator mn = m_op;
  for (int k = 2; k <= n; ++k)
    mn = truncated_tensor(mn, m_op, PathSpace::enumerate(g, k));

  Eigen::VectorXcd diag = (mn.matrix() * f.matrix()).diagonal();
  for (int i = 0; i < sp.dim(); ++i) out[sp.source(i)] += diag(i);
  return out;
}

InvariantReport link_invariant(const FaceModel& m, const EdgeOperator& m_op,
                               const BraidWord& beta, double tol) {
  BraidRep rep = braid_representation(m, beta.strands, tol);
  BlockOperator f = braid_image(rep, beta);

  EnhancementConstants ec = enhancement_constants(m, m_op, tol);
  if (std::abs(ec.c_plus) < tol || std::abs(ec.c_minus) < tol)
    throw Error(ErrorKind::Internal,
                "an enhancement constant vanishes; framing correction "
                "undefined");

  InvariantReport rep_out;
  rep_out.braid = beta;
  long dim = rep.space->dim();
  if (dim * dim > 10000L)
    rep_out.notices.push_back(
        "dense representation holds " + std::to_string(dim * dim) +
        " entries; sparse mode (weights applied on the fly) would be "
        "preferable at this size");
  rep_out.c_plus = ec.c_plus;
  rep_out.c_minus = ec.c_minus;
  rep_out.framed = markov_trace(f, m_op);

  auto s1 = PathSpace::enumerate(m.graph_ptr(), 1);
  rep_out.unknot = markov_trace(BlockOperator::identity(s1), m_op);

  Complex correction = cpow_int(ec.c_plus, -beta.exp_plus()) *
                       cpow_int(ec.c_minus, -beta.exp_minus());
  for (const auto& [v, val] : rep_out.framed)
    rep_out.corrected[v] = correction * val;

  for (const auto& [v, val] : rep_out.corrected) {
    Complex u = rep_out.unknot.at(v);
    if (std::abs(u) <= tol) {
      rep_out.notices.push_back(
          std::string(to_string(ErrorKind::ZeroUnknot)) +
          ": one-strand value vanishes at vertex " + m.graph().vertex_id(v) +
          "; normalized value omitted there");
      continue;
    }
    rep_out.normalized[v] = val / u;
  }

  std::ostringstream note;
  note << "writhe " << beta.writhe() << "; corrected by c+^-"
       << beta.exp_plus() << " c-^-" << beta.exp_minus();
  rep_out.notices.push_back(note.str());
  return rep_out;
}

CheckReport markov_move_suite(const FaceModel& m, const EdgeOperator& m_op,
                              const BraidWord& beta, int trials,
                              std::uint64_t seed, double tol) {
  auto base = link_invariant(m, m_op, beta, tol).normalized;

  std::mt19937_64 rng(seed);
  CheckReport rep;
  rep.check = "markov-moves";
  rep.residual = 0.0;

  for (int trial = 0; trial < trials; ++trial) {
    bool conjugate = beta.strands >= 2 && (rng() % 2 == 0);
    BraidWord probe;
    if (conjugate) {
      int len = 1 + static_cast<int>(rng() % 3);
      std::vector<int> gamma;
      for (int k = 0; k < len; ++k) {
        int g = 1 + static_cast<int>(rng() % (beta.strands - 1));
        gamma.push_back(rng() % 2 == 0 ? g : -g);
      }
      probe.strands = beta.strands;
      probe.letters = gamma;
      probe.letters.insert(probe.letters.end(), beta.letters.begin(),
                           beta.letters.end());
      for (auto it = gamma.rbegin(); it != gamma.rend(); ++it)
        probe.letters.push_back(-*it);
    } else {
      probe.strands = beta.strands + 1;
      probe.letters = beta.letters;
      probe.letters.push_back(rng() % 2 == 0 ? beta.strands : -beta.strands);
    }

    auto moved = link_invariant(m, m_op, probe, tol).normalized;
    for (const auto& [v, val] : base) {
      auto it = moved.find(v);
      if (it == moved.end()) continue;  // vertex dropped by a zero unknot
      double drift = std::abs(it->second - val);
      if (drift > rep.residual) {
        rep.residual = drift;
        rep.witness = (conjugate ? "conjugation " : "stabilisation ") +
                      word_to_string(probe);
      }
    }
  }
  rep.pass = rep.residual < tol;
  if (rep.pass) rep.witness.reset();
  return rep;
}

}  // namespace ribbonlab
