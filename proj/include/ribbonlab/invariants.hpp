#pragma once

// Framed link invariants of braid closures.  A braid word on n strands maps
// to an operator on the degree-n path space (letter +-i acts by the braid
// generator image in slots i, i+1); the Markov trace weights the diagonal by
// the n-fold tensor power of a modified ribbon operator M and sums per start
// vertex.  Enhancement constants c_+- absorb the framing change of the two
// stabilisation moves, giving a writhe-corrected value, which is normalised
// by the one-strand unknot value.

#include <map>
#include <string>
#include <vector>

#include "ribbonlab/face_model.hpp"
#include "ribbonlab/verify.hpp"

namespace ribbonlab {

struct BraidWord {
  int strands = 1;
  std::vector<int> letters;  // +-k, 1-based; -k is the inverse generator

  int exp_plus() const;
  int exp_minus() const;
  int writhe() const { return exp_plus() - exp_minus(); }
};

// Parses a whitespace-separated list of signed integers ("1 1 1", "-2 1").
BraidWord parse_braid_word(const std::string& text, int strands);

// Images of the generators sigma_1..sigma_{n-1} (and inverses on demand) on
// the degree-n path space.  Refuses path spaces with more than `max_dense`
// dense entries.
struct BraidRep {
  SpacePtr space;
  std::vector<BlockOperator> gens;     // index i-1 for sigma_i
  std::vector<BlockOperator> gens_inv;
};

BraidRep braid_representation(const FaceModel& m, int strands,
                              double tol = kDefaultTol,
                              long max_dense = 1000000L);

BlockOperator braid_image(const BraidRep& rep, const BraidWord& beta);

// Markov trace per start vertex: value(v) = sum_{p: src p = v} (M^n f)(p, p).
std::map<int, Complex> markov_trace(const BlockOperator& f,
                                    const EdgeOperator& m_op);

struct InvariantReport {
  BraidWord braid;
  Complex c_plus, c_minus;            // enhancement constants
  std::map<int, Complex> framed;      // raw Markov trace per start vertex
  std::map<int, Complex> corrected;   // writhe-corrected
  std::map<int, Complex> normalized;  // divided by the one-strand unknot value
  std::map<int, Complex> unknot;      // one-strand value per vertex
  std::vector<std::string> notices;
};

InvariantReport link_invariant(const FaceModel& m, const EdgeOperator& m_op,
                               const BraidWord& beta,
                               double tol = kDefaultTol);

// Randomised Markov-move consistency: conjugations at fixed strand count and
// one-strand stabilisations must leave the normalised values unchanged.
// Returns the worst drift observed over `trials` random words.
CheckReport markov_move_suite(const FaceModel& m, const EdgeOperator& m_op,
                              const BraidWord& beta, int trials,
                              std::uint64_t seed = kDefaultSeed,
                              double tol = kDefaultTol);

}  // namespace ribbonlab
