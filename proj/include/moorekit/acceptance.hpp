#pragma once
// The end-to-end acceptance suite: ten independent criteria exercising the
// whole pipeline on a fixed desk-scale corpus (groups of order <= 24, degree
// <= 4). Each criterion re-derives its expected values from first principles
// (brute-force enumeration, independent oracles, seeded generators) rather
// than trusting the code under test. Everything is deterministic: fixed
// seeds, sorted reports, no wall-clock anywhere.

#include <random>
#include <string>
#include <vector>

#include "moorekit/chain.hpp"
#include "moorekit/crossed.hpp"

namespace moorekit {

struct CriterionResult {
  int number = 0;
  std::string name;
  bool pass = false;
  json detail = json::object();  // deterministic counts; witnesses on failure
};

// The shared chain corpus: Moore complexes of discrete, contractible,
// Eilenberg-MacLane, and nerve constructions, plus seeded random proper
// complexes. At least 12 members, labels unique and sorted-stable.
std::vector<ChainComplex> acceptance_chain_corpus();

// The crossed-module corpus used by the round-trip and CTF criteria.
std::vector<CrossedModule> acceptance_crossed_corpus();

// Crossed complexes with and without central-extension bottoms.
std::vector<CrossedComplex> acceptance_crossed_complexes();

// A random proper complex on window [lo, lo+width-1]: groups drawn from
// `pool`, differentials drawn from the normal-image homs compatible with the
// zero-composite law (the zero hom keeps every candidate list nonempty).
// Deterministic for a given rng state; uses rng() % n only.
ChainComplex random_proper_complex(std::mt19937& rng, int lo, int width,
                                   const std::vector<FiniteGroup>& pool, std::string label);

// All ten criteria, in order. Runs in well under a minute on desk hardware.
std::vector<CriterionResult> run_acceptance_suite();

}  // namespace moorekit
