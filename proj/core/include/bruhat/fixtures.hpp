#pragma once

// Reduced words for the pair (e, w0) used throughout the tests and the CLI.

#include "bruhat/coxeter.hpp"
#include "bruhat/sigma.hpp"
#include "bruhat/word.hpp"

namespace bruhat {

struct Fixture {
  CartanSpec cartan;
  Word u;
  Word v;
  SignedWord word;
};

/// (1 2 ... n) repeated `times` times.
Word coxeter_power(int rank, int times);

/// (e, w0) with v = (1..n)^n for B_n and C_n, (1234)^6 for F4, (12)^3 for G2
/// and the greedy longest word otherwise.
Fixture e_w0_fixture(const TypeLabel& label);

/// Sigma graph of the fixture, carrying standard_split() when one exists.
SigmaGraph fixture_sigma(const Fixture& fixture);

}  // namespace bruhat
