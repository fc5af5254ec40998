#pragma once

#include <cstdint>
#include <string>

#include "inputs.hpp"

namespace opcoh::cli {

struct GenArgs {
  SourceFlags src;
  std::string out;
  std::string dot;
  std::string realization_out;
};

struct MorseArgs {
  SourceFlags src;
  int all = 0;
  int jobs = 1;
  std::string vec;
  std::uint64_t seed = 0;
  std::string emit_cert;
};

struct HomologyArgs {
  SourceFlags src;
  int all = 0;
  int jobs = 1;
  bool certify = false;
  bool brute_force = false;
  int samples = 16;
  std::uint64_t seed = 0;
};

struct ConfluenceArgs {
  SourceFlags src;
  int all = 0;
  int jobs = 1;
  int strategies = 50;
  std::uint64_t seed = 0;
};

struct CoherenceArgs {
  SourceFlags src;
  std::string object;
  std::string w1;
  std::string w2;
  std::string emit_cert;
};

struct VerifyArgs {
  SourceFlags src;
  std::string cert;
};

struct OrientArgs {
  SourceFlags src;
  std::string vec;
  int random = 0;
  std::uint64_t seed = 0;
  std::string out;
};

struct NormalizeArgs {
  SourceFlags src;
  int strategies = 0;
  std::uint64_t seed = 0;
};

struct WitnessArgs {
  SourceFlags src;
  std::string p1;
  std::string p2;
  int length = 12;
  std::string vec;
  std::uint64_t seed = 0;
  std::string emit_cert;
};

// Each prints one JSON report on stdout and returns the exit status.
int run_gen(const GenArgs& a);
int run_morse(const MorseArgs& a);
int run_homology(const HomologyArgs& a);
int run_confluence(const ConfluenceArgs& a);
int run_coherence(const CoherenceArgs& a);
int run_verify(const VerifyArgs& a);
int run_orient(const OrientArgs& a);
int run_normalize(const NormalizeArgs& a);
int run_witness(const WitnessArgs& a);

}  // namespace opcoh::cli
