#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "opcoh/complex.hpp"
#include "opcoh/morse.hpp"

namespace opcoh {

using BigInt = boost::multiprecision::cpp_int;

/// Dense integer matrix, row major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  BigInt& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const BigInt& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<BigInt> data_;
};

/// Nonzero invariant factors d1 | d2 | ... | dr (all positive) of the Smith
/// normal form; r is the rank.
std::vector<BigInt> smith_invariants(IntMatrix m);

/// Cellular boundary maps: vertices x edges and edges x cells.
IntMatrix boundary_one(const Complex2& c);
IntMatrix boundary_two(const Complex2& c);

struct HomologyReport {
  int betti_zero = 0;
  int betti_one = 0;
  int betti_two = 0;
  std::vector<BigInt> torsion_one;  // invariant factors > 1 of the second boundary map
  int euler_characteristic = 0;     // V - E + F
};

HomologyReport homology(const Complex2& c);

enum class SimplyConnected { Certified, Refuted, Inconclusive };

const char* to_string(SimplyConnected v);

struct SimplyConnectedVerdict {
  SimplyConnected verdict = SimplyConnected::Inconclusive;
  HomologyReport homology;
  std::optional<MorseCertificate> certificate;
  std::optional<Orientation> orientation;  // the orientation that certified
  int orientation_index = -1;              // index into the supplied list, or -1
  std::string reason;
};

/// Refuted when H1 is nonzero; Certified when some supplied orientation carries a
/// Morse certificate; Inconclusive otherwise. With `brute_force`, complexes of at
/// most 20 edges also try every orientation.
SimplyConnectedVerdict certify_simply_connected(const Complex2& c, const std::vector<Orientation>& orientations,
                                                bool brute_force = false);

}  // namespace opcoh
