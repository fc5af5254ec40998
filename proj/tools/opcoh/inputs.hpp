#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "opcoh/coherence.hpp"
#include "opcoh/geometry.hpp"
#include "opcoh/operahedron.hpp"

namespace opcoh::cli {

using nlohmann::json;

enum Exit { kOk = 0, kRefuted = 1, kInvalid = 2, kRejected = 3, kInconclusive = 4 };

/// The ways a command can name a tree or complex.
struct SourceFlags {
  int linear = 0;
  int corolla = -1;
  std::string tree_file;
  std::string fixture;
  std::string maclane;
  std::string expr;
  std::string complex_file;
  std::string orientation_file;
  std::string realization_file;

  void attach(CLI::App& app, bool with_complex);
  bool any() const;
};

/// A resolved input: either the skeleton of a tree or a bare complex.
struct Input {
  std::optional<Operahedron> op;
  std::optional<OperadExpression> object;  // from --maclane or --expr
  Complex2 complex;
  std::optional<Orientation> orientation;
  std::optional<std::vector<RationalPoint>> points;
  json description = json::object();  // how the input was named
  json hashes = json::object();       // content hashes of the files and inline texts read
};

Input resolve(const SourceFlags& f);

/// Trees only; throws Error for complexes and fixtures.
PlanarTree resolve_tree(const SourceFlags& f, Input& in);

/// 64-bit FNV-1a, hex.
std::string content_hash(const std::string& text);

std::string read_text(const std::string& path);

/// A JSON document when `arg` names a file, otherwise inline sugar applied from
/// `object`.
MorphismWord load_word(const std::string& arg, const std::optional<OperadExpression>& object, json& hashes,
                       const char* key);

/// Writes `j` atomically when `path` is non-empty.
void emit(const std::string& path, const json& j);
void emit_text(const std::string& path, const std::string& text);

/// Runs f(i) for i in [0, n) on up to `jobs` threads; results keep index order.
template <class F>
auto parallel_map(int n, int jobs, F f) -> std::vector<decltype(f(0))>;

}  // namespace opcoh::cli

#include "parallel.inl"
