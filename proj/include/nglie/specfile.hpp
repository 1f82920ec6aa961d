#pragma once

#include <optional>
#include <string>

#include "nglie/block.hpp"
#include "nglie/expr.hpp"
#include "nglie/hamcontact.hpp"
#include "nglie/weylmatrix.hpp"

namespace nglie {

enum class FamilyKind {
  Witt,
  S,
  Block1,
  Block2,
  Block3,
  Ham,
  Contact,
  WeylGl,
  WeylSl,
  WeylO,
  WeylSp,
};

/// A fully constructed family instance: the structural fields that apply to
/// the loaded kind are populated, the rest stay empty.
struct LoadedSpec {
  FamilyKind kind{};
  std::string family;
  std::string summary;

  WittPtr witt;                       // witt, s, weyl-*
  RatVec rho;                         // s
  std::optional<BlockISpec> b1;
  std::optional<BlockIISpec> b2;
  std::optional<SuperSpec> b3;
  std::optional<HamSpec> ham;
  std::optional<ContactSpec> contact;
  std::optional<IdealPattern> pattern;  // weyl-gl / weyl-o / weyl-sp
  int matrix_size = 0;                  // weyl matrix families
  int ell_prime = 0;                    // weyl families
};

/// Parses and constructs; throws ParseError for malformed input (bad JSON,
/// missing or ill-typed keys) and std::invalid_argument for structurally
/// inadmissible data.
LoadedSpec load_spec_text(const std::string& text);
LoadedSpec load_spec_file(const std::string& path);

/// Family-specific diagnostic validation (empty = admissible).
std::vector<Violation> validate_loaded(const LoadedSpec& s);

/// One-line structural description used by the construct command.
std::string describe_loaded(const LoadedSpec& s);

std::string lattice_canonical_str(const Lattice& l);

}  // namespace nglie
