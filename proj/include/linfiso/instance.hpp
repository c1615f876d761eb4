#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include "linfiso/canonical.hpp"

namespace linfiso {

enum class BasisKind { annihilator, spanning };

const char* to_string(BasisKind kind) noexcept;

// Text format:
//   line 1:  "N m annihilator" or "N m spanning"
//   then N lines of m (annihilator) or N - m (spanning) rational tokens.
// Blank lines and '#' comments are ignored.
struct Instance {
  std::size_t ambient = 0;
  std::size_t codim = 0;
  BasisKind kind = BasisKind::annihilator;
  MatrixQ entries;

  SubspaceSpec to_spec() const;

  friend bool operator==(const Instance&, const Instance&) = default;
};

// Throws Error(parse) with a "line L, column C: ..." prefix.
Instance parse_instance(std::string_view text);
// Reads the file first; an unreadable file is Error(parse) as well.
Instance load_instance(const std::string& path);
std::string serialize_instance(const Instance& instance);

Instance instance_from_spec(const SubspaceSpec& spec);

struct EntryDistribution {
  long range = 5;                // integers uniform in [-range, range]
  bool rational_entries = false;  // divide by a uniform denominator in [1, range]
};

Rational random_entry(std::mt19937_64& rng, const EntryDistribution& dist);
// Rejection-samples until the rows x cols matrix has full column rank.
MatrixQ random_full_rank(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                         const EntryDistribution& dist);

struct GenOptions {
  std::uint64_t seed = 1;
  std::size_t dim = 2;  // n = N - m
  std::size_t codim = 1;
  EntryDistribution entries;
  BasisKind kind = BasisKind::annihilator;
};

// Throws Error(usage) unless dim >= 1, codim >= 1 and range >= 1.
Instance generate_instance(const GenOptions& options);

}  // namespace linfiso
