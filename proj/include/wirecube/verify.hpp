#pragma once

// Invariant suites run against one host. Each check records how many cases
// it exercised; failing checks that involve an embedding keep it as a
// counterexample.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wirecube/embedding.hpp"
#include "wirecube/host.hpp"

namespace wirecube {

enum class VerifyDepth { Quick, Full };

[[nodiscard]] std::string_view to_string(VerifyDepth d) noexcept;
[[nodiscard]] VerifyDepth parse_depth(std::string_view text);

struct VerifyOptions {
  VerifyDepth depth = VerifyDepth::Quick;
  std::uint64_t seed = 1;
  /// Random embeddings per host; 0 picks 32 (quick) or 1000 (full).
  std::uint32_t samples = 0;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::uint64_t cases = 0;
  std::string detail;
  std::optional<Embedding> counterexample;
};

struct VerifyReport {
  std::string subject;  // host spec, or embedding file path
  VerifyDepth depth = VerifyDepth::Quick;
  std::vector<CheckResult> checks;
  std::optional<std::uint64_t> brute_minimum;

  [[nodiscard]] bool passed() const noexcept;
  [[nodiscard]] const CheckResult* find(std::string_view name) const noexcept;
};

[[nodiscard]] VerifyReport verify_spec(const HostSpec& spec, const VerifyOptions& options);

/// Loads an embedding file and checks it: validation errors become a failed
/// "embedding_file" check rather than an exception.
[[nodiscard]] VerifyReport verify_embedding_file(const std::string& path);

}  // namespace wirecube
