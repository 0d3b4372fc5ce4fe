#pragma once

#include <stdexcept>
#include <string>

namespace cekr {

// Every failure the library can signal, so callers (and the CLI) can map
// failures to exit codes without string matching.
enum class errc {
  malformed_permutation,  // input is not a permutation / not a partition into cycles
  domain_mismatch,        // operands live on different ground sets
  undefined_on_empty,     // operation needs a non-empty family
  out_of_range,           // parameter outside the documented domain
  resource_guard,         // refusing work beyond the enforced size/budget limits
  invalid_argument,       // anything else wrong with an argument
};

// Stable machine-readable label for each kind (used in serialized errors).
inline const char* errc_name(errc kind) {
  switch (kind) {
    case errc::malformed_permutation: return "malformed_permutation";
    case errc::domain_mismatch: return "domain_mismatch";
    case errc::undefined_on_empty: return "undefined_on_empty";
    case errc::out_of_range: return "out_of_range";
    case errc::resource_guard: return "resource_guard";
    case errc::invalid_argument: return "invalid_argument";
  }
  return "internal";
}

class error : public std::runtime_error {
public:
  error(errc kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  errc kind() const { return kind_; }

private:
  errc kind_;
};

[[noreturn]] inline void fail(errc kind, const std::string& what) { throw error(kind, what); }

inline void require(bool ok, errc kind, const std::string& what) {
  if (!ok) fail(kind, what);
}

}  // namespace cekr
