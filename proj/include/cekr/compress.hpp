#pragma once

#include <cekr/oracle.hpp>
#include <cekr/perm.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace cekr {

enum class CompressionOp { fix, shift };

// "fix" / "shift"; used in trace serialization.
std::string compression_op_name(CompressionOp op);

// One family-level operator application that changed at least one member.
struct CompressionStep {
  CompressionOp op;
  int first;          // i for fix, v for shift
  int second;         // j for fix, w for shift
  std::size_t moved;  // members replaced by their image
};

struct CompressionTrace {
  std::size_t initial_size = 0;
  std::size_t final_size = 0;
  std::vector<CompressionStep> steps;
};

// If p maps i to j, split i out of its cycle: i becomes a fixed point and
// the rest of the cycle keeps its cyclic order.  Otherwise p is returned
// unchanged.  i = j is an error.
Permutation fix_perm(int i, int j, const Permutation& p);

// If p fixes w but not v (v < w), substitute w into v's position inside v's
// cycle and make v a fixed point.  Otherwise p is returned unchanged.
Permutation shift_perm(int v, int w, const Permutation& p);

// Member-wise application with a membership guard: p is replaced by its
// image only when the image is not already present in the ORIGINAL family,
// so the result is independent of processing order and |result| = |a|.
PermFamily fix_family(int i, int j, const PermFamily& a);
PermFamily shift_family(int v, int w, const PermFamily& a);

struct CompressionResult {
  PermFamily family;
  CompressionTrace trace;
};

// Sweeps fix_family over all ordered pairs (i, j) until stable, then
// shift_family over all v < w until stable, repeating the whole cycle until
// no operator changes the family.  Input must be t-cycle-intersecting.
CompressionResult compress_to_fixpoint(const PermFamily& a, int t);

// Result of checking the zero-common-cycle property of the maximum
// nontrivial families at one (n, t) instance.
struct MaximizerAudit {
  int n = 0;
  int t = 0;
  // False where the property provably cannot hold (n <= t+2 with t >= 2:
  // the maximizers are single long-cycle permutations, and a lone
  // permutation always has at least one cycle in common with itself).
  bool applicable = true;
  bool passed = false;
  std::size_t maximizer_count = 0;
  std::string note;
};

// Enumerates every maximum nontrivial family, checks each has zero common
// cycles, and re-checks after compression that size, the intersecting
// property, and the absence of common fixed points all survive.  At most
// max_families maximizers are audited.
MaximizerAudit audit_maximizers(int n, int t,
                                std::size_t max_families = static_cast<std::size_t>(-1),
                                const OracleOptions& opts = {});

}  // namespace cekr
