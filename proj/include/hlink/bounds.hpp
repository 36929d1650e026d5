#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hlink/constructions.hpp"
#include "hlink/graph.hpp"
#include "hlink/linkage.hpp"
#include "hlink/pattern.hpp"
#include "json.hpp"

namespace hlink {

enum class HTag { P4, K3, K2P3, K2C2, P3P3, LK2, LK2P3, LK2C2, OneSidedBipartite, K2P4 };

/// A named pattern family from the bound tables; `l` is used by the
/// ℓ-parametrised tags only.
struct HId {
  HTag tag = HTag::P4;
  int l = 0;

  friend bool operator==(const HId&, const HId&) = default;
};

/// Accepts "p4", "k3", "k2+p3", "k2+c2", "p3+p3", "k2+p4" (the '+' is
/// optional), "L*k2" / "matching:L", "L*k2+p3", "L*k2+c2" and "bipartite:L"
/// (a connected bipartite H with L edges and a one-vertex side).
/// Throws ParseError on anything else.
HId parse_hid(std::string_view text);
std::string to_string(const HId& id);

/// Bounds lower ≤ δ(k,H,N) ≤ upper. Strict flags turn ≤ into <.
struct BoundRange {
  double lower = 0;
  double upper = 0;
  bool exact = false;
  bool lower_strict = false;
  bool upper_strict = false;
  std::optional<std::string> asymptotic_note;

  struct Validity {
    std::optional<int> min_n;        // absent: "N large enough" with no number
    std::optional<bool> satisfied;   // absent when min_n is absent
    std::string text;
  };
  std::optional<Validity> validity;
  std::string row;  // the table row the range comes from
};

/// The tabulated bounds for δ(k,H,N), or nullopt when no row covers (k, H).
/// Only unconditional numeric claims appear in lower/upper; o(1) terms are
/// kept in asymptotic_note. Throws DomainError if k < 0, n < 1 or l < 1.
std::optional<BoundRange> paper_bounds(int k, const HId& h, int n);

struct ExactDeltaResult {
  int value = 0;
  /// k-connected, minimum degree value−1, not H-linked; present iff value > k.
  std::optional<Graph> extremal_witness;
  std::uint64_t graphs_scanned = 0;
};

struct EnumerationOptions {
  int max_n = 7;         // guard against 2^C(n,2) blow-up
  unsigned threads = 1;  // 0: hardware concurrency
};

/// Thrown when a linkage search ran out of budget; carries what was known.
class PartialResultError : public std::runtime_error {
 public:
  PartialResultError(const std::string& message, std::uint64_t graphs_scanned)
      : std::runtime_error(message), graphs_scanned_(graphs_scanned) {}
  std::uint64_t graphs_scanned() const noexcept { return graphs_scanned_; }

 private:
  std::uint64_t graphs_scanned_;
};

/// δ(k,H,n) by enumerating all labeled graphs on n vertices.
ExactDeltaResult delta_exact(int k, const PatternMultigraph& h, int n, const SearchBudget& budget,
                             const EnumerationOptions& options = {});

/// δ(k+1, H∪v, n+1) == δ(k, H, n) + 1, both sides by delta_exact.
bool delta_shift_check(int k, const PatternMultigraph& h, int n, const SearchBudget& budget,
                       const EnumerationOptions& options = {});

enum class WitnessVerdict { NoLinkage, NotFoundWithinBudget, Found };
std::string_view to_string(WitnessVerdict v);

struct VerificationReport {
  std::string family;
  std::vector<std::pair<std::string, std::string>> params;
  std::string witness_pattern;
  std::vector<std::string> witness_labels;
  int claimed_n = 0, claimed_min_degree = 0, claimed_kappa = 0;
  int n = 0, min_degree = 0, kappa = 0;
  bool n_ok = false, min_degree_ok = false, kappa_ok = false;
  WitnessVerdict witness_verdict = WitnessVerdict::NotFoundWithinBudget;
  std::uint64_t nodes_expanded = 0;
  double structure_seconds = 0, witness_seconds = 0;

  bool structural_ok() const { return n_ok && min_degree_ok && kappa_ok; }
  bool pass() const { return structural_ok() && witness_verdict != WitnessVerdict::Found; }
};

/// Recomputes N, δ(G), κ(G) and runs the witness search.
VerificationReport verify_construction(const ConstructedInstance& inst, const SearchBudget& budget);

/// JSON forms; infinite bounds become null. Timings only when asked, so that
/// repeated runs are byte-identical by default.
nlohmann::ordered_json to_json(const BoundRange& b);
nlohmann::ordered_json to_json(const ExactDeltaResult& r);
nlohmann::ordered_json to_json(const VerificationReport& r, bool with_timings = false);

}  // namespace hlink
