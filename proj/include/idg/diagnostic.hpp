#pragma once

#include <string>
#include <vector>

#include "idg/graph.hpp"

namespace idg {

/// Rule identifiers, one per checkable condition.
namespace rule {
// type fragment
inline constexpr const char* kDuplicateId = "duplicate-id";
inline constexpr const char* kResidenceDangling = "residence-dangling";
inline constexpr const char* kResidenceMissing = "residence-missing";
inline constexpr const char* kResidenceMultiple = "residence-multiple";
inline constexpr const char* kResidenceCycle = "residence-cycle";
inline constexpr const char* kCtorIfaceDangling = "ctor-iface-dangling";
inline constexpr const char* kCtorIfaceNotConstructor = "ctor-iface-not-constructor";
inline constexpr const char* kCtorIfaceLevel = "ctor-iface-level";
inline constexpr const char* kCtorIfaceNotBijective = "ctor-iface-not-bijective";
inline constexpr const char* kConnectivityDangling = "connectivity-dangling";
inline constexpr const char* kConnectivityReflexive = "connectivity-reflexive";
inline constexpr const char* kConnectivityCrossInterface = "connectivity-cross-interface";
inline constexpr const char* kConnectivityNotCograph = "connectivity-not-cograph";
inline constexpr const char* kLabelInvalid = "label-invalid";
// term fragment
inline constexpr const char* kAttachmentDangling = "attachment-dangling";
inline constexpr const char* kAttachmentMissing = "attachment-missing";
inline constexpr const char* kAttachmentMultiple = "attachment-multiple";
inline constexpr const char* kAttachmentScope = "attachment-scope";
inline constexpr const char* kResourceWiringDangling = "resource-wiring-dangling";
inline constexpr const char* kResourceWiringKind = "resource-wiring-kind";
inline constexpr const char* kResourceWiringBox = "resource-wiring-box";
inline constexpr const char* kResourceWiringNotBijective = "resource-wiring-not-bijective";
inline constexpr const char* kCtorWiringDangling = "ctor-wiring-dangling";
inline constexpr const char* kCtorWiringKind = "ctor-wiring-kind";
inline constexpr const char* kCtorWiringBox = "ctor-wiring-box";
inline constexpr const char* kCtorArgDangling = "ctor-arg-dangling";
inline constexpr const char* kCtorArgKind = "ctor-arg-kind";
inline constexpr const char* kCtorArgBox = "ctor-arg-box";
inline constexpr const char* kCtorArgNotBijective = "ctor-arg-not-bijective";
inline constexpr const char* kCtorUsageDangling = "ctor-usage-dangling";
inline constexpr const char* kCtorUsageKind = "ctor-usage-kind";
inline constexpr const char* kCtorUsageMissing = "ctor-usage-missing";
inline constexpr const char* kCtorUsageMultiple = "ctor-usage-multiple";
inline constexpr const char* kCtorUsageScope = "ctor-usage-scope";
inline constexpr const char* kNotWireSafe = "not-wire-safe";
inline constexpr const char* kLetPorts = "let-ports";
inline constexpr const char* kLetIfaceDangling = "let-iface-dangling";
inline constexpr const char* kLetIfaceNotBijective = "let-iface-not-bijective";
inline constexpr const char* kLetIfaceNotRoot = "let-iface-not-root";
inline constexpr const char* kInternalRootUnbound = "internal-root-unbound";
inline constexpr const char* kLetCorrDangling = "let-corr-dangling";
inline constexpr const char* kNotType = "not-a-type";
inline constexpr const char* kNotTerm = "not-a-term";
// correspondence
inline constexpr const char* kCorrDangling = "corr-dangling";
inline constexpr const char* kCorrBijection = "corr-bijection";
inline constexpr const char* kCorrCtorInterface = "corr-ctor-interface";
inline constexpr const char* kCorrKind = "corr-kind";
inline constexpr const char* kCorrPolarity = "corr-polarity";
inline constexpr const char* kCorrLetPort = "corr-let-port";
inline constexpr const char* kLetBodyUncovered = "let-body-uncovered";
inline constexpr const char* kLetOccurrenceUncovered = "let-occurrence-uncovered";
inline constexpr const char* kLetFragmentOverlap = "let-fragment-overlap";
inline constexpr const char* kExternalRoot = "external-root";
inline constexpr const char* kOverlapsRdc = "overlaps-RDC";
inline constexpr const char* kBoxUncovered = "box-uncovered";
inline constexpr const char* kNodeUncovered = "node-uncovered";
inline constexpr const char* kPortUncovered = "port-uncovered";
inline constexpr const char* kMultiplyCovered = "multiply-covered";
inline constexpr const char* kLetPortCovered = "let-port-covered";
inline constexpr const char* kWireLabelMismatch = "wire-label-mismatch";
// well-formedness
inline constexpr const char* kIllFormedCycle = "ill-formed-cycle";
inline constexpr const char* kResourceLimit = "resource-limit";
}  // namespace rule

/// A machine-readable validation finding.
struct Diagnostic {
  std::string rule_id;
  std::vector<ComponentId> components;
  std::string message;

  bool operator==(const Diagnostic&) const = default;
};

using Diagnostics = std::vector<Diagnostic>;

/// Sorts by rule id, then component ids, then message; drops exact duplicates.
void sort_diagnostics(Diagnostics& diags);

std::string to_json_line(const Diagnostic& d);
std::string to_pretty(const Diagnostic& d);

}  // namespace idg
