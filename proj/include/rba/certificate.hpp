#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rba/instance.hpp"

namespace rba {

// An arc set claimed to be a rainbow arborescence.  arcs are kept in the
// global deterministic order; spanned is sorted and always contains root.
// An empty arc set with spanned == {root} is the trivial arborescence.
struct RainbowCertificate {
    std::vector<ColoredArc> arcs;
    VertexId root = 0;
    std::vector<VertexId> spanned;

    int size() const { return static_cast<int>(arcs.size()); }

    friend bool operator==(const RainbowCertificate&, const RainbowCertificate&) = default;
};

// Trivial certificate: one vertex, no arcs.
RainbowCertificate singleton_certificate(VertexId root);

// Derives root and spanned from a nonempty arc set that is assumed to form
// an arborescence (throws std::invalid_argument when no unique root exists;
// deeper structure is left to check_certificate).
RainbowCertificate certificate_from_arcs(std::vector<ColoredArc> arcs);

enum class CertFailure {
    None,
    NotInInstance,   // an arc does not occur in the instance with that color
    RepeatedColor,   // some color used more than once
    NotArborescence, // in-degree/root/connectivity broken
    SpannedMismatch, // spanned set disagrees with the arcs
    NotSpanning,     // spanning required but some vertex missing
    WrongRoot,       // required root differs
};

const char* cert_failure_name(CertFailure f);

struct CheckResult {
    CertFailure failure = CertFailure::None;
    std::string detail;

    explicit operator bool() const { return failure == CertFailure::None; }
};

// The universal verifier: true iff cert's arcs all occur in inst, use each
// color at most once, form an arborescence on `spanned` rooted at `root`,
// span V when required, and have the required root when given.  Every
// solver's output must pass this.
CheckResult check_certificate(const ColoredInstance& inst,
                              const RainbowCertificate& cert,
                              bool require_spanning = false,
                              std::optional<VertexId> require_root = std::nullopt);

}  // namespace rba
