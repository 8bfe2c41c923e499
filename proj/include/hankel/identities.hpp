#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hankel/poly.hpp"

namespace hankel {

/// Result of one exact identity check. `sides` holds the (lhs, rhs)
/// component pairs the identity compares; `residuals` the exact differences.
/// Entries flagged `erratum` transcribe a published form verbatim that is
/// known to be off by a pinned term; they are expected NOT to hold and exist
/// to document the defect precisely.
struct IdentityReport {
    std::string name;
    std::string note;
    bool erratum = false;
    bool holds = false;
    std::vector<std::pair<Poly, Poly>> sides;
    std::vector<Poly> residuals;

    std::size_t residual_term_count() const {
        std::size_t n = 0;
        for (const Poly& r : residuals) n += r.term_count();
        return n;
    }

    std::string residual_string() const {
        std::string out;
        for (const Poly& r : residuals) {
            if (r.is_zero()) continue;
            if (!out.empty()) out += " ; ";
            out += r.str();
        }
        return out.empty() ? "0" : out;
    }
};

/// Closed registry of the algebraic identities the artifact certifies.
const std::vector<std::string>& identity_names();

IdentityReport verify_identity(const std::string& name);

std::vector<IdentityReport> verify_all_identities();

/// Redundant guard: evaluates both sides of every component at random
/// rational points and checks exact agreement with the stored residual.
bool cross_check_at_random_points(const IdentityReport& report, int points, std::uint64_t seed);

}  // namespace hankel
