#ifndef PN_VERIFY_HPP
#define PN_VERIFY_HPP

#include <string>
#include <vector>

namespace pn {

enum class ClaimStatus { Pass, Fail, Flagged };

// One recomputed numeric claim. Pass means expected and computed agree
// exactly. Flagged is reserved for the documented discrepancies between a
// source statement's printed form and the exact value: those fail loudly
// but distinguishably from implementation bugs.
struct VerificationItem {
    std::string id;
    std::string location;  // where the claim is stated
    std::string expected;
    std::string computed;
    ClaimStatus status = ClaimStatus::Fail;
};

const char* to_string(ClaimStatus s);

// Recomputes the full fixed claim suite, ordered by id. Failures are data,
// not exceptions.
std::vector<VerificationItem> verify_claims();

bool any_failed(const std::vector<VerificationItem>& items);

}  // namespace pn

#endif
