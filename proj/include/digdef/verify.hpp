#ifndef DIGDEF_VERIFY_HPP
#define DIGDEF_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "digdef/universe.hpp"

namespace digdef {
namespace verify {

enum class Status { pass, pass_with_caveat, skipped_by_bound, fail };

std::string status_name(Status s);

struct Mismatch {
    std::vector<std::string> keys;  // canonical keys ("n:hex") of the tuple
    std::string detail;             // failed clause or expectation
};

struct VerificationReport {
    std::string id;
    Status status = Status::pass;
    int bound = 0;
    std::uint64_t checked = 0;
    std::vector<Mismatch> mismatches;
    std::uint64_t caveats = 0;
    std::uint64_t millis = 0;
};

struct LemmaEntry {
    std::string id;
    int min_bound;
    std::string bound_note;  // why the chosen quantifier bounds are enough
    void (*run)(const Universe&, VerificationReport&);
};

const std::vector<LemmaEntry>& registry();

/// Runs one entry; throws std::invalid_argument on an unknown id.
VerificationReport verify(const std::string& id, const Universe& u);

VerificationReport verify_raising(const Universe& u);
VerificationReport verify_loop_addition(const Universe& u);

/// Runs every entry, in registry order. Entries whose minimum bound exceeds
/// u.bound report skipped status. The result is identical for any thread
/// count (wall-times aside).
std::vector<VerificationReport> verify_all(const Universe& u, int threads = 1);

/// JSON array of {id, status, N, checked, mismatches, caveats, millis}.
/// with_millis=false drops the wall-time field, leaving only the
/// deterministic part of the report.
std::string reports_to_json(const std::vector<VerificationReport>& reports,
                            bool with_millis = true);

bool any_fail(const std::vector<VerificationReport>& reports);

}  // namespace verify
}  // namespace digdef

#endif
