#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "galpoint/codec.hpp"
#include "galpoint/error.hpp"
#include "galpoint/galois.hpp"
#include "galpoint/scenario.hpp"

namespace galpoint {

inline constexpr int kCertificateSchema = 1;

enum ExitCode : int { kExitOk = 0, kExitRefuted = 1, kExitInvalid = 2, kExitLimitation = 3, kExitInternal = 4 };

int exit_code(ErrorClass c);

struct Command {
    std::string name{};  // check, construct, extend, equiv, oracle, verify
    std::string scenario{};
    std::optional<std::string> cert{};
    std::optional<std::uint64_t> seed{};
    std::optional<std::uint32_t> working_ext{};
    std::optional<std::size_t> cap{};
    bool json = false;
};

/// Runs one command; the summary (or the certificate with `json`) goes to
/// `out`, diagnostics to `err`.
int run_command(const Command& cmd, std::ostream& out, std::ostream& err);

/// Outcome of a command before it is printed.
struct Outcome {
    json certificate;
    std::vector<std::string> summary;
    int exit = kExitOk;
};

Outcome run_check(const Scenario& s, std::uint64_t seed);
Outcome run_construct(const Scenario& s, std::uint64_t seed);
Outcome run_extend(const Scenario& s, std::uint64_t seed);
Outcome run_equiv(const Scenario& s, std::uint64_t seed_a, std::uint64_t seed_b);
Outcome run_oracle(const Scenario& s, std::uint64_t seed);

json encode(const ConditionReport& r);
json encode(const EmbeddingModel& m);
json encode(const Construction& c);
json encode(const GaloisCertificate& c);
json encode(const FiberTranscript& t);
json encode(const ExtensionReport& r);
json encode(const AutGroup& G);

struct VerifyResult {
    std::vector<std::string> checked;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

/// Re-checks the identities recorded in a certificate without searching.
/// Errors: PARSE_ERROR and FIELD_MISMATCH for malformed certificates.
VerifyResult verify_certificate(const json& cert);

}  // namespace galpoint
