#pragma once

#include <stdexcept>
#include <string>

namespace msaids {

// Base class for every error this library raises on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A message violates a DhcpMessage invariant (e.g. Offer without server_id).
struct InvariantViolation : Error { using Error::Error; };

// Bytes could not be decoded into a DHCP message.
struct MalformedPacket : Error { using Error::Error; };

// classify_server_message was handed a client-originated message.
struct NotAServerMessage : Error { using Error::Error; };

// detect_offer_race was handed offers from more than one transaction.
struct MixedXid : Error { using Error::Error; };

struct DuplicateRuleId : Error { using Error::Error; };
struct BadPattern : Error { using Error::Error; };

struct OutOfOrderEvent : Error { using Error::Error; };
struct StaleVersion : Error { using Error::Error; };

struct InvalidSpec : Error { using Error::Error; };
struct MalformedEventFile : Error { using Error::Error; };

struct UndefinedMetric : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct StrictModeViolation : Error { using Error::Error; };
struct EmptyWindowSet : Error { using Error::Error; };
struct TruthMismatch : Error { using Error::Error; };

struct PolicyParseError : Error { using Error::Error; };
struct PolicyInvariantError : Error { using Error::Error; };

} // namespace msaids
