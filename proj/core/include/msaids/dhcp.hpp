#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "msaids/net_types.hpp"

namespace msaids::dhcp {

enum class MsgType : uint8_t {
    Discover = 1,
    Offer = 2,
    Request = 3,
    Ack = 5,
    Nak = 6,
    Release = 7,
};

const char* to_string(MsgType t);
std::optional<MsgType> msg_type_from_string(const std::string& s);

// True for messages a DHCP server originates (Offer/Ack/Nak).
bool is_server_message(MsgType t);

// The message subset carried on the wire (see docs/wire-format.md).
//
// Invariants enforced by validate()/encode():
//   - Offer and Ack carry server_id.
//   - Discover and Request carry no your_ip.
//   - lease_secs, when present, is > 0.
struct Message {
    MsgType type = MsgType::Discover;
    uint32_t xid = 0;
    Mac client_mac{};
    std::optional<Ipv4> your_ip;
    std::optional<Ipv4> server_id;  // option 54
    std::optional<Ipv4> gateway;    // option 3
    std::vector<Ipv4> dns;          // option 6
    std::optional<uint32_t> lease_secs; // option 51

    bool operator==(const Message&) const = default;
};

// Throws InvariantViolation when a field required for the message type is
// missing or inconsistent.
void validate(const Message& msg);

// Deterministic fixed-layout encoding; options are emitted in ascending
// option-code order. Throws InvariantViolation on an invalid message.
std::vector<uint8_t> encode(const Message& msg);

// Decodes a well-formed buffer back into a Message. Unknown option codes are
// skipped. Throws MalformedPacket on truncation, bad magic, an invalid
// message-type code, or a decoded message that violates Message invariants.
// Never crashes on arbitrary input.
Message decode(std::span<const uint8_t> bytes);

// Known-good wire vectors; mirrored by tests/data/dhcp_golden.jsonl and
// replayed by the CLI selftest.
struct GoldenVector {
    const char* name;
    Message message;
    const char* hex;
};
const std::vector<GoldenVector>& golden_vectors();

} // namespace msaids::dhcp
