#include "msaids/dhcp.hpp"

#include <cstring>

#include "msaids/errors.hpp"

namespace msaids::dhcp {

namespace {

constexpr uint8_t kOpClient = 1;
constexpr uint8_t kOpServer = 2;
constexpr uint8_t kMagic[4] = {0x63, 0x82, 0x53, 0x63};

constexpr uint8_t kOptGateway = 3;
constexpr uint8_t kOptDns = 6;
constexpr uint8_t kOptLease = 51;
constexpr uint8_t kOptMsgType = 53;
constexpr uint8_t kOptServerId = 54;
constexpr uint8_t kOptPad = 0;
constexpr uint8_t kOptEnd = 255;

constexpr size_t kHeaderSize = 19;

bool is_client_message(MsgType t) {
    return t == MsgType::Discover || t == MsgType::Request || t == MsgType::Release;
}

void put_u32(std::vector<uint8_t>& out, uint32_t v) {
    out.push_back(static_cast<uint8_t>(v >> 24));
    out.push_back(static_cast<uint8_t>(v >> 16));
    out.push_back(static_cast<uint8_t>(v >> 8));
    out.push_back(static_cast<uint8_t>(v));
}

uint32_t get_u32(std::span<const uint8_t> b, size_t at) {
    return (uint32_t(b[at]) << 24) | (uint32_t(b[at + 1]) << 16) |
           (uint32_t(b[at + 2]) << 8) | uint32_t(b[at + 3]);
}

std::optional<MsgType> msg_type_from_code(uint8_t code) {
    switch (code) {
        case 1: return MsgType::Discover;
        case 2: return MsgType::Offer;
        case 3: return MsgType::Request;
        case 5: return MsgType::Ack;
        case 6: return MsgType::Nak;
        case 7: return MsgType::Release;
        default: return std::nullopt;
    }
}

} // namespace

const char* to_string(MsgType t) {
    switch (t) {
        case MsgType::Discover: return "discover";
        case MsgType::Offer: return "offer";
        case MsgType::Request: return "request";
        case MsgType::Ack: return "ack";
        case MsgType::Nak: return "nak";
        case MsgType::Release: return "release";
    }
    return "?";
}

std::optional<MsgType> msg_type_from_string(const std::string& s) {
    if (s == "discover") return MsgType::Discover;
    if (s == "offer") return MsgType::Offer;
    if (s == "request") return MsgType::Request;
    if (s == "ack") return MsgType::Ack;
    if (s == "nak") return MsgType::Nak;
    if (s == "release") return MsgType::Release;
    return std::nullopt;
}

bool is_server_message(MsgType t) {
    return t == MsgType::Offer || t == MsgType::Ack || t == MsgType::Nak;
}

void validate(const Message& msg) {
    if ((msg.type == MsgType::Offer || msg.type == MsgType::Ack) && !msg.server_id) {
        throw InvariantViolation(std::string(to_string(msg.type)) +
                                 " must carry server_id");
    }
    if ((msg.type == MsgType::Discover || msg.type == MsgType::Request) && msg.your_ip) {
        throw InvariantViolation(std::string(to_string(msg.type)) +
                                 " must not carry your_ip");
    }
    // 0.0.0.0 marks "unset" in the fixed header, so a present your_ip must be
    // non-zero to keep encoding injective.
    if (msg.your_ip && msg.your_ip->value == 0) {
        throw InvariantViolation("your_ip must be non-zero when present");
    }
    if (msg.lease_secs && *msg.lease_secs == 0) {
        throw InvariantViolation("lease_secs must be > 0 when present");
    }
}

std::vector<uint8_t> encode(const Message& msg) {
    validate(msg);

    std::vector<uint8_t> out;
    out.reserve(kHeaderSize + 32);

    out.push_back(is_client_message(msg.type) ? kOpClient : kOpServer);
    put_u32(out, msg.xid);
    out.insert(out.end(), msg.client_mac.bytes.begin(), msg.client_mac.bytes.end());
    put_u32(out, msg.your_ip ? msg.your_ip->value : 0);
    out.insert(out.end(), std::begin(kMagic), std::end(kMagic));

    // Options in ascending code order: 3, 6, 51, 53, 54.
    if (msg.gateway) {
        out.push_back(kOptGateway);
        out.push_back(4);
        put_u32(out, msg.gateway->value);
    }
    if (!msg.dns.empty()) {
        out.push_back(kOptDns);
        out.push_back(static_cast<uint8_t>(msg.dns.size() * 4));
        for (Ipv4 ip : msg.dns) put_u32(out, ip.value);
    }
    if (msg.lease_secs) {
        out.push_back(kOptLease);
        out.push_back(4);
        put_u32(out, *msg.lease_secs);
    }
    out.push_back(kOptMsgType);
    out.push_back(1);
    out.push_back(static_cast<uint8_t>(msg.type));
    if (msg.server_id) {
        out.push_back(kOptServerId);
        out.push_back(4);
        put_u32(out, msg.server_id->value);
    }
    out.push_back(kOptEnd);
    return out;
}

Message decode(std::span<const uint8_t> bytes) {
    if (bytes.size() < kHeaderSize) {
        throw MalformedPacket("truncated header");
    }
    const uint8_t op = bytes[0];
    if (op != kOpClient && op != kOpServer) {
        throw MalformedPacket("bad op");
    }
    if (std::memcmp(bytes.data() + 15, kMagic, 4) != 0) {
        throw MalformedPacket("bad magic");
    }

    Message msg;
    msg.xid = get_u32(bytes, 1);
    std::copy(bytes.begin() + 5, bytes.begin() + 11, msg.client_mac.bytes.begin());
    if (uint32_t yi = get_u32(bytes, 11); yi != 0) msg.your_ip = Ipv4(yi);

    std::optional<MsgType> type;
    size_t i = kHeaderSize;
    bool terminated = false;
    while (i < bytes.size()) {
        const uint8_t code = bytes[i++];
        if (code == kOptPad) continue;
        if (code == kOptEnd) {
            terminated = true;
            break;
        }
        if (i >= bytes.size()) throw MalformedPacket("option truncated at length");
        const uint8_t len = bytes[i++];
        if (i + len > bytes.size()) throw MalformedPacket("option value overruns buffer");
        switch (code) {
            case kOptGateway:
                if (len != 4) throw MalformedPacket("gateway option length");
                msg.gateway = Ipv4(get_u32(bytes, i));
                break;
            case kOptDns: {
                if (len == 0 || len % 4 != 0) throw MalformedPacket("dns option length");
                msg.dns.clear();
                for (size_t off = 0; off < len; off += 4) {
                    msg.dns.push_back(Ipv4(get_u32(bytes, i + off)));
                }
                break;
            }
            case kOptLease:
                if (len != 4) throw MalformedPacket("lease option length");
                msg.lease_secs = get_u32(bytes, i);
                break;
            case kOptMsgType: {
                if (len != 1) throw MalformedPacket("msg-type option length");
                type = msg_type_from_code(bytes[i]);
                if (!type) throw MalformedPacket("invalid msg_type code");
                break;
            }
            case kOptServerId:
                if (len != 4) throw MalformedPacket("server-id option length");
                msg.server_id = Ipv4(get_u32(bytes, i));
                break;
            default:
                break; // unknown option: skip
        }
        i += len;
    }
    if (!terminated) throw MalformedPacket("missing end option");
    if (!type) throw MalformedPacket("missing msg-type option");
    msg.type = *type;

    const uint8_t expected_op = is_client_message(msg.type) ? kOpClient : kOpServer;
    if (op != expected_op) throw MalformedPacket("op contradicts msg_type");

    try {
        validate(msg);
    } catch (const InvariantViolation& e) {
        throw MalformedPacket(std::string("invariant: ") + e.what());
    }
    return msg;
}

const std::vector<GoldenVector>& golden_vectors() {
    static const std::vector<GoldenVector> vectors = [] {
        auto mac = [](const char* s) { return *Mac::parse(s); };
        auto ip = [](const char* s) { return *Ipv4::parse(s); };

        std::vector<GoldenVector> v;

        Message discover;
        discover.type = MsgType::Discover;
        discover.xid = 1;
        discover.client_mac = mac("02:00:00:00:00:01");
        v.push_back({"discover-minimal", discover,
                     "01000000010200000000010000000063825363350101ff"});

        Message offer;
        offer.type = MsgType::Offer;
        offer.xid = 7;
        offer.client_mac = mac("02:11:22:33:44:55");
        offer.your_ip = ip("10.0.0.50");
        offer.server_id = ip("10.0.0.1");
        offer.gateway = ip("10.0.0.1");
        v.push_back({"offer-basic", offer,
                     "02000000070211223344550a0000326382536303040a0000"
                     "0135010236040a000001ff"});

        Message ack;
        ack.type = MsgType::Ack;
        ack.xid = 0xdeadbeef;
        ack.client_mac = mac("aa:bb:cc:dd:ee:ff");
        ack.your_ip = ip("192.168.1.100");
        ack.server_id = ip("192.168.1.1");
        ack.gateway = ip("192.168.1.1");
        ack.dns = {ip("8.8.8.8"), ip("1.1.1.1")};
        ack.lease_secs = 3600;
        v.push_back({"ack-full", ack,
                     "02deadbeefaabbccddeeffc0a80164638253630304c0a801"
                     "0106080808080801010101330400000e103501053604c0a8"
                     "0101ff"});

        Message nak;
        nak.type = MsgType::Nak;
        nak.xid = 0x1234;
        nak.client_mac = mac("02:00:00:00:00:99");
        nak.server_id = ip("10.0.0.2");
        v.push_back({"nak-with-server-id", nak,
                     "0200001234020000000099000000006382536335010636"
                     "040a000002ff"});

        Message release;
        release.type = MsgType::Release;
        release.xid = 0x55;
        release.client_mac = mac("02:ab:cd:ef:01:23");
        release.your_ip = ip("10.0.1.77");
        release.server_id = ip("10.0.0.1");
        v.push_back({"release-with-lease-addr", release,
                     "010000005502abcdef01230a00014d63825363350107360"
                     "40a000001ff"});

        return v;
    }();
    return vectors;
}

} // namespace msaids::dhcp
