#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace dpd {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Hard transport failures: unknown ranks, closed backends, broken sockets.
class TransportError : public Error {
public:
    using Error::Error;
};

// A blocking receive that can never be satisfied: the peer terminated (or the
// whole execution quiesced) with no matching frame pending.
class StarvedReceiveError : public TransportError {
public:
    StarvedReceiveError(int src, std::uint32_t tag, const std::string& detail)
        : TransportError(format(src, tag, detail)), src_(src), tag_(tag) {}

    int src() const { return src_; }
    std::uint32_t tag() const { return tag_; }

private:
    static std::string format(int src, std::uint32_t tag, const std::string& detail) {
        std::ostringstream os;
        os << "starved receive from src=" << src << " tag=" << tag << ": " << detail;
        return os.str();
    }

    int src_;
    std::uint32_t tag_;
};

struct BlockedRank {
    int rank;
    int waiting_src;
    std::uint32_t waiting_tag;
};

// Raised by the simulated backend when the execution reaches global quiescence
// with at least one rank still blocked in a receive.
class DeadlockError : public Error {
public:
    explicit DeadlockError(std::vector<BlockedRank> blocked)
        : Error(format(blocked)), blocked_(std::move(blocked)) {}

    const std::vector<BlockedRank>& blocked() const { return blocked_; }

private:
    static std::string format(const std::vector<BlockedRank>& blocked) {
        std::ostringstream os;
        os << "deadlock: " << blocked.size() << " blocked rank(s):";
        for (const auto& b : blocked) {
            os << " [rank " << b.rank << " waits on src=" << b.waiting_src
               << " tag=" << b.waiting_tag << "]";
        }
        return os.str();
    }

    std::vector<BlockedRank> blocked_;
};

}  // namespace dpd
