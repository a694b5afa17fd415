#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "uma/snapshot.hpp"

namespace uma {

// Binary snapshot dump, all integers little-endian:
//
//   offset 0   8 bytes  magic "UMASNAP1"
//   offset 8   u32      |Sigma| (literal count, 2 * pairs + 2)
//   offset 12  u32      entry width: 4 = extended-natural ranks, 8 = binary64 weights
//   offset 16  |Sigma|^2 entries, row-major; rank infinity is 0xFFFFFFFF
//   then       u32 pair count, and per pair a u32 byte length plus the query name
//   then, width 4: u32 delta, u8 initialized, u64 update count
//         width 8: |Sigma|^2 binary64 tau table, u8 schedule (0 empirical,
//                  1 fixed), binary64 q, u64 steps
class CheckpointError : public std::runtime_error {
public:
    CheckpointError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at byte offset " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

void write_checkpoint(std::ostream& out, const Snapshot& s);
// Throws CheckpointError on malformed or truncated input.
Snapshot read_checkpoint(std::istream& in);

void save_checkpoint(const std::string& path, const Snapshot& s);
Snapshot load_checkpoint(const std::string& path);

}  // namespace uma
