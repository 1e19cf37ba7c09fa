#pragma once

#include <cstddef>
#include <cstdint>

#include "dcdsum/integer_set.hpp"

namespace dcdsum {

struct StreamingCountOptions {
  /// Width of one counting window in bits of the value range. Each worker
  /// holds one window bitmap of this many bits.
  std::uint64_t window_bits = std::uint64_t{1} << 27;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned workers = 0;
};

/// |A + B| without materializing the sumset. The value range is cut into
/// fixed windows; each window is filled by walking, for every a, the run of b
/// landing inside it, then popcounted. Memory is workers * window_bits / 8
/// bytes regardless of |A||B|. The result does not depend on the worker
/// count. Sets with elements outside the machine-word range fall back to
/// exact materialization.
std::uint64_t sumset_size_streaming(const IntegerSet& a, const IntegerSet& b,
                                    const StreamingCountOptions& options = {});

}  // namespace dcdsum
