#include "dcdsum/sumset_count.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <stdexcept>
#include <thread>
#include <vector>

namespace dcdsum {
namespace {

std::uint64_t count_window(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b,
                           bool same_set, std::int64_t lo, std::uint64_t width,
                           std::vector<std::uint64_t>& words) {
  std::fill(words.begin(), words.end(), 0);
  const std::int64_t hi = lo + static_cast<std::int64_t>(width);  // exclusive
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::int64_t x = a[i];
    auto first = std::lower_bound(b.begin(), b.end(), lo - x);
    if (same_set) first = std::max(first, b.begin() + static_cast<std::ptrdiff_t>(i));
    for (auto it = first; it != b.end(); ++it) {
      const std::int64_t s = x + *it;
      if (s >= hi) break;
      const auto off = static_cast<std::uint64_t>(s - lo);
      words[off >> 6] |= std::uint64_t{1} << (off & 63);
    }
  }
  std::uint64_t total = 0;
  for (std::uint64_t w : words) total += static_cast<std::uint64_t>(std::popcount(w));
  return total;
}

}  // namespace

std::uint64_t sumset_size_streaming(const IntegerSet& a, const IntegerSet& b,
                                    const StreamingCountOptions& options) {
  if (options.window_bits == 0 || options.window_bits % 64 != 0) {
    throw std::invalid_argument("window_bits must be a positive multiple of 64");
  }
  auto na = a.narrowed();
  auto nb = b.narrowed();
  if (!na || !nb) return sumset(a, b).size();

  const bool same_set = (a == b);
  const std::int64_t lo = na->front() + nb->front();
  const std::int64_t hi = na->back() + nb->back();
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t width = std::min(options.window_bits, (span + 63) / 64 * 64);
  const std::uint64_t windows = (span + width - 1) / width;

  unsigned workers = options.workers != 0 ? options.workers : std::thread::hardware_concurrency();
  workers = static_cast<unsigned>(std::clamp<std::uint64_t>(workers, 1, windows));

  std::vector<std::uint64_t> partial(windows, 0);
  std::atomic<std::uint64_t> next{0};
  auto work = [&] {
    std::vector<std::uint64_t> words(width / 64);
    for (std::uint64_t w = next++; w < windows; w = next++) {
      const std::int64_t start = lo + static_cast<std::int64_t>(w * width);
      partial[w] = count_window(*na, *nb, same_set, start, width, words);
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned i = 1; i < workers; ++i) pool.emplace_back(work);
    work();
  }
  std::uint64_t total = 0;
  for (std::uint64_t p : partial) total += p;
  return total;
}

}  // namespace dcdsum
