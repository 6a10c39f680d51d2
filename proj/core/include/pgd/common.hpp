#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pgd {

using Bits = boost::dynamic_bitset<std::uint64_t>;

// Malformed input documents and dangling references.
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A mathematical precondition failed or two methods disagreed.
struct MathError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised by Helly computations on spaces where the empty set is not closed.
struct EmptyNotClosed : MathError {
  EmptyNotClosed() : MathError("empty set not closed") {}
};

struct VectorHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL ^ v.size();
    for (int x : v) {
      h ^= static_cast<std::size_t>(static_cast<unsigned>(x)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

// Worker count from PGD_THREADS, else hardware concurrency.
int thread_count();

// Runs fn(i) for i in [0, n); fn must be safe to call concurrently.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

std::string join(const std::vector<std::string>& parts, const std::string& sep);
std::string format_ints(const std::vector<int>& v);

}  // namespace pgd
