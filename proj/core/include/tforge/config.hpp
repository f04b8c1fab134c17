#pragma once

#include <atomic>
#include <cstdint>

namespace tforge::config {

// Runtime caps for the enumeration kernels. Defaults keep every sweep at
// desk scale; callers (CLI, acceptance suite) may raise them.
struct Caps {
    std::int64_t cells = 24;          // max diagram size for counting/enumeration
    std::int64_t weight = 30;         // max series truncation order
    std::int64_t excited = 1'000'000; // max number of excited diagrams
    std::int64_t box = 512;           // max a*b*c for boxed plane partitions
};

namespace detail {
inline std::atomic<std::int64_t> cells{24};
inline std::atomic<std::int64_t> weight{30};
inline std::atomic<std::int64_t> excited{1'000'000};
inline std::atomic<std::int64_t> box{512};
} // namespace detail

inline Caps caps() {
    return Caps{detail::cells.load(), detail::weight.load(), detail::excited.load(),
                detail::box.load()};
}

inline void set_caps(const Caps& c) {
    detail::cells.store(c.cells);
    detail::weight.store(c.weight);
    detail::excited.store(c.excited);
    detail::box.store(c.box);
}

inline void set_cell_cap(std::int64_t v) { detail::cells.store(v); }
inline void set_weight_cap(std::int64_t v) { detail::weight.store(v); }

} // namespace tforge::config
