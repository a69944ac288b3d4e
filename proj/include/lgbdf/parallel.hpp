#pragma once

#include <cstddef>
#include <type_traits>

namespace lgbdf {

// Global worker count for element/node loops.  All parallel loops write to
// disjoint, index-addressed slots and all reductions run in fixed order, so
// results are bit-identical for every thread count.
void set_num_threads(int n);
int num_threads();

namespace detail {
void parallel_for_impl(std::size_t begin, std::size_t end, void* ctx,
                       void (*body)(void*, std::size_t, std::size_t));
}

template <typename F>
void parallel_for(std::size_t begin, std::size_t end, F&& f) {
    detail::parallel_for_impl(begin, end, const_cast<void*>(static_cast<const void*>(&f)),
                              [](void* ctx, std::size_t lo, std::size_t hi) {
                                  auto& fn = *static_cast<std::remove_reference_t<F>*>(ctx);
                                  for (std::size_t i = lo; i < hi; ++i) fn(i);
                              });
}

}  // namespace lgbdf
