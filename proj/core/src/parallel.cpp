#include "haantjes/parallel.hpp"
#include <atomic>
#include <cstdlib>
#include <thread>

namespace haantjes {

std::size_t thread_count()
{
    std::size_t n = 0;
    if(const char* env = std::getenv("HAANTJES_LAB_THREADS")) n = std::strtoul(env, nullptr, 10);
    if(n == 0) n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : n;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body)
{
    const std::size_t workers = std::min(thread_count(), n);
    if(workers <= 1) {
        for(std::size_t i = 0; i < n; i++) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for(std::size_t w = 0; w < workers; w++)
        pool.emplace_back([&] {
            for(std::size_t i = next++; i < n; i = next++) body(i);
        });
    for(auto& t : pool) t.join();
}

}  // namespace haantjes
