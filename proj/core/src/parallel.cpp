#include "nonabcoh/parallel.hpp"

#include <cstdlib>
#include <future>
#include <thread>

namespace nonabcoh {

int thread_cap() {
    if (const char* env = std::getenv("NONABCOH_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void run_tasks(std::vector<std::function<void()>> tasks) {
    if (thread_cap() <= 1 || tasks.size() <= 1) {
        for (auto& t : tasks) t();
        return;
    }
    std::vector<std::future<void>> futures;
    futures.reserve(tasks.size());
    for (auto& t : tasks) futures.push_back(std::async(std::launch::async, std::move(t)));
    for (auto& f : futures) f.get();
}

} // namespace nonabcoh
