#ifndef TAUT_MEMO_HPP
#define TAUT_MEMO_HPP

#include <cstdlib>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>

namespace taut {

// Entry cap shared by all memo tables, read once from TAUT_CACHE_CAP (0 = unlimited).
inline std::size_t memo_cap() {
    static const std::size_t cap = [] {
        const char* s = std::getenv("TAUT_CACHE_CAP");
        return s ? static_cast<std::size_t>(std::strtoull(s, nullptr, 10)) : std::size_t{0};
    }();
    return cap;
}

// Thread-safe memo table; a table that reaches the cap is flushed.
template <class K, class V>
class Memo {
public:
    std::optional<V> find(const K& k) const {
        std::shared_lock lk(mu_);
        auto it = map_.find(k);
        if (it == map_.end()) return std::nullopt;
        return it->second;
    }
    void insert(const K& k, const V& v) {
        std::unique_lock lk(mu_);
        std::size_t cap = memo_cap();
        if (cap && map_.size() >= cap) map_.clear();
        map_.emplace(k, v);
    }
    void clear() {
        std::unique_lock lk(mu_);
        map_.clear();
    }
    std::size_t size() const {
        std::shared_lock lk(mu_);
        return map_.size();
    }

private:
    mutable std::shared_mutex mu_;
    std::map<K, V> map_;
};

}  // namespace taut

#endif
