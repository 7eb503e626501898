#pragma once

#include <atomic>
#include <bit>
#include <cstdint>
#include <memory>
#include <vector>

namespace grundy {

/// Open-addressing hash table from dominated-state keys to best-remaining
/// lengths. A slot packs (key << 8) | (value + 1) into one uint64, so keys
/// must fit 56 bits and values 0..254; 0 marks an empty slot. Lookups and
/// inserts are lock-free, which lets top-level search branches share one
/// table. Growth is only legal while a single thread owns the table.
class MemoTable {
public:
    explicit MemoTable(size_t capacity_pow2, bool growable)
        : growable_(growable) {
        allocate(capacity_pow2);
    }

    /// Best remaining length for key, or -1 when absent.
    int find(uint64_t key) const {
        const uint64_t probe = key << 8;
        size_t i = hash(key) & mask_;
        for (;;) {
            uint64_t slot = slots_[i].load(std::memory_order_acquire);
            if (slot == 0) return -1;
            if ((slot & ~uint64_t{0xff}) == probe)
                return static_cast<int>(slot & 0xff) - 1;
            i = (i + 1) & mask_;
        }
    }

    /// Stores key -> value. Returns false when the table is full and cannot
    /// grow; the caller then simply continues unmemoized. Concurrent inserts
    /// of the same key are benign because every caller stores the same exact
    /// value.
    bool insert(uint64_t key, int value) {
        if (growable_ && (size_.load(std::memory_order_relaxed) + 1) * 2 > capacity_)
            grow();
        const uint64_t packed = (key << 8) | static_cast<uint64_t>(value + 1);
        size_t i = hash(key) & mask_;
        for (size_t steps = 0; steps <= mask_; ++steps) {
            uint64_t slot = slots_[i].load(std::memory_order_acquire);
            if (slot == 0) {
                uint64_t expected = 0;
                if (slots_[i].compare_exchange_strong(expected, packed,
                                                      std::memory_order_acq_rel)) {
                    size_.fetch_add(1, std::memory_order_relaxed);
                    return true;
                }
                slot = expected;
            }
            if ((slot & ~uint64_t{0xff}) == (key << 8)) return true;
            i = (i + 1) & mask_;
        }
        return false;
    }

    size_t size() const { return size_.load(std::memory_order_relaxed); }
    size_t capacity() const { return capacity_; }

private:
    static uint64_t hash(uint64_t x) {
        // splitmix64 finalizer
        x += 0x9e3779b97f4a7c15;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9;
        x = (x ^ (x >> 27)) * 0x94d049bb133111eb;
        return x ^ (x >> 31);
    }

    void allocate(size_t capacity_pow2) {
        capacity_ = std::bit_ceil(capacity_pow2 < 16 ? size_t{16} : capacity_pow2);
        mask_ = capacity_ - 1;
        storage_ = std::make_unique<std::atomic<uint64_t>[]>(capacity_);
        slots_ = storage_.get();
        for (size_t i = 0; i < capacity_; ++i)
            slots_[i].store(0, std::memory_order_relaxed);
    }

    void grow() {
        auto old_storage = std::move(storage_);
        auto* old_slots = old_storage.get();
        size_t old_capacity = capacity_;
        allocate(capacity_ * 2);
        for (size_t i = 0; i < old_capacity; ++i) {
            uint64_t slot = old_slots[i].load(std::memory_order_relaxed);
            if (slot == 0) continue;
            uint64_t key = slot >> 8;
            size_t j = hash(key) & mask_;
            while (slots_[j].load(std::memory_order_relaxed) != 0) j = (j + 1) & mask_;
            slots_[j].store(slot, std::memory_order_relaxed);
        }
    }

    bool growable_;
    size_t capacity_ = 0;
    size_t mask_ = 0;
    std::unique_ptr<std::atomic<uint64_t>[]> storage_;
    std::atomic<uint64_t>* slots_ = nullptr;
    std::atomic<size_t> size_{0};
};

}  // namespace grundy
