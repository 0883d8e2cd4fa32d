#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace symtc {

/// Dense boolean relation on {0..size-1}. Row-major, one byte per pair.
class Relation {
public:
    Relation() = default;
    explicit Relation(std::size_t size) : size_(size), bits_(size * size, 0) {}

    static Relation identity(std::size_t size) {
        Relation r(size);
        for (std::size_t i = 0; i < size; ++i) r.set(i, i);
        return r;
    }

    std::size_t size() const noexcept { return size_; }

    bool operator()(std::size_t a, std::size_t b) const { return bits_[a * size_ + b] != 0; }
    void set(std::size_t a, std::size_t b, bool value = true) { bits_[a * size_ + b] = value ? 1 : 0; }

    /// Warshall closure; adds reflexive pairs as well.
    void close_reflexive_transitive() {
        for (std::size_t i = 0; i < size_; ++i) set(i, i);
        for (std::size_t k = 0; k < size_; ++k) {
            for (std::size_t i = 0; i < size_; ++i) {
                if (!(*this)(i, k)) continue;
                const std::uint8_t* row_k = &bits_[k * size_];
                std::uint8_t* row_i = &bits_[i * size_];
                for (std::size_t j = 0; j < size_; ++j) row_i[j] |= row_k[j];
            }
        }
    }

    bool is_antisymmetric() const {
        for (std::size_t i = 0; i < size_; ++i)
            for (std::size_t j = i + 1; j < size_; ++j)
                if ((*this)(i, j) && (*this)(j, i)) return false;
        return true;
    }

    bool is_reflexive() const {
        for (std::size_t i = 0; i < size_; ++i)
            if (!(*this)(i, i)) return false;
        return true;
    }

    bool is_transitive() const {
        for (std::size_t i = 0; i < size_; ++i)
            for (std::size_t k = 0; k < size_; ++k) {
                if (!(*this)(i, k)) continue;
                for (std::size_t j = 0; j < size_; ++j)
                    if ((*this)(k, j) && !(*this)(i, j)) return false;
            }
        return true;
    }

    bool operator==(const Relation&) const = default;

private:
    std::size_t size_ = 0;
    std::vector<std::uint8_t> bits_;
};

} // namespace symtc
