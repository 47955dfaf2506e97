#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ldpcb/galois.hpp"

namespace ldpcb {

/// Largest codebook size (q^k) the exhaustive routines will walk.
inline constexpr double kExhaustiveGuard = 1e7;

/// Dense M' x N parity-check matrix over GF(q), entries stored row-major.
class ParityCheckMatrix {
public:
    ParityCheckMatrix(std::size_t rows, std::size_t cols, std::uint32_t q, std::vector<std::uint8_t> entries);
    ParityCheckMatrix(std::size_t rows, std::size_t cols, std::uint32_t q);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::uint32_t field_order() const noexcept { return q_; }
    std::uint8_t at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, std::uint8_t v);
    std::span<const std::uint8_t> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }

    /// Header `N M' q`, then M' lines of N integers.
    std::string to_text() const;
    static ParityCheckMatrix parse(const std::string& text);

    friend bool operator==(const ParityCheckMatrix&, const ParityCheckMatrix&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::uint32_t q_;
    std::vector<std::uint8_t> entries_;
};

/// S = H r^T over GF(q).
std::vector<std::uint8_t> syndrome(const ParityCheckMatrix& h, std::span<const std::uint8_t> r);

std::size_t rank(const ParityCheckMatrix& h);

/// Basis of the null space of H (the code), one vector per free column of the
/// reduced row echelon form.
std::vector<std::vector<std::uint8_t>> null_space_basis(const ParityCheckMatrix& h);

/// Walks every codeword in mixed-radix order of the information digits and
/// hands its Hamming weight to `visit`; stops early when `visit` returns false.
/// Throws Guard when q^k exceeds kExhaustiveGuard.
void for_each_codeword_weight(const ParityCheckMatrix& h, const std::function<bool(std::size_t)>& visit);

/// Minimum Hamming weight over nonzero codewords; nullopt for the zero code.
std::optional<std::size_t> min_distance_exhaustive(const ParityCheckMatrix& h);

}  // namespace ldpcb
