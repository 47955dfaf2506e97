#include "ldpcb/linear_code.hpp"

#include <cmath>
#include <sstream>

#include "ldpcb/error.hpp"

namespace ldpcb {

ParityCheckMatrix::ParityCheckMatrix(std::size_t rows, std::size_t cols, std::uint32_t q,
                                     std::vector<std::uint8_t> entries)
    : rows_(rows), cols_(cols), q_(q), entries_(std::move(entries)) {
    if (!is_supported_field(q)) fail(ErrorKind::Unsupported, "unsupported field order " + std::to_string(q));
    require(cols >= 1, "parity-check matrix needs at least one column");
    require(entries_.size() == rows * cols, "parity-check entries do not match the declared dimensions");
    for (auto v : entries_) require(v < q, "parity-check entry outside GF(q)");
}

ParityCheckMatrix::ParityCheckMatrix(std::size_t rows, std::size_t cols, std::uint32_t q)
    : ParityCheckMatrix(rows, cols, q, std::vector<std::uint8_t>(rows * cols, 0)) {}

void ParityCheckMatrix::set(std::size_t r, std::size_t c, std::uint8_t v) {
    require(r < rows_ && c < cols_, "parity-check index out of range");
    require(v < q_, "parity-check entry outside GF(q)");
    entries_[r * cols_ + c] = v;
}

std::string ParityCheckMatrix::to_text() const {
    std::ostringstream out;
    out << cols_ << ' ' << rows_ << ' ' << q_ << '\n';
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) out << (c ? " " : "") << static_cast<unsigned>(at(r, c));
        out << '\n';
    }
    return out.str();
}

ParityCheckMatrix ParityCheckMatrix::parse(const std::string& text) {
    std::istringstream in(text);
    long long n = 0, m = 0, q = 0;
    if (!(in >> n >> m >> q) || n < 1 || m < 0 || q < 2)
        fail(ErrorKind::Parse, "matrix header must be `N M q` with N >= 1, M >= 0, q >= 2");
    std::vector<std::uint8_t> entries;
    entries.reserve(static_cast<std::size_t>(n * m));
    for (long long i = 0; i < n * m; ++i) {
        long long v = 0;
        if (!(in >> v)) fail(ErrorKind::Parse, "matrix body has fewer than N*M entries");
        if (v < 0 || v >= q) fail(ErrorKind::Parse, "matrix entry " + std::to_string(v) + " outside GF(q)");
        entries.push_back(static_cast<std::uint8_t>(v));
    }
    std::string extra;
    if (in >> extra) fail(ErrorKind::Parse, "trailing data after matrix body");
    return {static_cast<std::size_t>(m), static_cast<std::size_t>(n), static_cast<std::uint32_t>(q),
            std::move(entries)};
}

std::vector<std::uint8_t> syndrome(const ParityCheckMatrix& h, std::span<const std::uint8_t> r) {
    require(r.size() == h.cols(), "received word length differs from N");
    const FieldTable field(h.field_order());
    std::vector<std::uint8_t> s(h.rows(), 0);
    for (std::size_t i = 0; i < h.rows(); ++i) {
        std::uint8_t acc = 0;
        for (std::size_t j = 0; j < h.cols(); ++j) {
            require(r[j] < h.field_order(), "received symbol outside GF(q)");
            acc = field.add(acc, field.mul(h.at(i, j), r[j]));
        }
        s[i] = acc;
    }
    return s;
}

namespace {

struct Echelon {
    std::vector<std::vector<std::uint8_t>> rows;  // reduced, nonzero rows only
    std::vector<std::size_t> pivots;              // pivot column per row
};

Echelon reduce(const ParityCheckMatrix& h, const FieldTable& field) {
    std::vector<std::vector<std::uint8_t>> a;
    for (std::size_t r = 0; r < h.rows(); ++r) a.emplace_back(h.row(r).begin(), h.row(r).end());
    Echelon e;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < h.cols() && lead < a.size(); ++col) {
        std::size_t pivot = lead;
        while (pivot < a.size() && a[pivot][col] == 0) ++pivot;
        if (pivot == a.size()) continue;
        std::swap(a[pivot], a[lead]);
        const std::uint8_t scale = field.inv(a[lead][col]);
        for (auto& v : a[lead]) v = field.mul(v, scale);
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == lead || a[r][col] == 0) continue;
            const std::uint8_t factor = a[r][col];
            for (std::size_t c = 0; c < h.cols(); ++c)
                a[r][c] = field.sub(a[r][c], field.mul(factor, a[lead][c]));
        }
        e.pivots.push_back(col);
        ++lead;
    }
    a.resize(lead);
    e.rows = std::move(a);
    return e;
}

}  // namespace

std::size_t rank(const ParityCheckMatrix& h) {
    const FieldTable field(h.field_order());
    return reduce(h, field).pivots.size();
}

std::vector<std::vector<std::uint8_t>> null_space_basis(const ParityCheckMatrix& h) {
    const FieldTable field(h.field_order());
    const Echelon e = reduce(h, field);
    std::vector<bool> is_pivot(h.cols(), false);
    for (auto c : e.pivots) is_pivot[c] = true;
    std::vector<std::vector<std::uint8_t>> basis;
    for (std::size_t free = 0; free < h.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<std::uint8_t> v(h.cols(), 0);
        v[free] = 1;
        for (std::size_t r = 0; r < e.rows.size(); ++r) v[e.pivots[r]] = field.neg(e.rows[r][free]);
        basis.push_back(std::move(v));
    }
    return basis;
}

void for_each_codeword_weight(const ParityCheckMatrix& h, const std::function<bool(std::size_t)>& visit) {
    const auto basis = null_space_basis(h);
    const std::size_t k = basis.size();
    const std::uint32_t q = h.field_order();
    const double log_size = static_cast<double>(k) * std::log10(static_cast<double>(q));
    if (log_size > 7.0 + 1e-12)
        fail(ErrorKind::Guard, "code has q^k = " + std::to_string(q) + "^" + std::to_string(k) +
                                   " codewords, above the 10^7 exhaustive guard");
    const FieldTable field(q);
    const std::size_t n = h.cols();
    std::vector<std::uint8_t> word(n, 0);
    std::vector<std::uint32_t> digits(k, 0);
    std::size_t weight = 0;
    if (!visit(0)) return;
    while (true) {
        // advance the mixed-radix counter, patching the codeword by the digit change
        std::size_t j = 0;
        for (; j < k; ++j) {
            const std::uint32_t from = digits[j];
            const std::uint32_t to = (from + 1) % q;
            digits[j] = to;
            const std::uint8_t delta = field.sub(static_cast<std::uint8_t>(to), static_cast<std::uint8_t>(from));
            for (std::size_t i = 0; i < n; ++i) {
                if (basis[j][i] == 0) continue;
                const std::uint8_t before = word[i];
                word[i] = field.add(before, field.mul(delta, basis[j][i]));
                weight += (word[i] != 0) - (before != 0);
            }
            if (to != 0) break;
        }
        if (j == k) return;  // counter wrapped: every codeword visited
        if (!visit(weight)) return;
    }
}

std::optional<std::size_t> min_distance_exhaustive(const ParityCheckMatrix& h) {
    std::optional<std::size_t> best;
    bool first = true;
    for_each_codeword_weight(h, [&](std::size_t w) {
        if (first) {  // the zero codeword
            first = false;
            return true;
        }
        if (!best || w < *best) best = w;
        return *best > 1;
    });
    return best;
}

}  // namespace ldpcb
