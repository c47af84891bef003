#include "starring/builders.hpp"

#include <string>

namespace starring {
namespace {

void fail(RingError::Code code, const std::string& msg) { throw RingError(code, msg); }

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::size_t table_index(int order, ElementId x, ElementId y) {
    return static_cast<std::size_t>(x) * order + y;
}

}  // namespace

FiniteRing make_zmod(int n) {
    if (n <= 0) fail(RingError::Code::InvalidParameter, "zmod requires n >= 1");
    if (n > kDefaultMaxOrder) fail(RingError::Code::SizeCapExceeded, "zmod order exceeds cap");
    std::vector<ElementId> add(static_cast<std::size_t>(n) * n), mul(add.size());
    for (ElementId i = 0; i < n; ++i)
        for (ElementId j = 0; j < n; ++j) {
            add[table_index(n, i, j)] = (i + j) % n;
            mul[table_index(n, i, j)] = static_cast<ElementId>((static_cast<long long>(i) * j) % n);
        }
    return FiniteRing(n, std::move(add), std::move(mul), "zmod(" + std::to_string(n) + ")");
}

int gf_characteristic(int q) {
    for (int p = 2; p <= 13; ++p) {
        if (!is_prime(p)) continue;
        if (q == p || q == p * p) return p;
    }
    fail(RingError::Code::InvalidParameter,
         "gf requires q = p or p^2 for a prime p <= 13, got " + std::to_string(q));
    return -1;
}

FiniteRing make_gf(int q) {
    const int p = gf_characteristic(q);
    const std::string label = "gf(" + std::to_string(q) + ")";
    if (q == p) {
        FiniteRing base = make_zmod(p);
        std::vector<ElementId> add(static_cast<std::size_t>(p) * p), mul(add.size());
        for (ElementId i = 0; i < p; ++i)
            for (ElementId j = 0; j < p; ++j) {
                add[table_index(p, i, j)] = base.add(i, j);
                mul[table_index(p, i, j)] = base.mul(i, j);
            }
        return FiniteRing(p, std::move(add), std::move(mul), label);
    }

    // Lexicographically smallest monic irreducible t^2 + b t + c over F_p.
    int ib = -1, ic = -1;
    for (int b = 0; b < p && ib < 0; ++b)
        for (int c = 0; c < p && ib < 0; ++c) {
            bool has_root = false;
            for (int x = 0; x < p && !has_root; ++x)
                has_root = (x * x + b * x + c) % p == 0;
            if (!has_root) {
                ib = b;
                ic = c;
            }
        }

    const int n = p * p;
    std::vector<ElementId> add(static_cast<std::size_t>(n) * n), mul(add.size());
    auto id_of = [p](int c0, int c1) { return c1 * p + c0; };
    for (int a1 = 0; a1 < p; ++a1)
        for (int a0 = 0; a0 < p; ++a0)
            for (int b1 = 0; b1 < p; ++b1)
                for (int b0 = 0; b0 < p; ++b0) {
                    const ElementId x = id_of(a0, a1), y = id_of(b0, b1);
                    add[table_index(n, x, y)] = id_of((a0 + b0) % p, (a1 + b1) % p);
                    // (a0 + a1 t)(b0 + b1 t) with t^2 = -(ib t + ic)
                    const int hi = a1 * b1;
                    const int c0 = ((a0 * b0 - ic * hi) % p + p * p * p) % p;
                    const int c1 = ((a0 * b1 + a1 * b0 - ib * hi) % p + p * p * p) % p;
                    mul[table_index(n, x, y)] = id_of(c0, c1);
                }
    return FiniteRing(n, std::move(add), std::move(mul), label);
}

FiniteRing make_product(const FiniteRing& a, const FiniteRing& b, int max_order) {
    const long long order = static_cast<long long>(a.order()) * b.order();
    if (order > max_order)
        fail(RingError::Code::SizeCapExceeded,
             "product order " + std::to_string(order) + " exceeds cap " + std::to_string(max_order));
    const int n = static_cast<int>(order);
    std::vector<ElementId> add(static_cast<std::size_t>(n) * n), mul(add.size());
    for (ElementId xa = 0; xa < a.order(); ++xa)
        for (ElementId xb = 0; xb < b.order(); ++xb)
            for (ElementId ya = 0; ya < a.order(); ++ya)
                for (ElementId yb = 0; yb < b.order(); ++yb) {
                    const ElementId x = xa * b.order() + xb, y = ya * b.order() + yb;
                    add[table_index(n, x, y)] = a.add(xa, ya) * b.order() + b.add(xb, yb);
                    mul[table_index(n, x, y)] = a.mul(xa, ya) * b.order() + b.mul(xb, yb);
                }
    return FiniteRing(n, std::move(add), std::move(mul),
                      "product(" + a.label() + "," + b.label() + ")");
}

ElementId matrix_encode(int base_order, int n, std::span<const ElementId> entries) {
    ElementId id = 0;
    for (int k = 0; k < n * n; ++k) id = id * base_order + entries[k];
    return id;
}

std::vector<ElementId> matrix_decode(int base_order, int n, ElementId id) {
    std::vector<ElementId> entries(static_cast<std::size_t>(n) * n);
    for (int k = n * n - 1; k >= 0; --k) {
        entries[k] = id % base_order;
        id /= base_order;
    }
    return entries;
}

FiniteRing make_matrix_ring(const FiniteRing& base, int n, int max_order) {
    if (n <= 0) fail(RingError::Code::InvalidParameter, "matrix ring requires n >= 1");
    long long order = 1;
    for (int k = 0; k < n * n; ++k) {
        order *= base.order();
        if (order > max_order)
            fail(RingError::Code::SizeCapExceeded,
                 "matrix ring order |base|^(n^2) exceeds cap " + std::to_string(max_order));
    }
    const int m = static_cast<int>(order);
    const int B = base.order();
    std::vector<ElementId> add(static_cast<std::size_t>(m) * m), mul(add.size());
    std::vector<ElementId> prod(static_cast<std::size_t>(n) * n);
    for (ElementId x = 0; x < m; ++x) {
        const auto xs = matrix_decode(B, n, x);
        for (ElementId y = 0; y < m; ++y) {
            const auto ys = matrix_decode(B, n, y);
            ElementId sum = 0;
            for (int k = 0; k < n * n; ++k) sum = sum * B + base.add(xs[k], ys[k]);
            add[table_index(m, x, y)] = sum;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    ElementId acc = base.zero();
                    for (int k = 0; k < n; ++k)
                        acc = base.add(acc, base.mul(xs[i * n + k], ys[k * n + j]));
                    prod[i * n + j] = acc;
                }
            mul[table_index(m, x, y)] = matrix_encode(B, n, prod);
        }
    }
    return FiniteRing(m, std::move(add), std::move(mul),
                      "matrix(" + base.label() + ",n=" + std::to_string(n) + ")");
}

FiniteRing make_table_ring(int order, const std::vector<ElementId>& add,
                           const std::vector<ElementId>& mul, std::string label,
                           std::uint64_t sample_seed) {
    if (order <= 0) fail(RingError::Code::InvalidParameter, "table ring order must be positive");
    return FiniteRing(order, add, mul, std::move(label), sample_seed);
}

std::vector<ElementId> identity_star(const FiniteRing& r) {
    std::vector<ElementId> star(r.order());
    for (ElementId x = 0; x < r.order(); ++x) star[x] = x;
    return star;
}

std::vector<ElementId> swap_star(const FiniteRing& left, const FiniteRing& right) {
    if (!left.same_tables(right))
        fail(RingError::Code::SpecError,
             "swap involution requires a product of two identical factors");
    const int A = left.order(), B = right.order();
    std::vector<ElementId> star(static_cast<std::size_t>(A) * B);
    for (ElementId a = 0; a < A; ++a)
        for (ElementId b = 0; b < B; ++b) star[a * B + b] = b * B + a;
    return star;
}

std::vector<ElementId> componentwise_star(const FiniteRing& left,
                                          const std::vector<ElementId>& left_star,
                                          const FiniteRing& right,
                                          const std::vector<ElementId>& right_star) {
    const int B = right.order();
    std::vector<ElementId> star(static_cast<std::size_t>(left.order()) * B);
    for (ElementId a = 0; a < left.order(); ++a)
        for (ElementId b = 0; b < B; ++b) star[a * B + b] = left_star[a] * B + right_star[b];
    return star;
}

std::vector<ElementId> frobenius_star(const FiniteRing& field, int p) {
    std::vector<ElementId> star(field.order());
    for (ElementId x = 0; x < field.order(); ++x) {
        ElementId acc = field.one();
        for (int k = 0; k < p; ++k) acc = field.mul(acc, x);
        star[x] = acc;
    }
    return star;
}

std::vector<ElementId> conjugate_transpose_star(const StarRing& base, int n) {
    const int B = base.ring().order();
    long long order = 1;
    for (int k = 0; k < n * n; ++k) order *= B;
    std::vector<ElementId> star(static_cast<std::size_t>(order));
    std::vector<ElementId> out(static_cast<std::size_t>(n) * n);
    for (ElementId x = 0; x < static_cast<ElementId>(order); ++x) {
        const auto xs = matrix_decode(B, n, x);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) out[i * n + j] = base.star(xs[j * n + i]);
        star[x] = matrix_encode(B, n, out);
    }
    return star;
}

}  // namespace starring
