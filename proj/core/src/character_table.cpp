#include "uniflip/character_table.hpp"

#include "uniflip/error.hpp"

#include <algorithm>
#include <cstdint>

namespace uniflip {

namespace {

using i64 = std::int64_t;

i64 mod(i64 a, i64 p) {
    a %= p;
    return a < 0 ? a + p : a;
}

i64 pow_mod(i64 b, i64 e, i64 p) {
    i64 r = 1;
    b = mod(b, p);
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

i64 inv_mod(i64 a, i64 p) { return pow_mod(a, p - 2, p); }

bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<i64> prime_factors(i64 n) {
    std::vector<i64> f;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            f.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) f.push_back(n);
    return f;
}

i64 primitive_root(i64 p) {
    const auto fs = prime_factors(p - 1);
    for (i64 g = 2; g < p; ++g) {
        bool ok = true;
        for (i64 q : fs)
            if (pow_mod(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw Error(ErrorCode::LiftFailure, "no primitive root");
}

using Vec = std::vector<i64>;
using Mat = std::vector<Vec>;  // row-major

// Row-reduces m in place; returns pivot columns.
std::vector<std::size_t> row_reduce(Mat& m, i64 p, std::size_t ncols_to_pivot) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    const std::size_t rows = m.size();
    for (std::size_t col = 0; col < ncols_to_pivot && row < rows; ++col) {
        std::size_t sel = row;
        while (sel < rows && m[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[row]);
        const i64 iv = inv_mod(m[row][col], p);
        for (auto& x : m[row]) x = x * iv % p;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || m[r][col] == 0) continue;
            const i64 f = m[r][col];
            for (std::size_t c = 0; c < m[r].size(); ++c) m[r][c] = mod(m[r][c] - f * m[row][c], p);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

// Basis of the nullspace of a square matrix.
std::vector<Vec> nullspace(Mat m, i64 p) {
    const std::size_t n = m.size();
    const auto pivots = row_reduce(m, p, n);
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        Vec v(n, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = mod(-m[r][free], p);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Splits the invariant subspace spanned by `basis` (vectors of length k) into
// eigenspaces of `a` (k x k).
std::vector<std::vector<Vec>> split(const std::vector<Vec>& basis, const Mat& a, i64 p) {
    const std::size_t k = a.size(), d = basis.size();
    // Augmented [B | A B] with B as columns, reduced to [I | R].
    Mat aug(k, Vec(2 * d, 0));
    for (std::size_t t = 0; t < d; ++t) {
        for (std::size_t i = 0; i < k; ++i) aug[i][t] = basis[t][i];
        for (std::size_t i = 0; i < k; ++i) {
            i64 s = 0;
            for (std::size_t j = 0; j < k; ++j) s += a[i][j] * basis[t][j] % p;
            aug[i][d + t] = s % p;
        }
    }
    const auto piv = row_reduce(aug, p, d);
    if (piv.size() != d) throw Error(ErrorCode::LiftFailure, "degenerate subspace basis");
    for (std::size_t r = d; r < k; ++r)
        for (std::size_t c = d; c < 2 * d; ++c)
            if (aug[r][c] != 0) throw Error(ErrorCode::LiftFailure, "subspace not invariant");
    Mat restricted(d, Vec(d));
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) restricted[r][c] = aug[r][d + c];

    std::vector<std::vector<Vec>> parts;
    std::size_t covered = 0;
    for (i64 lambda = 0; lambda < p && covered < d; ++lambda) {
        Mat shifted = restricted;
        for (std::size_t i = 0; i < d; ++i) shifted[i][i] = mod(shifted[i][i] - lambda, p);
        auto ns = nullspace(shifted, p);
        if (ns.empty()) continue;
        std::vector<Vec> part;
        for (const auto& coeffs : ns) {
            Vec v(k, 0);
            for (std::size_t t = 0; t < d; ++t)
                for (std::size_t i = 0; i < k; ++i) v[i] = (v[i] + coeffs[t] * basis[t][i]) % p;
            part.push_back(std::move(v));
        }
        covered += part.size();
        parts.push_back(std::move(part));
    }
    if (covered != d) throw Error(ErrorCode::LiftFailure, "class matrix not diagonalizable mod p");
    return parts;
}

// Lexicographic order on cyclotomic coordinate vectors.
bool value_less(const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto& x = a[i].coords();
        const auto& y = b[i].coords();
        for (std::size_t j = 0; j < x.size(); ++j) {
            if (x[j] != y[j]) return x[j] > y[j];
        }
    }
    return false;
}

}  // namespace

bool CharacterTable::is_rational() const {
    for (const auto& row : chars)
        for (const auto& v : row)
            if (!v.is_rational()) return false;
    return true;
}

Cyclotomic CharacterTable::inner_product(const std::vector<Cyclotomic>& chi,
                                         const std::vector<Cyclotomic>& psi) const {
    Cyclotomic s(field_order);
    for (std::size_t c = 0; c < class_sizes.size(); ++c)
        s += chi[c] * psi[c].conj() * Rational(static_cast<long>(class_sizes[c]));
    s *= Rational(1, static_cast<long>(group_order));
    return s;
}

CharacterTable compute_character_table(const FiniteGroup& g, std::size_t max_order) {
    const std::size_t n = g.size();
    if (n > max_order)
        throw Error(ErrorCode::TooLarge, "group of order " + std::to_string(n) +
                                             " exceeds character-table bound " +
                                             std::to_string(max_order));
    const auto& classes = g.classes();
    const std::size_t k = classes.size();
    const i64 e = g.exponent();

    i64 p = e + 1;
    while (!(is_prime(p) && p * p > 4 * static_cast<i64>(n) && p > static_cast<i64>(k))) p += e;
    const i64 z = pow_mod(primitive_root(p), (p - 1) / e, p);

    // Class multiplication coefficients: a[i][j][t] = #{x in C_i : x^{-1} r_t in C_j}.
    std::vector<Mat> mats(k, Mat(k, Vec(k, 0)));  // mats[j][i][t]
    for (std::size_t t = 0; t < k; ++t) {
        const auto r = classes[t].representative;
        for (std::uint32_t x = 0; x < n; ++x) {
            const auto i = g.class_of(x);
            const auto j = g.class_of(g.mul(g.inv(x), r));
            mats[j][i][t] += 1;
        }
    }
    for (auto& m : mats)
        for (auto& row : m)
            for (auto& x : row) x %= p;

    std::vector<std::vector<Vec>> spaces;
    {
        std::vector<Vec> full;
        for (std::size_t i = 0; i < k; ++i) {
            Vec v(k, 0);
            v[i] = 1;
            full.push_back(std::move(v));
        }
        spaces.push_back(std::move(full));
    }
    for (std::size_t j = 1; j < k; ++j) {
        std::vector<std::vector<Vec>> next;
        for (auto& s : spaces) {
            if (s.size() == 1) {
                next.push_back(std::move(s));
                continue;
            }
            for (auto& part : split(s, mats[j], p)) next.push_back(std::move(part));
        }
        spaces = std::move(next);
    }
    if (spaces.size() != k)
        throw Error(ErrorCode::LiftFailure, "class algebra did not split into " +
                                                std::to_string(k) + " characters");

    CharacterTable table;
    table.field_order = static_cast<int>(e);
    table.group_order = n;
    for (const auto& c : classes) table.class_sizes.push_back(c.elements.size());

    const i64 root_bound = [&] {
        i64 r = 0;
        while ((r + 1) * (r + 1) <= static_cast<i64>(n)) ++r;
        return r;
    }();

    for (const auto& s : spaces) {
        Vec omega = s.front();
        if (omega[0] == 0) throw Error(ErrorCode::LiftFailure, "eigenvector vanishes at identity");
        const i64 scale = inv_mod(omega[0], p);
        for (auto& x : omega) x = x * scale % p;

        i64 denom = 0;
        for (std::size_t c = 0; c < k; ++c) {
            const auto cs = static_cast<i64>(table.class_sizes[c]);
            denom = (denom + omega[c] * omega[g.inverse_class(c)] % p * inv_mod(cs % p, p)) % p;
        }
        if (denom == 0) throw Error(ErrorCode::LiftFailure, "degenerate degree equation");
        const i64 deg_sq = static_cast<i64>(n % p) * inv_mod(denom, p) % p;
        i64 degree = 0;
        for (i64 d = 1; d <= root_bound; ++d)
            if (d * d % p == deg_sq) {
                degree = d;
                break;
            }
        if (degree == 0) throw Error(ErrorCode::LiftFailure, "no integral degree");

        Vec chi_mod(k);
        for (std::size_t c = 0; c < k; ++c) {
            const auto cs = static_cast<i64>(table.class_sizes[c]);
            chi_mod[c] = omega[c] * degree % p * inv_mod(cs % p, p) % p;
        }

        std::vector<Cyclotomic> row;
        row.reserve(k);
        for (std::size_t c = 0; c < k; ++c) {
            const i64 o = classes[c].element_order;
            const i64 zo = pow_mod(z, e / o, p);
            std::vector<Rational> power_coeffs(static_cast<std::size_t>(e));
            i64 total = 0;
            for (i64 t = 0; t < o; ++t) {
                i64 acc = 0;
                for (i64 j = 0; j < o; ++j) {
                    const i64 val = chi_mod[g.power_class(c, j)];
                    acc = (acc + val * pow_mod(zo, mod(-j * t, o), p)) % p;
                }
                const i64 mult = acc * inv_mod(o % p, p) % p;
                if (mult > degree)
                    throw Error(ErrorCode::LiftFailure, "eigenvalue multiplicity out of range");
                total += mult;
                power_coeffs[static_cast<std::size_t>(t * (e / o))] = Rational(mult);
            }
            if (total != degree) throw Error(ErrorCode::LiftFailure, "multiplicities do not sum");
            row.push_back(cyclo_reduce(static_cast<int>(e), power_coeffs));
        }
        table.chars.push_back(std::move(row));
    }

    std::sort(table.chars.begin(), table.chars.end(),
              [](const auto& a, const auto& b) {
                  const Rational da = a[0].rational_value(), db = b[0].rational_value();
                  if (da != db) return da < db;
                  return value_less(a, b);
              });
    if (!check_orthogonality(table, g))
        throw Error(ErrorCode::LiftFailure, "lifted table fails orthogonality");
    return table;
}

bool check_orthogonality(const CharacterTable& t, const FiniteGroup& g) {
    const std::size_t k = t.num_classes();
    if (t.num_chars() != k) return false;
    const Cyclotomic one(t.field_order, Rational(1));
    const Cyclotomic zero(t.field_order);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a; b < k; ++b)
            if (t.inner_product(t.chars[a], t.chars[b]) != (a == b ? one : zero)) return false;
    // Column relation: sum_chi chi(c) conj(chi(c')) = delta |C_G(c)|.
    for (std::size_t c = 0; c < k; ++c)
        for (std::size_t d = c; d < k; ++d) {
            Cyclotomic s(t.field_order);
            for (const auto& row : t.chars) s += row[c] * row[d].conj();
            const Rational expect =
                c == d ? Rational(static_cast<long>(g.size() / t.class_sizes[c])) : Rational(0);
            if (s != Cyclotomic(t.field_order, expect)) return false;
        }
    return true;
}

}  // namespace uniflip
