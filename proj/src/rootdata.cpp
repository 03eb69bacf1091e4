#include "coxforge/rootdata.hpp"

#include <map>
#include <set>

namespace coxforge {

namespace {

// Normalize affine tags and validate the supported range.
IrreducibleType normalize(const IrreducibleType& t) {
    using F = IrreducibleType::Family;
    IrreducibleType out = t;
    switch (t.family) {
        case F::AffA1: out = {F::A, 1, 0}; break;
        case F::AffA: out = {F::A, t.rank, 0}; break;
        case F::AffD: out = {F::D, t.rank, 0}; break;
        case F::AffE: out = {F::E, t.rank, 0}; break;
        case F::AffG2: out = {F::G2m, 2, 6}; break;
        default: break;
    }
    return out;
}

bool supported(const IrreducibleType& t) {
    using F = IrreducibleType::Family;
    switch (t.family) {
        case F::A: return t.rank >= 1 && t.rank <= 17;
        case F::D: return t.rank >= 3 && t.rank <= 17;
        case F::E: return t.rank >= 6 && t.rank <= 8;
        case F::G2m: return t.m == 6;
        default: return false;
    }
}

// Gram matrix of the simple roots in the conventional node ordering:
// A_n a path; D_n a path alpha_1..alpha_{n-1} with alpha_n hung on
// alpha_{n-2}; E_n a path 1-3-4-..-n with alpha_2 hung on alpha_4;
// G2 a short root (norm 2) and a long root (norm 6) at angle 5pi/6.
std::vector<std::vector<long>> simple_gram(const IrreducibleType& t) {
    using F = IrreducibleType::Family;
    int r = t.rank;
    std::vector<std::vector<long>> b(r, std::vector<long>(r, 0));
    auto join = [&](int i, int j, long v) { b[i][j] = b[j][i] = v; };
    for (int i = 0; i < r; ++i) b[i][i] = 2;
    switch (t.family) {
        case F::A:
            for (int i = 0; i + 1 < r; ++i) join(i, i + 1, -1);
            break;
        case F::D:
            for (int i = 0; i + 2 < r; ++i) join(i, i + 1, -1);
            join(r - 3, r - 1, -1);
            break;
        case F::E:
            join(0, 2, -1);
            for (int i = 2; i + 1 < r; ++i) join(i, i + 1, -1);
            join(1, 3, -1);
            break;
        case F::G2m:
            b[1][1] = 6;
            join(0, 1, -3);
            break;
        default:
            break;
    }
    return b;
}

// Highest root by reflection closure over coefficient vectors: generate the
// full root system from the simple roots and take the root of maximal
// height.  Serves as the oracle for the marks.
std::vector<long> highest_root(const std::vector<std::vector<long>>& b) {
    int r = (int)b.size();
    auto dot = [&](const std::vector<long>& v, int i) {
        long s = 0;
        for (int j = 0; j < r; ++j) s += v[j] * b[j][i];
        return s;  // <v, alpha_i>
    };
    std::set<std::vector<long>> roots;
    std::vector<std::vector<long>> queue;
    for (int i = 0; i < r; ++i) {
        std::vector<long> e(r, 0);
        e[i] = 1;
        roots.insert(e);
        queue.push_back(e);
    }
    while (!queue.empty()) {
        std::vector<long> v = queue.back();
        queue.pop_back();
        for (int i = 0; i < r; ++i) {
            std::vector<long> w = v;
            w[i] -= 2 * dot(v, i) / b[i][i];
            if (roots.insert(w).second) queue.push_back(w);
        }
    }
    std::vector<long> best;
    long best_height = -1;
    for (const auto& v : roots) {
        long h = 0;
        for (long c : v) h += c;
        if (h > best_height) {
            best_height = h;
            best = v;
        }
    }
    return best;
}

// Exact inverse of a small symmetric positive-definite integer matrix.
std::vector<std::vector<Rational>> invert(
    const std::vector<std::vector<long>>& b) {
    int r = (int)b.size();
    std::vector<std::vector<Rational>> a(r, std::vector<Rational>(2 * r, 0));
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) a[i][j] = b[i][j];
        a[i][r + i] = 1;
    }
    for (int col = 0; col < r; ++col) {
        int piv = col;
        while (a[piv][col] == 0) ++piv;
        std::swap(a[piv], a[col]);
        Rational p = a[col][col];
        for (int j = 0; j < 2 * r; ++j) a[col][j] /= p;
        for (int i = 0; i < r; ++i) {
            if (i == col || a[i][col] == 0) continue;
            Rational f = a[i][col];
            for (int j = 0; j < 2 * r; ++j) a[i][j] -= f * a[col][j];
        }
    }
    std::vector<std::vector<Rational>> inv(r, std::vector<Rational>(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) inv[i][j] = a[i][r + j];
    return inv;
}

RootSystemData build(const IrreducibleType& t) {
    RootSystemData d;
    d.type = t;
    d.rank = t.rank;
    const int r = t.rank;
    auto b = simple_gram(t);
    std::vector<long> hi = highest_root(b);

    d.marks.assign(hi.begin(), hi.end());
    d.marks.push_back(1);
    d.norms.resize(r + 1);
    for (int i = 0; i < r; ++i) d.norms[i] = (int)b[i][i];
    long hr_norm = 0;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) hr_norm += hi[i] * hi[j] * b[i][j];
    d.norms[r] = (int)hr_norm;

    d.ext_gram.assign(r + 1, std::vector<long>(r + 1, 0));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) d.ext_gram[i][j] = b[i][j];
    for (int i = 0; i < r; ++i) {
        long v = 0;
        for (int j = 0; j < r; ++j) v -= hi[j] * b[j][i];
        d.ext_gram[i][r] = d.ext_gram[r][i] = v;
    }
    d.ext_gram[r][r] = hr_norm;

    // W = D B^{-1} D with D = diag(norm_i / 2): the Gram matrix of the
    // fundamental weights.
    auto binv = invert(b);
    std::vector<std::vector<Rational>> w(r, std::vector<Rational>(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            w[i][j] = binv[i][j] * Rational(d.norms[i], 2) *
                      Rational(d.norms[j], 2);
            w[i][j].canonicalize();
        }

    d.s.assign(r + 1, std::vector<Rational>(r + 1, 0));
    for (int i = 0; i <= r; ++i)
        for (int j = i + 1; j <= r; ++j) {
            Rational v;
            if (j == r)
                v = w[i][i] / (2 * d.marks[i]);
            else
                v = w[i][i] * d.marks[j] / (2 * d.marks[i]) +
                    w[j][j] * d.marks[i] / (2 * d.marks[j]) - w[i][j];
            v.canonicalize();
            d.s[i][j] = d.s[j][i] = v;
        }
    return d;
}

}  // namespace

bool supported_root_type(const IrreducibleType& t) {
    return supported(normalize(t));
}

const RootSystemData& root_data(const IrreducibleType& t) {
    IrreducibleType key = normalize(t);
    if (!supported(key))
        throw std::invalid_argument("unsupported root system " + t.str());
    static std::map<std::pair<int, int>, RootSystemData> cache;
    auto k = std::make_pair((int)key.family, key.rank);
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, build(key)).first;
    return it->second;
}

std::vector<long> marks(const IrreducibleType& t) {
    return root_data(t).marks;
}

std::vector<int> norms(const IrreducibleType& t) {
    return root_data(t).norms;
}

Rational s_value(const IrreducibleType& t, int i, int j) {
    const RootSystemData& d = root_data(t);
    if (i < 1 || j < 1 || i > d.rank + 1 || j > d.rank + 1)
        throw std::out_of_range("s_value index out of range");
    return d.s[i - 1][j - 1];
}

}  // namespace coxforge
