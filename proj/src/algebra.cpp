#include "coxforge/algebra.hpp"

#include <sstream>

namespace coxforge {

int sign_qs3(const QS3& v) {
    int sa = sgn(v.a);
    int sb = sgn(v.b);
    if (sa == 0) return sb;
    if (sb == 0) return sa;
    if (sa == sb) return sa;
    // Opposite signs: the value is sa * (|a| - sqrt(3)|b|); compare a^2
    // against 3 b^2 to decide which term dominates, exactly.
    Rational lhs = v.a * v.a;
    Rational rhs = 3 * v.b * v.b;
    if (lhs == rhs) return 0;  // impossible for nonzero b, kept for safety
    return lhs > rhs ? sa : sb;
}

std::string QS3::str() const {
    auto rat = [](const Rational& r) { return r.get_str(); };
    if (b == 0) return rat(a);
    std::string bs;
    if (b == 1) {
        bs = "s3";
    } else if (b == -1) {
        bs = "-s3";
    } else if (b.get_den() == 1) {
        bs = rat(b) + "*s3";
    } else {
        Rational num(b.get_num());
        bs = (num == 1 ? std::string("s3")
                       : num == -1 ? std::string("-s3")
                                   : num.get_str() + "*s3") +
             "/" + b.get_den().get_str();
    }
    if (a == 0) return bs;
    return rat(a) + (bs[0] == '-' ? "" : "+") + bs;
}

Signature signature(const SymMatrix& m) {
    int n = m.dim();
    // Work on a mutable copy.
    std::vector<QS3> a(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i * n + j] = m.at(i, j);
    std::vector<bool> done(n, false);
    Signature sig;

    auto entry = [&](int i, int j) -> QS3& { return a[i * n + j]; };

    for (;;) {
        // Prefer a nonzero diagonal pivot among active rows.
        int piv = -1;
        for (int i = 0; i < n; ++i)
            if (!done[i] && !entry(i, i).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) {
            // All active diagonals vanish.  Look for an off-diagonal entry;
            // if none, the rest of the matrix is zero.
            int k = -1, l = -1;
            for (int i = 0; i < n && k < 0; ++i) {
                if (done[i]) continue;
                for (int j = i + 1; j < n; ++j) {
                    if (done[j]) continue;
                    if (!entry(i, j).is_zero()) {
                        k = i;
                        l = j;
                        break;
                    }
                }
            }
            if (k < 0) {
                for (int i = 0; i < n; ++i)
                    if (!done[i]) ++sig.zero;
                return sig;
            }
            // Symmetric two-step: row_k += row_l, col_k += col_l makes the
            // (k,k) entry 2*a_kl != 0, a congruence transformation.
            for (int j = 0; j < n; ++j)
                if (!done[j]) entry(k, j) += entry(l, j);
            for (int i = 0; i < n; ++i)
                if (!done[i]) entry(i, k) += entry(i, l);
            piv = k;
        }

        const QS3 p = entry(piv, piv);
        int s = sign_qs3(p);
        if (s > 0)
            ++sig.positive;
        else
            ++sig.negative;
        done[piv] = true;
        // Eliminate the pivot row/column from the remaining block.
        for (int i = 0; i < n; ++i) {
            if (done[i]) continue;
            QS3 f = entry(i, piv) / p;
            if (f.is_zero()) continue;
            for (int j = 0; j < n; ++j)
                if (!done[j]) entry(i, j) -= f * entry(piv, j);
            entry(i, piv) = QS3();
        }
        for (int j = 0; j < n; ++j)
            if (!done[j]) entry(piv, j) = QS3();
    }
}

}  // namespace coxforge
