#include "uqg/matrix.hpp"

#include "uqg/error.hpp"

namespace uqg {

Mat3 mat_identity() { return {1, 0, 0, 0, 1, 0, 0, 0, 1}; }

Mat3 mat_diag(Elem a, Elem b, Elem c) { return {a, 0, 0, 0, b, 0, 0, 0, c}; }

Mat3 mat_mul(const Field& F, const Mat3& a, const Mat3& b) {
    Mat3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Elem s = F.mul(a[3 * i], b[j]);
            s = F.add(s, F.mul(a[3 * i + 1], b[3 + j]));
            s = F.add(s, F.mul(a[3 * i + 2], b[6 + j]));
            r[3 * i + j] = s;
        }
    return r;
}

Vec3 mat_apply(const Field& F, const Mat3& a, const Vec3& v) {
    Vec3 r{};
    for (int i = 0; i < 3; ++i)
        r[i] = F.add(F.add(F.mul(a[3 * i], v[0]), F.mul(a[3 * i + 1], v[1])), F.mul(a[3 * i + 2], v[2]));
    return r;
}

Mat3 mat_transpose(const Mat3& a) { return {a[0], a[3], a[6], a[1], a[4], a[7], a[2], a[5], a[8]}; }

Mat3 mat_frobenius(const Field& F, const Mat3& a, uint32_t j) {
    Mat3 r;
    for (int i = 0; i < 9; ++i) r[i] = F.frobenius(a[i], j);
    return r;
}

Mat3 mat_scale(const Field& F, const Mat3& a, Elem c) {
    Mat3 r;
    for (int i = 0; i < 9; ++i) r[i] = F.mul(a[i], c);
    return r;
}

Elem mat_det(const Field& F, const Mat3& a) {
    auto minor = [&](int r0, int r1, int c0, int c1) {
        return F.sub(F.mul(a[3 * r0 + c0], a[3 * r1 + c1]), F.mul(a[3 * r0 + c1], a[3 * r1 + c0]));
    };
    Elem d = F.mul(a[0], minor(1, 2, 1, 2));
    d = F.sub(d, F.mul(a[1], minor(1, 2, 0, 2)));
    d = F.add(d, F.mul(a[2], minor(1, 2, 0, 1)));
    return d;
}

Mat3 mat_inverse(const Field& F, const Mat3& a) {
    const Elem det = mat_det(F, a);
    if (det == 0) fail("SingularMatrix", "matrix is not invertible");
    const Elem di = F.inv(det);
    auto cof = [&](int r, int c) {
        int r0 = r == 0 ? 1 : 0, r1 = r == 2 ? 1 : 2;
        int c0 = c == 0 ? 1 : 0, c1 = c == 2 ? 1 : 2;
        Elem m = F.sub(F.mul(a[3 * r0 + c0], a[3 * r1 + c1]), F.mul(a[3 * r0 + c1], a[3 * r1 + c0]));
        return ((r + c) & 1) ? F.neg(m) : m;
    };
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[3 * i + j] = F.mul(cof(j, i), di);
    return r;
}

Mat3 mat_pow(const Field& F, const Mat3& a, uint64_t e) {
    Mat3 r = mat_identity();
    Mat3 b = a;
    while (e) {
        if (e & 1) r = normalize(F, mat_mul(F, r, b));
        e >>= 1;
        if (e) b = normalize(F, mat_mul(F, b, b));
    }
    return r;
}

Mat3 mat_embed(const FieldPtr& sub, const FieldPtr& sup, const Mat3& a) {
    if (sub->id() == sup->id()) return a;
    auto emb = Embedding::get(sub, sup);
    Mat3 r;
    for (int i = 0; i < 9; ++i) r[i] = emb->map(a[i]);
    return r;
}

Mat3 normalize(const Field& F, const Mat3& a) {
    for (int i = 0; i < 9; ++i) {
        if (a[i] == 0) continue;
        if (a[i] == 1) return a;
        return mat_scale(F, a, F.inv(a[i]));
    }
    fail("SingularMatrix", "zero matrix");
}

Vec3 normalize_point(const Field& F, const Vec3& v) {
    for (int i = 0; i < 3; ++i) {
        if (v[i] == 0) continue;
        const Elem s = F.inv(v[i]);
        return {F.mul(v[0], s), F.mul(v[1], s), F.mul(v[2], s)};
    }
    fail("ZeroVector", "the zero vector is not a projective point");
}

Poly charpoly(const Field& F, const Mat3& a) {
    const Elem tr = F.add(F.add(a[0], a[4]), a[8]);
    auto minor = [&](int i, int j) {
        return F.sub(F.mul(a[4 * i], a[4 * j]), F.mul(a[3 * i + j], a[3 * j + i]));
    };
    const Elem m2 = F.add(F.add(minor(0, 1), minor(0, 2)), minor(1, 2));
    const Elem det = mat_det(F, a);
    return Poly{F.neg(det), m2, F.neg(tr), 1};
}

std::vector<Vec3> nullspace(const Field& F, const Mat3& a) {
    Mat3 m = a;
    int pivot_col[3] = {-1, -1, -1};
    int row = 0;
    bool is_pivot[3] = {false, false, false};
    for (int col = 0; col < 3 && row < 3; ++col) {
        int sel = -1;
        for (int r = row; r < 3; ++r)
            if (m[3 * r + col] != 0) { sel = r; break; }
        if (sel < 0) continue;
        for (int c = 0; c < 3; ++c) std::swap(m[3 * row + c], m[3 * sel + c]);
        const Elem inv = F.inv(m[3 * row + col]);
        for (int c = 0; c < 3; ++c) m[3 * row + c] = F.mul(m[3 * row + c], inv);
        for (int r = 0; r < 3; ++r) {
            if (r == row || m[3 * r + col] == 0) continue;
            const Elem f = m[3 * r + col];
            for (int c = 0; c < 3; ++c) m[3 * r + c] = F.sub(m[3 * r + c], F.mul(f, m[3 * row + c]));
        }
        pivot_col[row] = col;
        is_pivot[col] = true;
        ++row;
    }
    std::vector<Vec3> basis;
    for (int free = 0; free < 3; ++free) {
        if (is_pivot[free]) continue;
        Vec3 v{0, 0, 0};
        v[free] = 1;
        for (int r = 0; r < row; ++r) v[pivot_col[r]] = F.neg(m[3 * r + free]);
        basis.push_back(v);
    }
    return basis;
}

}  // namespace uqg
