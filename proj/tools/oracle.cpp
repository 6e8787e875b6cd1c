// Standalone oracle computations used to pin expected values for the test
// suite. Deliberately self-contained: shares no code with the library it
// checks. Every routine is small enough to verify by hand.
//
// Usage: oracle <hasse|stable|hilbert|veronese|span|elliptic-limit|mv|all>

#include <array>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <map>
#include <random>
#include <set>
#include <vector>

namespace {

using std::uint64_t;

// ---- hasse: coefficient of (xyz)^(p-1) in (y^2 z - x^3 - z^3)^(p-1) mod p.

uint64_t hasse_invariant(uint64_t p) {
    using Key = std::array<int, 3>; // exponents of x, y, z
    std::map<Key, uint64_t> acc;
    acc[{0, 0, 0}] = 1;
    // multiply (p-1) times by f = y^2 z - x^3 - z^3
    for (uint64_t it = 0; it + 1 < p; it++) {
        std::map<Key, uint64_t> next;
        for (const auto& [e, c] : acc) {
            auto add = [&](int dx, int dy, int dz, uint64_t mult) {
                Key k = {e[0] + dx, e[1] + dy, e[2] + dz};
                next[k] = (next[k] + c * mult) % p;
            };
            add(0, 2, 1, 1);         // +y^2 z
            add(3, 0, 0, p - 1);     // -x^3
            add(0, 0, 3, p - 1);     // -z^3
        }
        acc.swap(next);
    }
    int e = static_cast<int>(p) - 1;
    auto it = acc.find({e, e, e});
    return it == acc.end() ? 0 : it->second;
}

int cmd_hasse() {
    for (uint64_t p : {5u, 7u})
        std::printf("hasse p=%llu f=y^2*z-x^3-z^3 -> %llu\n",
                    (unsigned long long)p, (unsigned long long)hasse_invariant(p));
    return 0;
}

// ---- stable: brute-force stable dimension of a p-linear map f(v) = M v^[p]
//      (entrywise p-th power, identity on F_p) by iterating the image span,
//      compared against rank(M^dim) computed by a tiny independent elimination.

using Mat = std::vector<std::vector<uint64_t>>;

Mat matmul(const Mat& a, const Mat& b, uint64_t p) {
    size_t n = a.size(), m = b[0].size(), k = b.size();
    Mat c(n, std::vector<uint64_t>(m, 0));
    for (size_t i = 0; i < n; i++)
        for (size_t l = 0; l < k; l++)
            for (size_t j = 0; j < m; j++)
                c[i][j] = (c[i][j] + a[i][l] * b[l][j]) % p;
    return c;
}

size_t tiny_rank(Mat a, uint64_t p) {
    size_t rows = a.size(), cols = rows ? a[0].size() : 0, r = 0;
    for (size_t c = 0; c < cols && r < rows; c++) {
        size_t piv = r;
        while (piv < rows && a[piv][c] == 0) piv++;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        // scale row r to make pivot 1 (inverse by Fermat)
        uint64_t inv = 1, base = a[r][c], e = p - 2;
        while (e) { if (e & 1) inv = inv * base % p; base = base * base % p; e >>= 1; }
        for (auto& x : a[r]) x = x * inv % p;
        for (size_t i = 0; i < rows; i++)
            if (i != r && a[i][c]) {
                uint64_t f = a[i][c];
                for (size_t j = 0; j < cols; j++)
                    a[i][j] = (a[i][j] + (p - f) * a[r][j]) % p;
            }
        r++;
    }
    return r;
}

// All vectors of F_p^n, as exponent counters.
std::vector<std::vector<uint64_t>> all_vectors(size_t n, uint64_t p) {
    std::vector<std::vector<uint64_t>> out;
    std::vector<uint64_t> v(n, 0);
    while (true) {
        out.push_back(v);
        size_t i = 0;
        while (i < n && ++v[i] == p) v[i++] = 0;
        if (i == n) break;
    }
    return out;
}

size_t brute_stable_dim(const Mat& m, uint64_t p) {
    size_t n = m.size();
    // start with the whole space, iterate S <- f(S) as a SET (f is additive
    // but only semilinear; over F_p images of subspaces are subspaces since
    // c^p = c).
    std::set<std::vector<uint64_t>> cur;
    for (auto& v : all_vectors(n, p)) cur.insert(v);
    for (size_t step = 0; step <= n + 1; step++) {
        std::set<std::vector<uint64_t>> img;
        for (auto& v : cur) {
            std::vector<uint64_t> w(n, 0);
            for (size_t i = 0; i < n; i++)
                for (size_t j = 0; j < n; j++)
                    w[i] = (w[i] + m[i][j] * v[j]) % p; // v[j]^p = v[j] on F_p
            img.insert(w);
        }
        if (img == cur) break;
        cur.swap(img);
    }
    // dim = log_p |cur|
    size_t d = 0;
    size_t card = cur.size();
    while (card > 1) { card /= p; d++; }
    return d;
}

int cmd_stable() {
    // the pinned example: diag(1,0) over F_3
    Mat diag = {{1, 0}, {0, 0}};
    std::printf("stable diag(1,0) F_3 -> brute=%zu\n", brute_stable_dim(diag, 3));
    // property sweep: brute-force image chain == rank(M^dim) over F_2, F_3
    std::mt19937_64 rng(12345);
    for (uint64_t p : {2u, 3u}) {
        for (int trial = 0; trial < 60; trial++) {
            size_t n = 1 + rng() % 3; // dims 1..3 keep enumeration tiny
            Mat m(n, std::vector<uint64_t>(n));
            for (auto& row : m)
                for (auto& x : row) x = rng() % p;
            Mat pw = m;
            for (size_t e = 1; e < n; e++) pw = matmul(pw, m, p);
            size_t lhs = brute_stable_dim(m, p);
            size_t rhs = tiny_rank(pw, p);
            if (lhs != rhs) {
                std::printf("stable MISMATCH p=%llu n=%zu brute=%zu rank=%zu\n",
                            (unsigned long long)p, n, lhs, rhs);
                return 1;
            }
        }
    }
    std::printf("stable sweep: brute image chain == rank(M^dim) on 120 cases OK\n");
    return 0;
}

// ---- hilbert: monomial counting for the skew-lines ideal and Example-2.5
//      style bracket powers of (x0,x1).

bool skew_divisible(const std::array<int, 4>& e) {
    // divisible by one of x0x2, x0x3, x1x2, x1x3
    return (e[0] && e[2]) || (e[0] && e[3]) || (e[1] && e[2]) || (e[1] && e[3]);
}

int cmd_hilbert() {
    std::printf("skew-lines dim(R/I)_d:");
    std::vector<int> hs;
    for (int d = 0; d <= 8; d++) {
        int cnt = 0;
        for (int a = 0; a <= d; a++)
            for (int b = 0; a + b <= d; b++)
                for (int c = 0; a + b + c <= d; c++) {
                    std::array<int, 4> e = {a, b, c, d - a - b - c};
                    if (!skew_divisible(e)) cnt++;
                }
        hs.push_back(cnt);
        std::printf(" %d", cnt);
    }
    std::printf("\n");
    // numerator (1-t)^4 * HS, coefficients up to t^6
    int binom4[5] = {1, -4, 6, -4, 1};
    std::printf("skew-lines numerator:");
    for (int k = 0; k <= 6; k++) {
        long long c = 0;
        for (int i = 0; i <= 4 && i <= k; i++) c += (long long)binom4[i] * hs[k - i];
        std::printf(" %lld", c);
    }
    std::printf("\n");
    // Example-2.5 counts: dim(F_2[x0,x1]/(x0^q, x1^q))_nn
    for (int e = 0; e <= 4; e++) {
        int q = 1 << e;
        std::printf("bracket q=%d dims:", q);
        for (int nn = 0; nn <= 8; nn++) {
            int cnt = 0;
            for (int a = 0; a <= nn; a++)
                if (a < q && nn - a < q) cnt++;
            std::printf(" %d", cnt);
        }
        std::printf("\n");
    }
    return 0;
}

// ---- veronese: kernel dimensions of k[y]_e -> R_{d e} for P^1, plus
//      substitution checks of the pinned generator sets.

long long choose(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (long long i = 1; i <= k; i++) r = r * (n - k + i) / i;
    return r;
}

int cmd_veronese() {
    for (int d : {2, 3}) {
        std::printf("veronese d=%d kernel dims:", d);
        for (int e = 1; e <= 3; e++) {
            long long full = choose(e + d, d);      // dim k[y_0..y_d]_e
            long long img = (long long)d * e + 1;   // dim R_{d e}, R = k[s,t]
            std::printf(" e=%d:%lld", e, full - img);
        }
        std::printf("\n");
    }
    // substitution checks: y_i = s^{d-i} t^i
    auto sub2 = [](int i) { return std::array<int, 2>{2 - i, i}; };
    auto sub3 = [](int i) { return std::array<int, 2>{3 - i, i}; };
    auto eq = [](std::array<int, 2> a, std::array<int, 2> b) { return a == b; };
    auto mul = [](std::array<int, 2> a, std::array<int, 2> b) {
        return std::array<int, 2>{a[0] + b[0], a[1] + b[1]};
    };
    bool ok = eq(mul(sub2(0), sub2(2)), mul(sub2(1), sub2(1)))      // y0y2 = y1^2
           && eq(mul(sub3(0), sub3(2)), mul(sub3(1), sub3(1)))      // y0y2 = y1^2
           && eq(mul(sub3(1), sub3(3)), mul(sub3(2), sub3(2)))      // y1y3 = y2^2
           && eq(mul(sub3(0), sub3(3)), mul(sub3(1), sub3(2)));     // y0y3 = y1y2
    std::printf("veronese substitution checks: %s\n", ok ? "OK" : "FAIL");
    return ok ? 0 : 1;
}

// ---- span: degree-2 span equality over F_3 for {x0^2-x1^2, x0^2+x1^2}
//      vs {x0^2, x1^2} (the hand Buchberger example; both ideals are
//      generated in degree 2 so span equality there decides GB equality).

int cmd_span() {
    // basis of degree-2 monomials in 2 vars: x0^2, x0x1, x1^2
    Mat a = {{1, 1}, {0, 0}, {2, 1}};  // columns: g1 = x0^2 - x1^2, g2 = x0^2 + x1^2 (over F_3, -1 = 2)
    Mat b = {{1, 0}, {0, 0}, {0, 1}};  // columns: x0^2, x1^2
    Mat ab = {{1, 1, 1, 0}, {0, 0, 0, 0}, {2, 1, 0, 1}};
    size_t ra = tiny_rank(a, 3), rb = tiny_rank(b, 3), rab = tiny_rank(ab, 3);
    bool ok = ra == 2 && rb == 2 && rab == 2;
    std::printf("span F_3 {x0^2-x1^2, x0^2+x1^2} == {x0^2, x1^2}: %s\n", ok ? "OK" : "FAIL");
    return ok ? 0 : 1;
}

// ---- elliptic-limit: dim(R/f^q)_nn vs dim R_nn for R = F_p[x,y,z], f cubic.
//      f^q is a nonzerodivisor so dim(R/f^q)_nn = dim R_nn - dim R_{nn-3q};
//      once 3q > nn the two agree — the inverse limit is R^1 in every degree,
//      pinning the single table entry at 1 for both characteristics.

int cmd_elliptic_limit() {
    auto dimR = [](int d) { return d < 0 ? 0LL : choose(d + 2, 2); };
    for (int p : {5, 7}) {
        bool ok = true;
        for (int e = 0; e <= 2; e++) {
            long long q = 1;
            for (int i = 0; i < e; i++) q *= p;
            for (int nn = 0; nn <= 10; nn++) {
                long long lhs = dimR(nn) - dimR(nn - 3 * (int)q);
                if (3 * q > nn && lhs != dimR(nn)) ok = false;
            }
        }
        std::printf("elliptic limit p=%d stabilizes to dim R_n: %s\n", p, ok ? "OK" : "FAIL");
        if (!ok) return 1;
    }
    return 0;
}

// ---- mv: skew-lines Mayer-Vietoris dimension identity
//      dim(R/I)_d = dim(R/(x0,x1))_d + dim(R/(x2,x3))_d - dim(R/m)_d.

int cmd_mv() {
    bool ok = true;
    for (int d = 0; d <= 8; d++) {
        int lhs = 0;
        for (int a = 0; a <= d; a++)
            for (int b = 0; a + b <= d; b++)
                for (int c = 0; a + b + c <= d; c++) {
                    std::array<int, 4> e = {a, b, c, d - a - b - c};
                    if (!skew_divisible(e)) lhs++;
                }
        int rhs = 2 * (d + 1) - (d == 0 ? 1 : 0);
        if (lhs != rhs) ok = false;
    }
    std::printf("skew-lines Mayer-Vietoris dims: %s\n", ok ? "OK" : "FAIL");
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    const char* cmd = argc > 1 ? argv[1] : "all";
    int rc = 0;
    auto want = [&](const char* name) {
        return std::strcmp(cmd, "all") == 0 || std::strcmp(cmd, name) == 0;
    };
    if (want("hasse")) rc |= cmd_hasse();
    if (want("stable")) rc |= cmd_stable();
    if (want("hilbert")) rc |= cmd_hilbert();
    if (want("veronese")) rc |= cmd_veronese();
    if (want("span")) rc |= cmd_span();
    if (want("elliptic-limit")) rc |= cmd_elliptic_limit();
    if (want("mv")) rc |= cmd_mv();
    return rc;
}
