#!/usr/bin/env python3
"""Prototype of the smoothed partial-zeta pipeline over Q(sqrt5), used to pin
sign conventions before the main build.  Exact fractions for Dedekind sums,
floats only for sign decisions of embedded vectors (margins are large)."""
from fractions import Fraction as Fr
from math import comb, sqrt, log
from itertools import product

TH = (1 + sqrt(5)) / 2   # J_2(theta), largest root of x^2-x-1
TH1 = (1 - sqrt(5)) / 2  # J_1(theta)

# ---------- field Q(theta), theta^2 = theta + 1; elements (a, b) = a + b*theta
def fmul(x, y):
    a, b = x; c, d = y
    # (a+bt)(c+dt) = ac + (ad+bc)t + bd t^2 ; t^2 = t+1
    return (a * c + b * d, a * d + b * c + b * d)

def fpow(x, n):
    r = (Fr(1), Fr(0))
    for _ in range(n):
        r = fmul(r, x)
    return r

def emb(x, j):  # float embedding
    a, b = x
    return float(a) + float(b) * (TH1 if j == 1 else TH)

def bernoulli_numbers(kmax):
    b = [Fr(0)] * (kmax + 1); b[0] = Fr(1)
    for m in range(1, kmax + 1):
        b[m] = -sum(comb(m + 1, j) * b[j] for j in range(m)) / (m + 1)
    return b

BN = bernoulli_numbers(16)

def bpoly(k, x):
    return sum(comb(k, j) * BN[j] * x ** (k - j) for j in range(k + 1))

def periodic_B(k, x):
    return bpoly(k, x - (x // 1) if (x - x // 1) != 0 or k != 1 else x)

def frac(x):
    return x - (x // 1)

def B_e(e, v, qsigns):
    # J = {j : e_j = 1 and v_j integral}; signs resolve b1 ambiguity
    val = Fr(1)
    for j in range(len(e)):
        if e[j] == 1 and frac(v[j]) == 0:
            assert qsigns[j] != 0
            val *= Fr(-qsigns[j], 2)
        else:
            val *= bpoly(e[j], frac(v[j]))
    return val

# ---------- 2x2 exact matrix helpers on Fractions
def minv2(m):
    (a, b), (c, d) = (tuple(Fr(x) for x in row) for row in m)
    det = a * d - b * c
    assert det != 0
    return ((d / det, -b / det), (-c / det, a / det)), det

def mvec(m, v):
    return tuple(sum(m[i][j] * v[j] for j in range(len(v))) for i in range(len(m)))

def quotient_reps(sigma):
    # integer 2x2, reps of Z^2 / sigma Z^2 by brute force box search
    (a, b), (c, d) = sigma
    det = abs(a * d - b * c)
    inv, _ = minv2(sigma)
    reps, seen = [], set()
    R = int(det) + max(abs(int(x)) for row in sigma for x in row) + 2
    for x in range(-R, R + 1):
        if len(reps) == det:
            break
        for y in range(-R, R + 1):
            co = mvec(inv, (Fr(x), Fr(y)))
            key = (frac(co[0]), frac(co[1]))
            if key not in seen:
                seen.add(key)
                reps.append((Fr(x), Fr(y)))
                if len(reps) == det:
                    break
    assert len(reps) == det, (len(reps), det)
    return reps

def dedekind_D(sigma, e, Qfield, v):
    # Qfield: tuple of field elements (q1, q2); signs taken at embedding J_2
    inv, _ = minv2(sigma)
    # signs of (sigma^{-1} Q)_j : rational combos of field elems, eval at J_2
    qs = []
    for i in range(2):
        elem = (inv[i][0] * Qfield[0][0] + inv[i][1] * Qfield[1][0],
                inv[i][0] * Qfield[0][1] + inv[i][1] * Qfield[1][1])
        val = emb(elem, 2)
        assert abs(val) > 1e-9
        qs.append(1 if val > 0 else -1)
    tot = Fr(0)
    for x in quotient_reps(sigma):
        vv = mvec(inv, (x[0] + v[0], x[1] + v[1]))
        tot += B_e(e, vv, qs)
    return tot

def dedekind_D_ell(sigma, e, Qf, v, ell):
    (a, b), (c, d) = sigma
    assert c % ell == 0 and d % ell == 0
    sig_l = ((a, b), (c // ell, d // ell))
    Qf_l = (tuple(ell * t for t in Qf[0]), Qf[1])
    v_l = (ell * v[0], v[1])
    eb = sum(e)
    return dedekind_D(sig_l, e, Qf_l, v_l) - Fr(ell) ** (1 - 2 + eb) * dedekind_D(sigma, e, Qf, v)

def poly_mul(p, q, nmax=20):
    r = {}
    for (i, j), c in p.items():
        for (k, l), d in q.items():
            r[(i + k, j + l)] = r.get((i + k, j + l), Fr(0)) + c * d
    return r

def prk(fM, sigma, k):
    # fM: dict monomial->coeff in x1,x2 ; returns dict r -> P_r^k = r! coeff of z^r in fM(z sigma^t)^k
    # x_i := (z sigma^t)_i = sum_j z_j sigma[i][j]   (row i of sigma dotted with z)
    x1 = {(1, 0): Fr(sigma[0][0]), (0, 1): Fr(sigma[0][1])}
    x2 = {(1, 0): Fr(sigma[1][0]), (0, 1): Fr(sigma[1][1])}
    sub = {(0, 0): Fr(0)}
    acc = {}
    for (i, j), c in fM.items():
        term = {(0, 0): c}
        for _ in range(i):
            term = poly_mul(term, x1)
        for _ in range(j):
            term = poly_mul(term, x2)
        for m, d in term.items():
            acc[m] = acc.get(m, Fr(0)) + d
    res = {(0, 0): Fr(1)}
    for _ in range(k):
        res = poly_mul(res, acc)
    out = {}
    for (i, j), c in res.items():
        if c != 0:
            fact = 1
            for t in range(2, i + 1):
                fact *= t
            for t in range(2, j + 1):
                fact *= t
            out[(i, j)] = c * fact
    return out

def factorial(n):
    r = 1
    for t in range(2, n + 1):
        r *= t
    return r

def smoothed_value(sigma, fM, Qf, v, ell, k):
    # (-1)^n sgn(det sigma) sum_r P_r^k(sigma)/(ell^{|r|} (r+1)!) D_ell(sigma, r+1, Q, v)
    (a, b), (c, d) = sigma
    det = a * d - b * c
    sgn = 1 if det > 0 else -1
    tot = Fr(0)
    for (r1, r2), P in prk(fM, sigma, k).items():
        D = dedekind_D_ell(sigma, (r1 + 1, r2 + 1), Qf, v, ell)
        tot += P * D / (Fr(ell) ** (r1 + r2) * factorial(r1 + 1) * factorial(r2 + 1))
    return Fr((-1) ** 2) * sgn * tot

# ---------- flagship data
# field Q(theta), a = f = (1), c = (4 - theta) with norm 11, ell = 11
# adapted basis of O: w1 = -1 + 3 theta  (in  c),  w2 = theta
w1 = (Fr(-1), Fr(3)); w2 = (Fr(0), Fr(1))
ell = 11

def coords_in_w(x):
    # solve x = a w1 + b w2  : x = (-a) + (3a + b) theta
    a = -x[0]
    b = x[1] - 3 * a
    return (a, b)

eps = (Fr(1), Fr(1))  # theta + 1, totally positive fundamental unit
# sigma tilde: columns = coords of w1 * v_i, v_1 = 1, v_2 = eps
c1 = coords_in_w(fmul(w1, (Fr(1), Fr(0))))
c2 = coords_in_w(fmul(w1, eps))
sigma = ((int(c1[0]), int(c2[0])), (int(c1[1]), int(c2[1])))
print("sigma =", sigma)

# f_M = N(a) * N(w1 x1 + w2 x2) = N((-x1) + (3x1 + x2) theta)
# N(p + q theta) = p^2 + pq - q^2  (since N(theta) = -1, Tr(theta) = 1)
def norm_pq(p, q):  # as polynomial: (p + q th)(p + q th') = p^2 + pq*Tr(th)... careful
    # N(p+q th) = p^2 + p q Tr(th) + q^2 N(th) = p^2 + pq - q^2
    return None
# w1 x1 + w2 x2 = (-x1) + (3 x1 + x2) theta  => p = -x1, q = 3x1 + x2
# N = p^2 + p q - q^2 = x1^2 - x1(3x1+x2) - (3x1+x2)^2
#   = x1^2 - 3x1^2 - x1 x2 - 9x1^2 - 6 x1 x2 - x2^2 = -11 x1^2 - 7 x1 x2 - x2^2
fM = {(2, 0): Fr(-11), (1, 1): Fr(-7), (0, 2): Fr(-1)}

# Q = (J_2(w1*), J_2(w2*)) as field elements; w* dual basis of w under trace
# Gram = [[Tr(w1 w1), Tr(w1 w2)], [.., Tr(w2 w2)]] = [[23, 8], [8, 3]]
# w* = w . Gram^{-1}
G = ((Fr(23), Fr(8)), (Fr(8), Fr(3)))
Gi, _ = minv2(G)
ws1 = (Gi[0][0] * w1[0] + Gi[1][0] * w2[0], Gi[0][0] * w1[1] + Gi[1][0] * w2[1])
ws2 = (Gi[0][1] * w1[0] + Gi[1][1] * w2[0], Gi[0][1] * w1[1] + Gi[1][1] * w2[1])
print("w1* =", ws1, " w2* =", ws2)
# check Tr(w_i w*_j) = delta: Tr(a+b th) = 2a + b
def tr(x):
    return 2 * x[0] + x[1]
assert tr(fmul(w1, ws1)) == 1 and tr(fmul(w1, ws2)) == 0
assert tr(fmul(w2, ws1)) == 0 and tr(fmul(w2, ws2)) == 1
Qf = (ws1, ws2)
# v: 1 = v1 w1 + v2 w2
v = coords_in_w((Fr(1), Fr(0)))
print("v =", v)

# w_eps = sign(log J_1(eps)) = -1 ; n=2: zeta = (-1)^{n-1} w_eps * sum_{sigma in S_1} sgn * value
w_eps = -1 if log(emb(eps, 1)) < 0 else 1
print("w_eps =", w_eps)
for k in (0, 1, 3):
    val = smoothed_value(sigma, fM, Qf, v, ell, k)
    total = (-1) ** 1 * w_eps * val
    print(f"k={k}: smoothed zeta = {total}")

# =================== independent float series route ===================
import itertools

T = 14  # truncation (total degree)

def s_zero():
    return {}

def s_add(a, b):
    r = dict(a)
    for m, c in b.items():
        r[m] = r.get(m, 0.0) + c
    return r

def s_scale(a, c):
    return {m: v * c for m, v in a.items()}

def s_mul(a, b, tr=T):
    r = {}
    for (i, j), c in a.items():
        for (k, l), d in b.items():
            if i + k + j + l <= tr:
                r[(i + k, j + l)] = r.get((i + k, j + l), 0.0) + c * d
    return r

def s_exp(lin, tr=T):  # exp(l1 z1 + l2 z2)
    import math
    r = {}
    l1, l2 = lin
    for i in range(tr + 1):
        for j in range(tr + 1 - i):
            r[(i, j)] = l1 ** i * l2 ** j / (math.factorial(i) * math.factorial(j))
    return r

def s_inv(a, tr=T):  # invert series with nonzero constant term, by total degree
    c0 = a.get((0, 0), 0.0)
    assert abs(c0) > 1e-300
    r = {(0, 0): 1.0 / c0}
    # iterate: r_{d} = -(sum_{e<d} a_{d-e} r_e)/c0 done degree by degree
    for d in range(1, tr + 1):
        for i in range(d + 1):
            j = d - i
            s = 0.0
            for (p, q), av in a.items():
                if (p, q) != (0, 0) and p <= i and q <= j:
                    s += av * r.get((i - p, j - q), 0.0)
            r[(i, j)] = -s / c0
    return r

def h_cone(gens, v, M):
    """h(C,v)(zM^t) as (numerator series, list of denominator form coeff vectors).
    gens: list of integer column vectors; v: rational 2-vector; M: 2x2 float rows."""
    # numerator points: P cap (v + Z^2) -- enumerate via box search using coords
    pts = []
    r = len(gens)
    if r == 0:
        if frac(v[0]) == 0 and frac(v[1]) == 0:
            pts = [(Fr(0), Fr(0))]
        else:
            return None  # empty
    elif r == 2:
        sig = ((gens[0][0], gens[1][0]), (gens[0][1], gens[1][1]))
        inv, det = minv2(sig)
        for x in quotient_reps(sig):
            co = mvec(inv, (x[0] + v[0], x[1] + v[1]))
            # shift into (0,1]
            co = tuple(c - (c.__floor__()) if c != c.__floor__() else Fr(1) if False else c for c in co)
            co = tuple((c - (c // 1)) if (c - (c // 1)) != 0 else Fr(1) for c in co)
            a = (sig[0][0] * co[0] + sig[0][1] * co[1], sig[1][0] * co[0] + sig[1][1] * co[1])
            pts.append(a)
    elif r == 1:
        # points a = t * g, a ≡ v mod Z^2, t in (0,1]: need t*g - v integral
        g = gens[0]
        # t*g1 - v1 in Z and t*g2 - v2 in Z. t rational with denominator dividing...
        found = []
        for den in range(1, 200):
            for num in range(1, den + 1):
                t = Fr(num, den)
                a = (t * g[0], t * g[1])
                if frac(a[0] - v[0]) == 0 and frac(a[1] - v[1]) == 0:
                    if a not in found:
                        found.append(a)
        # dedupe: lattice points in half-open segment
        pts = found
    num = s_zero()
    forms = []
    for g in gens:
        # form = z (M^t g) : coeffs l_j = sum_i M_ij g_i ... (M^t g)_j = sum_i M[i][j] g[i]
        l = (M[0][0] * g[0] + M[1][0] * g[1], M[0][1] * g[0] + M[1][1] * g[1])
        forms.append(l)
    for a in pts:
        af = (float(a[0]), float(a[1]))
        # exponent vector under zM^t: e^{a . u} with u_i = (zM^t)_i: a.u = z (M^t a)
        lin = (M[0][0] * af[0] + M[1][0] * af[1], M[0][1] * af[0] + M[1][1] * af[1])
        term = s_exp(lin)
        for l in forms:
            # 1 - e^{L} = -L * unit, unit = sum_k L^k/(k+1)!
            import math
            unit = {}
            for i in range(T + 1):
                for j in range(T + 1 - i):
                    # coeff of z^(i,j) in sum_k (l.z)^k/(k+1)! : k = i+j: C(i+j,i) l1^i l2^j/(i+j+1)!
                    unit[(i, j)] = comb(i + j, i) * l[0] ** i * l[1] ** j / math.factorial(i + j + 1)
            term = s_mul(term, s_inv(unit))
        num = s_add(num, term)
    sign = (-1) ** len(gens)
    num = s_scale(num, float(sign))
    return (num, forms)

def delta_kj_float(num, forms, j, k, n=2):
    d = len(forms)
    # L-hat_i = forms with z_j -> 1: constant = l_{i,j}; others unchanged (no z_j)
    # p-hat = prod L-hat_i : series in the OTHER variable only (n=2: single other var)
    oth = 1 - j
    # build p-hat as univariate dict deg -> coeff (variable = z_oth)
    ph = {0: 1.0}
    for l in forms:
        nl = {0: l[j], 1: l[oth]}
        r = {}
        for a, c in ph.items():
            for b, e in nl.items():
                r[a + b] = r.get(a + b, 0.0) + c * e
        ph = r
    # invert univariate to degree (n-1)k = k
    c0 = ph[0]
    assert abs(c0) > 1e-300
    inv = {0: 1.0 / c0}
    for deg in range(1, k + 1):
        s = sum(ph.get(t, 0.0) * inv.get(deg - t, 0.0) for t in range(1, deg + 1))
        inv[deg] = -s / c0
    # delta_kj = sum over monomials m of num with |m| = nk + d, m_oth <= k:
    #            num_m * inv[k - m_oth]
    tot = 0.0
    for (m0, m1), c in num.items():
        m = (m0, m1)
        if m0 + m1 == n * k + d and m[oth] <= k:
            tot += c * inv[k - m[oth]]
    return tot

def delta_k_float(hd, k, n=2):
    import math
    num, forms = hd
    return math.factorial(k) ** n / n * sum(delta_kj_float(num, forms, j, k) for j in range(n))

def psi_sh_value(sigma_cols, Qsigns_fn, v, M, k):
    """Delta^k of h(Phi_Sh(A)(Q), v)(zM^t): sum over weighted faces."""
    # weights from signs of (sigma^{-1} Q)_i
    s1, s2 = Qsigns_fn()
    det = sigma_cols[0][0] * sigma_cols[1][1] - sigma_cols[0][1] * sigma_cols[1][0]
    sgn = 1 if det > 0 else -1
    total = 0.0
    for I in [(), (0,), (1,), (0, 1)]:
        comp = [i for i in (0, 1) if i not in I]
        w = 1
        for i in comp:
            s = (s1, s2)[i]
            w *= (1 + s) // 2
        if w == 0:
            continue
        gens = [sigma_cols[i] for i in I]
        hd = h_cone(gens, v, M)
        if hd is None:
            continue
        total += delta_k_float(hd, k)
    return sgn * total

# flagship series route
import math
w1f = (float(w1[0]) + float(w1[1]) * TH1, float(w1[0]) + float(w1[1]) * TH)  # (J1 w1, J2 w1)
w2f = (float(w2[0]) + float(w2[1]) * TH1, float(w2[0]) + float(w2[1]) * TH)
Mf = [[w1f[0], w1f[1]], [w2f[0], w2f[1]]]  # M_ij = J_j(w_i), N(a)=1

sig_cols = [(1, 0), (-2, 11)]

def qsigns_plain():
    # signs of (sigma^{-1} Q)_i at J_2 where Q = (J2 w1*, J2 w2*)
    inv, _ = minv2(((1, -2), (0, 11)))
    out = []
    for i in range(2):
        e = (inv[i][0] * Qf[0][0] + inv[i][1] * Qf[1][0], inv[i][0] * Qf[0][1] + inv[i][1] * Qf[1][1])
        out.append(1 if emb(e, 2) > 0 else -1)
    return tuple(out)

vv = (v[0], v[1])
unsmoothed = psi_sh_value(sig_cols, qsigns_plain, vv, Mf, 1)
print("\nseries route: Delta^1 Psi_Sh (A, M, Q, v) =", unsmoothed)
print("  zeta pairing (-1)^{n-1} w_eps * that =", (-1) * w_eps * unsmoothed, " expect 1/30 =", 1 / 30)

# smoothed series route: pi_l conjugation
sig_cols_l = [(11, 0), (-22, 11)]  # pi_l * columns (cones scale-invariant; keep as is)
def qsigns_l():
    inv, _ = minv2(((11, -22), (0, 11)))
    Qscaled = (tuple(11 * t for t in Qf[0]), Qf[1])
    out = []
    for i in range(2):
        e = (inv[i][0] * Qscaled[0][0] + inv[i][1] * Qscaled[1][0], inv[i][0] * Qscaled[0][1] + inv[i][1] * Qscaled[1][1])
        out.append(1 if emb(e, 2) > 0 else -1)
    return tuple(out)
Mf_l = [[w1f[0] / 11, w1f[1] / 11], [w2f[0], w2f[1]]]  # pi_l^{-1} M: first ROW /11
vv_l = (11 * v[0], v[1])
for k in (0, 1):
    t1 = psi_sh_value(sig_cols_l, qsigns_l, vv_l, Mf_l, k)
    t2 = psi_sh_value(sig_cols, qsigns_plain, vv, Mf, k)
    sm = t1 - 11 * t2
    print(f"series smoothed k={k}: {sm}; zeta assembly = {(-1)*w_eps*sm}; dedekind route gave {float(smoothed_value(sigma, fM, Qf, v, ell, k))}")

# =================== convention pinning experiments ===================
print("\n--- twisted tuple (first cols = coords of v_i) ---")
sig_tw_cols = [(-1, 3), (-1, 4)]
def qsigns_tw():
    inv, _ = minv2(((-1, -1), (3, 4)))
    out = []
    for i in range(2):
        e = (inv[i][0] * Qf[0][0] + inv[i][1] * Qf[1][0], inv[i][0] * Qf[0][1] + inv[i][1] * Qf[1][1])
        out.append(1 if emb(e, 2) > 0 else -1)
    return tuple(out)
tw = psi_sh_value(sig_tw_cols, qsigns_tw, vv, Mf, 1)
print("twisted Delta^1 Psi_Sh =", tw, " (untwisted was", unsmoothed, ")")

print("\n--- second basis w' = (-1+3theta, -theta), det J(w') > 0 ---")
w1b = (Fr(-1), Fr(3)); w2b = (Fr(0), Fr(-1))
def coords_in_wb(x):
    # x = a w1b + b w2b = -a + (3a - b) theta
    a = -x[0]; b = 3 * a - x[1]
    return (a, b)
c1b = coords_in_wb(fmul(w1b, (Fr(1), Fr(0))))
c2b = coords_in_wb(fmul(w1b, eps))
sigb_cols = [(int(c1b[0]), int(c1b[1])), (int(c2b[0]), int(c2b[1]))]
print("sigma_b cols =", sigb_cols)
# Gram for (w1b, w2b): Tr(w1b^2)=23, Tr(w1b w2b)=-8, Tr(w2b^2)=3
Gb = ((Fr(23), Fr(-8)), (Fr(-8), Fr(3)))
Gbi, _ = minv2(Gb)
wsb1 = (Gbi[0][0] * w1b[0] + Gbi[1][0] * w2b[0], Gbi[0][0] * w1b[1] + Gbi[1][0] * w2b[1])
wsb2 = (Gbi[0][1] * w1b[0] + Gbi[1][1] * w2b[0], Gbi[0][1] * w1b[1] + Gbi[1][1] * w2b[1])
def trc(x): return 2 * x[0] + x[1]
assert trc(fmul(w1b, wsb1)) == 1 and trc(fmul(w2b, wsb2)) == 1 and trc(fmul(w1b, wsb2)) == 0
Qfb = (wsb1, wsb2)
vb = coords_in_wb((Fr(1), Fr(0)))
w1bf = (float(w1b[0]) + float(w1b[1]) * TH1, float(w1b[0]) + float(w1b[1]) * TH)
w2bf = (float(w2b[0]) + float(w2b[1]) * TH1, float(w2b[0]) + float(w2b[1]) * TH)
Mfb = [[w1bf[0], w1bf[1]], [w2bf[0], w2bf[1]]]
sigb = ((sigb_cols[0][0], sigb_cols[1][0]), (sigb_cols[0][1], sigb_cols[1][1]))
def qsigns_b():
    inv, _ = minv2(sigb)
    out = []
    for i in range(2):
        e = (inv[i][0] * Qfb[0][0] + inv[i][1] * Qfb[1][0], inv[i][0] * Qfb[0][1] + inv[i][1] * Qfb[1][1])
        out.append(1 if emb(e, 2) > 0 else -1)
    return tuple(out)
ub = psi_sh_value(sigb_cols, qsigns_b, (vb[0], vb[1]), Mfb, 1)
print("basis-b Delta^1 Psi_Sh =", ub)
print("detJ(w) signs: basis a: -, basis b: +")
# dedekind smoothed with basis b
smb = smoothed_value(sigb, {(2, 0): Fr(-11), (1, 1): Fr(7), (0, 2): Fr(-1)}, Qfb, vb, ell, 1)
# f_M for basis b: N(w1b x1 + w2b x2) = N(-x1 + (3x1 - x2) theta): p=-x1,q=3x1-x2
# p^2+pq-q^2 = x1^2 -x1(3x1-x2) - (3x1-x2)^2 = x1^2-3x1^2+x1x2 -9x1^2+6x1x2-x2^2 = -11x1^2+7x1x2-x2^2
print("basis-b dedekind-route smoothed k=1:", smb)

# =================== criterion 2: two classes, f = (sqrt5) ===================
print("\n--- criterion 2: f = (2theta-1), classes O and (2), c = (4-theta), ell=11, k=1 ---")
eps2 = fmul(eps, eps)  # 3theta+2, congruent 1 mod f
w_eps2 = -1 if log(emb(eps2, 1)) < 0 else 1

def gram(u, v_):
    def trc(x): return 2 * x[0] + x[1]
    return trc(fmul(u, v_))

def zeta_class(w1e, w2e, Na, k):
    # returns smoothed S = sgn(detJw) * ell^{(n-1)k} * (-1)^{n-1} w_eps * value
    # coords solve: x = a w1e + b w2e  in power basis: [w1e | w2e] matrix
    L = ((w1e[0], w2e[0]), (w1e[1], w2e[1]))
    Li, Ldet = minv2(L)
    def coords(x):
        return mvec(Li, x)
    c1 = coords(fmul(w1e, (Fr(1), Fr(0))))
    c2 = coords(fmul(w1e, eps2))
    sig = ((int(c1[0]), int(c2[0])), (int(c1[1]), int(c2[1])))
    assert sig[1][0] % 11 == 0 and sig[1][1] % 11 == 0, sig
    # f_M = Na * N(w1e x + w2e y): N(p + q theta) = p^2 + pq - q^2
    # p = w1e[0] x + w2e[0] y ; q = w1e[1] x + w2e[1] y
    a0, b0 = w1e; a1, b1 = w2e
    fm = {}
    # p^2 + p q - q^2 coefficients
    fm[(2, 0)] = Na * (a0 * a0 + a0 * b0 - b0 * b0)
    fm[(1, 1)] = Na * (2 * a0 * a1 + a0 * b1 + a1 * b0 - 2 * b0 * b1)
    fm[(0, 2)] = Na * (a1 * a1 + a1 * b1 - b1 * b1)
    # dual basis
    G = ((gram(w1e, w1e), gram(w1e, w2e)), (gram(w1e, w2e), gram(w2e, w2e)))
    Gi, _ = minv2(G)
    ws1_ = (Gi[0][0] * w1e[0] + Gi[1][0] * w2e[0], Gi[0][0] * w1e[1] + Gi[1][0] * w2e[1])
    ws2_ = (Gi[0][1] * w1e[0] + Gi[1][1] * w2e[0], Gi[0][1] * w1e[1] + Gi[1][1] * w2e[1])
    Qe = (ws1_, ws2_)
    vq = coords((Fr(1), Fr(0)))
    detJw = emb(w1e, 1) * emb(w2e, 2) - emb(w2e, 1) * emb(w1e, 2)
    sj = 1 if detJw > 0 else -1
    val = smoothed_value(sig, fm, Qe, vq, 11, k)
    return sj * Fr(11) ** k * (-1) * w_eps2 * val

w1_c1 = (Fr(-6), Fr(7))   # 7theta - 6
w2_c1 = (Fr(-1), Fr(2))   # 2theta - 1
S1 = zeta_class(w1_c1, w2_c1, Fr(1), 1)
w1_c2 = (Fr(-3), Fr(7, 2))
w2_c2 = (Fr(-1, 2), Fr(1))
S2 = zeta_class(w1_c2, w2_c2, Fr(4), 1)
print("S(O) =", S1, " S((2)) =", S2, " sum =", S1 + S2, " expect 16")
print("unsmoothed sum =", (S1 + S2) / (1 - 11 ** 2), " expect -2/15 =", Fr(-2, 15))

# flagship with the pinned normalization
print("\n--- flagship with pinned normalization ---")
detJw_a = emb(w1, 1) * emb(w2, 2) - emb(w2, 1) * emb(w1, 2)
sj_a = 1 if detJw_a > 0 else -1
for k in (0, 1, 3):
    val = smoothed_value(sigma, fM, Qf, v, ell, k)
    total = sj_a * Fr(11) ** k * (-1) * w_eps * val
    print(f"k={k}: smoothed zeta = {total}")
