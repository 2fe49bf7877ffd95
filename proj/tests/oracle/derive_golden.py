#!/usr/bin/env python3
"""Independent numpy oracle for the frozen values in tests/golden.hpp.

Shares no code with the C++ library. Rerun after changing a definition and
compare against the header before editing it:

    python3 tests/oracle/derive_golden.py
"""
import numpy as np

SX = np.array([[0, 1], [1, 0]], complex)
SY = np.array([[0, -1j], [1j, 0]])
SZ = np.diag([1.0, -1.0]).astype(complex)


def split(a):
    return (a + a.conj().T) / 2, -0.5j * (a - a.conj().T)


def h_of(a):
    d = a.shape[0]
    eye = np.eye(d)
    return (np.kron(a, eye) - np.kron(eye, a.T)) / np.sqrt(2)


def h_tot(ops):
    d = ops[0].shape[0]
    t = np.zeros((d * d, d * d), complex)
    for a in ops:
        for part in split(a):
            h = h_of(part)
            t += h @ h
    return t


def spectrum(ops):
    e = np.linalg.eigvalsh(h_tot(ops))
    tol = 1e-8 * max(1.0, e[-1])
    eps0 = e[0]
    eps1 = next(x for x in e if x > eps0 + tol)
    return eps0, eps1


def spin(twice_j):
    j = twice_j / 2
    m = np.arange(j, -j - 1, -1)
    d = len(m)
    jp = np.zeros((d, d), complex)
    for k in range(1, d):
        jp[k - 1, k] = np.sqrt(j * (j + 1) - m[k] * (m[k] + 1))
    jx = (jp + jp.conj().T) / 2
    jy = (jp - jp.conj().T) / 2j
    return [jx, jy, np.diag(m).astype(complex)]


def alpha_scan_transposed(ops, grid):
    t = h_tot(ops)
    best = 0.0
    for a in ops:
        for part in split(a):
            w = np.linalg.eigvalsh(part)
            d = part.shape[0]
            vals = [np.linalg.eigvalsh(t + np.kron(part - x * np.eye(d), (part - x * np.eye(d)).T))[0]
                    for x in np.linspace(w[0], w[-1], grid)]
            best = max(best, min(vals))
    return max(best, np.linalg.eigvalsh(t)[0])


def symmetric_basis(d):
    cols = []
    for i in range(d):
        for j in range(i, d):
            v = np.zeros(d * d)
            v[i * d + j] += 1
            v[j * d + i] += 1
            cols.append(v / np.linalg.norm(v))
    return np.array(cols).T


def alpha_scan_symmetric(ops, grid):
    d = ops[0].shape[0]
    eye = np.eye(d)
    parts = [p for a in ops for p in split(a)]
    g = sum((np.kron(p @ p, eye) + np.kron(eye, p @ p)) / 2 - np.kron(p, p) for p in parts)
    basis = symmetric_basis(d)
    ground = lambda m: np.linalg.eigvalsh(basis.T @ m @ basis)[0]
    best = 0.0
    for p in parts:
        w = np.linalg.eigvalsh(p)
        vals = [ground(g + np.kron(p - x * eye, p - x * eye)) for x in np.linspace(w[0], w[-1], grid)]
        best = max(best, min(vals))
    return max(best, ground(g))


def power_mean(x, y, nu):
    if x <= 0 or y <= 0:
        return 0.0
    if nu == 0:
        return np.sqrt(x * y)
    if nu == -np.inf:
        return min(x, y)
    return ((x ** nu + y ** nu) / 2) ** (1 / nu)


def gen_skew(a, rho, nu):
    lam, v = np.linalg.eigh(rho)
    ap = v.conj().T @ a @ v
    total = 0.5 * np.trace(rho @ (a.conj().T @ a + a @ a.conj().T)).real
    for i in range(len(lam)):
        for j in range(len(lam)):
            total -= power_mean(lam[i], lam[j], nu) * 0.5 * (abs(ap[i, j]) ** 2 + abs(ap[j, i]) ** 2)
    return total


def wy_skew(a, rho):
    lam, v = np.linalg.eigh(rho)
    root = v @ np.diag(np.sqrt(np.clip(lam, 0, None))) @ v.conj().T
    c = root @ a - a @ root
    return 0.5 * np.trace(c.conj().T @ c).real


def main():
    np.set_printoptions(precision=17)
    a1 = np.array([[0, 1, 0], [1, 0, 1j], [0, -1j, 0]])
    a2 = np.diag([1, 0, -1]).astype(complex)
    a3 = np.array([[1, 1, 0], [1, 0, -1], [0, -1, -1]], complex)
    a4 = np.array([[1, 0, 1j], [0, 0, 0], [-1j, 0, -1]])
    ex2 = [a1, a2, a3, a4]
    e0, e1 = spectrum(ex2)
    print(f"example2 eps0={e0:.3e} eps1={e1:.12f} pure={e1 * 2 / 3:.12f}")
    print(f"example2 alpha_transposed(201)={alpha_scan_transposed(ex2, 201):.12f}")
    print(f"example2 alpha_symmetric(201)={alpha_scan_symmetric(ex2, 201):.12f}")

    for tj in (1, 2, 3, 4):
        e0, e1 = spectrum(spin(tj))
        print(f"spin twice_j={tj} eps0={e0:.3e} eps1={e1:.12f}")

    for p in (0.1, 0.5, 0.9):
        q, r = np.sqrt(1 - p), np.sqrt(p)
        kraus = [np.diag([1, q]).astype(complex), np.diag([0, r]).astype(complex),
                 np.diag([1, q]).astype(complex), np.array([[0, r], [0, 0]], complex)]
        e0, e1 = spectrum(kraus)
        print(f"damping p={p} eps0={e0:.3e} eps1={e1:.12f}")

    s1 = np.array([[1, 1 - 0.5j], [1 + 0.5j, -1]])
    s2 = np.array([[1, 0.5 + 0.5j], [0.5 - 0.5j, -1]])
    s3 = 0.5 * np.array([[1, -1 - 1j], [-1 + 1j, -1]])
    s4 = np.array([[-1, 0.5 + 0.5j], [0.5 - 0.5j, 1]])
    ex4 = [s1, s2, s3, s4]
    rho = np.diag([0.3, 0.7]).astype(complex)
    e0, e1 = spectrum(ex4)
    root = np.sqrt(0.3) + np.sqrt(0.7)
    print(f"example4 eps1={e1:.12f} bound38={e1 * (1 - root ** 2 / 2):.12f}")
    big_l = alpha_scan_symmetric(ex4, 201)
    print(f"example4 L_symmetric(201)={big_l:.12f} spectral_pure={e1 / 2:.12f}")
    for nu in (0, -1, -2, -np.inf):
        bracket = 1 - 2 * power_mean(0.3, 0.7, nu)
        total = sum(gen_skew(s, rho, nu) for s in ex4)
        print(f"example4 nu={nu} bracket={bracket:.12f} bound42={bracket * big_l:.12f} sum={total:.12f}")

    sx_rho = wy_skew(SX, rho)
    print(f"wy(sigma_x, diag(0.3,0.7))={sx_rho:.15f} closed={1 - 2 * np.sqrt(0.21):.15f}")
    print(f"fisher/4(sigma_x)={gen_skew(SX, rho, -1):.15f}")
    print(f"embedding norms s=0.3: {0.3 ** 0.6 + 0.7 ** 0.6:.15f} {0.3 ** 1.4 + 0.7 ** 1.4:.15f}")

    # Pure-state spectral bound for two spin-1/2 directions vs (1 - |a.b|)/4.
    a = np.array([1.0, 0.0, 0.0])
    b = np.array([np.cos(0.7), np.sin(0.7), 0.0])
    sa = 0.5 * (a[0] * SX + a[1] * SY + a[2] * SZ)
    sb = 0.5 * (b[0] * SX + b[1] * SY + b[2] * SZ)
    e0, e1 = spectrum([sa, sb])
    print(f"two directions angle 0.7: spectral_pure={e1 / 2:.15f} target={(1 - abs(a @ b)) / 4:.15f}")


if __name__ == "__main__":
    main()
