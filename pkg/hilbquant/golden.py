"""Exact reference values for two points on the A_1 surface.

Basis (normalized, exceptional labels): b1 = p_-1(E)^2/2, b2 = p_-2(E)/2,
b3 = p_-1(E) p_-1(1), b4 = p_-1(1)^2/2, b5 = p_-2(1)/2.
"""
from .exactalg import coefficient_field, diagonal, matrix


def _symbols():
    cf = coefficient_field(1)
    return cf, cf.t1, cf.t2, cf.theta, cf.q, cf.s[0]


def golden_gram():
    cf, t1, t2, _, _, _ = _symbols()
    return diagonal([cf(2), cf.one, -1 / (t1 * t2), 1 / (8 * t1 ** 2 * t2 ** 2), -1 / (4 * t1 * t2)], cf)


def golden_e_alpha():
    """E_alpha in the normalized basis, columns are images."""
    cf = coefficient_field(1)
    x = cf.x
    P = -(x + 1 / x)
    R = 1 / x - x
    z = cf.zero
    return matrix([
        [2 * P, R, z, z, z],
        [2 * R, P - 2, z, z, z],
        [z, z, cf(-2), z, z],
        [z, z, z, z, z],
        [z, z, z, z, z],
    ], cf)


def golden_classical():
    cf, t1, t2, th, _, _ = _symbols()
    half = cf.rational(1, 2)
    z = cf.zero
    omega = [
        [-2 * th, z, cf(-1), z, z],
        [z, -2 * th, z, z, cf(-1)],
        [2 * t1 * t2, z, -th, -half, z],
        [z, z, 4 * t1 * t2, z, z],
        [z, 4 * t1 * t2, z, z, z],
    ]
    divisor = [
        [z, -th, z, z, -half],
        [-2 * th, -th, cf(-2), z, z],
        [z, 2 * t1 * t2, z, z, z],
        [z, z, z, z, 2 * t1 * t2],
        [4 * t1 * t2, z, z, cf(-1), -th],
    ]
    return {'omega:1': omega, 'D': divisor}


def golden_matrices() -> dict:
    cf, _, _, th, q, s = _symbols()
    Ds = (1 + s * q) * (1 + s / q)
    P = q + 1 / q
    rows = golden_classical()

    omega = [list(row) for row in rows['omega:1']]
    omega[0][0] = -2 * th * (1 - s ** 2) / Ds
    omega[0][1] = th * s * (q - 1 / q) / Ds
    omega[1][0] = 2 * th * s * (q - 1 / q) / Ds
    omega[1][1] = -2 * th + th * s * (P + 2 * s) / Ds - 2 * th * s / (1 - s)
    omega[2][2] = -th * (1 + s) / (1 - s)

    punctual = -th * (1 + q) / (1 - q)
    divisor = [list(row) for row in rows['D']]
    divisor[0][0] = 2 * th * s * (q - 1 / q) / Ds
    divisor[0][1] = -th * (1 - s ** 2) / Ds
    divisor[1][0] = -2 * th * (1 - s ** 2) / Ds
    divisor[1][1] = punctual + th * s * (q - 1 / q) / Ds
    divisor[4][4] = punctual
    return {'omega:1': matrix(omega, cf), 'D': matrix(divisor, cf)}
