"""Reference pure-Python path kernels.

Mirrors the compiled extension ``langlie._kernels`` operation for
operation; :mod:`langlie.kernels` selects between the two at import.
Scalar math goes through libm (``math.erfc`` / ``math.exp``), the same
functions the compiled kernels call, so identical uniform inputs produce
bit-identical paths on either backend.
"""

from __future__ import annotations

import math

import numpy as np

PROBIT = 0
LOGISTIC = 1

_SQRT1_2 = 0.7071067811865476


def _cdf(family: int, alpha: float, beta: float, x: float) -> float:
    t = alpha + beta * x
    if family == PROBIT:
        return 0.5 * math.erfc(-t * _SQRT1_2)
    if t < -700.0:
        return 0.0
    if t > 700.0:
        return 1.0
    return 1.0 / (1.0 + math.exp(-t))


def langlie_path(family, alpha, beta, a, b, uniforms):
    """Simulate one Langlie path from pre-drawn uniforms.

    Returns (x, y, s, tau, x_next): stimuli, outcomes, cumulative sums,
    balance indices (tau[i] is the balance index after i+1 trials, 0 when
    none), and the input the rule would pick next.  The balance index is
    maintained in O(1) per step via a last-seen table over cumsum values:
    tau_n is the latest prior index at which S equalled S_n.
    """
    u = np.ascontiguousarray(uniforms, dtype=np.float64)
    n = u.shape[0]
    x = np.empty(n, dtype=np.float64)
    y = np.empty(n, dtype=np.int64)
    s = np.empty(n, dtype=np.int64)
    tau = np.empty(n, dtype=np.int64)
    if n == 0:
        return x, y, s, tau, (a + b) / 2.0

    last_seen = np.zeros(2 * n + 1, dtype=np.int64)  # index: cumsum + n
    cur = (a + b) / 2.0
    run = 0
    for i in range(n):
        x[i] = cur
        f = _cdf(family, alpha, beta, cur)
        yi = 1 if u[i] <= f else -1
        y[i] = yi
        run += yi
        s[i] = run
        t = int(last_seen[run + n])
        tau[i] = t
        last_seen[run + n] = i + 1
        if t > 0:
            cur = (x[t - 1] + cur) / 2.0
        elif yi > 0:
            cur = (a + cur) / 2.0
        else:
            cur = (cur + b) / 2.0
    return x, y, s, tau, cur


def rm_path(family, alpha, beta, x1, c, uniforms):
    """Simulate one Robbins-Monro path (steps c/n) from pre-drawn uniforms.

    Returns (x, y) where x has length n+1: x[n] is the terminal input
    X_{n+1} after all n trials.
    """
    u = np.ascontiguousarray(uniforms, dtype=np.float64)
    n = u.shape[0]
    x = np.empty(n + 1, dtype=np.float64)
    y = np.empty(n, dtype=np.int64)
    cur = float(x1)
    x[0] = cur
    for i in range(n):
        f = _cdf(family, alpha, beta, cur)
        yi = 1 if u[i] <= f else -1
        y[i] = yi
        cur = cur - (c / (i + 1)) * yi / 2.0
        x[i + 1] = cur
    return x, y


def reflected_walk_path(p, uniforms):
    """Reflected +1/-1 walk: B_1 = 1, B_{n+1} = |B_n + Z_{n+1}|, P(Z=+1)=p.

    Step n+1 consumes uniforms[n]; uniforms[0] is reserved for the
    coupled outcome process and left unused here, keeping the two
    constructions aligned on a shared stream.
    """
    u = np.ascontiguousarray(uniforms, dtype=np.float64)
    n = u.shape[0]
    b = np.empty(n, dtype=np.int64)
    if n == 0:
        return b
    cur = 1
    b[0] = cur
    for i in range(1, n):
        z = 1 if u[i] <= p else -1
        cur = abs(cur + z)
        b[i] = cur
    return b


def coupled_langlie_pair(family, alpha, beta, a, b, p, uniforms):
    """Langlie |cumsum| process and reflected walk from shared uniforms.

    Returns (a_path, b_path, x, y) with a_path[i] = |S_{i+1}| and b_path
    the reflected walk.  The outcome indicator is oriented away from the
    origin: when the running sum is negative, a success fires on
    u > 1 - F(x) instead of u <= F(x).  The conditional success
    probability given the past is F(x) either way, so the path law is
    unchanged, while an up-move of the walk (u <= p) now forces an
    outward move of |S| whenever p lower-bounds F and 1-F; that makes
    b_path <= a_path hold on every path, not just in distribution.
    """
    u = np.ascontiguousarray(uniforms, dtype=np.float64)
    n = u.shape[0]
    a_path = np.empty(n, dtype=np.int64)
    b_path = np.empty(n, dtype=np.int64)
    x = np.empty(n, dtype=np.float64)
    y = np.empty(n, dtype=np.int64)
    if n == 0:
        return a_path, b_path, x, y

    last_seen = np.zeros(2 * n + 1, dtype=np.int64)
    cur = (a + b) / 2.0
    run = 0
    bw = 1
    for i in range(n):
        x[i] = cur
        f = _cdf(family, alpha, beta, cur)
        if run < 0:
            yi = 1 if u[i] > 1.0 - f else -1
        else:
            yi = 1 if u[i] <= f else -1
        y[i] = yi
        run += yi
        a_path[i] = run if run >= 0 else -run
        if i >= 1:
            z = 1 if u[i] <= p else -1
            bw = abs(bw + z)
        b_path[i] = bw
        t = int(last_seen[run + n])
        last_seen[run + n] = i + 1
        if t > 0:
            cur = (x[t - 1] + cur) / 2.0
        elif yi > 0:
            cur = (a + cur) / 2.0
        else:
            cur = (cur + b) / 2.0
    return a_path, b_path, x, y
