"""Scalar q-arithmetic: q-Pochhammer symbols and terminating basic hypergeometric sums.

All functions are pure and operate on whatever real scalar type they are
given.  Passing ``mpmath.mpf`` arguments switches the whole evaluation to
software extended precision, which is how the high-accuracy paths elsewhere
in the package are driven; plain floats use compensated summation.
"""

from __future__ import annotations

import math

__all__ = [
    "EPS_Q",
    "DenominatorVanishes",
    "NonTerminating",
    "validate_q_base",
    "q_pochhammer",
    "phi_3_2",
    "qhahn_reference",
]

# Deformation parameters closer to 1 than this are rejected: every formula in
# the package carries (q - 1/q) factors that degenerate in the classical limit.
EPS_Q = 1e-6

# Tolerance for recognising a numerator parameter as an exact negative power
# of the series base (the terminating case).
_TERMINATION_TOL = 1e-9


class DenominatorVanishes(ArithmeticError):
    """A denominator Pochhammer factor hit zero before the series terminated."""


class NonTerminating(ValueError):
    """No numerator parameter truncates the hypergeometric sum."""


def validate_q_base(q) -> None:
    """Reject deformation parameters outside the admissible range.

    Requires q > 0 and |q - 1| > EPS_Q.
    """
    if not q > 0:
        raise ValueError(f"deformation parameter must be positive, got q={q}")
    if abs(q - 1.0) <= EPS_Q:
        raise ValueError(
            f"deformation parameter too close to 1 (|q-1| <= {EPS_Q}), got q={q}"
        )


def q_pochhammer(a, q, n: int):
    """q-shifted factorial (a; q)_n = prod_{k=0}^{n-1} (1 - a q^k).

    Parameters
    ----------
    a, q : real scalar
        Argument and base.  Any positive real base is accepted here.
    n : int
        Number of factors, n >= 0.  n = 0 returns an exact 1.
    """
    if n < 0:
        raise ValueError(f"q_pochhammer needs n >= 0, got n={n}")
    out = 1.0
    qk = 1.0  # promotes to the argument type on first multiply
    for _ in range(n):
        out = out * (1 - a * qk)
        qk = qk * q
    return out


def _accurate_sum(terms):
    if all(isinstance(t, float) for t in terms):
        return math.fsum(terms)
    total = terms[0]
    for t in terms[1:]:
        total = total + t
    return total


def _termination_order(num, q, n_terms: int) -> int:
    """Smallest m <= n_terms such that some numerator parameter equals q**-m."""
    best = None
    for a in num:
        qm = 1.0
        for m in range(n_terms + 1):
            if abs(a * qm - 1) <= _TERMINATION_TOL:
                if best is None or m < best:
                    best = m
                break
            qm = qm * q
    if best is None:
        raise NonTerminating(
            f"no numerator parameter in {tuple(num)} is q^-m for m <= {n_terms}"
        )
    return best


def phi_3_2(num, den, q, z, n_terms: int):
    """Terminating basic hypergeometric sum 3phi2(num; den; q, z).

    Evaluates sum_k [(a1;q)_k (a2;q)_k (a3;q)_k / ((b1;q)_k (b2;q)_k (q;q)_k)] z^k
    over k = 0..m, where m is fixed by the numerator parameter that equals
    q^-m.  Parameter lists are sorted internally, so the summands (and hence
    the result) are invariant under permutation of numerator entries and of
    denominator entries.

    Parameters
    ----------
    num : three real scalars
    den : two real scalars
    q, z : real scalars
    n_terms : int
        Upper bound on the termination order m.

    Raises
    ------
    NonTerminating
        No numerator parameter equals q^-m with m <= n_terms.
    DenominatorVanishes
        A (b_i; q)_k or (q; q)_k factor vanishes before the sum terminates.
    """
    num = sorted(num)
    den = sorted(den)
    if len(num) != 3 or len(den) != 2:
        raise ValueError("phi_3_2 expects three numerator and two denominator parameters")
    m = _termination_order(num, q, n_terms)
    qk = 1.0
    for k in range(m):
        for b in (*den, q):
            factor = 1 - b * qk
            if abs(factor) <= 1e-14 * (1 + abs(b * qk)):
                raise DenominatorVanishes(
                    f"denominator factor (1 - {b}*q^{k}) vanishes before termination at m={m}"
                )
        qk = qk * q
    terms = []
    zk = 1.0
    for k in range(m + 1):
        t = zk
        for a in num:
            t = t * q_pochhammer(a, q, k)
        t = t / (
            q_pochhammer(den[0], q, k)
            * q_pochhammer(den[1], q, k)
            * q_pochhammer(q, q, k)
        )
        terms.append(t)
        zk = zk * z
    return _accurate_sum(terms)


def qhahn_reference(n: int, x: int, alpha, beta, N: int, q):
    """Standard q-Hahn polynomial Q_n(q^-x; alpha, beta, N | q).

    Independent reference evaluator:
    Q_n = 3phi2(q^-n, alpha*beta*q^(n+1), q^-x; alpha*q, q^-N; q, q).
    Used to cross-check the coupled-basis pipeline, which works in base q^2.

    Requires 0 <= n <= N and 0 <= x <= N.
    """
    if not (0 <= n <= N and 0 <= x <= N):
        raise ValueError(f"need 0 <= n,x <= N, got n={n}, x={x}, N={N}")
    num = (q ** (-n), alpha * beta * q ** (n + 1), q ** (-x))
    den = (alpha * q, q ** (-N))
    return phi_3_2(num, den, q, q, min(n, x))
