"""Lambert W (product log) on the non-negative reals, plus the derived
parameters tau = sqrt(log n / W(log n)) and beta = tau^(tau^2) used by the
staged sublinear cop strategy.

The iteration runs on mpmath big floats: near x = 1e6 the residual
w*e^w - x of even a correctly rounded float64 result is around 1e-9, so a
1e-12 residual guarantee is only meaningful in extended precision.
"""

from __future__ import annotations

from dataclasses import dataclass

import mpmath as mp


def lambert_w(x, dps: int = 40) -> mp.mpf:
    """W(x) for x >= 0: the unique w >= 0 with w * e^w = x.

    Halley iteration from a log-based initial guess, carried out at
    ``dps`` decimal digits; the result satisfies |w*e^w - x| <= 1e-12
    comfortably for x up to 1e6 and beyond.
    """
    with mp.workdps(dps):
        xv = mp.mpf(x)
        if xv < 0:
            raise ValueError("lambert_w is only defined for x >= 0 here")
        if xv == 0:
            return mp.mpf(0)
        if xv > mp.e:
            lx = mp.log(xv)
            w = lx - mp.log(lx)
        else:
            w = mp.log(1 + xv)
        tol = mp.mpf(10) ** (-(dps - 5))
        for _ in range(200):
            ew = mp.exp(w)
            f = w * ew - xv
            # Halley: dw = f / (f' - f*f''/(2 f')), f' = e^w (1+w), f'' = e^w (2+w)
            fp = ew * (1 + w)
            dw = f / (fp - f * (w + 2) / (2 * (1 + w)))
            w = w - dw
            if abs(dw) <= tol * max(mp.mpf(1), abs(w)):
                break
        else:
            raise ArithmeticError(f"lambert_w failed to converge for x={x}")
        return +w


@dataclass(frozen=True)
class LambertParams:
    """tau and beta for a graph order n (natural logarithm throughout)."""

    n: int
    tau: float
    beta: float

    @classmethod
    def for_order(cls, n: int) -> "LambertParams":
        if n < 2:
            raise ValueError("parameters need n >= 2 (log n must be positive)")
        with mp.workdps(40):
            ln = mp.log(n)
            w = lambert_w(ln)
            tau = mp.sqrt(ln / w)
            beta = tau ** (tau * tau)
            return cls(n, float(tau), float(beta))
