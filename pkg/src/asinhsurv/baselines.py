"""Classical comparator distributions: exponential, Lomax, Burr XII and the
compound gamma (Pearson VI / F-type).

These are the standard heavy-tailed counterparts the generalised families
are judged against.  Each kernel implements the standard member (scale 1,
location 0) on x >= 0; location-scale wrapping happens in
:class:`asinhsurv.distributions.DistributionHandle`.  Kernel methods take
vectorized x and scalar shape parameters ``nu`` (tail index) and ``beta``
(Weibull/gamma shape, ignored where marked).
"""

from __future__ import annotations

import numpy as np

from .numerics import log_beta, log_gamma, reg_inc_beta

__all__ = ["Exponential", "Lomax", "BurrXII", "CompoundGamma"]


class Exponential:
    """Unit exponential: S(x) = exp(-x)."""

    uses_beta = False
    uses_nu = False

    @staticmethod
    def log_survival(x, nu, beta):
        return -x

    @staticmethod
    def log_pdf(x, nu, beta):
        return -x

    @staticmethod
    def hazard(x, nu, beta):
        return np.ones_like(x)

    @staticmethod
    def quantile(p, nu, beta):
        return -np.log1p(-p)

    @staticmethod
    def moment_order_threshold(nu, beta):
        return np.inf

    @staticmethod
    def raw_moment(n, nu, beta):
        return float(np.exp(log_gamma(n + 1.0)))

    @staticmethod
    def mode(nu, beta):
        return 0.0

    @staticmethod
    def sample(n, nu, beta, rng):
        return rng.standard_exponential(n)


class Lomax:
    """Type-2 Pareto on [0, inf): S(x) = (1 + x/nu)^(-nu).

    The single parameter plays both the shape and the scale role, which is
    what makes the family tend to the unit exponential as nu grows.
    """

    uses_beta = False
    uses_nu = True

    @staticmethod
    def log_survival(x, nu, beta):
        return -nu * np.log1p(x / nu)

    @staticmethod
    def log_pdf(x, nu, beta):
        return -(nu + 1.0) * np.log1p(x / nu)

    @staticmethod
    def hazard(x, nu, beta):
        return 1.0 / (1.0 + x / nu)

    @staticmethod
    def quantile(p, nu, beta):
        return nu * np.expm1(-np.log1p(-p) / nu)

    @staticmethod
    def moment_order_threshold(nu, beta):
        return nu

    @staticmethod
    def raw_moment(n, nu, beta):
        if n >= nu:
            return None
        return float(n * np.exp(n * np.log(nu) + log_gamma(n) + log_gamma(nu - n) - log_gamma(nu)))

    @staticmethod
    def mode(nu, beta):
        return 0.0

    @staticmethod
    def sample(n, nu, beta, rng):
        e = rng.standard_exponential(n)
        return nu * np.expm1(e / nu)


class BurrXII:
    """Singh-Maddala / Burr type 12: S(x) = (1 + x^beta/nu)^(-nu)."""

    uses_beta = True
    uses_nu = True

    @staticmethod
    def log_survival(x, nu, beta):
        with np.errstate(over="ignore"):
            y = np.power(x, beta)
        return -nu * np.log1p(y / nu)

    @staticmethod
    def log_pdf(x, nu, beta):
        with np.errstate(divide="ignore", over="ignore"):
            y = np.power(x, beta)
            return np.log(beta) + (beta - 1.0) * np.log(x) - (nu + 1.0) * np.log1p(y / nu)

    @staticmethod
    def quantile(p, nu, beta):
        return np.power(nu * np.expm1(-np.log1p(-p) / nu), 1.0 / beta)

    @staticmethod
    def moment_order_threshold(nu, beta):
        return beta * nu

    @staticmethod
    def raw_moment(n, nu, beta):
        if n >= beta * nu:
            return None
        nb = n / beta
        return float(nb * np.exp(nb * np.log(nu) + log_gamma(nb) + log_gamma(nu - nb) - log_gamma(nu)))

    @staticmethod
    def mode(nu, beta):
        if beta <= 1.0:
            return 0.0
        return float((nu * (beta - 1.0) / (nu * beta + 1.0)) ** (1.0 / beta))

    @staticmethod
    def sample(n, nu, beta, rng):
        e = rng.standard_exponential(n)
        return np.power(nu * np.expm1(e / nu), 1.0 / beta)


class CompoundGamma:
    """Gamma with gamma-mixed scale (Pearson VI, a scaled F distribution).

    pdf(x) = (x/nu)^(beta-1) (1 + x/nu)^(-(nu+beta)) / (nu B(nu, beta));
    equivalently nu * G1/G2 with G1 ~ Gamma(beta), G2 ~ Gamma(nu).  Used
    both as a fitting baseline and as the rejection-sampling proposal for
    the generalised gamma.
    """

    uses_beta = True
    uses_nu = True

    @staticmethod
    def log_pdf(x, nu, beta):
        with np.errstate(divide="ignore"):
            return ((beta - 1.0) * (np.log(x) - np.log(nu))
                    - (nu + beta) * np.log1p(x / nu)
                    - np.log(nu) - log_beta(nu, beta))

    @staticmethod
    def log_survival(x, nu, beta):
        # X/(X+nu) ~ Beta(beta, nu), so S(x) = I_{nu/(x+nu)}(nu, beta).
        u = nu / (x + nu)
        with np.errstate(divide="ignore"):
            return np.log(reg_inc_beta(u, nu, beta))

    @staticmethod
    def cdf(x, nu, beta):
        return reg_inc_beta(x / (x + nu), beta, nu)

    @staticmethod
    def quantile(p, nu, beta):
        from .numerics import find_root_1d

        p = np.asarray(p, dtype=float)
        out = np.empty(p.shape or (1,))
        flat = p.reshape(-1)
        for i, pi in enumerate(flat):
            if pi == 0.0:
                out.reshape(-1)[i] = 0.0
                continue
            u = find_root_1d(lambda t: reg_inc_beta(t, beta, nu) - pi, 0.0, 1.0 - 1e-16, 1e-15)
            out.reshape(-1)[i] = nu * u / (1.0 - u)
        return out.reshape(p.shape)

    @staticmethod
    def moment_order_threshold(nu, beta):
        return nu

    @staticmethod
    def raw_moment(n, nu, beta):
        if n >= nu:
            return None
        return float(np.exp(n * np.log(nu) + log_gamma(beta + n) - log_gamma(beta)
                            + log_gamma(nu - n) - log_gamma(nu)))

    @staticmethod
    def mode(nu, beta):
        if beta <= 1.0:
            return 0.0
        return float(nu * (beta - 1.0) / (nu + 1.0))

    @staticmethod
    def sample(n, nu, beta, rng):
        g1 = rng.gamma(beta, size=n)
        g2 = rng.gamma(nu, size=n)
        return nu * g1 / g2
