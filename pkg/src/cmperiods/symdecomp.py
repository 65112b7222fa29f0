"""Symmetric-power machinery: Euler factors, isobaric decompositions,
archimedean factors and critical integers.

All polynomial identities here are checked in exact cyclotomic arithmetic;
no floating point enters the factorization or Rankin-Selberg checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath as mp

from .cmform import CMForm
from .cyclotomic import CyclotomicRational
from .dirichlet import DirichletChar
from .errors import PoleError, SpecError
from .hecke import HeckeChar
from .qfield import omega_K

# exact polynomials: ascending coefficient lists over the cyclotomics ---------


def _wrap(c) -> CyclotomicRational:
    if isinstance(c, CyclotomicRational):
        return c
    return CyclotomicRational.from_rational(c)


def poly_mul(p: list, q: list) -> list:
    out = [CyclotomicRational.zero() for _ in range(len(p) + len(q) - 1)]
    for i, a in enumerate(p):
        a = _wrap(a)
        if a.is_zero():
            continue
        for j, b in enumerate(q):
            b = _wrap(b)
            if not b.is_zero():
                out[i + j] = out[i + j] + a * b
    return out


def poly_scale_var(p: list, factor) -> list:
    """p(X) -> p(factor * X)."""
    out = []
    f = _wrap(1)
    for c in p:
        out.append(_wrap(c) * f)
        f = f * _wrap(factor)
    return out


def poly_eq(p: list, q: list) -> bool:
    n = max(len(p), len(q))
    zero = CyclotomicRational.zero()
    for i in range(n):
        a = _wrap(p[i]) if i < len(p) else zero
        b = _wrap(q[i]) if i < len(q) else zero
        if a != b:
            return False
    return True


def poly_render(p: list) -> list:
    return [_wrap(c).to_dict() for c in p]


# symmetric-power Euler factors ------------------------------------------------


def sym_euler_factor(form: CMForm, p: int, n: int) -> list:
    """prod_{i=0}^{n} (1 - alpha^i beta^{n-i} X) at a good prime, exactly.

    Expanded through power sums s_j = alpha^j + beta^j, so no root extraction
    is needed: s_j = a_p s_{j-1} - q s_{j-2}.
    """
    if form.level % p == 0:
        raise SpecError(
            f"p={p} divides the level; the partial symmetric power is defined "
            "only at good primes"
        )
    if n < 1:
        raise SpecError("n must be >= 1")
    ef = form.euler_factor(p)
    a, q = ef.ap, ef.q
    s = [_wrap(2), a]
    for j in range(2, n + 1):
        s.append(a * s[j - 1] - q * s[j - 2])
    poly = [_wrap(1)]
    one = _wrap(1)
    for i in range(0, (n + 1) // 2):
        qi = q ** i
        qn = q ** n
        pair = [one, -(qi * s[n - 2 * i]), qn]
        poly = poly_mul(poly, pair)
    if n % 2 == 0:
        mid = [one, -(q ** (n // 2))]
        poly = poly_mul(poly, mid)
    return poly


# isobaric decomposition --------------------------------------------------------


@dataclass
class IsobaricComponent:
    """One summand of Sym^n(AI(chi)): a GL(1) character or a twisted form."""

    kind: str  # "gl1" or "gl2"
    shift: int  # evaluate at s - shift
    twist: DirichletChar  # (omega o omega_K)^a resp. ^r
    chi_power: int = 0  # for gl2: the power m with form phi_{chi^m}


def isobaric_decomposition(chi: HeckeChar, n: int) -> list[IsobaricComponent]:
    """Components of Sym^n phi_chi per the dihedral factorization.

    Even n = 2r:  GL1 piece (omega omega_K)^r at shift r(k-1), plus
    phi_{chi^{2(r-a)}} twisted by (omega omega_K)^a at shift a(k-1), a < r.
    Odd n = 2r+1: phi_{chi^{2(r-a)+1}} twisted by (omega omega_K)^a, a <= r.
    """
    if n < 1:
        raise SpecError("n must be >= 1")
    for m in range(1, n + 1):
        if chi.power(m).is_galois_invariant():
            raise SpecError(
                f"chi^{m} is Galois invariant; the induced form degenerates to weight 1"
            )
    k = chi.weight_k
    omega = chi.nebentypus()
    wK = omega_K(chi.field)
    even_twist = omega * wK  # the restriction chi_Q
    comps: list[IsobaricComponent] = []
    r = n // 2
    if n % 2 == 0:
        comps.append(
            IsobaricComponent("gl1", r * (k - 1), even_twist ** r)
        )
        for a in range(0, r):
            comps.append(
                IsobaricComponent(
                    "gl2", a * (k - 1), even_twist ** a, 2 * (r - a)
                )
            )
    else:
        for a in range(0, r + 1):
            comps.append(
                IsobaricComponent(
                    "gl2", a * (k - 1), even_twist ** a, 2 * (r - a) + 1
                )
            )
    return comps


def _component_euler_factor(chi: HeckeChar, comp: IsobaricComponent, p: int,
                            forms: dict[int, CMForm]) -> list:
    """Local factor of the component at a good prime, in X = p^{-s}, with shift."""
    shift_factor = Fraction(p) ** comp.shift
    xi = comp.twist
    xv = xi.value_exact(p)
    if comp.kind == "gl1":
        return poly_scale_var([_wrap(1), -xv], shift_factor)
    form = forms[comp.chi_power]
    ef = form.euler_factor(p)
    if not ef.good:
        raise SpecError(f"p={p} is bad for the component form {form}")
    poly = [_wrap(1), -(xv * ef.ap), (xv * xv) * ef.q]
    return poly_scale_var(poly, shift_factor)


def factorization_check(chi: HeckeChar, n: int, p: int) -> tuple[bool, dict]:
    """Exact Euler-factor identity of Sym^n phi_chi against its decomposition."""
    form = CMForm(chi)
    if form.level % p == 0:
        raise SpecError(f"p={p} is a bad prime for phi_chi")
    comps = isobaric_decomposition(chi, n)
    forms = {c.chi_power: CMForm(chi.power(c.chi_power))
             for c in comps if c.kind == "gl2"}
    lhs = sym_euler_factor(form, p, n)
    rhs = [_wrap(1)]
    for comp in comps:
        rhs = poly_mul(rhs, _component_euler_factor(chi, comp, p, forms))
    ok = poly_eq(lhs, rhs)
    report = {"p": p, "n": n, "match": ok}
    if not ok:
        report["lhs"] = poly_render(lhs)
        report["rhs"] = poly_render(rhs)
    return ok, report


def rankin_selberg_check(chi: HeckeChar, n: int, p: int) -> tuple[bool, dict]:
    """Exact check of L(s, phi_{chi^n} x phi_chi) =
    L(s, phi_{chi^{n+1}}) L(s-k+1, phi_{chi^{n-1}}, omega) at a good prime."""
    if n < 2:
        raise SpecError("the induction step needs n >= 2")
    k = chi.weight_k
    omega = chi.nebentypus()
    f_n = CMForm(chi.power(n))
    f_1 = CMForm(chi)
    f_up = CMForm(chi.power(n + 1))
    f_dn = CMForm(chi.power(n - 1))
    for f in (f_n, f_1, f_up, f_dn):
        if f.level % p == 0:
            raise SpecError(f"p={p} is bad for {f}")
    e1f = f_n.euler_factor(p)
    e2f = f_1.euler_factor(p)
    a1, q1 = e1f.ap, e1f.q
    a2, q2 = e2f.ap, e2f.q
    # elementary symmetric functions of {alpha_i beta_j}
    s1 = a1 * a2
    s2 = q2 * (a1 * a1 - 2 * q1) + q1 * (a2 * a2 - 2 * q2) + 2 * (q1 * q2)
    s3 = (q1 * q2) * s1
    s4 = (q1 * q2) ** 2
    lhs = [_wrap(1), -s1, s2, -s3, s4]
    up = f_up.euler_factor(p)
    rhs_up = [_wrap(1), -up.ap, up.q]
    dn = f_dn.euler_factor(p)
    wv = omega.value_exact(p)
    rhs_dn = poly_scale_var(
        [_wrap(1), -(wv * dn.ap), (wv * wv) * dn.q], Fraction(p) ** (k - 1)
    )
    rhs = poly_mul(rhs_up, rhs_dn)
    ok = poly_eq(lhs, rhs)
    report = {"p": p, "n": n, "match": ok}
    if not ok:
        report["lhs"] = poly_render(lhs)
        report["rhs"] = poly_render(rhs)
    return ok, report


# archimedean side ---------------------------------------------------------------


@dataclass(frozen=True)
class WRComponent:
    """A factor of a representation of the real Weil group: 1, sign, or I(chi_l)."""

    kind: str  # "triv", "sign", "ind"
    l: int = 0
    t: Fraction = Fraction(0)

    @property
    def dimension(self) -> int:
        return 2 if self.kind == "ind" else 1

    def pole_start(self) -> Fraction:
        if self.kind == "triv":
            return -self.t
        if self.kind == "sign":
            return -self.t - 1
        return -self.t - Fraction(self.l, 2)

    def pole_step(self) -> int:
        return 2 if self.kind in ("triv", "sign") else 1

    def has_pole_at(self, s: Fraction) -> bool:
        start, step = self.pole_start(), self.pole_step()
        if s > start:
            return False
        return (start - s) % step == 0


def sym_infinity_type(k: int, n: int) -> list[WRComponent]:
    """Components of Sym^n of the weight-k archimedean parameter.

    I(chi_0) is reducible and is returned in the normal form 1 + sign;
    sign^j normalizes to 1 or sign by parity.
    """
    if k < 1:
        raise SpecError("k must be >= 1")
    if n < 1:
        raise SpecError("n must be >= 1")
    comps: list[WRComponent] = []

    def add_ind(l: int):
        if l == 0:
            comps.append(WRComponent("triv"))
            comps.append(WRComponent("sign"))
        else:
            comps.append(WRComponent("ind", l))

    r = n // 2
    if n % 2 == 1:
        for a in range(0, r + 1):
            add_ind((2 * a + 1) * (k - 1))
    else:
        comps.append(WRComponent("triv" if (r * (k - 1)) % 2 == 0 else "sign"))
        for a in range(1, r + 1):
            add_ind(2 * a * (k - 1))
    return comps


def archimedean_factor(s, comp: WRComponent, prec: int = 113):
    """The local factor at infinity, and its exact pole data.

    Returns (value, poles) where poles = (start, step) describes the set
    {start - step*j : j >= 0}.
    """
    poles = (comp.pole_start(), comp.pole_step())
    with mp.workprec(prec + 16):
        t = mp.mpf(comp.t.numerator) / comp.t.denominator
        sv = mp.mpc(s)
        if sv.imag == 0 and _is_pole(comp, sv.real):
            raise PoleError(
                f"archimedean factor has a pole at s={s} (set starts {poles[0]}, step {poles[1]})"
            )
        if comp.kind == "triv":
            val = mp.power(mp.pi, -(sv + t) / 2) * mp.gamma((sv + t) / 2)
        elif comp.kind == "sign":
            val = mp.power(mp.pi, -(sv + t + 1) / 2) * mp.gamma((sv + t + 1) / 2)
        else:
            arg = sv + t + mp.mpf(comp.l) / 2
            val = 2 * mp.power(2 * mp.pi, -arg) * mp.gamma(arg)
        return +val, poles


def _is_pole(comp: WRComponent, x) -> bool:
    try:
        fx = Fraction(str(x)) if not isinstance(x, (int, Fraction)) else Fraction(x)
    except ValueError:
        return False
    return comp.has_pole_at(fx)


# critical integers ----------------------------------------------------------------


def critical_set(k: int, n: int) -> list[int]:
    """Closed-form critical integers of L_f(s, Sym^n phi) for weight k."""
    if n % 2 == 1:
        r = n // 2
        return list(range(r * (k - 1) + 1, (r + 1) * (k - 1) + 1))
    r = n // 2
    km = k - 1
    if r % 2 == 1 and k % 2 == 0:
        lo = list(range((r - 1) * km + 1, r * km + 1, 2))
        hi = list(range(r * km + 1, (r + 1) * km + 1, 2))
    elif r % 2 == 1 and k % 2 == 1:
        lo = list(range((r - 1) * km + 1, r * km, 2))
        hi = list(range(r * km + 2, (r + 1) * km + 1, 2))
    elif r % 2 == 0 and k % 2 == 0:
        lo = list(range((r - 1) * km + 2, r * km, 2))
        hi = list(range(r * km + 2, (r + 1) * km, 2))
    else:
        lo = list(range((r - 1) * km + 1, r * km, 2))
        hi = list(range(r * km + 2, (r + 1) * km + 1, 2))
    return lo + hi


def critical_set_oracle(k: int, n: int) -> list[int]:
    """Independent Gamma-pole scan.

    Assembles the archimedean factor of Sym^n in the classical normalization
    (automorphic components shifted by n(k-1)/2) and keeps the integers m
    where neither side of the functional equation hits a Gamma pole:
    neither s = m nor the reflected point s = n(k-1)+1-m may be a pole.
    """
    shift = Fraction(n * (k - 1), 2)
    comps = [
        WRComponent(c.kind, c.l, c.t - shift) for c in sym_infinity_type(k, n)
    ]
    w = n * (k - 1)
    span = w + 2 * k + 4
    out = []
    for m in range(-span, span + 1):
        sm = Fraction(m)
        dual = Fraction(w + 1 - m)
        if any(c.has_pole_at(sm) for c in comps):
            continue
        if any(c.has_pole_at(dual) for c in comps):
            continue
        out.append(m)
    return out
