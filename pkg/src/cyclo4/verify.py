"""Mechanical checks of the algebraic identities behind the closed forms.

Every statement is tested exactly, inside GR(4**r, 4) where it lives:
class multiplication relations, the cyclotomic counts, the quadratic
satisfied by the class sum S0(gamma), its explicit values by residue
class, the evaluation spectrum of the generating polynomial at the
order-2p units, the factorizations of X**p + 1 and X**p - 1 into class
products, and the guard example showing that vanishing at every power of
gamma does not imply divisibility by X**2p - 1 over Z4.

A report is a list of uniform check entries so the command-line front end
can render one line per check and reflect failures in its exit status.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .cyclotomy import GeneralizedCyclotomy, build_classes
from .galois import GaloisRing, GaloisRingElement, construct_ring, find_gamma, powers_of
from .lfsr import reeds_sloane, theorem_lc
from .primes import require_odd_prime
from .ringpoly import RingPolynomial, Z4
from .sequence import generate_sequence

DEFAULT_EXPANSION_CAP = 61


class CheckStatus(enum.Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    SKIP = "SKIP"


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    status: CheckStatus
    detail: str

    def render(self) -> str:
        return f"{self.check_id} {self.status.value} {self.detail}"


@dataclass(frozen=True)
class LemmaReport:
    p: int
    checks: tuple[CheckResult, ...]

    @property
    def ok(self) -> bool:
        return all(c.status is not CheckStatus.FAIL for c in self.checks)

    def render(self) -> str:
        return "\n".join(c.render() for c in self.checks)


@dataclass(frozen=True)
class NormalizedGamma:
    """An order-2p unit whose class sum over D0 is a unit.

    When the class sum of the original gamma is not a unit, gamma is
    replaced by gamma**v for the smallest v in D1, which swaps the roles
    of the two odd classes; the exponent records the substitution.
    """

    gamma: GaloisRingElement
    s0: GaloisRingElement
    exponent: int

    @property
    def replaced(self) -> bool:
        return self.exponent != 1


def _class_sum(powers, block) -> GaloisRingElement:
    acc = None
    for v in sorted(block):
        acc = powers[v] if acc is None else acc + powers[v]
    return acc


def normalize_gamma(
    ring: GaloisRing, classes: GeneralizedCyclotomy, gamma: GaloisRingElement
) -> NormalizedGamma:
    """Replace gamma by gamma**v, v in D1, if needed to make S0 a unit.

    The two class sums add to 1, so they cannot both be non-units; the
    substitution is therefore always available and deterministic.
    """
    n = 2 * classes.p
    powers = powers_of(gamma, n)
    s0 = _class_sum(powers, classes.d0)
    s1 = _class_sum(powers, classes.d1)
    if s0 + s1 != ring.one:
        raise RuntimeError("internal: class sums over D0 and D1 do not add to 1")
    if s0.is_unit():
        return NormalizedGamma(gamma=gamma, s0=s0, exponent=1)
    v = min(classes.d1)
    replacement = gamma**v
    s0_new = _class_sum(powers_of(replacement, n), classes.d0)
    if not s0_new.is_unit():
        raise RuntimeError("internal: neither class sum is a unit")
    return NormalizedGamma(gamma=replacement, s0=s0_new, exponent=v)


class _Workspace:
    """Everything the per-prime checks share: ring, classes, gamma, powers."""

    def __init__(self, p: int):
        require_odd_prime(p)
        self.p = p
        self.classes = build_classes(p)
        self.ring = construct_ring(p)
        self.beta, raw_gamma = find_gamma(self.ring, p)
        self.raw_gamma = raw_gamma
        self.normalized = normalize_gamma(self.ring, self.classes, raw_gamma)
        self.gamma = self.normalized.gamma
        self.powers = powers_of(self.gamma, 2 * p)
        self.power_rows = np.array([e.coords for e in self.powers], dtype=np.int64)
        self.seq = generate_sequence(p, self.classes)

    def sequence_values_at_powers(self) -> list[GaloisRingElement]:
        """S(gamma**v) for v = 0..2p-1, via the cached power table."""
        n = 2 * self.p
        svec = np.array(self.seq.values, dtype=np.int64)
        out = []
        base = np.arange(n, dtype=np.int64)
        for v in range(n):
            rows = self.power_rows[(v * base) % n]
            coords = (svec @ rows) % 4
            out.append(self.ring.element(coords))
        return out


def check_gamma(ws: _Workspace) -> CheckResult:
    """Order facts for beta and gamma plus the distinct-power unit property."""
    problems = []
    ring, p = ws.ring, ws.p
    if ws.beta**p != ring.one or ws.beta == ring.one:
        problems.append("beta does not have order p")
    if ws.raw_gamma**p != ring.embed(3):
        problems.append("gamma**p != -1")
    if ws.raw_gamma ** (2 * p) != ring.one:
        problems.append("gamma**(2p) != 1")
    if not ws.normalized.s0.is_unit():
        problems.append("normalized class sum is not a unit")
    n = 2 * p
    rows = ws.power_rows
    residues = np.arange(n, dtype=np.int64) % p
    for v1 in range(n):
        odd = (((rows[v1][None, :] - rows) % 4) % 2).any(axis=1)
        need = residues != residues[v1]
        bad = np.nonzero(need & ~odd)[0]
        if bad.size:
            problems.append(f"gamma^{v1} - gamma^{int(bad[0])} is not a unit")
            break
    detail = problems[0] if problems else (
        f"beta^p=1, gamma^p=-1, gamma^2p=1, distinct powers differ by units"
        + ("" if not ws.normalized.replaced else
           f"; gamma normalized via exponent {ws.normalized.exponent}")
    )
    return CheckResult("gamma", CheckStatus.FAIL if problems else CheckStatus.PASS, detail)


def check_lemma3(classes: GeneralizedCyclotomy) -> CheckResult:
    """Multiplicative and shift relations among D0, D1, E0, E1."""
    p = classes.p
    n = 2 * p
    pm1 = p % 8 in (1, 7)
    problems = []

    def mul_set(v, block):
        return frozenset(v * u % n for u in block)

    for i in (0, 1):
        for v in sorted(classes.d_class(i)):
            for j in (0, 1):
                if mul_set(v, classes.d_class(j)) != classes.d_class(i + j):
                    problems.append(f"(I) {v}*D{j} != D{(i + j) % 2}")
                if mul_set(v, classes.e_class(j)) != classes.e_class(i + j):
                    problems.append(f"(I) {v}*E{j} != E{(i + j) % 2}")
        for v in sorted(classes.e_class(i)):
            for j in (0, 1):
                if mul_set(v, classes.d_class(j)) != classes.e_class(i + j):
                    problems.append(f"(II) {v}*D{j} != E{(i + j) % 2}")
                expect = i + j if pm1 else i + j + 1
                if mul_set(v, classes.e_class(j)) != classes.e_class(expect):
                    problems.append(f"(II) {v}*E{j} != E{expect % 2}")
        shift_e = frozenset((v + p) % n for v in classes.e_class(i))
        if shift_e != classes.d_class(i if pm1 else i + 1):
            problems.append(f"(III) E{i}+p mismatch")
        shift_d = frozenset((v + p) % n for v in classes.d_class(i))
        if shift_d != classes.e_class(i if pm1 else i + 1):
            problems.append(f"(IV) D{i}+p mismatch")
        if pm1:
            folded = frozenset(u + p for u in classes.d_class(i) if u < p) | frozenset(
                u - p for u in classes.d_class(i) if u > p
            )
            if folded != classes.e_class(i):
                problems.append(f"(V) E{i} fold mismatch")
    parts = "I-V" if pm1 else "I-IV (V not applicable)"
    detail = problems[0] if problems else f"class relations {parts} hold"
    return CheckResult("lemma3", CheckStatus.FAIL if problems else CheckStatus.PASS, detail)


def check_lemma5(classes: GeneralizedCyclotomy) -> CheckResult:
    """Closed forms of the cyclotomic numbers [0,0] and [0,1] by p mod 8."""
    p = classes.p
    want00 = {1: (p - 5) // 4, 7: (p - 3) // 4, 5: (p - 1) // 4, 3: (p + 1) // 4}[p % 8]
    want01 = {1: (p - 1) // 4, 7: (p + 1) // 4, 5: (p - 5) // 4, 3: (p - 3) // 4}[p % 8]
    got00 = classes.cyclotomic_number(0, 0)
    got01 = classes.cyclotomic_number(0, 1)
    ok = got00 == want00 and got01 == want01
    detail = (
        f"[0,0]={got00}, [0,1]={got01} match the p={p % 8} (mod 8) closed forms"
        if ok
        else f"[0,0]={got00} (want {want00}), [0,1]={got01} (want {want01})"
    )
    return CheckResult("lemma5", CheckStatus.PASS if ok else CheckStatus.FAIL, detail)


def check_lemma6(ws: _Workspace) -> CheckResult:
    """The class sum satisfies S0**2 = S0 + c with c fixed by p mod 8.

    The constant is (p-1)/4 for p = 1, 5 (mod 8) and -(p+1)/4 for
    p = 3, 7 (mod 8), everything reduced mod 4. (For p = 7 (mod 8) the
    sign is invisible mod 4 since (p+1)/2 = 0 there; for p = 3 (mod 8)
    it matters, as the value 2 + rho of the class sum confirms.)
    """
    p = ws.p
    const = (p - 1) // 4 if p % 8 in (1, 5) else -((p + 1) // 4)
    s0 = ws.normalized.s0
    ok = s0 * s0 == s0 + ws.ring.embed(const)
    detail = (
        f"S0^2 = S0 + {const % 4} holds"
        if ok
        else f"S0^2 != S0 + {const % 4} for S0 = {s0}"
    )
    return CheckResult("lemma6", CheckStatus.PASS if ok else CheckStatus.FAIL, detail)


def check_lemma7(ws: _Workspace) -> CheckResult:
    """Explicit value of the unit class sum by the residue of p mod 16."""
    ring, s0 = ws.ring, ws.normalized.s0
    m16 = ws.p % 16
    three = ring.embed(3)
    if m16 in (1, 15):
        ok = s0 == ring.one
        want = "1"
    elif m16 in (7, 9):
        ok = s0 == three
        want = "3"
    elif m16 in (5, 11):
        ok = s0 * s0 + three * s0 + three == ring.zero
        want = "a root of r^2 + 3r + 3"
    else:
        t = s0 - ring.embed(2)
        ok = t * t + three * t + three == ring.zero
        want = "2 + a root of r^2 + 3r + 3"
    detail = f"S0 = {want} for p = {m16} (mod 16)" if ok else f"S0 = {s0}, expected {want}"
    return CheckResult("lemma7", CheckStatus.PASS if ok else CheckStatus.FAIL, detail)


def check_lemma4_lemma8(ws: _Workspace) -> CheckResult:
    """Value table of S(gamma**v) over the whole of Z_2p."""
    ring, p, classes = ws.ring, ws.p, ws.classes
    values = ws.sequence_values_at_powers()
    s0 = ws.normalized.s0
    problems = []
    if values[0] != ring.embed((p + 1) % 4):
        problems.append(f"S(1) = {values[0]}, want {(p + 1) % 4}")
    if values[p] != ring.embed(2):
        problems.append(f"S(gamma^p) = {values[p]}, want 2")
    two_s0 = s0 + s0
    if p % 8 in (3, 5):
        expect = {
            "D0": ring.one - two_s0,
            "D1": two_s0 - ring.one,
            "E0": ring.embed(3),
            "E1": ring.embed(3),
        }
        for name, block in (
            ("D0", classes.d0),
            ("D1", classes.d1),
            ("E0", classes.e0),
            ("E1", classes.e1),
        ):
            for v in sorted(block):
                if values[v] != expect[name]:
                    problems.append(f"S(gamma^{v}) != expected on {name}")
                    break
                if not values[v].is_unit():
                    problems.append(f"S(gamma^{v}) is not a unit on {name}")
                    break
        detail_ok = "values match the p = +-3 (mod 8) table and are units"
    else:
        for name, block in (("D0", classes.d0), ("D1", classes.d1), ("E0", classes.e0)):
            for v in sorted(block):
                if values[v] != ring.zero:
                    problems.append(f"S(gamma^{v}) != 0 on {name}")
                    break
        for v in sorted(classes.e1):
            if values[v] != ring.embed(2):
                problems.append(f"S(gamma^{v}) != 2 on E1")
                break
        detail_ok = "values match the p = +-1 (mod 8) table (0 off E1, 2 on E1)"
    detail = problems[0] if problems else detail_ok
    return CheckResult("lemma8", CheckStatus.FAIL if problems else CheckStatus.PASS, detail)


def check_factorizations(ws: _Workspace, expansion_cap: int | None = None) -> list[CheckResult]:
    """Expand the class products and compare with X**p +- 1 exactly.

    Also checks, for p = +-1 (mod 8), that every product coefficient lies
    in the embedded Z4 (skipped otherwise: the statement is not claimed
    for p = +-3 (mod 8)).
    """
    cap = DEFAULT_EXPANSION_CAP if expansion_cap is None else expansion_cap
    ring, p, classes = ws.ring, ws.p, ws.classes
    if p > cap:
        note = f"skipped: p > expansion cap {cap}"
        return [
            CheckResult("factorization", CheckStatus.SKIP, note),
            CheckResult("lemma9", CheckStatus.SKIP, note),
        ]

    def root_product(block):
        acc = RingPolynomial(ring, [ring.one])
        for v in sorted(block):
            acc = acc * RingPolynomial(ring, [-ws.powers[v], ring.one])
        return acc

    gamma0 = root_product(classes.d0)
    gamma1 = root_product(classes.d1)
    lambda0 = root_product(classes.e0)
    lambda1 = root_product(classes.e1)

    x_plus_1 = RingPolynomial(ring, [ring.one, ring.one])
    x_minus_1 = RingPolynomial(ring, [ring.embed(3), ring.one])
    xp_plus_1 = RingPolynomial.monomial(ring, p) + RingPolynomial(ring, [ring.one])
    xp_minus_1 = RingPolynomial.monomial(ring, p) + RingPolynomial(ring, [ring.embed(3)])

    problems = []
    if x_plus_1 * gamma0 * gamma1 != xp_plus_1:
        problems.append("(X+1)*G0*G1 != X^p + 1")
    if x_minus_1 * lambda0 * lambda1 != xp_minus_1:
        problems.append("(X-1)*L0*L1 != X^p - 1")
    fact = CheckResult(
        "factorization",
        CheckStatus.FAIL if problems else CheckStatus.PASS,
        problems[0] if problems else "(X+1)G0G1 = X^p+1 and (X-1)L0L1 = X^p-1 exactly",
    )

    if p % 8 in (3, 5):
        nine = CheckResult(
            "lemma9", CheckStatus.SKIP, "integrality not claimed for p = +-3 (mod 8)"
        )
    else:
        bad = None
        for name, poly in (("G0", gamma0), ("G1", gamma1), ("L0", lambda0), ("L1", lambda1)):
            for c in poly.coeffs:
                if not c.is_embedded_constant:
                    bad = f"{name} has a coefficient outside the embedded Z4"
                    break
            if bad:
                break
        nine = CheckResult(
            "lemma9",
            CheckStatus.FAIL if bad else CheckStatus.PASS,
            bad or "all product coefficients lie in the embedded Z4",
        )
    return [fact, nine]


def check_roots_guard(ws: _Workspace) -> CheckResult:
    """Vanishing at every gamma**j must not imply divisibility over Z4.

    The witness X**2p - 1 + 2(X**p + 1) evaluates to zero at every power
    of gamma yet leaves the nonzero remainder 2X**p + 2 under division by
    X**2p - 1.
    """
    ring, p = ws.ring, ws.p
    n = 2 * p
    coeffs = [0] * (n + 1)
    coeffs[0] = 1  # -1 + 2
    coeffs[p] = 2
    coeffs[n] = 1
    witness = RingPolynomial.from_ints(Z4, coeffs)
    problems = []
    two = ring.embed(2)
    for j in range(n):
        value = two + two * ws.powers[j * p % n]
        if value != ring.zero:
            problems.append(f"witness does not vanish at gamma^{j}")
            break
    for j in (0, 1, p):
        if witness.evaluate(ws.powers[j]) != ring.zero:
            problems.append(f"Horner evaluation nonzero at gamma^{j}")
            break
    modulus = RingPolynomial.from_ints(Z4, [-1] + [0] * (n - 1) + [1])
    _, rem = divmod(witness, modulus)
    if rem.is_zero:
        problems.append("witness is divisible by X^2p - 1, guard violated")
    expected_rem = RingPolynomial.from_ints(Z4, [2] + [0] * (p - 1) + [2])
    if rem != expected_rem:
        problems.append("unexpected remainder under division by X^2p - 1")
    detail = problems[0] if problems else "vanishes at all gamma^j yet is not divisible"
    return CheckResult("roots", CheckStatus.FAIL if problems else CheckStatus.PASS, detail)


def check_theorem(ws: _Workspace) -> CheckResult:
    """Synthesized linear complexity equals the closed form."""
    want = theorem_lc(ws.p)
    got = reeds_sloane(ws.seq).lc
    ok = got == want
    detail = f"lc = {got} = closed form" if ok else f"lc = {got}, closed form {want}"
    return CheckResult("theorem", CheckStatus.PASS if ok else CheckStatus.FAIL, detail)


_CHECK_ORDER = (
    "gamma",
    "lemma3",
    "lemma5",
    "lemma6",
    "lemma7",
    "lemma8",
    "factorization",
    "lemma9",
    "roots",
    "theorem",
)

# Tokens accepted by the report filter; bare numbers name the identity checks.
CHECK_TOKENS = {
    "3": "lemma3",
    "5": "lemma5",
    "6": "lemma6",
    "7": "lemma7",
    "4": "lemma8",
    "8": "lemma8",
    "9": "lemma9",
    **{name: name for name in _CHECK_ORDER},
}


def full_report(
    p: int, expansion_cap: int | None = None, only: set[str] | None = None
) -> LemmaReport:
    """Run every applicable check for p (or the ``only`` subset) and aggregate."""
    ws = _Workspace(p)
    wanted = set(_CHECK_ORDER) if only is None else only
    unknown = wanted - set(_CHECK_ORDER)
    if unknown:
        raise ValueError(f"unknown checks: {sorted(unknown)}")
    pair = (
        check_factorizations(ws, expansion_cap)
        if wanted & {"factorization", "lemma9"}
        else None
    )
    producers = {
        "gamma": lambda: check_gamma(ws),
        "lemma3": lambda: check_lemma3(ws.classes),
        "lemma5": lambda: check_lemma5(ws.classes),
        "lemma6": lambda: check_lemma6(ws),
        "lemma7": lambda: check_lemma7(ws),
        "lemma8": lambda: check_lemma4_lemma8(ws),
        "factorization": lambda: pair[0],
        "lemma9": lambda: pair[1],
        "roots": lambda: check_roots_guard(ws),
        "theorem": lambda: check_theorem(ws),
    }
    results = tuple(producers[name]() for name in _CHECK_ORDER if name in wanted)
    return LemmaReport(p=p, checks=results)
