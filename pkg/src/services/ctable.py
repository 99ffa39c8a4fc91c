"""
Constant-term bookkeeping for the minimal-parabolic Eisenstein series.

Roots of C3 are integer vectors on (u1, u2, u3): the long roots +-2u_i and the
short roots +-u_i +- u_j. A root is positive when its first nonzero coordinate
is. Factor arguments are exact affine forms k*s + c2/2; floats only appear in
the numeric stage, which runs on mpmath.
"""
import itertools
import logging
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, NamedTuple, Optional, Sequence, Tuple, Union

from mpmath import mp
from sympy import isprime

from src.config import NUMERIC_DPS
from src.errors import DomainError, PoleError

logger = logging.getLogger("fgsp6.ctable")

Root = Tuple[int, int, int]
WeylElement = Tuple[Tuple[int, int, int], ...]

POLE_TOLERANCE = 1e-8

ZETA = "zeta"
ZETA_B = "zeta_B"
GAMMA_R = "Gamma_R"
GAMMA_C = "Gamma_C"
_SYMBOL_ORDER = {ZETA: 0, ZETA_B: 1, GAMMA_R: 2, GAMMA_C: 3}

PLACES = ("split", "ramified", "arch")


# ------------------- Affine arguments -------------------

class Affine(NamedTuple):
    """k*s + c2/2."""
    k: int
    c2: int

    def __add__(self, other: "Affine") -> "Affine":
        return Affine(self.k + other.k, self.c2 + other.c2)

    def __neg__(self) -> "Affine":
        return Affine(-self.k, -self.c2)

    def shift(self, c: Union[int, Fraction]) -> "Affine":
        return Affine(self.k, self.c2 + int(2 * c))

    def double(self) -> "Affine":
        return Affine(2 * self.k, 2 * self.c2)

    @property
    def constant(self) -> Fraction:
        return Fraction(self.c2, 2)

    def evaluate(self, s):
        return self.k * s + mp.mpf(self.c2) / 2

    def __str__(self):
        return format_affine(Fraction(self.k), self.constant)


def format_affine(k: Fraction, c: Fraction, var: str = "s") -> str:
    if k == 0:
        return str(c)
    head = var if k == 1 else "-" + var if k == -1 else f"{k}{var}"
    if c == 0:
        return head
    return f"{head}{'+' if c > 0 else '-'}{abs(c)}"


# ------------------- Root system -------------------

def is_positive(root: Root) -> bool:
    for x in root:
        if x:
            return x > 0
    return False


def is_long(root: Root) -> bool:
    return sum(x * x for x in root) == 4


def all_roots() -> List[Root]:
    roots = []
    for i in range(3):
        for sign in (1, -1):
            r = [0, 0, 0]
            r[i] = 2 * sign
            roots.append(tuple(r))
    for i, j in itertools.combinations(range(3), 2):
        for si, sj in itertools.product((1, -1), repeat=2):
            r = [0, 0, 0]
            r[i], r[j] = si, sj
            roots.append(tuple(r))
    return sorted(roots, reverse=True)


def positive_roots() -> List[Root]:
    return [r for r in all_roots() if is_positive(r)]


SIMPLE_ROOTS: Tuple[Root, Root, Root] = ((1, -1, 0), (0, 1, -1), (0, 0, 2))

# lambda_s = (s - 9/2) u1 + (s - 5/2) u2 + (s - 1/2) u3
LAMBDA_S: Tuple[Affine, Affine, Affine] = (Affine(1, -9), Affine(1, -5), Affine(1, -1))

# exponents of |nu(m)|, |m1|, |m2|, |m3|
CHI_EXPONENTS: Tuple[Affine, ...] = (Affine(3, 0), Affine(1, 0), Affine(1, 0), Affine(1, 0))
DELTA_EXPONENTS: Tuple[int, ...] = (15, 9, 5, 1)


def coroot_pairing(root: Root, weight: Sequence[Affine] = LAMBDA_S) -> Affine:
    """<root^vee, sum s_i u_i> = 2 (root . s) / |root|^2."""
    norm = sum(x * x for x in root)
    k = sum(r * w.k for r, w in zip(root, weight))
    c2 = sum(r * w.c2 for r, w in zip(root, weight))
    factor = Fraction(2, norm)
    return Affine(int(k * factor), int(c2 * factor))


def pairing_table(weight: Sequence[Affine] = LAMBDA_S) -> Dict[Root, Affine]:
    return {root: coroot_pairing(root, weight) for root in positive_roots()}


def lambda_from_delta() -> Tuple[Affine, ...]:
    """chi_s * delta^-1/2 on (nu, m1, m2, m3)."""
    return tuple(chi.shift(Fraction(-d, 2)) for chi, d in zip(CHI_EXPONENTS, DELTA_EXPONENTS))


def format_root(root: Root) -> str:
    parts = []
    for i, x in enumerate(root, start=1):
        if x == 0:
            continue
        coeff = "" if abs(x) == 1 else str(abs(x))
        sign = "-" if x < 0 else "+" if parts else ""
        parts.append(f"{sign}{coeff}u{i}")
    return "".join(parts)


# ------------------- Weyl group -------------------

def _signed_permutation(perm: Sequence[int], signs: Sequence[int]) -> WeylElement:
    rows = [[0, 0, 0] for _ in range(3)]
    for col, (row, sign) in enumerate(zip(perm, signs)):
        rows[row][col] = sign
    return tuple(tuple(r) for r in rows)


def weyl_group() -> List[WeylElement]:
    """The 48 signed permutation matrices."""
    return [_signed_permutation(p, s)
            for p in itertools.permutations(range(3))
            for s in itertools.product((1, -1), repeat=3)]


def weyl_identity() -> WeylElement:
    return _signed_permutation((0, 1, 2), (1, 1, 1))


def simple_reflection(i: int) -> WeylElement:
    """s1 swaps u1, u2; s2 swaps u2, u3; s3 negates u3."""
    if i == 1:
        return _signed_permutation((1, 0, 2), (1, 1, 1))
    if i == 2:
        return _signed_permutation((0, 2, 1), (1, 1, 1))
    if i == 3:
        return _signed_permutation((0, 1, 2), (1, 1, -1))
    raise DomainError(f"No simple reflection s{i} in C3")


def act(w: WeylElement, root: Root) -> Root:
    return tuple(sum(w[i][j] * root[j] for j in range(3)) for i in range(3))


def weyl_mul(w1: WeylElement, w2: WeylElement) -> WeylElement:
    return tuple(tuple(sum(w1[i][k] * w2[k][j] for k in range(3)) for j in range(3)) for i in range(3))


def word_element(word: Sequence[int]) -> WeylElement:
    w = weyl_identity()
    for i in word:
        w = weyl_mul(w, simple_reflection(i))
    return w


def inversion_set(w: WeylElement) -> FrozenSet[Root]:
    """Negative roots beta with w(beta) positive."""
    return frozenset(r for r in all_roots() if not is_positive(r) and is_positive(act(w, r)))


def length(w: WeylElement) -> int:
    return len(inversion_set(w))


def element_for_inversion_set(roots: Iterable[Root]) -> WeylElement:
    target = frozenset(tuple(r) for r in roots)
    for w in weyl_group():
        if inversion_set(w) == target:
            return w
    raise DomainError(f"{{{', '.join(format_root(r) for r in sorted(target))}}} is not an inversion set")


def reduced_words(w: WeylElement) -> List[Tuple[int, ...]]:
    """All reduced expressions w = s_i1 ... s_ir, by peeling right descents."""
    if w == weyl_identity():
        return [()]
    words = []
    for i in (1, 2, 3):
        if not is_positive(act(w, SIMPLE_ROOTS[i - 1])):
            shorter = weyl_mul(w, simple_reflection(i))
            words.extend(word + (i,) for word in reduced_words(shorter))
    return sorted(words)


def word_roots(word: Sequence[int]) -> List[Root]:
    """beta_k = s_r ... s_{k+1}(alpha_k) for w = s_1 ... s_r."""
    roots = []
    for k, i in enumerate(word):
        beta = SIMPLE_ROOTS[i - 1]
        for j in word[k + 1:]:
            beta = act(simple_reflection(j), beta)
        roots.append(beta)
    return roots


# ------------------- Factor products -------------------

class Factor(NamedTuple):
    symbol: str
    arg: Affine

    def __str__(self):
        return f"{self.symbol}({self.arg})"


def _sort_key(f: Factor):
    return (_SYMBOL_ORDER[f.symbol], -f.arg.k, -f.arg.c2)


@dataclass(frozen=True)
class ZetaFactorProduct:
    """A reduced ratio of local factors, times D_B^(d_power) and pi^(pi_power)."""
    numerator: Tuple[Factor, ...] = ()
    denominator: Tuple[Factor, ...] = ()
    d_power: Tuple[Fraction, Fraction] = (Fraction(0), Fraction(0))

    @classmethod
    def build(cls, numerator: Iterable[Factor] = (), denominator: Iterable[Factor] = (),
              d_power: Tuple[Fraction, Fraction] = (Fraction(0), Fraction(0))) -> "ZetaFactorProduct":
        num, den = Counter(numerator), Counter(denominator)
        common = num & den
        num, den = num - common, den - common
        return cls(numerator=tuple(sorted(num.elements(), key=_sort_key)),
                   denominator=tuple(sorted(den.elements(), key=_sort_key)),
                   d_power=(Fraction(d_power[0]), Fraction(d_power[1])))

    @classmethod
    def ratio(cls, symbol: str, top: Affine, bottom: Affine) -> "ZetaFactorProduct":
        return cls.build([Factor(symbol, top)], [Factor(symbol, bottom)])

    def __mul__(self, other: "ZetaFactorProduct") -> "ZetaFactorProduct":
        return ZetaFactorProduct.build(
            self.numerator + other.numerator,
            self.denominator + other.denominator,
            (self.d_power[0] + other.d_power[0], self.d_power[1] + other.d_power[1]),
        )

    def inverse(self) -> "ZetaFactorProduct":
        return ZetaFactorProduct.build(self.denominator, self.numerator,
                                       (-self.d_power[0], -self.d_power[1]))

    def symbols(self) -> FrozenSet[str]:
        return frozenset(f.symbol for f in self.numerator + self.denominator)

    def is_one(self) -> bool:
        return not self.numerator and not self.denominator and self.d_power == (0, 0)

    def __str__(self):
        parts = []
        if self.d_power != (0, 0):
            parts.append(f"D^({format_affine(*self.d_power)})")
        top = " ".join(str(f) for f in self.numerator)
        if top:
            parts.append(top)
        head = " ".join(parts) or "1"
        if not self.denominator:
            return head
        return f"{head} / {' '.join(str(f) for f in self.denominator)}"


ONE = ZetaFactorProduct()


def local_factor(root: Root, weight: Sequence[Affine] = LAMBDA_S) -> ZetaFactorProduct:
    """Rank-one factor of a positive root: long zeta(2x)/zeta(2x+1), short zeta_B(x)/zeta_B(x+2)."""
    x = coroot_pairing(root, weight)
    if is_long(root):
        return ZetaFactorProduct.ratio(ZETA, x.double(), x.double().shift(1))
    return ZetaFactorProduct.ratio(ZETA_B, x, x.shift(2))


def c_factor(roots: Iterable[Root]) -> ZetaFactorProduct:
    """Product of local factors over -beta for beta in an inversion set."""
    roots = frozenset(tuple(r) for r in roots)
    element_for_inversion_set(roots)
    product = ONE
    for beta in sorted(roots):
        product = product * local_factor(tuple(-x for x in beta))
    return product


def c_factor_via_word(word: Sequence[int]) -> ZetaFactorProduct:
    product = ONE
    for beta in word_roots(word):
        if not is_positive(beta):
            raise DomainError(f"Word {''.join(map(str, word))} is not reduced")
        product = product * local_factor(beta)
    return product


# ------------------- The eight cosets -------------------

@dataclass(frozen=True)
class WeylCosetEntry:
    index: int
    roots: FrozenSet[Root]
    element: WeylElement = field(compare=False)

    @property
    def c(self) -> ZetaFactorProduct:
        return c_factor(self.roots)


# index -> (parent index, negative root added to the parent's set)
COSET_CHAIN: Dict[int, Tuple[Optional[int], Optional[Root]]] = {
    1: (None, None),
    2: (1, (0, 0, -2)),
    3: (2, (0, -1, -1)),
    4: (3, (0, -2, 0)),
    5: (3, (-1, 0, -1)),
    6: (5, (0, -2, 0)),
    7: (6, (-1, -1, 0)),
    8: (7, (-2, 0, 0)),
}

# index -> (parent index, factor multiplied onto the parent's c-function)
LISTED_C_FUNCTIONS: Dict[int, Tuple[Optional[int], ZetaFactorProduct]] = {
    1: (None, ONE),
    2: (1, ZetaFactorProduct.ratio(ZETA, Affine(2, -2), Affine(2, 0))),
    3: (2, ZetaFactorProduct.ratio(ZETA_B, Affine(2, -6), Affine(2, -2))),
    4: (3, ZetaFactorProduct.ratio(ZETA, Affine(2, -10), Affine(2, -8))),
    5: (3, ZetaFactorProduct.ratio(ZETA_B, Affine(2, -10), Affine(2, -6))),
    6: (5, ZetaFactorProduct.ratio(ZETA, Affine(2, -10), Affine(2, -8))),
    7: (6, ZetaFactorProduct.ratio(ZETA_B, Affine(2, -14), Affine(2, -10))),
    8: (7, ZetaFactorProduct.ratio(ZETA, Affine(2, -18), Affine(2, -16))),
}


def coset_roots(index: int) -> FrozenSet[Root]:
    if index not in COSET_CHAIN:
        raise DomainError(f"Coset index {index} is not in 1..8")
    parent, root = COSET_CHAIN[index]
    if parent is None:
        return frozenset()
    return coset_roots(parent) | {root}


def listed_c_function(index: int) -> ZetaFactorProduct:
    parent, factor = LISTED_C_FUNCTIONS[index]
    if parent is None:
        return factor
    return listed_c_function(parent) * factor


def coset_table() -> List[WeylCosetEntry]:
    entries = []
    for index in sorted(COSET_CHAIN):
        roots = coset_roots(index)
        entries.append(WeylCosetEntry(index=index, roots=roots, element=element_for_inversion_set(roots)))
    return entries


def longest_coset_element() -> WeylElement:
    """u1 -> -u3, u2 -> -u2, u3 -> -u1."""
    return element_for_inversion_set(coset_roots(8))


# ------------------- Places -------------------

def expand_place(product: ZetaFactorProduct, place: str) -> ZetaFactorProduct:
    """Rewrite zeta_B per place: split zeta(x)zeta(x-1), ramified zeta(x),
    arch D^(x/2) Gamma_C(x) with zeta(x) -> Gamma_R(x)."""
    if place not in PLACES:
        raise DomainError(f"Unknown place '{place}'; expected one of {', '.join(PLACES)}")
    d_k, d_c = product.d_power

    def rewrite(f: Factor) -> Tuple[List[Factor], Tuple[Fraction, Fraction]]:
        zero = (Fraction(0), Fraction(0))
        if f.symbol == ZETA_B:
            if place == "split":
                return [Factor(ZETA, f.arg), Factor(ZETA, f.arg.shift(-1))], zero
            if place == "ramified":
                return [Factor(ZETA, f.arg)], zero
            return [Factor(GAMMA_C, f.arg)], (Fraction(f.arg.k, 2), f.arg.constant / 2)
        if f.symbol == ZETA and place == "arch":
            return [Factor(GAMMA_R, f.arg)], zero
        return [f], zero

    num, den = [], []
    for f in product.numerator:
        factors, (k, c) = rewrite(f)
        num.extend(factors)
        d_k, d_c = d_k + k, d_c + c
    for f in product.denominator:
        factors, (k, c) = rewrite(f)
        den.extend(factors)
        d_k, d_c = d_k - k, d_c - c
    return ZetaFactorProduct.build(num, den, (d_k, d_c))


# ------------------- Numerics -------------------

def _near_nonpositive_integer(x) -> bool:
    n = mp.nint(mp.re(x))
    return n <= 0 and abs(x - n) < POLE_TOLERANCE


def gamma_r(x):
    if _near_nonpositive_integer(x / 2):
        raise PoleError(f"Gamma_R has a pole at {mp.nstr(x, 12)}")
    return mp.power(mp.pi, -x / 2) * mp.gamma(x / 2)


def gamma_c(x):
    if _near_nonpositive_integer(x):
        raise PoleError(f"Gamma_C has a pole at {mp.nstr(x, 12)}")
    return 2 * mp.power(2 * mp.pi, -x) * mp.gamma(x)


def zeta_p(p: int, x):
    """(1 - p^-x)^-1."""
    denom = 1 - mp.power(p, -x)
    if abs(denom) < POLE_TOLERANCE:
        raise PoleError(f"zeta_{p} has a pole at {mp.nstr(x, 12)}")
    return 1 / denom


def riemann_zeta(x):
    if abs(x - 1) < POLE_TOLERANCE:
        raise PoleError("zeta has a pole at 1")
    return mp.zeta(x)


def completed_zeta(x):
    """Gamma_R(x) zeta(x)."""
    return gamma_r(x) * riemann_zeta(x)


def _check_primes(primes: Sequence[int]) -> Tuple[int, ...]:
    primes = tuple(int(p) for p in primes)
    bad = [p for p in primes if not isprime(p)]
    if bad:
        raise DomainError(f"{', '.join(map(str, bad))} not prime")
    if len(set(primes)) != len(primes):
        raise DomainError("Ramified primes must be distinct")
    return primes


def discriminant(primes: Sequence[int]) -> int:
    d = 1
    for p in primes:
        d *= p
    return d


def _evaluate(product: ZetaFactorProduct, s, value_of, d_b: int = 1):
    total = mp.mpc(1)
    if product.d_power != (0, 0):
        k, c = product.d_power
        total *= mp.power(d_b, mp.mpf(k.numerator) / k.denominator * s + mp.mpf(c.numerator) / c.denominator)
    for f in product.numerator:
        total *= value_of(f, f.arg.evaluate(s))
    for f in product.denominator:
        total /= value_of(f, f.arg.evaluate(s))
    return total


def numeric_local(product: ZetaFactorProduct, place: Union[int, str], s: complex,
                  ramified_primes: Sequence[int] = ()) -> complex:
    """Evaluate at a finite prime p (ramified when p is listed) or at 'arch'."""
    ramified_primes = _check_primes(ramified_primes)
    with mp.workdps(NUMERIC_DPS):
        s = mp.mpc(s)
        if place == "arch":
            expanded = expand_place(product, "arch")

            def value_of(f: Factor, x):
                if f.symbol == GAMMA_R:
                    return gamma_r(x)
                if f.symbol == GAMMA_C:
                    return gamma_c(x)
                raise DomainError(f"{f.symbol} has no archimedean value")

            return complex(_evaluate(expanded, s, value_of, discriminant(ramified_primes)))

        p = int(place)
        if not isprime(p):
            raise DomainError(f"{p} is not prime")
        expanded = expand_place(product, "ramified" if p in ramified_primes else "split")

        def value_of(f: Factor, x):
            if f.symbol != ZETA:
                raise DomainError(f"{f.symbol} has no value at a finite place")
            return zeta_p(p, x)

        return complex(_evaluate(expanded, s, value_of))


def numeric_global(product: ZetaFactorProduct, s: complex) -> complex:
    """Split-expanded product over all primes, with Riemann zeta."""
    expanded = expand_place(product, "split")
    with mp.workdps(NUMERIC_DPS):
        return complex(_evaluate(expanded, mp.mpc(s), lambda f, x: riemann_zeta(x)))


@dataclass(frozen=True)
class FunctionalEquationValues:
    constant: complex
    ratio: complex


def _check_functional_equation_domain(primes: Sequence[int], s) -> Tuple[int, ...]:
    primes = _check_primes(primes)
    if not primes:
        raise DomainError("At least one finite ramified prime is required")
    if len(primes) % 2 == 0:
        raise DomainError("B must ramify at an even number of places, counting infinity")
    if abs(mp.sin(mp.pi * s)) < POLE_TOLERANCE:
        raise DomainError(f"sin(pi s) vanishes at s = {mp.nstr(s, 12)}")
    return primes


def _section_normalizer(primes: Sequence[int], s):
    """D^s Lambda(2s) Lambda(2s-2) Lambda(2s-4) prod_p zeta_p(2s-2)^-1 Gamma_R(2s-8)/Gamma_R(2s-2)."""
    value = mp.power(discriminant(primes), s)
    value *= completed_zeta(2 * s) * completed_zeta(2 * s - 2) * completed_zeta(2 * s - 4)
    for p in primes:
        value /= zeta_p(p, 2 * s - 2)
    return value * gamma_r(2 * s - 8) / gamma_r(2 * s - 2)


def global_ratio(primes: Sequence[int], s: complex) -> complex:
    """E0*(g, 5-s) / E0*(g, s) from the normalizer and the long-element c-function."""
    primes = _check_primes(primes)
    c8 = c_factor(coset_roots(8))
    with mp.workdps(NUMERIC_DPS):
        s = mp.mpc(s)
        c = mp.mpc(numeric_global(c8, s)) * mp.mpc(numeric_local(c8, "arch", s, primes))
        for p in primes:
            c *= mp.mpc(numeric_local(c8, p, s, primes)) / mp.mpc(numeric_local(c8, p, s))
        ratio = _section_normalizer(primes, 5 - s) / (_section_normalizer(primes, s) * c)
        return complex(ratio)


def functional_equation_constant(primes: Sequence[int], s: complex) -> FunctionalEquationValues:
    """D^(8-2s) prod_p (-p^(2s-8)) sin(pi(s-3))/sin(pi s), with the full ratio alongside."""
    with mp.workdps(NUMERIC_DPS):
        s_mp = mp.mpc(s)
        primes = _check_functional_equation_domain(primes, s_mp)
        constant = mp.power(discriminant(primes), 8 - 2 * s_mp)
        for p in primes:
            constant *= -mp.power(p, 2 * s_mp - 8)
        constant *= mp.sin(mp.pi * (s_mp - 3)) / mp.sin(mp.pi * s_mp)
        constant = complex(constant)
    ratio = global_ratio(primes, s)
    logger.debug(f"functional equation at s={s}: constant={constant}, ratio={ratio}")
    return FunctionalEquationValues(constant=constant, ratio=ratio)


def arch_c_closed_form(primes: Sequence[int], s: complex) -> complex:
    """D^-3 Gamma_C(2s-5)Gamma_C(2s-7)Gamma_C(2s-9) / (Gamma_R(2s)Gamma_R(2s-4)Gamma_R(2s-8))^2."""
    with mp.workdps(NUMERIC_DPS):
        s = mp.mpc(s)
        top = gamma_c(2 * s - 5) * gamma_c(2 * s - 7) * gamma_c(2 * s - 9)
        bottom = (gamma_r(2 * s) * gamma_r(2 * s - 4) * gamma_r(2 * s - 8)) ** 2
        return complex(mp.power(discriminant(_check_primes(primes)), -3) * top / bottom)


# ------------------- Normalizers -------------------

@dataclass(frozen=True)
class NormalizationFactors:
    """Per-place normalizing factors of the weight-2r section and of E*_2r."""
    weight: int
    section: Dict[str, ZetaFactorProduct]
    eisenstein: Dict[str, ZetaFactorProduct]
    pi_power: Tuple[Fraction, Fraction]


def _gammas(args: Iterable[Affine]) -> ZetaFactorProduct:
    return ZetaFactorProduct.build([Factor(GAMMA_R, a) for a in args])


def _zetas(args: Iterable[Affine]) -> ZetaFactorProduct:
    return ZetaFactorProduct.build([Factor(ZETA, a) for a in args])


def normalization_factors(r: int = 0) -> NormalizationFactors:
    if r < 0:
        raise DomainError("Weight 2r needs r >= 0")
    d_s = (Fraction(1), Fraction(0))
    section = {
        "split": _zetas([Affine(2, 0), Affine(2, -4), Affine(2, -8)]),
        "ramified": _zetas([Affine(2, 0), Affine(2, -8)]),
        "arch": ZetaFactorProduct.build(
            _gammas([Affine(2, 4 * r), Affine(2, 4 * r - 8), Affine(2, 4 * r - 16)]).numerator, (), d_s),
    }
    eisenstein = {
        "split": _zetas([Affine(2, -4), Affine(2, -8)]),
        "ramified": _zetas([Affine(2, -8)]),
        "arch": ZetaFactorProduct.build(
            _gammas([Affine(2, 4 * r - 8), Affine(2, 4 * r - 16)]).numerator, (), d_s),
    }
    return NormalizationFactors(weight=2 * r, section=section, eisenstein=eisenstein,
                                pi_power=(Fraction(-1), Fraction(-r)))
