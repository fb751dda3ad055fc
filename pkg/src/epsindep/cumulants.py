"""Exact cumulant/moment conversions and block-product evaluation.

Free cumulants invert moments over non-crossing partitions, classical
cumulants over all partitions; both by the same subtraction recursion
(peel everything except the full block).  All arithmetic is Fraction.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import DomainError, InputError, TableError
from .partitions import enumerate_noncrossing, kernel, refines

FREE = "free"
CLASSICAL = "classical"


def _free_peel(n, cumulants, moments):
    """Contribution to m_n of the block containing point 1: its size s
    ranges over 1..n and the s gaps it leaves fill independently, so the
    gap sizes convolve lower moments (m_0 = 1)."""
    padded = [Fraction(1)] + moments[: n - 1]
    total = Fraction(0)
    conv = [Fraction(1)] + [Fraction(0)] * (n - 1)  # s-fold convolution, s=0
    for s in range(1, n + 1):
        nxt = [Fraction(0)] * n
        for t in range(n):
            if conv[t] == 0:
                continue
            for i in range(n - t):
                nxt[t + i] += conv[t] * padded[i]
        conv = nxt
        total += cumulants[s - 1] * conv[n - s]
    return total


def _classical_peel(n, cumulants, moments):
    """Contribution of the block containing point 1: choose its other
    k-1 members, the rest partitions freely into m_{n-k}."""
    padded = [Fraction(1)] + moments[: n - 1]
    return sum(
        comb(n - 1, k - 1) * cumulants[k - 1] * padded[n - k] for k in range(1, n + 1)
    )


def _to_moments(cumulants, kind):
    cumulants = [Fraction(c) for c in cumulants]
    peel = _free_peel if kind == FREE else _classical_peel
    moments = []
    for n in range(1, len(cumulants) + 1):
        moments.append(peel(n, cumulants, moments))
    return moments


def _to_cumulants(moments, kind):
    if not moments:
        raise TableError("empty moment sequence")
    moments = [Fraction(m) for m in moments]
    peel = _free_peel if kind == FREE else _classical_peel
    cumulants = []
    for n in range(1, len(moments) + 1):
        # kappa_n enters the peel sum only through the full block (s = n)
        cumulants.append(Fraction(0))
        rest = peel(n, cumulants, moments)
        cumulants[-1] = moments[n - 1] - rest
    return cumulants


def free_cumulants_to_moments(cumulants):
    return _to_moments(cumulants, FREE)


def moments_to_free_cumulants(moments):
    return _to_cumulants(moments, FREE)


def classical_cumulants_to_moments(cumulants):
    return _to_moments(cumulants, CLASSICAL)


def moments_to_classical_cumulants(moments):
    return _to_cumulants(moments, CLASSICAL)


@dataclass(frozen=True)
class CumulantTable:
    """Cumulant sequence of one variable, free or classical flavour."""

    kind: str
    cumulants: tuple
    label: object = None

    def __post_init__(self):
        if self.kind not in (FREE, CLASSICAL):
            raise TableError(f"unknown kind {self.kind!r}")
        object.__setattr__(self, "cumulants", tuple(Fraction(c) for c in self.cumulants))

    @classmethod
    def from_moments(cls, kind, moments, label=None):
        return cls(kind, _to_cumulants(moments, kind), label=label)

    @property
    def max_order(self):
        return len(self.cumulants)

    def cumulant(self, order):
        if not 1 <= order <= len(self.cumulants):
            raise TableError(
                f"order {order} outside table (max {len(self.cumulants)})"
            )
        return self.cumulants[order - 1]

    def moments(self):
        return _to_moments(self.cumulants, self.kind)

    def moment(self, order):
        if not 1 <= order <= len(self.cumulants):
            raise TableError(
                f"order {order} outside table (max {len(self.cumulants)})"
            )
        return self.moments()[order - 1]


def kappa_pi(p, entries, tables):
    """Product over blocks of the block-size cumulant from the table of
    the block's label.  Requires the partition to sit below the kernel."""
    if p.n != len(entries):
        raise DomainError("partition size differs from tuple length")
    if not refines(p, kernel(entries)):
        raise DomainError("partition does not refine the kernel of the tuple")
    total = Fraction(1)
    for block in p.blocks:
        label = entries[block[0] - 1]
        if label not in tables:
            raise TableError(f"no cumulant table for label {label}")
        total *= tables[label].cumulant(len(block))
    return total


# -- named distributions ----------------------------------------------------


def semicircle_table(variance=1, max_order=12, label=None):
    """Free analogue of the Gaussian: only the second free cumulant."""
    cum = [Fraction(0)] * max_order
    if max_order >= 2:
        cum[1] = Fraction(variance)
    return CumulantTable(FREE, cum, label=label)


def arcsine_moments(max_order=12, scale=1):
    """Even moments are central binomials C(2k,k)*scale^2k, odd are 0.

    This is the distribution of a group generator plus its inverse under
    the canonical trace."""
    from math import comb

    s = Fraction(scale)
    return [
        Fraction(comb(n, n // 2)) * s**n if n % 2 == 0 else Fraction(0)
        for n in range(1, max_order + 1)
    ]


def arcsine_table(kind=FREE, max_order=12, label=None):
    return CumulantTable.from_moments(kind, arcsine_moments(max_order), label=label)


def bernoulli_moments(max_order=12):
    """Symmetric +/-1 coin: moments alternate 0, 1."""
    return [Fraction(0) if n % 2 else Fraction(1) for n in range(1, max_order + 1)]


def bernoulli_table(kind=FREE, max_order=12, label=None):
    return CumulantTable.from_moments(kind, bernoulli_moments(max_order), label=label)


def point_mass_moments(value, max_order=12):
    v = Fraction(value)
    return [v**n for n in range(1, max_order + 1)]


def point_mass_table(value, kind=FREE, max_order=12, label=None):
    return CumulantTable.from_moments(kind, point_mass_moments(value, max_order), label=label)


def parse_fraction(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad rational {text!r}: {exc}")


def format_fraction(f):
    f = Fraction(f)
    return f"{f.numerator}/{f.denominator}"


def table_from_spec(spec, max_order=12):
    """Build a table from a JSON distribution spec.

    Either {"label": name, "kind": "free"|"classical",
    "moments": ["p/q", ...]} or a named one, e.g. {"label": name,
    "named": "semicircle", "variance": "1", "kind": ...}.
    """
    label = spec.get("label")
    kind = spec.get("kind", FREE)
    if kind not in (FREE, CLASSICAL):
        raise InputError(f"unknown kind {kind!r}")
    if "moments" in spec:
        moments = [parse_fraction(m) for m in spec["moments"]]
        return CumulantTable.from_moments(kind, moments, label=label)
    name = spec.get("named")
    if name == "semicircle":
        variance = parse_fraction(str(spec.get("variance", "1")))
        moments = _to_moments(
            [Fraction(0), variance] + [Fraction(0)] * (max_order - 2), FREE
        )
        return CumulantTable.from_moments(kind, moments, label=label)
    if name == "arcsine":
        return arcsine_table(kind, max_order, label=label)
    if name == "bernoulli":
        return bernoulli_table(kind, max_order, label=label)
    if name == "point_mass":
        value = parse_fraction(str(spec.get("value", "1")))
        return point_mass_table(value, kind, max_order, label=label)
    raise InputError(f"distribution spec needs 'moments' or a known 'named': {spec!r}")


# -- products-as-arguments identity harness ---------------------------------


class JointMomentOracle:
    """Joint moments of finitely many symbols of one algebra.

    phi() maps a word (tuple of symbol indices) to a rational; the empty
    word has moment 1.  Values may be arbitrary: the identity under test
    is purely combinatorial in the moment data.
    """

    def __init__(self, nvars, values=None, default_factory=None):
        self.nvars = nvars
        self.values = {tuple(w): Fraction(v) for w, v in (values or {}).items()}
        self.default_factory = default_factory
        self._kappa_cache = {}

    def phi(self, word):
        word = tuple(word)
        if not word:
            return Fraction(1)
        if word not in self.values:
            if self.default_factory is None:
                raise TableError(f"joint moment for word {word} not supplied")
            self.values[word] = Fraction(self.default_factory(word))
        return self.values[word]

    def cumulant(self, args):
        """Multivariate free cumulant; each argument is a word (a product
        of symbols), spliced into moments by concatenation."""
        args = tuple(tuple(a) for a in args)
        if args in self._kappa_cache:
            return self._kappa_cache[args]
        n = len(args)
        total = self.phi(tuple(x for a in args for x in a))
        if n > 1:
            for p in enumerate_noncrossing(n):
                if len(p.blocks) == 1:
                    continue
                term = Fraction(1)
                for block in p.blocks:
                    term *= self.cumulant(tuple(args[r - 1] for r in block))
                total -= term
        self._kappa_cache[args] = total
        return total


def random_joint_oracle(rng, nvars, max_num=20, max_den=20):
    """Random rational joint moments, drawn lazily on first access."""

    def draw(_word):
        return Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den))

    return JointMomentOracle(nvars, default_factory=draw)


def product_as_arguments_check(p, oracle, first=(0, 1), rest=None):
    """Check the two-factor product-in-first-slot expansion of a free
    cumulant against its order-(p+2) refinement plus split terms."""
    b1, b1t = first
    rest = tuple(rest if rest is not None else range(2, 2 + p))
    if len(rest) != p:
        raise DomainError(f"need exactly p={p} trailing positions, got {len(rest)}")
    lhs = oracle.cumulant(((b1, b1t),) + tuple((r,) for r in rest))
    rhs = oracle.cumulant(((b1,), (b1t,)) + tuple((r,) for r in rest))
    for q in range(p + 1):
        left = oracle.cumulant(((b1,),) + tuple((r,) for r in rest[q:]))
        right = oracle.cumulant(((b1t,),) + tuple((r,) for r in rest[:q]))
        rhs += left * right
    return lhs == rhs
