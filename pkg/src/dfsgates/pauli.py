"""Symbolic Pauli-string algebra, the global decoupling group, and averaging.

Strings carry their phase in the exact four-element group {+1, +i, -1, -i}
(stored as an integer exponent of i), never as a float: the pulse
convention Y = ZX = i * sigma_y makes phase bookkeeping the main source of
sign bugs, so products are integer arithmetic all the way down.

Text form is sign-then-letters with qubit 1 first, e.g. "+XIZY" or "-iYY".
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionTooLargeError,
    LengthMismatchError,
    OddQubitCountError,
    TooFewQubitsError,
)
from .linalg import SIGMA_I, SIGMA_X, SIGMA_Y, SIGMA_Z, kron_all

MAX_QUBITS = 8

_LETTERS = "IXYZ"
_LETTER_MATRICES = (SIGMA_I, SIGMA_X, SIGMA_Y, SIGMA_Z)
_PHASE_LABELS = ("+", "+i", "-", "-i")
_PHASE_VALUES = (1, 1j, -1, -1j)

# Single-qubit products sigma_a sigma_b = i**k sigma_c, keyed by (a, b).
_MUL = {
    (1, 2): (1, 3), (2, 1): (3, 3),  # XY = iZ, YX = -iZ
    (2, 3): (1, 1), (3, 2): (3, 1),  # YZ = iX, ZY = -iX
    (3, 1): (1, 2), (1, 3): (3, 2),  # ZX = iY, XZ = -iY
}


@dataclass(frozen=True)
class PauliString:
    """Signed/phased tensor product of single-qubit Pauli letters.

    letters holds one of 0..3 (I, X, Y, Z) per qubit, qubit 1 first;
    phase is the exponent k in the overall factor i**k.
    """

    n_qubits: int
    letters: tuple[int, ...]
    phase: int = 0

    def __post_init__(self):
        if len(self.letters) != self.n_qubits:
            raise LengthMismatchError(
                f"{len(self.letters)} letters for {self.n_qubits} qubits"
            )
        object.__setattr__(self, "phase", self.phase % 4)

    @classmethod
    def identity(cls, n: int) -> "PauliString":
        return cls(n, (0,) * n)

    @classmethod
    def uniform(cls, n: int, letter: str) -> "PauliString":
        """The global string letter^(n), e.g. X...X."""
        return cls(n, (_LETTERS.index(letter),) * n)

    @classmethod
    def from_sites(cls, n: int, sites: dict[int, str], phase: int = 0) -> "PauliString":
        """String with the given letters on 1-indexed sites, identity elsewhere."""
        letters = [0] * n
        for site, letter in sites.items():
            if not 1 <= site <= n:
                raise LengthMismatchError(f"site {site} outside 1..{n}")
            letters[site - 1] = _LETTERS.index(letter)
        return cls(n, tuple(letters), phase)

    @classmethod
    def from_label(cls, text: str) -> "PauliString":
        """Parse the text form, e.g. "+XIZY", "-iYY", "ZZ" (implicit +)."""
        body = text.strip()
        phase = 0
        for k, prefix in sorted(enumerate(_PHASE_LABELS), key=lambda p: -len(p[1])):
            if body.startswith(prefix):
                phase, body = k, body[len(prefix):]
                break
        letters = tuple(_LETTERS.index(ch) for ch in body)
        return cls(len(letters), letters, phase)

    @property
    def label(self) -> str:
        return _PHASE_LABELS[self.phase] + "".join(_LETTERS[c] for c in self.letters)

    @property
    def phase_value(self) -> complex:
        return _PHASE_VALUES[self.phase]

    def __mul__(self, other: "PauliString") -> "PauliString":
        return pauli_product(self, other)

    def matrix(self) -> np.ndarray:
        return pauli_to_matrix(self)

    def embedded(self, n_total: int) -> "PauliString":
        """The same string padded with identities up to n_total qubits."""
        if n_total < self.n_qubits:
            raise LengthMismatchError("cannot embed into fewer qubits")
        return PauliString(
            n_total, self.letters + (0,) * (n_total - self.n_qubits), self.phase
        )

    def __str__(self) -> str:
        return self.label


def pauli_product(a: PauliString, b: PauliString) -> PauliString:
    """Exact symbolic product; matrix(a*b) == matrix(a) @ matrix(b)."""
    if a.n_qubits != b.n_qubits:
        raise LengthMismatchError(f"{a.n_qubits} vs {b.n_qubits} qubits")
    phase = a.phase + b.phase
    letters = []
    for la, lb in zip(a.letters, b.letters):
        if la == 0 or lb == 0:
            letters.append(la or lb)
        elif la == lb:
            letters.append(0)
        else:
            k, lc = _MUL[(la, lb)]
            phase += k
            letters.append(lc)
    return PauliString(a.n_qubits, tuple(letters), phase)


def commutes(a: PauliString, b: PauliString) -> bool:
    """True iff ab = ba, i.e. an even number of anticommuting positions."""
    if a.n_qubits != b.n_qubits:
        raise LengthMismatchError(f"{a.n_qubits} vs {b.n_qubits} qubits")
    clashes = sum(
        1 for la, lb in zip(a.letters, b.letters) if la and lb and la != lb
    )
    return clashes % 2 == 0


def pauli_to_matrix(p: PauliString) -> np.ndarray:
    """Dense 2**n matrix phase * (x) letter_i, qubit 1 leftmost."""
    if p.n_qubits > MAX_QUBITS:
        raise DimensionTooLargeError(f"{p.n_qubits} qubits exceeds {MAX_QUBITS}")
    return p.phase_value * kron_all(_LETTER_MATRICES[c] for c in p.letters)


@dataclass(frozen=True)
class PauliSum:
    """Real/complex-weighted sum of phase-normalized Pauli strings.

    Terms are canonical: string phases are folded into the coefficients,
    like terms merged, exact zeros dropped, and the order fixed by the
    letter tuples, so equal operators compare equal.
    """

    n_qubits: int
    terms: tuple[tuple[complex, PauliString], ...]

    @classmethod
    def from_terms(cls, n_qubits: int, terms) -> "PauliSum":
        merged: dict[tuple[int, ...], complex] = {}
        for coef, string in terms:
            if string.n_qubits != n_qubits:
                raise LengthMismatchError(
                    f"term on {string.n_qubits} qubits in a {n_qubits}-qubit sum"
                )
            merged[string.letters] = (
                merged.get(string.letters, 0) + complex(coef) * string.phase_value
            )
        canon = tuple(
            (c, PauliString(n_qubits, letters))
            for letters, c in sorted(merged.items())
            if c != 0
        )
        return cls(n_qubits, canon)

    @classmethod
    def zero(cls, n_qubits: int) -> "PauliSum":
        return cls(n_qubits, ())

    def __add__(self, other: "PauliSum") -> "PauliSum":
        if self.n_qubits != other.n_qubits:
            raise LengthMismatchError("adding sums on different qubit counts")
        return PauliSum.from_terms(self.n_qubits, self.terms + other.terms)

    def __rmul__(self, scalar) -> "PauliSum":
        return PauliSum.from_terms(
            self.n_qubits, ((scalar * c, s) for c, s in self.terms)
        )

    def __matmul__(self, other: "PauliSum") -> "PauliSum":
        """Operator product, expanded term by term."""
        if self.n_qubits != other.n_qubits:
            raise LengthMismatchError("multiplying sums on different qubit counts")
        return PauliSum.from_terms(
            self.n_qubits,
            (
                (ca * cb, sa * sb)
                for ca, sa in self.terms
                for cb, sb in other.terms
            ),
        )

    @property
    def n_terms(self) -> int:
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_hermitian(self, atol: float = 1e-12) -> bool:
        return all(abs(c.imag) <= atol for c, _ in self.terms)

    def to_matrix(self) -> np.ndarray:
        out = np.zeros((2**self.n_qubits,) * 2, dtype=np.complex128)
        for coef, string in self.terms:
            out += coef * pauli_to_matrix(string)
        return out

    def embedded(self, n_total: int) -> "PauliSum":
        return PauliSum.from_terms(
            n_total, ((c, s.embedded(n_total)) for c, s in self.terms)
        )

    def text(self) -> str:
        """Round-trippable form: "<coef>*<string> + <coef>*<string> + ..."."""
        if not self.terms:
            return "0"

        def fmt(c: complex) -> str:
            if c.imag == 0:
                return repr(c.real)
            return "(" + repr(c).strip("()") + ")"

        return " + ".join(f"{fmt(c)}*{s.label}" for c, s in self.terms)

    @classmethod
    def from_text(cls, n_qubits: int, text: str) -> "PauliSum":
        text = text.strip()
        if text == "0":
            return cls.zero(n_qubits)
        terms = []
        for chunk in text.split(" + "):
            coef_txt, label = chunk.split("*", 1)
            terms.append((complex(coef_txt), PauliString.from_label(label)))
        return cls.from_terms(n_qubits, terms)

    def isclose(self, other: "PauliSum", atol: float = 1e-12) -> bool:
        if self.n_qubits != other.n_qubits:
            return False
        keys = {s.letters for _, s in self.terms} | {s.letters for _, s in other.terms}
        a = {s.letters: c for c, s in self.terms}
        b = {s.letters: c for c, s in other.terms}
        return all(abs(a.get(k, 0) - b.get(k, 0)) <= atol for k in keys)


@dataclass(frozen=True)
class DecouplingGroup:
    """The order-4 global-pulse group {I^n, X^n, Y^n, Z^n} with Y = ZX.

    The Y element carries the explicit i**n phase of (ZX)^(x n); averaging
    conjugates by the element so the phase drops out, which tests verify
    rather than assume.
    """

    n_qubits: int
    elements: tuple[PauliString, PauliString, PauliString, PauliString]

    def embedded(self, n_total: int) -> "DecouplingGroup":
        """The group acting on the first n_qubits of a larger register."""
        return DecouplingGroup(
            n_total, tuple(g.embedded(n_total) for g in self.elements)
        )


def build_decoupling_group(n: int) -> DecouplingGroup:
    """The decoupling group on n qubits (n even, 2 <= n <= 8).

    Raises
    ------
    OddQubitCountError
        The four-sector decomposition needs even n; odd n is rejected.
    """
    if n % 2:
        raise OddQubitCountError(f"decoupling group needs even n, got {n}")
    if not 2 <= n <= MAX_QUBITS:
        raise DimensionTooLargeError(f"n={n} outside 2..{MAX_QUBITS}")
    x = PauliString.uniform(n, "X")
    z = PauliString.uniform(n, "Z")
    y = z * x  # (ZX)^(x n) = i**n * Y...Y
    group = DecouplingGroup(n, (PauliString.identity(n), x, y, z))
    for a in group.elements:
        for b in group.elements:
            prod = a * b
            if not any(prod.letters == g.letters for g in group.elements):
                raise AssertionError("decoupling group not projectively closed")
    return group


def group_average(h: PauliSum, group: DecouplingGroup) -> PauliSum:
    """(1/4) sum_j g_j† h g_j, evaluated symbolically and exactly.

    Conjugating a Pauli string by a Pauli string returns the same string
    up to a sign, so each term either survives unchanged (commutes with
    the whole group) or cancels exactly; the sign sum is done in integers
    and the result is the commutant projection of h.
    """
    if h.n_qubits != group.n_qubits:
        raise LengthMismatchError("Hamiltonian and group qubit counts differ")
    kept = []
    for coef, string in h.terms:
        signs = sum(1 if commutes(string, g) else -1 for g in group.elements)
        if signs == 4:
            kept.append((coef, string))
        elif signs != 0:
            raise AssertionError("group-character sum must be 0 or 4")
    return PauliSum.from_terms(h.n_qubits, kept)


def commutant_generators(n: int) -> list[PauliString]:
    """The 2(n-2) two-body strings X_1 X_(j+1) and Z_(j+1) Z_n, j = 1..n-2.

    Every returned string commutes with all four group elements, so
    Hamiltonians built from them preserve each decoherence-free sector.
    """
    if n % 2:
        raise OddQubitCountError(f"commutant generators need even n, got {n}")
    if n < 4:
        raise TooFewQubitsError(f"commutant generators need n >= 4, got {n}")
    gens = [PauliString.from_sites(n, {1: "X", j + 1: "X"}) for j in range(1, n - 1)]
    gens += [PauliString.from_sites(n, {j + 1: "Z", n: "Z"}) for j in range(1, n - 1)]
    return gens
