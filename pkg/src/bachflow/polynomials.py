"""Exact multivariate polynomials over the rationals.

Terms are stored as a map from exponent tuples to nonzero Fraction
coefficients. Evaluation is direct summation, so the same record works
for exact rational inputs and for floats.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence, Tuple

Exponents = Tuple[int, ...]


class Poly:
    """Polynomial in a fixed number of variables with rational coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Exponents, object] | None = None):
        self.nvars = int(nvars)
        self.terms: dict[Exponents, Fraction] = {}
        if terms:
            for exps, coeff in terms.items():
                self._accumulate(tuple(exps), Fraction(coeff))

    def _accumulate(self, exps: Exponents, coeff: Fraction) -> None:
        if len(exps) != self.nvars:
            raise ValueError(f"exponent tuple {exps} has wrong arity for {self.nvars} variables")
        if any(e < 0 for e in exps):
            raise ValueError(f"negative exponent in {exps}")
        acc = self.terms.get(exps, Fraction(0)) + coeff
        if acc == 0:
            self.terms.pop(exps, None)
        else:
            self.terms[exps] = acc

    # ---- ring operations ----

    def __add__(self, other: "Poly") -> "Poly":
        self._check_arity(other)
        out = Poly(self.nvars, self.terms)
        for exps, coeff in other.terms.items():
            out._accumulate(exps, coeff)
        return out

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __neg__(self) -> "Poly":
        return Poly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Poly):
            self._check_arity(other)
            out = Poly(self.nvars)
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    out._accumulate(tuple(a + b for a, b in zip(e1, e2)), c1 * c2)
            return out
        return Poly(self.nvars, {e: c * Fraction(other) for e, c in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.nvars == other.nvars and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def _check_arity(self, other: "Poly") -> None:
        if self.nvars != other.nvars:
            raise ValueError("variable counts differ")

    # ---- evaluation and substitution ----

    def __call__(self, *xs):
        """Evaluate by direct summation. Exact on Fractions, plain IEEE on floats."""
        if len(xs) != self.nvars:
            raise ValueError(f"expected {self.nvars} arguments, got {len(xs)}")
        total = 0
        for exps, coeff in self.terms.items():
            term = coeff
            for x, e in zip(xs, exps):
                if e:
                    term = term * x**e
            total = total + term
        return total

    def signed_remap(self, images: Sequence[Tuple[int, int]], nvars: int | None = None) -> "Poly":
        """Substitute variable j by images[j] = (sign, target): x_j := sign * X_target.

        Targets may repeat (variable identification) and the result may live in a
        different variable count. Signs must be +1 or -1.
        """
        if len(images) != self.nvars:
            raise ValueError("need one image per variable")
        out_n = self.nvars if nvars is None else int(nvars)
        out = Poly(out_n)
        for exps, coeff in self.terms.items():
            new_exps = [0] * out_n
            sign = 1
            for e, (s, target) in zip(exps, images):
                if s not in (1, -1):
                    raise ValueError("signs must be +1 or -1")
                if not 0 <= target < out_n:
                    raise ValueError(f"target index {target} out of range")
                new_exps[target] += e
                if s < 0 and e % 2:
                    sign = -sign
            out._accumulate(tuple(new_exps), sign * coeff)
        return out

    # ---- inspection ----

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def coefficients_all_positive(self) -> bool:
        """True when every coefficient is > 0, so the value is > 0 on the open
        positive orthant (used by the nonexistence case arguments)."""
        return bool(self.terms) and all(c > 0 for c in self.terms.values())

    def __repr__(self) -> str:
        if not self.terms:
            return "Poly(0)"
        names = "xyzw"[: self.nvars] if self.nvars <= 4 else None
        parts = []
        for exps in sorted(self.terms, reverse=True):
            coeff = self.terms[exps]
            mono = []
            for i, e in enumerate(exps):
                if e == 0:
                    continue
                var = names[i] if names else f"x{i}"
                mono.append(var if e == 1 else f"{var}^{e}")
            body = "*".join(mono) if mono else "1"
            parts.append(f"{coeff}*{body}" if mono else f"{coeff}")
        return "Poly(" + " + ".join(parts) + ")"


def monomial(nvars: int, exps: Exponents, coeff=1) -> Poly:
    return Poly(nvars, {tuple(exps): coeff})
