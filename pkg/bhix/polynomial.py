# Copyright (C) 2024 Callum Dickinson
#
# bhix is free software: you can redistribute it and/or modify it under the terms of the
# GNU General Public License as published by the Free Software Foundation,
# either version 3 of the License, or (at your option) any later version.
#
# bhix is distributed in the hope that it will be useful, but WITHOUT ANY WARRANTY;
# without even the implied warranty of MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.
# See the GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License along with bhix.
# If not, see <https://www.gnu.org/licenses/>.


"""
Exact polynomial arithmetic over arbitrary-precision integers.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import zip_longest
from typing import TYPE_CHECKING, Any, Iterable, Tuple, TypeVar, Union

import numpy as np

if TYPE_CHECKING:
    from typing_extensions import Self

Number = TypeVar("Number", int, float, Fraction)


class IntPoly:
    """
    Polynomial with integer coefficients, stored lowest degree first.

    ```python
    x = IntPoly.x()
    (x - 1) ** 2 * (x - 4) * x == IntPoly([0, -4, 9, -6, 1])
    ```
    """

    __slots__ = ("coeffs",)

    coeffs: Tuple[int, ...]

    def __init__(self, coeffs: Iterable[int]) -> None:
        values = [int(c) for c in coeffs]
        while values and values[-1] == 0:
            values.pop()
        self.coeffs = tuple(values)

    @classmethod
    def x(cls) -> Self:
        return cls((0, 1))

    @classmethod
    def constant(cls, value: int) -> Self:
        return cls((value,))

    @classmethod
    def linear(cls, root: int) -> Self:
        """
        The monic linear polynomial `x - root`.
        """

        return cls((-root, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def coefficient(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def _coerce(self, other: Any) -> IntPoly:
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, int):
            return IntPoly((other,))
        return NotImplemented

    def __add__(self, other: Any) -> IntPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return type(self)(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    __radd__ = __add__

    def __neg__(self) -> IntPoly:
        return type(self)(-c for c in self.coeffs)

    def __sub__(self, other: Any) -> IntPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Any) -> IntPoly:
        return (-self) + other

    def __mul__(self, other: Any) -> IntPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return type(self)(())
        result = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    result[i + j] += a * b
        return type(self)(result)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> IntPoly:
        if exponent < 0:
            raise ValueError(f"Negative polynomial power {exponent}")
        result: IntPoly = type(self)((1,))
        base: IntPoly = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def divmod_monic(self, divisor: IntPoly) -> Tuple[IntPoly, IntPoly]:
        """
        Divide by a monic polynomial, returning the quotient and remainder.
        """

        if divisor.leading != 1:
            raise ValueError(f"Divisor {divisor} is not monic")
        remainder = list(self.coeffs)
        quotient = [0] * max(len(remainder) - divisor.degree, 0)
        for k in range(len(remainder) - 1, divisor.degree - 1, -1):
            factor = remainder[k]
            if factor:
                shift = k - divisor.degree
                quotient[shift] = factor
                for i, d in enumerate(divisor.coeffs):
                    remainder[shift + i] -= factor * d
        return IntPoly(quotient), IntPoly(remainder)

    def strip_zero_roots(self) -> Self:
        """
        Divide out the largest power of `x`, leaving a polynomial with a nonzero constant term.
        """

        k = next((i for i, c in enumerate(self.coeffs) if c), len(self.coeffs))
        return type(self)(self.coeffs[k:])

    def reciprocal_root_sums(self) -> Tuple[Fraction, Fraction]:
        """
        Exact sums of `1/r` and `1/r^2` over the roots `r` (with multiplicity),
        from the three lowest coefficients.

        Raises:
            ZeroDivisionError: `0` is a root.

        Returns:
            Tuple of `sum 1/r` and `sum 1/r^2`
        """

        c0 = self.coefficient(0)
        if c0 == 0:
            raise ZeroDivisionError(f"{self} has 0 as a root")
        # The roots of x^d p(1/x) are the reciprocals 1/r.
        e1 = Fraction(-self.coefficient(1), c0)
        e2 = Fraction(self.coefficient(2), c0)
        return e1, e1 * e1 - 2 * e2

    def __call__(self, x: Number) -> Number:
        """
        Evaluate by Horner's rule; works for `int`, `Fraction` and `float` arguments.
        """

        result: Any = 0
        for c in reversed(self.coeffs):
            result = result * x + c
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = IntPoly((other,))
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            magnitude = abs(c)
            if k == 0:
                body = str(magnitude)
            else:
                power = "x" if k == 1 else f"x^{k}"
                body = power if magnitude == 1 else f"{magnitude}{power}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


class CharPoly(IntPoly):
    """
    Laplacian characteristic polynomial `det(xI - L(G))`, coefficients `c_0..c_n` with `c_n = 1`.
    """

    __slots__ = ()

    def matrix_tree_value(self) -> int:
        """
        `(-1)^(n-1) c_1`, which equals `n * tau(G)` for a connected graph.
        """

        sign = -1 if self.degree % 2 == 0 else 1
        return sign * self.coefficient(1)


def matrix_char_poly(matrix: Union[np.ndarray, Iterable[Iterable[int]]]) -> CharPoly:
    """
    Characteristic polynomial `det(xI - M)` of a square integer matrix,
    by the Faddeev-LeVerrier recurrence in exact integer arithmetic.

    Every division in the recurrence is exact for integer matrices.

    Args:
        matrix: Square integer matrix (possibly empty).

    Returns:
        Monic characteristic polynomial
    """

    a = np.array(
        [[int(v) for v in row] for row in np.asarray(matrix).tolist()],
        dtype=object,
    ).reshape(np.asarray(matrix).shape)
    n = a.shape[0] if a.ndim == 2 else 0
    if n == 0:
        return CharPoly((1,))
    identity = np.identity(n, dtype=object)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    # M_1 = I; M_k = A M_(k-1) + c_(n-k+1) I; c_(n-k) = -tr(A M_k) / k
    product = np.zeros((n, n), dtype=object)
    for k in range(1, n + 1):
        m_k = product + coeffs[n - k + 1] * identity
        product = a.dot(m_k)
        trace = sum(product[i, i] for i in range(n))
        quotient, remainder = divmod(-trace, k)
        if remainder:
            raise ArithmeticError(
                f"Faddeev-LeVerrier division not exact at step {k} (non-integer matrix?)",
            )
        coeffs[n - k] = quotient
    return CharPoly(coeffs)
