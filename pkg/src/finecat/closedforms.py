"""Explicit formulas for the colored-hill Catalan triangles g_1..g_4 and friends.

Every formula with a prefactor such as k/n or 1/n! is evaluated numerator first and
divided with :func:`core.exact_div`; a remainder raises ``InexactDivisionError``,
which means the formula is wrong, never that it needs rounding.
"""

from __future__ import annotations

import sys
from math import comb, factorial, prod
from typing import Callable, Dict

from .core import Sequence, Triangle, binomial, catalan, exact_div, triangle_from_function
from .validators import validate_index, validate_positive

# x_1, x_2, ... arguments of a partial Bell polynomial
BellInput = tuple[int, ...]


def double_factorial(m: int) -> int:
    """m!! = m (m-2) (m-4) ..., with (-1)!! = 0!! = 1.

    Raises:
        ValueError: If m < -1
    """
    if m < -1:
        raise ValueError(f"double factorial needs m >= -1, got {m}")
    return prod(range(m, 0, -2))


def g2_dfact(n: int, k: int) -> int:
    """g_2(n, k) as the alternating double-factorial sum."""
    validate_index(n, k)
    total = sum(
        (-1) ** (j - 1)
        * comb(k, 2 * j - 1)
        * double_factorial(2 * j - 1)
        * double_factorial(2 * n - 2 * j - 1)
        for j in range(1, (k + 1) // 2 + 1)
    )
    return exact_div(2 ** (n - k) * total, factorial(n), f"g2_dfact({n}, {k})")


def g2_product(n: int, k: int) -> int:
    """g_2(n, k) read off the binomial-series expansion of (x c(x))^k."""
    validate_index(n, k)
    total = sum(
        (-1) ** (i + n) * comb(k, i) * prod(i - 2 * t for t in range(n))
        for i in range(1, k + 1)
    )
    return exact_div(2 ** (n - k) * total, factorial(n), f"g2_product({n}, {k})")


def g2_closed(n: int, k: int) -> int:
    """g_2(n, n) = 1, otherwise k/(n-k) * C(2n-k-1, n)."""
    validate_index(n, k)
    if k == n:
        return 1
    return exact_div(k * comb(2 * n - k - 1, n), n - k, f"g2_closed({n}, {k})")


def g2_rising(n: int, k: int) -> int:
    """g_2(n, k) = k (n+1)(n+2)...(2n-k-1) / (n-k)!."""
    validate_index(n, k)
    if k == n:
        return 1
    rising = prod(n + i for i in range(1, n - k))
    return exact_div(k * rising, factorial(n - k), f"g2_rising({n}, {k})")


def g2_alternating(n: int, k: int) -> int:
    """g_2 = g_3 . L^-1 written out: k/n * sum (-1)^(i-k) C(i,k) C(2n, n-i)."""
    validate_index(n, k)
    total = sum(
        (-1) ** (i - k) * comb(i, k) * comb(2 * n, n - i) for i in range(k, n + 1)
    )
    return exact_div(k * total, n, f"g2_alternating({n}, {k})")


def g2_from_g3(n: int, k: int) -> int:
    """g_2(n, k) = sum_{i=0}^{k-1} C(k, i) g_3(n-k, k-i) for k < n.

    Terms with k - i > n - k vanish (g_3 is zero above the diagonal) and are skipped.
    """
    validate_index(n, k)
    if k >= n:
        raise ValueError(f"g2_from_g3 needs k < n, got n={n}, k={k}")
    return sum(comb(k, i) * g3_closed(n - k, k - i) for i in range(k) if k - i <= n - k)


def mirror_A(n: int, k: int) -> int:
    """Mirror of g_2: A(n, k) = g_2(n, n - k + 1)."""
    validate_index(n, k)
    return g2_closed(n, n - k + 1)


def g3_closed(n: int, k: int) -> int:
    """Shapiro's Catalan triangle k/n * C(2n, n-k)."""
    validate_index(n, k)
    return exact_div(k * comb(2 * n, n - k), n, f"g3_closed({n}, {k})")


def g3_binomial_sum(n: int, k: int) -> int:
    validate_index(n, k)
    total = sum(comb(i, k) * comb(2 * n - i - 1, n - 1) for i in range(k, n + 1))
    return exact_div(k * total, n, f"g3_binomial_sum({n}, {k})")


def g4_explicit(n: int, k: int) -> int:
    """g_4(n, k) = 2^(n-k)/n! * sum_{i=1}^{k} (-1)^(k-i) C(k, i) i(i+2)...(i+2n-2)."""
    validate_index(n, k)
    total = sum(
        (-1) ** (k - i) * comb(k, i) * prod(i + 2 * j for j in range(n))
        for i in range(1, k + 1)
    )
    return exact_div(2 ** (n - k) * total, factorial(n), f"g4_explicit({n}, {k})")


def g1_explicit(n: int, k: int) -> int:
    """g_1 = g_3 . L^-2 written out: k/n * sum (-2)^(i-k) C(i,k) C(2n, n-i)."""
    validate_index(n, k)
    total = sum(
        (-2) ** (i - k) * comb(i, k) * comb(2 * n, n - i) for i in range(k, n + 1)
    )
    return exact_div(k * total, n, f"g1_explicit({n}, {k})")


def f1_closed(n: int) -> int:
    validate_positive(n, "n")
    return catalan(n - 1)


def f2_closed(n: int) -> int:
    validate_positive(n, "n")
    return catalan(n)


def f3_closed(n: int) -> int:
    """f_3(n) = C(2n-1, n)."""
    validate_positive(n, "n")
    return comb(2 * n - 1, n)


def euler_catalan(n: int) -> int:
    """Euler's product form C_{n-1} = 2^(n-1) (2n-3)!! / n!, for n > 1."""
    validate_positive(n, "n")
    if n < 2:
        raise ValueError(f"euler_catalan needs n > 1, got {n}")
    return exact_div(
        2 ** (n - 1) * double_factorial(2 * n - 3), factorial(n), f"euler_catalan({n})"
    )


def partial_bell(n: int, k: int, x: BellInput) -> int:
    """Partial Bell polynomial B_{n,k}(x_1, ..., x_{n-k+1}).

    Uses B_{n,k} = sum_{i=1}^{n-k+1} C(n-1, i-1) x_i B_{n-i,k-1} with B_{0,0} = 1 and
    B_{n,0} = B_{0,k} = 0 otherwise.

    Raises:
        ValueError: If fewer than n - k + 1 arguments are supplied
    """
    if n < 0 or k < 0:
        raise ValueError(f"partial_bell needs n, k >= 0, got n={n}, k={k}")
    if n == 0 and k == 0:
        return 1
    if n == 0 or k == 0 or k > n:
        return 0
    needed = n - k + 1
    if len(x) < needed:
        raise ValueError(f"B_{{{n},{k}}} needs {needed} arguments, got {len(x)}")

    # level b only needs B_{a,b} for b <= a <= n - k + b
    previous = {0: 1}
    for b in range(1, k + 1):
        current = {}
        for a in range(b, n - k + b + 1):
            current[a] = sum(
                binomial(a - 1, i - 1) * x[i - 1] * previous.get(a - i, 0)
                for i in range(1, a - b + 2)
            )
        previous = current
    return previous[n]


def bell_arguments(f: Sequence, length: int | None = None) -> BellInput:
    """x_j = j! * f(j), the arguments that turn B_{n,k} into n!/k! times g(n, k)."""
    length = len(f) if length is None else length
    return tuple(factorial(j) * f(j) for j in range(1, length + 1))


# level -> name of its closed form; resolved at call time
CLOSED_FORMS: Dict[int, str] = {
    1: "g1_explicit",
    2: "g2_closed",
    3: "g3_closed",
    4: "g4_explicit",
}


def closed_form(m: int) -> Callable[[int, int], int]:
    """The closed form of g_m, looked up on this module at call time."""
    if m not in CLOSED_FORMS:
        available = ", ".join(str(level) for level in CLOSED_FORMS)
        raise ValueError(f"No closed form for level {m}. Available: {available}")
    return getattr(sys.modules[__name__], CLOSED_FORMS[m])


def closed_triangle(m: int, length: int) -> Triangle:
    """G_m materialized from its closed form."""
    return triangle_from_function(closed_form(m), length, f"G{m}")
