# services/bound_service.py
from __future__ import annotations

from dataclasses import dataclass, asdict
from fractions import Fraction
from functools import lru_cache

from utils.errors import InputError

# Explicit constant C in  B(n, k, a) <= C * k * n * ceil(2n/a + 3)^(ceil(k/a) - 2).
# Base case k <= 2a: B = kn <= 5kn. Step: B = Q*B(k-a) + 10n^2 and a*Q >= 2n,
# so 10n^2 <= 5*a*n*Q <= 5*a*n*Q^e whenever e >= 1.
FORMGEN_CONSTANT = 5


def _ceil_div(p: int, q: int) -> int:
    return -(-p // q)


def recursion_factor(n: int, a: int) -> int:
    """ceil(2n/a + 3)."""
    return _ceil_div(2 * n + 3 * a, a)


@lru_cache(maxsize=None)
def bound_recursion(n: int, k: int, a: int) -> int:
    """B(n,k,a) = kn if k <= 2a, else ceil(2n/a + 3) * B(n, k-a, a) + 10n^2."""
    if n < 0 or a < 1 or k < 1:
        raise InputError(f"bound_recursion needs n >= 0, k >= 1, a >= 1 (got n={n}, k={k}, a={a})")
    if n == 0:
        return 0
    if k <= 2 * a:
        return k * n
    return recursion_factor(n, a) * bound_recursion(n, k - a, a) + 10 * n * n


def change_full_bound(n: int, k: int, a: int) -> int:
    """B(n, k-a, a) + (2a+2)n, with B of a colour-free instance taken as 0."""
    rest = bound_recursion(n, k - a, a) if k - a >= 1 else 0
    return rest + (2 * a + 2) * n


def find_full_bound(n: int, k: int, a: int) -> int:
    """ceil(n/a) rounds of change_full."""
    return _ceil_div(n, a) * change_full_bound(n, k, a)


def transform_k_bound(n: int, k: int, d: int, strategy: str = 'forget') -> int:
    """Length guarantee of transform_k for the chosen strategy."""
    if k < d + 2:
        raise InputError(f"no bound for k = {k} < d + 2 = {d + 2}")
    if strategy == 'direct' or k == d + 2:
        return bound_recursion(n, k, k - d - 1)
    if strategy != 'forget':
        raise InputError(f"unknown strategy {strategy!r}")
    return 2 * (bound_recursion(n, d + 2, 1) + n)


@dataclass(frozen=True)
class BoundParams:
    n: int
    k: int
    a: int | None = None
    d: int | None = None
    epsilon: Fraction | None = None

    def __post_init__(self):
        if self.n < 0 or self.k < 1:
            raise InputError("bound parameters need n >= 0 and k >= 1")
        if self.a is None and self.d is None:
            raise InputError("give the slack a (list colouring) or the degeneracy d")
        if self.a is not None and self.a < 1:
            raise InputError("slack a must be at least 1")
        if self.d is not None and self.d < 0:
            raise InputError("degeneracy d must be non-negative")
        if self.epsilon is not None:
            eps = Fraction(self.epsilon)
            if not 0 < eps < 1:
                raise InputError("epsilon must lie strictly between 0 and 1")
            object.__setattr__(self, 'epsilon', eps)


@dataclass(frozen=True)
class BoundReport:
    case: str
    exponent: int | None
    value: int | None
    closed_form: int | None
    constant: int = FORMGEN_CONSTANT
    a: int | None = None

    def to_dict(self) -> dict:
        return asdict(self)


def formgen_value(n: int, k: int, a: int) -> tuple[int, int]:
    """(exponent, C*k*n*ceil(2n/a+3)^exponent) with exponent = ceil(k/a) - 2."""
    exponent = _ceil_div(k, a) - 2
    if exponent < 0:
        return exponent, k * n
    return exponent, FORMGEN_CONSTANT * k * n * recursion_factor(n, a) ** exponent


def theorem_bound(params: BoundParams) -> BoundReport:
    """Pick the regime that applies and evaluate the engine's explicit bound."""
    if params.d is None:
        return _list_bound(params)
    return _degenerate_bound(params)


def _list_bound(p: BoundParams) -> BoundReport:
    n, k, a = p.n, p.k, p.a
    exponent, closed = formgen_value(n, k, a)
    value = bound_recursion(n, k, a)
    if k <= 2 * a:
        return BoundReport('linear', 0, k * n, k * n, a=a)
    if k <= 3 * a:
        case = 'quadratic'
    elif p.epsilon is not None and k <= (1 + 1 / p.epsilon) * a:
        case = 'polynomial'
    else:
        case = 'general'
    return BoundReport(case, exponent, value, closed, a=a)


def _degenerate_bound(p: BoundParams) -> BoundReport:
    n, k, d = p.n, p.k, p.d
    if k < d + 2:
        return BoundReport('unsupported', None, None, None)
    a = k - d - 1
    if k <= 2 * a:
        return BoundReport('linear', 0, k * n, k * n, a=a)
    if k == d + 2:
        exponent, closed = formgen_value(n, k, 1)
        return BoundReport('k = d+2', exponent, bound_recursion(n, k, 1), closed, a=1)
    if 2 * k >= 3 * (d + 1):
        exponent, closed = formgen_value(n, k, a)
        return BoundReport('quadratic', exponent, bound_recursion(n, k, a), closed, a=a)
    if p.epsilon is not None and k >= (1 + p.epsilon) * (d + 2):
        exponent, closed = formgen_value(n, k, a)
        return BoundReport('polynomial', exponent, bound_recursion(n, k, a), closed, a=a)
    exponent, closed = formgen_value(n, d + 2, 1)
    return BoundReport('general', exponent, transform_k_bound(n, k, d, 'forget'),
                       2 * (closed + n), a=1)
