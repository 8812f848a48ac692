"""Internal helper distributing independent index points over :mod:`joblib` workers.
Results are always returned in the order of the inputs, whatever the number of jobs."""

from collections.abc import Iterable
from typing import Any, Callable, TypeVar

from joblib import Parallel, delayed

T = TypeVar("T")


def pmap(
    func: Callable[..., T], items: Iterable[Any], n_jobs: int = 1, **kwargs: Any
) -> list[T]:
    """Computes ``[func(item, **kwargs) for item in items]``, in parallel if
    ``n_jobs != 1``."""
    items = list(items)
    if n_jobs == 1 or len(items) <= 1:
        return [func(item, **kwargs) for item in items]
    return Parallel(n_jobs=n_jobs)(delayed(func)(item, **kwargs) for item in items)
