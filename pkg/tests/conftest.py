import pytest

from hilbhasse.field import FieldCtx
from hilbhasse.zips import check_equivalence, enumerate_zips, inert_perm, split_perm


@pytest.fixture(scope="session")
def F2():
    return FieldCtx(2)


@pytest.fixture(scope="session")
def F3():
    return FieldCtx(3)


@pytest.fixture(scope="session")
def F4():
    return FieldCtx(2, 2)


@pytest.fixture(scope="session")
def zip_reports():
    """Memoized full equivalence sweeps, keyed by (p, n, perm name).

    Returns a dict mapping (omega lines, conj lines) to the ZipReport, so
    several criteria can share one exhaustive enumeration.
    """
    cache = {}

    def sweep(p: int, n: int, perm_name: str):
        key = (p, n, perm_name)
        if key not in cache:
            ctx = FieldCtx(p)
            perm = split_perm(n) if perm_name == "split" else inert_perm(n)
            cache[key] = {(z.omega, z.conj): check_equivalence(z)
                          for z in enumerate_zips(ctx, n, perm)}
        return cache[key]

    return sweep
