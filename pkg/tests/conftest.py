"""Shared contexts used across the suite."""

import pytest

from chercomb import ParamContext, build_gamma_set, empty_multipartition, mp


@pytest.fixture(scope="session")
def ctx_e5():
    return ParamContext(5, [0], ["0"], "1")


@pytest.fixture(scope="session")
def ctx_e4():
    return ParamContext(4, [0], ["0"], "1")


@pytest.fixture(scope="session")
def ctx_admissible_pair():
    """e=4 two-component context with gamma admissible for S={1,3}."""
    ctx = ParamContext(4, [0, 3], ["0", "7"], "0.99")
    gamma = mp([3, 2, 1, 1, 1], [4, 2, 2, 1])
    return ctx, gamma


@pytest.fixture(scope="session")
def gctx_admissible_pair(ctx_admissible_pair):
    ctx, gamma = ctx_admissible_pair
    return build_gamma_set(gamma, [1, 3], {1: 1, 3: 3}, ctx)


@pytest.fixture(scope="session")
def gctx_hook(ctx_e5):
    """gamma = (5,1^4): the three-element family of the isomorphism example."""
    return build_gamma_set(mp([5, 1, 1, 1, 1]), [0], {0: 1}, ctx_e5)


@pytest.fixture(scope="session")
def ctx_level10():
    """Ten components, unit charges, well-separated weighting."""
    return ParamContext(4, [1] * 10, [f"{78 * k}/11" for k in range(10)], "1")


@pytest.fixture(scope="session")
def decoration_pair():
    mu = mp([1], [1], [], [], [1], [], [1], [], [1], [1])
    lam = mp([1], [1], [1], [1], [], [1], [1], [], [], [])
    return mu, lam


@pytest.fixture(scope="session")
def gctx_runner():
    ctx = ParamContext(4, [3, 1, 3, 3, 3, 1, 3], ["-3", "-1", "1", "3", "5", "9", "11"], "0.99")
    return build_gamma_set(empty_multipartition(7), [1, 3], {1: 1, 3: 3}, ctx)


@pytest.fixture(scope="session")
def gctx_flotw_bipartition():
    """e=3 FLOTW bipartition family with ten addable 0-slots."""
    ctx = ParamContext(3, [2, 1], ["0", "1"], "2")
    gamma = mp([7, 5, 3, 1, 1], [5, 5, 4, 2, 2, 1, 1])
    return build_gamma_set(gamma, [0], {0: 6}, ctx)
