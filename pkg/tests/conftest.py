from __future__ import annotations

import pytest

from wreathfock.catalog import catalog_group


@pytest.fixture(scope="session")
def C2():
    return catalog_group("C2")


@pytest.fixture(scope="session")
def C3():
    return catalog_group("C3")


@pytest.fixture(scope="session")
def C4():
    return catalog_group("C4")


@pytest.fixture(scope="session")
def S3():
    return catalog_group("S3")


@pytest.fixture(scope="session")
def D12():
    return catalog_group("D12")


@pytest.fixture(scope="session")
def Dic3():
    return catalog_group("Dic3")


@pytest.fixture(scope="session")
def trivial():
    return catalog_group("trivial")
