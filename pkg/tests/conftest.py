import pytest
from fastapi.testclient import TestClient

from katankit.service import create_app


@pytest.fixture(scope="session")
def client() -> TestClient:
    return TestClient(create_app())
