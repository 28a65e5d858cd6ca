import pytest

from src.logic.dnf import MonotoneDNF, generate_majority_phi


# Small named formulas shared across the suite
@pytest.fixture()
def and2():
    return MonotoneDNF(2, ((1, 2),))


@pytest.fixture()
def or2():
    return MonotoneDNF(2, ((1,), (2,)))


@pytest.fixture()
def phi3():
    return generate_majority_phi(3)


@pytest.fixture()
def phi5():
    return generate_majority_phi(5)


# Writes .dnf text into tmp_path and returns the path as a string
@pytest.fixture()
def dnf_file(tmp_path):
    def _write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return _write
