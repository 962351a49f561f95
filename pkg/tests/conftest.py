import pytest

from superstring import InputSet, build_graph


@pytest.fixture(scope="session")
def quad_inputs() -> InputSet:
    """Four strings over {a, c, e} whose optimum beats both greedy algorithms
    by one symbol; used as the running example throughout the tests."""
    return InputSet(("aaa", "cae", "aec", "eee"))


@pytest.fixture(scope="session")
def quad_graph(quad_inputs):
    return build_graph(quad_inputs)


@pytest.fixture(scope="session")
def trio_inputs() -> InputSet:
    """Three length-2 strings whose identity-order solution collapses from
    weight 6 to the optimal 4."""
    return InputSet(("ae", "aa", "ca"))


@pytest.fixture(scope="session")
def trio_graph(trio_inputs):
    return build_graph(trio_inputs)


@pytest.fixture
def write_dataset(tmp_path):
    def _write(lines, name="data.txt"):
        path = tmp_path / name
        path.write_text("\n".join(lines) + "\n")
        return str(path)

    return _write
