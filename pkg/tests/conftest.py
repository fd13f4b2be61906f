import json

import pytest

import golden
from npenta import NearlyPentaMatrix, to_json_dict

pytest.register_assert_rewrite("helpers")


@pytest.fixture
def matrix_a():
    return NearlyPentaMatrix.from_bands(**golden.BANDS_A)


@pytest.fixture
def matrix_b():
    return NearlyPentaMatrix.from_bands(**golden.BANDS_B)


@pytest.fixture
def system_a(matrix_a):
    return matrix_a, golden.Y_A


@pytest.fixture
def system_b(matrix_b):
    return matrix_b, golden.Y_B


def _write_system(path, matrix, y):
    path.write_text(json.dumps(to_json_dict(matrix, y=y)))
    return str(path)


@pytest.fixture
def file_a(tmp_path, matrix_a):
    return _write_system(tmp_path / "system_a.json", matrix_a, golden.Y_A)


@pytest.fixture
def file_b(tmp_path, matrix_b):
    return _write_system(tmp_path / "system_b.json", matrix_b, golden.Y_B)
