"""Shared fixtures: a small workspace document used by the workspace and
command line tests."""

import json

import pytest

# Upper triangular algebras with their diagonal-part homomorphisms,
# written out longhand so the tests exercise the JSON reader end to end.
WORKSPACE_DOC = {
    "algebras": {
        "U2": {
            "ambient_dim": 2,
            "basis": [
                [[1, 0], [0, 0]],
                [[0, 1], [0, 0]],
                [[0, 0], [0, 1]],
            ],
        },
        "D2": {
            "basis": [
                [[1, 0], [0, 0]],
                [[0, 0], [0, 1]],
            ],
        },
        "U3": {
            "basis": [
                [[1, 0, 0], [0, 0, 0], [0, 0, 0]],
                [[0, 1, 0], [0, 0, 0], [0, 0, 0]],
                [[0, 0, 1], [0, 0, 0], [0, 0, 0]],
                [[0, 0, 0], [0, 1, 0], [0, 0, 0]],
                [[0, 0, 0], [0, 0, 1], [0, 0, 0]],
                [[0, 0, 0], [0, 0, 0], [0, 0, 1]],
            ],
        },
        "D3": {
            "basis": [
                [[1, 0, 0], [0, 0, 0], [0, 0, 0]],
                [[0, 0, 0], [0, 1, 0], [0, 0, 0]],
                [[0, 0, 0], [0, 0, 0], [0, 0, 1]],
            ],
        },
    },
    "homomorphisms": {
        "T": {
            "source": "U2",
            "target": "D2",
            "matrix": [[1, 0, 0], [0, 0, 1]],
        },
        "T3": {
            "source": "U3",
            "target": "D3",
            "matrix": [
                [1, 0, 0, 0, 0, 0],
                [0, 0, 0, 1, 0, 0],
                [0, 0, 0, 0, 0, 1],
            ],
        },
    },
    "elements": {
        "e12": {"algebra": "U2", "coords": [0, 1, 0]},
        "one": {"algebra": "U2", "coords": [1, 0, 1]},
        "mix": {"algebra": "U2", "coords": ["1/2", "3-2*i", 0]},
        "nilp3": {"algebra": "U3", "coords": [0, 1, 0, 0, 1, 0]},
    },
    "diagonal_elements": {
        "harmonic": "tail 1/n -> 0",
        "grid": "family (1/m + 1/n)",
    },
}

WORKSPACE_TEXT = json.dumps(WORKSPACE_DOC, indent=2)


@pytest.fixture(scope="session")
def workspace_text() -> str:
    return WORKSPACE_TEXT


@pytest.fixture()
def workspace_file(tmp_path, workspace_text):
    path = tmp_path / "ws.json"
    path.write_text(workspace_text)
    return path
