"""On-disk document formats for matrices and measure spaces.

Both formats are JSON.  A matrix document carries ``dim_rows``,
``dim_cols`` and ``entries`` (rows of [real, imaginary] pairs); a
measure-space document carries ``atoms`` ({mass, label} records),
``partition`` (blocks of atom indices) and the weight functions ``w``
and ``u`` as [real, imaginary] pairs.  Values parse as 64-bit floats;
serialization uses repr so parse -> serialize -> parse is the identity.

All validation failures raise FileFormatError naming the offending field
and index.
"""

import json
from pathlib import Path

import numpy as np

from .condexp import BlockPartition, FiniteMeasureSpace, as_function
from .errors import FileFormatError
from .linalg import as_matrix


def _require(doc: dict, name: str):
    if not isinstance(doc, dict):
        raise FileFormatError(f"document root: expected an object, got {type(doc).__name__}")
    if name not in doc:
        raise FileFormatError(f"{name}: missing required field")
    return doc[name]


def _as_complex(value, where: str) -> complex:
    if (not isinstance(value, (list, tuple)) or len(value) != 2
            or not all(isinstance(x, (int, float)) and not isinstance(x, bool)
                       for x in value)):
        raise FileFormatError(f"{where}: expected a [real, imaginary] pair")
    return complex(float(value[0]), float(value[1]))


def _as_positive_int(value, where: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise FileFormatError(f"{where}: expected a positive integer")
    return value


def matrix_from_document(doc) -> np.ndarray:
    rows = _as_positive_int(_require(doc, "dim_rows"), "dim_rows")
    cols = _as_positive_int(_require(doc, "dim_cols"), "dim_cols")
    entries = _require(doc, "entries")
    if not isinstance(entries, list) or len(entries) != rows:
        raise FileFormatError(f"entries: expected {rows} rows")
    out = np.empty((rows, cols), dtype=complex)
    for i, row in enumerate(entries):
        if not isinstance(row, list) or len(row) != cols:
            raise FileFormatError(f"entries[{i}]: expected {cols} entries")
        for j, value in enumerate(row):
            out[i, j] = _as_complex(value, f"entries[{i}][{j}]")
    try:
        return as_matrix(out)
    except ValueError as exc:
        raise FileFormatError(f"entries: {exc}") from exc


def matrix_to_document(m) -> dict:
    m = as_matrix(m)
    return {
        "dim_rows": int(m.shape[0]),
        "dim_cols": int(m.shape[1]),
        "entries": [
            [[float(v.real), float(v.imag)] for v in row] for row in m
        ],
    }


def space_from_document(doc):
    """Parse (space, partition, w, u) from a measure-space document."""
    atoms = _require(doc, "atoms")
    if not isinstance(atoms, list) or not atoms:
        raise FileFormatError("atoms: expected a nonempty array")
    masses, labels = [], []
    for i, atom in enumerate(atoms):
        if not isinstance(atom, dict):
            raise FileFormatError(f"atoms[{i}]: expected an object")
        mass = atom.get("mass")
        if not isinstance(mass, (int, float)) or isinstance(mass, bool) or mass <= 0:
            raise FileFormatError(f"atoms[{i}].mass: expected a positive number")
        masses.append(float(mass))
        labels.append(str(atom.get("label", f"a{i}")))
    try:
        space = FiniteMeasureSpace(masses, labels)
    except ValueError as exc:
        raise FileFormatError(f"atoms: {exc}") from exc

    blocks = _require(doc, "partition")
    if not isinstance(blocks, list) or not blocks:
        raise FileFormatError("partition: expected a nonempty array of blocks")
    for bi, block in enumerate(blocks):
        if not isinstance(block, list) or not block:
            raise FileFormatError(f"partition[{bi}]: expected a nonempty array")
        for pos, idx in enumerate(block):
            if not isinstance(idx, int) or isinstance(idx, bool):
                raise FileFormatError(f"partition[{bi}][{pos}]: expected an atom index")
    try:
        partition = BlockPartition(blocks, space.atom_count)
    except ValueError as exc:
        raise FileFormatError(f"partition: {exc}") from exc

    functions = []
    for name in ("w", "u"):
        raw = _require(doc, name)
        if not isinstance(raw, list) or len(raw) != space.atom_count:
            raise FileFormatError(
                f"{name}: expected {space.atom_count} [real, imaginary] pairs"
            )
        values = [_as_complex(v, f"{name}[{i}]") for i, v in enumerate(raw)]
        functions.append(as_function(values, space))
    return space, partition, functions[0], functions[1]


def space_to_document(space: FiniteMeasureSpace, partition: BlockPartition,
                      w, u) -> dict:
    w = as_function(w, space)
    u = as_function(u, space)
    return {
        "atoms": [
            {"mass": float(mass), "label": label}
            for mass, label in zip(space.masses, space.labels)
        ],
        "partition": [list(block) for block in partition.blocks],
        "w": [[float(v.real), float(v.imag)] for v in w],
        "u": [[float(v.real), float(v.imag)] for v in u],
    }


def _loads(text: str) -> dict:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"document: invalid JSON ({exc})") from exc


def loads_matrix(text: str) -> np.ndarray:
    return matrix_from_document(_loads(text))


def dumps_matrix(m) -> str:
    return json.dumps(matrix_to_document(m), indent=2, sort_keys=True) + "\n"


def load_matrix(path) -> np.ndarray:
    return loads_matrix(Path(path).read_text())


def save_matrix(m, path) -> None:
    Path(path).write_text(dumps_matrix(m))


def loads_space(text: str):
    return space_from_document(_loads(text))


def dumps_space(space, partition, w, u) -> str:
    return json.dumps(space_to_document(space, partition, w, u),
                      indent=2, sort_keys=True) + "\n"


def load_space(path):
    return loads_space(Path(path).read_text())


def save_space(space, partition, w, u, path) -> None:
    Path(path).write_text(dumps_space(space, partition, w, u))
