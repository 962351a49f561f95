"""Dataset files: one string per line, '#' comments, blank lines ignored."""

from __future__ import annotations

import os
from typing import Iterable, Sequence

from .strings import InputSet, reduce_substring_free


class DatasetError(ValueError):
    """Malformed dataset text or file."""


def parse_dataset(text: str) -> list[str]:
    """Extract the raw strings from dataset text; validates symbols only."""
    strings: list[str] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        for c in line:
            if not c.isprintable() or c.isspace():
                raise DatasetError(
                    f"line {lineno}: symbol {c!r} is not printable non-whitespace"
                )
        strings.append(line)
    if not strings:
        raise DatasetError("dataset contains no strings")
    return strings


def load_dataset(path: str | os.PathLike) -> InputSet:
    """Read a dataset file and reduce it to a substring-free input set."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise DatasetError(f"cannot read {path}: {exc}") from exc
    try:
        return reduce_substring_free(parse_dataset(text))
    except ValueError as exc:
        raise DatasetError(str(exc)) from exc


def format_dataset(strings: Iterable[str], comments: Sequence[str] = ()) -> str:
    """Render strings as dataset text, with optional leading '#' comments."""
    lines = [f"# {c}" for c in comments]
    lines.extend(strings)
    return "\n".join(lines) + "\n"


def save_dataset(path: str | os.PathLike, strings: Iterable[str],
                 comments: Sequence[str] = ()) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_dataset(strings, comments))
