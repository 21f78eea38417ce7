"""
Deterministic CSV output. Floats are written with 17 significant digits
so every double survives a round trip, missing values become empty cells,
and files are replaced atomically.
"""

import logging
import os
import tempfile
from pathlib import Path
from typing import Union

import pandas as pd

logger = logging.getLogger(__name__)

FLOAT_FORMAT = "%.17g"


def to_csv_text(df: pd.DataFrame) -> str:
    """``df`` (without its index) as CSV text."""
    return df.to_csv(index=False, float_format=FLOAT_FORMAT, na_rep="", lineterminator="\n")


def write_csv(df: pd.DataFrame, path: Union[str, Path]) -> Path:
    """
    Write ``df`` to ``path`` through a temporary file in the same
    directory followed by a rename.

    Args:
      df (pd.DataFrame): table to write
      path (Union[str, Path]): destination

    Output:
      the destination path
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    text = to_csv_text(df)
    fd, tmp = tempfile.mkstemp(prefix=f".{path.name}.", suffix=".tmp", dir=path.parent)
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.remove(tmp)
        raise
    logger.debug("wrote %d rows to %s", len(df), path)
    return path
