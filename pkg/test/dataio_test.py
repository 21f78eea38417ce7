import os
import tempfile
from pathlib import Path
from unittest import TestCase

import numpy as np
import pandas as pd

from central_susy import dataio


class CsvTest(TestCase):
    def test_text(self):
        df = pd.DataFrame({"r": [0.1, 2.0], "w": [np.nan, 1.0 / 3.0], "pole": [True, False]})
        text = dataio.to_csv_text(df)
        lines = text.split("\n")
        assert lines[0] == "r,w,pole"
        assert lines[1] == "0.10000000000000001,,True"
        assert float(lines[2].split(",")[1]) == 1.0 / 3.0
        assert text.endswith("\n")

    def test_write(self):
        df = pd.DataFrame({"r": np.linspace(0.1, 1.0, 10)})
        with tempfile.TemporaryDirectory() as tmp:
            path = dataio.write_csv(df, Path(tmp) / "sub" / "out.csv")
            assert path.exists()
            assert os.listdir(path.parent) == ["out.csv"]
            back = pd.read_csv(path, float_precision="round_trip")
            assert (back["r"].to_numpy() == df["r"].to_numpy()).all()
            # rewriting replaces the file in place
            dataio.write_csv(df.iloc[:3], path)
            assert len(pd.read_csv(path)) == 3
