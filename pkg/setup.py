import os

PATH_ROOT = os.path.dirname(__file__)
from setuptools import setup

import central_susy  # noqa: E402

with open("README.rst", "r", encoding="utf-8") as fh:
    long_description = fh.read()

# Create the distribution
dist = setup(
    name="central_susy",
    version=central_susy.__version__,
    description=central_susy.__docs__,
    long_description=long_description,
    license="MIT License",
    include_package_data=True,
    packages=["central_susy"],
    install_requires=[
        "numpy",
        "scipy",
        "pandas>=1.5",
    ],
    extras_require={
        "plot": ["matplotlib"],
        "test": ["pytest", "coverage", "hypothesis"],
    },
    entry_points={
        "console_scripts": ["central-susy=central_susy.cli:run"],
    },
    classifiers=[
        "Programming Language :: Python :: 3",
        "Operating System :: OS Independent",
    ],
    python_requires=">=3.8",
)
