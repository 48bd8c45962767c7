"""Build script for the compiled bitset kernels.

The package works without the extension (a pure-Python backend is selected
at import time), but enumeration on larger lattices is much faster with it.
"""

from Cython.Build import cythonize
from setuptools import Extension, setup

setup(
    ext_modules=cythonize(
        [
            Extension(
                "latfac._kernels._core",
                ["src/latfac/_kernels/_core.pyx"],
            )
        ],
        language_level=3,
    )
)
