"""Build script for the optional compiled Pieri kernel.

The package is pure Python plus a single Cython extension for the hot
enumeration loop.  Set ISOSCHUB_NO_EXT=1 to skip the extension; the
import-time dispatch in ``isoschub._pierikernel`` falls back to the
pure-Python kernel with identical behaviour.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("ISOSCHUB_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [
                Extension(
                    "isoschub._pierikernel._speedups",
                    ["src/isoschub/_pierikernel/_speedups.pyx"],
                )
            ],
            compiler_directives={
                "language_level": "3",
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
            },
        )

setup(ext_modules=ext_modules)
