"""Build hook for the optional compiled kernels.

The package is pure Python plus one Cython extension holding the hot
loops (bracket state sums, canonical relabeling walks).  The extension
is marked optional: if the toolchain or the .pyx source is missing the
install still succeeds and the package falls back to the pure-Python
kernels.
"""

import os

from setuptools import Extension, setup

_PYX = os.path.join("src", "knotlab", "_kernels_c.pyx")

extensions = []
if os.path.exists(_PYX):
    try:
        from Cython.Build import cythonize

        extensions = cythonize(
            [
                Extension(
                    "knotlab._kernels_c",
                    [_PYX],
                    extra_compile_args=["-O3"],
                    optional=True,
                )
            ],
            language_level=3,
        )
    except ImportError:
        extensions = []

setup(ext_modules=extensions)
