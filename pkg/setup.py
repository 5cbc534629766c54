"""Builds the compiled shortest-path kernel.

The extension is optional: if Cython or a C compiler is unavailable the
install still succeeds and the package falls back to the pure-Python kernel
at import time.
"""

from setuptools import Extension, setup

try:
    import numpy as np
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "tempoc._kernel._fast",
                ["src/tempoc/_kernel/_fast.pyx"],
                include_dirs=[np.get_include()],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
