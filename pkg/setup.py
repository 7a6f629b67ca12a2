"""Build script: compiles the optional speedups extension.

The package is fully functional without the extension (a pure numpy
fallback is selected at import time), so the build is marked optional
and a failed compile only degrades performance.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext_modules = []
if cythonize is not None:
    ext = Extension(
        "pgonal._speedups",
        ["src/pgonal/_speedups.pyx"],
        optional=True,
    )
    ext_modules = cythonize(
        [ext],
        compiler_directives={"language_level": "3", "boundscheck": False},
        quiet=True,
    )

setup(ext_modules=ext_modules)
