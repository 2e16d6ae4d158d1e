"""Build script for the optional compiled kernel.

The package works without the extension (a pure-Python kernel is selected
at import time), so the build degrades gracefully when Cython or a C
compiler is unavailable.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/jumat/_core_cy.pyx"],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
