"""Build script: compiles the optional fast-grouping extension.

The package is fully functional without the extension (a pure-Python
kernel is selected at import time); building it just speeds up line
enumeration on integer-coordinate inputs.
"""
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("pointline._fastkern", ["src/pointline/_fastkern.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
