import warnings

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/binomdiff/_kernels_cy.pyx"],
        compiler_directives={"language_level": 3},
    )
except ImportError:
    warnings.warn("Cython unavailable; building without the compiled kernel "
                  "(pure-Python fallback will be used)")

setup(ext_modules=ext_modules)
