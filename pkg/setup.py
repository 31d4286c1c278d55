"""Build script.

The package is pure Python except for one optional compiled extension,
``cobord._kernel_cy``, holding the hot sparse-multiplication kernel.  If
Cython (or a C compiler) is unavailable the build silently falls back to
the pure-Python kernel ``cobord._kernel_py``; the two implementations are
interchangeable and the faster one is picked at import time.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("COBORD_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("cobord._kernel_cy", ["src/cobord/_kernel_cy.pyx"])],
            language_level="3",
        )
    except Exception:
        ext_modules = []

setup(ext_modules=ext_modules)
