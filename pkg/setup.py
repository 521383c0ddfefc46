"""Build script: compiles the optional search-kernel extension.

The package is fully functional without the extension (a pure-Python
implementation is selected at import time); set BEYONDPLANAR_PURE=1 to
skip compilation explicitly.
"""

import os

from setuptools import Extension, setup

PYX = "src/beyondplanar/_kernels.pyx"

ext_modules = []
if not os.environ.get("BEYONDPLANAR_PURE") and os.path.exists(PYX):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [
                Extension(
                    "beyondplanar._kernels",
                    [PYX],
                    extra_compile_args=["-O3"],
                )
            ],
            language_level=3,
        )

setup(ext_modules=ext_modules)
