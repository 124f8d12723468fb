"""Build script: compiles the optional speedup extension.

The package works without the extension (a pure-Python backend is selected
at import time), so compilation failures downgrade to a source-only install
instead of breaking it.  Set RAINBOWCON_NO_EXT=1 to skip compilation.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("RAINBOWCON_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "rainbowcon.kernels._speedups",
                    ["src/rainbowcon/kernels/_speedups.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
