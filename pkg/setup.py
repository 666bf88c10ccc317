"""Build script for the optional compiled scan kernels.

The package is fully functional without the extension (a pure-Python
fallback is selected at import time); set GF2TRI_NO_EXT=1 to skip the
build explicitly.  Name, packages and layout are repeated here so that
legacy setup.py code paths (old pip/setuptools) resolve the src layout.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("GF2TRI_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "gf2tri._scanc",
                    ["src/gf2tri/_scanc.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(
    name="gf2tri",
    version="0.1.0",
    package_dir={"": "src"},
    packages=["gf2tri"],
    ext_modules=ext_modules,
)
