"""Build script.

The package is pure Python; a Cython extension with the hot kernels
(exact floor scans, Weyl search, section counts) is built when Cython and
a C compiler are available.  Failure to build the extension is not an
error: divpos._kernels falls back to the pure-Python implementation at
import time.  Set DIVPOS_NO_EXT=1 to skip the extension entirely.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """build_ext that downgrades compiler failures to a warning."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # no compiler, broken toolchain, ...
            print(f"warning: compiled kernels skipped ({exc}); using pure-Python fallback")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: {ext.name} skipped ({exc}); using pure-Python fallback")


ext_modules = []
if os.environ.get("DIVPOS_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "divpos._kernels._core",
                    ["src/divpos/_kernels/_core.pyx"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
