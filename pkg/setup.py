"""Build script: compiles the optional fast kernel.

The package works without the extension (a pure-Python twin is selected at
import time), so any compiler/Cython failure downgrades to a warning instead
of aborting the install.
"""

import warnings

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing compiler, etc.
            warnings.warn(f"fast kernel not built ({exc}); using pure-Python fallback")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            warnings.warn(f"fast kernel not built ({exc}); using pure-Python fallback")


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        warnings.warn("Cython unavailable; using pure-Python kernel fallback")
        return []
    return cythonize(
        [
            Extension(
                "bitopdual.kernels._fastcore",
                sources=["src/bitopdual/kernels/_fastcore.pyx"],
            )
        ],
        language_level=3,
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": optional_build_ext})
